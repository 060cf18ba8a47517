#include "rmac/smith.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "rmac/errors.hpp"

namespace rmac {
namespace {

class DenseReducer {
 public:
  DenseReducer(IntMatrix d, bool transforms, bool inverses) : d_(std::move(d)) {
    if (transforms) {
      u_ = IntMatrix::identity(d_.rows());
      v_ = IntMatrix::identity(d_.cols());
    }
    if (inverses) {
      u_inv_ = IntMatrix::identity(d_.rows());
      v_inv_ = IntMatrix::identity(d_.cols());
    }
  }

  std::size_t run() {
    const std::size_t rows = d_.rows(), cols = d_.cols();
    std::size_t t = 0;
    while (t < rows && t < cols) {
      if (!pivot_into(t)) break;
      for (;;) {
        if (!clear_column(t)) continue;
        if (!clear_row(t)) continue;
        if (fix_divisibility(t)) continue;
        break;
      }
      if (d_(t, t).sign() < 0) negate_row(t);
      ++t;
    }
    return t;
  }

  IntMatrix& d() { return d_; }
  std::optional<IntMatrix>& u() { return u_; }
  std::optional<IntMatrix>& v() { return v_; }
  std::optional<IntMatrix>& u_inv() { return u_inv_; }
  std::optional<IntMatrix>& v_inv() { return v_inv_; }

 private:
  bool pivot_into(std::size_t t) {
    std::size_t best_r = 0, best_c = 0;
    bool found = false;
    Integer best;
    for (std::size_t r = t; r < d_.rows() && !(found && best.is_unit()); ++r) {
      for (std::size_t c = t; c < d_.cols(); ++c) {
        const Integer& x = d_(r, c);
        if (x.is_zero()) continue;
        if (!found || abs(x) < best) {
          best = abs(x);
          best_r = r;
          best_c = c;
          found = true;
          if (best.is_unit()) break;
        }
      }
    }
    if (!found) return false;
    swap_rows(t, best_r);
    swap_cols(t, best_c);
    return true;
  }

  // Returns false when a smaller remainder was moved into the pivot position.
  bool clear_column(std::size_t t) {
    const Integer p = d_(t, t);
    bool remainder = false;
    for (std::size_t i = t + 1; i < d_.rows(); ++i) {
      if (d_(i, t).is_zero()) continue;
      Integer q = d_(i, t) / p;
      if (!q.is_zero()) row_add(i, t, -q, t);
      if (!d_(i, t).is_zero()) remainder = true;
    }
    if (!remainder) return true;
    std::size_t best = t;
    for (std::size_t i = t + 1; i < d_.rows(); ++i)
      if (!d_(i, t).is_zero() && (best == t || abs(d_(i, t)) < abs(d_(best, t)))) best = i;
    swap_rows(t, best);
    return false;
  }

  bool clear_row(std::size_t t) {
    const Integer p = d_(t, t);
    bool remainder = false;
    for (std::size_t j = t + 1; j < d_.cols(); ++j) {
      if (d_(t, j).is_zero()) continue;
      Integer q = d_(t, j) / p;
      if (!q.is_zero()) col_add(j, t, -q, t);
      if (!d_(t, j).is_zero()) remainder = true;
    }
    if (!remainder) return true;
    std::size_t best = t;
    for (std::size_t j = t + 1; j < d_.cols(); ++j)
      if (!d_(t, j).is_zero() && (best == t || abs(d_(t, j)) < abs(d_(t, best)))) best = j;
    swap_cols(t, best);
    return false;
  }

  bool fix_divisibility(std::size_t t) {
    const Integer p = d_(t, t);
    if (p.is_unit()) return false;
    for (std::size_t i = t + 1; i < d_.rows(); ++i)
      for (std::size_t j = t + 1; j < d_.cols(); ++j)
        if (!d_(i, j).is_zero() && !divides(p, d_(i, j))) {
          row_add(t, i, Integer(1), t);
          return true;
        }
    return false;
  }

  // row[target] += q * row[src]; D columns before `from` are known zero in src.
  void row_add(std::size_t target, std::size_t src, const Integer& q, std::size_t from) {
    for (std::size_t c = from; c < d_.cols(); ++c)
      if (!d_(src, c).is_zero()) d_(target, c).add_mul(q, d_(src, c));
    if (u_) u_->add_row_multiple(target, src, q);
    if (u_inv_) u_inv_->add_col_multiple(src, target, -q);
  }

  void col_add(std::size_t target, std::size_t src, const Integer& q, std::size_t from) {
    for (std::size_t r = from; r < d_.rows(); ++r)
      if (!d_(r, src).is_zero()) d_(r, target).add_mul(q, d_(r, src));
    if (v_) v_->add_col_multiple(target, src, q);
    if (v_inv_) v_inv_->add_row_multiple(src, target, -q);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    d_.swap_rows(a, b);
    if (u_) u_->swap_rows(a, b);
    if (u_inv_) u_inv_->swap_cols(a, b);
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    d_.swap_cols(a, b);
    if (v_) v_->swap_cols(a, b);
    if (v_inv_) v_inv_->swap_rows(a, b);
  }

  void negate_row(std::size_t r) {
    d_.negate_row(r);
    if (u_) u_->negate_row(r);
    if (u_inv_) u_inv_->negate_col(r);
  }

  IntMatrix d_;
  std::optional<IntMatrix> u_, v_, u_inv_, v_inv_;
};

std::vector<Integer> non_unit_diagonal(const IntMatrix& d, std::size_t rank) {
  std::vector<Integer> f;
  for (std::size_t i = 0; i < rank; ++i)
    if (!d(i, i).is_unit()) f.push_back(d(i, i));
  return f;
}

void check_diagonal_chain(const IntMatrix& d, std::size_t rank) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (i == j && i < rank) {
        require(d(i, i).sign() > 0, "SNF diagonal entry not positive");
        if (i > 0) require(divides(d(i - 1, i - 1), d(i, i)), "SNF divisibility chain broken");
      } else {
        require(d(i, j).is_zero(), "SNF result not diagonal");
      }
    }
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a, SmithOptions options) {
  DenseReducer reducer(a, true, options.inverses);
  std::size_t rank = reducer.run();
  SNFResult result;
  result.D = std::move(reducer.d());
  result.U = std::move(*reducer.u());
  result.V = std::move(*reducer.v());
  if (options.inverses) {
    result.U_inv = std::move(*reducer.u_inv());
    result.V_inv = std::move(*reducer.v_inv());
  }
  result.rank = rank;
  result.invariant_factors = non_unit_diagonal(result.D, rank);
  if (options.verify) {
    check_diagonal_chain(result.D, rank);
    require(result.U * a * result.V == result.D, "SNF transform check U*A*V == D failed");
    if (options.inverses) {
      require((result.U * *result.U_inv).is_identity(), "SNF inverse check for U failed");
      require((result.V * *result.V_inv).is_identity(), "SNF inverse check for V failed");
    }
  }
  return result;
}

SmithInvariants smith_invariants(const IntMatrix& a) {
  DenseReducer reducer(a, false, false);
  std::size_t rank = reducer.run();
  check_diagonal_chain(reducer.d(), rank);
  return {rank, non_unit_diagonal(reducer.d(), rank)};
}

namespace {

struct RowEntry {
  std::size_t col;
  Integer value;
};
using Row = std::vector<RowEntry>;

// target -= q * src, both sorted by column.
void subtract_row(Row& target, const Row& src, const Integer& q, std::vector<long>& col_count,
                  std::vector<std::vector<std::size_t>>& col_rows, std::size_t target_index) {
  Row out;
  out.reserve(target.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < src.size()) {
    if (j == src.size() || (i < target.size() && target[i].col < src[j].col)) {
      out.push_back(std::move(target[i++]));
    } else if (i == target.size() || src[j].col < target[i].col) {
      Integer v = -q * src[j].value;
      col_count[src[j].col]++;
      col_rows[src[j].col].push_back(target_index);
      out.push_back({src[j].col, std::move(v)});
      ++j;
    } else {
      Integer v = std::move(target[i].value);
      v.sub_mul(q, src[j].value);
      if (v.is_zero()) {
        col_count[src[j].col]--;
      } else {
        out.push_back({src[j].col, std::move(v)});
      }
      ++i;
      ++j;
    }
  }
  target = std::move(out);
}

const Integer* find_in_row(const Row& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const RowEntry& e, std::size_t c) { return e.col < c; });
  return (it != row.end() && it->col == col) ? &it->value : nullptr;
}

}  // namespace

SmithInvariants smith_invariants(const SparseMatrix& a) {
  const std::size_t nrows = a.rows(), ncols = a.cols();
  std::vector<Row> rows(nrows);
  std::vector<long> col_count(ncols, 0);
  std::vector<std::vector<std::size_t>> col_rows(ncols);
  for (std::size_t c = 0; c < ncols; ++c)
    for (const auto& e : a.column(c)) {
      rows[e.row].push_back({c, e.value});
      col_count[c]++;
      col_rows[c].push_back(e.row);
    }
  std::vector<char> row_alive(nrows, 1);
  std::size_t rank = 0;

  for (;;) {
    std::size_t best_r = nrows, best_c = 0;
    long best_cost = std::numeric_limits<long>::max();
    for (std::size_t r = 0; r < nrows && best_cost > 0; ++r) {
      if (!row_alive[r]) continue;
      long rn = static_cast<long>(rows[r].size()) - 1;
      for (const auto& e : rows[r]) {
        if (!e.value.is_unit()) continue;
        long cost = rn * (col_count[e.col] - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_r = r;
          best_c = e.col;
          if (cost == 0) break;
        }
      }
    }
    if (best_r == nrows) break;

    const Row pivot_row = rows[best_r];
    const Integer p = *find_in_row(pivot_row, best_c);
    std::vector<std::size_t> targets = col_rows[best_c];
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (std::size_t r : targets) {
      if (r == best_r || !row_alive[r]) continue;
      const Integer* x = find_in_row(rows[r], best_c);
      if (!x) continue;
      Integer q = *x * p;  // p is a unit, so x / p == x * p
      subtract_row(rows[r], pivot_row, q, col_count, col_rows, r);
    }
    row_alive[best_r] = 0;
    for (const auto& e : pivot_row) col_count[e.col]--;
    col_rows[best_c].clear();
    rows[best_r].clear();
    ++rank;
  }

  std::vector<std::size_t> live_rows;
  std::map<std::size_t, std::size_t> live_cols;
  for (std::size_t r = 0; r < nrows; ++r) {
    if (!row_alive[r] || rows[r].empty()) continue;
    live_rows.push_back(r);
    for (const auto& e : rows[r]) live_cols.emplace(e.col, 0);
  }
  std::size_t k = 0;
  for (auto& [c, idx] : live_cols) idx = k++;
  IntMatrix rest(live_rows.size(), live_cols.size());
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const auto& e : rows[live_rows[i]]) rest(i, live_cols[e.col]) = e.value;
  SmithInvariants tail = smith_invariants(rest);
  return {rank + tail.rank, tail.invariant_factors};
}

}  // namespace rmac

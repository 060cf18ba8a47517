#include "rmac/int_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "rmac/errors.hpp"

namespace rmac {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw InvalidArgument("ragged matrix rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = static_cast<std::int64_t>(rows[r][c]);
  }
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v.is_zero(); });
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != Integer(r == c ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::power(unsigned k) const {
  if (!is_square()) throw InvalidArgument("power of a non-square matrix");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

Integer IntMatrix::trace() const {
  Integer t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InvalidArgument("block out of range");
  IntMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw InvalidArgument("block out of range");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

IntMatrix IntMatrix::column(std::size_t c) const { return block(0, c, rows_, 1); }

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t src, const Integer& q) {
  if (q.is_zero()) return;
  Integer* t = &data_[target * cols_];
  const Integer* s = &data_[src * cols_];
  for (std::size_t c = 0; c < cols_; ++c)
    if (!s[c].is_zero()) t[c].add_mul(q, s[c]);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t src, const Integer& q) {
  if (q.is_zero()) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Integer& s = (*this)(r, src);
    if (!s.is_zero()) (*this)(r, target).add_mul(q, s);
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c).negate();
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c).negate();
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Integer& y = b(k, j);
        if (!y.is_zero()) c(i, j).add_mul(x, y);
      }
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix sum dimension mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix difference dimension mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) c.negate_row(i);
  return c;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t nr = 0, nc = 0;
  for (const auto& b : blocks) {
    nr += b.rows();
    nc += b.cols();
  }
  IntMatrix m(nr, nc);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) s.columns_[c].push_back({r, m(r, c)});
  return s;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& col : columns_) n += col.size();
  return n;
}

void SparseMatrix::add(std::size_t row, std::size_t col, const Integer& value) {
  if (row >= rows_ || col >= cols_) throw InvalidArgument("sparse entry out of range");
  if (value.is_zero()) return;
  auto& entries = columns_[col];
  auto it = std::lower_bound(entries.begin(), entries.end(), row,
                             [](const SparseEntry& e, std::size_t r) { return e.row < r; });
  if (it != entries.end() && it->row == row) {
    it->value += value;
    if (it->value.is_zero()) entries.erase(it);
  } else {
    entries.insert(it, {row, value});
  }
}

IntMatrix SparseMatrix::to_dense() const {
  IntMatrix m(rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& e : columns_[c]) m(e.row, c) = e.value;
  return m;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product dimension mismatch");
  SparseMatrix c(a.rows(), b.cols());
  std::vector<Integer> acc(a.rows());
  std::vector<std::size_t> touched;
  std::vector<char> mark(a.rows(), 0);
  for (std::size_t j = 0; j < b.cols(); ++j) {
    touched.clear();
    for (const auto& eb : b.column(j)) {
      for (const auto& ea : a.column(eb.row)) {
        if (!mark[ea.row]) {
          mark[ea.row] = 1;
          touched.push_back(ea.row);
        }
        acc[ea.row].add_mul(ea.value, eb.value);
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::size_t r : touched) {
      c.add(r, j, acc[r]);
      acc[r] = 0;
      mark[r] = 0;
    }
  }
  return c;
}

IntMatrix operator*(const IntMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (const auto& e : b.column(j))
      for (std::size_t i = 0; i < a.rows(); ++i)
        if (!a(i, e.row).is_zero()) c(i, j).add_mul(a(i, e.row), e.value);
  return c;
}

}  // namespace rmac

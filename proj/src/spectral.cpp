#include "rmac/spectral.hpp"

#include <algorithm>
#include <sstream>

#include "rmac/cell_complex.hpp"
#include "rmac/chain.hpp"
#include "rmac/errors.hpp"
#include "rmac/modrep.hpp"
#include "rmac/polygon.hpp"
#include "rmac/words.hpp"

namespace rmac {
namespace {

void check_page_n(int n) {
  if (n < 3 || n > 16) throw InvalidArgument("E^2 page supports 3 <= n <= 16, got " + std::to_string(n));
}

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t width) { return s + std::string(width - display_width(s), ' '); }

// Cyclic groups as "Z_6", everything else in primary form, as in the figures.
std::string figure_string(const FGAbelianGroup& g) {
  if (g.rank() == 0 && g.invariant_factors().size() == 1) return "Z_" + g.invariant_factors().front().to_string();
  return g.to_primary_string();
}

std::string render_grid(int max_p, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(static_cast<std::size_t>(max_p + 1), 0);
  for (int p = 0; p <= max_p; ++p) {
    width[static_cast<std::size_t>(p)] = display_width(std::to_string(p));
    for (const auto& row : rows)
      width[static_cast<std::size_t>(p)] = std::max(width[static_cast<std::size_t>(p)], display_width(row[static_cast<std::size_t>(p)]));
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << (rows.size() - 1 - r) << " |";
    for (int p = 0; p <= max_p; ++p) os << ' ' << pad(rows[r][static_cast<std::size_t>(p)], width[static_cast<std::size_t>(p)]);
    os << '\n';
  }
  os << "  +";
  for (int p = 0; p <= max_p; ++p) os << std::string(width[static_cast<std::size_t>(p)] + 1, '-');
  os << "\n   ";
  for (int p = 0; p <= max_p; ++p) os << ' ' << pad(std::to_string(p), width[static_cast<std::size_t>(p)]);
  os << '\n';
  std::string out = os.str();
  // strip trailing spaces on each line
  std::string clean;
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    clean += line + '\n';
  }
  return clean;
}

// Row q = 1 of the page: direct sum over classes, grouped by (d, iota).
CyclicHomology row_one(int n) {
  std::map<std::pair<int, int>, std::size_t> classes;
  for (const WordClass& w : representatives(n)) classes[{w.d, w.iota}]++;
  CyclicHomology sum;
  for (const auto& [key, count] : classes) {
    CyclicHomology h = summand_homology(n, key.first, key.second);
    sum += {multiple(h.h0, count), multiple(h.h_odd, count), multiple(h.h_even, count)};
  }
  return sum;
}

}  // namespace

std::string CyclicHomology::to_sage_string() const {
  return "{'zero': " + h0.to_sage_string() + ", 'odd': " + h_odd.to_sage_string() +
         ", 'even': " + h_even.to_sage_string() + "}";
}

CyclicHomology cyclic_group_homology(int m, const IntMatrix& M) {
  if (m < 1) throw InvalidArgument("group order must be positive");
  if (!M.is_square()) throw InvalidArgument("action matrix must be square");
  if (!M.power(static_cast<unsigned>(m)).is_identity()) {
    throw InvalidArgument("action matrix does not satisfy M^" + std::to_string(m) + " = I");
  }
  const std::size_t k = M.rows();
  const IntMatrix id = IntMatrix::identity(k);
  const IntMatrix diff = id - M;
  IntMatrix norm(k, k);
  IntMatrix power = id;
  for (int i = 0; i < m; ++i) {
    norm = norm + power;
    power = power * M;
  }
  const IntMatrix zero_map(0, k);
  // degrees 0..4 of the periodic complex, with d_{2i+1} = I - M and d_{2i} = N
  const FGAbelianGroup h0 = chain_homology(zero_map, diff);
  const FGAbelianGroup h1 = chain_homology(diff, norm);
  const FGAbelianGroup h2 = chain_homology(norm, diff);
  const FGAbelianGroup h3 = chain_homology(diff, norm);
  const FGAbelianGroup h4 = chain_homology(norm, diff);
  require(h1 == h3 && h2 == h4, "periodic complex is not periodic");
  return {h0, h1, h2};
}

CyclicHomology summand_closed_form(int n, int d, int iota) {
  if (d <= 1 || n % d != 0) throw InvalidArgument("summand needs a divisor d > 1 of n");
  if (d == n) {
    if (iota < 2) throw InvalidArgument("regular summands need gap number >= 2");
    return {FGAbelianGroup::free(static_cast<std::size_t>(iota - 1)), {}, {}};
  }
  if (iota < 1) throw InvalidArgument("gap number must be positive");
  const Integer k(n / d);
  return {FGAbelianGroup(static_cast<std::size_t>(iota - 1), {k}), {}, FGAbelianGroup::cyclic(k)};
}

CyclicHomology summand_homology(int n, int d, int iota) {
  const CyclicHomology closed = summand_closed_form(n, d, iota);
  const ActionMatrix a = d == n ? regular_module(n, iota) : action_matrix(n, d, iota);
  const CyclicHomology direct = cyclic_group_homology(a.group_order, a.M);
  if (direct != closed) {
    throw VerificationFailure("summand (n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                              ", iota=" + std::to_string(iota) + "): closed form " + closed.to_sage_string() +
                              " but direct computation gives " + direct.to_sage_string());
  }
  return direct;
}

E2Page::E2Page(int n, int max_p, std::map<std::pair<int, int>, FGAbelianGroup> entries)
    : n_(n), max_p_(max_p), entries_(std::move(entries)) {}

const FGAbelianGroup& E2Page::at(int p, int q) const {
  auto it = entries_.find({p, q});
  if (it == entries_.end()) {
    throw InvalidArgument("E^2 entry (" + std::to_string(p) + "," + std::to_string(q) + ") out of range");
  }
  return it->second;
}

std::string E2Page::render() const {
  std::vector<std::vector<std::string>> rows;
  for (int q = 2; q >= 0; --q) {
    std::vector<std::string> row;
    for (int p = 0; p <= max_p_; ++p) row.push_back(figure_string(at(p, q)));
    rows.push_back(std::move(row));
  }
  return render_grid(max_p_, rows);
}

E2Page e2_page(int n, int max_p) {
  check_page_n(n);
  if (max_p < 2) throw InvalidArgument("max_p must be at least 2");
  const CyclicHomology row = row_one(n);
  std::map<std::pair<int, int>, FGAbelianGroup> entries;
  const FGAbelianGroup zn = FGAbelianGroup::cyclic(Integer(n));
  for (int p = 0; p <= max_p; ++p) {
    const FGAbelianGroup outer = p == 0 ? FGAbelianGroup::free(1) : p % 2 ? zn : FGAbelianGroup();
    entries[{p, 0}] = outer;
    entries[{p, 2}] = outer;
    entries[{p, 1}] = p == 0 ? row.h0 : p % 2 ? row.h_odd : row.h_even;
  }
  if (!entries[{1, 1}].is_trivial()) throw VerificationFailure("E^2_{1,1} = " + entries[{1, 1}].to_string() + " is not zero");
  return E2Page(n, max_p, std::move(entries));
}

std::string FieldE2Page::render() const {
  std::vector<std::vector<std::string>> rows;
  for (int q = 2; q >= 0; --q) {
    std::vector<std::string> row;
    for (int p = 0; p <= max_p; ++p) {
      const long long dim = dimensions.at({p, q});
      row.push_back(dim == 0 ? "0" : dim == 1 ? "k" : "k^" + std::to_string(dim));
    }
    rows.push_back(std::move(row));
  }
  return render_grid(max_p, rows);
}

FieldE2Page e2_page_field(int n, int max_p) {
  check_page_n(n);
  if (max_p < 2) throw InvalidArgument("max_p must be at least 2");
  FieldE2Page page{n, max_p, {}};
  const Integer r = poincare_series(n).c1;
  for (int p = 0; p <= max_p; ++p) {
    page.dimensions[{p, 0}] = p == 0 ? 1 : 0;
    page.dimensions[{p, 1}] = p == 0 ? r.to_int64() : 0;
    page.dimensions[{p, 2}] = p == 0 ? 1 : 0;
  }
  return page;
}

std::string PoincareSeries::to_string() const {
  std::ostringstream os;
  os << c0 << " + " << c1 << "t + " << (c2 == Integer(1) ? "" : c2.to_string()) << "t^2";
  return os.str();
}

PoincareSeries poincare_series(int n) {
  check_page_n(n);
  return {Integer(1), Integer(static_cast<std::int64_t>(row_one(n).h0.rank())), Integer(1)};
}

IdentityAudit identity_audit(int n) {
  check_page_n(n);
  IdentityAudit a;
  a.n = n;
  for (unsigned d : divisors(static_cast<unsigned>(n))) {
    if (d == 1) continue;
    for (unsigned k = 1; 2 * k <= d; ++k) a.from_words += Integer(static_cast<std::int64_t>(k) - 1) * count_L(d, k);
  }
  a.from_necklaces = Integer(2) + Integer::pow(2, static_cast<unsigned>(n - 2)) - necklace_count(static_cast<unsigned>(n));
  a.from_quotient_genus = Integer(2) * quotient_genus(n);
  a.from_page = poincare_series(n).c1;
  bool ok = a.from_words == a.from_necklaces && a.from_words == a.from_quotient_genus && a.from_words == a.from_page;
  if (n <= 8) {
    const CellComplex c = build_rmac(polygon_boundary(n));
    const auto h = homology(quotient_complex(c, rotation_action(c, n)));
    a.from_quotient_complex = Integer(static_cast<std::int64_t>(h.at(1).rank()));
    ok = ok && *a.from_quotient_complex == a.from_words;
  }
  if (!ok) {
    throw VerificationFailure("identity audit n=" + std::to_string(n) + ": words " + a.from_words.to_string() +
                              ", necklaces " + a.from_necklaces.to_string() + ", 2*quotient genus " +
                              a.from_quotient_genus.to_string() + ", page " + a.from_page.to_string() +
                              (a.from_quotient_complex ? ", quotient complex " + a.from_quotient_complex->to_string() : ""));
  }
  return a;
}

std::string e2_class_listing(int n) {
  std::ostringstream os;
  for (const ClassGroup& g : group_by_class(representatives(n))) {
    os << "count:  " << g.members.size() << "\n";
    os << " " << summand_homology(n, g.d, g.iota).to_sage_string() << "\n";
  }
  return os.str();
}

}  // namespace rmac

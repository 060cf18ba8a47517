#include "rmac/modrep.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "rmac/errors.hpp"

namespace rmac {
namespace {

std::string face_string(const Face& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + ")";
}

}  // namespace

IntMatrix cycle_matrix(int k) {
  if (k < 1) throw InvalidArgument("cycle matrix needs k >= 1");
  const auto size = static_cast<std::size_t>(k);
  IntMatrix a(size, size);
  for (std::size_t i = 0; i < size; ++i) a((i + 1) % size, i) = 1;
  return a;
}

ActionMatrix action_matrix(int n, int d, int iota) {
  if (d <= 1 || d >= n || n % d != 0) {
    throw InvalidArgument("action matrix needs a divisor 1 < d < n, got d = " + std::to_string(d) +
                          ", n = " + std::to_string(n));
  }
  if (iota < 1) throw InvalidArgument("gap number must be positive");
  const int k = n / d;
  std::vector<IntMatrix> blocks(static_cast<std::size_t>(iota), cycle_matrix(k));
  IntMatrix full = block_diagonal(blocks);
  const std::size_t dim = full.rows() - 1;
  IntMatrix m = full.block(0, 0, dim, dim);
  for (std::size_t r = 0; r < dim; ++r) m(r, dim - 1) = -1;
  require(m.power(static_cast<unsigned>(k)).is_identity(), "action matrix does not have the group order");
  return {std::move(m), k, static_cast<int>(dim)};
}

ActionMatrix regular_module(int n, int iota) {
  if (n < 1) throw InvalidArgument("regular module needs n >= 1");
  if (iota < 2) throw InvalidArgument("regular summands need gap number >= 2, got " + std::to_string(iota));
  std::vector<IntMatrix> blocks(static_cast<std::size_t>(iota - 1), cycle_matrix(n));
  IntMatrix m = block_diagonal(blocks);
  const int dim = static_cast<int>(m.rows());
  return {std::move(m), n, dim};
}

ActionMatrix Summand::action() const {
  if (kind == SummandKind::regular) return regular_module(word_class.n, word_class.iota);
  return action_matrix(word_class.n, word_class.d, word_class.iota);
}

H1Decomposition decompose_h1(int n) {
  if (n < 3 || n > 24) throw InvalidArgument("decomposition supports 3 <= n <= 24");
  H1Decomposition dec;
  dec.n = n;
  for (WordClass& w : representatives(n)) {
    const bool regular = w.d == n;
    Summand s{std::move(w), regular ? SummandKind::regular : SummandKind::induced, 1};
    if (regular) s.copies = s.word_class.iota - 1;
    dec.total_rank += s.rank();
    dec.summands.push_back(std::move(s));
  }
  const long long genus = 1 + (n - 4) * (1LL << (n - 3));
  require(dec.total_rank == 2 * genus, "summand ranks do not add up to the first Betti number");
  return dec;
}

IntMatrix induced_block(const IntMatrix& m, int d) {
  if (!m.is_square()) throw InvalidArgument("induced block needs a square matrix");
  if (d < 1) throw InvalidArgument("induced block needs d >= 1");
  const std::size_t k = m.rows();
  const auto copies = static_cast<std::size_t>(d);
  IntMatrix b(k * copies, k * copies);
  for (std::size_t j = 0; j + 1 < copies; ++j) b.set_block((j + 1) * k, j * k, IntMatrix::identity(k));
  b.set_block(0, (copies - 1) * k, m);
  return b;
}

IntPolynomial predicted_charpoly(const H1Decomposition& dec, long long degree_cap) {
  if (dec.total_rank > degree_cap) {
    throw ResourceLimit("predicted characteristic polynomial of degree " + std::to_string(dec.total_rank) +
                        " exceeds the cap of " + std::to_string(degree_cap));
  }
  std::map<std::pair<int, int>, unsigned> classes;
  for (const Summand& s : dec.summands) classes[{s.word_class.d, s.word_class.iota}]++;
  IntPolynomial p = IntPolynomial::constant(1);
  const IntPolynomial xn_minus_1 =
      IntPolynomial::monomial(static_cast<unsigned>(dec.n)) - IntPolynomial::constant(1);
  for (const auto& [key, count] : classes) {
    const auto [d, iota] = key;
    if (d == dec.n) {
      p = p * xn_minus_1.pow(count * static_cast<unsigned>(iota - 1));
    } else {
      ActionMatrix a = action_matrix(dec.n, d, iota);
      IntPolynomial block = charpoly_finite_order(a.M, static_cast<unsigned>(a.group_order));
      p = p * block.substitute_power(static_cast<unsigned>(d)).pow(count);
    }
  }
  return p;
}

namespace {

std::string induced_name(int k, int dim, int n) {
  const std::string module = dim == 1 && k == 2 ? "Z_sign" : dim == 1 ? "Z" : "Z^" + std::to_string(dim);
  return "Ind_{Z_" + std::to_string(k) + "}^{Z_" + std::to_string(n) + "} " + module;
}

}  // namespace

std::string module_summary(const H1Decomposition& dec) {
  // (stabilizer order, module dimension) -> multiplicity
  std::map<std::pair<int, int>, long long> induced;
  long long regular = 0;
  for (const Summand& s : dec.summands) {
    if (s.kind == SummandKind::regular) {
      regular += s.copies;
    } else {
      induced[{s.stabilizer_order(), s.word_class.iota * s.stabilizer_order() - 1}]++;
    }
  }
  const std::string zn = "Z_" + std::to_string(dec.n);
  std::vector<std::string> parts;
  for (const auto& [key, count] : induced) {
    const auto [k, dim] = key;
    std::string term = induced_name(k, dim, dec.n);
    parts.push_back(count == 1 ? term : std::to_string(count) + "·" + term);
  }
  if (regular > 0) {
    std::string term = "Z[" + zn + "]";
    parts.push_back(regular == 1 ? term : std::to_string(regular) + "·" + term);
  }
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " ⊕ " : "") + parts[i];
  return out;
}

std::string decomposition_table(const H1Decomposition& dec) {
  std::vector<std::array<std::string, 6>> rows{{"Lyndon word", "d", "iota", "summand", "rank", "Orbits"}};
  for (const Summand& s : dec.summands) {
    const WordClass& w = s.word_class;
    std::string summand = s.kind == SummandKind::regular
                              ? (s.copies == 1 ? "" : std::to_string(s.copies) + "·") + "Z[Z_" + std::to_string(dec.n) + "]"
                              : induced_name(s.stabilizer_order(), w.iota * s.stabilizer_order() - 1, dec.n);
    std::string orbit;
    for (const Face& f : w.orbit()) orbit += (orbit.empty() ? "" : " ") + face_string(f);
    rows.push_back({w.word.bits(), std::to_string(w.d), std::to_string(w.iota), summand, std::to_string(s.rank()), orbit});
  }
  // display width, counting each UTF-8 code point once
  auto width = [](const std::string& t) {
    return static_cast<std::size_t>(std::count_if(t.begin(), t.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  };
  std::array<std::size_t, 6> widths{};
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) widths[c] = std::max(widths[c], width(r[c]));
  std::ostringstream os;
  for (const auto& r : rows) {
    for (std::size_t c = 0; c + 1 < r.size(); ++c) os << r[c] << std::string(widths[c] - width(r[c]) + 2, ' ');
    os << r.back() << '\n';
  }
  os << "total rank: " << dec.total_rank << '\n';
  return os.str();
}

}  // namespace rmac

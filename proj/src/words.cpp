#include "rmac/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "rmac/errors.hpp"

namespace rmac {
namespace {

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return Integer(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Integer(r);
}

void check_length(int d, int word_cap) {
  if (d < 1) throw InvalidArgument("word length must be positive, got " + std::to_string(d));
  if (d > word_cap) {
    throw ResourceLimit("word length " + std::to_string(d) + " exceeds the cap of " + std::to_string(word_cap));
  }
}

}  // namespace

bool is_lyndon(const std::string& bits) {
  if (bits.empty()) return false;
  if (bits.find_first_not_of("01") != std::string::npos) return false;
  for (std::size_t r = 1; r < bits.size(); ++r)
    if (bits.substr(r) + bits.substr(0, r) <= bits) return false;
  return true;
}

LyndonWord::LyndonWord(std::string bits) : bits_(std::move(bits)) {
  if (!is_lyndon(bits_)) throw InvalidArgument("not a binary Lyndon word: '" + bits_ + "'");
}

int LyndonWord::gap_number() const {
  int count = 0;
  for (std::size_t i = 0; i + 1 < bits_.size(); ++i)
    if (bits_[i] == '0' && bits_[i + 1] == '1') ++count;
  return count;
}

std::vector<LyndonWord> lyndon_words(int d, int word_cap) {
  check_length(d, word_cap);
  std::vector<LyndonWord> out;
  // Duval's generation of Lyndon words of length <= d in lexicographic order
  std::vector<int> w{-1};
  while (!w.empty()) {
    w.back() += 1;
    const std::size_t m = w.size();
    if (static_cast<int>(m) == d) {
      std::string s;
      for (int c : w) s += static_cast<char>('0' + c);
      out.emplace_back(std::move(s));
    }
    while (static_cast<int>(w.size()) < d) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == 1) w.pop_back();
  }
  return out;
}

Integer moreau_count(unsigned n) {
  if (n == 0) throw InvalidArgument("moreau_count(0)");
  Integer s;
  for (unsigned d : divisors(n)) s += Integer(moebius(d)) * Integer::pow(2, n / d);
  return divexact(s, Integer(static_cast<std::int64_t>(n)));
}

Integer necklace_count(unsigned n) {
  if (n == 0) throw InvalidArgument("necklace_count(0)");
  Integer s;
  for (unsigned d : divisors(n)) s += Integer(static_cast<std::int64_t>(euler_phi(d))) * Integer::pow(2, n / d);
  return divexact(s, Integer(static_cast<std::int64_t>(n)));
}

Integer count_L(unsigned n, unsigned k) {
  if (n == 0) throw InvalidArgument("count_L needs n >= 1");
  if (2 * k > n) return Integer(0);
  Integer s;
  for (unsigned e : divisors(std::gcd(n, k)))
    s += Integer(moebius(e)) * binomial(n / e, 2 * k / e);
  return divexact(s * Integer(2), Integer(static_cast<std::int64_t>(n)));
}

WordClass face_from_word(const LyndonWord& w, int n) {
  const int d = w.length();
  if (n < 1 || n % d != 0) {
    throw InvalidArgument("word length " + std::to_string(d) + " does not divide n = " + std::to_string(n));
  }
  WordClass c{w, n, d, w.gap_number(), {}};
  for (int i = 0; i < n; ++i)
    if (w.bits()[static_cast<std::size_t>(i % d)] == '0') c.face.push_back(i + 1);
  return c;
}

std::vector<Face> WordClass::orbit() const {
  std::vector<Face> out;
  for (int j = 0; j < d; ++j) {
    Face f;
    for (int v : face) f.push_back((v - 1 + j) % n + 1);
    std::sort(f.begin(), f.end());
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<WordClass> representatives(int n, int word_cap) {
  if (n < 3) throw InvalidArgument("polygon needs n >= 3, got " + std::to_string(n));
  check_length(n, word_cap);
  std::vector<WordClass> out;
  for (unsigned d : divisors(static_cast<unsigned>(n))) {
    if (d == 1) continue;
    for (const LyndonWord& w : lyndon_words(static_cast<int>(d), word_cap)) {
      if (static_cast<int>(d) == n && w.gap_number() <= 1) continue;
      out.push_back(face_from_word(w, n));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const WordClass& a, const WordClass& b) {
    return std::tie(a.d, a.iota, a.word) < std::tie(b.d, b.iota, b.word);
  });
  return out;
}

std::vector<ClassGroup> group_by_class(const std::vector<WordClass>& reps) {
  std::vector<ClassGroup> out;
  for (const WordClass& c : reps) {
    if (out.empty() || out.back().d != c.d || out.back().iota != c.iota) out.push_back({c.d, c.iota, {}});
    out.back().members.push_back(c);
  }
  return out;
}

std::string class_listing(int n) {
  std::ostringstream os;
  long long total = 0;
  for (const ClassGroup& g : group_by_class(representatives(n))) {
    const long long count = static_cast<long long>(g.members.size());
    const long long gap = static_cast<long long>(g.iota) * n / g.d;
    os << "# of face: " << count << " , each has orbit_size: " << g.d << " , gap_number:  " << gap << "\n";
    for (const WordClass& c : g.members) {
      os << "     [";
      for (std::size_t i = 0; i < c.face.size(); ++i) os << (i ? ", " : "") << c.face[i];
      os << "]\n";
    }
    const long long basis = count * g.d * (gap - 1);
    total += basis;
    os << "number of basis:  " << basis << "\n";
  }
  os << "Total number of basis elements in H_1:  " << total << "\n";
  os << "===========================================\n";
  return os.str();
}

}  // namespace rmac

#include <fstream>
#include <numeric>
#include <tuple>
#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "rmac/errors.hpp"
#include "rmac/words.hpp"

using namespace rmac;

namespace {

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(RMAC_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool lyndon_oracle(const std::string& w) {
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::string rot = w.substr(r) + w.substr(0, r);
    if (!(w < rot)) return false;
  }
  return true;
}

std::vector<std::string> lyndon_by_brute_force(int d) {
  std::vector<std::string> out;
  for (long long x = 0; x < (1LL << d); ++x) {
    std::string w;
    for (int i = d - 1; i >= 0; --i) w += (x >> i & 1) ? '1' : '0';
    if (lyndon_oracle(w)) out.push_back(w);
  }
  return out;
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("Lyndon words") {
  std::vector<std::string> six;
  for (const LyndonWord& w : lyndon_words(6)) six.push_back(w.bits());
  CHECK(six == std::vector<std::string>{"000001", "000011", "000101", "000111", "001011", "001101", "001111",
                                        "010111", "011111"});
  CHECK(lyndon_words(2).size() == 1);
  CHECK(lyndon_words(2)[0].bits() == "01");
  std::vector<std::string> five;
  for (const LyndonWord& w : lyndon_words(5)) five.push_back(w.bits());
  CHECK(five == std::vector<std::string>{"00001", "00011", "00101", "00111", "01011", "01111"});
  CHECK(lyndon_words(1).size() == 2);

  for (int d = 1; d <= 14; ++d) {
    std::vector<std::string> got;
    for (const LyndonWord& w : lyndon_words(d)) got.push_back(w.bits());
    CHECK(got == lyndon_by_brute_force(d));
    CHECK(Integer(static_cast<std::int64_t>(got.size())) == moreau_count(static_cast<unsigned>(d)));
  }
  CHECK_THROWS_AS(lyndon_words(25), ResourceLimit);
  CHECK_THROWS_AS(lyndon_words(0), InvalidArgument);
  CHECK_THROWS_AS(LyndonWord("0101"), InvalidArgument);
  CHECK_THROWS_AS(LyndonWord("10"), InvalidArgument);
}

TEST_CASE("Witt and necklace counts") {
  CHECK(necklace_count(6) == Integer(14));
  CHECK(moreau_count(6) == Integer(9));
  CHECK(necklace_count(1) == Integer(2));
  for (unsigned n = 1; n <= 16; ++n) {
    Integer witt, necklaces;
    for (unsigned d : divisors(n)) {
      witt += Integer(static_cast<std::int64_t>(d)) * Integer(static_cast<std::int64_t>(lyndon_words(static_cast<int>(d)).size()));
      necklaces += moreau_count(d);
    }
    CHECK(witt == Integer::pow(2, n));
    CHECK(necklaces == necklace_count(n));
  }
  CHECK(moreau_count(60) > Integer(std::int64_t{1} << 50));
}

TEST_CASE("gap numbers and L(n, k)") {
  CHECK(gap_number(LyndonWord("001011")) == 2);
  CHECK(gap_number(LyndonWord("01")) == 1);
  CHECK(gap_number(LyndonWord("000001")) == 1);

  CHECK(count_L(6, 2) == Integer(4));
  CHECK(count_L(6, 1) == Integer(5));
  CHECK(count_L(4, 2) == Integer(0));

  for (int n = 2; n <= 16; ++n) {
    std::map<int, long long> by_gap;
    for (const LyndonWord& w : lyndon_words(n)) {
      int blocks = 0;
      for (std::size_t i = 0; i < w.bits().size(); ++i)
        if (w.bits()[i] == '0' && (i == 0 || w.bits()[i - 1] == '1')) ++blocks;
      CHECK(w.gap_number() == blocks);
      by_gap[w.gap_number()]++;
    }
    for (int k = 0; k <= n; ++k)
      CHECK(count_L(static_cast<unsigned>(n), static_cast<unsigned>(k)) == Integer(by_gap[k]));
  }

  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      long long rhs = 0;
      for (unsigned e : divisors(static_cast<unsigned>(std::gcd(n, k))))
        rhs += (n / static_cast<int>(e)) *
               count_L(static_cast<unsigned>(n) / e, static_cast<unsigned>(k) / e).to_int64();
      CHECK(2 * binom(n, 2 * k) == rhs);
    }
  }
}

TEST_CASE("faces from words") {
  WordClass a = face_from_word(LyndonWord("00101"), 10);
  CHECK(a.face == Face{1, 2, 4, 6, 7, 9});
  CHECK(a.iota == 2);
  WordClass b = face_from_word(LyndonWord("001011"), 6);
  CHECK(b.face == Face{1, 2, 4});
  CHECK(b.orbit().size() == 6);
  WordClass c = face_from_word(LyndonWord("01"), 4);
  CHECK(c.face == Face{1, 3});
  CHECK(c.orbit() == std::vector<Face>{{1, 3}, {2, 4}});
  CHECK_THROWS_AS(face_from_word(LyndonWord("001"), 8), InvalidArgument);
}

TEST_CASE("orbit representatives") {
  auto sizes = [](int n) {
    std::vector<std::tuple<int, int, std::size_t>> out;
    for (const ClassGroup& g : group_by_class(representatives(n))) out.emplace_back(g.d, g.iota, g.members.size());
    return out;
  };
  using T = std::tuple<int, int, std::size_t>;
  CHECK(sizes(8) == std::vector<T>{{2, 1, 1}, {4, 1, 3}, {8, 2, 16}, {8, 3, 7}});
  std::vector<std::size_t> counts10;
  for (auto [d, iota, count] : sizes(10)) counts10.push_back(count);
  CHECK(counts10 == std::vector<std::size_t>{1, 4, 2, 40, 42, 8});
  std::vector<WordClass> five = representatives(5);
  REQUIRE(five.size() == 2);
  CHECK(five[0].word.bits() == "00101");
  CHECK(five[1].word.bits() == "01011");
  CHECK(representatives(3).empty());

  for (int n = 3; n <= 16; ++n) {
    CAPTURE(n);
    long long basis = 0;
    for (const WordClass& w : representatives(n)) basis += static_cast<long long>(w.d) * w.reduced_rank();
    CHECK(basis == 2 * (1 + (n - 4) * (1LL << (n - 3))));
  }
}

TEST_CASE("orbit faces are non-faces with disconnected restrictions") {
  for (int n = 4; n <= 10; ++n) {
    const SimplicialComplex k = polygon_boundary(n);
    std::set<Face> seen;
    for (const WordClass& w : representatives(n)) {
      for (const Face& f : w.orbit()) {
        CHECK_FALSE(k.contains(f));
        CHECK(seen.insert(f).second);
        const auto h = simplicial_homology(full_subcomplex(k, f).complex);
        CHECK(h[0] == FGAbelianGroup::free(w.iota * n / w.d));
        CHECK(w.reduced_rank() >= 1);
      }
    }
  }
}

TEST_CASE("class listings match the golden files") {
  CHECK(class_listing(8) == read_file("classes_n8.txt"));
  CHECK(class_listing(10) == read_file("classes_n10.txt"));
}

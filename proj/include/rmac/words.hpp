#pragma once

#include <string>
#include <vector>

#include "rmac/arith.hpp"
#include "rmac/integer.hpp"
#include "rmac/simplicial.hpp"

namespace rmac {

inline constexpr int default_word_cap = 24;

// Binary word strictly smaller than all of its proper rotations.
class LyndonWord {
 public:
  explicit LyndonWord(std::string bits);  // throws InvalidArgument unless Lyndon

  const std::string& bits() const noexcept { return bits_; }
  int length() const noexcept { return static_cast<int>(bits_.size()); }
  // Occurrences of "01" read linearly.
  int gap_number() const;

  friend bool operator==(const LyndonWord&, const LyndonWord&) = default;
  friend auto operator<=>(const LyndonWord&, const LyndonWord&) = default;

 private:
  std::string bits_;
};

bool is_lyndon(const std::string& bits);
inline int gap_number(const LyndonWord& w) { return w.gap_number(); }

// All binary Lyndon words of length exactly d, lexicographic.
std::vector<LyndonWord> lyndon_words(int d, int word_cap = default_word_cap);

// Number of binary Lyndon words of length n (the Moreau necklace function M(n)).
Integer moreau_count(unsigned n);
// Number of binary necklaces of length n.
Integer necklace_count(unsigned n);
// Number of binary Lyndon words of length n with gap number k.
Integer count_L(unsigned n, unsigned k);

struct WordClass {
  LyndonWord word;
  int n = 0;
  int d = 0;
  int iota = 0;
  Face face;  // 1-based positions of 0 in word^{n/d}

  // The d rotations of face, in shift order.
  std::vector<Face> orbit() const;

  // rank of the reduced H_0 of the full subcomplex on `face`
  int reduced_rank() const { return iota * (n / d) - 1; }
};

WordClass face_from_word(const LyndonWord& w, int n);

// Orbit representatives of the non-faces contributing to H_1: words of length
// d for every divisor 1 < d < n, and words of length n with gap number > 1.
// Sorted by (d, iota), then lexicographically.
std::vector<WordClass> representatives(int n, int word_cap = default_word_cap);

struct ClassGroup {
  int d = 0;
  int iota = 0;
  std::vector<WordClass> members;
};
std::vector<ClassGroup> group_by_class(const std::vector<WordClass>& reps);

// Listing of the classes of representatives(n) with face lists and basis counts.
std::string class_listing(int n);

}  // namespace rmac

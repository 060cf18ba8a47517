#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rmac/integer.hpp"

namespace rmac {

// Z^rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k with d_i >= 2 and d_1 | d_2 | ... | d_k.
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;
  // Accepts arbitrary positive cyclic orders and re-canonicalizes them.
  FGAbelianGroup(std::size_t rank, const std::vector<Integer>& cyclic_orders);

  static FGAbelianGroup free(std::size_t rank) { return FGAbelianGroup(rank, {}); }
  static FGAbelianGroup cyclic(const Integer& order);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }
  bool is_trivial() const noexcept { return rank_ == 0 && factors_.empty(); }
  bool is_free() const noexcept { return factors_.empty(); }
  Integer torsion_order() const;

  // Multiplicity list of prime-power cyclic summands, e.g. {(2,2),(3,1)} for (Z/2)^2 ⊕ Z/3.
  std::vector<std::pair<Integer, std::size_t>> primary_summands() const;

  // "Z^4 ⊕ Z/2 ⊕ Z/6"; "0" when trivial.
  std::string to_string() const;
  // "Z^4 ⊕ (Z_2)^2 ⊕ Z_3"
  std::string to_primary_string() const;
  // "Z x Z x C2"
  std::string to_sage_string() const;

  friend FGAbelianGroup operator+(const FGAbelianGroup& a, const FGAbelianGroup& b);
  FGAbelianGroup& operator+=(const FGAbelianGroup& b) { return *this = *this + b; }
  friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> factors_;
};

// Direct sum of `copies` copies of g.
FGAbelianGroup multiple(const FGAbelianGroup& g, std::size_t copies);

}  // namespace rmac

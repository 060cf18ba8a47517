#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rmac/int_matrix.hpp"

namespace rmac {

// U * A * V == D with D diagonal, d_1 | d_2 | ... | d_rank, all positive.
struct SNFResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  std::optional<IntMatrix> U_inv;
  std::optional<IntMatrix> V_inv;
  std::size_t rank = 0;
  std::vector<Integer> invariant_factors;  // diagonal entries >= 2
};

struct SmithOptions {
  bool inverses = false;
  bool verify = true;
};

SNFResult smith_normal_form(const IntMatrix& a, SmithOptions options = {});

// Rank and non-unit invariant factors only; no transforms kept.
struct SmithInvariants {
  std::size_t rank = 0;
  std::vector<Integer> invariant_factors;

  friend bool operator==(const SmithInvariants&, const SmithInvariants&) = default;
};

SmithInvariants smith_invariants(const IntMatrix& a);
// Eliminates unit pivots sparsely (Markowitz order), then finishes densely.
SmithInvariants smith_invariants(const SparseMatrix& a);

}  // namespace rmac

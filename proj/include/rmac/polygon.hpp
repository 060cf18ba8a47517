#pragma once

#include <vector>

#include "rmac/cell_complex.hpp"
#include "rmac/integer.hpp"

namespace rmac {

// Genus of R Z_{K_n}: 1 + (n - 4) 2^{n-3}.
Integer genus_closed_form(int n);
// g_3 = 0, g_{m+1} = 2 g_m + 2^{m-2} - 1.
Integer genus_by_recursion(int n);
// Genus of R Z_{K_n} / Z_n: 1 + 2^{n-3} - necklace_count(n) / 2.
Integer quotient_genus(int n);

struct GenusReport {
  int n = 0;
  Integer genus_total;
  Integer genus_quotient;
  Integer euler_total;
  Integer euler_quotient;
  std::vector<FixedPointClass> branch_terms;
  Integer branch_sum;  // Σ M(d) (n - d)
  bool checked_against_complex = false;
};

// Riemann-Hurwitz: χ(X) = n χ(X/Z_n) - Σ (n - |orbit|) over branch points.
GenusReport riemann_hurwitz_audit(int n);

struct HypercubeReport {
  int n = 0;
  Integer vertices;
  Integer edges;
  Integer faces;
  Integer euler;
  Integer genus_lower_bound;
  Integer quotient_upper_bound;
};

HypercubeReport hypercube_report(int n);

// Z_{L_n} is the 1-skeleton of Z_{K_n}: same cells and incidences in dimensions 0 and 1.
bool hypercube_inclusion_check(int n, std::size_t cell_cap = default_cell_cap);

}  // namespace rmac

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "rmac/abelian_group.hpp"
#include "rmac/int_matrix.hpp"

namespace rmac {

// H_0, H_odd, H_even of a cyclic group with coefficients in a lattice.
struct CyclicHomology {
  FGAbelianGroup h0;
  FGAbelianGroup h_odd;
  FGAbelianGroup h_even;

  friend bool operator==(const CyclicHomology&, const CyclicHomology&) = default;
  friend CyclicHomology operator+(const CyclicHomology& a, const CyclicHomology& b) {
    return {a.h0 + b.h0, a.h_odd + b.h_odd, a.h_even + b.h_even};
  }
  CyclicHomology& operator+=(const CyclicHomology& b) { return *this = *this + b; }
  // "{'zero': Z x C2, 'odd': 0, 'even': C2}"
  std::string to_sage_string() const;
};

// Group homology of Z_m acting on Z^k through M, from the periodic resolution
// ... -> Z^k --N--> Z^k --(I-M)--> Z^k -> 0 with N = I + M + ... + M^{m-1}.
CyclicHomology cyclic_group_homology(int m, const IntMatrix& M);

CyclicHomology summand_closed_form(int n, int d, int iota);
// Homology of Ind_{Z_{n/d}}^{Z_n} N_w via Shapiro; the closed form and the
// direct computation must agree.
CyclicHomology summand_homology(int n, int d, int iota);

class E2Page {
 public:
  E2Page(int n, int max_p, std::map<std::pair<int, int>, FGAbelianGroup> entries);

  int n() const noexcept { return n_; }
  int max_p() const noexcept { return max_p_; }
  const std::map<std::pair<int, int>, FGAbelianGroup>& entries() const noexcept { return entries_; }
  const FGAbelianGroup& at(int p, int q) const;
  // Rows q = 2, 1, 0 top to bottom; cyclic entries as Z_d, others in primary form.
  std::string render() const;

 private:
  int n_;
  int max_p_;
  std::map<std::pair<int, int>, FGAbelianGroup> entries_;
};

E2Page e2_page(int n, int max_p);

// Dimensions over a field of characteristic prime to n: only the column p = 0 survives.
struct FieldE2Page {
  int n = 0;
  int max_p = 0;
  std::map<std::pair<int, int>, long long> dimensions;
  std::string render() const;
};

FieldE2Page e2_page_field(int n, int max_p);

struct PoincareSeries {
  Integer c0, c1, c2;
  friend bool operator==(const PoincareSeries&, const PoincareSeries&) = default;
  std::string to_string() const;  // "1 + 4t + t^2"
};

PoincareSeries poincare_series(int n);

struct IdentityAudit {
  int n = 0;
  Integer from_words;           // Σ_{d|n, d>1} Σ_k (k-1) L(d,k)
  Integer from_necklaces;       // 2 + 2^{n-2} - necklace_count(n)
  Integer from_quotient_genus;  // 2 quotient_genus(n)
  Integer from_page;            // free rank of E^2_{0,1}
  std::optional<Integer> from_quotient_complex;  // rank H_1 of the cellular quotient, n <= 8
};

IdentityAudit identity_audit(int n);

// Sage-style listing of the row q = 1 homology per class of representatives(n).
std::string e2_class_listing(int n);

}  // namespace rmac

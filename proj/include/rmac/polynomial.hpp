#pragma once

#include <string>
#include <vector>

#include "rmac/int_matrix.hpp"
#include "rmac/integer.hpp"

namespace rmac {

// Integer polynomial, coefficients from the constant term upward.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(unsigned degree, const Integer& c = Integer(1));

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  Integer coefficient(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

  // p(x) -> p(x^d)
  IntPolynomial substitute_power(unsigned d) const;
  IntPolynomial pow(unsigned k) const;
  // Exact quotient by a monic divisor; throws ContractViolation on remainder.
  IntPolynomial divide_exact(const IntPolynomial& monic) const;
  IntMatrix evaluate(const IntMatrix& a) const;

  std::string to_string() const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPolynomial cyclotomic(unsigned n);

// det(xI - A) by Faddeev-LeVerrier; exact, O(N^4).
IntPolynomial charpoly(const IntMatrix& a);

// det(xI - A) for A with A^order == I, from the ranks of Phi_e(A), e | order.
IntPolynomial charpoly_finite_order(const IntMatrix& a, unsigned order);

}  // namespace rmac

#include "rmac/polynomial.hpp"

#include <sstream>

#include "rmac/arith.hpp"
#include "rmac/errors.hpp"
#include "rmac/smith.hpp"

namespace rmac {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(unsigned degree, const Integer& c) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::substitute_power(unsigned d) const {
  if (d == 0) throw InvalidArgument("substitute_power(0)");
  if (is_zero()) return {};
  std::vector<Integer> v(static_cast<std::size_t>(degree()) * d + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * d] = coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::pow(unsigned k) const {
  IntPolynomial r = constant(1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& monic) const {
  if (monic.is_zero() || monic.coeffs_.back() != Integer(1)) {
    throw InvalidArgument("divisor must be monic");
  }
  if (is_zero()) return {};
  std::vector<Integer> rem = coeffs_;
  const int dm = monic.degree();
  if (degree() < dm) throw ContractViolation("polynomial division leaves a remainder");
  std::vector<Integer> q(static_cast<std::size_t>(degree() - dm) + 1);
  for (int i = degree() - dm; i >= 0; --i) {
    Integer c = rem[static_cast<std::size_t>(i + dm)];
    q[static_cast<std::size_t>(i)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dm; ++j) rem[static_cast<std::size_t>(i + j)].sub_mul(c, monic.coeffs_[static_cast<std::size_t>(j)]);
  }
  for (const auto& r : rem)
    if (!r.is_zero()) throw ContractViolation("polynomial division leaves a remainder");
  return IntPolynomial(std::move(q));
}

IntMatrix IntPolynomial::evaluate(const IntMatrix& a) const {
  if (!a.is_square()) throw InvalidArgument("evaluate needs a square matrix");
  const std::size_t n = a.rows();
  IntMatrix r(n, n);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    r = r * a;
    for (std::size_t k = 0; k < n; ++k) r(k, k) += coeffs_[i];
  }
  return r;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c.is_zero()) continue;
    Integer mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != Integer(1)) os << mag;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j].add_mul(a.coeffs_[i], b.coeffs_[j]);
  return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial cyclotomic(unsigned n) {
  if (n == 0) throw InvalidArgument("cyclotomic(0)");
  IntPolynomial p = IntPolynomial::monomial(n) - IntPolynomial::constant(1);
  for (unsigned d : divisors(n))
    if (d < n) p = p.divide_exact(cyclotomic(d));
  return p;
}

IntPolynomial charpoly(const IntMatrix& a) {
  if (!a.is_square()) throw InvalidArgument("charpoly needs a square matrix");
  const std::size_t n = a.rows();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    Integer tr = (a * m).trace();
    c[n - k] = -divexact(tr, Integer(static_cast<std::int64_t>(k)));
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial charpoly_finite_order(const IntMatrix& a, unsigned order) {
  if (!a.is_square()) throw InvalidArgument("charpoly needs a square matrix");
  if (order == 0 || !a.power(order).is_identity()) {
    throw InvalidArgument("matrix does not have order dividing " + std::to_string(order));
  }
  const std::size_t n = a.rows();
  IntPolynomial result = IntPolynomial::constant(1);
  std::size_t total = 0;
  for (unsigned e : divisors(order)) {
    IntPolynomial phi = cyclotomic(e);
    std::size_t rank = smith_invariants(phi.evaluate(a)).rank;
    std::size_t kernel = n - rank;
    if (kernel % euler_phi(e) != 0) throw ContractViolation("cyclotomic multiplicity not integral");
    std::size_t mult = kernel / euler_phi(e);
    total += mult * euler_phi(e);
    result = result * phi.pow(static_cast<unsigned>(mult));
  }
  require(total == n, "cyclotomic multiplicities do not account for the dimension");
  return result;
}

}  // namespace rmac

#include "rmac/integer.hpp"

#include <ostream>

#include "rmac/errors.hpp"

namespace rmac {

void Integer::assign(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    small_ = v.get_si();
    big_.reset();
  } else if (big_) {
    *big_ = v;
  } else {
    big_ = std::make_unique<mpz_class>(v);
  }
}

Integer Integer::from_string(std::string_view text) {
  mpz_class v;
  if (text.empty() || v.set_str(std::string(text), 10) != 0) {
    throw InvalidArgument("not an integer: '" + std::string(text) + "'");
  }
  return Integer(v);
}

Integer Integer::pow(const Integer& base, unsigned exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.to_mpz().get_mpz_t(), exponent);
  return Integer(r);
}

std::int64_t Integer::to_int64() const {
  if (big_) throw ResourceLimit("integer does not fit in 64 bits: " + to_string());
  return small_;
}

std::string Integer::to_string() const {
  if (big_) return big_->get_str();
  return std::to_string(small_);
}

Integer& Integer::operator/=(const Integer& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  if (!big_ && !o.big_ && !(small_ == INT64_MIN && o.small_ == -1)) {
    small_ /= o.small_;
    return *this;
  }
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), to_mpz().get_mpz_t(), o.to_mpz().get_mpz_t());
  assign(q);
  return *this;
}

Integer& Integer::operator%=(const Integer& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  if (!big_ && !o.big_) {
    small_ = (o.small_ == -1) ? 0 : small_ % o.small_;
    return *this;
  }
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), to_mpz().get_mpz_t(), o.to_mpz().get_mpz_t());
  assign(r);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

Integer abs(const Integer& v) { return v.sign() < 0 ? -v : v; }

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) {
    std::int64_t x = a.to_int64(), y = b.to_int64();
    if (x != INT64_MIN && y != INT64_MIN) {
      x = x < 0 ? -x : x;
      y = y < 0 ? -y : y;
      while (y != 0) {
        std::int64_t t = x % y;
        x = y;
        y = t;
      }
      return Integer(x);
    }
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(g);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return abs(divexact(a, gcd(a, b)) * b);
}

Integer divexact(const Integer& a, const Integer& b) {
  if (!divides(b, a)) {
    throw ContractViolation("inexact division " + a.to_string() + " / " + b.to_string());
  }
  return a / b;
}

bool divides(const Integer& d, const Integer& a) {
  if (d.is_zero()) return a.is_zero();
  return (a % d).is_zero();
}

}  // namespace rmac

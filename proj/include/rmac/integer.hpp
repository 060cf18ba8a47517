#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rmac {

// Exact integer: machine word while it fits, GMP otherwise.
class Integer {
 public:
  Integer() noexcept = default;
  template <std::signed_integral T>
  Integer(T v) noexcept : small_(static_cast<std::int64_t>(v)) {}
  explicit Integer(const mpz_class& v) { assign(v); }

  Integer(const Integer& o)
      : small_(o.small_),
        big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;

  static Integer from_string(std::string_view text);
  static Integer pow(const Integer& base, unsigned exponent);

  bool is_small() const noexcept { return !big_; }
  bool fits_int64() const noexcept { return !big_; }
  std::int64_t to_int64() const;
  mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(small_)); }
  std::string to_string() const;

  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_unit() const noexcept { return !big_ && (small_ == 1 || small_ == -1); }
  int sign() const noexcept {
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
  }

  Integer& operator+=(const Integer& o) {
    if (!big_ && !o.big_) {
      std::int64_t r;
      if (!__builtin_add_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    assign(to_mpz() + o.to_mpz());
    return *this;
  }

  Integer& operator-=(const Integer& o) {
    if (!big_ && !o.big_) {
      std::int64_t r;
      if (!__builtin_sub_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    assign(to_mpz() - o.to_mpz());
    return *this;
  }

  Integer& operator*=(const Integer& o) {
    if (!big_ && !o.big_) {
      std::int64_t r;
      if (!__builtin_mul_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    assign(to_mpz() * o.to_mpz());
    return *this;
  }

  // this += a * b
  void add_mul(const Integer& a, const Integer& b) {
    if (!big_ && !a.big_ && !b.big_) {
      std::int64_t p, r;
      if (!__builtin_mul_overflow(a.small_, b.small_, &p) &&
          !__builtin_add_overflow(small_, p, &r)) {
        small_ = r;
        return;
      }
    }
    assign(to_mpz() + a.to_mpz() * b.to_mpz());
  }

  // this -= a * b
  void sub_mul(const Integer& a, const Integer& b) {
    if (!big_ && !a.big_ && !b.big_) {
      std::int64_t p, r;
      if (!__builtin_mul_overflow(a.small_, b.small_, &p) &&
          !__builtin_sub_overflow(small_, p, &r)) {
        small_ = r;
        return;
      }
    }
    assign(to_mpz() - a.to_mpz() * b.to_mpz());
  }

  // Truncating division, as for built-in integers.
  Integer& operator/=(const Integer& o);
  Integer& operator%=(const Integer& o);

  void negate() {
    if (!big_ && small_ != INT64_MIN) {
      small_ = -small_;
      return;
    }
    assign(-to_mpz());
  }

  Integer operator-() const {
    Integer r(*this);
    r.negate();
    return r;
  }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

  friend bool operator==(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    return cmp(a.to_mpz(), b.to_mpz()) == 0;
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& v);

 private:
  void assign(const mpz_class& v);

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

Integer abs(const Integer& v);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
// Exact quotient; throws ContractViolation when b does not divide a.
Integer divexact(const Integer& a, const Integer& b);
bool divides(const Integer& d, const Integer& a);

}  // namespace rmac

#ifndef CYLINT_RATIONAL_HPP
#define CYLINT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cylint {

using Integer = mpz_class;

/// Raised when a textual rational cannot be parsed. `position()` is the
/// zero-based offset of the first offending character.
class RationalParseError : public std::invalid_argument {
 public:
  RationalParseError(std::string_view text, std::size_t position,
                     const std::string& reason);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value) : q_(value) {}
  Rational(const Integer& num, const Integer& den);

  static Rational from_mpq(const mpq_class& q);

  /// Accepts "n", "-n", "n/d", "-n/d" with decimal digits and d > 0.
  /// Non-canonical input such as "4/6" is reduced.
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class& mpq() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// "num/den", or just "num" when the denominator is 1.
  std::string str() const;

  Rational operator-() const { return from_mpq(-q_); }
  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class q_{0};
};

Rational pow(const Rational& base, unsigned exponent);
Rational abs(const Rational& r);

/// n! and C(n, k) for machine-size nonnegative arguments.
Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

}  // namespace cylint

#endif  // CYLINT_RATIONAL_HPP

#ifndef CYLINT_SPECIAL_HPP
#define CYLINT_SPECIAL_HPP

#include <stdexcept>
#include <string>

#include "cylint/rational.hpp"

namespace cylint {

/// Argument outside the domain an exact operation supports.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A lower hypergeometric parameter or a 1/(x) factor hit zero.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An internal bookkeeping invariant failed (e.g. a sqrt(pi) power that
/// should have cancelled did not).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A number of the form n/2 for integer n, stored as its double.
class HalfInteger {
 public:
  static constexpr HalfInteger whole(long n) { return HalfInteger(2 * n); }
  /// n + 1/2
  static constexpr HalfInteger plus_half(long n) {
    return HalfInteger(2 * n + 1);
  }
  static constexpr HalfInteger from_twice(long twice) {
    return HalfInteger(twice);
  }

  constexpr long twice() const { return twice_; }
  constexpr bool is_whole() const { return twice_ % 2 == 0; }
  Rational value() const { return Rational(Integer(twice_), Integer(2)); }

  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;

 private:
  constexpr explicit HalfInteger(long twice) : twice_(twice) {}
  long twice_;
};

/// value * pi^(sqrt_pi_power / 2). Gamma at half-odd integers carries one
/// factor of sqrt(pi); keeping the exponent symbolic lets every formula that
/// should be rational prove it by reaching exponent zero.
class SqrtPiScaled {
 public:
  SqrtPiScaled() = default;
  SqrtPiScaled(Rational value, int sqrt_pi_power)
      : value_(std::move(value)), power_(sqrt_pi_power) {}

  const Rational& value() const { return value_; }
  int sqrt_pi_power() const { return power_; }

  /// Throws ConsistencyError unless the sqrt(pi) exponent is zero.
  Rational to_rational() const;

  SqrtPiScaled& operator*=(const SqrtPiScaled& o) {
    value_ *= o.value_;
    power_ += o.power_;
    return *this;
  }
  SqrtPiScaled& operator/=(const SqrtPiScaled& o) {
    value_ /= o.value_;
    power_ -= o.power_;
    return *this;
  }
  SqrtPiScaled& operator*=(const Rational& r) {
    value_ *= r;
    return *this;
  }
  friend SqrtPiScaled operator*(SqrtPiScaled a, const SqrtPiScaled& b) {
    return a *= b;
  }
  friend SqrtPiScaled operator/(SqrtPiScaled a, const SqrtPiScaled& b) {
    return a /= b;
  }
  friend SqrtPiScaled operator*(SqrtPiScaled a, const Rational& r) {
    return a *= r;
  }

  friend bool operator==(const SqrtPiScaled&, const SqrtPiScaled&) = default;

 private:
  Rational value_{1};
  int power_ = 0;
};

/// Gamma at a positive integer or half-odd integer:
///   Gamma(n)       = (n-1)!
///   Gamma(n + 1/2) = sqrt(pi) (2n)! / (4^n n!)
SqrtPiScaled gamma_exact(HalfInteger x);

/// Rising factorial x (x+1) ... (x+n-1); the empty product is 1.
Rational pochhammer(const Rational& x, unsigned n);

/// C(x, m) = x (x-1) ... (x-m+1) / m! for rational x and integer m >= 0.
Rational gen_binomial(const Rational& x, unsigned m);

/// C(k - 1/2, -1/2) = Gamma(k+1/2) / (Gamma(1/2) k!) = C(2k, k) / 4^k.
Rational half_binom(unsigned k);

}  // namespace cylint

#endif  // CYLINT_SPECIAL_HPP

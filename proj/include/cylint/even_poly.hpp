#ifndef CYLINT_EVEN_POLY_HPP
#define CYLINT_EVEN_POLY_HPP

#include <optional>
#include <vector>

#include "cylint/rational.hpp"

namespace cylint {

/// Dense polynomial in the indeterminate rho^2 with rational coefficients.
///
/// Every polynomial handled by this library is even in rho, so storage is
/// indexed by powers of rho^2: coeffs()[i] is the coefficient of rho^(2i).
/// Degrees are likewise reported in rho^2 units. Trailing zero coefficients
/// are trimmed on construction; the zero polynomial has no coefficients and
/// degree -1.
class EvenPoly {
 public:
  EvenPoly() = default;
  explicit EvenPoly(std::vector<Rational> coeffs);

  static EvenPoly constant(const Rational& c);
  /// c * rho^(2 * rho2_power)
  static EvenPoly monomial(const Rational& c, unsigned rho2_power);
  /// 1 - rho^2
  static EvenPoly one_minus_rho2();

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of rho^(2i); zero beyond the degree.
  Rational coeff(std::size_t i) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Value at rho^2 = rho2 (Horner).
  Rational evaluate(const Rational& rho2) const;

  EvenPoly& operator+=(const EvenPoly& o);
  EvenPoly& operator-=(const EvenPoly& o);
  friend EvenPoly operator+(EvenPoly a, const EvenPoly& b) { return a += b; }
  friend EvenPoly operator-(EvenPoly a, const EvenPoly& b) { return a -= b; }
  friend EvenPoly operator*(const EvenPoly& a, const EvenPoly& b);
  friend EvenPoly operator*(const Rational& c, const EvenPoly& p) {
    return p.scaled(c);
  }
  EvenPoly operator-() const { return scaled(Rational(-1)); }

  EvenPoly scaled(const Rational& c) const;

  friend bool operator==(const EvenPoly&, const EvenPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// The constant term when deg <= 0 (zero polynomial gives 0), otherwise empty.
/// This is what "independent of rho" means for a residual polynomial.
std::optional<Rational> is_constant(const EvenPoly& p);

/// 1 + rho^2 + ... + rho^(2d).
EvenPoly geometric_sum(unsigned d);

}  // namespace cylint

#endif  // CYLINT_EVEN_POLY_HPP

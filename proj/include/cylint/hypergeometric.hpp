#ifndef CYLINT_HYPERGEOMETRIC_HPP
#define CYLINT_HYPERGEOMETRIC_HPP

#include <span>
#include <vector>

#include "cylint/even_poly.hpp"
#include "cylint/rational.hpp"

namespace cylint {

/// Exact sum of a terminating pFq series
///   sum_n prod (a_i)_n / (prod (b_i)_n n!) x^n.
///
/// Termination is read off the upper parameters: the series stops at
/// n = -a for the largest nonpositive-integer upper parameter a (closest to
/// zero). Throws DomainError when no upper parameter is a nonpositive
/// integer, and PoleError when a lower parameter (b)_n vanishes before the
/// series terminates.
Rational hyp_terminating(std::span<const Rational> upper,
                         std::span<const Rational> lower, const Rational& x);

/// 2F1([a1, a2]; [b1]; x) for terminating parameters.
Rational hyp2f1_terminating(const Rational& a1, const Rational& a2,
                            const Rational& b1, const Rational& x);

/// Multiplier polynomial mu_m, m >= 1, of rho^2-degree m - 1.
struct MuPoly {
  int m = 0;
  EvenPoly poly;

  friend bool operator==(const MuPoly&, const MuPoly&) = default;
};

/// mu_m(rho) = sum_{n<m} (2/pi) Gamma(m) Gamma(n+1/2) Gamma(m-n+1/2)
///                       / (Gamma(m+1) Gamma(m-n) Gamma(n+1)) rho^(2n).
/// Throws DomainError for m < 1 (mu_0 is a rational function, see
/// mu_zero_value).
MuPoly mu(int m);

/// mu_m evaluated at rho2 through the hypergeometric form
///   2 Gamma(m+1/2) / (sqrt(pi) Gamma(m+1)) 2F1([1-m, 1/2]; [1/2-m]; rho2).
Rational mu_via_2f1(int m, const Rational& rho2);

/// 2 / (1 - rho2). Throws PoleError at rho2 = 1.
Rational mu_zero_value(const Rational& rho2);

/// Immutable cache of mu_1 .. mu_max; safe to share between threads once
/// built.
class MuTable {
 public:
  explicit MuTable(int max_m);

  int max_m() const { return static_cast<int>(polys_.size()); }
  /// mu_m for 1 <= m <= max_m().
  const EvenPoly& operator[](int m) const;

 private:
  std::vector<EvenPoly> polys_;
};

}  // namespace cylint

#endif  // CYLINT_HYPERGEOMETRIC_HPP

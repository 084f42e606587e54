#ifndef CYLINT_COEFFICIENTS_HPP
#define CYLINT_COEFFICIENTS_HPP

#include <vector>

#include "cylint/even_poly.hpp"
#include "cylint/rational.hpp"

namespace cylint {

/// Coefficients of the cylinder-sphere integral
///
///   I_jk(rho, s) = int_0^sqrt(rho^2 - s^2) z^(2j) (z^2 + s^2)^k dz
///                = sqrt(rho^2 - s^2) * sum_{l=0}^{j+k} B_l(rho) s^(2l).
///
/// I_jk is homogeneous of degree 2(j+k)+1, so each B_l is the monomial
/// betas[l] * rho^(2(j+k-l)) and only the scalars are stored.
struct BTable {
  int j = 0;
  int k = 0;
  std::vector<Rational> betas;  // size j + k + 1

  int order() const { return j + k; }
  /// B_l as a polynomial in rho^2; zero for l > j + k.
  EvenPoly b_poly(int l) const;
  /// I_jk / sqrt(rho^2 - s^2) = sum_l betas[l] s^(2l) rho^(2(j+k-l)).
  Rational reduced_integral(const Rational& rho, const Rational& s) const;

  friend bool operator==(const BTable&, const BTable&) = default;
};

/// Brute-force expansion of the defining integral: binomially expand the
/// integrand, integrate each z power, then expand (rho^2 - s^2)^(j+i) and
/// collect powers of s^2. Uses nothing but term-by-term calculus.
BTable expand_oracle(int j, int k);

/// betas[l] from the collapsed Gamma double sum over
/// max(0, l-j) <= n <= min(k, l).
Rational b_coeff_sum(int j, int k, int l);
BTable b_table_sum(int j, int k);

/// Closed form for l >= j:
///   (-1)^j Gamma(k+j-l+1/2) Gamma(k+1) Gamma(j+1/2)
///   / (2 sqrt(pi) Gamma(k+j+1-l) Gamma(k+j+3/2)).
/// For l < j no closed form of this shape exists and DomainError is thrown.
Rational b_coeff_closed(int j, int k, int l);

/// Both sides of the hypergeometric form of I_jk, divided by sqrt(rho^2-s^2):
///   table side:  sum_l betas[l] s^(2l) rho^(2(j+k-l))
///   2F1 side:    rho^(2k)/(2j+2k+1) (rho^2-s^2)^j 2F1([1,-k];[1/2-j-k]; s^2/rho^2)
struct FormCheck {
  Rational from_table;
  Rational from_2f1;
  bool holds() const { return from_table == from_2f1; }
};

/// Requires 0 <= s < rho; throws DomainError otherwise.
FormCheck check_2f1_form(int j, int k, const Rational& rho, const Rational& s);

}  // namespace cylint

#endif  // CYLINT_COEFFICIENTS_HPP

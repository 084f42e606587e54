#ifndef CYLINT_IDENTITIES_HPP
#define CYLINT_IDENTITIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cylint/coefficients.hpp"
#include "cylint/even_poly.hpp"
#include "cylint/hypergeometric.hpp"
#include "cylint/rational.hpp"

namespace cylint {

/// Two exactly computed sides of an identity.
struct IdentityCheck {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

/// sum_{i=0}^n (-1)^(n+i) C(alpha+i, beta+n) C(n, i)  vs  C(alpha, beta).
/// beta is an integer with beta + n >= 0; C(alpha, beta) is 0 for beta < 0.
IdentityCheck verify_lemma1(const Rational& alpha, int beta, int n);

/// sum_{i=0}^n C(n-i-1/2, -1/2) C(i-1/2, -1/2) / (beta+i)
///   vs  Gamma(beta) Gamma(n+beta+1/2) / (Gamma(beta+1/2) Gamma(beta+n+1)),
/// the right side evaluated as (beta+1/2)_n / (beta (beta+1)_n).
/// Throws PoleError when beta is one of 0, -1, ..., -n.
IdentityCheck verify_lemma2(const Rational& beta, int n);

/// (-1)^j Gamma(k+j-N+1/2) Gamma(k+1) Gamma(j+1/2)
///   / (2 sqrt(pi) Gamma(k+j+1-N) Gamma(k+j+3/2))
Rational closed_form_constant(int j, int k, int N);

/// Residual R(rho^2) = B_N + ((1 - rho^2)/2) sum_{m=1}^{j+k-N} mu_m B_{N+m}.
struct TheoremReport {
  int j = 0;
  int k = 0;
  int N = 0;
  EvenPoly residual;
  bool is_constant = false;
  std::optional<Rational> constant;
  Rational closed_form_constant;

  /// N >= j: the residual must be the closed-form constant.
  bool hypothesis_applies() const { return N >= j; }
  /// True when the hypothesis does not apply or the claim holds exactly.
  bool holds() const;

  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

/// Builds the residual symbolically from the oracle coefficient table.
/// Throws std::out_of_range unless 0 <= N <= j + k.
TheoremReport theorem_residual(int j, int k, int N);
/// Same, reusing a prebuilt table and mu cache (mus.max_m() >= j + k - N).
TheoremReport theorem_residual(const BTable& table, const MuTable& mus, int N);

/// Coefficients nu_b of sum_{m=1}^{j+k-N} mu_m B_{N+m} = sum_b nu_b rho^(2b),
/// for b = 0 .. j+k-N-1. Empty when N = j + k. For N >= j every entry equals
/// nu_constant(j, k, N).
std::vector<Rational> nu_sequence(int j, int k, int N);
std::vector<Rational> nu_sequence(const BTable& table, const MuTable& mus,
                                  int N);
/// Twice closed_form_constant.
Rational nu_constant(int j, int k, int N);

/// ((1-rho^2)/2) sum_{m=0}^{j+k-N} mu_m B_{N+m} at rho2, with mu_0 = 2/(1-rho^2),
/// against the theorem residual at rho2. Requires j <= N <= j + k.
IdentityCheck verify_succinct_form(int j, int k, int N, const Rational& rho2);

/// Per-(j,k) radius relation: B_N(1) vs
/// B_N(rho) + ((1-rho^2)/2) sum_m mu_m(rho) B_{N+m}(rho).
IdentityCheck check_radius_relation(int j, int k, int N, const Rational& rho);

/// Theorem sweep over 0 <= j <= jmax, 0 <= k <= kmax, j <= N <= j + k
/// (or 0 <= N when include_below_j). Reports come back in (j, k, N)
/// lexicographic order regardless of the number of workers; the sweep stops
/// handing out work after the first failing tuple.
struct SweepResult {
  std::vector<TheoremReport> reports;
  std::optional<TheoremReport> first_failure;
  bool ok() const { return !first_failure.has_value(); }
};
SweepResult sweep_theorem(int jmax, int kmax, unsigned jobs = 1,
                          bool include_below_j = false);

/// Randomized Lemma sweeps with reproducible sampling.
struct LemmaSweepConfig {
  std::uint64_t seed = 20090701;
  int nmax = 40;
  int beta_min = 0;   // integer beta range for the first identity
  int beta_max = 10;
  int samples = 50;   // random alphas / betas
  long bound = 1000;  // numerator and denominator magnitude cap
};
struct LemmaSweepResult {
  long checks = 0;
  std::optional<std::string> first_failure;
  bool ok() const { return !first_failure.has_value(); }
};
LemmaSweepResult sweep_lemma1(const LemmaSweepConfig& config);
LemmaSweepResult sweep_lemma2(const LemmaSweepConfig& config);

}  // namespace cylint

#endif  // CYLINT_IDENTITIES_HPP

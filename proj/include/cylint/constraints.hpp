#ifndef CYLINT_CONSTRAINTS_HPP
#define CYLINT_CONSTRAINTS_HPP

#include <string>
#include <vector>

#include "cylint/exact_rank.hpp"
#include "cylint/identities.hpp"
#include "cylint/rational.hpp"

namespace cylint {

/// One a_jk I_jk term of Q(rho, s) = sum a_jk I_jk(rho, s).
struct ConstraintTerm {
  int j = 0;
  int k = 0;
  Rational a{1};

  friend bool operator==(const ConstraintTerm&, const ConstraintTerm&) = default;
};

/// Q evaluated at two spherical radii. Writing
///   Q(rho, s) = sqrt(rho^2 - s^2) sum_{l=0}^{L} A_l(rho) s^(2l),
/// setting every A_l to zero at both radii gives 2(L+1) linear constraints
/// on the a_jk.
struct ConstraintSystem {
  std::vector<ConstraintTerm> terms;
  Rational rho_inner{Rational(7) / Rational(20)};
  Rational rho_outer{1};

  /// max(j + k) over the terms.
  int L() const;
  /// max(j) over the terms.
  int max_j() const;

  /// Nonempty, nonnegative indices, unique (j, k) pairs and
  /// 0 < rho_inner < rho_outer. Throws DomainError otherwise.
  void validate() const;

  friend bool operator==(const ConstraintSystem&, const ConstraintSystem&) = default;
};

/// Rows l = 0..L of the linear map a -> A_l(rho); column c belongs to
/// terms[c] and holds betas_l^(j,k) rho^(2(j+k-l)), or 0 when l > j + k.
RationalMatrix assemble_A(const ConstraintSystem& system, const Rational& rho);

/// A_l(rho) for the system's own a_jk, l = 0..L.
std::vector<Rational> evaluate_A(const ConstraintSystem& system,
                                 const Rational& rho);

/// Degeneracy relation for N >= max{j}:
///   A_N(ro) + ((1-ro^2)/2) sum_{m=1}^{L-N} mu_m(ro) A_{N+m}(ro)
///     = A_N(ri) + ((1-ri^2)/2) sum_{m=1}^{L-N} mu_m(ri) A_{N+m}(ri)
/// with ro/ri the outer/inner radii. For ro = 1 the left side is A_N(1).
/// Throws DomainError for N < max{j} or N > L.
IdentityCheck check_degeneracy(const ConstraintSystem& system, int N);

/// Coefficients c_l (l = 0..L) with outer row N = sum_l c_l * inner row l,
/// for max{j} <= N <= L. Only c_N..c_L can be nonzero.
std::vector<Rational> degeneracy_witness(const ConstraintSystem& system, int N);

enum class Radius { inner, outer };

std::string to_string(Radius r);

struct RowRef {
  Radius radius = Radius::outer;
  int l = 0;

  friend bool operator==(const RowRef&, const RowRef&) = default;
};

struct DedupReport {
  int total_rows = 0;
  int rank = 0;
  std::vector<RowRef> redundant_rows;
  int predicted_independent = 0;
  /// Every redundant row was reproduced exactly by its witness combination.
  bool witnesses_verified = false;

  /// "equal" when rank == predicted_independent, "below" otherwise
  /// (degenerate coefficients or a term set too small to reach the bound).
  std::string rank_status() const;

  friend bool operator==(const DedupReport&, const DedupReport&) = default;
};

/// Stacks the inner rows l = 0..L over the outer rows l = 0..L, computes the
/// exact rank, and marks outer rows with l >= max{j} as redundant.
/// predicted_independent = min(#terms, 2(L+1) - (L - max{j} + 1)).
/// Throws ConsistencyError if the rank exceeds the prediction or a witness
/// fails to reproduce its row.
DedupReport dedup(const ConstraintSystem& system);

}  // namespace cylint

#endif  // CYLINT_CONSTRAINTS_HPP

#ifndef CYLINT_EXACT_RANK_HPP
#define CYLINT_EXACT_RANK_HPP

#include <vector>

#include "cylint/rational.hpp"

namespace cylint {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank of a rational matrix (rows of equal length).
///
/// Each row is first scaled by the lcm of its denominators, which leaves the
/// rank unchanged, and the integer matrix is reduced by Bareiss fraction-free
/// elimination: every division is exact, so entries stay bounded by minors of
/// the input. Pivots are the smallest-magnitude nonzero entries of their
/// column.
std::size_t exact_rank(const RationalMatrix& rows);

}  // namespace cylint

#endif  // CYLINT_EXACT_RANK_HPP

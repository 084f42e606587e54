#ifndef CYLINT_SAMPLING_HPP
#define CYLINT_SAMPLING_HPP

#include <random>

#include "cylint/rational.hpp"

namespace cylint {

using Rng = std::mt19937_64;

/// p/q with |p| <= bound and 1 <= q <= bound.
inline Rational random_rational(Rng& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  const long p = num(rng);
  return Rational(Integer(p), Integer(den(rng)));
}

/// p/q with 1 <= p, q <= bound.
inline Rational random_positive_rational(Rng& rng, long bound) {
  std::uniform_int_distribution<long> part(1, bound);
  const long p = part(rng);
  return Rational(Integer(p), Integer(part(rng)));
}

}  // namespace cylint

#endif  // CYLINT_SAMPLING_HPP

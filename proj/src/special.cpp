#include "cylint/special.hpp"

namespace cylint {

Rational SqrtPiScaled::to_rational() const {
  if (power_ != 0) {
    throw ConsistencyError("sqrt(pi) exponent " + std::to_string(power_) +
                           " did not cancel (value " + value_.str() + ")");
  }
  return value_;
}

SqrtPiScaled gamma_exact(HalfInteger x) {
  if (x.twice() <= 0) {
    throw DomainError("gamma_exact: argument " + x.value().str() +
                      " is not positive");
  }
  if (x.is_whole()) {
    const unsigned long n = static_cast<unsigned long>(x.twice() / 2);
    return SqrtPiScaled(Rational(factorial(n - 1)), 0);
  }
  const unsigned long n = static_cast<unsigned long>((x.twice() - 1) / 2);
  Integer four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, n);
  return SqrtPiScaled(Rational(factorial(2 * n), four_pow * factorial(n)), 1);
}

Rational pochhammer(const Rational& x, unsigned n) {
  // With x = p/q the product is prod(p + i q) / q^n; canonicalize once.
  const Integer& p = x.mpq().get_num();
  const Integer& q = x.mpq().get_den();
  Integer num = 1;
  Integer term = p;
  for (unsigned i = 0; i < n; ++i) {
    num *= term;
    term += q;
  }
  Integer den;
  mpz_pow_ui(den.get_mpz_t(), q.get_mpz_t(), n);
  return Rational(num, den);
}

Rational gen_binomial(const Rational& x, unsigned m) {
  const Integer& p = x.mpq().get_num();
  const Integer& q = x.mpq().get_den();
  Integer num = 1;
  Integer term = p;
  for (unsigned i = 0; i < m; ++i) {
    num *= term;
    term -= q;
  }
  Integer den;
  mpz_pow_ui(den.get_mpz_t(), q.get_mpz_t(), m);
  return Rational(num, den * factorial(m));
}

Rational half_binom(unsigned k) {
  Integer four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, k);
  return Rational(binomial(2 * k, k), four_pow);
}

}  // namespace cylint

#include "cylint/hypergeometric.hpp"

#include <array>
#include <optional>
#include <string>

#include "cylint/special.hpp"

namespace cylint {

namespace {

std::optional<unsigned long> nonpositive_integer_order(const Rational& a) {
  if (!a.is_integer() || a.sign() > 0) return std::nullopt;
  return Integer(-a.numerator()).get_ui();
}

}  // namespace

Rational hyp_terminating(std::span<const Rational> upper,
                         std::span<const Rational> lower, const Rational& x) {
  std::optional<unsigned long> stop;
  for (const auto& a : upper) {
    if (auto order = nonpositive_integer_order(a)) {
      if (!stop || *order < *stop) stop = order;
    }
  }
  if (!stop) {
    throw DomainError("hypergeometric series does not terminate: no upper "
                      "parameter is a nonpositive integer");
  }

  // term_{n+1} = term_n * prod(a + n) / (prod(b + n) (n + 1)) * x
  Rational sum(1);
  Rational term(1);
  for (unsigned long n = 0; n < *stop; ++n) {
    const Rational shift(static_cast<long>(n));
    Rational denom(static_cast<long>(n + 1));
    for (const auto& b : lower) {
      const Rational bn = b + shift;
      if (bn.is_zero()) {
        throw PoleError("lower parameter " + b.str() +
                        " reaches zero at series index " + std::to_string(n));
      }
      denom *= bn;
    }
    for (const auto& a : upper) term *= a + shift;
    term *= x;
    term /= denom;
    sum += term;
  }
  return sum;
}

Rational hyp2f1_terminating(const Rational& a1, const Rational& a2,
                            const Rational& b1, const Rational& x) {
  const std::array<Rational, 2> upper{a1, a2};
  const std::array<Rational, 1> lower{b1};
  return hyp_terminating(upper, lower, x);
}

MuPoly mu(int m) {
  if (m < 1) {
    throw DomainError("mu_" + std::to_string(m) +
                      " is not a polynomial; mu is defined here for m >= 1");
  }
  const SqrtPiScaled two_over_pi(Rational(2), -2);
  const SqrtPiScaled common = two_over_pi * gamma_exact(HalfInteger::whole(m)) /
                              gamma_exact(HalfInteger::whole(m + 1));
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(m));
  for (int n = 0; n < m; ++n) {
    const SqrtPiScaled c = common * gamma_exact(HalfInteger::plus_half(n)) *
                           gamma_exact(HalfInteger::plus_half(m - n)) /
                           (gamma_exact(HalfInteger::whole(m - n)) *
                            gamma_exact(HalfInteger::whole(n + 1)));
    coeffs.push_back(c.to_rational());
  }
  return MuPoly{m, EvenPoly(std::move(coeffs))};
}

Rational mu_via_2f1(int m, const Rational& rho2) {
  if (m < 1) {
    throw DomainError("mu_via_2f1: m must be >= 1, got " + std::to_string(m));
  }
  const Rational prefactor =
      (SqrtPiScaled(Rational(2), -1) *
       gamma_exact(HalfInteger::plus_half(m)) /
       gamma_exact(HalfInteger::whole(m + 1)))
          .to_rational();
  const Rational half(1, 2);
  return prefactor * hyp2f1_terminating(Rational(1 - m), half,
                                        half - Rational(m), rho2);
}

Rational mu_zero_value(const Rational& rho2) {
  const Rational gap = Rational(1) - rho2;
  if (gap.is_zero()) throw PoleError("mu_0 = 2/(1 - rho^2) has a pole at rho^2 = 1");
  return Rational(2) / gap;
}

MuTable::MuTable(int max_m) {
  if (max_m < 0) throw DomainError("MuTable size must be nonnegative");
  polys_.reserve(static_cast<std::size_t>(max_m));
  for (int m = 1; m <= max_m; ++m) polys_.push_back(mu(m).poly);
}

const EvenPoly& MuTable::operator[](int m) const {
  if (m < 1 || m > max_m()) {
    throw std::out_of_range("mu_" + std::to_string(m) + " not in table of size " +
                            std::to_string(max_m()));
  }
  return polys_[static_cast<std::size_t>(m - 1)];
}

}  // namespace cylint

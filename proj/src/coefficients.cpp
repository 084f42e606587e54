#include "cylint/coefficients.hpp"

#include <algorithm>
#include <string>

#include "cylint/hypergeometric.hpp"
#include "cylint/special.hpp"

namespace cylint {

namespace {

void require_indices(int j, int k) {
  if (j < 0 || k < 0) {
    throw DomainError("indices must be nonnegative, got j=" + std::to_string(j) +
                      " k=" + std::to_string(k));
  }
}

void require_row(int j, int k, int l) {
  require_indices(j, k);
  if (l < 0 || l > j + k) {
    throw std::out_of_range("row index l=" + std::to_string(l) +
                            " outside 0.." + std::to_string(j + k));
  }
}

SqrtPiScaled gamma_int(long n) { return gamma_exact(HalfInteger::whole(n)); }
SqrtPiScaled gamma_half(long n) { return gamma_exact(HalfInteger::plus_half(n)); }

Rational rho_power(const Rational& rho, int two_times) {
  return pow(rho, static_cast<unsigned>(two_times));
}

}  // namespace

EvenPoly BTable::b_poly(int l) const {
  if (l < 0 || l > order()) return EvenPoly();
  return EvenPoly::monomial(betas[static_cast<std::size_t>(l)],
                            static_cast<unsigned>(order() - l));
}

Rational BTable::reduced_integral(const Rational& rho, const Rational& s) const {
  const Rational s2 = s * s;
  const Rational rho2 = rho * rho;
  Rational acc;
  Rational rho2_pow(1);
  for (int l = order(); l >= 0; --l) {
    acc += betas[static_cast<std::size_t>(l)] * pow(s2, static_cast<unsigned>(l)) *
           rho2_pow;
    rho2_pow *= rho2;
  }
  return acc;
}

BTable expand_oracle(int j, int k) {
  require_indices(j, k);
  BTable table{j, k, std::vector<Rational>(static_cast<std::size_t>(j + k + 1))};
  // (z^2 + s^2)^k = sum_i C(k,i) z^(2i) s^(2(k-i));
  // int_0^h z^(2(j+i)) dz = h^(2(j+i)+1) / (2(j+i)+1), h^2 = rho^2 - s^2;
  // (rho^2 - s^2)^(j+i) = sum_t C(j+i,t) (-1)^t s^(2t) rho^(2(j+i-t)).
  for (int i = 0; i <= k; ++i) {
    const Rational outer(binomial(static_cast<unsigned long>(k),
                                  static_cast<unsigned long>(i)),
                         Integer(2 * (j + i) + 1));
    for (int t = 0; t <= j + i; ++t) {
      Rational term = outer * Rational(binomial(static_cast<unsigned long>(j + i),
                                                static_cast<unsigned long>(t)));
      if (t % 2 == 1) term = -term;
      table.betas[static_cast<std::size_t>(k - i + t)] += term;
    }
  }
  return table;
}

Rational b_coeff_sum(int j, int k, int l) {
  require_row(j, k, l);
  const SqrtPiScaled prefactor =
      gamma_int(k + 1) * gamma_int(j + 1) /
      (SqrtPiScaled(Rational(2), 0) * gamma_half(k + j + 1));
  SqrtPiScaled total(Rational(0), 0);
  bool have_term = false;
  for (int n = std::max(0, l - j); n <= std::min(k, l); ++n) {
    SqrtPiScaled term = gamma_half(k + j - n) /
                        (gamma_int(k - n + 1) * gamma_int(j + n - l + 1) *
                         gamma_int(l - n + 1));
    if ((l + n) % 2 == 1) term *= Rational(-1);
    if (!have_term) {
      total = term;
      have_term = true;
    } else {
      if (term.sqrt_pi_power() != total.sqrt_pi_power()) {
        throw ConsistencyError("b_coeff_sum: mixed sqrt(pi) powers in sum");
      }
      total = SqrtPiScaled(total.value() + term.value(), total.sqrt_pi_power());
    }
  }
  // The range is nonempty whenever 0 <= l <= j + k.
  return (prefactor * total).to_rational();
}

BTable b_table_sum(int j, int k) {
  require_indices(j, k);
  BTable table{j, k, {}};
  table.betas.reserve(static_cast<std::size_t>(j + k + 1));
  for (int l = 0; l <= j + k; ++l) table.betas.push_back(b_coeff_sum(j, k, l));
  return table;
}

Rational b_coeff_closed(int j, int k, int l) {
  require_row(j, k, l);
  if (l < j) {
    throw DomainError(
        "b_coeff_closed: l=" + std::to_string(l) + " < j=" + std::to_string(j) +
        "; the shifted sum has a nonzero lower limit and no closed form of "
        "this shape, use b_coeff_sum or expand_oracle");
  }
  SqrtPiScaled v = gamma_half(k + j - l) * gamma_int(k + 1) * gamma_half(j) /
                   (SqrtPiScaled(Rational(2), 1) * gamma_int(k + j + 1 - l) *
                    gamma_half(k + j + 1));
  if (j % 2 == 1) v *= Rational(-1);
  return v.to_rational();
}

FormCheck check_2f1_form(int j, int k, const Rational& rho, const Rational& s) {
  require_indices(j, k);
  if (s.sign() < 0 || s >= rho) {
    throw DomainError("check_2f1_form requires 0 <= s < rho, got rho=" +
                      rho.str() + " s=" + s.str());
  }
  const BTable table = expand_oracle(j, k);
  const Rational rho2 = rho * rho;
  const Rational s2 = s * s;
  const Rational series = hyp2f1_terminating(
      Rational(1), Rational(-k), Rational(1, 2) - Rational(j + k), s2 / rho2);
  const Rational closed = rho_power(rho, 2 * k) / Rational(2 * j + 2 * k + 1) *
                          pow(rho2 - s2, static_cast<unsigned>(j)) * series;
  return FormCheck{table.reduced_integral(rho, s), closed};
}

}  // namespace cylint

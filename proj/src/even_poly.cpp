#include "cylint/even_poly.hpp"

namespace cylint {

EvenPoly::EvenPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

EvenPoly EvenPoly::constant(const Rational& c) { return EvenPoly({c}); }

EvenPoly EvenPoly::monomial(const Rational& c, unsigned rho2_power) {
  std::vector<Rational> cs(rho2_power + 1);
  cs[rho2_power] = c;
  return EvenPoly(std::move(cs));
}

EvenPoly EvenPoly::one_minus_rho2() { return EvenPoly({Rational(1), Rational(-1)}); }

Rational EvenPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational();
}

Rational EvenPoly::evaluate(const Rational& rho2) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= rho2;
    acc += *it;
  }
  return acc;
}

EvenPoly& EvenPoly::operator+=(const EvenPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

EvenPoly& EvenPoly::operator-=(const EvenPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

EvenPoly operator*(const EvenPoly& a, const EvenPoly& b) {
  if (a.is_zero() || b.is_zero()) return EvenPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return EvenPoly(std::move(out));
}

EvenPoly EvenPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return EvenPoly();
  EvenPoly out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

void EvenPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<Rational> is_constant(const EvenPoly& p) {
  if (p.degree() > 0) return std::nullopt;
  return p.coeff(0);
}

EvenPoly geometric_sum(unsigned d) {
  return EvenPoly(std::vector<Rational>(d + 1, Rational(1)));
}

}  // namespace cylint

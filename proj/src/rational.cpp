#include "cylint/rational.hpp"

#include <cctype>

namespace cylint {

namespace {

std::string parse_message(std::string_view text, std::size_t position,
                          const std::string& reason) {
  std::string msg = "malformed rational '";
  msg.append(text);
  msg += "' at position " + std::to_string(position) + ": " + reason;
  return msg;
}

// Returns the index one past the last digit starting at `from`.
std::size_t scan_digits(std::string_view text, std::size_t from) {
  while (from < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[from]))) {
    ++from;
  }
  return from;
}

}  // namespace

RationalParseError::RationalParseError(std::string_view text,
                                       std::size_t position,
                                       const std::string& reason)
    : std::invalid_argument(parse_message(text, position, reason)),
      position_(position) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::from_mpq(const mpq_class& q) {
  Rational r;
  r.q_ = q;
  r.q_.canonicalize();
  return r;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw RationalParseError(text, 0, "empty string");
  std::size_t pos = 0;
  if (text[0] == '-') ++pos;
  const std::size_t num_begin = pos;
  pos = scan_digits(text, pos);
  if (pos == num_begin) {
    throw RationalParseError(text, pos, "expected a digit");
  }
  const std::string num_digits(text.substr(0, pos));
  if (pos == text.size()) return Rational(Integer(num_digits));
  if (text[pos] != '/') {
    throw RationalParseError(
        text, pos,
        text[pos] == '.' ? "decimal notation is not accepted; write num/den"
                         : "unexpected character");
  }
  const std::size_t den_begin = ++pos;
  pos = scan_digits(text, pos);
  if (pos == den_begin) {
    throw RationalParseError(text, pos, "expected a denominator digit");
  }
  if (pos != text.size()) {
    throw RationalParseError(text, pos, "trailing characters");
  }
  const Integer den(std::string(text.substr(den_begin)));
  if (den == 0) throw RationalParseError(text, den_begin, "zero denominator");
  return Rational(Integer(num_digits), den);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.mpq().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.mpq().get_den_mpz_t(), exponent);
  return Rational::from_mpq(mpq_class(num, den));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace cylint

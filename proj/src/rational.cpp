#include "odometer/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace odometer {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Natural parse_integer(std::string_view s) {
  if (!is_decimal_integer(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Natural(std::string(s), 10);
}

}  // namespace

Rational::Rational(const Natural& numerator, const Natural& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text), Natural(1));
  const Natural den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

Natural Rational::floor() const {
  Natural q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Natural Rational::ceil() const {
  Natural q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return Rational(value_.get_den(), value_.get_num());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::string Rational::to_decimal(unsigned bits) const {
  // round(x * 2^bits) / 2^bits has an exact decimal expansion with `bits` fractional digits.
  const Natural scale = pow2(bits);
  mpq_class scaled = value_ * mpq_class(scale);
  scaled += mpq_class(1, 2);
  Natural rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());

  const bool negative = rounded < 0;
  if (negative) rounded = -rounded;
  Natural whole = rounded >> bits;
  Natural frac = rounded - (whole << bits);

  std::string out = negative ? "-" : "";
  out += whole.get_str(10);
  if (bits == 0) return out;
  // frac / 2^bits == frac * 5^bits / 10^bits
  Natural five_pow;
  mpz_ui_pow_ui(five_pow.get_mpz_t(), 5, bits);
  std::string digits = Natural(frac * five_pow).get_str(10);
  if (digits.size() < bits) digits.insert(0, bits - digits.size(), '0');
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  out += '.';
  out += digits;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

Natural pow2(std::uint64_t exponent) {
  Natural r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
  return r;
}

std::size_t RationalHash::operator()(const Rational& x) const {
  const auto limb_hash = [](mpz_srcptr z) {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) * 0x100000001b3ULL;
    for (mp_size_t i = 0; i < static_cast<mp_size_t>(mpz_size(z)); ++i)
      h = (h ^ static_cast<std::size_t>(mpz_getlimbn(z, i))) * 0x100000001b3ULL;
    return h;
  };
  const std::size_t a = limb_hash(x.raw().get_num_mpz_t());
  const std::size_t b = limb_hash(x.raw().get_den_mpz_t());
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

}  // namespace odometer

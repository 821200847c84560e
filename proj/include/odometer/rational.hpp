#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace odometer {

/// Arbitrary-precision integers. Positions, indices and exponents grow as 2^level.
using Natural = mpz_class;

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Natural& numerator, const Natural& denominator);
  explicit Rational(const mpq_class& value);

  /// Parses "p/q" or "p" (decimal, optional sign). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  Natural numerator() const { return value_.get_num(); }
  Natural denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }

  /// Greatest integer not above the value.
  Natural floor() const;
  /// Least integer not below the value.
  Natural ceil() const;
  Rational reciprocal() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;
  /// The value rounded to the nearest multiple of 2^-bits, written in decimal.
  std::string to_decimal(unsigned bits) const;
  double to_double() const { return value_.get_d(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// 2^exponent as an arbitrary-precision natural.
Natural pow2(std::uint64_t exponent);

/// Hash usable for unordered containers of rationals.
struct RationalHash {
  std::size_t operator()(const Rational& x) const;
};

}  // namespace odometer

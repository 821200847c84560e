#include "odometer/interval_maps.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "odometer/codecs.hpp"
#include "odometer/odometers.hpp"

namespace odometer {

namespace {

const Rational kZero(0);
const Rational kOne(1);

Rational mobius(const Rational& x, const Natural& a, const Natural& b, const Natural& c, const Natural& d) {
  // (a x + b) / (c x + d)
  return (x * Rational(a, 1) + Rational(b, 1)) / (x * Rational(c, 1) + Rational(d, 1));
}

Letter small_letter(const Natural& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("branch index does not fit a letter");
  return n.get_si();
}

// Continued fraction digits of x in (0, 1] with a trailing 1 folded in.
std::vector<Letter> cf_digits(const Rational& x) { return cf_encode(x).word().letters(); }

}  // namespace

Rational gauss(const Rational& x) {
  if (x <= kZero || x > kOne) throw std::domain_error("gauss: x must lie in (0, 1]");
  const Rational inv = x.reciprocal();
  return inv - Rational(inv.floor(), 1);
}

Rational renyi(const Rational& x) {
  if (x < kZero || x >= kOne) throw std::domain_error("renyi: x must lie in [0, 1)");
  const Rational y = (kOne - x).reciprocal();
  return y - Rational(y.floor(), 1);
}

Rational dyadic_interval_step(const Rational& x) {
  if (x < kZero || x >= kOne) throw std::domain_error("dyadic_interval_step: x must lie in [0, 1)");
  // x lies in I_n iff 2^-n < 1 - x <= 2^(1-n); n is the least n with (1 - x) 2^n > 1.
  const Rational r = kOne - x;
  const Natural& a = r.numerator();
  const Natural& b = r.denominator();
  const long bits_a = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
  const long bits_b = static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2));
  auto n = static_cast<std::uint64_t>(std::max(1L, bits_b - bits_a - 1));
  while (Natural(a << n) <= b) ++n;
  return x + Rational(Natural(3), pow2(n)) - kOne;
}

FibPair fib(std::int64_t k, std::uint64_t n) {
  if (k < 1) throw std::invalid_argument("fib: k must be >= 1");
  Natural b_prev = 1, b = 0;  // b_{-1}, b_0
  Natural d_prev = 1 - k, d = 1;  // d_{-1}, d_0
  for (std::uint64_t i = 0; i < n; ++i) {
    Natural b_next = k * b + b_prev;
    Natural d_next = k * d + d_prev;
    b_prev = std::move(b);
    d_prev = std::move(d);
    b = std::move(b_next);
    d = std::move(d_next);
  }
  return {n, b, d};
}

std::string_view to_string(Boundary b) { return b == Boundary::Right ? "right" : "left"; }

Boundary parse_boundary(std::string_view name) {
  if (name == "right") return Boundary::Right;
  if (name == "left") return Boundary::Left;
  throw std::invalid_argument("unknown boundary '" + std::string(name) + "'");
}

Rational gauss_odometer(const Rational& x, Boundary boundary) {
  if (x <= kZero || x > kOne) throw std::domain_error("gauss_odometer: x must lie in (0, 1]");
  if (x == kOne) return kOne;

  const Rational inv = x.reciprocal();
  std::uint64_t n = 0;
  if (inv.is_integer()) {
    const auto m = inv.numerator().get_ui();
    if (boundary == Boundary::Left) {
      const FibPair f = fib(1, m - 1);  // [1^(m-1)] = f_{m-1} / f_m
      return Rational(f.b, f.d);
    }
    n = m - 1;  // 1/m is the left endpoint of [1/m, 1/(m-1))
  } else {
    n = inv.floor().get_ui();
  }
  const FibPair lo = fib(1, n - 1);  // f_{n-1}, f_n
  const FibPair hi = fib(1, n);      // f_n, f_{n+1}
  const Natural f_prev = lo.b;
  const Natural f_n = hi.b;
  const Natural f_next = hi.d;
  return mobius(x, f_prev - n * f_n, f_n, f_n - n * f_next, f_next);
}

Rational renyi_odometer(const Rational& x) {
  if (x < kZero || x >= kOne) throw std::domain_error("renyi_odometer: x must lie in [0, 1)");
  const Rational y = (kOne - x).reciprocal();
  return (Rational(2 * y.floor() + 1, 1) - y).reciprocal();
}

Rational k_gauss_odometer(const Rational& x, std::int64_t k, Boundary boundary) {
  if (k < 1) throw std::invalid_argument("k_gauss_odometer: k must be >= 1");
  if (x <= kZero || x > Rational(Natural(1), Natural(k)))
    throw std::domain_error("k_gauss_odometer: x must lie in (0, 1/k]");
  const std::vector<Letter> digits = cf_digits(x);
  for (Letter a : digits)
    if (a < k) throw std::domain_error("k_gauss_odometer: continued fraction digit below k");

  const auto n = static_cast<std::uint64_t>(digits.front() - k);
  if (digits.size() == 1) {
    if (boundary == Boundary::Left) {
      if (n == 0) return x;
      return golden_mean_k(k, n);  // b_n / b_{n+1}
    }
    return golden_mean_k(k, n + 1);  // b_{n+1} / b_{n+2}
  }
  const Natural m = digits.front();
  const FibPair lo = fib(k, n);
  const FibPair hi = fib(k, n + 1);
  return mobius(x, lo.b - m * lo.d, lo.d, hi.b - m * hi.d, hi.d);
}

Rational k_gauss_odometer_indexed(const Rational& x, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k_gauss_odometer_indexed: k must be >= 1");
  if (x <= kZero || x >= Rational(Natural(1), Natural(k)))
    throw std::domain_error("k_gauss_odometer_indexed: x must lie in (0, 1/k)");
  // x in [1/(n+1+k), 1/(n+k)) iff n + k < 1/x <= n + 1 + k.
  const Natural n_big = x.reciprocal().ceil() - 1 - k;
  const std::uint64_t n = n_big.get_ui();
  const FibPair f0 = fib(k, n);
  const FibPair f1 = fib(k, n + 1);
  const FibPair f2 = fib(k, n + 2);
  return mobius(x, f0.b - n * f1.d, f1.d, f1.b - n * f2.d, f2.d);
}

Rational golden_mean_k(std::int64_t k, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("golden_mean_k: n must be >= 1");
  return Rational(fib(k, n).b, fib(k, n + 1).b);
}

// Countable-Markov interval maps --------------------------------------------

CmiMap gauss_cmi() {
  CmiMap map;
  map.floor = 1;
  map.digit = [](const Rational& x) -> std::optional<Letter> {
    if (x.is_zero()) return std::nullopt;
    return small_letter(x.reciprocal().floor());
  };
  map.apply = [](const Rational& x) { return gauss(x); };
  map.branch_inverse = [](Letter a, const Rational& y) { return (Rational(a) + y).reciprocal(); };
  map.length_one = Policy::Cyclic;
  return map;
}

CmiMap renyi_cmi() {
  CmiMap map;
  map.floor = 2;
  map.digit = [](const Rational& x) -> std::optional<Letter> {
    return small_letter((kOne - x).reciprocal().floor()) + 1;
  };
  map.apply = [](const Rational& x) { return renyi(x); };
  map.branch_inverse = [](Letter a, const Rational& y) { return kOne - (y + Rational(a - 1)).reciprocal(); };
  map.tail_point = kZero;
  map.length_one = Policy::TopDown;
  return map;
}

CmiMap restricted_gauss_cmi(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("restricted_gauss_cmi: k must be >= 1");
  CmiMap map = gauss_cmi();
  map.floor = k;
  map.digit = [k](const Rational& x) -> std::optional<Letter> {
    if (x.is_zero()) return std::nullopt;
    const Letter a = small_letter(x.reciprocal().floor());
    if (a < k) throw std::domain_error("restricted Gauss map: digit " + std::to_string(a) + " below " + std::to_string(k));
    return a;
  };
  return map;
}

Rational cmi_odometer(const CmiMap& map, const Rational& x, std::size_t depth_limit) {
  std::vector<Letter> digits;
  Rational y = x;
  bool tail = false;
  for (;;) {
    if (map.tail_point && y == *map.tail_point) {
      tail = true;
      break;
    }
    const auto d = map.digit(y);
    if (!d) break;
    if (digits.size() == depth_limit)
      throw std::runtime_error("cmi_odometer: point not identified within " + std::to_string(depth_limit) + " digits");
    digits.push_back(*d);
    y = map.apply(y);
  }

  if (tail) {
    const Letter tail_digit = *map.digit(*map.tail_point);
    const TailWord image = baire_step(TailWord(map.floor, std::move(digits), {tail_digit}));
    if (image.period() != std::vector<Letter>{tail_digit})
      throw std::logic_error("cmi_odometer: odometer changed the tail");
    Rational value = *map.tail_point;
    for (auto it = image.preperiod().rbegin(); it != image.preperiod().rend(); ++it)
      value = map.branch_inverse(*it, value);
    return value;
  }

  if (digits.empty()) throw std::domain_error("cmi_odometer: x has no coding");
  const FiniteWord image = step(FiniteWord(map.floor, std::move(digits)), map.length_one);
  Rational value = y;  // where the finite orbit left the domain
  for (auto it = image.letters().rbegin(); it != image.letters().rend(); ++it) value = map.branch_inverse(*it, value);
  return value;
}

Rational question_mark(const Rational& x, unsigned precision_bits) {
  if (x < kZero || x > kOne) throw std::domain_error("question_mark: x must lie in [0, 1]");
  if (x.is_zero()) return kZero;
  Rational sum(0);
  std::uint64_t partial = 0;
  int sign = 1;
  for (Letter a : cf_digits(x)) {
    partial += static_cast<std::uint64_t>(a);
    if (precision_bits != 0 && partial > precision_bits + 1) break;
    const Rational term(Natural(2), pow2(partial));
    sum = sign > 0 ? sum + term : sum - term;
    sign = -sign;
  }
  return sum;
}

}  // namespace odometer

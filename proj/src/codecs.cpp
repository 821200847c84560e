#include "odometer/codecs.hpp"

#include <algorithm>
#include <stdexcept>

namespace odometer {

namespace {

Letter to_letter(const Natural& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("digit does not fit a letter");
  return n.get_si();
}

}  // namespace

CanonicalCF::CanonicalCF(FiniteWord word) : word_(std::move(word)) {
  if (word_.floor() != 1) throw std::invalid_argument("CanonicalCF: word must have floor 1");
  const bool unit = word_.size() == 1 && word_.front() == 1;
  if (!unit && word_.back() < 2) throw std::invalid_argument("CanonicalCF: last digit must be >= 2");
}

CanonicalBCF::CanonicalBCF(FiniteWord word) : word_(std::move(word)) {
  if (std::any_of(word_->letters().begin(), word_->letters().end(), [](Letter a) { return a < 2; }))
    throw std::invalid_argument("CanonicalBCF: digits must be >= 2");
  if (word_->floor() != 2) word_ = FiniteWord(2, word_->letters());
}

// Continued fractions -------------------------------------------------------

CanonicalCF cf_encode(const Rational& x) {
  if (x <= Rational(0) || x > Rational(1)) throw std::domain_error("cf_encode: x must lie in (0, 1]");
  std::vector<Letter> digits;
  Natural p = x.numerator();
  Natural q = x.denominator();
  while (p != 0) {
    Natural a;
    Natural r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    digits.push_back(to_letter(a));
    q = p;
    p = r;
  }
  if (digits.size() > 1 && digits.back() == 1) {
    digits.pop_back();
    ++digits.back();
  }
  return CanonicalCF(FiniteWord(1, std::move(digits)));
}

Rational cf_decode(const FiniteWord& w) {
  // p_i = a_i p_{i-1} + p_{i-2}, q_i = a_i q_{i-1} + q_{i-2}, seeded with a_0 = 0.
  Natural p_prev = 1, p = 0;
  Natural q_prev = 0, q = 1;
  for (Letter a : w.letters()) {
    if (a < 1) throw std::invalid_argument("cf_decode: digits must be >= 1");
    Natural p_next = a * p + p_prev;
    Natural q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
  }
  return Rational(p, q);
}

FiniteWord twin(const FiniteWord& w) {
  if (w.back() < 2) throw std::invalid_argument("twin: last digit must be >= 2");
  if (w.floor() > 1) throw std::invalid_argument("twin: the twin expansion needs the digit 1");
  std::vector<Letter> out = w.letters();
  --out.back();
  out.push_back(1);
  return FiniteWord(w.floor(), std::move(out));
}

// Backward continued fractions ----------------------------------------------

CanonicalBCF bcf_encode(const Rational& x) {
  if (x < Rational(0) || x >= Rational(1)) throw std::domain_error("bcf_encode: x must lie in [0, 1)");
  if (x.is_zero()) return CanonicalBCF::zero();
  std::vector<Letter> digits;
  Rational t = x;
  for (;;) {
    // 1/(1 - t) = a - 1/(rest); a terminal digit leaves no remainder.
    const Rational y = (Rational(1) - t).reciprocal();
    if (y.is_integer()) {
      digits.push_back(to_letter(y.numerator()));
      break;
    }
    digits.push_back(to_letter(y.ceil()));
    t = y - Rational(y.floor(), 1);
  }
  return CanonicalBCF(FiniteWord(2, std::move(digits)));
}

Rational bcf_decode(const FiniteWord& w) {
  const auto& a = w.letters();
  if (std::any_of(a.begin(), a.end(), [](Letter d) { return d < 2; }))
    throw std::invalid_argument("bcf_decode: digits must be >= 2");
  Rational v(a.back());
  for (auto it = a.rbegin() + 1; it != a.rend(); ++it) v = Rational(*it) - v.reciprocal();
  return Rational(1) - v.reciprocal();
}

Rational bcf_decode(const CanonicalBCF& w) { return w.is_zero() ? Rational(0) : bcf_decode(w.word()); }

TailWord bcf_tail_form(const CanonicalBCF& w) {
  if (w.is_zero()) return TailWord::constant(2, 2);
  std::vector<Letter> pre = w.word().letters();
  ++pre.back();
  return TailWord(2, std::move(pre), {2});
}

CanonicalBCF bcf_from_tail_form(const TailWord& w) {
  if (w.floor() != 2 || w.period() != std::vector<Letter>{2})
    throw std::invalid_argument("bcf_from_tail_form: expects a floor-2 word ending in all 2s");
  if (w.preperiod().empty()) return CanonicalBCF::zero();
  std::vector<Letter> digits = w.preperiod();
  --digits.back();
  return CanonicalBCF(FiniteWord(2, std::move(digits)));
}

// Dyadic --------------------------------------------------------------------

FiniteWord dyadic_encode(const Rational& x) {
  if (x <= Rational(0) || x >= Rational(1)) throw std::domain_error("dyadic_encode: x must lie in (0, 1)");
  const Natural& den = x.denominator();
  if (mpz_popcount(den.get_mpz_t()) != 1) throw std::domain_error("dyadic_encode: denominator is not a power of two");
  const std::size_t m = mpz_sizeinbase(den.get_mpz_t(), 2) - 1;
  const Natural num = x.numerator();

  std::vector<Letter> blocks;
  Letter ones = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    if (mpz_tstbit(num.get_mpz_t(), m - i)) {
      ++ones;
    } else {
      blocks.push_back(ones);
      ones = 0;
    }
  }
  // The numerator is odd, so the expansion ends in a run of ones.
  blocks.push_back(ones);
  return FiniteWord(0, std::move(blocks));
}

Rational dyadic_decode(const FiniteWord& w) {
  if (w.floor() != 0) throw std::invalid_argument("dyadic_decode: expects a floor-0 word");
  Natural num = 0;
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto ones = static_cast<std::uint64_t>(w[i]);
    num = (num << ones) + pow2(ones) - 1;
    bits += ones;
    if (i + 1 < w.size()) {
      num <<= 1;
      ++bits;
    }
  }
  return Rational(num, pow2(bits));
}

}  // namespace odometer

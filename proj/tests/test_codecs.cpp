#include <gtest/gtest.h>

#include "odometer/codecs.hpp"
#include "odometer/trees.hpp"
#include "oracles.hpp"

using namespace odometer;
using oracle::q;

namespace {

FiniteWord w1(std::vector<Letter> letters) { return FiniteWord(1, std::move(letters)); }
FiniteWord w2(std::vector<Letter> letters) { return FiniteWord(2, std::move(letters)); }

}  // namespace

TEST(CanonicalForms, Validation) {
  EXPECT_NO_THROW(CanonicalCF(w1({1})));
  EXPECT_NO_THROW(CanonicalCF(w1({1, 2})));
  EXPECT_THROW(CanonicalCF(w1({2, 1})), std::invalid_argument);
  EXPECT_THROW(CanonicalCF(FiniteWord(0, {2})), std::invalid_argument);
  EXPECT_THROW(CanonicalBCF(w1({2, 1})), std::invalid_argument);
  EXPECT_EQ(CanonicalBCF(w1({3, 2})).word(), w2({3, 2}));
  EXPECT_TRUE(CanonicalBCF::zero().is_zero());
}

TEST(CfEncode, Examples) {
  EXPECT_EQ(cf_encode(q(2, 3)).word(), w1({1, 2}));
  EXPECT_EQ(cf_encode(q(1, 2)).word(), w1({2}));
  EXPECT_EQ(cf_encode(q(1, 3)).word(), w1({3}));
  EXPECT_EQ(cf_encode(Rational(1)).word(), w1({1}));
  EXPECT_EQ(cf_encode(q(19, 32)).word(), w1({1, 1, 2, 6}));
  EXPECT_THROW(cf_encode(Rational(0)), std::domain_error);
  EXPECT_THROW(cf_encode(q(3, 2)), std::domain_error);
}

TEST(CfDecode, Examples) {
  EXPECT_EQ(cf_decode(w1({1, 1, 1})), q(2, 3));
  EXPECT_EQ(cf_decode(w1({1, 2})), q(2, 3));
  EXPECT_EQ(cf_decode(w1({4})), q(1, 4));
  std::vector<Rational> level4;
  for (const auto& w : subtree_level(w1({2}), 3)) level4.push_back(cf_decode(w));
  EXPECT_EQ(level4, (std::vector<Rational>{q(3, 5), q(2, 5), q(3, 4), q(1, 4)}));
  EXPECT_THROW(cf_decode(FiniteWord(0, {1, 0})), std::invalid_argument);
}

TEST(Twin, Examples) {
  EXPECT_EQ(twin(w1({3})), w1({2, 1}));
  EXPECT_EQ(twin(w1({1, 2})), w1({1, 1, 1}));
  EXPECT_THROW(twin(w1({1})), std::invalid_argument);
  for (Letter l = 2; l <= 12; ++l)
    for (const auto& w : level_words(1, l)) {
      if (w.back() < 2) continue;
      ASSERT_EQ(sum_k(twin(w)), sum_k(w));
      ASSERT_EQ(cf_decode(twin(w)), cf_decode(w));
    }
}

TEST(BcfEncode, Examples) {
  EXPECT_EQ(bcf_encode(q(1, 2)).word(), w2({2}));
  for (Letter n = 1; n <= 20; ++n) EXPECT_EQ(bcf_encode(q(1, n + 1)).word(), w2(std::vector<Letter>(n, 2)));
  EXPECT_EQ(bcf_encode(q(3, 5)).word(), w2({3, 2}));
  EXPECT_TRUE(bcf_encode(Rational(0)).is_zero());
  EXPECT_THROW(bcf_encode(Rational(1)), std::domain_error);
  EXPECT_THROW(bcf_encode(q(-1, 2)), std::domain_error);
}

TEST(BcfDecode, Examples) {
  EXPECT_EQ(bcf_decode(w2({4})), q(3, 4));
  EXPECT_EQ(bcf_decode(w2({2, 3})), q(2, 5));
  EXPECT_EQ(bcf_decode(CanonicalBCF::zero()), Rational(0));
  EXPECT_THROW(bcf_decode(w1({1})), std::invalid_argument);
}

TEST(BcfDecode, TailExtensionConverges) {
  // (a1, ..., an + 1, 2^m) approaches [a1 ... an] as m grows.
  for (const auto& w : level_words(2, 6)) {
    const Rational target = bcf_decode(w);
    std::vector<Letter> digits = w.letters();
    ++digits.back();
    Rational previous_gap(1);
    for (int m = 1; m <= 30; ++m) {
      digits.push_back(2);
      const Rational gap = bcf_decode(w2(digits)) - target;
      const Rational abs_gap = gap < Rational(0) ? -gap : gap;
      ASSERT_LT(abs_gap, previous_gap);
      previous_gap = abs_gap;
    }
    EXPECT_LT(previous_gap, q(1, 20));
  }
}

TEST(BcfTailForm, Examples) {
  EXPECT_EQ(bcf_tail_form(CanonicalBCF(w2({2}))), TailWord(2, {3}, {2}));
  EXPECT_EQ(bcf_tail_form(CanonicalBCF::zero()), TailWord::constant(2, 2));
  EXPECT_EQ(bcf_from_tail_form(TailWord(2, {3}, {2})), CanonicalBCF(w2({2})));
  EXPECT_TRUE(bcf_from_tail_form(TailWord::constant(2, 2)).is_zero());
  EXPECT_THROW(bcf_from_tail_form(TailWord(2, {3}, {4})), std::invalid_argument);
  EXPECT_THROW(bcf_from_tail_form(TailWord(1, {3}, {2})), std::invalid_argument);
  for (Letter l = 1; l <= 9; ++l)
    for (const auto& w : level_words(2, l)) {
      const CanonicalBCF c(w);
      ASSERT_EQ(bcf_from_tail_form(bcf_tail_form(c)), c);
    }
}

TEST(Dyadic, Examples) {
  EXPECT_EQ(dyadic_encode(q(19, 32)), FiniteWord(0, {1, 0, 2}));
  EXPECT_EQ(dyadic_encode(q(1, 2)), FiniteWord(0, {1}));
  EXPECT_EQ(dyadic_encode(q(3, 4)), FiniteWord(0, {2}));
  EXPECT_EQ(dyadic_decode(FiniteWord(0, {1, 0, 2})), q(19, 32));
  for (Letter l = 1; l <= 20; ++l) {
    std::vector<Letter> left(static_cast<std::size_t>(l - 1), 0);
    left.push_back(1);
    EXPECT_EQ(dyadic_decode(FiniteWord(0, left)), Rational(Natural(1), pow2(static_cast<std::uint64_t>(l))));
    EXPECT_EQ(dyadic_decode(FiniteWord(0, {l})),
              Rational(pow2(static_cast<std::uint64_t>(l)) - 1, pow2(static_cast<std::uint64_t>(l))));
  }
  EXPECT_THROW(dyadic_encode(q(1, 3)), std::domain_error);
  EXPECT_THROW(dyadic_encode(Rational(0)), std::domain_error);
  EXPECT_THROW(dyadic_encode(Rational(1)), std::domain_error);
  EXPECT_THROW(dyadic_decode(w1({1})), std::invalid_argument);
}

TEST(RoundTrips, ExhaustiveSmallDenominators) {
  for (const Rational& x : oracle::farey(200)) {
    if (!x.is_zero()) {
      const CanonicalCF c = cf_encode(x);
      ASSERT_EQ(cf_decode(c.word()), x);
      ASSERT_EQ(oracle::cf_value(c.word().letters()), x);
      ASSERT_TRUE(c.word().back() >= 2 || c.word() == w1({1}));
    }
    if (x != Rational(1)) {
      const CanonicalBCF b = bcf_encode(x);
      ASSERT_EQ(bcf_decode(b), x);
      if (!b.is_zero()) ASSERT_EQ(oracle::bcf_value(b.word().letters()), x);
    }
  }
  for (std::uint64_t m = 1; m <= 12; ++m)
    for (unsigned long p = 1; p < (1UL << m); p += 2) {
      const Rational x(Natural(p), pow2(m));
      const FiniteWord w = dyadic_encode(x);
      ASSERT_EQ(dyadic_decode(w), x);
      ASSERT_GE(w.back(), 1);
      ASSERT_EQ(dyadic_encode(dyadic_decode(w)), w);
    }
}

TEST(SonRules, ValuesOfSons) {
  for (Letter l = 1; l <= 10; ++l) {
    for (const auto& w : level_words(1, l)) {
      const Rational x = cf_decode(w);
      const auto [left, right] = sons(w);
      const Natural p = x.numerator(), qq = x.denominator();
      ASSERT_EQ(cf_decode(left), Rational(qq, p + qq));
      ASSERT_EQ(cf_decode(right), Rational(p, p + qq));
    }
    for (const auto& w : level_words(2, l)) {
      const Rational x = bcf_decode(w);
      const auto [left, right] = sons(w);
      const Natural p = x.numerator(), qq = x.denominator();
      ASSERT_EQ(bcf_decode(left), Rational(p, p + qq));
      ASSERT_EQ(bcf_decode(right), Rational(qq, 2 * qq - p));
    }
  }
  for (const auto& w : level_words(0, 8)) {
    if (w.back() == 0) continue;
    const Rational x = dyadic_decode(w);
    const auto [left, right] = sons(w);
    ASSERT_EQ(dyadic_decode(left), x / Rational(2));
    ASSERT_EQ(dyadic_decode(right), (Rational(1) + x) / Rational(2));
  }
}

TEST(Continuants, DenominatorsGrow) {
  for (Letter l = 2; l <= 10; ++l)
    for (const auto& w : level_words(1, l)) {
      if (w.size() < 2) continue;
      Natural previous = 0;
      for (std::size_t i = 1; i <= w.size(); ++i) {
        const std::vector<Letter> prefix(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(i));
        const Natural den = cf_decode(w1(prefix)).denominator();
        if (i >= 2) ASSERT_GT(den, previous);
        previous = den;
      }
    }
}

// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "odometer/analysis.hpp"
#include "odometer/codecs.hpp"
#include "odometer/interval_maps.hpp"
#include "odometer/odometers.hpp"
#include "odometer/trees.hpp"
#include "odometer/word_actions.hpp"
#include "oracles.hpp"

using namespace odometer;
using oracle::q;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_seconds > 0 && secs > limit_seconds)
    c.fail("took " + std::to_string(secs) + "s, limit " + std::to_string(limit_seconds) + "s");
  if (!c.ok) ++failures;
  std::printf("%s %2d %-28s %.2fs%s%s\n", c.ok ? "PASS" : "FAIL", id, name, secs, c.ok ? "" : "  ",
              c.detail.c_str());
  std::fflush(stdout);
}

bool digits_at_least(const Rational& x, Letter k) {
  const CanonicalCF c = cf_encode(x);
  for (Letter a : c.word().letters())
    if (a < k) return false;
  return true;
}

}  // namespace

int main() {
  criterion(1, "conjugacy", 5, [](Check& c) {
    std::mt19937_64 rng(20240101);
    for (int i = 0; i < 10000 && c.ok; ++i) {
      const TailWord w = oracle::random_binary(rng);
      if (block_encode(dyadic_step(w)) != baire_step(block_encode(w))) c.fail("mismatch at " + w.to_string());
    }
  });

  criterion(2, "counting-finite-words", 10, [](Check& c) {
    const std::size_t count = (std::size_t{1} << 15) - 1;
    std::vector<std::vector<Letter>> expected;
    for (Letter l = 1; l <= 15; ++l)
      for (auto& w : oracle::sorted_level(l)) expected.push_back(std::move(w));
    if (expected.size() != count) c.fail("oracle size");
    std::size_t n = 0;
    for (const auto& w : enumerate_words(1, count)) {
      if (w.letters() != expected[n] || total_index(w) != static_cast<unsigned long>(n)) {
        c.fail("step " + std::to_string(n));
        break;
      }
      ++n;
    }
  });

  criterion(3, "adding-machine", 0, [](Check& c) {
    for (Letter l = 2; l <= 12 && c.ok; ++l)
      for (const auto& w : level_words(1, l)) {
        if (w.size() == 1) continue;
        if (total_index(step(w, Policy::Cyclic)) != total_index(w) + 1) {
          c.fail("at " + w.to_string());
          break;
        }
      }
  });

  criterion(4, "renormalization", 30, [](Check& c) {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 100 && c.ok; ++i) {
      const TailWord w(0, oracle::random_letters(rng, 0, 5, 0, 3), oracle::random_letters(rng, 1, 3, 0, 3));
      for (std::uint64_t n = 0; n <= 3; ++n)
        for (unsigned long m = 0; m <= 3; ++m) {
          const Natural e = renormalization_exponent(w, Natural(m), n);
          TailWord lhs = w.drop(n);
          for (unsigned long s = 0; s < m; ++s) lhs = baire_step(lhs);
          TailWord rhs = w;
          for (unsigned long s = 0; s < e.get_ui(); ++s) rhs = baire_step(rhs);
          if (lhs != rhs.drop(n)) c.fail(w.to_string() + " m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
    }
  });

  criterion(5, "cylinder-sweep", 0, [](Check& c) {
    std::mt19937_64 rng(5);
    for (std::size_t n = 1; n <= 10; ++n)
      for (int trial = 0; trial < 5; ++trial) {
        TailWord w = oracle::random_binary(rng);
        std::set<std::vector<Letter>> seen;
        for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) {
          seen.insert(w.prefix(n));
          w = dyadic_step(w);
        }
        if (seen.size() != (std::size_t{1} << n)) c.fail("n=" + std::to_string(n));
      }
  });

  criterion(6, "gauss-closed-form", 0, [](Check& c) {
    std::size_t cases = 0;
    for (const Rational& x : oracle::farey(200)) {
      if (x.is_zero()) continue;
      ++cases;
      if (gauss_odometer(x) != oracle::cf_value(step(cf_encode(x).word(), Policy::Cyclic).letters()))
        c.fail("at " + x.to_string());
    }
    if (cases < 12000) c.fail("only " + std::to_string(cases) + " cases");
    for (Letter l = 2; l <= 12; ++l)
      for (const auto& w : level_words(1, l)) {
        if (w.back() < 2) continue;
        const Rational start = cf_decode(w);
        const std::size_t expected = std::size_t{1} << (l - 2);
        Rational x = gauss_odometer(start);
        std::size_t period = 1;
        while (x != start && period <= expected) {
          x = gauss_odometer(x);
          ++period;
        }
        if (period != expected) c.fail("period of " + w.to_string());
      }
  });

  criterion(7, "renyi-closed-form", 0, [](Check& c) {
    for (const Rational& x : oracle::farey(200)) {
      if (x == Rational(1)) continue;
      const CanonicalBCF image = bcf_from_tail_form(baire_step(bcf_tail_form(bcf_encode(x))));
      const Rational expected = image.is_zero() ? Rational(0) : oracle::bcf_value(image.word().letters());
      if (renyi_odometer(x) != expected) c.fail("at " + x.to_string());
    }
    // Stern oracle: s(2m)/s(2m+1), m >= 0, which are exactly the ratios of
    // consecutive terms lying in [0, 1).
    const std::size_t count = std::size_t{1} << 12;
    std::vector<Rational> oracle_values;
    for (unsigned long i = 0; oracle_values.size() < count; ++i) {
      const Rational r(stern(Natural(i)), stern(Natural(i + 1)));
      if (r < Rational(1)) oracle_values.push_back(r);
    }
    Rational x(0);
    for (std::size_t m = 0; m < count; ++m) {
      if (x != oracle_values[m]) {
        c.fail("stern mismatch at " + std::to_string(m));
        break;
      }
      x = renyi_odometer(x);
    }
  });

  criterion(8, "dyadic-realization", 0, [](Check& c) {
    const std::size_t count = (std::size_t{1} << 12) - 1;
    std::size_t n = 0;
    Rational x = q(1, 2);
    for (const auto& w : orbit(FiniteWord(0, {1}), Policy::Subtree, count)) {
      if (x != dyadic_decode(w)) {
        c.fail("step " + std::to_string(n));
        break;
      }
      x = dyadic_interval_step(x);
      ++n;
    }
    std::set<Rational> seen;
    Rational y = q(1, 2);
    for (std::size_t i = 0; i < count; ++i, y = dyadic_interval_step(y)) seen.insert(y);
    bool within = seen.size() == count;
    for (const Rational& v : seen) within = within && v.denominator() <= pow2(12);
    if (!within) c.fail("not all dyadics of denominator <= 2^12");
    std::vector<Rational> first;
    y = q(1, 2);
    for (int i = 0; i < 7; ++i, y = dyadic_interval_step(y)) first.push_back(y);
    if (first != std::vector<Rational>{q(1, 2), q(1, 4), q(3, 4), q(1, 8), q(5, 8), q(3, 8), q(7, 8)})
      c.fail("first seven terms");
  });

  criterion(9, "tree-figures", 0, [](Check& c) {
    const LeafValue cf = [](const FiniteWord& w) -> std::optional<Rational> { return cf_decode(w); };
    const LeafValue bcf = [](const FiniteWord& w) -> std::optional<Rational> { return bcf_decode(w); };
    const LeafValue dy = [](const FiniteWord& w) -> std::optional<Rational> { return dyadic_decode(w); };
    if (render_rows(subtree_rows(FiniteWord(1, {1}), 4)) !=
        "(1)\n(1,1) (2)\n(1,1,1) (2,1) (1,2) (3)\n(1,1,1,1) (2,1,1) (1,2,1) (3,1) (1,1,2) (2,2) (1,3) (4)\n")
      c.fail("odometric tree");
    if (render_rows(subtree_rows(FiniteWord(0, {1}), 4), dy) !=
        "1/2\n1/4 3/4\n1/8 5/8 3/8 7/8\n1/16 9/16 5/16 13/16 3/16 11/16 7/16 15/16\n")
      c.fail("dyadic tree");
    if (render_rows(subtree_rows(FiniteWord(2, {2}), 4), bcf) !=
        "1/2\n1/3 2/3\n1/4 3/5 2/5 3/4\n1/5 4/7 3/8 5/7 2/7 5/8 3/7 4/5\n")
      c.fail("Calkin-Wilf subtree");
    if (render_rows(subtree_rows(FiniteWord(1, {2}), 4, true), cf) !=
        "1/2\n1/3 2/3\n1/4 3/4 2/5 3/5\n1/5 4/5 3/7 4/7 2/7 5/7 3/8 5/8\n")
      c.fail("Kepler tree (mirrored)");
  });

  criterion(10, "k-gauss", 0, [](Check& c) {
    for (std::int64_t k : {2, 3}) {
      std::size_t cases = 0;
      for (const Rational& x : oracle::farey(200)) {
        if (x.is_zero() || x > Rational(Natural(1), Natural(k)) || !digits_at_least(x, k)) continue;
        ++cases;
        const FiniteWord w(k, cf_encode(x).word().letters());
        if (k_gauss_odometer(x, k) != oracle::cf_value(step(w, Policy::Cyclic).letters()))
          c.fail("k=" + std::to_string(k) + " at " + x.to_string());
      }
      if (cases == 0) c.fail("no cases for k=" + std::to_string(k));
    }
    for (std::int64_t k : {1, 2, 3}) {
      const long double kk = static_cast<long double>(k);
      const long double limit = 2.0L / (kk + std::sqrt(kk * kk + 4.0L));
      const Rational g = golden_mean_k(k, 40);
      const long double value =
          static_cast<long double>(g.numerator().get_d()) / static_cast<long double>(g.denominator().get_d());
      if (std::fabs(value - limit) >= 1e-12L) c.fail("convergent k=" + std::to_string(k));
    }
  });

  criterion(11, "distribution", 60, [](Check& c) {
    const double ks = distribution_test(std::size_t{1} << 16, 1000, Reference::QuestionMark);
    const double control = distribution_test(std::size_t{1} << 16, 1000, Reference::Uniform);
    if (!(ks < 0.02)) c.fail("KS vs ? = " + std::to_string(ks));
    if (!(control > 0.1)) c.fail("uniform control = " + std::to_string(control));
    if (c.ok) c.detail = "";
  });

  criterion(12, "frequencies", 0, [](Check& c) {
    const auto table = frequency_test(0, std::size_t{1} << 16);
    for (Letter k = 0; k <= 5; ++k) {
      double freq = 0;
      for (const auto& [letter, f] : table)
        if (letter == k) freq = f;
      if (std::fabs(freq - std::ldexp(1.0, -static_cast<int>(k) - 1)) > 0.01) c.fail("letter " + std::to_string(k));
    }
  });

  std::printf("%s: %d failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}

#include "odometer/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "odometer/analysis.hpp"
#include "odometer/codecs.hpp"
#include "odometer/interval_maps.hpp"
#include "odometer/odometers.hpp"
#include "odometer/trees.hpp"
#include "odometer/word_actions.hpp"

namespace odometer {

namespace {

constexpr std::uint64_t kSeed = 20240611;

// A case body returns an empty string on success, otherwise the first mismatch.
using CaseBody = std::function<std::string()>;

CaseResult run_case(std::string name, const CaseBody& body) {
  CaseResult result{std::move(name), false, {}};
  try {
    result.detail = body();
    result.passed = result.detail.empty();
  } catch (const std::exception& e) {
    result.detail = std::string("exception: ") + e.what();
  }
  return result;
}

template <typename... Parts>
std::string concat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

std::vector<Letter> random_letters(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len, Letter lo, Letter hi) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<Letter> letter(lo, hi);
  std::vector<Letter> out(len(rng));
  for (auto& a : out) a = letter(rng);
  return out;
}

// Binary word whose tail is not all ones.
TailWord random_binary(std::mt19937_64& rng) {
  for (;;) {
    TailWord w(0, random_letters(rng, 0, 10, 0, 1), random_letters(rng, 1, 4, 0, 1));
    if (w.period() != std::vector<Letter>{1}) return w;
  }
}

// Irreducible p/q with lo <= p/q <= hi (by flags) and q <= max_q, in order of q.
template <typename Visit>
void for_each_rational(std::uint64_t max_q, bool with_zero, bool with_one, Visit visit) {
  if (with_zero) visit(Rational(0));
  for (std::uint64_t q = 1; q <= max_q; ++q)
    for (std::uint64_t p = 1; p <= q; ++p) {
      if (p == q && !(with_one && q == 1)) continue;
      if (std::gcd(p, q) != 1) continue;
      visit(Rational(Natural(static_cast<unsigned long>(p)), Natural(static_cast<unsigned long>(q))));
    }
}

std::uint64_t denominator_bound(unsigned budget) { return budget >= 12 ? 200 : 200 * budget / 12; }

// Conjugacy ------------------------------------------------------------------

std::vector<CaseResult> conjugacy_cases(unsigned budget) {
  std::vector<CaseResult> out;
  out.push_back(run_case("block recoding conjugates the dyadic and Baire odometers", [budget] {
    std::mt19937_64 rng(kSeed);
    const std::size_t samples = budget >= 12 ? 10000 : std::size_t{1} << budget;
    for (std::size_t i = 0; i < samples; ++i) {
      const TailWord w = random_binary(rng);
      const TailWord lhs = block_encode(dyadic_step(w));
      const TailWord rhs = baire_step(block_encode(w));
      if (lhs != rhs) return concat("w=", w, " gives ", lhs, " vs ", rhs);
    }
    return std::string();
  }));
  out.push_back(run_case("block_decode inverts block_encode", [budget] {
    std::mt19937_64 rng(kSeed + 1);
    for (std::size_t i = 0; i < (std::size_t{1} << budget); ++i) {
      const TailWord w = random_binary(rng);
      if (block_decode(block_encode(w)) != w) return concat("w=", w);
    }
    return std::string();
  }));
  out.push_back(run_case("interval dyadic step matches the subtree word action", [budget] {
    const std::uint64_t bits = std::min(budget, 12U);
    for (std::uint64_t m = 1; m <= bits; ++m)
      for (std::uint64_t p = 1; p < (std::uint64_t{1} << m); p += 2) {
        const Rational x(Natural(static_cast<unsigned long>(p)), pow2(m));
        const Rational lhs = dyadic_interval_step(x);
        const Rational rhs = dyadic_decode(step(dyadic_encode(x), Policy::Subtree));
        if (lhs != rhs) return concat("x=", x, " gives ", lhs, " vs ", rhs);
      }
    return std::string();
  }));
  out.push_back(run_case("interval dyadic orbit of 1/2 is the dyadic enumeration", [budget] {
    const std::size_t count = (std::size_t{1} << std::min(budget, 12U)) - 1;
    const auto expected = enumerate_rationals(System::Dyadic, count);
    Rational x(Natural(1), Natural(2));
    for (std::size_t i = 0; i < count; ++i) {
      if (x != expected[i]) return concat("term ", i, ": ", x, " vs ", expected[i]);
      x = dyadic_interval_step(x);
    }
    return std::string();
  }));
  return out;
}

// Renormalization -------------------------------------------------------------

std::vector<CaseResult> renorm_cases(unsigned budget) {
  std::vector<CaseResult> out;
  out.push_back(run_case("baire_step^m . shift^n == shift^n . baire_step^E", [budget] {
    std::mt19937_64 rng(kSeed + 2);
    const std::size_t words = budget >= 12 ? 100 : 8 * budget;
    for (std::size_t i = 0; i < words; ++i) {
      const TailWord w(0, random_letters(rng, 0, 5, 0, 3), random_letters(rng, 1, 3, 0, 3));
      for (std::uint64_t n = 0; n <= 3; ++n) {
        const Natural e1 = renormalization_exponent(w, 1, n);
        const std::uint64_t chunk = e1.get_ui();
        TailWord lhs = w.drop(n);
        TailWord rhs = w;
        for (std::uint64_t m = 1; m <= 3; ++m) {
          lhs = baire_step(lhs);
          for (std::uint64_t s = 0; s < chunk; ++s) rhs = baire_step(rhs);
          if (renormalization_exponent(w, m, n) != e1 * m) return concat("exponent not linear in m for w=", w);
          if (rhs.drop(n) != lhs) return concat("w=", w, " m=", m, " n=", n);
        }
      }
    }
    return std::string();
  }));
  out.push_back(run_case("fast_forward is additive and agrees with iteration", [budget] {
    std::mt19937_64 rng(kSeed + 3);
    std::uniform_int_distribution<unsigned long> amount(0, 1000);
    for (std::size_t i = 0; i < (std::size_t{1} << std::min(budget, 10U)); ++i) {
      const TailWord w = random_binary(rng);
      const Natural a = amount(rng);
      const Natural b = amount(rng);
      if (fast_forward(w, a + b) != fast_forward(fast_forward(w, a), b)) return concat("w=", w, " a=", a, " b=", b);
      TailWord iterated = w;
      for (unsigned long s = 0; s < a.get_ui(); ++s) iterated = dyadic_step(iterated);
      if (iterated != fast_forward(w, a)) return concat("iteration mismatch at w=", w, " a=", a);
    }
    return std::string();
  }));
  return out;
}

// Counting --------------------------------------------------------------------

std::vector<CaseResult> counting_cases(unsigned budget) {
  std::vector<CaseResult> out;
  out.push_back(run_case("top-down orbit of (1) lists every word once in order", [budget] {
    const std::size_t count = (std::size_t{1} << budget) - 1;
    std::optional<FiniteWord> prev;
    std::size_t n = 0;
    for (const auto& w : enumerate_words(1, count)) {
      if (total_index(w) != static_cast<unsigned long>(n)) return concat("step ", n, " is ", w);
      if (sum_k(w) > static_cast<std::int64_t>(budget)) return concat("step ", n, " leaves the sum bound: ", w);
      if (prev && compare_rlex(*prev, w) != std::strong_ordering::less) return concat("order breaks at step ", n);
      prev = w;
      ++n;
    }
    return std::string();
  }));
  out.push_back(run_case("odometer adds one to total_index on words of length > 1", [budget] {
    for (Letter floor : {0, 1, 2})
      for (std::int64_t l = 1; l <= static_cast<std::int64_t>(budget); ++l)
        for (const auto& w : level_words(floor, l)) {
          if (w.size() < 2) continue;
          if (total_index(step(w, Policy::Cyclic)) != total_index(w) + 1) return concat("w=", w, " floor ", floor);
        }
    return std::string();
  }));
  for (System s : {System::Cf, System::Bcf, System::Dyadic}) {
    out.push_back(run_case(concat(to_string(s), " enumeration has no repeats and rising index"), [budget, s] {
      const std::size_t count = std::size_t{1} << (s == System::Cf ? budget + 2 : budget);
      const EnumerationReport report = audit_enumeration(s, count);
      if (report.first_collision) return concat("collision at ", *report.first_collision);
      if (report.order_violation) return concat("order violation at ", *report.order_violation);
      return std::string();
    }));
  }
  out.push_back(run_case("top-down orbit of (2) hits each rational twice", [budget] {
    const MultiplicityReport report = multiplicity_audit((std::size_t{1} << budget) - 3);
    if (report.first_violation) return concat("violation at orbit index ", *report.first_violation);
    return std::string();
  }));
  return out;
}

// Oracles -----------------------------------------------------------------------

std::string compare_sequences(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) return concat("lengths ", a.size(), " and ", b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return concat("term ", i, ": ", a[i], " vs ", b[i]);
  return std::string();
}

std::vector<CaseResult> oracle_cases(unsigned budget) {
  std::vector<CaseResult> out;
  const std::uint64_t max_q = denominator_bound(budget);
  const std::size_t count = std::size_t{1} << budget;

  out.push_back(run_case("Gauss closed form equals the cyclic word action", [max_q] {
    const CmiMap map = gauss_cmi();
    std::string failure;
    for_each_rational(max_q, false, true, [&](const Rational& x) {
      if (!failure.empty()) return;
      const Rational expected = cf_decode(step(cf_encode(x).word(), Policy::Cyclic));
      const Rational closed = gauss_odometer(x, Boundary::Right);
      if (closed != expected) failure = concat("x=", x, " closed form ", closed, " vs ", expected);
      else if (cmi_odometer(map, x, 4096) != expected) failure = concat("x=", x, " through the interval map");
    });
    return failure;
  }));
  out.push_back(run_case("Renyi closed form equals the BCF word action", [max_q] {
    const CmiMap map = renyi_cmi();
    std::string failure;
    for_each_rational(max_q, true, false, [&](const Rational& x) {
      if (!failure.empty()) return;
      const Rational expected = bcf_decode(bcf_from_tail_form(baire_step(bcf_tail_form(bcf_encode(x)))));
      const Rational closed = renyi_odometer(x);
      if (closed != expected) failure = concat("x=", x, " closed form ", closed, " vs ", expected);
      else if (cmi_odometer(map, x, 4096) != expected) failure = concat("x=", x, " through the interval map");
    });
    return failure;
  }));
  for (std::int64_t k : {2, 3}) {
    out.push_back(run_case(concat("k-Gauss closed form equals the floor-", k, " word action"), [max_q, k] {
      const CmiMap map = restricted_gauss_cmi(k);
      std::string failure;
      std::size_t admissible = 0;
      for_each_rational(max_q, false, true, [&](const Rational& x) {
        if (!failure.empty()) return;
        const std::vector<Letter> digits = cf_encode(x).word().letters();
        if (std::any_of(digits.begin(), digits.end(), [k](Letter a) { return a < k; })) return;
        ++admissible;
        const Rational expected = cf_decode(step(FiniteWord(k, digits), Policy::Cyclic));
        const Rational closed = k_gauss_odometer(x, k, Boundary::Right);
        if (closed != expected) failure = concat("x=", x, " closed form ", closed, " vs ", expected);
        else if (cmi_odometer(map, x, 4096) != expected) failure = concat("x=", x, " through the interval map");
      });
      if (failure.empty() && admissible == 0) failure = "no admissible rationals";
      return failure;
    }));
  }
  out.push_back(run_case("k-golden means from the convergents", [] {
    for (std::int64_t k : {1, 2, 3}) {
      const double limit = 2.0 / (static_cast<double>(k) + std::sqrt(static_cast<double>(k * k + 4)));
      const double approx = golden_mean_k(k, 40).to_double();
      if (std::abs(approx - limit) >= 1e-12) return concat("k=", k, " error ", std::abs(approx - limit));
    }
    return std::string();
  }));
  out.push_back(run_case("Renyi orbit of 0 equals the Stern sequence oracle", [count] {
    return compare_sequences(enumerate_rationals(System::Bcf, count, Offset::Zero), stern_oracle(count));
  }));
  out.push_back(run_case("BCF son-rule traversal equals the Renyi orbit of 1/2", [count] {
    return compare_sequences(enumerate_rationals(System::Bcf, count, Offset::Root), bfs_oracle(System::Bcf, count));
  }));
  out.push_back(run_case("CF son-rule traversal equals the subtree enumeration", [count] {
    return compare_sequences(enumerate_rationals(System::Cf, count), bfs_oracle(System::Cf, count));
  }));
  out.push_back(run_case("CF closed-form orbit equals the subtree enumeration", [count] {
    // Fibonacci formula inside the branches, the subtree jump at x = 1/m.
    std::vector<Rational> orbit_values;
    Rational x(Natural(1), Natural(2));
    for (std::size_t i = 0; i < count; ++i) {
      orbit_values.push_back(x);
      const CanonicalCF w = cf_encode(x);
      x = w.word().size() > 1 ? gauss_odometer(x) : cf_decode(step(w.word(), Policy::Subtree));
    }
    return compare_sequences(orbit_values, enumerate_rationals(System::Cf, count));
  }));
  out.push_back(run_case("dyadic son-rule traversal equals the subtree enumeration", [count] {
    return compare_sequences(enumerate_rationals(System::Dyadic, count), bfs_oracle(System::Dyadic, count));
  }));
  return out;
}

// Periods ----------------------------------------------------------------------

std::vector<CaseResult> period_cases(unsigned budget) {
  std::vector<CaseResult> out;
  out.push_back(run_case("cyclic orbits close after 2^(l-1) words of sum l", [budget] {
    for (std::int64_t l = 1; l <= static_cast<std::int64_t>(budget); ++l) {
      const FiniteWord start(1, {l});
      std::unordered_set<FiniteWord, FiniteWordHash> seen;
      FiniteWord w = start;
      std::size_t period = 0;
      do {
        if (sum_k(w) != l) return concat("level changed at ", w);
        seen.insert(w);
        w = step(w, Policy::Cyclic);
        ++period;
      } while (w != start && period <= (std::size_t{1} << l));
      if (period != (std::size_t{1} << (l - 1)) || seen.size() != period) return concat("level ", l, " period ", period);
    }
    return std::string();
  }));
  out.push_back(run_case("Gauss odometer period of [a1..an] is 2^(sum-2)", [budget] {
    std::unordered_set<Rational, RationalHash> done;
    for (std::int64_t l = 2; l <= static_cast<std::int64_t>(budget); ++l)
      for (const auto& w : level_words(1, l)) {
        if (w.back() < 2) continue;
        const Rational start = cf_decode(w);
        if (done.count(start)) continue;
        Rational x = start;
        std::size_t period = 0;
        const std::size_t expected = std::size_t{1} << (l - 2);
        do {
          if (sum_k(cf_encode(x).word()) != l) return concat("orbit of ", start, " leaves level ", l);
          done.insert(x);
          x = gauss_odometer(x);
          ++period;
        } while (x != start && period <= expected);
        if (period != expected) return concat("x=", start, " period ", period, " expected ", expected);
      }
    return std::string();
  }));
  out.push_back(run_case("2^n dyadic steps sweep every cylinder of length n", [budget] {
    std::mt19937_64 rng(kSeed + 4);
    for (std::size_t n = 1; n <= std::min<std::size_t>(budget, 10); ++n)
      for (int trial = 0; trial < 4; ++trial) {
        TailWord w = random_binary(rng);
        std::set<std::vector<Letter>> prefixes;
        for (std::size_t s = 0; s < (std::size_t{1} << n); ++s) {
          prefixes.insert(w.prefix(n));
          w = dyadic_step(w);
        }
        if (prefixes.size() != (std::size_t{1} << n)) return concat("n=", n, " reached ", prefixes.size(), " cylinders");
      }
    return std::string();
  }));
  return out;
}

// Distribution ------------------------------------------------------------------

std::vector<CaseResult> distribution_cases(unsigned budget) {
  std::vector<CaseResult> out;
  const std::size_t count = std::size_t{1} << std::clamp(budget + 4, 10U, 16U);
  out.push_back(run_case("CF enumeration follows the question mark function", [count] {
    const double ks = distribution_test(count, 1000, Reference::QuestionMark);
    const double bound = count >= (std::size_t{1} << 16) ? 0.02 : 0.05;
    if (ks >= bound) return concat("KS ", ks, " at ", count, " terms");
    return std::string();
  }));
  out.push_back(run_case("CF enumeration is far from uniform", [count] {
    const double ks = distribution_test(count, 1000, Reference::Uniform);
    if (ks <= 0.1) return concat("KS ", ks, " at ", count, " terms");
    return std::string();
  }));
  out.push_back(run_case("first-letter frequencies along the Baire odometer", [budget] {
    const std::size_t steps = std::size_t{1} << std::clamp(budget + 4, 10U, 16U);
    for (const auto& [letter, freq] : frequency_test(0, steps)) {
      if (letter > 5) continue;
      const double expected = std::ldexp(1.0, static_cast<int>(-letter - 1));
      if (std::abs(freq - expected) >= 0.01) return concat("letter ", letter, " frequency ", freq);
    }
    return std::string();
  }));
  return out;
}

}  // namespace

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Conjugacy:
      return "conjugacy";
    case Suite::Renorm:
      return "renorm";
    case Suite::Counting:
      return "counting";
    case Suite::Oracles:
      return "oracles";
    case Suite::Periods:
      return "periods";
    case Suite::Distribution:
      return "distribution";
  }
  return "?";
}

std::vector<Suite> parse_suites(std::string_view name) {
  const std::vector<Suite> all{Suite::Conjugacy, Suite::Renorm,  Suite::Counting,
                               Suite::Oracles,   Suite::Periods, Suite::Distribution};
  if (name == "all") return all;
  for (Suite s : all)
    if (to_string(s) == name) return {s};
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

bool SuiteResult::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; });
}

SuiteResult run_suite(Suite suite, unsigned budget) {
  if (budget < 4) throw std::invalid_argument("verify: budget must be at least 4");
  const auto start = std::chrono::steady_clock::now();
  SuiteResult result{suite, {}, 0.0};
  switch (suite) {
    case Suite::Conjugacy:
      result.cases = conjugacy_cases(budget);
      break;
    case Suite::Renorm:
      result.cases = renorm_cases(budget);
      break;
    case Suite::Counting:
      result.cases = counting_cases(budget);
      break;
    case Suite::Oracles:
      result.cases = oracle_cases(budget);
      break;
    case Suite::Periods:
      result.cases = period_cases(budget);
      break;
    case Suite::Distribution:
      result.cases = distribution_cases(budget);
      break;
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<SuiteResult> run_suites(const std::vector<Suite>& suites, unsigned budget) {
  if (budget < 4) throw std::invalid_argument("verify: budget must be at least 4");
  std::vector<std::future<SuiteResult>> pending;
  pending.reserve(suites.size());
  for (Suite s : suites) pending.push_back(std::async(std::launch::async, run_suite, s, budget));
  std::vector<SuiteResult> results;
  results.reserve(suites.size());
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

}  // namespace odometer

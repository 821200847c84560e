#include "odometer/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "odometer/codecs.hpp"
#include "odometer/interval_maps.hpp"
#include "odometer/odometers.hpp"
#include "odometer/word_actions.hpp"

namespace odometer {

std::string_view to_string(System s) {
  switch (s) {
    case System::Cf:
      return "cf";
    case System::Bcf:
      return "bcf";
    case System::Dyadic:
      return "dyadic";
  }
  return "?";
}

System parse_system(std::string_view name) {
  if (name == "cf") return System::Cf;
  if (name == "bcf") return System::Bcf;
  if (name == "dyadic") return System::Dyadic;
  throw std::invalid_argument("unknown system '" + std::string(name) + "'");
}

Offset parse_offset(std::string_view name) {
  if (name == "root") return Offset::Root;
  if (name == "zero") return Offset::Zero;
  throw std::invalid_argument("unknown offset '" + std::string(name) + "'");
}

Offset default_offset(System s) { return s == System::Bcf ? Offset::Zero : Offset::Root; }

Natural stern(const Natural& n) {
  if (n < 0) throw std::invalid_argument("stern: negative index");
  // Invariant: s(original) = a s(m) + b s(m+1) for the remaining m.
  Natural a = 1, b = 0;
  const std::size_t bits = n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(n.get_mpz_t(), i))
      b += a;
    else
      a += b;
  }
  return b;
}

std::vector<Rational> enumerate_rationals(System system, std::size_t count, std::optional<Offset> offset) {
  const Offset off = offset.value_or(default_offset(system));
  std::vector<Rational> out;
  out.reserve(count);
  if (count == 0) return out;
  if (off == Offset::Zero) out.emplace_back(0);

  const std::size_t remaining = count - out.size();
  switch (system) {
    case System::Bcf: {
      Rational x(Natural(1), Natural(2));
      for (std::size_t i = 0; i < remaining; ++i) {
        out.push_back(x);
        x = renyi_odometer(x);
      }
      break;
    }
    case System::Cf:
      for (const auto& w : orbit(FiniteWord(1, {2}), Policy::Subtree, remaining)) out.push_back(cf_decode(w));
      break;
    case System::Dyadic:
      for (const auto& w : orbit(FiniteWord(0, {1}), Policy::Subtree, remaining)) out.push_back(dyadic_decode(w));
      break;
  }
  return out;
}

std::optional<FiniteWord> system_word(System system, const Rational& x) {
  if (x.is_zero()) return std::nullopt;
  switch (system) {
    case System::Cf:
      return cf_encode(x).word();
    case System::Bcf:
      return bcf_encode(x).word();
    case System::Dyadic:
      return dyadic_encode(x);
  }
  return std::nullopt;
}

std::vector<Rational> bfs_oracle(System system, std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  std::deque<Rational> queue{Rational(Natural(1), Natural(2))};
  while (out.size() < count) {
    Rational x = queue.front();
    queue.pop_front();
    const Natural p = x.numerator();
    const Natural q = x.denominator();
    switch (system) {
      case System::Dyadic:
        queue.push_back(x / Rational(2));
        queue.push_back((Rational(1) + x) / Rational(2));
        break;
      case System::Cf:
        queue.emplace_back(q, p + q);
        queue.emplace_back(p, p + q);
        break;
      case System::Bcf:
        queue.emplace_back(p, p + q);
        queue.emplace_back(q, 2 * q - p);
        break;
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Rational> stern_oracle(std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t m = 0; m < count; ++m) {
    const Natural i = Natural(static_cast<unsigned long>(m)) * 2;
    out.emplace_back(stern(i), stern(i + 1));
  }
  return out;
}

EnumerationReport audit_enumeration(System system, std::size_t count) {
  EnumerationReport report{system, count, std::nullopt, std::nullopt};
  const std::vector<Rational> values = enumerate_rationals(system, count);
  std::unordered_set<Rational, RationalHash> seen;
  std::optional<Natural> last_index;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!seen.insert(values[i]).second && !report.first_collision) report.first_collision = i;
    const auto word = system_word(system, values[i]);
    if (!word) continue;
    Natural index = total_index(*word);
    if (last_index && index <= *last_index && !report.order_violation) report.order_violation = i;
    last_index = std::move(index);
  }
  return report;
}

MultiplicityReport multiplicity_audit(std::size_t count) {
  const std::size_t span = count + 3;
  if (count < 5 || (span & (span - 1)) != 0)
    throw std::invalid_argument("multiplicity_audit: count must be 2^L - 3 with L >= 3");

  MultiplicityReport report;
  report.count = count;
  // value -> (level, position) of its first occurrence and the number seen
  struct Seen {
    std::int64_t level;
    Natural position;
    int hits;
  };
  std::unordered_map<Rational, Seen, RationalHash> seen;
  std::size_t i = 0;
  for (const auto& w : orbit(FiniteWord(1, {2}), Policy::TopDown, count)) {
    const std::int64_t level = sum_k(w);
    report.max_level = std::max(report.max_level, level);
    if (level >= 3) {
      const Rational value = cf_decode(w);
      const Natural pos = position_index(w);
      auto [it, fresh] = seen.try_emplace(value, Seen{level, pos, 0});
      ++it->second.hits;
      if (!fresh) {
        const Natural gap = abs(pos - it->second.position);
        const bool ok = it->second.level == level && it->second.hits == 2 &&
                        gap == pow2(static_cast<std::uint64_t>(level - 2));
        if (!ok && !report.first_violation) report.first_violation = i;
      }
    }
    ++i;
  }
  for (const auto& [value, s] : seen)
    if (s.hits != 2 && !report.first_violation) report.first_violation = count;
  report.distinct_values = seen.size();
  return report;
}

double distribution_test(std::size_t count, std::size_t grid, Reference reference) {
  if (count < (std::size_t{1} << 10)) throw std::invalid_argument("distribution_test: count must be >= 2^10");
  if (grid == 0) throw std::invalid_argument("distribution_test: grid must be positive");
  std::vector<Rational> values = enumerate_rationals(System::Cf, count, Offset::Root);
  std::sort(values.begin(), values.end());

  double ks = 0.0;
  for (std::size_t i = 0; i <= grid; ++i) {
    const Rational g(Natural(static_cast<unsigned long>(i)), Natural(static_cast<unsigned long>(grid)));
    const auto below = static_cast<double>(std::upper_bound(values.begin(), values.end(), g) - values.begin());
    const double empirical = below / static_cast<double>(values.size());
    const double expected = reference == Reference::QuestionMark ? question_mark(g).to_double() : g.to_double();
    ks = std::max(ks, std::abs(empirical - expected));
  }
  return ks;
}

std::vector<std::pair<Letter, double>> frequency_test(Letter word_floor, std::size_t steps) {
  if (steps < (std::size_t{1} << 10)) throw std::invalid_argument("frequency_test: steps must be >= 2^10");
  std::map<Letter, std::size_t> hits;
  TailWord w = TailWord::constant(word_floor, word_floor);
  for (std::size_t i = 0; i < steps; ++i) {
    ++hits[w.letter(1)];
    w = baire_step(w);
  }
  std::vector<std::pair<Letter, double>> table;
  for (const auto& [letter, n] : hits) table.emplace_back(letter, static_cast<double>(n) / static_cast<double>(steps));
  return table;
}

}  // namespace odometer

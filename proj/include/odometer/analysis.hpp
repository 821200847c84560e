#pragma once

// Rational enumerations driven by the odometer, and oracles that rebuild the
// same sequences by independent routes (son rules, Stern's sequence), plus
// the statistical probes.

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "odometer/rational.hpp"
#include "odometer/words.hpp"

namespace odometer {

/// Which numeration identifies words with rationals:
///   Cf     continued fractions, subtree of (2) in the floor-1 tree (Kepler)
///   Bcf    backward continued fractions, floor-2 tree (Calkin-Wilf, (0,1) part)
///   Dyadic binary blocks, subtree of (1) in the floor-0 tree
enum class System { Cf, Bcf, Dyadic };

/// Root starts at the tree root 1/2; Zero puts 0 first.
enum class Offset { Root, Zero };

std::string_view to_string(System s);
System parse_system(std::string_view name);
Offset parse_offset(std::string_view name);

/// Bcf defaults to Zero (the Renyi odometer's base point), the others to Root.
Offset default_offset(System s);

/// Stern's diatomic sequence: s(0)=0, s(1)=1, s(2n)=s(n), s(2n+1)=s(n)+s(n+1).
Natural stern(const Natural& n);

/// The first `count` rationals of the odometer enumeration.
///   Dyadic: dyadic values along the subtree orbit of (1), floor 0
///   Cf:     continued fraction values along the subtree orbit of (2), floor 1
///   Bcf:    the closed-form Renyi odometer orbit of 0 (or of 1/2 for Root)
std::vector<Rational> enumerate_rationals(System system, std::size_t count, std::optional<Offset> offset = std::nullopt);

/// The word attached to an enumerated value (std::nullopt for 0).
std::optional<FiniteWord> system_word(System system, const Rational& x);

/// Breadth-first traversal of the rational son rules from the root 1/2:
///   Dyadic x -> x/2, (1+x)/2
///   Cf     p/q -> q/(p+q), p/(p+q)
///   Bcf    p/q -> p/(p+q), q/(2q-p)
std::vector<Rational> bfs_oracle(System system, std::size_t count);

/// s(2m)/s(2m+1) for m = 0 .. count-1: the entries of the Calkin-Wilf
/// breadth-first sequence s(i)/s(i+1) lying in [0, 1), with 0 first.
std::vector<Rational> stern_oracle(std::size_t count);

/// Collision / order audit of an enumeration prefix. The order check maps
/// every value back to its word and requires strictly increasing total_index.
struct EnumerationReport {
  System system;
  std::size_t count = 0;
  std::optional<std::size_t> first_collision;
  std::optional<std::size_t> order_violation;
  bool passed() const { return !first_collision && !order_violation; }
};

EnumerationReport audit_enumeration(System system, std::size_t count);

/// Twin audit of the top-down orbit of (2) in the floor-1 tree: on every
/// level l >= 3 each continued fraction value occurs exactly twice, at
/// positions 2^(l-2) apart.
struct MultiplicityReport {
  std::size_t count = 0;
  std::int64_t max_level = 0;
  std::size_t distinct_values = 0;
  std::optional<std::size_t> first_violation;  // orbit index
  bool passed() const { return !first_violation; }
};

/// `count` must cover whole levels: count = 2^L - 3 for some L >= 3.
/// Throws std::invalid_argument otherwise.
MultiplicityReport multiplicity_audit(std::size_t count);

enum class Reference { QuestionMark, Uniform };

/// Kolmogorov-Smirnov distance, sampled at the grid points i/grid, between
/// the empirical CDF of the first `count` Cf-enumerated rationals and the
/// reference CDF. Throws std::invalid_argument if count < 2^10 or grid == 0.
double distribution_test(std::size_t count, std::size_t grid, Reference reference = Reference::QuestionMark);

/// Empirical first-letter frequencies along `steps` words of the Baire
/// odometer orbit of the constant word (floor, floor, ...), sorted by
/// letter. Throws std::invalid_argument if steps < 2^10.
std::vector<std::pair<Letter, double>> frequency_test(Letter word_floor, std::size_t steps);

}  // namespace odometer

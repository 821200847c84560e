#pragma once

// Interval realizations of the odometer. Every map here acts exactly on
// rationals; branch indices are found by exact comparison.

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "odometer/rational.hpp"
#include "odometer/word_actions.hpp"
#include "odometer/words.hpp"

namespace odometer {

/// G(x) = 1/x - floor(1/x) on (0, 1]. Throws std::domain_error outside.
Rational gauss(const Rational& x);

/// R(x) = 1/(1-x) - floor(1/(1-x)) on [0, 1). Throws std::domain_error outside.
Rational renyi(const Rational& x);

/// x + 3/2^n - 1 for x in [1 - 2^(1-n), 1 - 2^(-n)), n >= 1.
Rational dyadic_interval_step(const Rational& x);

/// Terms of b_{n+1} = k b_n + b_{n-1} (b_0 = 0, b_1 = 1) and
/// d_{n+1} = k d_n + d_{n-1} (d_0 = d_1 = 1). k = 1 gives f_n and f_{n+1}.
struct FibPair {
  std::uint64_t index;
  Natural b;
  Natural d;
};

/// Throws std::invalid_argument if k < 1.
FibPair fib(std::int64_t k, std::uint64_t n);

/// How the Gauss odometer acts on the branch endpoints 1/n.
///   Right : continuous from the right, [n] -> [1^(n-2) 2] (the cyclic action);
///           every rational is periodic.
///   Left  : continuous from the left, [n] -> [1^(n-1)]; orbits climb to 1.
/// Both fix 1.
enum class Boundary { Right, Left };

std::string_view to_string(Boundary b);
/// "right" | "left". Throws std::invalid_argument.
Boundary parse_boundary(std::string_view name);

/// Closed form of the Gauss odometer on (0, 1]: on [1/(n+1), 1/n),
///   (x (f_{n-1} - n f_n) + f_n) / (x (f_n - n f_{n+1}) + f_{n+1}).
Rational gauss_odometer(const Rational& x, Boundary boundary = Boundary::Right);

/// Closed form of the Renyi odometer on [0, 1):
///   1 / (2 floor(y) + 1 - y),  y = 1/(1-x).
Rational renyi_odometer(const Rational& x);

/// Odometer of the Gauss map restricted to continued fractions with all
/// digits >= k. With first digit m = n + k, on the interior of the branch
///   (x (b_n - m d_n) + d_n) / (x (b_{n+1} - m d_{n+1}) + d_{n+1}).
/// At x = 1/m, Right gives b_{n+1}/b_{n+2} and Left gives b_n/b_{n+1}
/// (1/k is fixed under Left). Throws std::domain_error if x is outside
/// (0, 1/k] or has a digit below k; std::invalid_argument if k < 1.
Rational k_gauss_odometer(const Rational& x, std::int64_t k, Boundary boundary = Boundary::Right);

/// The coefficient pattern
///   (x (b_n - n d_{n+1}) + d_{n+1}) / (x (b_{n+1} - n d_{n+2}) + d_{n+2})
/// on [1/(n+1+k), 1/(n+k)), kept for comparison with k_gauss_odometer; it
/// does not agree with the digit action.
Rational k_gauss_odometer_indexed(const Rational& x, std::int64_t k);

/// b_n / b_{n+1}, which tends to 2 / (k + sqrt(k^2 + 4)). Throws
/// std::invalid_argument if n < 1 or k < 1.
Rational golden_mean_k(std::int64_t k, std::uint64_t n);

/// A countable-Markov interval map described by its coding.
struct CmiMap {
  /// Branch index of x, or std::nullopt when x leaves the domain (the orbit
  /// of x is finite and its coding stops).
  std::function<std::optional<Letter>(const Rational&)> digit;
  /// The map itself on a point with a digit.
  std::function<Rational(const Rational&)> apply;
  /// The inverse branch: branch_inverse(digit(x), apply(x)) == x.
  std::function<Rational(Letter, const Rational&)> branch_inverse;
  /// Smallest branch index.
  Letter floor = 1;
  /// A fixed point coded by a constant tail; reaching it ends the coding
  /// with an infinite word.
  std::optional<Rational> tail_point;
  /// Action on codings of length one.
  Policy length_one = Policy::Cyclic;
};

CmiMap gauss_cmi();
CmiMap renyi_cmi();
/// Gauss map restricted to digits >= k.
CmiMap restricted_gauss_cmi(std::int64_t k);

/// Codes x by iterating the map, applies the odometer to the coding, and
/// maps the result back through the inverse branches. Throws
/// std::runtime_error if x is not identified within depth_limit digits.
Rational cmi_odometer(const CmiMap& map, const Rational& x, std::size_t depth_limit);

/// Minkowski question mark function on [0, 1] via the alternating series
/// 2 * sum (-1)^(i+1) 2^-(a_1 + ... + a_i) over the continued fraction
/// digits. Terms below 2^-precision_bits are dropped; precision_bits = 0
/// keeps every term, which is exact on rationals.
Rational question_mark(const Rational& x, unsigned precision_bits = 0);

}  // namespace odometer

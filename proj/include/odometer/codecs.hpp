#pragma once

// Word <-> rational codecs. All arithmetic is exact.
//
//   continued fraction     x = 1/(a1 + 1/(a2 + ...)),      digits >= 1
//   backward cont. frac.   x = 1 - 1/(a1 - 1/(a2 - ...)),  digits >= 2
//   dyadic                 binary digits grouped into blocks 1^m 0

#include <optional>

#include "odometer/rational.hpp"
#include "odometer/words.hpp"

namespace odometer {

/// Floor-1 word whose last letter is >= 2, or the word (1) standing for 1.
class CanonicalCF {
 public:
  /// Throws std::invalid_argument when the word is not canonical.
  explicit CanonicalCF(FiniteWord word);
  const FiniteWord& word() const { return word_; }
  friend bool operator==(const CanonicalCF&, const CanonicalCF&) = default;

 private:
  FiniteWord word_;
};

/// Floor-2 word, or the Zero marker for the rational 0 (whose only
/// expansion is the infinite all-2s word).
class CanonicalBCF {
 public:
  static CanonicalBCF zero() { return CanonicalBCF(); }
  /// Throws std::invalid_argument if some digit is below 2.
  explicit CanonicalBCF(FiniteWord word);

  bool is_zero() const { return !word_.has_value(); }
  /// Precondition: !is_zero().
  const FiniteWord& word() const { return *word_; }
  friend bool operator==(const CanonicalBCF&, const CanonicalBCF&) = default;

 private:
  CanonicalBCF() = default;
  std::optional<FiniteWord> word_;
};

/// Euclidean digits of x in (0, 1]; a trailing 1 is folded into its
/// predecessor, and 1 encodes as (1). Throws std::domain_error out of range.
CanonicalCF cf_encode(const Rational& x);

/// Exact value through the continuant recurrences. Accepts non-canonical
/// words; throws std::invalid_argument if some letter is 0.
Rational cf_decode(const FiniteWord& w);

/// The other finite expansion: (..., a_n) -> (..., a_n - 1, 1). Same value,
/// same sum. Throws std::invalid_argument if the last letter is below 2.
FiniteWord twin(const FiniteWord& w);

/// Digits of x in [0, 1); 0 encodes as Zero. Throws std::domain_error out of range.
CanonicalBCF bcf_encode(const Rational& x);

/// Exact value; throws std::invalid_argument if some letter is below 2.
Rational bcf_decode(const FiniteWord& w);
Rational bcf_decode(const CanonicalBCF& w);

/// Finite expansion -> the infinite one ending in 2s:
/// (a1, ..., an) -> (a1, ..., a_{n-1}, a_n + 1, 2, 2, ...); Zero -> (2, 2, ...).
TailWord bcf_tail_form(const CanonicalBCF& w);
/// Inverse of bcf_tail_form. Throws std::invalid_argument unless the word
/// has floor 2 and period (2).
CanonicalBCF bcf_from_tail_form(const TailWord& w);

/// Binary digits of x = p / 2^m in (0, 1), grouped into blocks 1^m 0 with the
/// final run of ones coded by its length. The result has last letter >= 1.
/// Throws std::domain_error if x is not dyadic or not in (0, 1).
FiniteWord dyadic_encode(const Rational& x);

/// Value of the floor-0 word: blocks 1^{w_i} 0 for all but the last letter,
/// then 1^{w_j}.
Rational dyadic_decode(const FiniteWord& w);

}  // namespace odometer

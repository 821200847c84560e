#pragma once

// Finite words over {k, k+1, ...}, eventually periodic infinite words, the
// block recoding between binary sequences and sequences of naturals, and the
// level/position arithmetic that places finite words in the odometric trees.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "odometer/rational.hpp"

namespace odometer {

using Letter = std::int64_t;

/// A nonempty word over the alphabet {floor, floor+1, ...}.
class FiniteWord {
 public:
  /// Throws std::invalid_argument if `letters` is empty, `floor` is negative,
  /// or some letter is below `floor`.
  FiniteWord(Letter floor, std::vector<Letter> letters);

  Letter floor() const { return floor_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// "(4,2,1)"
  std::string to_string() const;

  friend bool operator==(const FiniteWord&, const FiniteWord&) = default;

 private:
  Letter floor_;
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const FiniteWord& w);

struct FiniteWordHash {
  std::size_t operator()(const FiniteWord& w) const;
};

/// An eventually periodic infinite word pre . per . per . ...
///
/// Always stored in canonical form: the period is primitive and the last
/// preperiod letter differs from the last period letter. Two TailWords denote
/// the same sequence iff they compare equal.
class TailWord {
 public:
  /// Throws std::invalid_argument on an empty period, negative floor, or a
  /// letter below `floor`.
  TailWord(Letter floor, std::vector<Letter> preperiod, std::vector<Letter> period);

  /// The constant word (c, c, c, ...).
  static TailWord constant(Letter floor, Letter c) { return TailWord(floor, {}, {c}); }

  Letter floor() const { return floor_; }
  const std::vector<Letter>& preperiod() const { return pre_; }
  const std::vector<Letter>& period() const { return per_; }

  /// 1-based letter access, total for i >= 1.
  Letter letter(std::uint64_t i) const;
  /// The first n letters.
  std::vector<Letter> prefix(std::size_t n) const;

  /// The word with its first `count` letters removed (shift^count).
  TailWord drop(std::uint64_t count) const;
  /// The word `head` followed by this word.
  TailWord prepend(std::span<const Letter> head) const;

  /// True when every letter is 0 or 1 (floor 0).
  bool is_binary() const;

  /// "1,1,0;0" : preperiod letters, ';', period letters.
  std::string to_string() const;
  /// Accepts the to_string() form; a missing ';' is an error.
  static TailWord parse(Letter floor, const std::string& text);

  friend bool operator==(const TailWord&, const TailWord&) = default;

  /// Sequential letter access for bounded-depth queries.
  class Cursor {
   public:
    explicit Cursor(const TailWord& w) : word_(&w) {}
    Letter next();

   private:
    const TailWord* word_;
    std::size_t index_ = 0;
  };
  Cursor cursor() const { return Cursor(*this); }

 private:
  void normalize();

  Letter floor_;
  std::vector<Letter> pre_;
  std::vector<Letter> per_;
};

std::ostream& operator<<(std::ostream& os, const TailWord& w);

/// (level, position) of a leaf in an odometric tree, 0 <= position < 2^(level-1).
class TreeAddress {
 public:
  /// Throws std::invalid_argument when level < 1 or position is out of range.
  TreeAddress(std::int64_t level, Natural position);

  std::int64_t level() const { return level_; }
  const Natural& position() const { return position_; }

  friend bool operator==(const TreeAddress& a, const TreeAddress& b) {
    return a.level_ == b.level_ && a.position_ == b.position_;
  }

 private:
  std::int64_t level_;
  Natural position_;
};

std::ostream& operator<<(std::ostream& os, const TreeAddress& a);

/// k-sum: sum of letters minus length * (floor - 1). Equals the ordinary sum of
/// the word shifted to floor 1, so it is >= 1 and is the tree level.
std::int64_t sum_k(const FiniteWord& w);

/// Position of w within its tree level: the binary string formed by the
/// blocks 0 1^(a-1) of the floor-1 letters a, read from the last letter to
/// the first. Always < 2^(sum_k(w) - 1).
Natural position_index(const FiniteWord& w);

/// Inverse of position_index at a fixed level. Throws std::out_of_range if
/// position >= 2^(level-1), std::invalid_argument if level < 1 or floor < 0.
FiniteWord word_at(std::int64_t level, const Natural& position, Letter floor);

/// Reverse lexicographic order: smaller k-sum first, ties broken by comparing
/// letters from the last one backwards. Throws std::invalid_argument on a
/// floor mismatch.
std::strong_ordering compare_rlex(const FiniteWord& a, const FiniteWord& b);

/// Reinterprets w over another alphabet floor, shifting every letter by
/// (to_floor - floor). Throws std::invalid_argument if to_floor < 0.
FiniteWord shift_alphabet(const FiniteWord& w, Letter to_floor);

/// Index of w in the reverse lexicographic enumeration: 2^(s-1) + n - 1.
Natural total_index(const FiniteWord& w);

/// Parses the binary word into blocks 1^k 0 and returns the sequence of k.
/// Throws std::invalid_argument if w is not binary or ends in all ones.
TailWord block_encode(const TailWord& w);

/// Concatenates the blocks 1^k 0 of a word over the naturals (floor 0).
/// Throws std::invalid_argument if v has a nonzero floor.
TailWord block_decode(const TailWord& v);

/// Parses "(4,2,1)", "4,2,1" or "4 2 1". Throws std::invalid_argument.
FiniteWord parse_word(Letter floor, const std::string& text);

// JSON: {"floor":k,"word":[...]} and {"pre":[...],"per":[...],"floor":k}.
void to_json(nlohmann::json& j, const FiniteWord& w);
void to_json(nlohmann::json& j, const TailWord& w);
FiniteWord finite_word_from_json(const nlohmann::json& j);
TailWord tail_word_from_json(const nlohmann::json& j);

}  // namespace odometer

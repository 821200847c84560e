#pragma once

#include <cstddef>
#include <iterator>
#include <optional>
#include <string_view>
#include <vector>

#include "odometer/words.hpp"

namespace odometer {

/// What the odometer does to a word of length one, where the carry rule
/// leaves the choice open.
///   Cyclic  : (w1) -> k repeated w1-k+1 times (leftmost leaf of the same level)
///   TopDown : (w1) -> k repeated w1-k+2 times (leftmost leaf of the next level)
///   Subtree : (w1) -> (k repeated w1-k times, k+1) (leftmost leaf of the next
///             level whose last letter exceeds k)
enum class Policy { Cyclic, TopDown, Subtree };

std::string_view to_string(Policy p);
/// "cyclic" | "topdown" | "subtree". Throws std::invalid_argument.
Policy parse_policy(std::string_view name);

/// One odometer step on a finite word over {k, k+1, ...}, k = w.floor().
FiniteWord step(const FiniteWord& w, Policy policy);

/// Lazy orbit start, step(start), step(step(start)), ... of a fixed length.
class Orbit {
 public:
  Orbit(FiniteWord start, Policy policy, std::size_t count)
      : start_(std::move(start)), policy_(policy), count_(count) {}

  class iterator {
   public:
    using value_type = FiniteWord;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    const FiniteWord& operator*() const { return *current_; }
    const FiniteWord* operator->() const { return &*current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.remaining_ == 0; }

   private:
    friend class Orbit;
    iterator(FiniteWord start, Policy policy, std::size_t remaining)
        : current_(std::move(start)), policy_(policy), remaining_(remaining) {}

    std::optional<FiniteWord> current_;
    Policy policy_ = Policy::TopDown;
    std::size_t remaining_ = 0;
  };

  iterator begin() const { return iterator(start_, policy_, count_); }
  std::default_sentinel_t end() const { return {}; }
  std::size_t size() const { return count_; }

  std::vector<FiniteWord> to_vector() const;

 private:
  FiniteWord start_;
  Policy policy_;
  std::size_t count_;
};

inline Orbit orbit(const FiniteWord& start, Policy policy, std::size_t count) { return Orbit(start, policy, count); }

/// The top-down orbit of the root (floor): every word over {floor, ...} in
/// reverse lexicographic order, each exactly once.
inline Orbit enumerate_words(Letter floor, std::size_t count) {
  return Orbit(FiniteWord(floor, {floor}), Policy::TopDown, count);
}

}  // namespace odometer

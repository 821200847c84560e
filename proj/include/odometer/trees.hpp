#pragma once

// Odometric binary trees. Trees are virtual: a leaf is a finite word, its
// level is sum_k and its slot in the level is position_index, so navigation
// and level generation are arithmetic on words and addresses.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "odometer/rational.hpp"
#include "odometer/words.hpp"

namespace odometer {

/// (left, right) = ((floor, w1, ..., wj), (w1 + 1, w2, ..., wj)).
std::pair<FiniteWord, FiniteWord> sons(const FiniteWord& w);

/// Inverse of sons; std::nullopt for the root (the word of k-sum 1).
std::optional<FiniteWord> parent(const FiniteWord& w);

/// The 2^(l-1) words of k-sum l in left-to-right (reverse lexicographic)
/// order. Throws std::invalid_argument if l < 1.
std::vector<FiniteWord> level_words(Letter floor, std::int64_t l);

/// (sum_k(w), position_index(w)).
TreeAddress locate(const FiniteWord& w);

/// (l, p) -> ((l+1, 2p), (l+1, 2p+1)).
std::pair<TreeAddress, TreeAddress> address_sons(const TreeAddress& a);

/// Descendants of `root` at the given depth (depth 1 is the root itself),
/// left to right. Throws std::invalid_argument if depth < 1.
std::vector<FiniteWord> subtree_level(const FiniteWord& root, std::int64_t depth);

/// Leaf labelling used by the dumps: a word and its optional value.
using LeafValue = std::function<std::optional<Rational>(const FiniteWord&)>;

/// Rows of the subtree rooted at `root`, levels 1..depth. `mirror` reverses
/// every row (the left/right mirror image of the tree).
std::vector<std::vector<FiniteWord>> subtree_rows(const FiniteWord& root, std::int64_t depth, bool mirror = false);

/// One line per level: leaves separated by single spaces, each leaf printed
/// as its value when `value` yields one and as its word otherwise.
std::string render_rows(const std::vector<std::vector<FiniteWord>>& rows, const LeafValue& value = {});

/// Indented outline: children two spaces deeper than their parent.
std::string render_indented(const FiniteWord& root, std::int64_t depth, const LeafValue& value = {},
                            bool mirror = false);

/// JSON rows {"level":l,"pos":"p","word":[...],"value":"p/q"} joined by newlines.
std::string render_json_rows(const std::vector<std::vector<FiniteWord>>& rows, const LeafValue& value = {});

}  // namespace odometer

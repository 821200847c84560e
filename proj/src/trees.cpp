#include "odometer/trees.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace odometer {

std::pair<FiniteWord, FiniteWord> sons(const FiniteWord& w) {
  std::vector<Letter> left{w.floor()};
  left.insert(left.end(), w.letters().begin(), w.letters().end());
  std::vector<Letter> right = w.letters();
  ++right.front();
  return {FiniteWord(w.floor(), std::move(left)), FiniteWord(w.floor(), std::move(right))};
}

std::optional<FiniteWord> parent(const FiniteWord& w) {
  if (sum_k(w) == 1) return std::nullopt;
  if (w.front() == w.floor())
    return FiniteWord(w.floor(), std::vector<Letter>(w.letters().begin() + 1, w.letters().end()));
  std::vector<Letter> up = w.letters();
  --up.front();
  return FiniteWord(w.floor(), std::move(up));
}

std::vector<FiniteWord> level_words(Letter floor, std::int64_t l) {
  if (l < 1) throw std::invalid_argument("level_words: level must be >= 1");
  return subtree_level(FiniteWord(floor, {floor}), l);
}

TreeAddress locate(const FiniteWord& w) { return TreeAddress(sum_k(w), position_index(w)); }

std::pair<TreeAddress, TreeAddress> address_sons(const TreeAddress& a) {
  const Natural left = a.position() * 2;
  return {TreeAddress(a.level() + 1, left), TreeAddress(a.level() + 1, left + 1)};
}

std::vector<FiniteWord> subtree_level(const FiniteWord& root, std::int64_t depth) {
  if (depth < 1) throw std::invalid_argument("subtree_level: depth must be >= 1");
  const TreeAddress at = locate(root);
  const auto shift = static_cast<std::uint64_t>(depth - 1);
  const std::int64_t level = at.level() + depth - 1;
  const Natural first = at.position() << shift;
  const Natural count = pow2(shift);

  std::vector<FiniteWord> out;
  out.reserve(count.get_ui());
  for (Natural p = 0; p < count; ++p) out.push_back(word_at(level, first + p, root.floor()));
  return out;
}

std::vector<std::vector<FiniteWord>> subtree_rows(const FiniteWord& root, std::int64_t depth, bool mirror) {
  std::vector<std::vector<FiniteWord>> rows;
  for (std::int64_t d = 1; d <= depth; ++d) {
    rows.push_back(subtree_level(root, d));
    if (mirror) std::reverse(rows.back().begin(), rows.back().end());
  }
  return rows;
}

namespace {

std::string label(const FiniteWord& w, const LeafValue& value) {
  if (value)
    if (auto v = value(w)) return v->to_string();
  return w.to_string();
}

void indent_into(std::string& out, const FiniteWord& w, std::int64_t depth, std::size_t indent, const LeafValue& value,
                 bool mirror) {
  out.append(indent, ' ');
  out += label(w, value);
  out += '\n';
  if (depth <= 1) return;
  auto [left, right] = sons(w);
  if (mirror) std::swap(left, right);
  indent_into(out, left, depth - 1, indent + 2, value, mirror);
  indent_into(out, right, depth - 1, indent + 2, value, mirror);
}

}  // namespace

std::string render_rows(const std::vector<std::vector<FiniteWord>>& rows, const LeafValue& value) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ' ';
      out += label(row[i], value);
    }
    out += '\n';
  }
  return out;
}

std::string render_indented(const FiniteWord& root, std::int64_t depth, const LeafValue& value, bool mirror) {
  std::string out;
  indent_into(out, root, depth, 0, value, mirror);
  return out;
}

std::string render_json_rows(const std::vector<std::vector<FiniteWord>>& rows, const LeafValue& value) {
  std::string out;
  for (const auto& row : rows) {
    for (const auto& w : row) {
      const TreeAddress at = locate(w);
      nlohmann::ordered_json j = {{"level", at.level()}, {"pos", at.position().get_str(10)}, {"word", w.letters()}};
      if (value)
        if (auto v = value(w)) j["value"] = v->to_string();
      out += j.dump();
      out += '\n';
    }
  }
  return out;
}

}  // namespace odometer

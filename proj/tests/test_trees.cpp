#include <gtest/gtest.h>

#include <unordered_set>

#include "odometer/codecs.hpp"
#include "odometer/trees.hpp"
#include "oracles.hpp"

using namespace odometer;

namespace {

FiniteWord w1(std::vector<Letter> letters) { return FiniteWord(1, std::move(letters)); }

std::vector<FiniteWord> words(Letter floor, std::initializer_list<std::vector<Letter>> list) {
  std::vector<FiniteWord> out;
  for (const auto& l : list) out.emplace_back(floor, l);
  return out;
}

}  // namespace

TEST(Sons, Examples) {
  EXPECT_EQ(sons(w1({2})), std::make_pair(w1({1, 2}), w1({3})));
  EXPECT_EQ(sons(w1({1})), std::make_pair(w1({1, 1}), w1({2})));
  EXPECT_EQ(sons(FiniteWord(2, {2})), std::make_pair(FiniteWord(2, {2, 2}), FiniteWord(2, {3})));
}

TEST(Parent, Examples) {
  EXPECT_EQ(parent(w1({1, 2})), w1({2}));
  EXPECT_EQ(parent(w1({3})), w1({2}));
  EXPECT_EQ(parent(w1({1})), std::nullopt);
  EXPECT_EQ(parent(FiniteWord(0, {0})), std::nullopt);
  for (Letter l = 1; l <= 10; ++l)
    for (const auto& w : level_words(3, l)) {
      const auto [left, right] = sons(w);
      ASSERT_EQ(parent(left), w);
      ASSERT_EQ(parent(right), w);
    }
}

TEST(LevelWords, Examples) {
  EXPECT_EQ(level_words(1, 3), words(1, {{1, 1, 1}, {2, 1}, {1, 2}, {3}}));
  EXPECT_EQ(level_words(1, 1), words(1, {{1}}));
  EXPECT_EQ(level_words(2, 3), words(2, {{2, 2, 2}, {3, 2}, {2, 3}, {4}}));
  EXPECT_THROW(level_words(1, 0), std::invalid_argument);
}

TEST(LevelWords, MatchesBreadthFirstSons) {
  const auto bfs = oracle::bfs(w1({1}), (std::size_t{1} << 12) - 1, [](const FiniteWord& w) { return sons(w); });
  std::size_t i = 0;
  for (Letter l = 1; l <= 12; ++l)
    for (const auto& w : level_words(1, l)) ASSERT_EQ(w, bfs[i++]);
}

TEST(LevelWords, EveryWordOnceUpToFifteen) {
  std::unordered_set<FiniteWord, FiniteWordHash> seen;
  for (Letter l = 1; l <= 15; ++l) {
    const auto level = level_words(1, l);
    ASSERT_EQ(level.size(), std::size_t{1} << (l - 1));
    EXPECT_EQ(level.front(), w1(std::vector<Letter>(static_cast<std::size_t>(l), 1)));
    EXPECT_EQ(level.back(), w1({l}));
    for (const auto& w : level) ASSERT_TRUE(seen.insert(w).second);
  }
  std::size_t compositions = 0;
  for (Letter l = 1; l <= 15; ++l) compositions += oracle::compositions(l).size();
  EXPECT_EQ(seen.size(), compositions);
}

TEST(Locate, Examples) {
  EXPECT_EQ(locate(w1({4, 2, 1})), TreeAddress(7, 23));
  EXPECT_EQ(locate(w1({1})), TreeAddress(1, 0));
  for (Letter floor : {0, 1, 2})
    for (Letter l = 1; l <= 12; ++l) {
      const auto level = level_words(floor, l);
      for (std::size_t p = 0; p < level.size(); ++p)
        ASSERT_EQ(locate(level[p]), TreeAddress(l, static_cast<unsigned long>(p)));
    }
}

TEST(AddressSons, Examples) {
  EXPECT_EQ(address_sons(TreeAddress(1, 0)), std::make_pair(TreeAddress(2, 0), TreeAddress(2, 1)));
  EXPECT_EQ(address_sons(TreeAddress(3, 3)), std::make_pair(TreeAddress(4, 6), TreeAddress(4, 7)));
  for (Letter l = 1; l <= 12; ++l)
    for (const auto& w : level_words(1, l)) {
      const auto [left, right] = sons(w);
      const auto [al, ar] = address_sons(locate(w));
      ASSERT_EQ(locate(left), al);
      ASSERT_EQ(locate(right), ar);
    }
}

TEST(SubtreeLevel, Examples) {
  EXPECT_EQ(subtree_level(w1({2}), 2), words(1, {{1, 2}, {3}}));
  EXPECT_EQ(subtree_level(FiniteWord(0, {1}), 1), words(0, {{1}}));
  EXPECT_EQ(subtree_level(w1({2}), 3), words(1, {{1, 1, 2}, {2, 2}, {1, 3}, {4}}));
  EXPECT_THROW(subtree_level(w1({2}), 0), std::invalid_argument);
}

TEST(SubtreeLevel, DescendantsOfTwoAreCanonicalWords) {
  for (Letter l = 2; l <= 12; ++l) {
    std::vector<FiniteWord> canonical;
    for (const auto& w : level_words(1, l))
      if (w.back() >= 2) canonical.push_back(w);
    ASSERT_EQ(subtree_level(w1({2}), l - 1), canonical) << "level " << l;
  }
}

TEST(Twins, PositionsDifferByQuarterLevel) {
  for (Letter l = 2; l <= 12; ++l)
    for (const auto& w : level_words(1, l)) {
      if (w.back() < 2) continue;
      ASSERT_EQ(position_index(twin(w)), position_index(w) - pow2(static_cast<std::uint64_t>(l - 2))) << w;
    }
}

TEST(Render, FiguresAsRows) {
  EXPECT_EQ(render_rows(subtree_rows(w1({1}), 4)),
            "(1)\n"
            "(1,1) (2)\n"
            "(1,1,1) (2,1) (1,2) (3)\n"
            "(1,1,1,1) (2,1,1) (1,2,1) (3,1) (1,1,2) (2,2) (1,3) (4)\n");
  const LeafValue dyadic = [](const FiniteWord& w) -> std::optional<Rational> { return dyadic_decode(w); };
  EXPECT_EQ(render_rows(subtree_rows(FiniteWord(0, {1}), 4), dyadic),
            "1/2\n1/4 3/4\n1/8 5/8 3/8 7/8\n1/16 9/16 5/16 13/16 3/16 11/16 7/16 15/16\n");
  const LeafValue bcf = [](const FiniteWord& w) -> std::optional<Rational> { return bcf_decode(w); };
  EXPECT_EQ(render_rows(subtree_rows(FiniteWord(2, {2}), 4), bcf),
            "1/2\n1/3 2/3\n1/4 3/5 2/5 3/4\n1/5 4/7 3/8 5/7 2/7 5/8 3/7 4/5\n");
  const LeafValue cf = [](const FiniteWord& w) -> std::optional<Rational> { return cf_decode(w); };
  EXPECT_EQ(render_rows(subtree_rows(w1({2}), 4, true), cf),
            "1/2\n1/3 2/3\n1/4 3/4 2/5 3/5\n1/5 4/5 3/7 4/7 2/7 5/7 3/8 5/8\n");
  EXPECT_EQ(render_rows(subtree_rows(w1({2}), 3), cf), "1/2\n2/3 1/3\n3/5 2/5 3/4 1/4\n");
}

TEST(Render, IndentedAndJson) {
  EXPECT_EQ(render_indented(w1({1}), 2), "(1)\n  (1,1)\n  (2)\n");
  EXPECT_EQ(render_indented(w1({1}), 2, {}, true), "(1)\n  (2)\n  (1,1)\n");
  const LeafValue cf = [](const FiniteWord& w) -> std::optional<Rational> { return cf_decode(w); };
  EXPECT_EQ(render_json_rows(subtree_rows(w1({2}), 2), cf),
            R"({"level":2,"pos":"1","word":[2],"value":"1/2"})"
            "\n"
            R"({"level":3,"pos":"2","word":[1,2],"value":"2/3"})"
            "\n"
            R"({"level":3,"pos":"3","word":[3],"value":"1/3"})"
            "\n");
}

#include <functional>
#include <map>

#include "doctest.h"

#include "comtet/engine.hpp"
#include "comtet/gentree.hpp"

using namespace comtet;

namespace {
PatternSet PS(const char* text) { return PatternSet::parse(text); }
}  // namespace

TEST_CASE("ava examples") {
  CHECK(ava(Permutation::parse("1 4 5 2 3"), PS("2431,4231")) ==
        std::vector<int>{3, 4, 5, 6});
  CHECK(ava(Permutation::identity(4), PS("2431,4231")).back() == 5);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& pi : enumerate_avoiders(n, PS("2413,4213"))) {
      const auto av = ava(pi, PS("2413,4213"));
      CHECK(av.front() == 1);
      CHECK(av.back() == n + 1);
    }
  }
  CHECK_THROWS_AS(ava(Permutation::parse("2431"), PS("2431,4231")),
                  precondition_violation);
}

TEST_CASE("rewriting rule") {
  const auto kids2 = omega_sch_children(2);
  REQUIRE(kids2.size() == 2);
  CHECK(kids2[0] == std::pair<int, bool>{3, true});
  CHECK(kids2[1] == std::pair<int, bool>{3, false});
  const auto kids4 = omega_sch_children(4);
  REQUIRE(kids4.size() == 4);
  CHECK(kids4[0] == std::pair<int, bool>{5, true});
  CHECK(kids4[1] == std::pair<int, bool>{5, false});
  CHECK(kids4[2] == std::pair<int, bool>{4, false});
  CHECK(kids4[3] == std::pair<int, bool>{3, false});
}

TEST_CASE("growth rules reduce to the rewriting rule") {
  // Interval [m, n]: label k = n - m + 1; children (k+1)*, (k+1), (k), ..., (3).
  const auto children = grow_2431(3, 6);  // k = 4
  REQUIRE(children.size() == 4);
  CHECK(children[0].second);
  CHECK(children[0].first == std::pair<int, int>{3, 7});
  CHECK(children[1].first == std::pair<int, int>{3, 7});
  CHECK(children[2].first == std::pair<int, int>{4, 7});
  CHECK(children[3].first == std::pair<int, int>{5, 7});

  const auto sets = grow_2413({6, 4, 2, 1}, 6);
  REQUIRE(sets.size() == 4);
  CHECK(sets[0].second);
  CHECK(sets[0].first == std::vector<int>{7, 6, 4, 2, 1});
  CHECK(sets[1].first == std::vector<int>{7, 5, 4, 2, 1});
  CHECK(sets[2].first == std::vector<int>{7, 3, 2, 1});
  CHECK(sets[3].first == std::vector<int>{7, 2, 1});
}

TEST_CASE("trees to depth 6 are pairwise isomorphic") {
  const int depth = 6;
  const TreeNode abstract = build_abstract_tree(depth);
  const TreeNode a = build_ava_tree(PS("2431,4231"), depth);
  const TreeNode b = build_ava_tree(PS("2413,4213"), depth);
  const TreeNode ra = build_rule_tree_2431(depth);
  const TreeNode rb = build_rule_tree_2413(depth);
  CHECK(trees_isomorphic(abstract, a));
  CHECK(trees_isomorphic(abstract, b));
  CHECK(trees_isomorphic(abstract, ra));
  CHECK(trees_isomorphic(abstract, rb));

  // Level sizes are the large Schroder numbers.
  std::vector<long long> sizes;
  std::vector<const TreeNode*> level{&abstract};
  while (!level.empty()) {
    sizes.push_back(static_cast<long long>(level.size()));
    std::vector<const TreeNode*> next;
    for (auto* node : level)
      for (const auto& ch : node->children) next.push_back(&ch);
    level = std::move(next);
  }
  CHECK(sizes == std::vector<long long>{1, 2, 6, 22, 90, 394});
}

TEST_CASE("a star sibling exists exactly once per node") {
  const TreeNode root = build_abstract_tree(5);
  std::function<void(const TreeNode&)> walk = [&](const TreeNode& node) {
    if (!node.children.empty()) {
      int stars = 0;
      for (const auto& ch : node.children) stars += ch.star ? 1 : 0;
      CHECK(stars == 1);
    }
    for (const auto& ch : node.children) walk(ch);
  };
  walk(root);
}

TEST_CASE("dump matches the displayed first levels") {
  const auto lines = dump_tree_levels(build_ava_tree(PS("2431,4231"), 3), 3);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "L1: (2)*");
  CHECK(lines[1] == "L2: (3) (3)*");
  CHECK(lines[2] == "L3: (3) (4) (4)* | (3) (4) (4)*");
}

TEST_CASE("star positions along paths") {
  CHECK(lmaxp_from_path({{2, true}, {3, false}, {4, true}}) ==
        std::vector<int>{1, 3});
  CHECK(lmaxp_from_path({{2, true}, {3, true}, {4, true}}) ==
        std::vector<int>{1, 2, 3});
}

TEST_CASE("tree LMAXP distribution matches statistics") {
  const int depth = 6;
  const TreeNode tree = build_ava_tree(PS("2431,4231"), depth);
  for (int n = 1; n <= depth; ++n) {
    auto from_tree = lmaxp_distribution_from_tree(tree, n);
    std::map<RefKey, long long> tree_keys;
    for (auto& [stars, cnt] : from_tree) {
      RefKey k = stars;
      k.push_back(-1);
      tree_keys[k] = cnt;
    }
    CHECK(tree_keys == key_distribution(n, PS("2431,4231"), {SetStat::LMAXP}));
  }
}

TEST_CASE("(LMAXP, comp) equidistributed over the two classes") {
  for (int n = 1; n <= 7; ++n) {
    CHECK(key_distribution(n, PS("2413,4213"),
                           {SetStat::LMAXP, SetStat::comp}) ==
          key_distribution(n, PS("2431,4231"),
                           {SetStat::LMAXP, SetStat::comp}));
  }
}

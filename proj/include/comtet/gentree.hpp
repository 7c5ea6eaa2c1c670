#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "comtet/perm.hpp"

namespace comtet {

// Values k such that appending k (as ins_end) keeps pi inside the class.
std::vector<int> ava(const Permutation& pi, const PatternSet& ps);

// One tree node: label = |AVA|, star = the permutation ends with its
// greatest letter. Children are in insertion order, star child first.
struct TreeNode {
  int label = 0;
  bool star = false;
  std::vector<TreeNode> children;
};

// The rewriting rule: (k) ~> (k+1)*, (k+1), (k), (k-1), ..., (3).
std::vector<std::pair<int, bool>> omega_sch_children(int label);

// Children AVA intervals for the class avoiding {2431, 4231}: from
// AVA(pi) = [m, n] (pi of length n-1), inserting j gives [j, n+1] for
// m <= j <= n-1 and [m, n+1] for j = n. Star child first.
std::vector<std::pair<std::pair<int, int>, bool>> grow_2431(int m, int n);

// Children AVA sets for the class avoiding {2413, 4213}: from
// AVA(pi) = {n = k_1 > ... > k_m = 1}, inserting k_j gives
// {n+1} u {k_j + 1, k_j, k_{j+1}, ..., k_m}. Input and output descending.
std::vector<std::pair<std::vector<int>, bool>> grow_2413(
    const std::vector<int>& ava_desc, int n);

// Abstract tree for the rewriting rule, root (2)*, `depth` levels.
TreeNode build_abstract_tree(int depth);
// Concrete tree built by testing insertions against the pattern set.
TreeNode build_ava_tree(const PatternSet& ps, int depth);
// Trees driven purely by the growth lemmas (no pattern tests).
TreeNode build_rule_tree_2431(int depth);
TreeNode build_rule_tree_2413(int depth);

// Recursive isomorphism respecting labels and star marks.
bool trees_isomorphic(const TreeNode& a, const TreeNode& b);

// One line per level: sorted child labels per parent, groups separated by
// '|', e.g. "L3: (3) (4) (4)* | (3) (4) (4)*".
std::vector<std::string> dump_tree_levels(const TreeNode& root, int depth);

// Star positions along a root-to-node path.
std::vector<int> lmaxp_from_path(const std::vector<std::pair<int, bool>>& path);

// Multiset of star-position sets over all level-`level` nodes; equals the
// LMAXP distribution over the class at that length.
std::map<std::vector<int>, long long> lmaxp_distribution_from_tree(
    const TreeNode& root, int level);

}  // namespace comtet

#include "comtet/gentree.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace comtet {

std::vector<int> ava(const Permutation& pi, const PatternSet& ps) {
  if (!avoids_all(pi, ps))
    throw precondition_violation("ava: permutation outside the class");
  std::vector<int> out;
  const int n = pi.size() + 1;
  for (int k = 1; k <= n; ++k)
    if (avoids_all(ins_end(pi, k), ps)) out.push_back(k);
  return out;
}

std::vector<std::pair<int, bool>> omega_sch_children(int label) {
  if (label < 2) throw invalid_input("omega rule labels start at 2");
  std::vector<std::pair<int, bool>> out;
  out.emplace_back(label + 1, true);
  out.emplace_back(label + 1, false);
  for (int k = label; k >= 3; --k) out.emplace_back(k, false);
  return out;
}

std::vector<std::pair<std::pair<int, int>, bool>> grow_2431(int m, int n) {
  if (!(1 <= m && m < n)) throw invalid_input("grow_2431: need 1 <= m < n");
  std::vector<std::pair<std::pair<int, int>, bool>> out;
  out.push_back({{m, n + 1}, true});  // j = n, the new maximum
  for (int j = m; j <= n - 1; ++j) out.push_back({{j, n + 1}, false});
  return out;
}

std::vector<std::pair<std::vector<int>, bool>> grow_2413(
    const std::vector<int>& ava_desc, int n) {
  if (ava_desc.empty() || ava_desc.front() != n || ava_desc.back() != 1)
    throw invalid_input("grow_2413: AVA must run from n down to 1");
  const int m = static_cast<int>(ava_desc.size());
  std::vector<std::pair<std::vector<int>, bool>> out;
  for (int j = 1; j <= m; ++j) {
    std::vector<int> child;
    child.push_back(n + 1);
    if (ava_desc[j - 1] + 1 != n + 1) child.push_back(ava_desc[j - 1] + 1);
    for (int i = j - 1; i < m; ++i) child.push_back(ava_desc[i]);
    out.emplace_back(std::move(child), j == 1);
  }
  return out;
}

namespace {

void expand_abstract(TreeNode& node, int levels_left) {
  if (levels_left <= 0) return;
  for (auto [label, star] : omega_sch_children(node.label)) {
    node.children.push_back(TreeNode{label, star, {}});
    expand_abstract(node.children.back(), levels_left - 1);
  }
}

void expand_ava(TreeNode& node, const Permutation& pi, const PatternSet& ps,
                int levels_left) {
  if (levels_left <= 0) return;
  const int n = pi.size() + 1;
  // Star child (inserting the new maximum) first, then the rest ascending.
  std::vector<int> values = ava(pi, ps);
  std::rotate(values.begin(), values.end() - 1, values.end());
  for (int k : values) {
    Permutation child = ins_end(pi, k);
    node.children.push_back(
        TreeNode{static_cast<int>(ava(child, ps).size()), k == n, {}});
    expand_ava(node.children.back(), child, ps, levels_left - 1);
  }
}

void expand_rule_2431(TreeNode& node, int m, int n, int levels_left) {
  if (levels_left <= 0) return;
  for (const auto& [interval, star] : grow_2431(m, n)) {
    node.children.push_back(
        TreeNode{interval.second - interval.first + 1, star, {}});
    expand_rule_2431(node.children.back(), interval.first, interval.second,
                     levels_left - 1);
  }
}

void expand_rule_2413(TreeNode& node, const std::vector<int>& ava_desc, int n,
                      int levels_left) {
  if (levels_left <= 0) return;
  for (const auto& [child_set, star] : grow_2413(ava_desc, n)) {
    node.children.push_back(
        TreeNode{static_cast<int>(child_set.size()), star, {}});
    expand_rule_2413(node.children.back(), child_set, n + 1, levels_left - 1);
  }
}

}  // namespace

TreeNode build_abstract_tree(int depth) {
  if (depth < 1) throw invalid_input("tree depth must be >= 1");
  TreeNode root{2, true, {}};
  expand_abstract(root, depth - 1);
  return root;
}

TreeNode build_ava_tree(const PatternSet& ps, int depth) {
  if (depth < 1) throw invalid_input("tree depth must be >= 1");
  const Permutation one({1});
  TreeNode root{static_cast<int>(ava(one, ps).size()), true, {}};
  expand_ava(root, one, ps, depth - 1);
  return root;
}

TreeNode build_rule_tree_2431(int depth) {
  if (depth < 1) throw invalid_input("tree depth must be >= 1");
  TreeNode root{2, true, {}};
  expand_rule_2431(root, 1, 2, depth - 1);  // AVA(1) = [1, 2]
  return root;
}

TreeNode build_rule_tree_2413(int depth) {
  if (depth < 1) throw invalid_input("tree depth must be >= 1");
  TreeNode root{2, true, {}};
  expand_rule_2413(root, {2, 1}, 2, depth - 1);  // AVA(1) = {2, 1}
  return root;
}

namespace {

// Canonical encoding: children are sorted, so equal encodings mean
// star-preserving isomorphism.
std::string canon(const TreeNode& node) {
  std::vector<std::string> kids;
  kids.reserve(node.children.size());
  for (const auto& ch : node.children) kids.push_back(canon(ch));
  std::sort(kids.begin(), kids.end());
  std::string out = "(" + std::to_string(node.label) +
                    (node.star ? "*" : "");
  for (auto& k : kids) out += k;
  out += ")";
  return out;
}

}  // namespace

bool trees_isomorphic(const TreeNode& a, const TreeNode& b) {
  return canon(a) == canon(b);
}

std::vector<std::string> dump_tree_levels(const TreeNode& root, int depth) {
  std::vector<std::string> lines;
  std::vector<const TreeNode*> level{&root};
  for (int d = 1; d <= depth && !level.empty(); ++d) {
    std::ostringstream os;
    os << "L" << d << ":";
    if (d == 1) {
      os << " (" << root.label << ")" << (root.star ? "*" : "");
    } else {
      bool first_group = true;
      for (const TreeNode* node : level) {
        if (!first_group) os << " |";
        first_group = false;
        std::vector<std::pair<int, bool>> labels;
        for (const auto& ch : node->children)
          labels.emplace_back(ch.label, ch.star);
        std::sort(labels.begin(), labels.end());
        for (const auto& [lab, star] : labels)
          os << " (" << lab << ")" << (star ? "*" : "");
      }
    }
    lines.push_back(os.str());
    if (d == 1) continue;
    std::vector<const TreeNode*> next;
    for (const TreeNode* node : level)
      for (const auto& ch : node->children) next.push_back(&ch);
    level = std::move(next);
  }
  return lines;
}

std::vector<int> lmaxp_from_path(
    const std::vector<std::pair<int, bool>>& path) {
  std::vector<int> out;
  for (size_t i = 0; i < path.size(); ++i)
    if (path[i].second) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::map<std::vector<int>, long long> lmaxp_distribution_from_tree(
    const TreeNode& root, int level) {
  std::map<std::vector<int>, long long> out;
  std::vector<int> stars;
  std::function<void(const TreeNode&, int)> walk = [&](const TreeNode& node,
                                                       int d) {
    if (node.star) stars.push_back(d);
    if (d == level) {
      ++out[stars];
    } else {
      for (const auto& ch : node.children) walk(ch, d + 1);
    }
    if (node.star) stars.pop_back();
  };
  walk(root, 1);
  return out;
}

}  // namespace comtet

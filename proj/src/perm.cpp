#include "comtet/perm.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace comtet {

Permutation::Permutation(std::vector<int> values) : v_(std::move(values)) {
  const int n = static_cast<int>(v_.size());
  std::vector<bool> seen(n + 1, false);
  for (int x : v_) {
    if (x < 1 || x > n || seen[x])
      throw invalid_input("not a permutation of [1..n]");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw invalid_input("negative length");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::string s(text);
  const bool has_space =
      s.find_first_of(" \t\n,") != std::string::npos;
  std::vector<int> vals;
  if (has_space) {
    for (char& ch : s)
      if (ch == ',') ch = ' ';
    std::istringstream is(s);
    int x;
    while (is >> x) vals.push_back(x);
    if (!is.eof()) throw invalid_input("bad permutation text: " + s);
  } else {
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw invalid_input("bad permutation text: " + s);
      vals.push_back(ch - '0');
    }
  }
  return Permutation(std::move(vals));
}

std::string Permutation::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < v_.size(); ++i) {
    if (i) os << ' ';
    os << v_[i];
  }
  return os.str();
}

PatternSet::PatternSet(std::vector<Permutation> pats)
    : patterns(std::move(pats)) {
  if (patterns.empty()) throw invalid_input("empty pattern set");
  for (const auto& p : patterns)
    if (p.empty()) throw invalid_input("empty pattern");
}

PatternSet PatternSet::parse(std::string_view text) {
  std::vector<Permutation> pats;
  size_t start = 0;
  std::string s(text);
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    std::string item = s.substr(start, comma - start);
    if (!item.empty()) pats.push_back(Permutation::parse(item));
    start = comma + 1;
  }
  return PatternSet(std::move(pats));
}

std::string PatternSet::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < patterns.size(); ++i) {
    if (i) os << ',';
    for (int x : patterns[i].values()) os << x;
  }
  return os.str();
}

Permutation reduce(const std::vector<int>& word) {
  std::vector<int> sorted = word;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw invalid_input("reduce: duplicate entries");
  for (int x : word)
    if (x <= 0) throw invalid_input("reduce: entries must be positive");
  std::vector<int> out(word.size());
  for (size_t i = 0; i < word.size(); ++i) {
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(),
                                               word[i]) -
                              sorted.begin()) +
             1;
  }
  return Permutation(std::move(out));
}

Permutation del(const Permutation& pi, int i) {
  const int n = pi.size();
  if (i < 1 || i > n) throw invalid_input("del: value out of range");
  std::vector<int> out;
  out.reserve(n - 1);
  for (int x : pi.values()) {
    if (x == i) continue;
    out.push_back(x > i ? x - 1 : x);
  }
  return Permutation(std::move(out));
}

Permutation ins(const Permutation& pi, int i, int k) {
  const int n = pi.size();
  if (i < 1 || i > n + 1 || k < 1 || k > n + 1)
    throw invalid_input("ins: value or position out of range");
  std::vector<int> out;
  out.reserve(n + 1);
  for (int x : pi.values()) out.push_back(x >= i ? x + 1 : x);
  out.insert(out.begin() + (k - 1), i);
  return Permutation(std::move(out));
}

Permutation ins_end(const Permutation& pi, int i) {
  return ins(pi, i, pi.size() + 1);
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> out = a.values();
  out.reserve(a.size() + b.size());
  for (int x : b.values()) out.push_back(x + a.size());
  return Permutation(std::move(out));
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  for (int x : a.values()) out.push_back(x + b.size());
  for (int x : b.values()) out.push_back(x);
  return Permutation(std::move(out));
}

Permutation reversed(const Permutation& pi) {
  std::vector<int> out(pi.values().rbegin(), pi.values().rend());
  return Permutation(std::move(out));
}

Permutation complemented(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> out;
  out.reserve(n);
  for (int x : pi.values()) out.push_back(n + 1 - x);
  return Permutation(std::move(out));
}

Permutation inverted(const Permutation& pi) {
  std::vector<int> out(pi.size());
  for (int pos = 1; pos <= pi.size(); ++pos) out[pi.value_at(pos) - 1] = pos;
  return Permutation(std::move(out));
}

namespace {

// Backtracking subsequence match. chosen[] holds the pi-values matched to
// sigma(1..level); a candidate must compare against each of them exactly as
// sigma's entries do.
bool match_from(const std::vector<int>& pi, const std::vector<int>& sg,
                std::vector<int>& chosen, size_t level, size_t from) {
  const size_t k = sg.size();
  if (level == k) return true;
  for (size_t j = from; j + (k - level) <= pi.size(); ++j) {
    const int cand = pi[j];
    bool ok = true;
    for (size_t a = 0; a < level && ok; ++a)
      ok = (sg[a] < sg[level]) == (chosen[a] < cand);
    if (!ok) continue;
    chosen[level] = cand;
    if (match_from(pi, sg, chosen, level + 1, j + 1)) return true;
  }
  return false;
}

}  // namespace

bool contains(const Permutation& pi, const Permutation& sigma) {
  if (sigma.empty()) throw invalid_input("contains: empty pattern");
  if (sigma.size() > pi.size()) return false;
  std::vector<int> chosen(sigma.size());
  return match_from(pi.values(), sigma.values(), chosen, 0, 0);
}

bool contains_through_max(const Permutation& pi, const Permutation& sigma,
                          int anchor) {
  const size_t k = sigma.size();
  if (k == 0) throw invalid_input("contains: empty pattern");
  if (static_cast<int>(k) > pi.size()) return false;
  const auto& sg = sigma.values();
  const auto& v = pi.values();
  const size_t max_idx = static_cast<size_t>(
      std::max_element(sg.begin(), sg.end()) - sg.begin());
  // Letters of sigma before its maximum must be matched before the anchor,
  // the rest after it; the anchor letter itself plays the maximum.
  const size_t before = max_idx, after = k - max_idx - 1;
  const size_t apos = static_cast<size_t>(anchor - 1);
  if (apos < before || v.size() - apos - 1 < after) return false;

  std::vector<int> left(sg.begin(), sg.begin() + max_idx);
  std::vector<int> right(sg.begin() + max_idx + 1, sg.end());

  std::vector<size_t> lsel(before);
  // Choose increasing positions in [0, apos) for the prefix of sigma, then
  // positions in (apos, n) for the suffix, checking order-isomorphism against
  // the full chosen tuple as we go.
  auto consistent = [&](const std::vector<int>& vals, int cand,
                        size_t cand_sigma_index) {
    for (size_t a = 0; a < vals.size(); ++a)
      if ((sg[a] < sg[cand_sigma_index]) != (vals[a] < cand)) return false;
    return true;
  };
  std::vector<int> chosen;
  chosen.reserve(k);
  std::function<bool(size_t, size_t)> pick_right =
      [&](size_t level, size_t from) -> bool {
    if (level == right.size()) return true;
    const size_t sigma_index = max_idx + 1 + level;
    for (size_t j = from; j + (right.size() - level) <= v.size(); ++j) {
      if (!consistent(chosen, v[j], sigma_index)) continue;
      chosen.push_back(v[j]);
      if (pick_right(level + 1, j + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  std::function<bool(size_t, size_t)> pick_left = [&](size_t level,
                                                      size_t from) -> bool {
    if (level == before) {
      chosen.push_back(v[apos]);  // sigma's maximum: consistency is automatic
      if (pick_right(0, apos + 1)) return true;
      chosen.pop_back();
      return false;
    }
    for (size_t j = from; j + (before - level) <= apos; ++j) {
      if (!consistent(chosen, v[j], level)) continue;
      chosen.push_back(v[j]);
      if (pick_left(level + 1, j + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return pick_left(0, 0);
}

bool avoids(const Permutation& pi, const Permutation& sigma) {
  return !contains(pi, sigma);
}

bool avoids_all(const Permutation& pi, const PatternSet& ps) {
  for (const auto& sigma : ps.patterns)
    if (contains(pi, sigma)) return false;
  return true;
}

std::vector<Permutation> decompose(const Permutation& pi) {
  std::vector<Permutation> parts;
  int start = 0, running_max = 0;
  const auto& v = pi.values();
  for (int i = 0; i < pi.size(); ++i) {
    running_max = std::max(running_max, v[i]);
    if (running_max == i + 1) {
      std::vector<int> chunk(v.begin() + start, v.begin() + i + 1);
      for (int& x : chunk) x -= start;
      parts.push_back(Permutation(std::move(chunk)));
      start = i + 1;
    }
  }
  return parts;
}

bool is_separable(const Permutation& pi) {
  static const Permutation p2413({2, 4, 1, 3});
  static const Permutation p3142({3, 1, 4, 2});
  return !contains(pi, p2413) && !contains(pi, p3142);
}

StankovaBlocks stankova_blocks(const Permutation& pi) {
  if (pi.empty()) throw invalid_input("stankova_blocks: empty permutation");
  if (!is_separable(pi))
    throw precondition_violation("stankova_blocks: permutation not separable");
  const int n = pi.size();
  StankovaBlocks out;
  if (n == 1) return out;

  const auto& v = pi.values();
  int max_pos = 0;
  std::vector<bool> on_left(n + 1, false);
  for (int i = 0; i < n; ++i) {
    if (v[i] == n) {
      max_pos = i;
      break;
    }
  }
  for (int i = 0; i < max_pos; ++i) on_left[v[i]] = true;

  // Maximal value intervals of constant side; left intervals appear in
  // increasing value order before n, right ones in decreasing order after.
  std::vector<std::pair<int, int>> intervals;  // [lo, hi]
  int lo = 1;
  for (int val = 2; val <= n - 1; ++val) {
    if (on_left[val] != on_left[lo]) {
      intervals.emplace_back(lo, val - 1);
      lo = val;
    }
  }
  intervals.emplace_back(lo, n - 1);

  auto content_of = [&](int blo, int bhi, bool left) {
    std::vector<int> word;
    const int from = left ? 0 : max_pos + 1;
    const int to = left ? max_pos : n;
    for (int i = from; i < to; ++i)
      if (v[i] >= blo && v[i] <= bhi) word.push_back(v[i]);
    return ValueBlock{blo, bhi, reduce(word)};
  };
  for (const auto& [blo, bhi] : intervals) {
    if (on_left[blo])
      out.a_blocks.push_back(content_of(blo, bhi, true));
    else
      out.b_blocks.push_back(content_of(blo, bhi, false));
  }
  // B-blocks run top-down after the maximum.
  std::reverse(out.b_blocks.begin(), out.b_blocks.end());
  return out;
}

}  // namespace comtet

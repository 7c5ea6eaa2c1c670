#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "comtet/errors.hpp"

namespace comtet {

// A permutation of [1..n] in one-line notation. Values and positions are
// 1-based everywhere in this library; n = 0 (the empty permutation) is legal.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  // Whitespace-separated values, e.g. "3 1 2"; the empty string is the empty
  // permutation. Compact digit form ("312") is also accepted.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }
  // 1-based access: value_at(1) is the first letter.
  int value_at(int pos) const { return v_[pos - 1]; }
  const std::vector<int>& values() const { return v_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  std::string str() const;

 private:
  std::vector<int> v_;
};

// A nonempty collection of forbidden patterns.
struct PatternSet {
  std::vector<Permutation> patterns;

  explicit PatternSet(std::vector<Permutation> pats);
  // Comma-separated pattern words: "2413,3142".
  static PatternSet parse(std::string_view text);
  std::string str() const;
};

// Replace the j-th smallest letter by j. Entries must be distinct positive.
Permutation reduce(const std::vector<int>& word);

// Remove the letter i and reduce the rest.
Permutation del(const Permutation& pi, int i);

// Bump every letter >= i by one, then place i at position k.
Permutation ins(const Permutation& pi, int i, int k);

// ins with k = n+1, so the new letter lands at the end.
Permutation ins_end(const Permutation& pi, int i);

Permutation direct_sum(const Permutation& a, const Permutation& b);
Permutation skew_sum(const Permutation& a, const Permutation& b);

Permutation reversed(const Permutation& pi);
Permutation complemented(const Permutation& pi);
Permutation inverted(const Permutation& pi);

// True iff some subsequence of pi is order-isomorphic to sigma.
bool contains(const Permutation& pi, const Permutation& sigma);
// Containment restricted to occurrences through position `anchor` (1-based),
// where pi(anchor) must be the maximum of pi. Used by the insertion-growth
// enumerator, where only occurrences through the new maximum can be new.
bool contains_through_max(const Permutation& pi, const Permutation& sigma,
                          int anchor);
bool avoids(const Permutation& pi, const Permutation& sigma);
bool avoids_all(const Permutation& pi, const PatternSet& ps);

// Direct sum decomposition pi = tau_1 (+) ... (+) tau_k, each tau_i
// indecomposable and returned in reduced form.
std::vector<Permutation> decompose(const Permutation& pi);

// One block of the decomposition around the maximum: the value interval
// [lo, hi] together with its reduced content.
struct ValueBlock {
  int lo = 0;
  int hi = 0;
  Permutation content;
  bool operator==(const ValueBlock&) const = default;
};

struct StankovaBlocks {
  std::vector<ValueBlock> a_blocks;  // before the maximum, increasing values
  std::vector<ValueBlock> b_blocks;  // after the maximum, decreasing values
};

// Block decomposition of a separable permutation around its maximum.
// Throws precondition_violation if pi contains 2413 or 3142.
StankovaBlocks stankova_blocks(const Permutation& pi);

bool is_separable(const Permutation& pi);

}  // namespace comtet

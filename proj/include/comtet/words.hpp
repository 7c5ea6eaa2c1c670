#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "comtet/errors.hpp"

namespace comtet {

// An admissible word w_{S,c}: letters s_1 < ... < s_k interleaved with runs
// of empty slots, c_i slots after s_i. Stored as the pair (S, c); rendering
// to slot notation is a display concern. Admissibility:
//   sum_{j<=i} c_j <= s_i - i   for all i,
// with c a weak composition of s_k - k, so the word length is s_k.
struct AdmissibleWord {
  std::vector<int> s;
  std::vector<int> c;

  AdmissibleWord(std::vector<int> s_, std::vector<int> c_);

  int k() const { return static_cast<int>(s.size()); }
  int length() const { return s.back(); }

  bool operator==(const AdmissibleWord&) const = default;

  // "2 3 5 . 7 . . 10 12 . 13 . ." (slots drawn as dots).
  std::string str() const;
  static AdmissibleWord parse(std::string_view text);
};

// Number of initial consecutive letters from S.
int ics(const AdmissibleWord& w);
// Number of indices where the admissibility bound is attained.
int equ(const AdmissibleWord& w);
// Positions (in the word) of the letters from S.
std::vector<int> sp(const AdmissibleWord& w);

// Indices i with sum_{j<=i} c_j < s_i - i <= sum_{j<=i+1} c_j.
std::vector<int> critical_indices(const AdmissibleWord& w);

// All admissible words of length n (exponential; for tests and exhaustive
// verification only).
std::vector<AdmissibleWord> enumerate_admissible_words(int n);

}  // namespace comtet

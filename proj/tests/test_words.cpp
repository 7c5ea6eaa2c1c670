#include "doctest.h"

#include "comtet/words.hpp"

using namespace comtet;

namespace {
long long catalan(int n) {
  long long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}
}  // namespace

TEST_CASE("the running example word") {
  // 2 3 5 . 7 . . 10 12 . 13 . .
  const AdmissibleWord w({2, 3, 5, 7, 10, 12, 13}, {0, 0, 1, 2, 0, 1, 2});
  CHECK(w.length() == 13);
  CHECK(ics(w) == 3);
  CHECK(equ(w) == 2);
  CHECK(sp(w) == std::vector<int>{1, 2, 3, 5, 8, 9, 11});
  CHECK(critical_indices(w) == std::vector<int>{2, 3, 6});
  CHECK(w.str() == "2 3 5 . 7 . . 10 12 . 13 . .");
  CHECK(AdmissibleWord::parse("2 3 5 . 7 . . 10 12 . 13 . .") == w);
}

TEST_CASE("identity-shaped words") {
  const AdmissibleWord w({1, 2, 3, 4}, {0, 0, 0, 0});
  CHECK(ics(w) == 4);
  CHECK(equ(w) == 4);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(AdmissibleWord({2, 1}, {0, 0}), invalid_input);
  CHECK_THROWS_AS(AdmissibleWord({1, 3}, {1, 0}), invalid_input);  // (*) fails
  CHECK_THROWS_AS(AdmissibleWord({2, 3}, {0, 0}), invalid_input);  // wrong sum
  CHECK_THROWS_AS(AdmissibleWord::parse(". 1"), invalid_input);
}

TEST_CASE("words with s_1 > 1 stay below the identity word") {
  // s_1 > 1 forces k < n (the identity word S = [n] is the only one with
  // k = n), hence equ < n; the final index always attains the bound.
  for (int n = 1; n <= 8; ++n) {
    for (const auto& w : enumerate_admissible_words(n)) {
      int prefix = 0;
      for (int i = 0; i < w.k(); ++i) prefix += w.c[i];
      CHECK(prefix == w.s.back() - w.k());  // equality at i = k
      CHECK(equ(w) >= 1);
      if (w.s[0] > 1) {
        CHECK(w.k() < n);
        CHECK(equ(w) < n);
      }
    }
  }
}

TEST_CASE("admissible words are counted by Catalan numbers") {
  for (int n = 1; n <= 9; ++n)
    CHECK(static_cast<long long>(enumerate_admissible_words(n).size()) ==
          catalan(n));
}

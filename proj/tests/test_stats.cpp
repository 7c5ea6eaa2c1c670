#include <algorithm>

#include "doctest.h"

#include "comtet/engine.hpp"
#include "comtet/perm.hpp"
#include "comtet/stats.hpp"

using namespace comtet;

namespace {
Permutation P(const char* text) { return Permutation::parse(text); }

template <typename Fn>
void for_all_perms(int n, Fn fn) {
  std::vector<int> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = i + 1;
  do {
    fn(Permutation(vals));
  } while (std::next_permutation(vals.begin(), vals.end()));
}
}  // namespace

TEST_CASE("descent set and friends") {
  CHECK(des_set(Permutation::identity(5)).empty());
  CHECK(des_set(P("54321")) == std::vector<int>{1, 2, 3, 4});
  CHECK(des_set(P("2 5 1 9 8 6 7 4 3")) == std::vector<int>{2, 4, 5, 7, 8});
  CHECK(iar(Permutation::identity(6)) == 6);
  CHECK(iar(P("312")) == 1);
  CHECK(iar(P("1 2 5 4 3")) == 3);
  CHECK(iar(Permutation()) == 0);
  CHECK(ldes(Permutation::identity(4)) == 0);
  CHECK(ldes(P("1 3 2 4")) == 2);
}

TEST_CASE("comp") {
  CHECK(comp(P("3 1 2 4 6 5")) == 3);
  CHECK(comp(Permutation::identity(7)) == 7);
  CHECK(comp(P("231")) == 1);
  CHECK(comp(Permutation()) == 0);
}

TEST_CASE("descent bottoms and extrema sets") {
  CHECK(desb_set(Permutation::identity(3)).empty());
  CHECK(desb_set(P("21")) == std::vector<int>{1});
  CHECK(desb_set(P("312")) == std::vector<int>{1});
  CHECK(lmaxp_set(P("213")) == std::vector<int>{1, 3});
  CHECK(lmax_set(Permutation::identity(4)) == std::vector<int>{1, 2, 3, 4});
  CHECK(lmin_set(P("312")) == std::vector<int>{1, 3});
}

TEST_CASE("double descent variants") {
  CHECK(dd(P("321")) == 2);
  CHECK(dd(Permutation::identity(5)) == 0);
  CHECK(ddinf(P("1")) == 1);
  CHECK(dd0(P("1")) == 0);
  CHECK(dd(P("1")) == 0);
  CHECK(dd0(P("321")) == 1);   // position 2 only: the tail is guarded by +inf
  CHECK(ddinf(P("321")) == 3); // +inf at the front makes position 1 count
  CHECK_THROWS_AS(dd(Permutation()), invalid_input);
}

TEST_CASE("iar is determined by DES and comp by decompose") {
  for (int n = 1; n <= 9; ++n) {
    long long bad = 0;
    for_all_perms(n, [&](const Permutation& pi) {
      const auto D = des_set(pi);
      if (iar(pi) != (D.empty() ? n : D.front())) ++bad;
      if (comp(pi) != static_cast<int>(decompose(pi).size())) ++bad;
      if (ldes(pi) != (D.empty() ? 0 : D.back())) ++bad;
    });
    CHECK(bad == 0);
  }
}

TEST_CASE("sum-compatibility of des, comp, iar") {
  for (int n1 = 0; n1 <= 4; ++n1) {
    for (int n2 = 0; n2 <= 4; ++n2) {
      for_all_perms(n1, [&](const Permutation& a) {
        for_all_perms(n2, [&](const Permutation& b) {
          const Permutation s = direct_sum(a, b);
          CHECK(des(s) == des(a) + des(b));
          CHECK(comp(s) == comp(a) + comp(b));
          const int expected_iar = (a == Permutation::identity(a.size()))
                                       ? a.size() + iar(b)
                                       : iar(a);
          CHECK(iar(s) == expected_iar);
        });
      });
    }
  }
}

TEST_CASE("312-avoiders split [n] into LMAX and DESB") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& pi : enumerate_avoiders(n, PatternSet::parse("312"))) {
      std::vector<int> both = lmax_set(pi);
      const auto desb = desb_set(pi);
      both.insert(both.end(), desb.begin(), desb.end());
      std::sort(both.begin(), both.end());
      CHECK(static_cast<int>(both.size()) == n);
      bool is_range = true;
      for (int i = 0; i < n; ++i) is_range = is_range && both[i] == i + 1;
      CHECK(is_range);
    }
  }
}

TEST_CASE("132-avoiders: LMIN = DESB + first letter, consecutive maxima") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& pi : enumerate_avoiders(n, PatternSet::parse("132"))) {
      std::vector<int> expect = desb_set(pi);
      expect.push_back(pi.value_at(1));
      std::sort(expect.begin(), expect.end());
      expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
      CHECK(lmin_set(pi) == expect);

      // Left-to-right maxima run consecutively from pi(1) up to n.
      const auto lm = lmax_set(pi);
      for (size_t i = 0; i < lm.size(); ++i)
        CHECK(lm[i] == pi.value_at(1) + static_cast<int>(i));
      CHECK(lm.back() == n);

      // The first iar letters are consecutive.
      for (int i = 1; i <= iar(pi); ++i)
        CHECK(pi.value_at(i) == pi.value_at(1) + i - 1);

      // With comp >= 2, the last comp-1 letters are the top values in order.
      const int c = comp(pi);
      if (c >= 2) {
        for (int i = 0; i < c - 1; ++i)
          CHECK(pi.value_at(n - c + 2 + i) == n - c + 2 + i);
      }
    }
  }
}

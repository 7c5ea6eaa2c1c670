#include <map>

#include "doctest.h"

#include "comtet/engine.hpp"
#include "comtet/invseq.hpp"

using namespace comtet;

TEST_CASE("validation and 021 avoidance") {
  CHECK_THROWS_AS(InversionSequence({1}), invalid_input);
  CHECK_THROWS_AS(InversionSequence({0, 2}), invalid_input);
  CHECK(InversionSequence({0, 1, 0, 2}).avoids_021());
  CHECK_FALSE(InversionSequence({0, 0, 2, 1}).avoids_021());
  CHECK(InversionSequence::parse("0,1,0,2") == InversionSequence({0, 1, 0, 2}));
}

TEST_CASE("enumeration of small lengths") {
  CHECK(enumerate_021(1) == std::vector<InversionSequence>{InversionSequence({0})});
  const auto two = enumerate_021(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == InversionSequence({0, 0}));
  CHECK(two[1] == InversionSequence({0, 1}));
  // Large Schroder counts, shifted: 1, 2, 6, 22, 90, 394, 1806.
  const std::vector<long long> expected = {1, 2, 6, 22, 90, 394, 1806};
  for (int n = 1; n <= 7; ++n)
    CHECK(static_cast<long long>(enumerate_021(n).size()) == expected[n - 1]);
  // Every enumerated sequence is valid and avoiding; none missed: compare
  // against the class size via the pattern-avoiding permutations.
  for (int n = 1; n <= 7; ++n)
    CHECK(static_cast<long long>(enumerate_021(n).size()) ==
          count_avoiders(n, PatternSet::parse("2413,4213")));
}

TEST_CASE("statistics") {
  const InversionSequence zeros({0, 0, 0, 0});
  CHECK(asc(zeros) == 0);
  CHECK(izero(zeros) == 4);
  CHECK(da(zeros) == 0);

  const InversionSequence e01({0, 1});
  CHECK(asc_set(e01) == std::vector<int>{1});
  CHECK(izero(e01) == 1);
  // e = (0,1) with sentinel e_3 = 2: position 2 is a double ascent.
  CHECK(da(e01) == 1);

  const InversionSequence e({0, 0, 1, 1, 3});
  CHECK(asc_set(e) == std::vector<int>{2, 4});
  CHECK(izero(e) == 2);
}

TEST_CASE("delta surjection and preimage counts") {
  CHECK(delta(InversionSequence({0, 0})) == InversionSequence({0}));
  CHECK(delta(InversionSequence({0, 1})) == InversionSequence({0}));
  CHECK_THROWS_AS(delta(InversionSequence({0})), invalid_input);

  for (int n = 2; n <= 9; ++n) {
    // Count preimages with izero = 1 of every length-(n-1) sequence.
    std::map<InversionSequence, long long> preimages;
    for_each_021(n, [&](const InversionSequence& e) {
      if (izero(e) == 1) ++preimages[delta(e)];
    });
    for_each_021(n - 1, [&](const InversionSequence& e) {
      const long long expect = 1LL << (izero(e) - 1);
      auto it = preimages.find(e);
      CHECK(it != preimages.end());
      if (it != preimages.end()) CHECK(it->second == expect);
    });
  }
}

TEST_CASE("ascents over 021-avoiders match descents over both classes") {
  for (int n = 1; n <= 9; ++n) {
    std::map<int, long long> by_asc;
    for_each_021(n, [&](const InversionSequence& e) { ++by_asc[asc(e)]; });
    for (const char* cls : {"2413,4213", "2413,3142"}) {
      std::map<int, long long> by_des;
      for_each_avoider(n, PatternSet::parse(cls),
                       [&](const Permutation& pi) { ++by_des[des(pi)]; });
      CHECK(by_asc == by_des);
    }
  }
}

TEST_CASE("recurrence table small values and row sums") {
  const auto table = izero_recurrence_table(12);
  CHECK(table[1][1] == 1);
  CHECK(table[2][1] == 1);
  CHECK(table[2][2] == 1);
  const std::vector<long long> schroder = {1,    2,    6,     22,    90,  394,
                                           1806, 8558, 41586, 206098, 1037718,
                                           5293446};
  for (int n = 1; n <= 12; ++n) {
    Int row_sum = 0;
    for (int k = 1; k <= n; ++k) row_sum += table[n][k];
    CHECK(row_sum == Int(static_cast<long>(schroder[n - 1])));
  }
}

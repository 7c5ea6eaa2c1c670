#include "doctest.h"

#include "comtet/engine.hpp"

using namespace comtet;

namespace {
PatternSet PS(const char* text) { return PatternSet::parse(text); }

bool lower_triangular(const DistMatrix& m) {
  for (int i = 1; i <= m.n; ++i)
    for (int j = i + 1; j <= m.n; ++j)
      if (m.at(i, j) != 0) return false;
  return true;
}

bool diagonal(const DistMatrix& m) {
  for (int i = 1; i <= m.n; ++i)
    for (int j = 1; j <= m.n; ++j)
      if (i != j && m.at(i, j) != 0) return false;
  return true;
}

bool two_by_two(const DistMatrix& m) {
  for (int i = 1; i <= m.n; ++i)
    for (int j = 1; j <= m.n; ++j)
      if ((i > 2 || j > 2) && m.at(i, j) != 0) return false;
  return true;
}

bool zero_one(const DistMatrix& m) {
  for (int i = 1; i <= m.n; ++i)
    for (int j = 1; j <= m.n; ++j)
      if (m.at(i, j) != 0 && m.at(i, j) != 1) return false;
  return true;
}
}  // namespace

TEST_CASE("distribution matrix shapes, single patterns") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(is_symmetric(distribution_matrix(n, PS("312"))));
    CHECK(is_hankel(distribution_matrix(n, PS("132"))));
    CHECK(lower_triangular(distribution_matrix(n, PS("213"))));
    CHECK(two_by_two(distribution_matrix(n, PS("123"))));
  }
}

TEST_CASE("distribution matrix shapes, pairs") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(is_hankel(distribution_matrix(n, PS("132,312"))));
    const DistMatrix m132_321 = distribution_matrix(n, PS("132,321"));
    CHECK(is_hankel(m132_321));
    CHECK(zero_one(m132_321));
    CHECK(diagonal(distribution_matrix(n, PS("213,231"))));
    const DistMatrix m123_312 = distribution_matrix(n, PS("123,312"));
    CHECK(two_by_two(m123_312));
    if (n >= 2) CHECK(m123_312.at(1, 2) == m123_312.at(2, 1));
    CHECK(lower_triangular(distribution_matrix(n, PS("213,312"))));
    CHECK(distribution_matrix(n, PS("231,312")) ==
          transpose(distribution_matrix(n, PS("213,312"))));
    CHECK(lower_triangular(transpose(distribution_matrix(n, PS("231,321")))));
    CHECK(lower_triangular(distribution_matrix(n, PS("132,213"))));
    CHECK(distribution_matrix(n, PS("132,231")) ==
          transpose(distribution_matrix(n, PS("132,213"))));
    CHECK(lower_triangular(distribution_matrix(n, PS("213,321"))));
    CHECK(two_by_two(distribution_matrix(n, PS("123,132"))));
    CHECK(two_by_two(distribution_matrix(n, PS("123,213"))));
    CHECK(two_by_two(distribution_matrix(n, PS("123,231"))));
  }
}

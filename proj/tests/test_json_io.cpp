#include "doctest.h"

#include "comtet/genfun.hpp"
#include "comtet/json_io.hpp"

using namespace comtet;

TEST_CASE("matrix json round-trip") {
  const PatternSet ps = PatternSet::parse("2413,3142");
  const DistMatrix m = distribution_matrix(4, ps);
  const auto j = matrix_to_json(m, ps);
  CHECK(j.at("n") == 4);
  CHECK(j.at("patterns") == nlohmann::json({"2413", "3142"}));
  CHECK(matrix_from_json(j) == m);
}

TEST_CASE("polynomial json round-trip") {
  const MultiPoly p = MultiPoly::variable(Var::t) * Rat(3, 2) +
                      MultiPoly::variable(Var::r, 2) -
                      MultiPoly::constant(7);
  CHECK(poly_from_json(poly_to_json(p)) == p);
  CHECK(poly_to_json(MultiPoly()).empty());
}

TEST_CASE("series json round-trip") {
  const Series s = closed_form(PatternSet::parse("132"), 5);
  const auto j = series_to_json(s);
  CHECK(static_cast<int>(j.size()) == 6);
  CHECK(series_from_json(j) == s);
}

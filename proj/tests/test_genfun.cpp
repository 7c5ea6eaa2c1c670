#include "doctest.h"

#include "comtet/engine.hpp"
#include "comtet/genfun.hpp"
#include "comtet/invseq.hpp"

using namespace comtet;

namespace {
PatternSet PS(const char* text) { return PatternSet::parse(text); }
MultiPoly V(Var v) { return MultiPoly::variable(v); }

long long catalan(int n) {
  long long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

const std::vector<StatMarker>& dic() {
  static const std::vector<StatMarker> v = {
      {Stat::des, Var::t}, {Stat::iar, Var::r}, {Stat::comp, Var::p}};
  return v;
}
}  // namespace

TEST_CASE("narayana series") {
  const Series n = narayana_series(8);
  CHECK(n[0] == MultiPoly::constant(1));
  CHECK(n[1] == MultiPoly::constant(1));
  CHECK(n[2] == MultiPoly::constant(1) + V(Var::t));
  // z^3: 1 + 3t + t^2
  CHECK(n[3] == MultiPoly::constant(1) + V(Var::t) * Rat(3) +
                    V(Var::t) * V(Var::t));
  for (int k = 0; k <= 8; ++k)
    CHECK(n[k].eval_one(Var::t) == MultiPoly::constant(catalan(k)));
}

TEST_CASE("321 and 123 descent series specialize to Catalan") {
  const Series c = catalan321_series(9);
  const Series cs = catalan123_series(9);
  CHECK(cs[0].is_zero());
  for (int k = 0; k <= 9; ++k) {
    CHECK(c[k].eval_one(Var::t) == MultiPoly::constant(catalan(k)));
    if (k >= 1)
      CHECK(cs[k].eval_one(Var::t) == MultiPoly::constant(catalan(k)));
  }
}

TEST_CASE("the radical series divide out to integer polynomials") {
  for (const Series& s :
       {narayana_series(10), catalan321_series(10), catalan123_series(10)}) {
    for (int n = 0; n <= s.order(); ++n)
      for (const auto& [m, c] : s[n].terms()) {
        CHECK(c.get_den() == 1);
        for (int v = 0; v < kNumVars; ++v)
          if (static_cast<Var>(v) != Var::t) CHECK(m.e[v] == 0);
      }
  }
}

TEST_CASE("the 123 series is the reversed 321 series") {
  // C* coefficient at z^n equals the degree-(n-1) reversal of C's.
  const int ord = 9;
  const Series c = catalan321_series(ord);
  const Series cs = catalan123_series(ord);
  for (int n = 1; n <= ord; ++n) {
    MultiPoly reversed;
    for (int k = 0; k <= n - 1; ++k) {
      const MultiPoly ck = c[n].coeff_of(Var::t, k);
      REQUIRE(ck.is_constant());
      reversed += MultiPoly::variable(Var::t, n - 1 - k) * ck.constant_term();
    }
    CHECK(cs[n] == reversed);
  }
}

TEST_CASE("schroder S(t) series") {
  const Series s = schroder_S_series(12);
  CHECK(s[0].is_zero());
  CHECK(s[1] == MultiPoly::constant(1));
  CHECK(s[2] == MultiPoly::constant(1) + V(Var::t));
  const std::vector<long long> schroder = {1, 2, 6, 22, 90, 394, 1806, 8558};
  for (int n = 1; n <= 8; ++n)
    CHECK(s[n].eval_one(Var::t) == MultiPoly::constant(schroder[n - 1]));
}

TEST_CASE("closed forms match enumeration at small order") {
  for (const char* key : {"312", "321", "132", "213", "231", "123",
                          "213,231", "123,321", "2413,3142"}) {
    const PatternSet ps = PS(key);
    const Series cf = closed_form(ps, 6);
    CHECK(cf[0] == MultiPoly::constant(1));
    for (int n = 1; n <= 6; ++n)
      CHECK(cf[n] == joint_distribution(n, ps, dic()));
  }
  CHECK_THROWS_AS(closed_form(PS("1234"), 5), unsupported_pattern);
  CHECK(has_closed_form(PS("3142,2413")));  // order-insensitive key
  CHECK_FALSE(has_closed_form(PS("1234,4321")));
}

TEST_CASE("the reduced series (S - 1)/(rpz) is exact for every closed form") {
  const MultiPoly rp = V(Var::r) * V(Var::p);
  for (const char* key :
       {"213", "312", "132", "123", "213,231", "2413,3142"}) {
    const Series cf = closed_form(PS(key), 8);
    const Series tilde = (cf - Series::one(8))
                             .div_by_z_power(1)
                             .div(Series::constant(rp, 7));
    CHECK(Series::one(7) +
              Series::constant(rp, 7) * Series::z(7) * tilde ==
          cf.truncated(7));
    for (int n = 0; n <= tilde.order(); ++n)
      for (const auto& [m, c] : tilde[n].terms()) CHECK(c.get_den() == 1);
  }
}

TEST_CASE("ultimately-zero class") {
  const Series cf = closed_form(PS("123,321"), 10);
  for (int n = 5; n <= 10; ++n) CHECK(cf[n].is_zero());
}

TEST_CASE("comp marker from indecomposables: {312,321}") {
  const int ord = 9;
  const Series one = Series::one(ord), Z = Series::z(ord);
  const MultiPoly t = V(Var::t), r = V(Var::r);
  // I(t, r) = rz + t r z^2 / (1 - rz); at r = 1: z + t z^2 / (1 - z).
  const Series I_full =
      Series::constant(r, ord) * Z +
      (Series::constant(t * r, ord) * Z * Z).div(one - Series::constant(r, ord) * Z);
  const Series I_at1 =
      Z + (Series::constant(t, ord) * Z * Z).div(one - Z);
  const Series F = comp_from_indecomposables(I_full, I_at1, r, Var::p);
  CHECK(F == closed_form(PS("312,321"), ord));
}

TEST_CASE("comp marker from indecomposables: {231,312}") {
  const int ord = 9;
  const Series one = Series::one(ord), Z = Series::z(ord);
  const MultiPoly t = V(Var::t), r = V(Var::r);
  // I(t, r) = rz / (1 - tz).
  const Series I_full =
      (Series::constant(r, ord) * Z).div(one - Series::constant(t, ord) * Z);
  const Series I_at1 = Z.div(one - Series::constant(t, ord) * Z);
  const Series F = comp_from_indecomposables(I_full, I_at1, r, Var::p);
  CHECK(F == closed_form(PS("231,312"), ord));
  // q = 1 marginalizes comp.
  CHECK(F.eval_one(Var::p) == closed_form(PS("231,312"), ord).eval_one(Var::p));
}

TEST_CASE("symmetric comp form: 321 with bare (iar, comp)") {
  const int ord = 7;
  // I1 = plain counting series of indecomposable 321-avoiders; the lemma
  // then gives the (comp, iar) joint distribution.
  Series I1(ord);
  for (int n = 1; n <= ord; ++n) {
    long long cnt = 0;
    for_each_avoider(n, PS("321"), [&](const Permutation& pi) {
      if (comp(pi) == 1) ++cnt;
    });
    I1.set_coeff(n, MultiPoly::constant(static_cast<long>(cnt)));
  }
  const Series F = symmetric_comp_form(I1, Var::p, Var::r);
  CHECK(F == F.swap_vars(Var::p, Var::r));
  for (int n = 1; n <= ord; ++n)
    CHECK(F[n] == joint_distribution(
                      n, PS("321"),
                      {{Stat::iar, Var::r}, {Stat::comp, Var::p}}));
}

TEST_CASE("symmetric comp form: separables keep des refined") {
  const int ord = 7;
  // The separable involution preserves DESB, so des can ride along.
  Series I1(ord);
  for (int n = 1; n <= ord; ++n) {
    MultiPoly acc;
    for_each_avoider(n, PS("2413,3142"), [&](const Permutation& pi) {
      if (comp(pi) != 1) return;
      Monomial m;
      m.e[static_cast<int>(Var::t)] = static_cast<std::uint16_t>(des(pi));
      acc.add_term(m, Rat(1));
    });
    I1.set_coeff(n, acc);
  }
  const Series F = symmetric_comp_form(I1, Var::p, Var::r);
  CHECK(F == F.swap_vars(Var::p, Var::r));
  for (int n = 1; n <= ord; ++n)
    CHECK(F[n] == joint_distribution(n, PS("2413,3142"), dic()));
}

TEST_CASE("separable indecomposables satisfy I = S/(1+S)") {
  const int ord = 8;
  Series I1(ord);
  for (int n = 1; n <= ord; ++n) {
    MultiPoly acc;
    for_each_avoider(n, PS("2413,3142"), [&](const Permutation& pi) {
      if (comp(pi) != 1) return;
      Monomial m;
      m.e[static_cast<int>(Var::t)] = static_cast<std::uint16_t>(des(pi));
      acc.add_term(m, Rat(1));
    });
    I1.set_coeff(n, acc);
  }
  const Series S = schroder_S_series(ord);
  CHECK(I1 == S.div(Series::one(ord) + S));
}

TEST_CASE("top-descent 123 extraction") {
  const int ord = 9;
  const Series closed = top_des_123_closed(ord);
  const Series extracted = top_des_123_series(ord);
  CHECK(closed == extracted);
  CHECK(closed == closed.swap_vars(Var::r, Var::p));
  const MultiPoly r = V(Var::r), p = V(Var::p);
  CHECK(closed[2] == r * r * p * p);
  // Against brute force: des = n - 2 slice of the 123 class.
  for (int n = 2; n <= ord; ++n) {
    MultiPoly acc;
    for_each_avoider(n, PS("123"), [&](const Permutation& pi) {
      if (des(pi) != n - 2) return;
      Monomial m;
      m.e[static_cast<int>(Var::r)] = static_cast<std::uint16_t>(iar(pi));
      m.e[static_cast<int>(Var::p)] = static_cast<std::uint16_t>(comp(pi));
      acc.add_term(m, Rat(1));
    });
    CHECK(extracted[n] == acc);
  }
}

TEST_CASE("hankel identity for LMAX-refined 312 matrices") {
  for (int n = 2; n <= 8; ++n) {
    const auto refined = refined_matrices(n, PS("312"), {SetStat::LMAX});
    for (const auto& [key, m] : refined) {
      if (!key.empty() && key.front() == 1) continue;
      // Zero above the anti-diagonal, then the two-variable identity.
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (i + j >= n + 2) CHECK(m.at(i, j) == 0);
      CHECK(hankel_identity_residual(m).is_zero());
    }
  }
}

TEST_CASE("LMAX keys containing 1 reduce by stripping the leading letter") {
  // With 1 in S the avoider starts with 1; deleting it shifts the matrix
  // one step down the diagonal and the key down by one.
  for (const char* pat : {"312", "321"}) {
    for (int n = 2; n <= 7; ++n) {
      const auto big = refined_matrices(n, PS(pat), {SetStat::LMAX});
      const auto small = refined_matrices(n - 1, PS(pat), {SetStat::LMAX});
      for (const auto& [key, m] : big) {
        if (key.empty() || key.front() != 1) continue;
        RefKey reduced_key(key.begin() + 1, key.end());
        for (int& v : reduced_key)
          if (v > 0) --v;
        const auto it = small.find(reduced_key);
        REQUIRE(it != small.end());
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            const long long expect =
                (i >= 2 && j >= 2) ? it->second.at(i - 1, j - 1) : 0;
            CHECK(m.at(i, j) == expect);
          }
      }
    }
  }
}

TEST_CASE("cubic G at tiny order") {
  const CubicGReport rep = verify_cubic_G(3);
  CHECK(rep.ok());
  const MultiPoly t = V(Var::t), x = V(Var::x), y = V(Var::y);
  CHECK(rep.g_perm[1] == y);
  CHECK(rep.g_perm[2] == y * y + t * x * y);
  CHECK(rep.g_perm[3] == y * y * y + t * x * y * y * Rat(2) + t * y * Rat(2) +
                             t * t * x * x * y);
}

TEST_CASE("sepa system low-order series") {
  const SepaSystemReport rep = verify_sepa_system(4);
  CHECK(rep.all_zero());
}

TEST_CASE("L and R series expansions start as printed") {
  const PatternSet sep = PS("2413,3142");
  const Series L = joint_series(2, sep, {{Stat::des, Var::t},
                                         {Stat::dd0, Var::x},
                                         {Stat::iar, Var::y}}) -
                   Series::one(2);
  const Series R = joint_series(2, sep, {{Stat::des, Var::t},
                                         {Stat::ddinf, Var::x}}) -
                   Series::one(2);
  const MultiPoly t = V(Var::t), x = V(Var::x), y = V(Var::y);
  CHECK(L[1] == y);
  CHECK(L[2] == t * y + y * y);
  CHECK(R[1] == x);
  CHECK(R[2] == MultiPoly::constant(1) + t * x * x);
}

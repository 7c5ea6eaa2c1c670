#include "comtet/genfun.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "comtet/invseq.hpp"

namespace comtet {

namespace {

MultiPoly V(Var v) { return MultiPoly::variable(v); }
MultiPoly K(long v) { return MultiPoly::constant(v); }

// Shorthand bundle for formula transcription at a fixed working order.
struct Gf {
  int w;
  Series one, Z;
  MultiPoly t, r, p;
  explicit Gf(int order)
      : w(order),
        one(Series::one(order)),
        Z(Series::z(order)),
        t(V(Var::t)),
        r(V(Var::r)),
        p(V(Var::p)) {}
  Series c(const MultiPoly& m) const { return Series::constant(m, w); }
  Series c(long v) const { return Series::constant(Rat(v), w); }
};

}  // namespace

Series narayana_series(int order) {
  const Gf g(order + 1);
  try {
    const Series rad =
        g.one - (g.c(g.t + K(1)) * g.Z) * Rat(2) + g.c((g.t - K(1)) * (g.t - K(1))) * g.Z * g.Z;
    const Series num = g.one + g.c(g.t - K(1)) * g.Z - rad.sqrt();
    return num.div_by_z_power(1).div(Series::constant(g.t * Rat(2), order));
  } catch (const division_error& e) {
    throw internal_consistency_error(std::string("narayana_series: ") + e.what());
  }
}

Series catalan321_series(int order) {
  const Gf g(order + 1);
  try {
    const Series rad = g.one - g.Z * Rat(4) + g.c(K(4) - g.t * Rat(4)) * g.Z * g.Z;
    const Series num = g.one - rad.sqrt();
    Series den = g.c(K(2)) + g.c(g.t * Rat(2) - K(2)) * g.Z;  // 2(tz - z + 1)
    return num.div_by_z_power(1).div(den.truncated(order));
  } catch (const division_error& e) {
    throw internal_consistency_error(std::string("catalan321_series: ") + e.what());
  }
}

Series catalan123_series(int order) {
  const Gf g(order + 1);
  try {
    const Series rad = g.one - g.c(g.t * Rat(4)) * g.Z +
                       g.c(g.t * g.t * Rat(4) - g.t * Rat(4)) * g.Z * g.Z;
    const Series num = -g.one + g.c(g.t * Rat(2)) * g.Z +
                       g.c(g.t * Rat(2) - g.t * g.t * Rat(2)) * g.Z * g.Z +
                       rad.sqrt();
    // 2 t^2 z (tz - z - 1) / z = -2t^2 + (2t^3 - 2t^2) z
    Series den = g.c(g.t * g.t * Rat(-2)) +
                 g.c(g.t * g.t * g.t * Rat(2) - g.t * g.t * Rat(2)) * g.Z;
    return num.div_by_z_power(1).div(den.truncated(order));
  } catch (const division_error& e) {
    throw internal_consistency_error(std::string("catalan123_series: ") + e.what());
  }
}

Series schroder_S_series(int order) {
  const Gf g(order);
  Series s = Series::zero(order);
  for (int pass = 0; pass <= order; ++pass)
    s = g.Z + g.c(g.t + K(1)) * g.Z * s + g.c(g.t) * g.Z * s * s +
        g.c(g.t) * s * s * s;
  return s;
}

Series schroder_S1_series(int order) {
  const Gf g(order);
  const MultiPoly x = V(Var::x);
  Series s = Series::zero(order);
  for (int pass = 0; pass <= order; ++pass)
    s = g.c(g.t) * s * s * s + g.c(g.t) * g.Z * s * s +
        (g.Z + g.c(g.t * x) * g.Z) * s + g.Z;
  return s;
}

namespace {

// --- Table rows: the reduced generating function (S(P) - 1)/(rpz). ---

Series row_312(const Gf& g) {
  const Series tN = g.c(g.t) * narayana_series(g.w);
  const Series num = g.one - (g.c(g.r) + g.c(g.p) + tN) * g.Z +
                     (g.c(g.r * g.p) + (g.c(g.r) + g.c(g.p) - g.one) * tN) * g.Z * g.Z;
  const Series den = (g.one - g.c(g.r * g.p) * g.Z) *
                     (g.one - g.c(g.r) * g.Z - tN * g.Z) *
                     (g.one - g.c(g.p) * g.Z - tN * g.Z);
  return num.div(den);
}

Series row_321(const Gf& g) {
  const Series C = catalan321_series(g.w);
  const Series num = g.Z * g.c(g.r * g.p - g.r + g.t) * C * C -
                     (g.Z * g.c(g.r * g.p) + g.c(g.p) - g.one) * C + g.c(g.p);
  const Series den = (g.one - g.c(g.r * g.p) * g.Z) *
                     (g.one - g.c(g.r) * g.Z * C) *
                     (g.c(g.p) + C - g.c(g.p) * C);
  return num.div(den);
}

Series row_132(const Gf& g) {
  const Series N = narayana_series(g.w);
  const Series head = g.one.div(g.one - g.c(g.r * g.p) * g.Z);
  const Series num = (g.one - g.Z) * (N - g.one) * g.c(g.t);
  const Series den = (g.one - g.c(g.r) * g.Z) * (g.one - g.c(g.p) * g.Z) *
                     (g.one - g.Z - (N - g.one) * g.c(g.t) * g.Z);
  return head + num.div(den);
}

Series row_213_231(const Gf& g, const MultiPoly& u) {
  // u = r for the 213 row, u = p for the 231 row.
  const Series W = g.c(g.t) * narayana_series(g.w) - g.c(g.t) + g.one;
  const Series num = (g.one - g.c(u) * g.Z) * W;
  const Series den = (g.one - g.c(g.r * g.p) * g.Z) *
                     (g.one - g.c(u) * g.Z * W);
  return num.div(den);
}

Series row_123(const Gf& g) {
  const Series Cs = catalan123_series(g.w);
  const Series tz = g.c(g.t) * g.Z;
  const Series first = ((g.one - g.c(g.p)) * g.Z *
                        (g.c(g.t * g.r) * g.Z - tz - g.c(g.r)))
                           .div((g.one - tz) * (g.one - tz));
  const Series second = ((g.one + g.c(g.r) * g.Z - tz) * Cs.div_by_z_power(1))
                            .div((g.one + g.Z - tz).truncated(g.w - 1));
  return first.truncated(g.w - 1) + second;
}

Series row_schroder(const Gf& g) {
  const Series S = schroder_S_series(g.w);
  const Series num = S.div_by_z_power(1) +
                     (g.c(K(1) - g.r - g.p) * S).truncated(g.w - 1) +
                     (g.c((K(1) - g.r) * (K(1) - g.p)) * S * S).truncated(g.w - 1);
  const Series den = ((g.one - g.c(g.r * g.p) * g.Z) *
                      (g.one + g.c(K(1) - g.p) * S) *
                      (g.one + g.c(K(1) - g.r) * S))
                         .truncated(g.w - 1);
  return num.div(den);
}

// --- Two patterns of length 3. ---

Series row_132_312(const Gf& g) {
  return g.one.div(g.one - g.c(g.r * g.p) * g.Z) +
         ((g.one - g.Z) * g.c(g.t) * g.Z)
             .div((g.one - g.c(g.r) * g.Z) * (g.one - g.c(g.p) * g.Z) *
                  (g.one - g.Z - g.c(g.t) * g.Z));
}

Series row_132_321(const Gf& g) {
  return g.one.div(g.one - g.c(g.r * g.p) * g.Z) +
         (g.c(g.t) * g.Z).div((g.one - g.c(g.r) * g.Z) *
                              (g.one - g.c(g.p) * g.Z) * (g.one - g.Z));
}

Series row_213_231_pair(const Gf& g) {
  return (g.one - g.Z).div((g.one - g.c(g.r * g.p) * g.Z) *
                           (g.one - g.Z - g.c(g.t) * g.Z));
}

Series row_123_312(const Gf& g) {
  const Series tz = g.c(g.t) * g.Z;
  return (g.one + g.c(g.r * g.p) * g.Z).div(g.one - tz) +
         (g.c((g.r + g.p) * g.t) * g.Z * g.Z).div((g.one - tz) * (g.one - tz)) +
         (g.c(g.t * g.t) * g.Z * g.Z * g.Z)
             .div((g.one - tz) * (g.one - tz) * (g.one - tz));
}

Series row_213_312(const Gf& g, bool swapped) {
  const MultiPoly& u = swapped ? g.p : g.r;
  return (g.one - g.c(u) * g.Z)
      .div((g.one - g.c(g.r * g.p) * g.Z) * (g.one - g.c(u + g.t) * g.Z));
}

Series row_231_321(const Gf& g) {
  const Series num =
      g.one - g.c(K(1) + g.p - g.t) * g.Z + g.c(g.p - g.t * g.p) * g.Z * g.Z;
  const Series den = (g.one - g.c(g.r * g.p) * g.Z) *
                     (g.one - g.c(g.p + K(1)) * g.Z +
                      g.c(g.p - g.t * g.p) * g.Z * g.Z);
  return num.div(den);
}

Series row_132_213(const Gf& g, bool swapped) {
  const MultiPoly& u = swapped ? g.p : g.r;
  return g.one.div(g.one - g.c(g.r * g.p) * g.Z) +
         (g.c(g.t) * g.Z)
             .div((g.one - g.c(u) * g.Z) * (g.one - g.Z - g.c(g.t) * g.Z));
}

Series row_213_321(const Gf& g) {
  return g.one.div(g.one - g.c(g.r * g.p) * g.Z) +
         (g.c(g.t) * g.Z).div((g.one - g.Z) * (g.one - g.c(g.r) * g.Z) *
                              (g.one - g.c(g.r * g.p) * g.Z));
}

Series row_312_321(const Gf& g) {
  return g.one.div(g.one - g.c(g.r * g.p) * g.Z) +
         ((g.one - g.Z) * g.c(g.t) * g.Z)
             .div((g.one - g.c(g.r * g.p) * g.Z) * (g.one - g.c(g.r) * g.Z) *
                  (g.one - g.c(K(1) + g.p) * g.Z +
                   g.c(g.p - g.t * g.p) * g.Z * g.Z));
}

Series row_123_132(const Gf& g) {
  const Series tz = g.c(g.t) * g.Z;
  const Series body =
      (g.c(g.t) * g.Z * (g.one + g.Z - tz) *
       (g.one + g.c(g.r - g.t) * g.Z + g.c(g.t - g.r * g.t) * g.Z * g.Z))
          .div((g.one - tz) * ((g.one - tz) * (g.one - tz) - g.c(g.t) * g.Z * g.Z));
  return g.one + g.c(g.r * g.p) * g.Z +
         (g.c(g.t * g.p) * g.Z * g.Z).div(g.one - tz) + body;
}

Series row_123_213(const Gf& g) {
  const Series tz = g.c(g.t) * g.Z;
  const Series body =
      (g.c(g.t) * g.Z * (g.one - tz + g.c(g.r) * g.Z) * (g.one - tz + g.Z))
          .div((g.one - tz) * ((g.one - tz) * (g.one - tz) - g.c(g.t) * g.Z * g.Z));
  return g.one + (g.c(g.r * g.p) * g.Z).div(g.one - tz) + body;
}

Series row_123_231(const Gf& g) {
  const Series tz = g.c(g.t) * g.Z;
  return (g.one + g.c(g.r * g.p) * g.Z).div(g.one - tz) +
         ((g.one + g.c(g.p) - g.c(g.t * g.p) * g.Z) * g.c(g.t) * g.Z * g.Z)
             .div((g.one - tz) * (g.one - tz) * (g.one - tz));
}

Series row_123_321(const Gf& g) {
  return g.one + g.c(g.t + g.r * g.p) * g.Z +
         g.c((K(1) + g.r) * (K(1) + g.p) * g.t) * g.Z * g.Z +
         g.c((g.r * Rat(2) + g.t + g.p * g.t) * g.t) * g.Z * g.Z * g.Z;
}

using RowFn = std::function<Series(const Gf&)>;

const std::map<std::string, RowFn>& row_registry() {
  static const std::map<std::string, RowFn> reg = {
      {"312", row_312},
      {"321", row_321},
      {"132", row_132},
      {"213", [](const Gf& g) { return row_213_231(g, g.r); }},
      {"231", [](const Gf& g) { return row_213_231(g, g.p); }},
      {"123", row_123},
      {"132,312", row_132_312},
      {"132,321", row_132_321},
      {"213,231", row_213_231_pair},
      {"123,312", row_123_312},
      {"213,312", [](const Gf& g) { return row_213_312(g, false); }},
      {"231,312", [](const Gf& g) { return row_213_312(g, true); }},
      {"231,321", row_231_321},
      {"132,213", [](const Gf& g) { return row_132_213(g, false); }},
      {"132,231", [](const Gf& g) { return row_132_213(g, true); }},
      {"213,321", row_213_321},
      {"312,321", row_312_321},
      {"123,132", row_123_132},
      {"123,213", row_123_213},
      {"123,231", row_123_231},
      {"123,321", row_123_321},
      {"2413,3142", row_schroder},
      {"2413,4213", row_schroder},
      {"3412,4312", row_schroder},
  };
  return reg;
}

std::string canonical_key(const PatternSet& ps) {
  std::vector<std::string> words;
  for (const auto& pat : ps.patterns) {
    std::string w;
    for (int v : pat.values()) w += std::to_string(v);
    words.push_back(w);
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::string key;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i) key += ',';
    key += words[i];
  }
  return key;
}

}  // namespace

bool has_closed_form(const PatternSet& ps) {
  return row_registry().count(canonical_key(ps)) > 0;
}

Series closed_form(const PatternSet& ps, int order) {
  const auto& reg = row_registry();
  auto it = reg.find(canonical_key(ps));
  if (it == reg.end())
    throw unsupported_pattern("no closed form for pattern set " + ps.str());
  const Gf g(order + 4);
  const Series tilde = it->second(g);
  // S = 1 + rpz * S~
  return (Series::one(tilde.order()) +
          Series::constant(g.r * g.p, tilde.order()) *
              Series::z(tilde.order()) * tilde)
      .truncated(order);
}

CubicGReport verify_cubic_G(int order) {
  CubicGReport rep{Series(order), Series(order), Series(order), false, false};
  const PatternSet cls = PatternSet::parse("2413,4213");
  rep.g_perm = joint_series(order, cls,
                            {{Stat::des, Var::t}, {Stat::dd, Var::x}, {Stat::iar, Var::y}}) -
               Series::one(order);
  rep.g_inv = inv_joint_series(order, {{InvStat::asc, Var::t},
                                       {InvStat::da, Var::x},
                                       {InvStat::izero, Var::y}}) -
              Series::one(order);
  rep.sides_agree = rep.g_perm == rep.g_inv;

  const Gf g(order);
  const MultiPoly t = V(Var::t), x = V(Var::x), y = V(Var::y);
  const Series& G = rep.g_perm;
  const Series a1 =
      g.Z * g.c(t * x * y * y + y * y * y * Rat(3) - y * y * Rat(2)) -
      g.c(y * y);
  const Series c2 =
      g.Z * g.c(t * x * y * y * Rat(2) - t * x * y * Rat(2) +
                y * y * y * Rat(3) + t * y - y * y * Rat(4) + y) +
      g.c(y * Rat(2) - y * y * Rat(2));
  const Series c3 =
      g.Z * g.c(t * x * y * y - t * x * y * Rat(2) + y * y * y + t * x +
                t * y - y * y * Rat(2) - t + y) +
      g.c(t + y * Rat(2) - K(1) - y * y);
  rep.residual =
      g.Z * g.c(y * y * y) + a1 * G + c2 * (G * G) + c3 * (G * G * G);
  rep.residual_zero = rep.residual.is_zero();
  return rep;
}

bool SepaSystemReport::all_zero() const {
  for (const auto& s : residuals)
    if (!s.is_zero()) return false;
  for (const auto& s : closed_vs_brute)
    if (!s.is_zero()) return false;
  return true;
}

SepaSystemReport verify_sepa_system(int order) {
  const PatternSet sep = PatternSet::parse("2413,3142");
  const MultiPoly t = V(Var::t), x = V(Var::x), y = V(Var::y);
  const Gf g(order);

  const Series S = joint_series(order, sep,
                                {{Stat::des, Var::t}, {Stat::dd, Var::x}, {Stat::iar, Var::y}}) -
                   g.one;
  const Series L = joint_series(order, sep,
                                {{Stat::des, Var::t}, {Stat::dd0, Var::x}, {Stat::iar, Var::y}}) -
                   g.one;
  const Series R = joint_series(order, sep,
                                {{Stat::des, Var::t}, {Stat::ddinf, Var::x}}) -
                   g.one;
  const Series S1 = S.eval_one(Var::y);
  const Series L1 = L.eval_one(Var::y);
  const Series B = (g.c(y) * g.Z).div(g.one - g.c(y) * g.Z);
  const Series Lt = L - B;
  const Series tR = g.c(t) * R;
  const Series tRB = tR * B;
  const Series tRL1 = tR * L1;

  SepaSystemReport rep{{Series(order), Series(order), Series(order),
                        Series(order), Series(order)},
                       {Series(order), Series(order), Series(order)},
                       };
  rep.residuals[0] =
      L1 * (g.one + g.c(t * x) * S1) - S1 * (g.one + g.c(t) * S1);
  rep.residuals[1] = R * (g.one + S1) - S1 * (S1 + g.c(x));
  rep.residuals[2] = S1 - (g.c(t) * S1 * S1 * S1 + g.c(t) * g.Z * S1 * S1 +
                           (g.Z + g.c(t * x) * g.Z) * S1 + g.Z);
  rep.residuals[3] =
      (g.one - g.Z) * Lt * (g.one - tRB) * (g.one - tRL1) -
      g.c(t) * S1 * B * (g.one + B) * (g.one - tRL1) -
      g.c(t) * g.Z * S1 * Lt * (g.c(2) + L1 + B + tR - tRL1 * B);
  rep.residuals[4] = S * (g.one - tRB) * (g.one - tRL1) -
                     B * (g.one + tR) * (g.one - tRL1) -
                     g.Z * Lt * (g.one + tR) * (g.one + tR);

  // The rational/cubic route for S1, L1 and R must match enumeration.
  const Series S1c = schroder_S1_series(order);
  rep.closed_vs_brute[0] = S1c - S1;
  rep.closed_vs_brute[1] =
      (S1c * (g.one + g.c(t) * S1c)).div(g.one + g.c(t * x) * S1c) - L1;
  rep.closed_vs_brute[2] = (S1c * (S1c + g.c(x))).div(g.one + S1c) - R;
  return rep;
}

Series comp_from_indecomposables(const Series& I_full, const Series& I_at1,
                                 const MultiPoly& w_coeff, Var comp_var) {
  const int order = std::min(I_full.order(), I_at1.order());
  const Gf g(order);
  const Series W = g.Z * g.c(w_coeff);
  const Series q = g.c(V(comp_var));
  return g.one.div(g.one - q * W) +
         (q * (I_full.truncated(order) - W))
             .div((g.one - q * I_at1.truncated(order)) * (g.one - q * W));
}

Series symmetric_comp_form(const Series& I1, Var comp_var, Var st_var) {
  const int order = I1.order();
  const Gf g(order);
  const MultiPoly rv = V(comp_var), sv = V(st_var);
  const Series num = g.one - g.c(rv * sv) * g.Z +
                     (g.c(rv * sv) * g.Z + g.c(rv * sv - rv - sv)) * I1;
  const Series den = (g.one - g.c(rv) * I1) * (g.one - g.c(sv) * I1) *
                     (g.one - g.c(rv * sv) * g.Z);
  return num.div(den);
}

Series top_des_123_series(int order) {
  const Series cf = closed_form(PatternSet::parse("123"), order);
  Series out(order);
  for (int n = 2; n <= order; ++n)
    out.set_coeff(n, cf[n].coeff_of(Var::t, n - 2));
  return out;
}

Series top_des_123_closed(int order) {
  const Gf g(order);
  const Series t1 =
      (g.c(g.r * g.r * g.p * g.p) * g.Z * g.Z).div(g.one - g.Z);
  const Series t2 = (g.c((g.r + g.p) * g.r * g.p) * g.Z * g.Z * g.Z)
                        .div((g.one - g.Z) * (g.one - g.Z));
  const Series t3 =
      ((g.Z * g.Z * g.Z + g.Z * g.Z * g.Z * g.Z * Rat(2)) * g.c(g.r * g.p))
          .div((g.one - g.Z) * (g.one - g.Z) * (g.one - g.Z * Rat(2)));
  return t1 + t2 + t3;
}

MultiPoly hankel_identity_residual(const DistMatrix& m) {
  const MultiPoly x = V(Var::x), y = V(Var::y);
  MultiPoly Mxy, Nx, Ny;
  for (int i = 1; i <= m.n; ++i) {
    for (int j = 1; j <= m.n; ++j) {
      const long v = static_cast<long>(m.at(i, j));
      if (!v) continue;
      Monomial mo;
      mo.e[static_cast<int>(Var::x)] = static_cast<std::uint16_t>(i);
      mo.e[static_cast<int>(Var::y)] = static_cast<std::uint16_t>(j);
      Mxy.add_term(mo, Rat(v));
    }
    if (const long v = static_cast<long>(m.at(i, 1)); v != 0) {
      Monomial mx, my;
      mx.e[static_cast<int>(Var::x)] = static_cast<std::uint16_t>(i);
      my.e[static_cast<int>(Var::y)] = static_cast<std::uint16_t>(i);
      Nx.add_term(mx, Rat(v));
      Ny.add_term(my, Rat(v));
    }
  }
  return (x - y) * Mxy - x * y * (Nx - Ny);
}

}  // namespace comtet

#pragma once

#include <array>

#include "comtet/engine.hpp"
#include "comtet/perm.hpp"
#include "comtet/series.hpp"

namespace comtet {

// Narayana polynomial generating function N(t;z); t = 1 gives the Catalan
// numbers.
Series narayana_series(int order);

// Descent polynomial generating function over 321-avoiders (Barnabei,
// Bonetti, Silimbani).
Series catalan321_series(int order);

// Descent polynomial generating function over 123-avoiders; zero constant
// term.
Series catalan123_series(int order);

// The full (des, iar, comp) |-> (t, r, p) generating function over S_n(P),
// constant term 1. Supported P: the six single patterns of length 3, the
// fifteen pairs of length-3 patterns, and the pairs (2413,3142),
// (2413,4213), (3412,4312). Throws unsupported_pattern otherwise.
Series closed_form(const PatternSet& ps, int order);
bool has_closed_form(const PatternSet& ps);

// Descent generating function S(t) over separable permutations: the unique
// series with zero constant term satisfying
//   S = z + (1+t) z S + t z S^2 + t S^3.
Series schroder_S_series(int order);

// S_1(t,x): the (des, dd) series over separable permutations, from its cubic
//   S_1 = t S_1^3 + t z S_1^2 + (z + t x z) S_1 + z.
Series schroder_S1_series(int order);

// The cubic functional equation for G(t,x,y;z), the (des, dd, iar) series
// over S_n(2413,4213): builds G twice (from permutations and from
// 021-avoiding inversion sequences via (asc, da, izero)) and evaluates the
// cubic's residual, which must vanish.
struct CubicGReport {
  Series g_perm;
  Series g_inv;
  Series residual;
  bool sides_agree = false;
  bool residual_zero = false;
  bool ok() const { return sides_agree && residual_zero; }
};
CubicGReport verify_cubic_G(int order);

// The five-equation system tying together the (des, dd*, iar) series over
// separable permutations: L (with dd0), R (with ddinf), S (with dd),
// their y = 1 specializations and B = yz/(1-yz). All residuals must vanish;
// closed_vs_brute compares the rational/cubic route for S1, L1, R against
// enumeration.
struct SepaSystemReport {
  std::array<Series, 5> residuals;
  std::array<Series, 3> closed_vs_brute;  // S1, L1, R
  bool all_zero() const;
};
SepaSystemReport verify_sepa_system(int order);

// F_P with a marker for comp from the indecomposable-permutation series:
//   F = 1/(1-qw) + q (I - w) / ((1-q I_1)(1-q w)),
// where I carries all statistic markers, I_1 has the partially
// sum-compatible markers set to 1, and w_coeff is the weight monomial of the
// singleton permutation (the z factor is implicit).
Series comp_from_indecomposables(const Series& I_full, const Series& I_at1,
                                 const MultiPoly& w_coeff, Var comp_var);

// The symmetric closed form in terms of I_P(1):
//   F(r,s) = (1 - rsz + (rsz + rs - r - s) I1) /
//            ((1 - r I1)(1 - s I1)(1 - rsz)),
// comp marked by comp_var, the partner Comtet statistic by st_var.
Series symmetric_comp_form(const Series& I1, Var comp_var, Var st_var);

// Coefficient of t^(n-2) in the z^n coefficient of closed_form({123}),
// n >= 2: the (iar, comp) distribution over 123-avoiders with des = n-2.
Series top_des_123_series(int order);
// The same series from its displayed closed form.
Series top_des_123_closed(int order);

// (x - y) M(x,y) - x y (N(x) - N(y)) for M the matrix generating polynomial
// and N its first column; identically zero for Hankel matrices vanishing
// above the main anti-diagonal.
MultiPoly hankel_identity_residual(const DistMatrix& m);

}  // namespace comtet

#pragma once

#include <vector>

#include "comtet/perm.hpp"

namespace comtet {

// Descent positions {i in [n-1] : pi(i) > pi(i+1)}.
std::vector<int> des_set(const Permutation& pi);
int des(const Permutation& pi);

// Length of the initial ascending run; min(DES u {n}). iar(empty) = 0.
int iar(const Permutation& pi);

// Position of the last descent, 0 if none.
int ldes(const Permutation& pi);

// Number of components of the direct sum decomposition,
// |{i : pi([1..i]) = [1..i]}|. comp(empty) = 0.
int comp(const Permutation& pi);

// Descent bottoms {pi(i+1) : i in DES}.
std::vector<int> desb_set(const Permutation& pi);

// Values / positions of left-to-right maxima, values of left-to-right minima.
std::vector<int> lmax_set(const Permutation& pi);
std::vector<int> lmaxp_set(const Permutation& pi);
std::vector<int> lmin_set(const Permutation& pi);

// Double descents: #{i in [n] : pi(i-1) > pi(i) > pi(i+1)} under three
// boundary conventions. dd uses pi(0) = pi(n+1) = 0; dd0 uses pi(0) = 0,
// pi(n+1) = +inf; ddinf uses pi(0) = +inf, pi(n+1) = 0.
int dd(const Permutation& pi);
int dd0(const Permutation& pi);
int ddinf(const Permutation& pi);

struct StatProfile {
  int des = 0;
  int iar = 0;
  int comp = 0;
  int dd = 0;
  int dd0 = 0;
  int ddinf = 0;
  int ldes = 0;
  std::vector<int> DES, DESB, LMAX, LMAXP, LMIN;
};

StatProfile stat_profile(const Permutation& pi);

}  // namespace comtet

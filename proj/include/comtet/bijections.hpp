#pragma once

#include "comtet/perm.hpp"
#include "comtet/words.hpp"

namespace comtet {

// 321-avoiders <-> admissible words; carries
// (LMAX, LMAXP, iar, comp) to (S, SP, ics, equ).
AdmissibleWord alpha(const Permutation& pi);
Permutation alpha_inv(const AdmissibleWord& w);

// 312-avoiders <-> admissible words, same statistics transport.
AdmissibleWord beta(const Permutation& sigma);
Permutation beta_inv(const AdmissibleWord& w);

// beta_inv . alpha : S_n(321) -> S_n(312), preserving all four statistics.
Permutation xi(const Permutation& pi);
Permutation xi_inv(const Permutation& sigma);

// AW_{n,a,b} -> AW_{n,a-1,b+1} (requires s_1 > 1, ics >= 2); preserves S.
AdmissibleWord psi(const AdmissibleWord& w);
AdmissibleWord psi_inv(const AdmissibleWord& v);

// Involution on S_n(321) (resp. S_n(312)) carrying (LMAX, iar, comp) to
// (LMAX, comp, iar); the 312 version additionally preserves DESB.
Permutation symmetry_witness_321(const Permutation& pi);
Permutation symmetry_witness_312(const Permutation& pi);

// Involutive step on S_n(132) with 2 <= iar <= n-1 and 1 <= comp <= n-2:
// keeps the prefix before the first descent, LMAX and LMIN; iar drops by
// one and comp grows by one.
Permutation phi(const Permutation& pi);
Permutation phi_inv(const Permutation& sigma);

// Recursive bijection S_n(213) -> S_n(231) fixing the first letter and des,
// exchanging iar and comp.
Permutation theta(const Permutation& pi);
Permutation theta_inv(const Permutation& sigma);

}  // namespace comtet

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "comtet/perm.hpp"
#include "comtet/poly.hpp"
#include "comtet/series.hpp"
#include "comtet/stats.hpp"

namespace comtet {

// n x n matrix whose (k, l) entry counts avoiders with iar = k, comp = l.
struct DistMatrix {
  int n = 0;
  std::vector<std::vector<long long>> rows;

  explicit DistMatrix(int n_) : n(n_), rows(n_, std::vector<long long>(n_, 0)) {}
  long long& at(int k, int l) { return rows[k - 1][l - 1]; }
  long long at(int k, int l) const { return rows[k - 1][l - 1]; }
  long long total() const;
  bool operator==(const DistMatrix&) const = default;
};

bool is_hankel(const DistMatrix& m);
bool is_symmetric(const DistMatrix& m);
DistMatrix transpose(const DistMatrix& m);

// Visit every permutation of S_n(P) exactly once, in a deterministic order.
// Grows avoiders by inserting the new maximum at every position; only
// occurrences through the new letter need checking at each step.
void for_each_avoider(int n, const PatternSet& ps,
                      const std::function<void(const Permutation&)>& fn);

std::vector<Permutation> enumerate_avoiders(int n, const PatternSet& ps);

long long count_avoiders(int n, const PatternSet& ps, int threads = 1);

DistMatrix distribution_matrix(int n, const PatternSet& ps, int threads = 1);

// Numeric statistics usable as polynomial markers.
enum class Stat { des, iar, comp, dd, dd0, ddinf, lmax, lmin };
int eval_stat(Stat s, const Permutation& pi);
const char* stat_name(Stat s);

// Set-valued (or numeric) statistics usable as refinement keys.
enum class SetStat { DES, DESB, LMAX, LMAXP, LMIN, des, iar, comp };
std::vector<int> eval_key_part(SetStat s, const Permutation& pi);

// Serialized refinement key: each part's values followed by a -1 separator.
using RefKey = std::vector<int>;
RefKey make_key(const Permutation& pi, const std::vector<SetStat>& parts);

// Matrices refined by one or more statistics; they sum to
// distribution_matrix(n, ps).
std::map<RefKey, DistMatrix> refined_matrices(int n, const PatternSet& ps,
                                              const std::vector<SetStat>& key);

// Sum over S_n(P) of prod var_i^{stat_i(pi)}.
using StatMarker = std::pair<Stat, Var>;
MultiPoly joint_distribution(int n, const PatternSet& ps,
                             const std::vector<StatMarker>& stats,
                             int threads = 1);

// Series whose z^n coefficient is joint_distribution(n, ...), n <= nmax.
Series joint_series(int nmax, const PatternSet& ps,
                    const std::vector<StatMarker>& stats, int threads = 1);

// Multiset of composite statistic keys over S_n(P); the workhorse behind
// multi-statistic equidistribution checks.
std::map<RefKey, long long> key_distribution(int n, const PatternSet& ps,
                                             const std::vector<SetStat>& parts);

// Coefficients gamma_k of poly = sum_k gamma_k t^k (1+t)^(deg-2k) where
// deg = n-1; nullopt when the polynomial is not expressible in this basis.
std::optional<std::vector<Rat>> gamma_vector(const MultiPoly& poly_in_t,
                                             int n);

}  // namespace comtet

#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "comtet/poly.hpp"
#include "comtet/series.hpp"

namespace comtet {

// An inversion sequence (e_1,...,e_n) with 0 <= e_i < i. It avoids 021
// exactly when its positive entries are weakly increasing.
struct InversionSequence {
  std::vector<int> e;

  InversionSequence() = default;
  explicit InversionSequence(std::vector<int> entries);

  int size() const { return static_cast<int>(e.size()); }
  bool avoids_021() const;

  bool operator==(const InversionSequence&) const = default;
  auto operator<=>(const InversionSequence&) const = default;

  std::string str() const;  // "0,0,1,3"
  static InversionSequence parse(std::string_view text);
};

void for_each_021(int n, const std::function<void(const InversionSequence&)>& fn);
std::vector<InversionSequence> enumerate_021(int n);

// Ascent positions {i in [n-1] : e_i < e_{i+1}}.
std::vector<int> asc_set(const InversionSequence& e);
int asc(const InversionSequence& e);
// Number of initial zeros, min(ASC u {n}).
int izero(const InversionSequence& e);
// Double ascents |{1 < i <= n : e_{i-1} < e_i < e_{i+1}}| with the sentinel
// e_{n+1} = n attached for this statistic only.
int da(const InversionSequence& e);

// Surjection I_n(021) -> I_{n-1}(021): drop e_1, decrement positive entries.
InversionSequence delta(const InversionSequence& e);

// Table I[n][k] = #{e in I_n(021) : izero(e) = k}, 1 <= k <= n <= n_max,
// computed by the recurrence (not by enumeration). I[0] is unused.
std::vector<std::vector<Int>> izero_recurrence_table(int n_max);

// Markers for 021-avoiding inversion sequence statistics.
enum class InvStat { asc, da, izero };
int eval_inv_stat(InvStat s, const InversionSequence& e);

// Series whose z^n coefficient (1 <= n <= nmax) is
// sum over I_n(021) of prod var_i^{stat_i(e)}; constant term 1.
Series inv_joint_series(int nmax,
                        const std::vector<std::pair<InvStat, Var>>& stats);

}  // namespace comtet

#include "comtet/bijections.hpp"

#include <algorithm>
#include <set>

#include "comtet/stats.hpp"

namespace comtet {

namespace {

const Permutation& pat321() {
  static const Permutation p({3, 2, 1});
  return p;
}
const Permutation& pat312() {
  static const Permutation p({3, 1, 2});
  return p;
}
const Permutation& pat132() {
  static const Permutation p({1, 3, 2});
  return p;
}
const Permutation& pat213() {
  static const Permutation p({2, 1, 3});
  return p;
}
const Permutation& pat231() {
  static const Permutation p({2, 3, 1});
  return p;
}

void require_avoids(const Permutation& pi, const Permutation& sigma,
                    const char* who) {
  if (pi.size() >= sigma.size() && contains(pi, sigma))
    throw precondition_violation(std::string(who) +
                                 ": input outside the avoidance class");
}

// Shared construction of alpha and beta: S = LMAX values, c_h = gap between
// consecutive left-to-right maxima positions (with n+1 appended).
AdmissibleWord word_of(const Permutation& pi) {
  const std::vector<int> s = lmax_set(pi);
  const std::vector<int> spos = lmaxp_set(pi);
  const int k = static_cast<int>(s.size());
  std::vector<int> c(k);
  for (int h = 0; h + 1 < k; ++h) c[h] = spos[h + 1] - spos[h] - 1;
  c[k - 1] = pi.size() - spos[k - 1];
  return AdmissibleWord(s, c);
}

}  // namespace

AdmissibleWord alpha(const Permutation& pi) {
  if (pi.empty()) throw precondition_violation("alpha: empty permutation");
  require_avoids(pi, pat321(), "alpha");
  return word_of(pi);
}

Permutation alpha_inv(const AdmissibleWord& w) {
  const int n = w.length();
  std::set<int> avail;
  {
    std::set<int> in_s(w.s.begin(), w.s.end());
    for (int v = 1; v <= n; ++v)
      if (!in_s.count(v)) avail.insert(v);
  }
  std::vector<int> out;
  out.reserve(n);
  for (int i = 0; i < w.k(); ++i) {
    out.push_back(w.s[i]);
    for (int j = 0; j < w.c[i]; ++j) {
      out.push_back(*avail.begin());  // smallest unused
      avail.erase(avail.begin());
    }
  }
  return Permutation(std::move(out));
}

AdmissibleWord beta(const Permutation& sigma) {
  if (sigma.empty()) throw precondition_violation("beta: empty permutation");
  require_avoids(sigma, pat312(), "beta");
  return word_of(sigma);
}

Permutation beta_inv(const AdmissibleWord& w) {
  const int n = w.length();
  std::set<int> avail;
  {
    std::set<int> in_s(w.s.begin(), w.s.end());
    for (int v = 1; v <= n; ++v)
      if (!in_s.count(v)) avail.insert(v);
  }
  std::vector<int> out;
  out.reserve(n);
  for (int i = 0; i < w.k(); ++i) {
    out.push_back(w.s[i]);
    for (int j = 0; j < w.c[i]; ++j) {
      // Largest unused letter below the governing letter of S, so the
      // letters of S stay the left-to-right maxima.
      auto it = avail.lower_bound(w.s[i]);
      if (it == avail.begin())
        throw internal_consistency_error("beta_inv: no letter available");
      --it;
      out.push_back(*it);
      avail.erase(it);
    }
  }
  return Permutation(std::move(out));
}

Permutation xi(const Permutation& pi) { return beta_inv(alpha(pi)); }

Permutation xi_inv(const Permutation& sigma) { return alpha_inv(beta(sigma)); }

AdmissibleWord psi(const AdmissibleWord& w) {
  if (w.s[0] <= 1) throw precondition_violation("psi: requires s_1 > 1");
  const int a = ics(w);
  if (a < 2) throw precondition_violation("psi: requires ics >= 2");
  const int k = w.k();
  // Smallest critical index >= a-1 (1-based).
  int ell = 0;
  {
    int prefix = 0;
    for (int i = 1; i < k; ++i) {
      prefix += w.c[i - 1];
      const int bound = w.s[i - 1] - i;
      if (i >= a - 1 && prefix < bound && bound <= prefix + w.c[i]) {
        ell = i;
        break;
      }
    }
  }
  if (ell == 0)
    throw internal_consistency_error("psi: no critical index found");

  std::vector<int> prefix_c(k + 1, 0);
  for (int i = 1; i <= k; ++i) prefix_c[i] = prefix_c[i - 1] + w.c[i - 1];

  std::vector<int> d(k);
  for (int i = 1; i <= k; ++i) {
    if (a - 1 <= i && i <= ell - 1)
      d[i - 1] = w.c[i];
    else if (i == ell)
      d[i - 1] = w.s[i - 1] - i - prefix_c[i];
    else if (i == ell + 1) {
      int sum_d = 0;
      for (int h = 1; h <= ell; ++h) sum_d += d[h - 1];
      d[i - 1] = prefix_c[i] - sum_d;
    } else {
      d[i - 1] = w.c[i - 1];
    }
  }
  return AdmissibleWord(w.s, std::move(d));
}

AdmissibleWord psi_inv(const AdmissibleWord& v) {
  if (v.s[0] <= 1) throw precondition_violation("psi_inv: requires s_1 > 1");
  if (equ(v) < 2) throw precondition_violation("psi_inv: requires equ >= 2");
  const int k = v.k();
  const int a = ics(v) + 1;
  // Smallest index with the admissibility bound attained; it is < k here.
  int ell = 0, prefix = 0;
  for (int i = 1; i < k; ++i) {
    prefix += v.c[i - 1];
    if (prefix == v.s[i - 1] - i) {
      ell = i;
      break;
    }
  }
  if (ell == 0)
    throw internal_consistency_error("psi_inv: no attained bound before k");

  std::vector<int> c(k);
  for (int i = 1; i <= k; ++i) {
    if (i == a - 1)
      c[i - 1] = 0;
    else if (a <= i && i <= ell)
      c[i - 1] = v.c[i - 2];
    else if (i == ell + 1)
      c[i - 1] = v.c[i - 2] + v.c[i - 1];
    else
      c[i - 1] = v.c[i - 1];
  }
  return AdmissibleWord(v.s, std::move(c));
}

namespace {

Permutation witness(const Permutation& pi, const Permutation& forbidden,
                    AdmissibleWord (*encode)(const Permutation&),
                    Permutation (*decode)(const AdmissibleWord&),
                    const char* who) {
  require_avoids(pi, forbidden, who);
  if (pi.empty()) return pi;
  const int a = iar(pi), b = comp(pi);
  if (a == b) return pi;
  if (pi.value_at(1) == 1) {
    // Strip leading 1, recurse, re-attach: both statistics shift by one.
    Permutation inner =
        witness(del(pi, 1), forbidden, encode, decode, who);
    return ins(inner, 1, 1);
  }
  AdmissibleWord w = encode(pi);
  if (a > b)
    for (int i = 0; i < a - b; ++i) w = psi(w);
  else
    for (int i = 0; i < b - a; ++i) w = psi_inv(w);
  return decode(w);
}

}  // namespace

Permutation symmetry_witness_321(const Permutation& pi) {
  return witness(pi, pat321(), &alpha, &alpha_inv, "symmetry_witness_321");
}

Permutation symmetry_witness_312(const Permutation& pi) {
  return witness(pi, pat312(), &beta, &beta_inv, "symmetry_witness_312");
}

Permutation phi(const Permutation& pi) {
  require_avoids(pi, pat132(), "phi");
  const int n = pi.size();
  const int a = iar(pi), b = comp(pi);
  if (!(2 <= a && a <= n - 1 && 1 <= b && b <= n - 2))
    throw precondition_violation("phi: iar/comp out of the mapped range");
  return ins(del(pi, pi.value_at(1)), n, n);
}

Permutation phi_inv(const Permutation& sigma) {
  require_avoids(sigma, pat132(), "phi_inv");
  const int n = sigma.size();
  const int a = iar(sigma), b = comp(sigma);
  if (!(1 <= a && a <= n - 2 && 2 <= b && b <= n - 1))
    throw precondition_violation("phi_inv: iar/comp out of the mapped range");
  return ins(del(sigma, n), sigma.value_at(1), 1);
}

namespace {

Permutation theta_rec(const Permutation& pi) {
  const int n = pi.size();
  if (n <= 2) return pi;
  const int first = pi.value_at(1);
  // pi = first A B with A > first > B; 213-avoidance forces this shape.
  std::vector<int> a_word, b_word;
  for (int i = 2; i <= n; ++i) {
    const int v = pi.value_at(i);
    (v > first ? a_word : b_word).push_back(v);
  }
  Permutation mu = a_word.empty() ? Permutation() : reduce(a_word);
  Permutation nu(std::move(b_word));  // values are exactly [1..first-1]
  return ins(direct_sum(theta_rec(nu), theta_rec(mu)), first, 1);
}

Permutation theta_inv_rec(const Permutation& sigma) {
  const int n = sigma.size();
  if (n <= 2) return sigma;
  const int first = sigma.value_at(1);
  Permutation rest = del(sigma, first);
  // rest = theta(nu) (+) theta(mu) with the split forced at first - 1.
  std::vector<int> x_word, y_word;
  for (int i = 1; i <= n - 1; ++i) {
    const int v = rest.value_at(i);
    if (i <= first - 1) {
      if (v > first - 1)
        throw precondition_violation("theta_inv: malformed direct sum split");
      x_word.push_back(v);
    } else {
      y_word.push_back(v - (first - 1));
    }
  }
  Permutation x(std::move(x_word));
  Permutation y(std::move(y_word));
  return ins(skew_sum(theta_inv_rec(y), theta_inv_rec(x)), first, 1);
}

}  // namespace

Permutation theta(const Permutation& pi) {
  require_avoids(pi, pat213(), "theta");
  return theta_rec(pi);
}

Permutation theta_inv(const Permutation& sigma) {
  require_avoids(sigma, pat231(), "theta_inv");
  return theta_inv_rec(sigma);
}

}  // namespace comtet

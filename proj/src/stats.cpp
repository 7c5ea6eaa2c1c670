#include "comtet/stats.hpp"

#include <algorithm>
#include <limits>

namespace comtet {

std::vector<int> des_set(const Permutation& pi) {
  std::vector<int> out;
  for (int i = 1; i < pi.size(); ++i)
    if (pi.value_at(i) > pi.value_at(i + 1)) out.push_back(i);
  return out;
}

int des(const Permutation& pi) { return static_cast<int>(des_set(pi).size()); }

int iar(const Permutation& pi) {
  for (int i = 1; i < pi.size(); ++i)
    if (pi.value_at(i) > pi.value_at(i + 1)) return i;
  return pi.size();
}

int ldes(const Permutation& pi) {
  for (int i = pi.size() - 1; i >= 1; --i)
    if (pi.value_at(i) > pi.value_at(i + 1)) return i;
  return 0;
}

int comp(const Permutation& pi) {
  int count = 0, running_max = 0;
  const auto& v = pi.values();
  for (int i = 0; i < pi.size(); ++i) {
    running_max = std::max(running_max, v[i]);
    if (running_max == i + 1) ++count;
  }
  return count;
}

std::vector<int> desb_set(const Permutation& pi) {
  std::vector<int> out;
  for (int i = 1; i < pi.size(); ++i)
    if (pi.value_at(i) > pi.value_at(i + 1)) out.push_back(pi.value_at(i + 1));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> lmax_set(const Permutation& pi) {
  std::vector<int> out;
  int running_max = 0;
  for (int x : pi.values()) {
    if (x > running_max) {
      running_max = x;
      out.push_back(x);
    }
  }
  return out;
}

std::vector<int> lmaxp_set(const Permutation& pi) {
  std::vector<int> out;
  int running_max = 0;
  for (int i = 1; i <= pi.size(); ++i) {
    if (pi.value_at(i) > running_max) {
      running_max = pi.value_at(i);
      out.push_back(i);
    }
  }
  return out;
}

std::vector<int> lmin_set(const Permutation& pi) {
  std::vector<int> out;
  int running_min = std::numeric_limits<int>::max();
  for (int x : pi.values()) {
    if (x < running_min) {
      running_min = x;
      out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int double_descents(const Permutation& pi, long long left, long long right) {
  if (pi.empty()) throw invalid_input("double descents of empty permutation");
  const int n = pi.size();
  auto at = [&](int i) -> long long {
    if (i == 0) return left;
    if (i == n + 1) return right;
    return pi.value_at(i);
  };
  int count = 0;
  for (int i = 1; i <= n; ++i)
    if (at(i - 1) > at(i) && at(i) > at(i + 1)) ++count;
  return count;
}

constexpr long long kInf = std::numeric_limits<long long>::max();

}  // namespace

int dd(const Permutation& pi) { return double_descents(pi, 0, 0); }
int dd0(const Permutation& pi) { return double_descents(pi, 0, kInf); }
int ddinf(const Permutation& pi) { return double_descents(pi, kInf, 0); }

StatProfile stat_profile(const Permutation& pi) {
  StatProfile s;
  s.DES = des_set(pi);
  s.des = static_cast<int>(s.DES.size());
  s.iar = iar(pi);
  s.comp = comp(pi);
  s.ldes = ldes(pi);
  s.DESB = desb_set(pi);
  s.LMAX = lmax_set(pi);
  s.LMAXP = lmaxp_set(pi);
  s.LMIN = lmin_set(pi);
  if (!pi.empty()) {
    s.dd = dd(pi);
    s.dd0 = dd0(pi);
    s.ddinf = ddinf(pi);
  }
  return s;
}

}  // namespace comtet

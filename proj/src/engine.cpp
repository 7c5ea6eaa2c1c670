#include "comtet/engine.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace comtet {

long long DistMatrix::total() const {
  long long t = 0;
  for (const auto& row : rows)
    for (long long x : row) t += x;
  return t;
}

bool is_hankel(const DistMatrix& m) {
  for (int i = 1; i <= m.n; ++i)
    for (int j = 1; j < m.n; ++j)
      if (i + 1 <= m.n && m.at(i, j + 1) != m.at(i + 1, j)) return false;
  return true;
}

bool is_symmetric(const DistMatrix& m) {
  for (int i = 1; i <= m.n; ++i)
    for (int j = i + 1; j <= m.n; ++j)
      if (m.at(i, j) != m.at(j, i)) return false;
  return true;
}

DistMatrix transpose(const DistMatrix& m) {
  DistMatrix t(m.n);
  for (int i = 1; i <= m.n; ++i)
    for (int j = 1; j <= m.n; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

namespace {

bool child_avoids(const Permutation& child, const PatternSet& ps, int pos) {
  for (const auto& sigma : ps.patterns)
    if (contains_through_max(child, sigma, pos)) return false;
  return true;
}

void grow(const Permutation& pi, int n, const PatternSet& ps,
          const std::function<void(const Permutation&)>& fn) {
  if (pi.size() == n) {
    fn(pi);
    return;
  }
  const int next = pi.size() + 1;
  for (int k = 1; k <= next; ++k) {
    Permutation child = ins(pi, next, k);
    if (child_avoids(child, ps, k)) grow(child, n, ps, fn);
  }
}

}  // namespace

void for_each_avoider(int n, const PatternSet& ps,
                      const std::function<void(const Permutation&)>& fn) {
  if (n < 0) throw invalid_input("negative length");
  grow(Permutation(), n, ps, fn);
}

std::vector<Permutation> enumerate_avoiders(int n, const PatternSet& ps) {
  std::vector<Permutation> out;
  for_each_avoider(n, ps, [&](const Permutation& pi) { out.push_back(pi); });
  return out;
}

namespace {

// Splits the growth tree at a shallow level and runs the sub-trees on
// `threads` workers; merge must be commutative and associative.
template <typename Acc>
Acc parallel_avoiders(int n, const PatternSet& ps, int threads, Acc init,
                      const std::function<void(Acc&, const Permutation&)>& add,
                      const std::function<void(Acc&, Acc&&)>& merge) {
  threads = std::max(1, threads);
  const int split = std::min(n, 4);
  if (threads == 1 || n <= split) {
    Acc acc = init;
    for_each_avoider(n, ps, [&](const Permutation& pi) { add(acc, pi); });
    return acc;
  }
  std::vector<Permutation> seeds = enumerate_avoiders(split, ps);
  std::vector<Acc> parts(threads, init);
  std::vector<std::thread> pool;
  std::atomic<size_t> cursor{0};
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (;;) {
        const size_t i = cursor.fetch_add(1);
        if (i >= seeds.size()) break;
        grow(seeds[i], n, ps,
             [&](const Permutation& pi) { add(parts[w], pi); });
      }
    });
  }
  for (auto& th : pool) th.join();
  Acc acc = std::move(parts[0]);
  for (int w = 1; w < threads; ++w) merge(acc, std::move(parts[w]));
  return acc;
}

}  // namespace

long long count_avoiders(int n, const PatternSet& ps, int threads) {
  return parallel_avoiders<long long>(
      n, ps, threads, 0, [](long long& a, const Permutation&) { ++a; },
      [](long long& a, long long&& b) { a += b; });
}

DistMatrix distribution_matrix(int n, const PatternSet& ps, int threads) {
  if (n < 1) throw invalid_input("distribution_matrix: n must be >= 1");
  return parallel_avoiders<DistMatrix>(
      n, ps, threads, DistMatrix(n),
      [](DistMatrix& m, const Permutation& pi) { ++m.at(iar(pi), comp(pi)); },
      [](DistMatrix& a, DistMatrix&& b) {
        for (int i = 0; i < a.n; ++i)
          for (int j = 0; j < a.n; ++j) a.rows[i][j] += b.rows[i][j];
      });
}

int eval_stat(Stat s, const Permutation& pi) {
  switch (s) {
    case Stat::des: return des(pi);
    case Stat::iar: return iar(pi);
    case Stat::comp: return comp(pi);
    case Stat::dd: return dd(pi);
    case Stat::dd0: return dd0(pi);
    case Stat::ddinf: return ddinf(pi);
    case Stat::lmax: return static_cast<int>(lmax_set(pi).size());
    case Stat::lmin: return static_cast<int>(lmin_set(pi).size());
  }
  throw invalid_input("unknown statistic");
}

const char* stat_name(Stat s) {
  switch (s) {
    case Stat::des: return "des";
    case Stat::iar: return "iar";
    case Stat::comp: return "comp";
    case Stat::dd: return "dd";
    case Stat::dd0: return "dd0";
    case Stat::ddinf: return "ddinf";
    case Stat::lmax: return "lmax";
    case Stat::lmin: return "lmin";
  }
  return "?";
}

std::vector<int> eval_key_part(SetStat s, const Permutation& pi) {
  switch (s) {
    case SetStat::DES: return des_set(pi);
    case SetStat::DESB: return desb_set(pi);
    case SetStat::LMAX: return lmax_set(pi);
    case SetStat::LMAXP: return lmaxp_set(pi);
    case SetStat::LMIN: return lmin_set(pi);
    case SetStat::des: return {des(pi)};
    case SetStat::iar: return {iar(pi)};
    case SetStat::comp: return {comp(pi)};
  }
  throw invalid_input("unknown statistic");
}

RefKey make_key(const Permutation& pi, const std::vector<SetStat>& parts) {
  RefKey key;
  for (SetStat s : parts) {
    std::vector<int> vals = eval_key_part(s, pi);
    key.insert(key.end(), vals.begin(), vals.end());
    key.push_back(-1);
  }
  return key;
}

std::map<RefKey, DistMatrix> refined_matrices(int n, const PatternSet& ps,
                                              const std::vector<SetStat>& key) {
  if (n < 1) throw invalid_input("refined_matrices: n must be >= 1");
  if (key.empty()) throw invalid_input("refined_matrices: empty key");
  std::map<RefKey, DistMatrix> out;
  for_each_avoider(n, ps, [&](const Permutation& pi) {
    auto [it, ignore] = out.try_emplace(make_key(pi, key), DistMatrix(n));
    ++it->second.at(iar(pi), comp(pi));
  });
  return out;
}

MultiPoly joint_distribution(int n, const PatternSet& ps,
                             const std::vector<StatMarker>& stats,
                             int threads) {
  return parallel_avoiders<MultiPoly>(
      n, ps, threads, MultiPoly(),
      [&stats](MultiPoly& acc, const Permutation& pi) {
        Monomial m;
        for (const auto& [st, var] : stats)
          m.e[static_cast<int>(var)] +=
              static_cast<std::uint16_t>(eval_stat(st, pi));
        acc.add_term(m, Rat(1));
      },
      [](MultiPoly& a, MultiPoly&& b) { a += b; });
}

Series joint_series(int nmax, const PatternSet& ps,
                    const std::vector<StatMarker>& stats, int threads) {
  Series out(nmax);
  out.set_coeff(0, MultiPoly::constant(1));
  for (int n = 1; n <= nmax; ++n)
    out.set_coeff(n, joint_distribution(n, ps, stats, threads));
  return out;
}

std::map<RefKey, long long> key_distribution(int n, const PatternSet& ps,
                                             const std::vector<SetStat>& parts) {
  std::map<RefKey, long long> out;
  for_each_avoider(n, ps,
                   [&](const Permutation& pi) { ++out[make_key(pi, parts)]; });
  return out;
}

std::optional<std::vector<Rat>> gamma_vector(const MultiPoly& poly_in_t,
                                             int n) {
  if (n < 1) throw invalid_input("gamma_vector: n must be >= 1");
  const int deg = n - 1;
  if (poly_in_t.degree(Var::t) > deg)
    throw invalid_input("gamma_vector: degree exceeds n-1");
  for (const auto& [m, c] : poly_in_t.terms()) {
    Monomial pure;
    pure.e[static_cast<int>(Var::t)] = m.e[static_cast<int>(Var::t)];
    if (!(m == pure)) throw invalid_input("gamma_vector: polynomial not in t");
  }
  MultiPoly rem = poly_in_t;
  const MultiPoly one_plus_t =
      MultiPoly::constant(1) + MultiPoly::variable(Var::t);
  std::vector<Rat> gamma;
  for (int k = 0; 2 * k <= deg; ++k) {
    Monomial tk;
    tk.e[static_cast<int>(Var::t)] = static_cast<std::uint16_t>(k);
    const Rat g = rem.coeff(tk);
    gamma.push_back(g);
    MultiPoly basis = MultiPoly::monomial(tk, Rat(1));
    for (int j = 0; j < deg - 2 * k; ++j) basis = basis * one_plus_t;
    rem -= basis * g;
  }
  if (!rem.is_zero()) return std::nullopt;
  return gamma;
}

}  // namespace comtet

#include "comtet/invseq.hpp"

#include <sstream>

#include "comtet/errors.hpp"

namespace comtet {

InversionSequence::InversionSequence(std::vector<int> entries)
    : e(std::move(entries)) {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || e[i] >= static_cast<int>(i) + 1)
      throw invalid_input("inversion sequence: requires 0 <= e_i < i");
}

bool InversionSequence::avoids_021() const {
  int last_positive = 0;
  for (int v : e) {
    if (v > 0) {
      if (v < last_positive) return false;
      last_positive = v;
    }
  }
  return true;
}

std::string InversionSequence::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) os << ',';
    os << e[i];
  }
  return os.str();
}

InversionSequence InversionSequence::parse(std::string_view text) {
  std::string s(text);
  for (char& ch : s)
    if (ch == ',') ch = ' ';
  std::istringstream is(s);
  std::vector<int> vals;
  int x;
  while (is >> x) vals.push_back(x);
  if (!is.eof()) throw invalid_input("bad inversion sequence text");
  return InversionSequence(std::move(vals));
}

namespace {

void grow_021(std::vector<int>& e, int n, int max_positive,
              const std::function<void(const InversionSequence&)>& fn) {
  if (static_cast<int>(e.size()) == n) {
    fn(InversionSequence(e));
    return;
  }
  const int i = static_cast<int>(e.size()) + 1;  // position being filled
  e.push_back(0);
  grow_021(e, n, max_positive, fn);
  e.pop_back();
  for (int v = std::max(max_positive, 1); v <= i - 1; ++v) {
    e.push_back(v);
    grow_021(e, n, v, fn);
    e.pop_back();
  }
}

}  // namespace

void for_each_021(int n,
                  const std::function<void(const InversionSequence&)>& fn) {
  if (n < 1) throw invalid_input("enumerate_021: n must be >= 1");
  std::vector<int> e;
  e.reserve(n);
  grow_021(e, n, 0, fn);
}

std::vector<InversionSequence> enumerate_021(int n) {
  std::vector<InversionSequence> out;
  for_each_021(n, [&](const InversionSequence& e) { out.push_back(e); });
  return out;
}

std::vector<int> asc_set(const InversionSequence& e) {
  std::vector<int> out;
  for (int i = 1; i < e.size(); ++i)
    if (e.e[i - 1] < e.e[i]) out.push_back(i);
  return out;
}

int asc(const InversionSequence& e) {
  return static_cast<int>(asc_set(e).size());
}

int izero(const InversionSequence& e) {
  for (int i = 1; i < e.size(); ++i)
    if (e.e[i - 1] < e.e[i]) return i;
  return e.size();
}

int da(const InversionSequence& e) {
  const int n = e.size();
  auto at = [&](int i) { return i == n + 1 ? n : e.e[i - 1]; };
  int count = 0;
  for (int i = 2; i <= n; ++i)
    if (at(i - 1) < at(i) && at(i) < at(i + 1)) ++count;
  return count;
}

InversionSequence delta(const InversionSequence& e) {
  if (e.size() < 2) throw invalid_input("delta: needs length >= 2");
  std::vector<int> out;
  out.reserve(e.size() - 1);
  for (int i = 1; i < e.size(); ++i)
    out.push_back(e.e[i] - (e.e[i] > 0 ? 1 : 0));
  return InversionSequence(std::move(out));
}

std::vector<std::vector<Int>> izero_recurrence_table(int n_max) {
  if (n_max < 1) throw invalid_input("izero_recurrence_table: n_max >= 1");
  std::vector<std::vector<Int>> table(n_max + 1);
  table[1] = {Int(0), Int(1)};  // I[1][1] = 1; index 0 unused
  for (int n = 2; n <= n_max; ++n) {
    table[n].assign(n + 1, Int(0));
    Int pow2 = 1;
    for (int k = 1; k <= n - 1; ++k) {
      table[n][1] += pow2 * table[n - 1][k];
      pow2 *= 2;
    }
    for (int i = 2; i <= n; ++i) {
      Int acc = table[n - 1][i - 1];
      Int p = 1;
      for (int k = i; k <= n - 1; ++k) {
        acc += p * table[n - 1][k];
        p *= 2;
      }
      table[n][i] = acc;
    }
  }
  return table;
}

int eval_inv_stat(InvStat s, const InversionSequence& e) {
  switch (s) {
    case InvStat::asc: return asc(e);
    case InvStat::da: return da(e);
    case InvStat::izero: return izero(e);
  }
  throw invalid_input("unknown inversion statistic");
}

Series inv_joint_series(int nmax,
                        const std::vector<std::pair<InvStat, Var>>& stats) {
  Series out(nmax);
  out.set_coeff(0, MultiPoly::constant(1));
  for (int n = 1; n <= nmax; ++n) {
    MultiPoly acc;
    for_each_021(n, [&](const InversionSequence& e) {
      Monomial m;
      for (const auto& [st, var] : stats)
        m.e[static_cast<int>(var)] +=
            static_cast<std::uint16_t>(eval_inv_stat(st, e));
      acc.add_term(m, Rat(1));
    });
    out.set_coeff(n, std::move(acc));
  }
  return out;
}

}  // namespace comtet

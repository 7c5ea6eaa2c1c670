#include "comtet/poly.hpp"

#include <sstream>

namespace comtet {

MultiPoly MultiPoly::constant(Rat c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(Monomial{}, std::move(c));
  return p;
}

MultiPoly MultiPoly::variable(Var v, int exponent) {
  if (exponent < 0) throw invalid_input("negative exponent");
  Monomial m;
  m.e[static_cast<int>(v)] = static_cast<std::uint16_t>(exponent);
  return monomial(m, Rat(1));
}

MultiPoly MultiPoly::monomial(const Monomial& m, Rat c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(m, std::move(c));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.is_one();
}

Rat MultiPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma + mb, ca * cb);
  return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
  MultiPoly r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.terms_.size() != 1)
    throw division_error("divisor is not a single term");
  const auto& [dm, dc] = *divisor.terms_.begin();
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    if (!dm.divides(m))
      throw division_error("inexact monomial division: " + str() + " by " +
                           divisor.str());
    r.terms_.emplace(m - dm, c / dc);
  }
  return r;
}

MultiPoly MultiPoly::eval(Var v, const Rat& value) const {
  const int vi = static_cast<int>(v);
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    Rat scaled = c;
    for (int k = 0; k < m.e[vi]; ++k) scaled *= value;
    Monomial reduced = m;
    reduced.e[vi] = 0;
    r.add_term(reduced, scaled);
  }
  return r;
}

MultiPoly MultiPoly::swap_vars(Var a, Var b) const {
  const int ia = static_cast<int>(a), ib = static_cast<int>(b);
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial sw = m;
    std::swap(sw.e[ia], sw.e[ib]);
    r.add_term(sw, c);
  }
  return r;
}

MultiPoly MultiPoly::coeff_of(Var v, int k) const {
  const int vi = static_cast<int>(v);
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.e[vi] != k) continue;
    Monomial reduced = m;
    reduced.e[vi] = 0;
    r.terms_.emplace(reduced, c);
  }
  return r;
}

int MultiPoly::degree(Var v) const {
  const int vi = static_cast<int>(v);
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[vi]));
  return d;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    const bool unit = m.is_one();
    if (a != 1 || unit) {
      os << a.get_str();
      if (!unit) os << "*";
    }
    bool firstv = true;
    for (int i = 0; i < kNumVars; ++i) {
      if (!m.e[i]) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << kVarNames[i];
      if (m.e[i] > 1) os << "^" << m.e[i];
    }
  }
  return os.str();
}

}  // namespace comtet

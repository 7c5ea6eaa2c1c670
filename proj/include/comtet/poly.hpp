#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

#include "comtet/errors.hpp"

namespace comtet {

using Int = mpz_class;
using Rat = mpq_class;

// Formal variables shared by every generating function in the library.
// z (the length marker) is handled separately by Series.
enum class Var : int { t = 0, r = 1, p = 2, x = 3, y = 4, q = 5, s = 6 };

inline constexpr int kNumVars = 7;
inline constexpr std::array<char, kNumVars> kVarNames = {'t', 'r', 'p',
                                                         'x', 'y', 'q', 's'};

// Exponent vector of a single monomial.
struct Monomial {
  std::array<std::uint16_t, kNumVars> e{};

  auto operator<=>(const Monomial&) const = default;

  bool divides(const Monomial& other) const {
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] > other.e[i]) return false;
    return true;
  }
  Monomial operator+(const Monomial& o) const {
    Monomial m;
    for (int i = 0; i < kNumVars; ++i) m.e[i] = e[i] + o.e[i];
    return m;
  }
  Monomial operator-(const Monomial& o) const {
    Monomial m;
    for (int i = 0; i < kNumVars; ++i) m.e[i] = e[i] - o.e[i];
    return m;
  }
  bool is_one() const {
    for (int i = 0; i < kNumVars; ++i)
      if (e[i]) return false;
    return true;
  }
};

// Exact multivariate polynomial with rational coefficients.
// Invariant: no zero coefficient is ever stored.
class MultiPoly {
 public:
  MultiPoly() = default;

  static MultiPoly constant(Rat c);
  static MultiPoly constant(long c) { return constant(Rat(c)); }
  static MultiPoly variable(Var v, int exponent = 1);
  static MultiPoly monomial(const Monomial& m, Rat c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Constant term (coefficient of the empty monomial).
  Rat constant_term() const;

  const std::map<Monomial, Rat>& terms() const { return terms_; }
  Rat coeff(const Monomial& m) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rat& c) const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  // Exact division by a one-term polynomial; throws division_error if any
  // term is not divisible.
  MultiPoly divide_exact(const MultiPoly& divisor) const;

  // Substitutions.
  MultiPoly eval(Var v, const Rat& value) const;
  MultiPoly eval_one(Var v) const { return eval(v, Rat(1)); }
  MultiPoly swap_vars(Var a, Var b) const;

  // Coefficient of v^k as a polynomial in the remaining variables.
  MultiPoly coeff_of(Var v, int k) const;
  int degree(Var v) const;

  void add_term(const Monomial& m, const Rat& c);

  std::string str() const;

 private:
  std::map<Monomial, Rat> terms_;
};

inline MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p * c; }

}  // namespace comtet

#pragma once

#include <vector>

#include "comtet/poly.hpp"

namespace comtet {

// Power series in z truncated at a fixed order, with MultiPoly coefficients.
// Every operation is exact modulo z^{order+1}; binary operations truncate to
// the smaller order of the two operands and never extend it.
class Series {
 public:
  explicit Series(int order);

  static Series zero(int order) { return Series(order); }
  static Series one(int order);
  static Series z(int order);
  static Series constant(const MultiPoly& c, int order);
  static Series constant(const Rat& c, int order);

  int order() const { return order_; }
  const MultiPoly& operator[](int k) const;
  void set_coeff(int k, MultiPoly c);

  bool is_zero() const;
  bool operator==(const Series& o) const;

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator-() const;
  Series operator*(const Series& o) const;
  Series operator*(const MultiPoly& c) const;
  Series operator*(const Rat& c) const;

  // Quotient via long division. The constant (z^0) coefficient of the
  // divisor must be a nonzero rational or a single monomial; every step is
  // carried out exactly, otherwise division_error is thrown.
  Series div(const Series& b) const;

  // Divide by z^k: the first k coefficients must vanish; order drops by k.
  Series div_by_z_power(int k) const;

  // Multiply by z^k (truncating at the same order).
  Series mul_by_z_power(int k) const;

  // Square root with constant term 1.
  Series sqrt() const;

  Series truncated(int lower_order) const;

  Series eval(Var v, const Rat& value) const;
  Series eval_one(Var v) const { return eval(v, Rat(1)); }
  Series swap_vars(Var a, Var b) const;

  std::string str() const;

 private:
  int order_;
  std::vector<MultiPoly> c_;  // c_[k] is the coefficient of z^k
};

Series operator*(const MultiPoly& c, const Series& s);
Series operator*(const Rat& c, const Series& s);

// 1/(1 - u) truncated at u.order(); u must have zero constant term.
Series geometric(const Series& u);

}  // namespace comtet

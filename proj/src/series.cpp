#include "comtet/series.hpp"

#include <algorithm>
#include <sstream>

namespace comtet {

Series::Series(int order) : order_(order) {
  if (order < 0) throw invalid_input("series order must be >= 0");
  c_.resize(order + 1);
}

Series Series::one(int order) {
  Series s(order);
  s.c_[0] = MultiPoly::constant(1);
  return s;
}

Series Series::z(int order) {
  Series s(order);
  if (order >= 1) s.c_[1] = MultiPoly::constant(1);
  return s;
}

Series Series::constant(const MultiPoly& c, int order) {
  Series s(order);
  s.c_[0] = c;
  return s;
}

Series Series::constant(const Rat& c, int order) {
  return constant(MultiPoly::constant(c), order);
}

const MultiPoly& Series::operator[](int k) const {
  if (k < 0 || k > order_) throw invalid_input("series coefficient index out of range");
  return c_[k];
}

void Series::set_coeff(int k, MultiPoly c) {
  if (k < 0 || k > order_) throw invalid_input("series coefficient index out of range");
  c_[k] = std::move(c);
}

bool Series::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const MultiPoly& p) { return p.is_zero(); });
}

bool Series::operator==(const Series& o) const {
  const int n = std::min(order_, o.order_);
  for (int k = 0; k <= n; ++k)
    if (!(c_[k] == o.c_[k])) return false;
  return order_ == o.order_;
}

Series Series::operator+(const Series& o) const {
  Series r(std::min(order_, o.order_));
  for (int k = 0; k <= r.order_; ++k) r.c_[k] = c_[k] + o.c_[k];
  return r;
}

Series Series::operator-(const Series& o) const {
  Series r(std::min(order_, o.order_));
  for (int k = 0; k <= r.order_; ++k) r.c_[k] = c_[k] - o.c_[k];
  return r;
}

Series Series::operator-() const {
  Series r(order_);
  for (int k = 0; k <= order_; ++k) r.c_[k] = -c_[k];
  return r;
}

Series Series::operator*(const Series& o) const {
  Series r(std::min(order_, o.order_));
  for (int i = 0; i <= r.order_; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; i + j <= r.order_; ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

Series Series::operator*(const MultiPoly& c) const {
  Series r(order_);
  for (int k = 0; k <= order_; ++k) r.c_[k] = c_[k] * c;
  return r;
}

Series Series::operator*(const Rat& c) const {
  Series r(order_);
  for (int k = 0; k <= order_; ++k) r.c_[k] = c_[k] * c;
  return r;
}

Series Series::div(const Series& b) const {
  const int n = std::min(order_, b.order_);
  const MultiPoly& lead = b.c_[0];
  if (lead.is_zero())
    throw division_error("series division by zero constant term");
  if (lead.terms().size() != 1)
    throw division_error(
        "series division requires a one-term leading coefficient, got " +
        lead.str());
  Series q(n);
  for (int k = 0; k <= n; ++k) {
    MultiPoly acc = c_[k];
    for (int j = 1; j <= k; ++j) acc -= b.c_[j] * q.c_[k - j];
    q.c_[k] = acc.divide_exact(lead);
  }
  return q;
}

Series Series::div_by_z_power(int k) const {
  if (k < 0 || k > order_) throw invalid_input("bad z power");
  for (int i = 0; i < k; ++i)
    if (!c_[i].is_zero())
      throw division_error("nonzero low-order coefficient in z-power division");
  Series r(order_ - k);
  for (int i = 0; i <= r.order_; ++i) r.c_[i] = c_[i + k];
  return r;
}

Series Series::mul_by_z_power(int k) const {
  if (k < 0) throw invalid_input("bad z power");
  Series r(order_);
  for (int i = order_; i >= k; --i) r.c_[i] = c_[i - k];
  return r;
}

Series Series::sqrt() const {
  if (!(c_[0] == MultiPoly::constant(1)))
    throw precondition_violation("series sqrt requires constant term 1");
  Series s(order_);
  s.c_[0] = MultiPoly::constant(1);
  const Rat half(1, 2);
  for (int k = 1; k <= order_; ++k) {
    MultiPoly acc = c_[k];
    for (int j = 1; j < k; ++j) acc -= s.c_[j] * s.c_[k - j];
    s.c_[k] = acc * half;
  }
  return s;
}

Series Series::truncated(int lower_order) const {
  if (lower_order > order_)
    throw invalid_input("cannot extend series order by truncation");
  Series r(lower_order);
  for (int k = 0; k <= lower_order; ++k) r.c_[k] = c_[k];
  return r;
}

Series Series::eval(Var v, const Rat& value) const {
  Series r(order_);
  for (int k = 0; k <= order_; ++k) r.c_[k] = c_[k].eval(v, value);
  return r;
}

Series Series::swap_vars(Var a, Var b) const {
  Series r(order_);
  for (int k = 0; k <= order_; ++k) r.c_[k] = c_[k].swap_vars(a, b);
  return r;
}

std::string Series::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order_; ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[k].str() << ")*z^" << k;
  }
  if (first) os << "0";
  os << " + O(z^" << order_ + 1 << ")";
  return os.str();
}

Series operator*(const MultiPoly& c, const Series& s) { return s * c; }
Series operator*(const Rat& c, const Series& s) { return s * c; }

Series geometric(const Series& u) {
  if (!u[0].is_zero())
    throw precondition_violation("geometric() needs zero constant term");
  return Series::one(u.order()).div(Series::one(u.order()) - u);
}

}  // namespace comtet

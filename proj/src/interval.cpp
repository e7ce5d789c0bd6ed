#include "hnf/interval.hpp"

#include <stdexcept>

namespace hnf {

XInterval::XInterval(ExtReal lo, ExtReal hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("interval endpoints out of order");
}

XInterval XInterval::hull(const XInterval& a, const XInterval& b) {
  return XInterval(min(a.lo(), b.lo()), max(a.hi(), b.hi()));
}

namespace {

// Endpoint contribution: a determinate sum is a point, an indeterminate one
// is the ambiguity hull dictated by the operands.
XInterval add_contribution(const ExtReal& a, const ExtReal& b) {
  if (auto s = add_det(a, b)) return XInterval(*s);
  return XInterval::entire();
}

XInterval mul_contribution(const ExtReal& a, const ExtReal& b) {
  if (auto p = mul_det(a, b)) return XInterval(*p);
  // 0 * (+-oo): sign of the infinite factor picks the half line.
  bool toward_pos = a.is_pos_inf() || b.is_pos_inf();
  if (toward_pos) return XInterval(ExtReal(0), ExtReal::pos_inf());
  return XInterval(ExtReal::neg_inf(), ExtReal(0));
}

}  // namespace

XInterval add_iv(const XInterval& a, const XInterval& b) {
  return XInterval::hull(add_contribution(a.lo(), b.lo()), add_contribution(a.hi(), b.hi()));
}

XInterval mul_iv(const XInterval& a, const XInterval& b) {
  XInterval r = mul_contribution(a.lo(), b.lo());
  r = XInterval::hull(r, mul_contribution(a.lo(), b.hi()));
  r = XInterval::hull(r, mul_contribution(a.hi(), b.lo()));
  r = XInterval::hull(r, mul_contribution(a.hi(), b.hi()));
  return r;
}

XInterval neg_iv(const XInterval& a) { return XInterval(neg(a.hi()), neg(a.lo())); }

XInterval operator+(const XInterval& a, const XInterval& b) { return add_iv(a, b); }
XInterval operator*(const XInterval& a, const XInterval& b) { return mul_iv(a, b); }
XInterval operator-(const XInterval& a) { return neg_iv(a); }

ExtReal width(const XInterval& a) {
  if (a.lo().is_finite() && a.hi().is_finite()) return ExtReal(Rat(a.hi().rat() - a.lo().rat()));
  if (a.lo() == a.hi()) return ExtReal(0);
  return ExtReal::pos_inf();
}

ExtReal modulus(const XInterval& a) { return max(abs(a.lo()), abs(a.hi())); }

XInterval scale_iv(const Rat& c, const XInterval& a) {
  int s = sgn(c);
  if (s == 0) return XInterval();
  ExtReal u = *mul_det(ExtReal(c), a.lo());
  ExtReal v = *mul_det(ExtReal(c), a.hi());
  return s > 0 ? XInterval(u, v) : XInterval(v, u);
}

std::string to_string(const XInterval& a) {
  return "[" + to_string(a.lo()) + "," + to_string(a.hi()) + "]";
}

}  // namespace hnf

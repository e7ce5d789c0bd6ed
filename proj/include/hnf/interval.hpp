#pragma once

#include "hnf/extreal.hpp"

namespace hnf {

/// Closed extended interval [lo, hi] with lo <= hi.  Point intervals are
/// allowed, including [+inf,+inf] and [-inf,-inf].
class XInterval {
public:
  XInterval() : lo_(0), hi_(0) {}
  explicit XInterval(ExtReal point) : lo_(point), hi_(point) {}
  XInterval(ExtReal lo, ExtReal hi);

  static XInterval entire() { return XInterval(ExtReal::neg_inf(), ExtReal::pos_inf()); }
  static XInterval hull(const XInterval& a, const XInterval& b);

  const ExtReal& lo() const { return lo_; }
  const ExtReal& hi() const { return hi_; }

  bool is_point() const { return lo_ == hi_; }
  bool is_finite() const { return lo_.is_finite() && hi_.is_finite(); }
  bool touches_infinity() const { return !is_finite(); }

  bool contains(const ExtReal& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const XInterval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }

  friend bool operator==(const XInterval& a, const XInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }
  friend bool operator!=(const XInterval& a, const XInterval& b) { return !(a == b); }

private:
  ExtReal lo_, hi_;
};

/// Sum with the indeterminate form (-oo) + (+oo) resolved to [-inf, inf]
/// before hulling the endpoint contributions.
XInterval add_iv(const XInterval& a, const XInterval& b);

/// Product over the four endpoint pairs; 0 * (+oo) contributes [0, inf] and
/// 0 * (-oo) contributes [-inf, 0].
XInterval mul_iv(const XInterval& a, const XInterval& b);

XInterval neg_iv(const XInterval& a);

XInterval operator+(const XInterval& a, const XInterval& b);
XInterval operator*(const XInterval& a, const XInterval& b);
XInterval operator-(const XInterval& a);

/// hi - lo for finite intervals, 0 for infinite points, +inf otherwise.
ExtReal width(const XInterval& a);

/// max(|lo|, |hi|).
ExtReal modulus(const XInterval& a);

/// Exact scalar multiple; scale(0, a) is the zero interval.
XInterval scale_iv(const Rat& c, const XInterval& a);

std::string to_string(const XInterval& a);

}  // namespace hnf

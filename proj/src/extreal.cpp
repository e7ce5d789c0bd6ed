#include "hnf/extreal.hpp"

#include <ostream>
#include <stdexcept>

namespace hnf {

Rat make_rat(const Int& p, const Int& q) {
  if (sgn(q) == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

ExtReal ExtReal::pos_inf() { return ExtReal(+1, Rat(0)); }
ExtReal ExtReal::neg_inf() { return ExtReal(-1, Rat(0)); }

int ExtReal::sgn() const {
  if (sign_ != 0) return sign_;
  return ::sgn(value_);
}

bool operator==(const ExtReal& a, const ExtReal& b) {
  if (a.sign_ != b.sign_) return false;
  if (a.sign_ != 0) return true;
  return a.value_ == b.value_;
}

bool operator<(const ExtReal& a, const ExtReal& b) {
  if (a.sign_ < 0) return b.sign_ >= 0;
  if (a.sign_ > 0) return false;
  if (b.sign_ > 0) return true;
  if (b.sign_ < 0) return false;
  return a.value_ < b.value_;
}

ExtReal neg(const ExtReal& a) {
  if (a.is_pos_inf()) return ExtReal::neg_inf();
  if (a.is_neg_inf()) return ExtReal::pos_inf();
  return ExtReal(Rat(-a.rat()));
}

ExtReal abs(const ExtReal& a) {
  if (a.is_infinite()) return ExtReal::pos_inf();
  return ExtReal(Rat(::abs(a.rat())));
}

ExtReal min(const ExtReal& a, const ExtReal& b) { return a < b ? a : b; }
ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }

std::optional<ExtReal> add_det(const ExtReal& a, const ExtReal& b) {
  if (a.is_finite() && b.is_finite()) return ExtReal(Rat(a.rat() + b.rat()));
  if (a.is_finite()) return b;
  if (b.is_finite()) return a;
  if (a.is_pos_inf() == b.is_pos_inf()) return a;
  return std::nullopt;
}

std::optional<ExtReal> mul_det(const ExtReal& a, const ExtReal& b) {
  if (a.is_finite() && b.is_finite()) return ExtReal(Rat(a.rat() * b.rat()));
  int sa = a.sgn(), sb = b.sgn();
  if (sa == 0 || sb == 0) return std::nullopt;
  return sa * sb > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const ExtReal& a) {
  if (a.is_pos_inf()) return "inf";
  if (a.is_neg_inf()) return "-inf";
  return to_string(a.rat());
}

std::ostream& operator<<(std::ostream& os, const ExtReal& a) { return os << to_string(a); }

}  // namespace hnf

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

namespace hnf {

using Rat = mpq_class;
using Int = mpz_class;

/// Builds a canonical rational p/q.  q must be nonzero.
Rat make_rat(const Int& p, const Int& q);

/// Extended real scalar: an exact rational or one of the two infinities.
class ExtReal {
public:
  ExtReal() : sign_(0), value_(0) {}
  ExtReal(Rat v) : sign_(0), value_(std::move(v)) {}
  ExtReal(int v) : sign_(0), value_(v) {}
  ExtReal(long v) : sign_(0), value_(v) {}

  static ExtReal pos_inf();
  static ExtReal neg_inf();

  bool is_finite() const { return sign_ == 0; }
  bool is_pos_inf() const { return sign_ > 0; }
  bool is_neg_inf() const { return sign_ < 0; }
  bool is_infinite() const { return sign_ != 0; }

  /// Finite payload; only meaningful when is_finite().
  const Rat& rat() const { return value_; }

  int sgn() const;

  friend bool operator==(const ExtReal& a, const ExtReal& b);
  friend bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }
  friend bool operator<(const ExtReal& a, const ExtReal& b);
  friend bool operator<=(const ExtReal& a, const ExtReal& b) { return a == b || a < b; }
  friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
  friend bool operator>=(const ExtReal& a, const ExtReal& b) { return b <= a; }

private:
  ExtReal(int sign, Rat v) : sign_(sign), value_(std::move(v)) {}
  int sign_;   // 0 finite, +1 is +oo, -1 is -oo
  Rat value_;  // zero when infinite
};

ExtReal neg(const ExtReal& a);
ExtReal abs(const ExtReal& a);
ExtReal min(const ExtReal& a, const ExtReal& b);
ExtReal max(const ExtReal& a, const ExtReal& b);

/// Sum when determinate; empty exactly for (-oo) + (+oo) in either order.
std::optional<ExtReal> add_det(const ExtReal& a, const ExtReal& b);

/// Product when determinate; empty exactly for 0 * (+-oo) in either order.
std::optional<ExtReal> mul_det(const ExtReal& a, const ExtReal& b);

/// "inf", "-inf", or exact rational text such as "-7/3".
std::string to_string(const ExtReal& a);
std::string to_string(const Rat& q);

std::ostream& operator<<(std::ostream& os, const ExtReal& a);

}  // namespace hnf

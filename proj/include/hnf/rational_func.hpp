#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hnf/enclosure.hpp"
#include "hnf/extreal.hpp"
#include "hnf/polynomial.hpp"

namespace hnf {

enum class Side { left, right };

/// Reduced rational function p/q.  Canonical form: p, q coprime with integer
/// coefficients, jointly content-free, and q has a positive leading
/// coefficient.  Equality of canonical forms is equality of functions.
class RationalFunc {
public:
  RationalFunc() : num_(), den_(Rat(1)) {}
  /// Reduces to canonical form; throws errc::zero_denominator.
  RationalFunc(Poly num, Poly den);

  static RationalFunc constant(const Rat& c);
  static RationalFunc x();
  static RationalFunc from_poly(Poly p);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }

  /// Exact value; x must not be a pole.
  Rat operator()(const Rat& x) const;
  bool defined_at(const Rat& x) const { return sign_at(den_, x) != 0; }

  friend bool operator==(const RationalFunc& a, const RationalFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunc& a, const RationalFunc& b) { return !(a == b); }

private:
  Poly num_, den_;
};

RationalFunc operator+(const RationalFunc& a, const RationalFunc& b);
RationalFunc operator-(const RationalFunc& a, const RationalFunc& b);
RationalFunc operator-(const RationalFunc& a);
RationalFunc operator*(const RationalFunc& a, const RationalFunc& b);
RationalFunc operator*(const Rat& c, const RationalFunc& a);

/// 1/f; throws errc::zero_reciprocal when f is the zero function.
RationalFunc reciprocal(const RationalFunc& f);

/// One-sided limit at p, finite or infinite (reduced form: never 0/0).
ExtReal rf_limit(const RationalFunc& f, const Rat& p, Side side);

/// Numerator roots of f in the open interval (a, b); multiplicities from the
/// numerator.  Throws errc::identically_zero when f is the zero function.
std::vector<IsolatedRoot> rf_roots(const RationalFunc& f, const Rat& a, const Rat& b);

/// Certified enclosure of sup |f| over (a, b) (equivalently over the closure
/// taken from inside).  Throws errc::interior_pole when den vanishes in the
/// open interval.  tol > 0.
Enclosure rf_sup_abs(const RationalFunc& f, const Rat& a, const Rat& b, const Rat& tol);

/// Sign analysis on the open interval (a, b); preconditions: no poles there.
bool nonneg_on(const RationalFunc& f, const Rat& a, const Rat& b);
bool strictly_pos_on(const RationalFunc& f, const Rat& a, const Rat& b);

/// Some rational point of (a, b) where f is nonzero; throws
/// errc::identically_zero when f vanishes identically.
Rat nonzero_sample(const RationalFunc& f, const Rat& a, const Rat& b);

std::string to_string(const RationalFunc& f);

}  // namespace hnf

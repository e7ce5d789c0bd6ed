#pragma once

#include <utility>
#include <vector>

#include "hnf/extreal.hpp"
#include "hnf/interval.hpp"

namespace hnf {

/// Dense univariate polynomial over Q.  Invariant: coefficient vector is
/// empty (zero polynomial) or has a nonzero leading entry.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  explicit Poly(const Rat& constant);

  static Poly x();
  /// a1*x + a0
  static Poly linear(const Rat& a1, const Rat& a0);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  Rat coeff(int i) const;
  const Rat& leading() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat operator()(const Rat& x) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a.c_ == b.c_); }

private:
  std::vector<Rat> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& c, const Poly& a);

/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
/// Exact division; throws std::logic_error on a nonzero remainder.
Poly divexact(const Poly& a, const Poly& b);

Poly derivative(const Poly& p);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd_poly(const Poly& a, const Poly& b);
Poly monic(const Poly& p);

int sign_at(const Poly& p, const Rat& x);
/// Sign of p immediately to the given side of x (side > 0 means right).
int sign_near(const Poly& p, const Rat& x, int side);

/// Product of the distinct irreducible factors, monic.
Poly squarefree_part(const Poly& p);
/// Yun decomposition: pairwise coprime squarefree factors with multiplicity,
/// nondecreasing in multiplicity.  Constant factors are dropped.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

/// Root of p captured exactly or by an open isolating interval (lo, hi).
/// Rational roots have lo == hi.  The captured root is strictly interior; an
/// endpoint is never the captured root but may be a different root of p.
struct IsolatedRoot {
  bool rational = false;
  Rat value;  // the root when rational
  Rat lo, hi;
  int multiplicity = 1;
};

/// Distinct roots of squarefree p in the open interval (a, b), sorted, with
/// pairwise disjoint enclosures.  Rationality is not decided here.
std::vector<IsolatedRoot> isolate_roots(const Poly& p, const Rat& a, const Rat& b);

/// Roots of arbitrary nonzero p in (a, b) with multiplicity, each decided
/// rational or irrational.  Throws errc::identically_zero on the zero poly.
std::vector<IsolatedRoot> roots_in(const Poly& p, const Rat& a, const Rat& b);

/// Narrows an isolating interval of squarefree p below the given width; may
/// discover the root to be rational on the way.
void refine_root(const Poly& p, IsolatedRoot& r, const Rat& max_width);

/// Minimal-denominator rational in [lo, hi]; lo <= hi.
Rat simplest_rational(const Rat& lo, const Rat& hi);

/// Interval evaluation of p over [lo, hi] by Horner's rule; encloses the
/// exact range.
XInterval eval_interval(const Poly& p, const Rat& lo, const Rat& hi);

/// Content-free integer image of p (primitive, integer coefficients).
Poly primitive_integer(const Poly& p);

std::string to_string(const Poly& p);

}  // namespace hnf

#pragma once

#include <utility>
#include <vector>

#include "hnf/enclosure.hpp"
#include "hnf/piecewise.hpp"

namespace hnf {

/// Certified enclosure of the distance rho(f, g) = S/(1+S) where S is the
/// supremum of |f - g| over the domain minus the infinity supports; S = +inf
/// maps to exactly 1.  The enclosure is exact rational arithmetic on a
/// width <= tol enclosure of S, so its own width is <= tol.
Enclosure rho(const PiecewiseFn& f, const PiecewiseFn& g, const Rat& tol);

enum class Verdict { yes, no, undecidable };

/// The three equivalent readings of "g lies in the open eps-ball around f":
/// metric (rho < eps), two-sided bound (|f - g| < eps/(1-eps)), and sandwich
/// (g - c < f < g + c).  eps must lie in (0, 1).
struct BallCheck {
  Verdict metric = Verdict::undecidable;
  bool two_sided = false;
  bool sandwich = false;
};

BallCheck order_ball_check(const PiecewiseFn& f, const PiecewiseFn& g, const Rat& eps,
                           const Rat& tol);

/// Lattice join and meet of two H-continuous functions.  New breakpoints
/// appear where the segment difference crosses zero with odd multiplicity;
/// such crossings must be rational (errc::non_representable_point).
PiecewiseFn h_sup2(const PiecewiseFn& f, const PiecewiseFn& g);
PiecewiseFn h_inf2(const PiecewiseFn& f, const PiecewiseFn& g);

/// Tail envelopes of a finite list: phis[k] = inf of fs[k..], psis[k] = sup
/// of fs[k..].
std::pair<std::vector<PiecewiseFn>, std::vector<PiecewiseFn>> finite_envelopes(
    const std::vector<PiecewiseFn>& fs);

struct CauchyResult {
  PiecewiseFn limit;
  Enclosure tail_bound;  // certified bound on rho(limit, fs[k]) for the last k
};

/// Verifies the Cauchy moduli pairwise (errc::modulus_violated), checks the
/// envelope pinch where computable, and returns the last iterate together
/// with the certified tail bound min(1, m/(1-m)), m the last modulus.
CauchyResult cauchy_limit(const std::vector<PiecewiseFn>& fs, const std::vector<Rat>& moduli,
                          const Rat& tol);

/// A continuous h between an upper-semicontinuous lower fence u and a
/// lower-semicontinuous upper fence l: u <= h <= l pointwise.  Breakpoint
/// mismatches are bridged by short linear links; throws
/// errc::sandwich_violated or errc::bridging_failed.
PiecewiseFn interpose(const PiecewiseFn& u, const PiecewiseFn& l);

/// A function with defect width below 1/n everywhere except the retained
/// defects of f, with certified rho(f, result) <= 1/n.  n >= 1.
PiecewiseFn density_approx(const PiecewiseFn& f, unsigned n);

}  // namespace hnf

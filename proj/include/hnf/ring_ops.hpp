#pragma once

#include <utility>
#include <vector>

#include "hnf/piecewise.hpp"

namespace hnf {

/// Ring operations on H-continuous operands.  Results are the dense
/// extensions of the exact segment-wise sums and products: segment functions
/// combine exactly on the common refinement and every breakpoint value is the
/// hull of the one-sided limits.  All results are canonical.
PiecewiseFn h_add(const PiecewiseFn& f, const PiecewiseFn& g);
PiecewiseFn h_mul(const PiecewiseFn& f, const PiecewiseFn& g);
PiecewiseFn h_neg(const PiecewiseFn& f);
PiecewiseFn h_sub(const PiecewiseFn& f, const PiecewiseFn& g);
/// c*f + d, exact.
PiecewiseFn h_linear(const Rat& c, const PiecewiseFn& f, const Rat& d);
PiecewiseFn h_scale(const Rat& c, const PiecewiseFn& f);

/// Multiplicative inverse 1/f.  New breakpoints appear at the interior zeros
/// of f, which must all be rational (errc::non_representable_point carries
/// the isolating interval).  Throws errc::zero_divisor when f vanishes on a
/// whole segment.
PiecewiseFn h_inv(const PiecewiseFn& f);

/// True iff f annihilates some nonzero function: f vanishes identically on
/// some segment.  f must be H-continuous.
bool is_zero_divisor(const PiecewiseFn& f);

struct ClassifyReport {
  bool h_continuous = false;
  bool continuous = false;     // no jumps and no infinities
  bool finite = false;         // no infinities
  bool nearly_finite = false;
  bool in_h_nd = false;        // jump support nowhere dense
  bool in_h_sz = false;        // jump support inside a polynomial zero set
  Poly sz_witness;             // vanishes on the jump support
};

ClassifyReport classify(const PiecewiseFn& f);

/// Writes f as phi / psi with phi, psi continuous (no jumps, no infinities),
/// psi vanishing exactly on the jump and infinity supports of f, and
/// f(x) = phi(x)/psi(x) off those points.
std::pair<PiecewiseFn, PiecewiseFn> as_quotient(const PiecewiseFn& f);

/// Continuous nonzero bump supported on a closed interval inside the cozero
/// set of psi and clear of the jump and infinity supports of phi; quadratic
/// arch normalized to peak 1.  Throws errc::zero_function when psi vanishes
/// identically.
PiecewiseFn dense_witness(const PiecewiseFn& phi, const PiecewiseFn& psi);

/// The function psi with psi * ps[i] = qs[i] for all i, when one exists:
/// the image of a module homomorphism determined on the ideal generated by
/// ps.  Throws errc::incompatible_images, errc::ideal_not_dense,
/// errc::non_representable_point.
PiecewiseFn rep_homomorphism(const std::vector<PiecewiseFn>& ps,
                             const std::vector<PiecewiseFn>& qs);

void require_h_continuous(const PiecewiseFn& f, const char* who);

}  // namespace hnf

#pragma once

#include <vector>

#include "hnf/piecewise.hpp"

namespace hnf {

/// Graph-closedness: every breakpoint value contains the hull of the
/// one-sided limit intervals.
bool is_s_continuous(const PiecewiseFn& f);

/// S-continuous with point-valued segments; throws errc::not_s_continuous.
bool is_quasi_minimal(const PiecewiseFn& f);

/// Quasi-minimal with breakpoint values exactly the limit hulls.
bool is_h_continuous(const PiecewiseFn& f);

/// The H-continuous function with the same segment functions: breakpoint
/// values replaced by the limit hulls.  Throws errc::not_quasi_minimal.
PiecewiseFn h_extract(const PiecewiseFn& f);

/// H-continuous members contained in g, certified.  Quasi-minimal g has
/// exactly one: {h_extract(g)}.  Otherwise two distinct members built from a
/// segment of positive width.  g must be S-continuous.
std::vector<PiecewiseFn> h_members_sample(const PiecewiseFn& g);

}  // namespace hnf

#pragma once

#include <iosfwd>
#include <string>

#include "hnf/dsl.hpp"
#include "hnf/piecewise.hpp"

namespace hnf {

/// CSV rows "x,lo,hi": uniform samples (samples >= 2, endpoints included)
/// merged with a row per breakpoint carrying its interval value.
void write_plot_csv(const PiecewiseFn& f, std::ostream& os, unsigned samples,
                    const NumberStyle& style);

/// Standalone 800x600 SVG: bound curves per segment, vertical bars at
/// proper-value breakpoints, clipped branches with markers at infinities.
void write_plot_svg(const PiecewiseFn& f, std::ostream& os, unsigned samples);

/// Writes one of the above to path; errc::io_error on stream failure.
void emit_plot(const PiecewiseFn& f, const std::string& path, unsigned samples, bool svg,
               const NumberStyle& style);

}  // namespace hnf

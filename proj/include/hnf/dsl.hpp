#pragma once

#include <string>

#include "hnf/errors.hpp"
#include "hnf/piecewise.hpp"

namespace hnf {

/// Syntax error with a 1-based source position.
class ParseError : public error {
public:
  ParseError(const std::string& message, size_t line, size_t col)
      : error(errc::parse_error,
              std::to_string(line) + ":" + std::to_string(col) + ": " + message),
        line_(line),
        col_(col) {}

  size_t line() const noexcept { return line_; }
  size_t col() const noexcept { return col_; }

private:
  size_t line_;
  size_t col_;
};

/// Reads a function literal:
///
///   piecewise on [-1,1] { (-1,0): -1; 0: [-1,1]; (0,1): 1 }
///
/// Segment entries map open intervals to expressions in x (a pair
/// `lo .. hi` for proper bounds); breakpoint entries map points to interval
/// literals or bare scalars.  Omitted breakpoint values are filled with the
/// hulls of the adjacent one-sided limits.  Shorthand `expr on [a,b]` inserts
/// breakpoints at the interior poles of expr.
PiecewiseFn parse_fn(const std::string& text);

/// Canonical literal: parse_fn(format_fn(f)) reproduces pw_canon(f) exactly.
std::string format_fn(const PiecewiseFn& f);

/// Rational literal: "p/q", integer, or exact decimal/scientific notation
/// ("0.25", "1e-9", "2.5e3").
Rat parse_rat(const std::string& text);

/// Number rendering for reports and plots.  decimal_digits < 0 keeps exact
/// "p/q" text; otherwise fixed-point decimals with k fractional digits and a
/// trailing '~' marking inexact roundings.
struct NumberStyle {
  int decimal_digits = -1;
};

std::string fmt_rat(const Rat& v, const NumberStyle& style);
std::string fmt_ext(const ExtReal& v, const NumberStyle& style);

/// Enclosure endpoints: a short exact terminating decimal when one exists
/// ("1/2" prints as "0.5"), else the style's rendering.
std::string fmt_bound(const ExtReal& v, const NumberStyle& style);

}  // namespace hnf

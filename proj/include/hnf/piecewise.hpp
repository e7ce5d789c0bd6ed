#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hnf/interval.hpp"
#include "hnf/rational_func.hpp"

namespace hnf {

/// Bounds of one open segment, lo <= hi pointwise; point-valued when lo == hi.
struct SegmentFuncs {
  RationalFunc lo, hi;

  bool point() const { return lo == hi; }
  SegmentFuncs() = default;
  SegmentFuncs(RationalFunc f) : lo(f), hi(std::move(f)) {}
  SegmentFuncs(RationalFunc l, RationalFunc h) : lo(std::move(l)), hi(std::move(h)) {}
};

/// Piecewise rational interval-valued function on a compact domain [a, b]:
/// finitely many breakpoints a = b0 < ... < bm = b carrying explicit interval
/// values, with rational-function bounds on each open segment (b_i, b_i+1).
class PiecewiseFn {
public:
  struct Flags {
    bool s_continuous = false;
    bool quasi_minimal = false;
    bool h_continuous = false;
  };

  /// Validates structure and caches the continuity classification.
  /// Throws: unsorted_breakpoints, interior_pole, segment_order_violation.
  static PiecewiseFn build(const Rat& a, const Rat& b, std::vector<Rat> breakpoints,
                           std::vector<XInterval> values, std::vector<SegmentFuncs> segments);

  /// Single rational function on the whole domain.
  static PiecewiseFn from_func(const Rat& a, const Rat& b, const RationalFunc& f);
  static PiecewiseFn constant(const Rat& a, const Rat& b, const Rat& c);

  const Rat& dom_lo() const { return breakpoints_.front(); }
  const Rat& dom_hi() const { return breakpoints_.back(); }
  size_t segment_count() const { return segments_.size(); }
  const std::vector<Rat>& breakpoints() const { return breakpoints_; }
  const std::vector<XInterval>& values() const { return values_; }
  const std::vector<SegmentFuncs>& segments() const { return segments_; }
  const Flags& flags() const { return flags_; }

  /// Interval value at x; throws out_of_domain.
  XInterval operator()(const Rat& x) const;

  /// Hull of the one-sided limits at breakpoint index i (one side at the
  /// domain endpoints).
  XInterval limit_hull(size_t i) const;
  /// One-sided limit pair [lim lo, lim hi] into breakpoint index i.
  XInterval side_limit(size_t i, Side side) const;

  bool is_breakpoint(const Rat& x) const;
  /// Index of the open segment containing x; x must not be a breakpoint.
  size_t segment_index(const Rat& x) const;

private:
  PiecewiseFn() = default;
  std::vector<Rat> breakpoints_;
  std::vector<XInterval> values_;
  std::vector<SegmentFuncs> segments_;
  Flags flags_;
};

/// Common refinement: both functions rebuilt on the union of breakpoints.
std::pair<PiecewiseFn, PiecewiseFn> pw_refine(const PiecewiseFn& f, const PiecewiseFn& g);
/// N-ary form used by operations over generator lists.
std::vector<PiecewiseFn> pw_refine_all(const std::vector<PiecewiseFn>& fs);

/// Inserts a breakpoint at an interior non-breakpoint x, keeping the function
/// unchanged (value there becomes the exact evaluation).
PiecewiseFn pw_insert(const PiecewiseFn& f, const Rat& x);

/// Canonical form: merges segments across removable breakpoints.  A
/// breakpoint is removable when the adjacent segment functions coincide, the
/// point is not a pole of them, and the stored value equals the evaluation.
PiecewiseFn pw_canon(const PiecewiseFn& f);

/// Canonical-form equality (same function as interval-valued map).
bool pw_equal(const PiecewiseFn& f, const PiecewiseFn& g);

/// Restriction to [u, v] inside the domain; endpoint values become the
/// inward limit hulls.
PiecewiseFn pw_restrict(const PiecewiseFn& f, const Rat& u, const Rat& v);

/// Fills missing breakpoint values with the hulls of adjacent one-sided
/// limits, then validates.
PiecewiseFn pw_extend_dense(const Rat& a, const Rat& b, const std::vector<Rat>& breakpoints,
                            const std::vector<std::optional<XInterval>>& values,
                            const std::vector<SegmentFuncs>& segments);

/// Pointwise interval order f <= g everywhere (both endpoints).
bool pw_leq(const PiecewiseFn& f, const PiecewiseFn& g);

/// Pointwise containment f(x) inside g(x) everywhere.
bool pw_within(const PiecewiseFn& f, const PiecewiseFn& g);

/// Zero-set piece: an exact point, an isolating interval around an
/// irrational zero, or a whole segment on which the function vanishes.
struct ZeroPiece {
  enum class Kind { point, enclosure, segment } kind;
  Rat lo, hi;          // point: lo == hi; segment: the open segment bounds
};

/// Structural sets of f: jump supports, infinity support, zero set, cozero
/// descriptor.
struct SetReport {
  std::vector<Rat> w_points;        // breakpoints with proper interval values
  std::vector<size_t> w_segments;   // segments with lo != hi
  std::vector<Rat> gamma_points;    // breakpoints whose value touches +-inf
  std::vector<ZeroPiece> zeros;     // Z(f) = {x : 0 in f(x)}
  bool zeros_have_interior = false;
  bool cozero_dense = false;        // complement of Z(f) dense in the domain
};

SetReport pw_sets(const PiecewiseFn& f);

/// Points and segments where the value width meets or exceeds eps (eps > 0).
struct WidthReport {
  std::vector<Rat> points;
  std::vector<size_t> segments;  // segments containing width >= eps somewhere
};

WidthReport pw_w_eps(const PiecewiseFn& f, const Rat& eps);

void check_same_domain(const PiecewiseFn& f, const PiecewiseFn& g);

}  // namespace hnf

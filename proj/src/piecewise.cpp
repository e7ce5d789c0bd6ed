#include "hnf/piecewise.hpp"

#include <algorithm>
#include <stdexcept>

#include "hnf/errors.hpp"

namespace hnf {

namespace {

bool has_interior_pole(const RationalFunc& f, const Rat& u, const Rat& v) {
  if (f.den().is_constant()) return false;
  return !isolate_roots(squarefree_part(f.den()), u, v).empty();
}

// Pole and fence-order validation; breakpoints must already be strictly
// increasing with segments.size() + 1 == breakpoints.size().
void check_segments(const std::vector<Rat>& breakpoints,
                    const std::vector<SegmentFuncs>& segments) {
  for (size_t i = 0; i < segments.size(); ++i) {
    const Rat& u = breakpoints[i];
    const Rat& v = breakpoints[i + 1];
    if (has_interior_pole(segments[i].lo, u, v) || has_interior_pole(segments[i].hi, u, v))
      fail(errc::interior_pole,
           "pole inside segment (" + to_string(u) + ", " + to_string(v) + ")");
    if (!segments[i].point() && !nonneg_on(segments[i].hi - segments[i].lo, u, v))
      fail(errc::segment_order_violation,
           "segment bounds cross on (" + to_string(u) + ", " + to_string(v) + ")");
  }
}

void check_layout(const Rat& a, const Rat& b, const std::vector<Rat>& breakpoints) {
  if (breakpoints.size() < 2) fail(errc::unsorted_breakpoints, "need at least two breakpoints");
  if (breakpoints.front() != a || breakpoints.back() != b)
    fail(errc::unsorted_breakpoints, "domain endpoints must be the extreme breakpoints");
  for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i] < breakpoints[i + 1]))
      fail(errc::unsorted_breakpoints,
           "breakpoints not strictly increasing near " + to_string(breakpoints[i]));
}

}  // namespace

PiecewiseFn PiecewiseFn::build(const Rat& a, const Rat& b, std::vector<Rat> breakpoints,
                               std::vector<XInterval> values, std::vector<SegmentFuncs> segments) {
  if (values.size() != breakpoints.size() || segments.size() + 1 != breakpoints.size())
    throw std::invalid_argument("piecewise arity mismatch");
  check_layout(a, b, breakpoints);
  check_segments(breakpoints, segments);

  PiecewiseFn f;
  f.breakpoints_ = std::move(breakpoints);
  f.values_ = std::move(values);
  f.segments_ = std::move(segments);

  bool s_cont = true, all_point = true, hulls_exact = true;
  for (size_t i = 0; i < f.breakpoints_.size(); ++i) {
    XInterval hull = f.limit_hull(i);
    if (!f.values_[i].contains(hull)) s_cont = false;
    if (f.values_[i] != hull) hulls_exact = false;
  }
  for (const auto& s : f.segments_)
    if (!s.point()) all_point = false;
  f.flags_.s_continuous = s_cont;
  f.flags_.quasi_minimal = s_cont && all_point;
  f.flags_.h_continuous = s_cont && all_point && hulls_exact;
  return f;
}

PiecewiseFn PiecewiseFn::from_func(const Rat& a, const Rat& b, const RationalFunc& f) {
  return pw_extend_dense(a, b, {a, b}, {std::nullopt, std::nullopt}, {SegmentFuncs(f)});
}

PiecewiseFn PiecewiseFn::constant(const Rat& a, const Rat& b, const Rat& c) {
  return from_func(a, b, RationalFunc::constant(c));
}

XInterval PiecewiseFn::operator()(const Rat& x) const {
  if (x < dom_lo() || x > dom_hi())
    fail(errc::out_of_domain, to_string(x) + " outside [" + to_string(dom_lo()) + ", " +
                                  to_string(dom_hi()) + "]");
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
  if (it != breakpoints_.end() && *it == x)
    return values_[static_cast<size_t>(it - breakpoints_.begin())];
  size_t seg = static_cast<size_t>(it - breakpoints_.begin()) - 1;
  return XInterval(ExtReal(segments_[seg].lo(x)), ExtReal(segments_[seg].hi(x)));
}

XInterval PiecewiseFn::side_limit(size_t i, Side side) const {
  if (side == Side::left) {
    if (i == 0) throw std::logic_error("no left limit at the lower domain endpoint");
    const SegmentFuncs& s = segments_[i - 1];
    return XInterval(rf_limit(s.lo, breakpoints_[i], Side::left),
                     rf_limit(s.hi, breakpoints_[i], Side::left));
  }
  if (i + 1 >= breakpoints_.size())
    throw std::logic_error("no right limit at the upper domain endpoint");
  const SegmentFuncs& s = segments_[i];
  return XInterval(rf_limit(s.lo, breakpoints_[i], Side::right),
                   rf_limit(s.hi, breakpoints_[i], Side::right));
}

XInterval PiecewiseFn::limit_hull(size_t i) const {
  if (i == 0) return side_limit(i, Side::right);
  if (i + 1 == breakpoints_.size()) return side_limit(i, Side::left);
  return XInterval::hull(side_limit(i, Side::left), side_limit(i, Side::right));
}

bool PiecewiseFn::is_breakpoint(const Rat& x) const {
  return std::binary_search(breakpoints_.begin(), breakpoints_.end(), x);
}

size_t PiecewiseFn::segment_index(const Rat& x) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  if (it == breakpoints_.begin() || it == breakpoints_.end())
    fail(errc::out_of_domain, to_string(x) + " outside the open domain");
  return static_cast<size_t>(it - breakpoints_.begin()) - 1;
}

void check_same_domain(const PiecewiseFn& f, const PiecewiseFn& g) {
  if (f.dom_lo() != g.dom_lo() || f.dom_hi() != g.dom_hi())
    fail(errc::domain_mismatch, "[" + to_string(f.dom_lo()) + ", " + to_string(f.dom_hi()) +
                                    "] vs [" + to_string(g.dom_lo()) + ", " +
                                    to_string(g.dom_hi()) + "]");
}

namespace {

PiecewiseFn rebuild_on(const PiecewiseFn& f, const std::vector<Rat>& grid) {
  std::vector<XInterval> values;
  std::vector<SegmentFuncs> segments;
  values.reserve(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    values.push_back(f(grid[i]));
    if (i + 1 < grid.size()) {
      Rat mid = (grid[i] + grid[i + 1]) / 2;
      segments.push_back(f.segments()[f.segment_index(mid)]);
    }
  }
  return PiecewiseFn::build(grid.front(), grid.back(), grid, std::move(values),
                            std::move(segments));
}

}  // namespace

std::pair<PiecewiseFn, PiecewiseFn> pw_refine(const PiecewiseFn& f, const PiecewiseFn& g) {
  check_same_domain(f, g);
  std::vector<Rat> grid;
  std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(),
             g.breakpoints().end(), std::back_inserter(grid));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return {rebuild_on(f, grid), rebuild_on(g, grid)};
}

std::vector<PiecewiseFn> pw_refine_all(const std::vector<PiecewiseFn>& fs) {
  std::vector<PiecewiseFn> out;
  if (fs.empty()) return out;
  std::vector<Rat> grid = fs.front().breakpoints();
  for (size_t i = 1; i < fs.size(); ++i) {
    check_same_domain(fs.front(), fs[i]);
    std::vector<Rat> merged;
    std::merge(grid.begin(), grid.end(), fs[i].breakpoints().begin(), fs[i].breakpoints().end(),
               std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    grid = std::move(merged);
  }
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(rebuild_on(f, grid));
  return out;
}

PiecewiseFn pw_insert(const PiecewiseFn& f, const Rat& x) {
  if (x <= f.dom_lo() || x >= f.dom_hi())
    fail(errc::out_of_domain, "insertion point must be interior");
  if (f.is_breakpoint(x)) return f;
  std::vector<Rat> grid = f.breakpoints();
  grid.insert(std::upper_bound(grid.begin(), grid.end(), x), x);
  return rebuild_on(f, grid);
}

PiecewiseFn pw_canon(const PiecewiseFn& f) {
  std::vector<Rat> bs = f.breakpoints();
  std::vector<XInterval> vs = f.values();
  std::vector<SegmentFuncs> ss = f.segments();
  for (size_t i = 1; i + 1 < bs.size();) {
    const SegmentFuncs& l = ss[i - 1];
    const SegmentFuncs& r = ss[i];
    bool removable = l.lo == r.lo && l.hi == r.hi && l.lo.defined_at(bs[i]) &&
                     l.hi.defined_at(bs[i]) &&
                     vs[i] == XInterval(ExtReal(l.lo(bs[i])), ExtReal(l.hi(bs[i])));
    if (removable) {
      bs.erase(bs.begin() + static_cast<long>(i));
      vs.erase(vs.begin() + static_cast<long>(i));
      ss.erase(ss.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
  Rat a = bs.front(), b = bs.back();
  return PiecewiseFn::build(a, b, std::move(bs), std::move(vs), std::move(ss));
}

bool pw_equal(const PiecewiseFn& f, const PiecewiseFn& g) {
  if (f.dom_lo() != g.dom_lo() || f.dom_hi() != g.dom_hi()) return false;
  PiecewiseFn cf = pw_canon(f), cg = pw_canon(g);
  if (cf.breakpoints() != cg.breakpoints()) return false;
  for (size_t i = 0; i < cf.values().size(); ++i)
    if (cf.values()[i] != cg.values()[i]) return false;
  for (size_t i = 0; i < cf.segments().size(); ++i)
    if (cf.segments()[i].lo != cg.segments()[i].lo || cf.segments()[i].hi != cg.segments()[i].hi)
      return false;
  return true;
}

PiecewiseFn pw_restrict(const PiecewiseFn& f, const Rat& u, const Rat& v) {
  if (!(u < v) || u < f.dom_lo() || v > f.dom_hi())
    fail(errc::out_of_domain, "restriction interval [" + to_string(u) + ", " + to_string(v) +
                                  "] not inside the domain");
  std::vector<Rat> grid;
  grid.push_back(u);
  for (const Rat& b : f.breakpoints())
    if (u < b && b < v) grid.push_back(b);
  grid.push_back(v);

  std::vector<XInterval> values;
  std::vector<SegmentFuncs> segments;
  for (size_t i = 0; i < grid.size(); ++i) {
    if (i + 1 < grid.size()) {
      Rat mid = (grid[i] + grid[i + 1]) / 2;
      segments.push_back(f.segments()[f.segment_index(mid)]);
    }
  }
  for (size_t i = 0; i < grid.size(); ++i) {
    if (i == 0) {
      const SegmentFuncs& s = segments.front();
      values.push_back(XInterval(rf_limit(s.lo, u, Side::right), rf_limit(s.hi, u, Side::right)));
    } else if (i + 1 == grid.size()) {
      const SegmentFuncs& s = segments.back();
      values.push_back(XInterval(rf_limit(s.lo, v, Side::left), rf_limit(s.hi, v, Side::left)));
    } else {
      values.push_back(f(grid[i]));
    }
  }
  return PiecewiseFn::build(u, v, std::move(grid), std::move(values), std::move(segments));
}

PiecewiseFn pw_extend_dense(const Rat& a, const Rat& b, const std::vector<Rat>& breakpoints,
                            const std::vector<std::optional<XInterval>>& values,
                            const std::vector<SegmentFuncs>& segments) {
  if (values.size() != breakpoints.size() || segments.size() + 1 != breakpoints.size())
    throw std::invalid_argument("piecewise arity mismatch");
  // Crossing fences must surface as segment_order_violation before the limit
  // hulls below would form an inverted interval.
  check_layout(a, b, breakpoints);
  check_segments(breakpoints, segments);
  std::vector<XInterval> filled(breakpoints.size());
  for (size_t i = 0; i < breakpoints.size(); ++i) {
    if (values[i]) {
      filled[i] = *values[i];
      continue;
    }
    ExtReal lo, hi;
    bool have = false;
    if (i > 0) {
      lo = rf_limit(segments[i - 1].lo, breakpoints[i], Side::left);
      hi = rf_limit(segments[i - 1].hi, breakpoints[i], Side::left);
      have = true;
    }
    if (i < segments.size()) {
      ExtReal rlo = rf_limit(segments[i].lo, breakpoints[i], Side::right);
      ExtReal rhi = rf_limit(segments[i].hi, breakpoints[i], Side::right);
      if (have) {
        lo = min(lo, rlo);
        hi = max(hi, rhi);
      } else {
        lo = rlo;
        hi = rhi;
      }
    }
    filled[i] = XInterval(lo, hi);
  }
  return PiecewiseFn::build(a, b, breakpoints, std::move(filled), segments);
}

bool pw_leq(const PiecewiseFn& f, const PiecewiseFn& g) {
  auto [rf, rg] = pw_refine(f, g);
  for (size_t i = 0; i < rf.values().size(); ++i) {
    if (!(rf.values()[i].lo() <= rg.values()[i].lo())) return false;
    if (!(rf.values()[i].hi() <= rg.values()[i].hi())) return false;
  }
  for (size_t i = 0; i < rf.segments().size(); ++i) {
    const Rat& u = rf.breakpoints()[i];
    const Rat& v = rf.breakpoints()[i + 1];
    if (!nonneg_on(rg.segments()[i].lo - rf.segments()[i].lo, u, v)) return false;
    if (!nonneg_on(rg.segments()[i].hi - rf.segments()[i].hi, u, v)) return false;
  }
  return true;
}

bool pw_within(const PiecewiseFn& f, const PiecewiseFn& g) {
  auto [rf, rg] = pw_refine(f, g);
  for (size_t i = 0; i < rf.values().size(); ++i)
    if (!rg.values()[i].contains(rf.values()[i])) return false;
  for (size_t i = 0; i < rf.segments().size(); ++i) {
    const Rat& u = rf.breakpoints()[i];
    const Rat& v = rf.breakpoints()[i + 1];
    if (!nonneg_on(rf.segments()[i].lo - rg.segments()[i].lo, u, v)) return false;
    if (!nonneg_on(rg.segments()[i].hi - rf.segments()[i].hi, u, v)) return false;
  }
  return true;
}

namespace {

void zero_pieces_point_segment(const RationalFunc& phi, const Rat& u, const Rat& v,
                               std::vector<ZeroPiece>& out, bool& interior) {
  if (phi.is_zero()) {
    out.push_back({ZeroPiece::Kind::segment, u, v});
    interior = true;
    return;
  }
  for (const auto& r : rf_roots(phi, u, v)) {
    if (r.rational)
      out.push_back({ZeroPiece::Kind::point, r.value, r.value});
    else
      out.push_back({ZeroPiece::Kind::enclosure, r.lo, r.hi});
  }
}

// Zero set inside a proper segment: {x : lo(x) <= 0 <= hi(x)}.  Runs are
// delimited by roots of the bound numerators; irrational delimiters keep
// their isolating enclosures (outer cover) and are also reported alone.
void zero_pieces_proper_segment(const SegmentFuncs& s, const Rat& u, const Rat& v,
                                std::vector<ZeroPiece>& out, bool& interior) {
  RationalFunc neglo = -s.lo;
  bool lo_ok = nonneg_on(neglo, u, v);   // lo <= 0 throughout
  bool hi_ok = nonneg_on(s.hi, u, v);    // hi >= 0 throughout
  if (lo_ok && hi_ok) {
    out.push_back({ZeroPiece::Kind::segment, u, v});
    interior = true;
    return;
  }
  // Delimiters: distinct roots of both bounds inside (u, v), disjoint by
  // construction of roots_in on the numerator product.
  std::vector<IsolatedRoot> marks = roots_in(s.lo.num() * s.hi.num(), u, v);
  // Sample each gap between delimiters; a run of in-zero gaps becomes one
  // piece with certified (inner) bounds.
  std::vector<Rat> bounds;
  bounds.push_back(u);
  for (const auto& m : marks) {
    bounds.push_back(m.lo);
    bounds.push_back(m.hi);
  }
  bounds.push_back(v);
  std::optional<Rat> run_start;
  for (size_t k = 0; k + 1 < bounds.size(); k += 2) {
    const Rat& gl = bounds[k];
    const Rat& gr = bounds[k + 1];
    Rat sample = (gl + gr) / 2;
    bool in_zero = gl < gr && sgn(s.lo(sample)) <= 0 && sgn(s.hi(sample)) >= 0;
    if (in_zero && !run_start) run_start = gl;
    if (!in_zero && run_start) {
      out.push_back({ZeroPiece::Kind::segment, *run_start, bounds[k - 1]});
      interior = true;
      run_start.reset();
    }
  }
  if (run_start) {
    out.push_back({ZeroPiece::Kind::segment, *run_start, v});
    interior = true;
  }
  for (const auto& m : marks) {
    if (m.rational)
      out.push_back({ZeroPiece::Kind::point, m.value, m.value});
    else
      out.push_back({ZeroPiece::Kind::enclosure, m.lo, m.hi});
  }
}

}  // namespace

SetReport pw_sets(const PiecewiseFn& f) {
  SetReport rep;
  for (size_t i = 0; i < f.breakpoints().size(); ++i) {
    const XInterval& v = f.values()[i];
    if (!(width(v) == ExtReal(0))) rep.w_points.push_back(f.breakpoints()[i]);
    if (v.touches_infinity()) rep.gamma_points.push_back(f.breakpoints()[i]);
    if (v.contains(ExtReal(0)))
      rep.zeros.push_back({ZeroPiece::Kind::point, f.breakpoints()[i], f.breakpoints()[i]});
  }
  for (size_t i = 0; i < f.segments().size(); ++i) {
    const Rat& u = f.breakpoints()[i];
    const Rat& v = f.breakpoints()[i + 1];
    const SegmentFuncs& s = f.segments()[i];
    if (!s.point()) rep.w_segments.push_back(i);
    if (s.point())
      zero_pieces_point_segment(s.lo, u, v, rep.zeros, rep.zeros_have_interior);
    else
      zero_pieces_proper_segment(s, u, v, rep.zeros, rep.zeros_have_interior);
  }
  std::sort(rep.zeros.begin(), rep.zeros.end(),
            [](const ZeroPiece& x, const ZeroPiece& y) { return x.lo < y.lo; });
  rep.cozero_dense = !rep.zeros_have_interior;
  return rep;
}

WidthReport pw_w_eps(const PiecewiseFn& f, const Rat& eps) {
  if (sgn(eps) <= 0) fail(errc::eps_out_of_range, "eps must be positive");
  WidthReport rep;
  for (size_t i = 0; i < f.breakpoints().size(); ++i)
    if (width(f.values()[i]) >= ExtReal(eps)) rep.points.push_back(f.breakpoints()[i]);
  for (size_t i = 0; i < f.segments().size(); ++i) {
    const SegmentFuncs& s = f.segments()[i];
    if (s.point()) continue;
    // width reaches eps inside iff eps - (hi - lo) fails to stay positive
    RationalFunc margin = RationalFunc::constant(eps) - (s.hi - s.lo);
    if (!strictly_pos_on(margin, f.breakpoints()[i], f.breakpoints()[i + 1]))
      rep.segments.push_back(i);
  }
  return rep;
}

}  // namespace hnf

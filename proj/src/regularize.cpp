#include "hnf/regularize.hpp"

#include <optional>
#include <stdexcept>

#include "hnf/errors.hpp"

namespace hnf {

bool is_s_continuous(const PiecewiseFn& f) { return f.flags().s_continuous; }

bool is_quasi_minimal(const PiecewiseFn& f) {
  if (!f.flags().s_continuous) fail(errc::not_s_continuous, "graph is not closed");
  return f.flags().quasi_minimal;
}

bool is_h_continuous(const PiecewiseFn& f) { return f.flags().h_continuous; }

PiecewiseFn h_extract(const PiecewiseFn& f) {
  if (!f.flags().s_continuous || !f.flags().quasi_minimal)
    fail(errc::not_quasi_minimal, "extraction needs a quasi-minimal function");
  std::vector<std::optional<XInterval>> none(f.breakpoints().size(), std::nullopt);
  return pw_canon(
      pw_extend_dense(f.dom_lo(), f.dom_hi(), f.breakpoints(), none, f.segments()));
}

namespace {

// Lower selection: the lo bound on every segment, closed up densely.
PiecewiseFn lower_member(const PiecewiseFn& g) {
  std::vector<SegmentFuncs> segs;
  segs.reserve(g.segments().size());
  for (const auto& s : g.segments()) segs.push_back(SegmentFuncs(s.lo));
  std::vector<std::optional<XInterval>> none(g.breakpoints().size(), std::nullopt);
  return pw_canon(pw_extend_dense(g.dom_lo(), g.dom_hi(), g.breakpoints(), none, segs));
}

}  // namespace

std::vector<PiecewiseFn> h_members_sample(const PiecewiseFn& g) {
  if (!g.flags().s_continuous) fail(errc::not_s_continuous, "graph is not closed");
  if (g.flags().quasi_minimal) return {h_extract(g)};

  // Locate a proper segment and a closed subinterval [p, q] on which the gap
  // hi - lo stays above a positive rational bound.
  size_t seg = g.segments().size();
  for (size_t i = 0; i < g.segments().size(); ++i)
    if (!g.segments()[i].point()) {
      seg = i;
      break;
    }
  const SegmentFuncs& s = g.segments()[seg];
  const Rat& u = g.breakpoints()[seg];
  const Rat& v = g.breakpoints()[seg + 1];
  RationalFunc d = s.hi - s.lo;

  // A point where the gap is strictly positive.
  Rat c = (u + v) / 2;
  if (sgn(d(c)) == 0) c = nonzero_sample(d, u, v);
  Rat w0 = d(c) / 2;

  // Shrink [p, q] around c until d >= w0 is certified on the closed interval.
  Rat radius = std::min(Rat(c - u), Rat(v - c)) / 2;
  RationalFunc floor_gap = d - RationalFunc::constant(w0);
  Rat p = c - radius, q = c + radius;
  while (!(sgn(floor_gap(p)) >= 0 && sgn(floor_gap(q)) >= 0 && nonneg_on(floor_gap, p, q))) {
    radius /= 2;
    p = c - radius;
    q = c + radius;
  }
  Rat lift = w0 / 2;  // d >= 2*lift on [p, q]

  PiecewiseFn a = lower_member(g);

  // Second member: lo + lift on (p, q), glued with jump values at p and q.
  std::vector<Rat> bs;
  std::vector<SegmentFuncs> segs;
  for (size_t i = 0; i < g.segments().size(); ++i) {
    bs.push_back(g.breakpoints()[i]);
    if (i != seg) {
      segs.push_back(SegmentFuncs(g.segments()[i].lo));
      continue;
    }
    segs.push_back(SegmentFuncs(s.lo));
    bs.push_back(p);
    segs.push_back(SegmentFuncs(s.lo + RationalFunc::constant(lift)));
    bs.push_back(q);
    segs.push_back(SegmentFuncs(s.lo));
  }
  bs.push_back(g.breakpoints().back());
  std::vector<std::optional<XInterval>> none(bs.size(), std::nullopt);
  PiecewiseFn b = pw_canon(pw_extend_dense(g.dom_lo(), g.dom_hi(), bs, none, segs));

  if (!pw_within(a, g) || !pw_within(b, g) || pw_equal(a, b))
    throw std::logic_error("member construction failed its certificate");
  return {a, b};
}

}  // namespace hnf

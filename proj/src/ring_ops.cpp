#include "hnf/ring_ops.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "hnf/errors.hpp"
#include "hnf/regularize.hpp"

namespace hnf {

void require_h_continuous(const PiecewiseFn& f, const char* who) {
  if (!f.flags().h_continuous)
    fail(errc::not_h_continuous, std::string(who) + " needs H-continuous operands");
}

namespace {

// Dense extension of an exact segment-wise combination on the common grid.
PiecewiseFn combine(const PiecewiseFn& f, const PiecewiseFn& g,
                    RationalFunc (*op)(const RationalFunc&, const RationalFunc&)) {
  auto [rf, rg] = pw_refine(f, g);
  std::vector<SegmentFuncs> segs;
  segs.reserve(rf.segments().size());
  for (size_t i = 0; i < rf.segments().size(); ++i)
    segs.push_back(SegmentFuncs(op(rf.segments()[i].lo, rg.segments()[i].lo)));
  std::vector<std::optional<XInterval>> none(rf.breakpoints().size(), std::nullopt);
  return pw_canon(pw_extend_dense(rf.dom_lo(), rf.dom_hi(), rf.breakpoints(), none, segs));
}

RationalFunc rf_add(const RationalFunc& a, const RationalFunc& b) { return a + b; }
RationalFunc rf_mul(const RationalFunc& a, const RationalFunc& b) { return a * b; }

}  // namespace

PiecewiseFn h_add(const PiecewiseFn& f, const PiecewiseFn& g) {
  require_h_continuous(f, "h_add");
  require_h_continuous(g, "h_add");
  return combine(f, g, rf_add);
}

PiecewiseFn h_mul(const PiecewiseFn& f, const PiecewiseFn& g) {
  require_h_continuous(f, "h_mul");
  require_h_continuous(g, "h_mul");
  return combine(f, g, rf_mul);
}

PiecewiseFn h_linear(const Rat& c, const PiecewiseFn& f, const Rat& d) {
  require_h_continuous(f, "h_linear");
  if (sgn(c) == 0) return PiecewiseFn::constant(f.dom_lo(), f.dom_hi(), d);
  std::vector<SegmentFuncs> segs;
  segs.reserve(f.segments().size());
  RationalFunc shift = RationalFunc::constant(d);
  for (const auto& s : f.segments()) segs.push_back(SegmentFuncs(c * s.lo + shift));
  std::vector<std::optional<XInterval>> none(f.breakpoints().size(), std::nullopt);
  return pw_canon(pw_extend_dense(f.dom_lo(), f.dom_hi(), f.breakpoints(), none, segs));
}

PiecewiseFn h_scale(const Rat& c, const PiecewiseFn& f) { return h_linear(c, f, Rat(0)); }

PiecewiseFn h_neg(const PiecewiseFn& f) { return h_linear(Rat(-1), f, Rat(0)); }

PiecewiseFn h_sub(const PiecewiseFn& f, const PiecewiseFn& g) { return h_add(f, h_neg(g)); }

bool is_zero_divisor(const PiecewiseFn& f) {
  require_h_continuous(f, "is_zero_divisor");
  for (const auto& s : f.segments())
    if (s.lo.is_zero()) return true;
  return false;
}

PiecewiseFn h_inv(const PiecewiseFn& f) {
  require_h_continuous(f, "h_inv");
  for (size_t i = 0; i < f.segments().size(); ++i)
    if (f.segments()[i].lo.is_zero())
      fail(errc::zero_divisor, "Z(f) contains (" + to_string(f.breakpoints()[i]) + "," +
                                   to_string(f.breakpoints()[i + 1]) + ")");

  std::vector<Rat> bs;
  std::vector<SegmentFuncs> segs;
  for (size_t i = 0; i < f.segments().size(); ++i) {
    bs.push_back(f.breakpoints()[i]);
    const RationalFunc& phi = f.segments()[i].lo;
    RationalFunc rec = reciprocal(phi);
    segs.push_back(SegmentFuncs(rec));
    // Interior zeros of phi become pole breakpoints of 1/phi.
    for (const auto& r : rf_roots(phi, f.breakpoints()[i], f.breakpoints()[i + 1])) {
      if (!r.rational)
        fail(errc::non_representable_point,
             "irrational zero isolated by (" + to_string(r.lo) + ", " + to_string(r.hi) + ")");
      bs.push_back(r.value);
      segs.push_back(SegmentFuncs(rec));
    }
  }
  bs.push_back(f.breakpoints().back());
  std::vector<std::optional<XInterval>> none(bs.size(), std::nullopt);
  return pw_canon(pw_extend_dense(f.dom_lo(), f.dom_hi(), bs, none, segs));
}

ClassifyReport classify(const PiecewiseFn& f) {
  require_h_continuous(f, "classify");
  ClassifyReport rep;
  rep.h_continuous = true;
  rep.nearly_finite = true;
  SetReport sets = pw_sets(f);
  rep.finite = sets.gamma_points.empty();
  rep.continuous = rep.finite && sets.w_points.empty();
  rep.in_h_nd = true;  // the jump support is a finite point set
  rep.in_h_sz = true;
  Poly w(Rat(1));
  for (const Rat& p : sets.w_points) w = w * Poly::linear(Rat(1), -p);
  rep.sz_witness = w;
  return rep;
}

std::pair<PiecewiseFn, PiecewiseFn> as_quotient(const PiecewiseFn& f) {
  require_h_continuous(f, "as_quotient");
  SetReport sets = pw_sets(f);
  std::vector<Rat> defects = sets.w_points;
  defects.insert(defects.end(), sets.gamma_points.begin(), sets.gamma_points.end());
  std::sort(defects.begin(), defects.end());
  defects.erase(std::unique(defects.begin(), defects.end()), defects.end());
  Poly g(Rat(1));
  for (const Rat& p : defects) g = g * Poly::linear(Rat(1), -p);
  PiecewiseFn gfn = PiecewiseFn::from_func(f.dom_lo(), f.dom_hi(), RationalFunc::from_poly(g));

  // 1 + f*f is H-continuous, strictly positive, and bounded away from zero,
  // so its inverse never needs new breakpoints.
  PiecewiseFn one = PiecewiseFn::constant(f.dom_lo(), f.dom_hi(), Rat(1));
  PiecewiseFn damp = h_inv(h_add(one, h_mul(f, f)));
  PiecewiseFn phi = h_mul(h_mul(f, gfn), damp);
  PiecewiseFn psi = h_mul(gfn, damp);
  return {phi, psi};
}

PiecewiseFn dense_witness(const PiecewiseFn& phi, const PiecewiseFn& psi) {
  require_h_continuous(phi, "dense_witness");
  require_h_continuous(psi, "dense_witness");
  check_same_domain(phi, psi);
  auto [rphi, rpsi] = pw_refine(phi, psi);

  // A segment where psi does not vanish identically exists unless psi is the
  // zero function.
  for (size_t i = 0; i < rpsi.segments().size(); ++i) {
    const RationalFunc& s = rpsi.segments()[i].lo;
    if (s.is_zero()) continue;
    const Rat& u = rpsi.breakpoints()[i];
    const Rat& v = rpsi.breakpoints()[i + 1];
    // Shrink toward a nonzero sample of psi until the closed interval is
    // certified inside the cozero set.
    Rat c = nonzero_sample(s, u, v);
    Rat radius = std::min(Rat(c - u), Rat(v - c)) / 2;
    while (!strictly_pos_on(s * s, c - radius, c + radius) ||
           sgn(s(c - radius)) == 0 || sgn(s(c + radius)) == 0)
      radius /= 2;
    Rat l = c - radius, r = c + radius;

    // Quadratic arch on (l, r), zero elsewhere, peak 1 at the midpoint.
    Rat m = (l + r) / 2;
    Rat scale = Rat(1) / ((m - l) * (r - m));
    Poly arch = Poly(scale) * Poly::linear(Rat(1), -l) * Poly::linear(Rat(-1), r);
    std::vector<Rat> bs;
    std::vector<SegmentFuncs> segs;
    bs.push_back(rphi.dom_lo());
    RationalFunc zero;
    if (l != rphi.dom_lo()) {
      segs.push_back(SegmentFuncs(zero));
      bs.push_back(l);
    }
    segs.push_back(SegmentFuncs(RationalFunc::from_poly(arch)));
    if (r != rphi.dom_hi()) {
      bs.push_back(r);
      segs.push_back(SegmentFuncs(zero));
    }
    bs.push_back(rphi.dom_hi());
    std::vector<std::optional<XInterval>> none(bs.size(), std::nullopt);
    return pw_canon(pw_extend_dense(rphi.dom_lo(), rphi.dom_hi(), bs, none, segs));
  }
  fail(errc::zero_function, "psi vanishes identically");
}

PiecewiseFn rep_homomorphism(const std::vector<PiecewiseFn>& ps,
                             const std::vector<PiecewiseFn>& qs) {
  if (ps.empty() || ps.size() != qs.size())
    throw std::invalid_argument("generator and image lists must align and be nonempty");
  for (const auto& p : ps) require_h_continuous(p, "rep_homomorphism");
  for (const auto& q : qs) require_h_continuous(q, "rep_homomorphism");

  // Compatibility: the would-be images must agree across generators,
  // q_i * p_j = p_i * q_j.
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = i + 1; j < ps.size(); ++j)
      if (!pw_equal(h_mul(qs[i], ps[j]), h_mul(ps[i], qs[j])))
        fail(errc::incompatible_images,
             "generators " + std::to_string(i) + " and " + std::to_string(j) +
                 " induce different quotients");

  std::vector<PiecewiseFn> all = ps;
  all.insert(all.end(), qs.begin(), qs.end());
  all = pw_refine_all(all);
  size_t n = ps.size();
  const PiecewiseFn& grid = all.front();

  std::vector<Rat> bs;
  std::vector<SegmentFuncs> segs;
  for (size_t i = 0; i < grid.segments().size(); ++i) {
    bs.push_back(grid.breakpoints()[i]);
    const Rat& u = grid.breakpoints()[i];
    const Rat& v = grid.breakpoints()[i + 1];
    // Pick the generator with the fewest zeros on this segment; the ideal
    // must not die here.
    size_t best = n;
    size_t best_roots = 0;
    for (size_t k = 0; k < n; ++k) {
      const RationalFunc& pk = all[k].segments()[i].lo;
      if (pk.is_zero()) continue;
      size_t nroots = rf_roots(pk, u, v).size();
      if (best == n || nroots < best_roots) {
        best = k;
        best_roots = nroots;
      }
    }
    if (best == n)
      fail(errc::ideal_not_dense, "all generators vanish on (" + to_string(u) + ", " +
                                      to_string(v) + ")");
    RationalFunc ratio =
        all[n + best].segments()[i].lo * reciprocal(all[best].segments()[i].lo);
    segs.push_back(SegmentFuncs(ratio));
    // Remaining poles of the quotient must be representable breakpoints.
    if (!ratio.den().is_constant()) {
      for (const auto& r : roots_in(ratio.den(), u, v)) {
        if (!r.rational)
          fail(errc::non_representable_point,
               "irrational pole isolated by (" + to_string(r.lo) + ", " + to_string(r.hi) + ")");
        bs.push_back(r.value);
        segs.push_back(segs.back());
      }
    }
  }
  bs.push_back(grid.breakpoints().back());
  std::vector<std::optional<XInterval>> none(bs.size(), std::nullopt);
  return pw_canon(pw_extend_dense(grid.dom_lo(), grid.dom_hi(), bs, none, segs));
}

}  // namespace hnf

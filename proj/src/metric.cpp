#include "hnf/metric.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "hnf/errors.hpp"
#include "hnf/regularize.hpp"
#include "hnf/ring_ops.hpp"

namespace hnf {

namespace {

Rat contract(const Rat& s) { return s / (1 + s); }  // T(t) = t/(1+t)

}  // namespace

Enclosure rho(const PiecewiseFn& f, const PiecewiseFn& g, const Rat& tol) {
  if (sgn(tol) <= 0) throw std::invalid_argument("rho: tolerance must be positive");
  PiecewiseFn h = h_sub(f, g);
  ExtReal slo(0), shi(0);
  for (size_t i = 0; i < h.segments().size(); ++i) {
    Enclosure e = rf_sup_abs(h.segments()[i].lo, h.breakpoints()[i], h.breakpoints()[i + 1], tol);
    if (e.hi.is_infinite()) return Enclosure{ExtReal(1), ExtReal(1), tol};
    slo = max(slo, e.lo);
    shi = max(shi, e.hi);
  }
  return Enclosure{ExtReal(contract(slo.rat())), ExtReal(contract(shi.rat())), tol};
}

namespace {

// Strict comparison extended so that matching infinities pass: at shared
// poles both sides escape together and the order bound carries over.
bool lt_infeq(const ExtReal& a, const ExtReal& b) {
  return a < b || (a == b && a.is_infinite());
}

// f strictly below g pointwise, infinities as above.
bool pw_strictly_below(const PiecewiseFn& f, const PiecewiseFn& g) {
  auto [rf, rg] = pw_refine(f, g);
  for (size_t i = 0; i < rf.values().size(); ++i) {
    if (!lt_infeq(rf.values()[i].lo(), rg.values()[i].lo())) return false;
    if (!lt_infeq(rf.values()[i].hi(), rg.values()[i].hi())) return false;
  }
  for (size_t i = 0; i < rf.segments().size(); ++i) {
    const Rat& u = rf.breakpoints()[i];
    const Rat& v = rf.breakpoints()[i + 1];
    if (!strictly_pos_on(rg.segments()[i].lo - rf.segments()[i].lo, u, v)) return false;
    if (!strictly_pos_on(rg.segments()[i].hi - rf.segments()[i].hi, u, v)) return false;
  }
  return true;
}

}  // namespace

BallCheck order_ball_check(const PiecewiseFn& f, const PiecewiseFn& g, const Rat& eps,
                           const Rat& tol) {
  if (sgn(eps) <= 0 || eps >= 1) fail(errc::eps_out_of_range, "eps must lie in (0, 1)");
  BallCheck out;

  Enclosure e = rho(f, g, tol);
  if (e.hi < ExtReal(eps))
    out.metric = Verdict::yes;
  else if (ExtReal(eps) <= e.lo)
    out.metric = Verdict::no;
  else
    out.metric = Verdict::undecidable;

  Rat c = eps / (1 - eps);
  PiecewiseFn h = h_sub(f, g);

  // |f - g| < c pointwise: any infinite difference fails outright.
  out.two_sided = true;
  for (const XInterval& v : h.values()) {
    if (!(ExtReal(-c) < v.lo()) || !(v.hi() < ExtReal(c))) out.two_sided = false;
  }
  if (out.two_sided) {
    for (size_t i = 0; i < h.segments().size(); ++i) {
      const Rat& u = h.breakpoints()[i];
      const Rat& v = h.breakpoints()[i + 1];
      RationalFunc cc = RationalFunc::constant(c);
      if (!strictly_pos_on(cc - h.segments()[i].lo, u, v) ||
          !strictly_pos_on(h.segments()[i].lo + cc, u, v)) {
        out.two_sided = false;
        break;
      }
    }
  }

  out.sandwich = pw_strictly_below(h_linear(Rat(1), g, -c), f) &&
                 pw_strictly_below(f, h_linear(Rat(1), g, c));
  return out;
}

namespace {

enum class Pick { first, second };

// Join/meet on the common grid: split segments at odd-multiplicity sign
// crossings of the difference, then take the winning bound on each piece.
PiecewiseFn lattice_combine(const PiecewiseFn& f, const PiecewiseFn& g, bool join) {
  require_h_continuous(f, join ? "h_sup2" : "h_inf2");
  require_h_continuous(g, join ? "h_sup2" : "h_inf2");
  auto [rf, rg] = pw_refine(f, g);
  std::vector<Rat> bs;
  std::vector<SegmentFuncs> segs;
  for (size_t i = 0; i < rf.segments().size(); ++i) {
    bs.push_back(rf.breakpoints()[i]);
    const Rat& u = rf.breakpoints()[i];
    const Rat& v = rf.breakpoints()[i + 1];
    const RationalFunc& a = rf.segments()[i].lo;
    const RationalFunc& b = rg.segments()[i].lo;
    RationalFunc d = a - b;
    if (d.is_zero()) {
      segs.push_back(SegmentFuncs(a));
      continue;
    }
    std::vector<Rat> cuts;
    for (const auto& r : rf_roots(d, u, v)) {
      if (r.multiplicity % 2 == 0) continue;  // touch, not a crossing
      if (!r.rational)
        fail(errc::non_representable_point,
             "irrational crossing isolated by (" + to_string(r.lo) + ", " + to_string(r.hi) +
                 ")");
      cuts.push_back(r.value);
    }
    Rat lo = u;
    for (size_t k = 0; k <= cuts.size(); ++k) {
      Rat hi = k < cuts.size() ? cuts[k] : v;
      int s = sgn(d(nonzero_sample(d, lo, hi)));
      bool first_wins = join ? s > 0 : s < 0;
      segs.push_back(SegmentFuncs(first_wins ? a : b));
      if (k < cuts.size()) bs.push_back(cuts[k]);
      lo = hi;
    }
  }
  bs.push_back(rf.breakpoints().back());
  std::vector<std::optional<XInterval>> none(bs.size(), std::nullopt);
  return pw_canon(pw_extend_dense(rf.dom_lo(), rf.dom_hi(), bs, none, segs));
}

}  // namespace

PiecewiseFn h_sup2(const PiecewiseFn& f, const PiecewiseFn& g) {
  return lattice_combine(f, g, true);
}

PiecewiseFn h_inf2(const PiecewiseFn& f, const PiecewiseFn& g) {
  return lattice_combine(f, g, false);
}

std::pair<std::vector<PiecewiseFn>, std::vector<PiecewiseFn>> finite_envelopes(
    const std::vector<PiecewiseFn>& fs) {
  if (fs.empty()) throw std::invalid_argument("finite_envelopes: empty list");
  std::vector<PiecewiseFn> phis(fs.size(), fs.back()), psis(fs.size(), fs.back());
  for (size_t k = fs.size() - 1; k-- > 0;) {
    phis[k] = h_inf2(fs[k], phis[k + 1]);
    psis[k] = h_sup2(fs[k], psis[k + 1]);
  }
  return {phis, psis};
}

CauchyResult cauchy_limit(const std::vector<PiecewiseFn>& fs, const std::vector<Rat>& moduli,
                          const Rat& tol) {
  if (fs.empty() || fs.size() != moduli.size())
    throw std::invalid_argument("iterates and moduli must align and be nonempty");
  for (size_t i = 0; i < moduli.size(); ++i) {
    if (sgn(moduli[i]) <= 0 || moduli[i] >= 1)
      throw std::invalid_argument("moduli must lie in (0, 1)");
    if (i > 0 && moduli[i] > moduli[i - 1])
      throw std::invalid_argument("moduli must be nonincreasing");
  }

  for (size_t i = 0; i < fs.size(); ++i)
    for (size_t j = i + 1; j < fs.size(); ++j) {
      Enclosure e = rho(fs[i], fs[j], tol);
      if (ExtReal(moduli[i]) < e.lo)
        fail(errc::modulus_violated, "rho(f" + std::to_string(i) + ", f" + std::to_string(j) +
                                         ") certified above " + to_string(moduli[i]));
    }

  // Envelope pinch 0 <= psi_k - phi_k <= 2 m_k / (1 - m_k), checked whenever
  // the envelopes are representable.
  try {
    auto [phis, psis] = finite_envelopes(fs);
    PiecewiseFn zero = PiecewiseFn::constant(fs.front().dom_lo(), fs.front().dom_hi(), Rat(0));
    for (size_t k = 0; k < fs.size(); ++k) {
      PiecewiseFn gap = h_sub(psis[k], phis[k]);
      Rat cap = 2 * moduli[k] / (1 - moduli[k]);
      PiecewiseFn capfn = PiecewiseFn::constant(fs.front().dom_lo(), fs.front().dom_hi(), cap);
      if (!pw_leq(zero, gap) || !pw_leq(gap, capfn))
        fail(errc::modulus_violated,
             "envelope pinch fails at index " + std::to_string(k));
    }
  } catch (const error& e) {
    if (e.code() != errc::non_representable_point) throw;
  }

  Rat m = moduli.back();
  Rat bound = std::min(Rat(1), Rat(m / (1 - m)));
  return CauchyResult{fs.back(), Enclosure{ExtReal(0), ExtReal(bound), tol}};
}

namespace {

RationalFunc line_through(const Rat& x0, const Rat& y0, const Rat& x1, const Rat& y1) {
  Rat slope = (y1 - y0) / (x1 - x0);
  return RationalFunc::from_poly(Poly::linear(slope, y0 - slope * x0));
}

// Fence pair on the refined grid: corridor [hi of u, lo of l].
struct Corridor {
  const PiecewiseFn& u;
  const PiecewiseFn& l;

  RationalFunc floor_fn(size_t seg) const { return u.segments()[seg].hi; }
  RationalFunc ceil_fn(size_t seg) const { return l.segments()[seg].lo; }
  ExtReal floor_at(size_t i) const { return u.values()[i].hi(); }
  ExtReal ceil_at(size_t i) const { return l.values()[i].lo(); }
};

bool fits_corridor(const RationalFunc& h, const RationalFunc& lo, const RationalFunc& hi,
                   const Rat& a, const Rat& b) {
  return nonneg_on(h - lo, a, b) && nonneg_on(hi - h, a, b);
}

}  // namespace

PiecewiseFn interpose(const PiecewiseFn& u, const PiecewiseFn& l) {
  check_same_domain(u, l);
  auto [ru, rl] = pw_refine(u, l);
  Corridor cor{ru, rl};
  size_t m = ru.breakpoints().size();

  // Certified fence order and a finite corridor at every breakpoint.
  for (size_t i = 0; i < m; ++i) {
    ExtReal lo = cor.floor_at(i), hi = cor.ceil_at(i);
    if (!(lo <= hi) || lo.is_pos_inf() || hi.is_neg_inf())
      fail(errc::sandwich_violated,
           "no finite value fits between the fences at " + to_string(ru.breakpoints()[i]));
  }
  for (size_t i = 0; i + 1 < m; ++i)
    if (!nonneg_on(cor.ceil_fn(i) - cor.floor_fn(i), ru.breakpoints()[i],
                   ru.breakpoints()[i + 1]))
      fail(errc::sandwich_violated, "fences cross on segment " + std::to_string(i));

  // Midline selection on every segment.
  std::vector<RationalFunc> sel(m - 1);
  for (size_t i = 0; i + 1 < m; ++i)
    sel[i] = Rat(1, 2) * (cor.floor_fn(i) + cor.ceil_fn(i));

  struct BridgePlan {
    Rat kl, kr;
    RationalFunc left, right;  // left is unused at the lower endpoint, etc.
    bool has_left = false, has_right = false;
    Rat mid;
  };

  std::vector<std::optional<BridgePlan>> plans(m);
  for (size_t i = 0; i < m; ++i) {
    const Rat& b = ru.breakpoints()[i];
    bool has_left = i > 0, has_right = i + 1 < m;
    ExtReal ll = has_left ? rf_limit(sel[i - 1], b, Side::left) : ExtReal(0);
    ExtReal rr = has_right ? rf_limit(sel[i], b, Side::right) : ExtReal(0);
    ExtReal flo = cor.floor_at(i), fhi = cor.ceil_at(i);

    bool continuous = true;
    ExtReal v(0);
    if (has_left && has_right)
      continuous = ll.is_finite() && ll == rr;
    if (has_left)
      v = ll;
    else
      v = rr;
    continuous = continuous && v.is_finite() && flo <= v && v <= fhi;
    if (continuous) continue;

    // Target value: midpoint of the finite corridor.
    Rat mid(0);
    if (flo.is_finite() && fhi.is_finite())
      mid = (flo.rat() + fhi.rat()) / 2;
    else if (flo.is_finite())
      mid = flo.rat();
    else if (fhi.is_finite())
      mid = fhi.rat();

    Rat len_l = has_left ? Rat(b - ru.breakpoints()[i - 1]) : Rat(0);
    Rat len_r = has_right ? Rat(ru.breakpoints()[i + 1] - b) : Rat(0);
    Rat len = has_left && has_right ? std::min(len_l, len_r) : std::max(len_l, len_r);
    Rat delta = len / 4;
    Rat floor_delta = len / Rat(Int(1) << 20);

    while (true) {
      BridgePlan plan;
      plan.mid = mid;
      plan.kl = b - delta;
      plan.kr = b + delta;
      bool ok = true;
      if (has_left) {
        plan.has_left = true;
        plan.left = line_through(plan.kl, sel[i - 1](plan.kl), b, mid);
        ok = ok && fits_corridor(plan.left, cor.floor_fn(i - 1), cor.ceil_fn(i - 1), plan.kl, b);
      }
      if (has_right) {
        plan.has_right = true;
        plan.right = line_through(b, mid, plan.kr, sel[i](plan.kr));
        ok = ok && fits_corridor(plan.right, cor.floor_fn(i), cor.ceil_fn(i), b, plan.kr);
      }
      if (ok) {
        plans[i] = std::move(plan);
        break;
      }
      delta /= 2;
      if (delta < floor_delta)
        fail(errc::bridging_failed, "no admissible link at " + to_string(b));
    }
  }

  // Assemble: selection pieces between bridge zones, links inside them.
  std::vector<Rat> bs;
  std::vector<SegmentFuncs> segs;
  bs.push_back(ru.breakpoints().front());
  if (plans[0]) {
    segs.push_back(SegmentFuncs(plans[0]->right));
    bs.push_back(plans[0]->kr);
  }
  for (size_t i = 0; i + 1 < m; ++i) {
    segs.push_back(SegmentFuncs(sel[i]));
    size_t j = i + 1;
    const Rat& b = ru.breakpoints()[j];
    if (!plans[j]) {
      bs.push_back(b);
      continue;
    }
    bs.push_back(plans[j]->kl);
    segs.push_back(SegmentFuncs(plans[j]->left));
    bs.push_back(b);
    if (plans[j]->has_right) {
      segs.push_back(SegmentFuncs(plans[j]->right));
      bs.push_back(plans[j]->kr);
    }
  }
  if (bs.back() != ru.breakpoints().back()) bs.push_back(ru.breakpoints().back());
  std::vector<std::optional<XInterval>> none(bs.size(), std::nullopt);
  return pw_canon(pw_extend_dense(ru.dom_lo(), ru.dom_hi(), bs, none, segs));
}

PiecewiseFn density_approx(const PiecewiseFn& f, unsigned n) {
  require_h_continuous(f, "density_approx");
  if (n == 0) throw std::invalid_argument("density_approx: n must be positive");
  Rat eps = Rat(1) / Rat(n);

  std::vector<Rat> bs;
  std::vector<std::optional<XInterval>> vals;
  std::vector<SegmentFuncs> segs;
  size_t m = f.breakpoints().size();
  bs.push_back(f.breakpoints().front());
  vals.push_back(f.values().front());

  for (size_t i = 0; i + 1 < m; ++i) {
    segs.push_back(f.segments()[i]);
    size_t j = i + 1;
    const Rat& b = f.breakpoints()[j];
    if (j + 1 == m) {
      bs.push_back(b);
      vals.push_back(f.values()[j]);
      break;
    }
    const XInterval& val = f.values()[j];
    bool retained = val.touches_infinity() || width(val) >= ExtReal(eps);
    if (retained || val.is_point()) {
      bs.push_back(b);
      vals.push_back(val);
      continue;
    }

    // Small jump: bridge through the midpoint of the value.
    Rat mid = (val.lo().rat() + val.hi().rat()) / 2;
    const RationalFunc& phi_l = f.segments()[i].lo;
    const RationalFunc& phi_r = f.segments()[j].lo;
    Rat len = std::min(Rat(b - f.breakpoints()[i]), Rat(f.breakpoints()[j + 1] - b));
    Rat delta = len / 4;
    Rat floor_delta = len / Rat(Int(1) << 20);
    RationalFunc band = RationalFunc::constant(eps);
    while (true) {
      Rat kl = b - delta, kr = b + delta;
      RationalFunc left = line_through(kl, phi_l(kl), b, mid);
      RationalFunc right = line_through(b, mid, kr, phi_r(kr));
      if (fits_corridor(left, phi_l - band, phi_l + band, kl, b) &&
          fits_corridor(right, phi_r - band, phi_r + band, b, kr)) {
        bs.push_back(kl);
        vals.push_back(std::nullopt);
        segs.push_back(SegmentFuncs(left));
        bs.push_back(b);
        vals.push_back(XInterval(ExtReal(mid)));
        segs.push_back(SegmentFuncs(right));
        bs.push_back(kr);
        vals.push_back(std::nullopt);
        break;
      }
      delta /= 2;
      if (delta < floor_delta) fail(errc::bridging_failed, "no admissible link at " + to_string(b));
    }
  }
  return pw_canon(pw_extend_dense(f.dom_lo(), f.dom_hi(), bs, vals, segs));
}

}  // namespace hnf

#include "hnf/rational_func.hpp"

#include <algorithm>
#include <stdexcept>

#include "hnf/errors.hpp"
#include "hnf/interval.hpp"

namespace hnf {

RationalFunc::RationalFunc(Poly num, Poly den) {
  if (den.is_zero()) fail(errc::zero_denominator, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = gcd_poly(num, den);
  if (g.degree() > 0) {
    num = divexact(num, g);
    den = divexact(den, g);
  }
  // Integer coefficients with the pair jointly primitive: the rational
  // content c of num/den is reattached as c = P/Q across the two parts.
  Poly np = primitive_integer(num), dp = primitive_integer(den);
  Rat c = (num.leading() / np.leading()) / (den.leading() / dp.leading());
  num = Poly(Rat(c.get_num())) * np;
  den = Poly(Rat(c.get_den())) * dp;
  if (sgn(den.leading()) < 0) {
    num = -num;
    den = -den;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFunc RationalFunc::constant(const Rat& c) { return RationalFunc(Poly(c), Poly(Rat(1))); }

RationalFunc RationalFunc::x() { return RationalFunc(Poly::x(), Poly(Rat(1))); }

RationalFunc RationalFunc::from_poly(Poly p) { return RationalFunc(std::move(p), Poly(Rat(1))); }

Rat RationalFunc::operator()(const Rat& x) const {
  Rat d = den_(x);
  if (sgn(d) == 0) throw std::logic_error("rational function evaluated at a pole");
  return num_(x) / d;
}

RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
  return RationalFunc(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RationalFunc operator-(const RationalFunc& a) { return RationalFunc(-a.num(), a.den()); }

RationalFunc operator-(const RationalFunc& a, const RationalFunc& b) { return a + (-b); }

RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
  return RationalFunc(a.num() * b.num(), a.den() * b.den());
}

RationalFunc operator*(const Rat& c, const RationalFunc& a) {
  return RationalFunc(Poly(c) * a.num(), a.den());
}

RationalFunc reciprocal(const RationalFunc& f) {
  if (f.is_zero()) fail(errc::zero_reciprocal, "reciprocal of the zero function");
  return RationalFunc(f.den(), f.num());
}

ExtReal rf_limit(const RationalFunc& f, const Rat& p, Side side) {
  if (f.defined_at(p)) return ExtReal(f(p));
  // Canonical form is reduced, so num(p) != 0 at a denominator root.
  int sn = sign_at(f.num(), p);
  int sd = sign_near(f.den(), p, side == Side::right ? +1 : -1);
  return sn * sd > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
}

std::vector<IsolatedRoot> rf_roots(const RationalFunc& f, const Rat& a, const Rat& b) {
  if (f.is_zero()) fail(errc::identically_zero, "roots of the zero function");
  return roots_in(f.num(), a, b);
}

namespace {

XInterval abs_interval(const XInterval& v) {
  if (v.lo().sgn() >= 0) return v;
  if (v.hi().sgn() <= 0) return neg_iv(v);
  return XInterval(ExtReal(0), max(abs(v.lo()), v.hi()));
}

// Range enclosure of f over [lo, hi]; requires a denominator enclosure that
// excludes zero.
std::optional<XInterval> range_enclosure(const RationalFunc& f, const Rat& lo, const Rat& hi) {
  XInterval n = eval_interval(f.num(), lo, hi);
  XInterval d = eval_interval(f.den(), lo, hi);
  if (d.contains(ExtReal(0))) return std::nullopt;
  // 1/d for a finite interval of constant sign.
  XInterval dinv(ExtReal(Rat(1) / d.hi().rat()), ExtReal(Rat(1) / d.lo().rat()));
  return mul_iv(n, dinv);
}

struct SupCandidate {
  bool exact;
  Rat value;          // |f| at the candidate when exact
  IsolatedRoot enc;   // isolating interval of the critical point otherwise
  XInterval bound;    // enclosure of |f| over enc when not exact
};

}  // namespace

Enclosure rf_sup_abs(const RationalFunc& f, const Rat& a, const Rat& b, const Rat& tol) {
  if (sgn(tol) <= 0) throw std::invalid_argument("rf_sup_abs: tolerance must be positive");
  if (!(a < b)) throw std::invalid_argument("rf_sup_abs: empty interval");
  if (!f.den().is_constant() && !isolate_roots(squarefree_part(f.den()), a, b).empty())
    fail(errc::interior_pole, "denominator vanishes inside (" + to_string(Rat(a)) + ", " +
                                  to_string(Rat(b)) + ")");

  ExtReal el = abs(rf_limit(f, a, Side::right));
  ExtReal er = abs(rf_limit(f, b, Side::left));
  if (el.is_infinite() || er.is_infinite())
    return Enclosure{ExtReal::pos_inf(), ExtReal::pos_inf(), tol};

  // Interior extrema sit at roots of the derivative numerator.  Rational
  // critical points and the endpoint limits give exact values; irrational
  // critical points contribute interval bounds taken over their enclosures.
  Poly g = derivative(f.num()) * f.den() - f.num() * derivative(f.den());
  Rat best_exact = std::max(el.rat(), er.rat());
  std::vector<SupCandidate> cands;
  if (!g.is_zero()) {
    for (auto& r : roots_in(g, a, b)) {
      if (r.rational) {
        best_exact = std::max(best_exact, Rat(abs(f(r.value))));
        continue;
      }
      SupCandidate c;
      c.exact = false;
      c.enc = r;
      cands.push_back(std::move(c));
    }
  }

  Poly gsq;  // squarefree image used to refine critical enclosures
  if (!cands.empty()) gsq = squarefree_part(g);

  auto tighten = [&](SupCandidate& c) {
    while (!c.enc.rational) {
      if (auto r = range_enclosure(f, c.enc.lo, c.enc.hi)) {
        c.bound = abs_interval(*r);
        return;
      }
      refine_root(gsq, c.enc, (c.enc.hi - c.enc.lo) / 4);
    }
    c.exact = true;
    c.value = abs(f(c.enc.value));
  };
  auto fold_exact = [&]() {
    std::erase_if(cands, [&](const SupCandidate& c) {
      if (c.exact) best_exact = std::max(best_exact, c.value);
      return c.exact;
    });
  };
  for (auto& c : cands) tighten(c);
  fold_exact();

  while (true) {
    ExtReal lo(best_exact), hi(best_exact);
    size_t binding = cands.size();
    for (size_t i = 0; i < cands.size(); ++i) {
      lo = max(lo, cands[i].bound.lo());
      hi = max(hi, cands[i].bound.hi());
      if (binding == cands.size() || cands[binding].bound.hi() < cands[i].bound.hi()) binding = i;
    }
    if (hi.rat() - lo.rat() <= tol) return Enclosure{lo, hi, tol};
    SupCandidate& c = cands[binding];
    refine_root(gsq, c.enc, (c.enc.hi - c.enc.lo) / 4);
    tighten(c);
    fold_exact();
  }
}

namespace {

// One sample point inside every maximal root-free region of (a, b), given
// the sorted, pairwise disjoint enclosures of all roots there.  Enclosures
// are first pulled strictly inside (a, b) and away from the exact roots so
// no sign region is skipped.
std::vector<Rat> gap_samples(const Poly& sq, std::vector<IsolatedRoot> roots, const Rat& a,
                             const Rat& b) {
  for (auto& r : roots) {
    auto touches = [&](const IsolatedRoot& x) {
      if (x.lo == a || x.hi == b) return true;
      for (const auto& s : roots)
        if (s.rational && x.lo <= s.value && s.value <= x.hi) return true;
      return false;
    };
    while (!r.rational && touches(r)) refine_root(sq, r, (r.hi - r.lo) / 4);
  }
  std::sort(roots.begin(), roots.end(),
            [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo < y.lo; });
  std::vector<Rat> xs;
  Rat prev = a;
  for (const auto& r : roots) {
    if (prev < r.lo)
      xs.push_back((prev + r.lo) / 2);
    else
      xs.push_back(prev);  // abutting enclosures meet at a non-root point
    prev = r.hi;
  }
  xs.push_back((prev + b) / 2);
  return xs;
}

}  // namespace

bool nonneg_on(const RationalFunc& f, const Rat& a, const Rat& b) {
  if (f.is_zero()) return true;
  int dsign = sign_near(f.den(), a, +1);  // no interior poles: constant sign
  Poly sq = squarefree_part(f.num());
  for (const Rat& x : gap_samples(sq, isolate_roots(sq, a, b), a, b))
    if (sign_at(f.num(), x) * dsign < 0) return false;
  return true;
}

bool strictly_pos_on(const RationalFunc& f, const Rat& a, const Rat& b) {
  if (f.is_zero()) return false;
  if (!isolate_roots(squarefree_part(f.num()), a, b).empty()) return false;
  return sign_at(f.num(), (a + b) / 2) * sign_near(f.den(), a, +1) > 0;
}

Rat nonzero_sample(const RationalFunc& f, const Rat& a, const Rat& b) {
  if (f.is_zero()) fail(errc::identically_zero, "no nonzero point of the zero function");
  Poly sq = squarefree_part(f.num());
  auto xs = gap_samples(sq, isolate_roots(sq, a, b), a, b);
  return xs.front();
}

std::string to_string(const RationalFunc& f) {
  auto wrap = [](const Poly& p) {
    std::string s = to_string(p);
    bool atom = s.find_first_of("+-*/^ ") == std::string::npos ||
                (s.size() > 1 && s[0] == '-' && s.find_first_of("+-*/^ ", 1) == std::string::npos);
    return atom ? s : "(" + s + ")";
  };
  if (f.is_polynomial()) {
    Rat d = f.den().coeff(0);
    if (d == 1) return to_string(f.num());
    return wrap(f.num()) + "/" + to_string(d);
  }
  return wrap(f.num()) + "/" + wrap(f.den());
}

}  // namespace hnf

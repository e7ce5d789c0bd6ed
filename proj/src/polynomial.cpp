#include "hnf/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hnf/errors.hpp"

namespace hnf {

namespace {
void trim(std::vector<Rat>& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}
}  // namespace

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(c_); }

Poly::Poly(const Rat& constant) {
  if (sgn(constant) != 0) c_.push_back(constant);
}

Poly Poly::x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

Poly Poly::linear(const Rat& a1, const Rat& a0) { return Poly(std::vector<Rat>{a0, a1}); }

Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[i];
}

const Rat& Poly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Poly(std::move(c));
}

Poly operator-(const Poly& a) {
  std::vector<Rat> c = a.coeffs();
  for (auto& q : c) q = -q;
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.coeffs().size() + b.coeffs().size() - 1, Rat(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i)
    for (size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Poly(std::move(c));
}

Poly operator*(const Rat& c, const Poly& a) {
  if (sgn(c) == 0) return Poly();
  std::vector<Rat> v = a.coeffs();
  for (auto& q : v) q *= c;
  return Poly(std::move(v));
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rat> quo(a.degree() - db + 1, Rat(0));
  for (int k = a.degree(); k >= db; --k) {
    Rat q = rem[k] / b.leading();
    if (sgn(q) == 0) continue;
    quo[k - db] = q;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeff(j);
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly divexact(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::logic_error("divexact: nonzero remainder");
  return q;
}

Poly derivative(const Poly& p) {
  if (p.degree() <= 0) return Poly();
  std::vector<Rat> c(p.degree(), Rat(0));
  for (int i = 1; i <= p.degree(); ++i) c[i - 1] = Rat(i) * p.coeff(i);
  return Poly(std::move(c));
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return (Rat(1) / p.leading()) * p;
}

Poly gcd_poly(const Poly& a, const Poly& b) {
  Poly u = a, v = b;
  while (!v.is_zero()) {
    Poly r = divrem(u, v).second;
    u = std::move(v);
    v = monic(r);
  }
  return monic(u);
}

int sign_at(const Poly& p, const Rat& x) { return sgn(p(x)); }

int sign_near(const Poly& p, const Rat& x, int side) {
  if (p.is_zero()) return 0;
  Poly q = p;
  int mult = 0;
  while (sign_at(q, x) == 0) {
    q = divexact(q, Poly::linear(Rat(1), -x));
    ++mult;
  }
  int s = sign_at(q, x);
  if (side < 0 && (mult % 2) == 1) s = -s;
  return s;
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return monic(p);
  return monic(divexact(p, gcd_poly(p, derivative(p))));
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() <= 0) return out;
  // Yun's algorithm over Q, all factors kept monic.
  Poly d = gcd_poly(p, derivative(p));
  Poly b = divexact(p, d);
  Poly c = divexact(derivative(p), d);
  Poly z = c - derivative(b);
  int i = 1;
  while (b.degree() > 0) {
    Poly ai = gcd_poly(b, z);
    if (ai.degree() > 0) out.emplace_back(ai, i);
    b = divexact(b, ai);
    c = divexact(z, ai);
    z = c - derivative(b);
    ++i;
  }
  return out;
}

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  Poly d = derivative(p);
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const Poly& s = chain[chain.size() - 2];
    const Poly& t = chain.back();
    Poly r = divrem(s, t).second;
    if (r.is_zero()) break;
    // Only positive scalings preserve the sign-variation counts.
    chain.push_back(Rat(1) / abs(r.leading()) * -r);
  }
  return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rat& x) {
  int count = 0, prev = 0;
  for (const Poly& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// Distinct roots of squarefree p in (a, b), both endpoints non-roots.
int count_roots(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

void isolate_rec(const Poly& p, const std::vector<Poly>& chain, const Rat& a, const Rat& b,
                 std::vector<IsolatedRoot>& out) {
  int n = count_roots(chain, a, b);
  if (n == 0) return;
  if (n == 1) {
    IsolatedRoot r;
    r.lo = a;
    r.hi = b;
    out.push_back(std::move(r));
    return;
  }
  Rat m = (a + b) / 2;
  if (sign_at(p, m) == 0) {
    IsolatedRoot r;
    r.rational = true;
    r.value = m;
    r.lo = m;
    r.hi = m;
    out.push_back(std::move(r));
    // Exclude the found root so the sub-chains keep nonzero endpoints.
    Poly q = divexact(p, Poly::linear(Rat(1), -m));
    auto sub = sturm_chain(q);
    isolate_rec(q, sub, a, m, out);
    isolate_rec(q, sub, m, b, out);
    return;
  }
  isolate_rec(p, chain, a, m, out);
  isolate_rec(p, chain, m, b, out);
}

}  // namespace

std::vector<IsolatedRoot> isolate_roots(const Poly& p, const Rat& a, const Rat& b) {
  std::vector<IsolatedRoot> out;
  if (p.degree() <= 0) return out;
  if (a >= b) return out;
  Poly q = p;
  // Open interval: endpoint roots are not reported; shed them so Sturm
  // endpoints are clean.
  while (sign_at(q, a) == 0) q = divexact(q, Poly::linear(Rat(1), -a));
  while (sign_at(q, b) == 0) q = divexact(q, Poly::linear(Rat(1), -b));
  if (q.degree() <= 0) return out;
  isolate_rec(q, sturm_chain(q), a, b, out);
  std::sort(out.begin(), out.end(),
            [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo < y.lo; });
  return out;
}

void refine_root(const Poly& p, IsolatedRoot& r, const Rat& max_width) {
  if (r.rational) return;
  // An endpoint may be a different root of p (divided out during isolation);
  // shed such factors so the bisection sign invariant holds.
  Poly q = p;
  while (sign_at(q, r.lo) == 0) q = divexact(q, Poly::linear(Rat(1), -r.lo));
  while (sign_at(q, r.hi) == 0) q = divexact(q, Poly::linear(Rat(1), -r.hi));
  int slo = sign_at(q, r.lo);
  while (r.hi - r.lo >= max_width) {
    Rat m = (r.lo + r.hi) / 2;
    int sm = sign_at(q, m);
    if (sm == 0) {
      r.rational = true;
      r.value = m;
      r.lo = m;
      r.hi = m;
      return;
    }
    if (sm == slo)
      r.lo = m;
    else
      r.hi = m;
  }
}

Rat simplest_rational(const Rat& lo, const Rat& hi) {
  if (hi < lo) throw std::invalid_argument("simplest_rational: empty interval");
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rat(0);
  if (sgn(hi) < 0) return -simplest_rational(-hi, -lo);
  // 0 < lo <= hi: walk the continued fraction of the interval.  Minimality
  // needs the smallest integer whenever one is available.
  Int fl = Int(lo.get_num() / lo.get_den());  // floor for positive rationals
  if (Rat(fl) == lo) return lo;
  if (Rat(Int(fl + 1)) <= hi) return Rat(Int(fl + 1));
  Rat tail = simplest_rational(Rat(1) / (hi - Rat(fl)), Rat(1) / (lo - Rat(fl)));
  return Rat(fl) + Rat(1) / tail;
}

Poly primitive_integer(const Poly& p) {
  if (p.is_zero()) return p;
  Int l(1);
  for (const Rat& c : p.coeffs()) l = lcm(l, c.get_den());
  std::vector<Rat> v = p.coeffs();
  for (auto& c : v) c *= Rat(l);
  Int g(0);
  for (const Rat& c : v) g = gcd(g, c.get_num());
  if (sgn(g) != 0)
    for (auto& c : v) c /= Rat(g);
  return Poly(std::move(v));
}

namespace {

// Decides rationality of the single root captured by enc inside squarefree p.
// A rational root written in lowest terms has denominator dividing the
// leading coefficient of the primitive integer image; once the enclosure is
// narrower than 1/Q^2 it contains at most one such rational.
void decide_rational(const Poly& p, IsolatedRoot& enc) {
  if (enc.rational) return;
  Poly pi = primitive_integer(p);
  Rat q(abs(pi.leading()));
  refine_root(p, enc, Rat(1) / (q * q * 2));
  if (enc.rational) return;
  Rat s = simplest_rational(enc.lo, enc.hi);
  // An endpoint root of p is a neighbour divided out during isolation, not
  // the captured one.
  if (enc.lo < s && s < enc.hi && sgn(p(s)) == 0) {
    enc.rational = true;
    enc.value = s;
    enc.lo = s;
    enc.hi = s;
  }
}

}  // namespace

std::vector<IsolatedRoot> roots_in(const Poly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) fail(errc::identically_zero, "roots of the zero polynomial");
  std::vector<IsolatedRoot> out;
  if (p.degree() <= 0) return out;
  auto factors = squarefree_decomposition(p);
  std::vector<size_t> owner;
  for (size_t fi = 0; fi < factors.size(); ++fi) {
    auto roots = isolate_roots(factors[fi].first, a, b);
    for (auto& r : roots) {
      decide_rational(factors[fi].first, r);
      r.multiplicity = factors[fi].second;
      out.push_back(std::move(r));
      owner.push_back(fi);
    }
  }
  // Factors are pairwise coprime, so all captured roots are distinct and
  // separate under refinement; narrow until the enclosures are disjoint.
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < out.size(); ++i)
      for (size_t j = i + 1; j < out.size(); ++j) {
        IsolatedRoot &x = out[i], &y = out[j];
        if (x.hi < y.lo || y.hi < x.lo) continue;
        if (x.rational && y.rational) continue;  // distinct points
        changed = true;
        if (!x.rational) refine_root(factors[owner[i]].first, x, (x.hi - x.lo) / 4);
        if (!y.rational) refine_root(factors[owner[j]].first, y, (y.hi - y.lo) / 4);
      }
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo < y.lo; });
  return out;
}

XInterval eval_interval(const Poly& p, const Rat& lo, const Rat& hi) {
  XInterval x{ExtReal(lo), ExtReal(hi)};
  XInterval acc{ExtReal(0)};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = add_iv(mul_iv(acc, x), XInterval(ExtReal(*it)));
  return acc;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rat c = p.coeff(i);
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    Rat a = abs(c);
    bool unit = (a == 1);
    if (i == 0 || !unit) os << to_string(a);
    if (i > 0) {
      if (!unit) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace hnf

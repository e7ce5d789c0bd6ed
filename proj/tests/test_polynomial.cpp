#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hnf/errors.hpp"
#include "hnf/polynomial.hpp"

using namespace hnf;

namespace {

std::mt19937_64 rng(7130094u);

Rat rnd_rat(long range, long den) {
  std::uniform_int_distribution<long> num(-range, range), d(1, den);
  Rat v(num(rng), d(rng));
  v.canonicalize();
  return v;
}

Poly lin(const Rat& root) { return Poly::linear(Rat(1), -root); }

}  // namespace

TEST_CASE("construction trims and evaluates") {
  Poly p(std::vector<Rat>{Rat(1), Rat(2), Rat(0), Rat(0)});
  CHECK(p.degree() == 1);
  CHECK(Poly(Rat(0)).is_zero());
  CHECK(Poly().degree() == -1);
  CHECK(Poly::x()(Rat(5, 2)) == Rat(5, 2));
  Poly q = Poly::linear(Rat(2), Rat(-3));
  CHECK(q(Rat(1, 2)) == Rat(-2));
  CHECK(q.coeff(0) == Rat(-3));
  CHECK(q.coeff(7) == Rat(0));
  CHECK(q.leading() == Rat(2));
  CHECK_THROWS_AS(Poly().leading(), std::logic_error);
}

TEST_CASE("ring operations agree with pointwise evaluation") {
  for (int t = 0; t < 200; ++t) {
    std::vector<Rat> ac(4), bc(3);
    for (auto& c : ac) c = rnd_rat(5, 4);
    for (auto& c : bc) c = rnd_rat(5, 4);
    Poly a(ac), b(bc);
    Rat x = rnd_rat(8, 5);
    CHECK((a + b)(x) == a(x) + b(x));
    CHECK((a - b)(x) == a(x) - b(x));
    CHECK((a * b)(x) == a(x) * b(x));
    CHECK((Rat(3, 2) * a)(x) == Rat(3, 2) * a(x));
    CHECK((-a)(x) == -a(x));
  }
}

TEST_CASE("division and gcd") {
  Poly a = lin(Rat(1)) * lin(Rat(-2)) * lin(Rat(1, 2));
  Poly b = lin(Rat(1)) * lin(Rat(3));
  auto [q, r] = divrem(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK(divexact(a, lin(Rat(1))) == lin(Rat(-2)) * lin(Rat(1, 2)));
  CHECK_THROWS_AS(divexact(a, b), std::logic_error);
  CHECK_THROWS_AS(divrem(a, Poly()), std::invalid_argument);

  CHECK(gcd_poly(a, b) == lin(Rat(1)));
  CHECK(gcd_poly(Poly(), b) == monic(b));
  CHECK(gcd_poly(Poly(), Poly()).is_zero());
  // Monic output regardless of scaling.
  CHECK(gcd_poly(Rat(6) * a, Rat(-2, 3) * a) == monic(a));
}

TEST_CASE("derivative and signs") {
  Poly p = Poly(std::vector<Rat>{Rat(1), Rat(-2), Rat(3)});  // 3x^2 - 2x + 1
  CHECK(derivative(p) == Poly::linear(Rat(6), Rat(-2)));
  CHECK(derivative(Poly(Rat(9))).is_zero());

  Poly cube = lin(Rat(0)) * lin(Rat(0)) * lin(Rat(0));  // x^3
  CHECK(sign_at(cube, Rat(0)) == 0);
  CHECK(sign_near(cube, Rat(0), +1) == 1);
  CHECK(sign_near(cube, Rat(0), -1) == -1);
  Poly sq = lin(Rat(1, 3)) * lin(Rat(1, 3));
  CHECK(sign_near(sq, Rat(1, 3), +1) == 1);
  CHECK(sign_near(sq, Rat(1, 3), -1) == 1);
  CHECK(sign_near(sq, Rat(2), +1) == sign_at(sq, Rat(2)));
}

TEST_CASE("squarefree decomposition") {
  Poly p = lin(Rat(1)) * lin(Rat(1)) * lin(Rat(-2));
  auto dec = squarefree_decomposition(p);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].first == lin(Rat(-2)));
  CHECK(dec[0].second == 1);
  CHECK(dec[1].first == lin(Rat(1)));
  CHECK(dec[1].second == 2);
  CHECK(squarefree_part(p) == lin(Rat(1)) * lin(Rat(-2)));
  CHECK(squarefree_decomposition(Poly(Rat(5))).empty());

  // Reassembly identity on random products.
  for (int t = 0; t < 50; ++t) {
    Poly q(Rat(1));
    std::uniform_int_distribution<int> mult(1, 3), nf(1, 3);
    int k = nf(rng);
    for (int i = 0; i < k; ++i) {
      Poly f = lin(rnd_rat(4, 3));
      int m = mult(rng);
      for (int j = 0; j < m; ++j) q = q * f;
    }
    Poly back(Rat(1));
    for (const auto& [f, m] : squarefree_decomposition(q))
      for (int j = 0; j < m; ++j) back = back * f;
    CHECK(monic(back) == monic(q));
  }
}

TEST_CASE("root isolation on squarefree input") {
  Poly p = lin(Rat(-1, 2)) * lin(Rat(1, 4)) * lin(Rat(3, 4));
  auto roots = isolate_roots(p, Rat(-1), Rat(1));
  REQUIRE(roots.size() == 3);
  for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi <= roots[i + 1].lo);
  // Each enclosure brackets its root with nonzero endpoint signs.
  std::vector<Rat> expect = {Rat(-1, 2), Rat(1, 4), Rat(3, 4)};
  for (size_t i = 0; i < 3; ++i) {
    if (roots[i].rational) {
      CHECK(roots[i].value == expect[i]);
    } else {
      CHECK(roots[i].lo < expect[i]);
      CHECK(expect[i] < roots[i].hi);
      CHECK(sign_at(p, roots[i].lo) != 0);
      CHECK(sign_at(p, roots[i].hi) != 0);
    }
  }
  // Open interval: endpoint roots are not reported.
  CHECK(isolate_roots(lin(Rat(1)), Rat(0), Rat(1)).empty());
  CHECK(isolate_roots(p, Rat(0), Rat(1, 4)).empty());
}

TEST_CASE("refine_root narrows or lands") {
  Poly p(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)});  // x^2 - 2
  auto roots = isolate_roots(p, Rat(0), Rat(2));
  REQUIRE(roots.size() == 1);
  IsolatedRoot r = roots[0];
  refine_root(p, r, Rat(1, 1000000000));
  CHECK(!r.rational);
  CHECK(r.hi - r.lo < Rat(1, 1000000000));
  CHECK(r.lo * r.lo < 2);
  CHECK(2 < r.hi * r.hi);
}

TEST_CASE("roots_in decides rationality and multiplicity") {
  Poly p = lin(Rat(1, 3)) * lin(Rat(1, 3)) * Poly(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)});
  auto roots = roots_in(p, Rat(-2), Rat(2));
  REQUIRE(roots.size() == 3);
  CHECK(!roots[0].rational);  // -sqrt(2)
  CHECK(roots[0].multiplicity == 1);
  CHECK(roots[1].rational);
  CHECK(roots[1].value == Rat(1, 3));
  CHECK(roots[1].multiplicity == 2);
  CHECK(!roots[2].rational);  // +sqrt(2)
  // Disjoint enclosures in sorted order.
  CHECK(roots[0].hi < roots[1].lo);
  CHECK(roots[1].hi < roots[2].lo);

  CHECK_THROWS_AS(roots_in(Poly(), Rat(0), Rat(1)), error);
  try {
    roots_in(Poly(), Rat(0), Rat(1));
  } catch (const error& e) {
    CHECK(e.code() == errc::identically_zero);
  }
  CHECK(roots_in(Poly(Rat(3)), Rat(0), Rat(1)).empty());
}

TEST_CASE("random rational roots are recovered exactly") {
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<int> nf(1, 3);
    int k = nf(rng);
    Poly p(Rat(1));
    std::vector<Rat> expect;
    for (int i = 0; i < k; ++i) {
      Rat r = rnd_rat(6, 5);
      if (std::find(expect.begin(), expect.end(), r) != expect.end()) continue;
      expect.push_back(r);
      p = p * lin(r);
    }
    std::sort(expect.begin(), expect.end());
    auto roots = roots_in(p, Rat(-10), Rat(10));
    REQUIRE(roots.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i) {
      CHECK(roots[i].rational);
      CHECK(roots[i].value == expect[i]);
    }
  }
}

TEST_CASE("simplest_rational picks the minimal denominator") {
  CHECK(simplest_rational(Rat(1, 3), Rat(1, 2)) == Rat(1, 2));
  CHECK(simplest_rational(Rat(3, 10), Rat(1, 3)) == Rat(1, 3));
  CHECK(simplest_rational(Rat(-1, 2), Rat(-1, 3)) == Rat(-1, 2));
  CHECK(simplest_rational(Rat(-1), Rat(1)) == Rat(0));
  CHECK(simplest_rational(Rat(2), Rat(3)) == Rat(2));
  CHECK(simplest_rational(Rat(9, 10), Rat(5, 2)) == Rat(1));
  CHECK(simplest_rational(Rat(7, 3), Rat(8, 3)) == Rat(5, 2));
  CHECK(simplest_rational(Rat(5, 7), Rat(5, 7)) == Rat(5, 7));
  CHECK_THROWS_AS(simplest_rational(Rat(1), Rat(0)), std::invalid_argument);

  // Randomized minimality: no rational with a smaller denominator fits.
  auto ceil_int = [](const Rat& q) {
    Int t = q.get_num() / q.get_den();
    if (Rat(t) < q) t += 1;
    return t;
  };
  for (int t = 0; t < 200; ++t) {
    Rat a = rnd_rat(12, 8), b = rnd_rat(12, 8);
    if (b < a) std::swap(a, b);
    Rat s = simplest_rational(a, b);
    CHECK(a <= s);
    CHECK(s <= b);
    for (Int den(1); den < s.get_den(); ++den) {
      Rat candidate(ceil_int(Rat(a * Rat(den))), den);
      candidate.canonicalize();
      CHECK(!(candidate <= b));
    }
  }
}

TEST_CASE("eval_interval encloses the range") {
  Poly p(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)});  // x^2 - 2
  XInterval e = eval_interval(p, Rat(-1), Rat(2));
  // Contains the exact range [-2, 2].
  CHECK(e.lo() <= ExtReal(-2));
  CHECK(ExtReal(2) <= e.hi());
  for (int t = 0; t < 100; ++t) {
    std::vector<Rat> c(4);
    for (auto& q : c) q = rnd_rat(4, 3);
    Poly f(c);
    Rat a = rnd_rat(5, 4), b = rnd_rat(5, 4);
    if (b < a) std::swap(a, b);
    XInterval enc = eval_interval(f, a, b);
    for (int k = 0; k <= 16; ++k) {
      Rat t(k, 16);
      t.canonicalize();
      Rat x = a + (b - a) * t;
      CHECK(enc.contains(ExtReal(f(x))));
    }
  }
}

TEST_CASE("primitive_integer strips content") {
  Poly p = Poly(std::vector<Rat>{Rat(4, 3), Rat(2, 3)});
  Poly pi = primitive_integer(p);
  CHECK(pi == Poly(std::vector<Rat>{Rat(2), Rat(1)}));
  for (int t = 0; t < 100; ++t) {
    std::vector<Rat> c(3);
    for (auto& q : c) q = rnd_rat(9, 7);
    Poly f(c);
    if (f.is_zero()) continue;
    Poly g = primitive_integer(f);
    Int cont(0);
    for (const Rat& q : g.coeffs()) {
      CHECK(q.get_den() == 1);
      cont = gcd(cont, q.get_num());
    }
    CHECK(abs(cont) == 1);
    // Proportional to the input.
    Rat scale = f.leading() / g.leading();
    CHECK(scale * g == f);
  }
}

TEST_CASE("polynomial text") {
  CHECK(to_string(Poly()) == "0");
  CHECK(to_string(Poly::x()) == "x");
  CHECK(to_string(Poly(std::vector<Rat>{Rat(-3), Rat(-16), Rat(-16)})) ==
        "-16*x^2 - 16*x - 3");
  CHECK(to_string(Poly(std::vector<Rat>{Rat(1, 2), Rat(0), Rat(1)})) == "x^2 + 1/2");
}

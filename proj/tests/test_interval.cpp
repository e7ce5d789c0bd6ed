#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hnf/interval.hpp"

using namespace hnf;

namespace {

std::mt19937_64 rng(20260816u);

Rat rnd_rat(long range, long den) {
  std::uniform_int_distribution<long> num(-range, range), d(1, den);
  Rat v(num(rng), d(rng));
  v.canonicalize();
  return v;
}

XInterval rnd_finite() {
  Rat a = rnd_rat(20, 10), b = rnd_rat(20, 10);
  if (b < a) std::swap(a, b);
  return XInterval(ExtReal(a), ExtReal(b));
}

// Extended interval: each endpoint may independently escape to its infinity.
XInterval rnd_extended() {
  XInterval f = rnd_finite();
  std::uniform_int_distribution<int> coin(0, 3);
  ExtReal lo = coin(rng) == 0 ? ExtReal::neg_inf() : f.lo();
  ExtReal hi = coin(rng) == 0 ? ExtReal::pos_inf() : f.hi();
  return XInterval(lo, hi);
}

// Finite member of an extended interval.
ExtReal member(const XInterval& a, int k, int n) {
  Rat lo = a.lo().is_finite() ? a.lo().rat() : Rat(-100);
  Rat hi = a.hi().is_finite() ? a.hi().rat() : Rat(100);
  if (hi < lo) hi = lo;
  Rat t(k, n);
  t.canonicalize();
  return ExtReal(Rat(lo + (hi - lo) * t));
}

}  // namespace

TEST_CASE("extended reals order and arithmetic") {
  ExtReal pinf = ExtReal::pos_inf(), ninf = ExtReal::neg_inf(), zero(0);
  CHECK(ninf < zero);
  CHECK(zero < pinf);
  CHECK(ninf < pinf);
  CHECK(!(pinf < pinf));
  CHECK(pinf <= pinf);
  CHECK(neg(pinf) == ninf);
  CHECK(abs(ninf) == pinf);
  CHECK(min(ninf, zero) == ninf);
  CHECK(max(zero, pinf) == pinf);
  CHECK(ExtReal(Rat(1, 2)).sgn() == 1);
  CHECK(ninf.sgn() == -1);
  CHECK(zero.sgn() == 0);

  CHECK(*add_det(ExtReal(Rat(1, 3)), ExtReal(Rat(1, 6))) == ExtReal(Rat(1, 2)));
  CHECK(*add_det(pinf, ExtReal(5)) == pinf);
  CHECK(!add_det(ninf, pinf).has_value());
  CHECK(!add_det(pinf, ninf).has_value());
  CHECK(*mul_det(ninf, ExtReal(-2)) == pinf);
  CHECK(!mul_det(zero, pinf).has_value());
  CHECK(!mul_det(ninf, zero).has_value());

  CHECK(to_string(pinf) == "inf");
  CHECK(to_string(ninf) == "-inf");
  CHECK(to_string(ExtReal(Rat(-7, 3))) == "-7/3");
}

TEST_CASE("make_rat canonicalizes and rejects zero denominators") {
  CHECK(make_rat(Int(2), Int(-4)) == Rat(-1, 2));
  CHECK_THROWS(make_rat(Int(1), Int(0)));
}

TEST_CASE("interval constructor enforces endpoint order") {
  CHECK_THROWS_AS(XInterval(ExtReal(1), ExtReal(0)), std::invalid_argument);
  XInterval p(ExtReal::pos_inf());
  CHECK(p.is_point());
  CHECK(p.touches_infinity());
  CHECK(width(p) == ExtReal(0));
}

TEST_CASE("infinity ambiguity rules") {
  XInterval pinf(ExtReal::pos_inf()), ninf(ExtReal::neg_inf()), zero;

  // -oo + +oo = [-oo, +oo], both operand orders.
  CHECK(add_iv(ninf, pinf) == XInterval::entire());
  CHECK(add_iv(pinf, ninf) == XInterval::entire());

  // 0 * (+oo) = [0, +oo], 0 * (-oo) = [-oo, 0], both orders.
  CHECK(mul_iv(zero, pinf) == XInterval(ExtReal(0), ExtReal::pos_inf()));
  CHECK(mul_iv(pinf, zero) == XInterval(ExtReal(0), ExtReal::pos_inf()));
  CHECK(mul_iv(zero, ninf) == XInterval(ExtReal::neg_inf(), ExtReal(0)));
  CHECK(mul_iv(ninf, zero) == XInterval(ExtReal::neg_inf(), ExtReal(0)));

  // Determinate infinite arithmetic stays exact.
  CHECK(add_iv(pinf, pinf) == pinf);
  CHECK(mul_iv(ninf, ninf) == pinf);
  CHECK(mul_iv(XInterval(ExtReal(2), ExtReal(3)), pinf) == pinf);
}

TEST_CASE("finite arithmetic formulas") {
  XInterval a(ExtReal(Rat(-1, 2)), ExtReal(Rat(1, 3)));
  XInterval b(ExtReal(2), ExtReal(3));
  CHECK(add_iv(a, b) == XInterval(ExtReal(Rat(3, 2)), ExtReal(Rat(10, 3))));
  CHECK(mul_iv(a, b) == XInterval(ExtReal(Rat(-3, 2)), ExtReal(1)));
  CHECK(neg_iv(a) == XInterval(ExtReal(Rat(-1, 3)), ExtReal(Rat(1, 2))));
  CHECK(a + b == add_iv(a, b));
  CHECK(a * b == mul_iv(a, b));
  CHECK(-a == neg_iv(a));
}

TEST_CASE("Minkowski sampling oracle") {
  const int pairs = 300, samples = 40;
  for (int p = 0; p < pairs; ++p) {
    XInterval a = rnd_extended(), b = rnd_extended();
    XInterval s = add_iv(a, b), m = mul_iv(a, b);
    for (int k = 0; k <= samples; ++k) {
      ExtReal x = member(a, k, samples);
      ExtReal y = member(b, samples - k, samples);
      REQUIRE(s.contains(*add_det(x, y)));
      REQUIRE(m.contains(*mul_det(x, y)));
    }
  }
}

TEST_CASE("finite endpoints attained by endpoint pairs") {
  for (int p = 0; p < 300; ++p) {
    XInterval a = rnd_finite(), b = rnd_finite();
    const Rat al = a.lo().rat(), ah = a.hi().rat();
    const Rat bl = b.lo().rat(), bh = b.hi().rat();
    XInterval s = add_iv(a, b);
    CHECK(s.lo().rat() == al + bl);
    CHECK(s.hi().rat() == ah + bh);
    XInterval m = mul_iv(a, b);
    Rat lo = al * bl, hi = al * bl;
    for (const Rat& q : {Rat(al * bh), Rat(ah * bl), Rat(ah * bh)}) {
      lo = std::min(lo, q);
      hi = std::max(hi, q);
    }
    CHECK(m.lo().rat() == lo);
    CHECK(m.hi().rat() == hi);
  }
}

TEST_CASE("width additivity and product-width inequality") {
  for (int p = 0; p < 1000; ++p) {
    XInterval a = rnd_finite(), b = rnd_finite();
    CHECK(width(add_iv(a, b)) == ExtReal(Rat(width(a).rat() + width(b).rat())));
    Rat lhs = width(mul_iv(a, b)).rat();
    Rat rhs = width(a).rat() * modulus(b).rat() + width(b).rat() * modulus(a).rat();
    CHECK(lhs <= rhs);
  }
}

TEST_CASE("inclusion monotonicity on extended intervals") {
  for (int p = 0; p < 500; ++p) {
    XInterval a = rnd_extended(), b = rnd_extended();
    XInterval a2 = XInterval::hull(a, rnd_extended());
    XInterval b2 = XInterval::hull(b, rnd_extended());
    CHECK(add_iv(a2, b2).contains(add_iv(a, b)));
    CHECK(mul_iv(a2, b2).contains(mul_iv(a, b)));
  }
}

TEST_CASE("commutativity and associativity") {
  for (int p = 0; p < 300; ++p) {
    XInterval a = rnd_finite(), b = rnd_finite(), c = rnd_finite();
    CHECK(add_iv(a, b) == add_iv(b, a));
    CHECK(mul_iv(a, b) == mul_iv(b, a));
    CHECK(add_iv(add_iv(a, b), c) == add_iv(a, add_iv(b, c)));
    CHECK(mul_iv(mul_iv(a, b), c) == mul_iv(a, mul_iv(b, c)));
  }
  // Hull resolution keeps commutativity in the extended cases too.
  for (int p = 0; p < 300; ++p) {
    XInterval a = rnd_extended(), b = rnd_extended();
    CHECK(add_iv(a, b) == add_iv(b, a));
    CHECK(mul_iv(a, b) == mul_iv(b, a));
  }
}

TEST_CASE("width, modulus, scale") {
  CHECK(width(XInterval(ExtReal(0), ExtReal::pos_inf())) == ExtReal::pos_inf());
  CHECK(width(XInterval(ExtReal::neg_inf())) == ExtReal(0));
  CHECK(modulus(XInterval::entire()) == ExtReal::pos_inf());
  CHECK(modulus(XInterval(ExtReal(-3), ExtReal(1))) == ExtReal(3));

  XInterval a(ExtReal(1), ExtReal(3));
  CHECK(scale_iv(Rat(-2), a) == XInterval(ExtReal(-6), ExtReal(-2)));
  CHECK(scale_iv(Rat(0), XInterval::entire()) == XInterval());
  CHECK(scale_iv(Rat(1, 2), XInterval(ExtReal::neg_inf(), ExtReal(4))) ==
        XInterval(ExtReal::neg_inf(), ExtReal(2)));
}

TEST_CASE("interval text") {
  CHECK(to_string(XInterval(ExtReal(Rat(1, 2)), ExtReal(Rat(3, 4)))) == "[1/2,3/4]");
  CHECK(to_string(XInterval::entire()) == "[-inf,inf]");
}

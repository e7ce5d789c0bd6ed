#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "corpus.hpp"
#include "doctest.h"
#include "hnf/errors.hpp"
#include "hnf/piecewise.hpp"

using namespace hnf;

namespace {

errc code_of(void (*thunk)()) {
  try {
    thunk();
  } catch (const error& e) {
    return e.code();
  }
  throw std::logic_error("expected a typed error");
}

// Sign function with the value at 0 replaced.
PiecewiseFn sign_with_value(const XInterval& at_zero) {
  std::vector<Rat> bs = {Rat(-1), Rat(0), Rat(1)};
  std::vector<XInterval> vs = {XInterval(ExtReal(-1)), at_zero, XInterval(ExtReal(1))};
  std::vector<SegmentFuncs> segs = {SegmentFuncs(RationalFunc::constant(Rat(-1))),
                                    SegmentFuncs(RationalFunc::constant(Rat(1)))};
  return PiecewiseFn::build(Rat(-1), Rat(1), bs, vs, segs);
}

}  // namespace

TEST_CASE("build validation") {
  CHECK(code_of([] {
          PiecewiseFn::build(Rat(0), Rat(1), {Rat(0), Rat(1), Rat(1, 2)},
                             std::vector<XInterval>(3), std::vector<SegmentFuncs>(2));
        }) == errc::unsorted_breakpoints);
  CHECK(code_of([] {
          PiecewiseFn::build(Rat(0), Rat(1), {Rat(0)}, std::vector<XInterval>(1),
                             std::vector<SegmentFuncs>(0));
        }) == errc::unsorted_breakpoints);
  CHECK(code_of([] {
          PiecewiseFn::build(Rat(0), Rat(2), {Rat(0), Rat(1)}, std::vector<XInterval>(2),
                             std::vector<SegmentFuncs>(1));
        }) == errc::unsorted_breakpoints);
  CHECK(code_of([] {
          RationalFunc invx(Poly(Rat(1)), Poly::x());
          PiecewiseFn::build(Rat(-1), Rat(1), {Rat(-1), Rat(1)}, std::vector<XInterval>(2),
                             {SegmentFuncs(invx)});
        }) == errc::interior_pole);
  CHECK(code_of([] {
          // Bounds cross: lo = x above hi = 0 on the right half.
          PiecewiseFn::build(Rat(-1), Rat(1), {Rat(-1), Rat(1)}, std::vector<XInterval>(2),
                             {SegmentFuncs(RationalFunc::x(), RationalFunc())});
        }) == errc::segment_order_violation);
  CHECK_THROWS_AS(PiecewiseFn::build(Rat(0), Rat(1), {Rat(0), Rat(1)},
                                     std::vector<XInterval>(1), std::vector<SegmentFuncs>(1)),
                  std::invalid_argument);
}

TEST_CASE("evaluation and limits") {
  PiecewiseFn s = tc::sign_fn();
  CHECK(s(Rat(-1, 2)) == XInterval(ExtReal(-1)));
  CHECK(s(Rat(0)) == XInterval(ExtReal(-1), ExtReal(1)));
  CHECK(s(Rat(1)) == XInterval(ExtReal(1)));
  CHECK(code_of([] { tc::sign_fn()(Rat(2)); }) == errc::out_of_domain);

  CHECK(s.is_breakpoint(Rat(0)));
  CHECK(!s.is_breakpoint(Rat(1, 2)));
  CHECK(s.segment_index(Rat(-1, 2)) == 0);
  CHECK(s.segment_index(Rat(1, 2)) == 1);

  CHECK(s.side_limit(1, Side::left) == XInterval(ExtReal(-1)));
  CHECK(s.side_limit(1, Side::right) == XInterval(ExtReal(1)));
  CHECK(s.limit_hull(1) == XInterval(ExtReal(-1), ExtReal(1)));
  CHECK(s.limit_hull(0) == XInterval(ExtReal(-1)));
  CHECK(s.limit_hull(2) == XInterval(ExtReal(1)));

  PiecewiseFn ix = tc::inv_x();
  CHECK(ix(Rat(0)) == XInterval::entire());
  CHECK(ix(Rat(1, 2)) == XInterval(ExtReal(2)));
  CHECK(ix.side_limit(1, Side::left) == XInterval(ExtReal::neg_inf()));
  CHECK(ix.side_limit(1, Side::right) == XInterval(ExtReal::pos_inf()));
}

TEST_CASE("continuity flags and uniqueness of the minimal element") {
  PiecewiseFn s = tc::sign_fn();
  CHECK(s.flags().s_continuous);
  CHECK(s.flags().quasi_minimal);
  CHECK(s.flags().h_continuous);

  // Strictly larger value: S-continuous but no longer minimal.
  PiecewiseFn wide = sign_with_value(XInterval(ExtReal(-2), ExtReal(1)));
  CHECK(wide.flags().s_continuous);
  CHECK(wide.flags().quasi_minimal);
  CHECK(!wide.flags().h_continuous);

  // Disjoint value: the graph is not closed.
  PiecewiseFn off = sign_with_value(XInterval(ExtReal(5), ExtReal(6)));
  CHECK(!off.flags().s_continuous);

  // A proper segment kills quasi-minimality.
  PiecewiseFn thick = pw_extend_dense(
      Rat(-1), Rat(1), {Rat(-1), Rat(1)},
      std::vector<std::optional<XInterval>>(2, std::nullopt),
      {SegmentFuncs(RationalFunc(), RationalFunc::constant(Rat(1)))});
  CHECK(thick.flags().s_continuous);
  CHECK(!thick.flags().quasi_minimal);
  CHECK(!thick.flags().h_continuous);
}

TEST_CASE("refine and insert preserve evaluation") {
  tc::Gen g(88231u);
  for (int t = 0; t < 25; ++t) {
    PiecewiseFn f = tc::rnd_fn(g), h = tc::rnd_fn(g);
    auto [rf, rh] = pw_refine(f, h);
    CHECK(rf.breakpoints() == rh.breakpoints());
    for (int k = 0; k < 40; ++k) {
      Rat x = tc::rnd_sample(g, {&f, &h});
      CHECK(rf(x) == f(x));
      CHECK(rh(x) == h(x));
    }
    for (const Rat& b : f.breakpoints()) CHECK(rf(b) == f(b));

    Rat p = tc::rnd_sample(g, {&f});
    PiecewiseFn ins = pw_insert(f, p);
    CHECK(ins.is_breakpoint(p));
    CHECK(ins(p) == f(p));
    for (int k = 0; k < 20; ++k) {
      Rat x = tc::rnd_sample(g, {&ins});
      CHECK(ins(x) == f(x));
    }
  }
  CHECK(code_of([] { pw_insert(tc::sign_fn(), Rat(2)); }) == errc::out_of_domain);
}

TEST_CASE("canonical form merges removable breakpoints only") {
  PiecewiseFn x3 = pw_insert(tc::x_fn(), Rat(1, 3));
  CHECK(x3.segment_count() == 2);
  PiecewiseFn c = pw_canon(x3);
  CHECK(c.segment_count() == 1);
  CHECK(pw_equal(x3, tc::x_fn()));

  // Jump, proper value, and pole breakpoints are kept.
  CHECK(pw_canon(tc::sign_fn()).segment_count() == 2);
  CHECK(pw_canon(tc::abs_fn()).segment_count() == 2);
  CHECK(pw_canon(tc::inv_x()).segment_count() == 2);

  // Idempotent.
  tc::Gen g(4417u);
  for (int t = 0; t < 20; ++t) {
    PiecewiseFn f = tc::rnd_fn(g);
    CHECK(pw_equal(pw_canon(f), pw_canon(pw_canon(f))));
    for (int k = 0; k < 20; ++k) {
      Rat xx = tc::rnd_sample(g, {&f});
      CHECK(pw_canon(f)(xx) == f(xx));
    }
  }
}

TEST_CASE("restriction") {
  PiecewiseFn r = pw_restrict(tc::inv_x(), Rat(0), Rat(1));
  CHECK(r.dom_lo() == Rat(0));
  CHECK(r.dom_hi() == Rat(1));
  CHECK(r(Rat(0)) == XInterval(ExtReal::pos_inf()));
  CHECK(r(Rat(1, 2)) == XInterval(ExtReal(2)));

  PiecewiseFn s = pw_restrict(tc::sign_fn(), Rat(-1, 2), Rat(1, 2));
  CHECK(s(Rat(0)) == XInterval(ExtReal(-1), ExtReal(1)));
  CHECK(s(Rat(-1, 2)) == XInterval(ExtReal(-1)));
  CHECK(s.flags().h_continuous);

  CHECK(code_of([] { pw_restrict(tc::sign_fn(), Rat(0), Rat(2)); }) == errc::out_of_domain);
  CHECK(code_of([] { pw_restrict(tc::sign_fn(), Rat(1, 2), Rat(1, 2)); }) ==
        errc::out_of_domain);
}

TEST_CASE("dense extension round trip") {
  tc::Gen g(51515u);
  for (int t = 0; t < 30; ++t) {
    PiecewiseFn f = pw_canon(tc::rnd_fn(g));
    std::vector<std::optional<XInterval>> none(f.breakpoints().size(), std::nullopt);
    PiecewiseFn back =
        pw_extend_dense(f.dom_lo(), f.dom_hi(), f.breakpoints(), none, f.segments());
    CHECK(pw_equal(back, f));
    CHECK(back.flags().h_continuous);
  }

  // Pinned values are kept verbatim.
  PiecewiseFn wide = pw_extend_dense(
      Rat(-1), Rat(1), {Rat(-1), Rat(0), Rat(1)},
      {std::nullopt, XInterval(ExtReal(-2), ExtReal(2)), std::nullopt},
      {SegmentFuncs(RationalFunc::constant(Rat(-1))), SegmentFuncs(RationalFunc::constant(Rat(1)))});
  CHECK(wide(Rat(0)) == XInterval(ExtReal(-2), ExtReal(2)));
  CHECK(!wide.flags().h_continuous);
}

TEST_CASE("pointwise order and containment") {
  PiecewiseFn x = tc::x_fn();
  PiecewiseFn xp1 = pw_extend_dense(
      Rat(-1), Rat(1), {Rat(-1), Rat(1)}, std::vector<std::optional<XInterval>>(2, std::nullopt),
      {SegmentFuncs(RationalFunc::x() + RationalFunc::constant(Rat(1)))});
  CHECK(pw_leq(x, xp1));
  CHECK(!pw_leq(xp1, x));
  CHECK(pw_leq(tc::sign_fn(), tc::plus_part()));

  tc::Gen g(6401u);
  for (int t = 0; t < 15; ++t) {
    PiecewiseFn f = tc::rnd_fn(g), h = tc::rnd_fn(g);
    CHECK(pw_leq(f, f));
    if (pw_leq(f, h) && pw_leq(h, f)) CHECK(pw_equal(f, h));
  }

  PiecewiseFn wide = sign_with_value(XInterval(ExtReal(-2), ExtReal(2)));
  CHECK(pw_within(tc::sign_fn(), wide));
  CHECK(!pw_within(wide, tc::sign_fn()));
}

TEST_CASE("structural sets") {
  SetReport s = pw_sets(tc::sign_fn());
  CHECK(s.w_points == std::vector<Rat>{Rat(0)});
  CHECK(s.w_segments.empty());
  CHECK(s.gamma_points.empty());
  REQUIRE(s.zeros.size() == 1);
  CHECK(s.zeros[0].kind == ZeroPiece::Kind::point);
  CHECK(s.zeros[0].lo == Rat(0));
  CHECK(!s.zeros_have_interior);
  CHECK(s.cozero_dense);

  SetReport p = pw_sets(tc::plus_part());
  CHECK(p.zeros_have_interior);
  CHECK(!p.cozero_dense);
  bool has_segment = false;
  for (const auto& z : p.zeros) has_segment = has_segment || z.kind == ZeroPiece::Kind::segment;
  CHECK(has_segment);

  SetReport ix = pw_sets(tc::inv_x());
  CHECK(ix.gamma_points == std::vector<Rat>{Rat(0)});
  CHECK(ix.w_points == std::vector<Rat>{Rat(0)});

  // Zero run inside a proper segment: [x, x + 1/2] vanishes on [-1/2, 0].
  PiecewiseFn band = pw_extend_dense(
      Rat(-1), Rat(1), {Rat(-1), Rat(1)}, std::vector<std::optional<XInterval>>(2, std::nullopt),
      {SegmentFuncs(RationalFunc::x(), RationalFunc::x() + RationalFunc::constant(Rat(1, 2)))});
  SetReport b = pw_sets(band);
  CHECK(b.zeros_have_interior);
  bool run = false;
  for (const auto& z : b.zeros)
    if (z.kind == ZeroPiece::Kind::segment && z.lo == Rat(-1, 2) && z.hi == Rat(0)) run = true;
  CHECK(run);
  CHECK(b.w_segments == std::vector<size_t>{0});

  // Irrational zero keeps an enclosure: x^2 - 2 vanishes at -sqrt(2) twice... once in domain.
  PiecewiseFn q = PiecewiseFn::from_func(
      Rat(-2), Rat(2), RationalFunc(Poly(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)}), Poly(Rat(1))));
  SetReport qs = pw_sets(q);
  size_t encs = 0;
  for (const auto& z : qs.zeros)
    if (z.kind == ZeroPiece::Kind::enclosure) ++encs;
  CHECK(encs == 2);
  CHECK(qs.cozero_dense);
}

TEST_CASE("width report") {
  WidthReport w = pw_w_eps(tc::sign_fn(), Rat(1));
  CHECK(w.points == std::vector<Rat>{Rat(0)});
  CHECK(w.segments.empty());
  CHECK(pw_w_eps(tc::sign_fn(), Rat(3)).points.empty());

  PiecewiseFn thick = pw_extend_dense(
      Rat(-1), Rat(1), {Rat(-1), Rat(1)}, std::vector<std::optional<XInterval>>(2, std::nullopt),
      {SegmentFuncs(RationalFunc(), RationalFunc::constant(Rat(1)))});
  CHECK(pw_w_eps(thick, Rat(1, 2)).segments == std::vector<size_t>{0});
  CHECK(pw_w_eps(thick, Rat(2)).segments.empty());

  CHECK(code_of([] { pw_w_eps(tc::sign_fn(), Rat(0)); }) == errc::eps_out_of_range);
}

TEST_CASE("domain check") {
  PiecewiseFn a = PiecewiseFn::constant(Rat(0), Rat(1), Rat(1));
  CHECK(code_of([] {
          check_same_domain(PiecewiseFn::constant(Rat(0), Rat(1), Rat(1)), tc::sign_fn());
        }) == errc::domain_mismatch);
  check_same_domain(a, a);
}

#include "hnf/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hnf/dsl.hpp"
#include "hnf/errors.hpp"
#include "hnf/metric.hpp"
#include "hnf/plot.hpp"
#include "hnf/regularize.hpp"
#include "hnf/ring_ops.hpp"

namespace hnf {

namespace {

using nlohmann::json;

// Operands are file paths when a regular file exists, literals otherwise.
PiecewiseFn load_fn(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg, std::ios::binary);
    if (!in) fail(errc::io_error, "cannot open " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad() || ss.fail()) fail(errc::io_error, "cannot read " + arg);
    return parse_fn(ss.str());
  }
  return parse_fn(arg);
}

struct Ctx {
  std::string tol = "1/1000000000000";
  std::string format = "text";
  unsigned samples = 100;
  int decimal = -1;

  NumberStyle style() const { return NumberStyle{decimal}; }
  bool is_json() const { return format == "json"; }
  Rat tol_rat() const {
    Rat t = parse_rat(tol);
    if (sgn(t) <= 0) throw std::invalid_argument("--tol must be positive");
    return t;
  }
};

void add_common(CLI::App* cmd, Ctx& ctx, bool with_tol) {
  cmd->add_option("--format", ctx.format, "report format")
      ->check(CLI::IsMember({"text", "json", "csv", "svg"}));
  cmd->add_option("--decimal", ctx.decimal, "print k-digit decimals ('~' marks rounding)");
  if (with_tol) cmd->add_option("--tol", ctx.tol, "enclosure tolerance (rational)");
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string iv_text(const XInterval& v, const NumberStyle& st) {
  return "[" + fmt_ext(v.lo(), st) + "," + fmt_ext(v.hi(), st) + "]";
}

std::string enc_text(const Enclosure& e, const NumberStyle& st) {
  return "[" + fmt_bound(e.lo, st) + ", " + fmt_bound(e.hi, st) + "]";
}

json enc_json(const Enclosure& e) {
  return json{{"lo", to_string(e.lo)}, {"hi", to_string(e.hi)}, {"tol", to_string(e.tolerance)}};
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void emit_fn(const Ctx& ctx, std::ostream& out, const char* verb, const PiecewiseFn& f) {
  if (ctx.is_json())
    print_json(out, json{{"verb", verb}, {"result", format_fn(f)}});
  else
    out << format_fn(f) << "\n";
}

void emit_bool(const Ctx& ctx, std::ostream& out, const char* verb, bool b) {
  if (ctx.is_json())
    print_json(out, json{{"verb", verb}, {"result", b}});
  else
    out << bool_text(b) << "\n";
}

std::string zero_piece_text(const ZeroPiece& z) {
  switch (z.kind) {
    case ZeroPiece::Kind::point: return "point " + to_string(z.lo);
    case ZeroPiece::Kind::enclosure:
      return "point in (" + to_string(z.lo) + "," + to_string(z.hi) + ")";
    case ZeroPiece::Kind::segment:
      return "segment (" + to_string(z.lo) + "," + to_string(z.hi) + ")";
  }
  return "";
}

const char* zero_piece_kind(const ZeroPiece& z) {
  switch (z.kind) {
    case ZeroPiece::Kind::point: return "point";
    case ZeroPiece::Kind::enclosure: return "enclosure";
    case ZeroPiece::Kind::segment: return "segment";
  }
  return "";
}

template <class T, class F>
std::string join(const std::vector<T>& xs, F&& one) {
  if (xs.empty()) return "none";
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += one(xs[i]);
  }
  return s;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact interval-valued piecewise-rational algebra"};
  app.name("hnf");
  app.require_subcommand(1);

  Ctx ctx;
  std::string f1, f2, at, by, lo_s, hi_s, outpath;
  std::vector<std::string> fns, ps, qs, moduli;
  unsigned depth = 1;

  auto* c_eval = app.add_subcommand("eval", "value of f at a rational point");
  c_eval->add_option("fn", f1, "function (file or literal)")->required();
  c_eval->add_option("--at", at, "evaluation point (rational)")->required();
  add_common(c_eval, ctx, false);
  c_eval->callback([&] {
    PiecewiseFn f = load_fn(f1);
    Rat x = parse_rat(at);
    XInterval v = f(x);
    if (ctx.is_json())
      print_json(out, json{{"verb", "eval"},
                           {"x", to_string(x)},
                           {"value", {{"lo", to_string(v.lo())}, {"hi", to_string(v.hi())}}}});
    else
      out << "f(" << fmt_rat(x, ctx.style()) << ") = " << iv_text(v, ctx.style()) << "\n";
  });

  auto binary_verb = [&](const char* name, const char* help,
                         PiecewiseFn (*op)(const PiecewiseFn&, const PiecewiseFn&)) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("f", f1, "left operand")->required();
    cmd->add_option("g", f2, "right operand")->required();
    add_common(cmd, ctx, false);
    cmd->callback([&, name, op] { emit_fn(ctx, out, name, op(load_fn(f1), load_fn(f2))); });
    return cmd;
  };
  binary_verb("add", "f + g in the dense-extension ring", h_add);
  binary_verb("mul", "f * g in the dense-extension ring", h_mul);
  binary_verb("sub", "f - g in the dense-extension ring", h_sub);
  binary_verb("sup", "pointwise-join envelope of f and g", h_sup2);
  binary_verb("inf", "pointwise-meet envelope of f and g", h_inf2);
  binary_verb("interpose", "continuous function between fences u <= l", interpose);
  binary_verb("witness", "continuous bump inside the cozero set of psi", dense_witness);

  auto unary_verb = [&](const char* name, const char* help, PiecewiseFn (*op)(const PiecewiseFn&)) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("fn", f1, "operand")->required();
    add_common(cmd, ctx, false);
    cmd->callback([&, name, op] { emit_fn(ctx, out, name, op(load_fn(f1))); });
    return cmd;
  };
  unary_verb("neg", "additive inverse", h_neg);
  unary_verb("inv", "multiplicative inverse 1/f", h_inv);
  unary_verb("canon", "canonical form (drop removable breakpoints)", pw_canon);

  auto* c_scale = app.add_subcommand("scale", "c * f for a rational scalar c");
  c_scale->add_option("fn", f1, "operand")->required();
  c_scale->add_option("--by", by, "scalar (rational)")->required();
  add_common(c_scale, ctx, false);
  c_scale->callback([&] { emit_fn(ctx, out, "scale", h_scale(parse_rat(by), load_fn(f1))); });

  auto* c_rho = app.add_subcommand("rho", "metric distance enclosure");
  c_rho->add_option("f", f1, "left operand")->required();
  c_rho->add_option("g", f2, "right operand")->required();
  add_common(c_rho, ctx, true);
  c_rho->callback([&] {
    Enclosure e = rho(load_fn(f1), load_fn(f2), ctx.tol_rat());
    if (ctx.is_json())
      print_json(out, json{{"verb", "rho"}, {"rho", enc_json(e)}});
    else
      out << "rho in " << enc_text(e, ctx.style()) << "\n";
  });

  auto* c_leq = app.add_subcommand("leq", "pointwise interval order f <= g");
  c_leq->add_option("f", f1, "left operand")->required();
  c_leq->add_option("g", f2, "right operand")->required();
  add_common(c_leq, ctx, false);
  c_leq->callback([&] { emit_bool(ctx, out, "leq", pw_leq(load_fn(f1), load_fn(f2))); });

  auto* c_equal = app.add_subcommand("equal", "canonical equality");
  c_equal->add_option("f", f1, "left operand")->required();
  c_equal->add_option("g", f2, "right operand")->required();
  add_common(c_equal, ctx, false);
  c_equal->callback([&] { emit_bool(ctx, out, "equal", pw_equal(load_fn(f1), load_fn(f2))); });

  auto* c_classify = app.add_subcommand("classify", "continuity and ring-membership flags");
  c_classify->add_option("fn", f1, "operand")->required();
  add_common(c_classify, ctx, false);
  c_classify->callback([&] {
    ClassifyReport r = classify(load_fn(f1));
    if (ctx.is_json()) {
      print_json(out, json{{"verb", "classify"},
                           {"h_continuous", r.h_continuous},
                           {"continuous", r.continuous},
                           {"finite", r.finite},
                           {"nearly_finite", r.nearly_finite},
                           {"in_h_nd", r.in_h_nd},
                           {"in_h_sz", r.in_h_sz},
                           {"sz_witness", to_string(r.sz_witness)}});
    } else {
      out << "h_continuous: " << bool_text(r.h_continuous) << "\n";
      out << "continuous: " << bool_text(r.continuous) << "\n";
      out << "finite: " << bool_text(r.finite) << "\n";
      out << "nearly_finite: " << bool_text(r.nearly_finite) << "\n";
      out << "in_h_nd: " << bool_text(r.in_h_nd) << "\n";
      out << "in_h_sz: " << bool_text(r.in_h_sz) << "\n";
      out << "sz_witness: " << to_string(r.sz_witness) << "\n";
    }
  });

  auto* c_sets = app.add_subcommand("sets", "jump, infinity, and zero sets");
  c_sets->add_option("fn", f1, "operand")->required();
  add_common(c_sets, ctx, false);
  c_sets->callback([&] {
    PiecewiseFn f = load_fn(f1);
    SetReport r = pw_sets(f);
    auto seg_bounds = [&](size_t i) {
      return "(" + to_string(f.breakpoints()[i]) + "," + to_string(f.breakpoints()[i + 1]) + ")";
    };
    if (ctx.is_json()) {
      json zs = json::array();
      for (const auto& z : r.zeros)
        zs.push_back(json{{"kind", zero_piece_kind(z)},
                          {"lo", to_string(z.lo)},
                          {"hi", to_string(z.hi)}});
      json wsegs = json::array();
      for (size_t i : r.w_segments)
        wsegs.push_back(json{{"lo", to_string(f.breakpoints()[i])},
                             {"hi", to_string(f.breakpoints()[i + 1])}});
      json wp = json::array(), gp = json::array();
      for (const auto& x : r.w_points) wp.push_back(to_string(x));
      for (const auto& x : r.gamma_points) gp.push_back(to_string(x));
      print_json(out, json{{"verb", "sets"},
                           {"w_points", wp},
                           {"w_segments", wsegs},
                           {"gamma_points", gp},
                           {"zeros", zs},
                           {"zeros_have_interior", r.zeros_have_interior},
                           {"cozero_dense", r.cozero_dense}});
    } else {
      out << "W_points: " << join(r.w_points, [](const Rat& x) { return to_string(x); }) << "\n";
      out << "W_segments: " << join(r.w_segments, seg_bounds) << "\n";
      out << "Gamma_points: " << join(r.gamma_points, [](const Rat& x) { return to_string(x); })
          << "\n";
      out << "zeros: " << join(r.zeros, zero_piece_text) << "\n";
      out << "zeros_have_interior: " << bool_text(r.zeros_have_interior) << "\n";
      out << "cozero_dense: " << bool_text(r.cozero_dense) << "\n";
    }
  });

  auto* c_restrict = app.add_subcommand("restrict", "restriction to a subinterval");
  c_restrict->add_option("fn", f1, "operand")->required();
  c_restrict->add_option("--lo", lo_s, "lower endpoint (rational)")->required();
  c_restrict->add_option("--hi", hi_s, "upper endpoint (rational)")->required();
  add_common(c_restrict, ctx, false);
  c_restrict->callback(
      [&] { emit_fn(ctx, out, "restrict", pw_restrict(load_fn(f1), parse_rat(lo_s), parse_rat(hi_s))); });

  auto* c_extend = app.add_subcommand("extend", "refill breakpoint values from one-sided limits");
  c_extend->add_option("fn", f1, "operand")->required();
  add_common(c_extend, ctx, false);
  c_extend->callback([&] {
    PiecewiseFn f = load_fn(f1);
    std::vector<std::optional<XInterval>> none(f.breakpoints().size());
    emit_fn(ctx, out, "extend",
            pw_extend_dense(f.dom_lo(), f.dom_hi(), f.breakpoints(), none, f.segments()));
  });

  auto* c_quot = app.add_subcommand("quotient", "f as phi/psi with continuous phi, psi");
  c_quot->add_option("fn", f1, "operand")->required();
  add_common(c_quot, ctx, false);
  c_quot->callback([&] {
    auto [phi, psi] = as_quotient(load_fn(f1));
    if (ctx.is_json())
      print_json(out, json{{"verb", "quotient"}, {"phi", format_fn(phi)}, {"psi", format_fn(psi)}});
    else
      out << "phi: " << format_fn(phi) << "\n"
          << "psi: " << format_fn(psi) << "\n";
  });

  auto* c_rephom = app.add_subcommand("rephom", "solve q_i = h * p_i for one h");
  c_rephom->add_option("--p", ps, "ideal generators (repeatable)")->required();
  c_rephom->add_option("--q", qs, "their images (repeatable)")->required();
  add_common(c_rephom, ctx, false);
  c_rephom->callback([&] {
    std::vector<PiecewiseFn> pv, qv;
    for (const auto& s : ps) pv.push_back(load_fn(s));
    for (const auto& s : qs) qv.push_back(load_fn(s));
    emit_fn(ctx, out, "rephom", rep_homomorphism(pv, qv));
  });

  auto* c_env = app.add_subcommand("envelopes", "running inf/sup tails of a list");
  c_env->add_option("fns", fns, "functions, oldest first")->required();
  add_common(c_env, ctx, false);
  c_env->callback([&] {
    std::vector<PiecewiseFn> v;
    for (const auto& s : fns) v.push_back(load_fn(s));
    auto [phis, psis] = finite_envelopes(v);
    if (ctx.is_json()) {
      json jp = json::array(), jq = json::array();
      for (const auto& p : phis) jp.push_back(format_fn(p));
      for (const auto& q : psis) jq.push_back(format_fn(q));
      print_json(out, json{{"verb", "envelopes"}, {"phi", jp}, {"psi", jq}});
    } else {
      for (size_t k = 0; k < phis.size(); ++k) {
        out << "phi[" << k << "]: " << format_fn(phis[k]) << "\n";
        out << "psi[" << k << "]: " << format_fn(psis[k]) << "\n";
      }
    }
  });

  auto* c_limit = app.add_subcommand("limit", "certified limit of a Cauchy list");
  c_limit->add_option("fns", fns, "iterates, oldest first")->required();
  c_limit->add_option("--moduli", moduli, "comma-separated Cauchy moduli")
      ->required()
      ->delimiter(',');
  add_common(c_limit, ctx, true);
  c_limit->callback([&] {
    std::vector<PiecewiseFn> v;
    for (const auto& s : fns) v.push_back(load_fn(s));
    std::vector<Rat> ms;
    for (const auto& s : moduli) ms.push_back(parse_rat(s));
    CauchyResult r = cauchy_limit(v, ms, ctx.tol_rat());
    if (ctx.is_json())
      print_json(out, json{{"verb", "limit"},
                           {"limit", format_fn(r.limit)},
                           {"tail", enc_json(r.tail_bound)}});
    else
      out << "limit: " << format_fn(r.limit) << "\n"
          << "tail in " << enc_text(r.tail_bound, ctx.style()) << "\n";
  });

  auto* c_approx = app.add_subcommand("approx", "within 1/n off the big defects");
  c_approx->add_option("fn", f1, "operand")->required();
  c_approx->add_option("--n", depth, "accuracy parameter (rho <= 1/n)")->required();
  add_common(c_approx, ctx, false);
  c_approx->callback([&] { emit_fn(ctx, out, "approx", density_approx(load_fn(f1), depth)); });

  auto* c_plot = app.add_subcommand("plot", "emit csv samples or an svg rendering");
  c_plot->add_option("fn", f1, "operand")->required();
  c_plot->add_option("out", outpath, "output file path")->required();
  c_plot->add_option("--samples", ctx.samples, "uniform sample count (>= 2)");
  add_common(c_plot, ctx, false);
  c_plot->callback([&] {
    bool svg;
    if (ctx.format == "svg")
      svg = true;
    else if (ctx.format == "csv")
      svg = false;
    else if (ctx.format == "text")
      svg = outpath.size() >= 4 && outpath.substr(outpath.size() - 4) == ".svg";
    else
      throw std::invalid_argument("plot emits csv or svg");
    emit_plot(load_fn(f1), outpath, ctx.samples, svg, ctx.style());
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hnf

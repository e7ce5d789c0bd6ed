#include "hnf/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "hnf/errors.hpp"

namespace hnf {

namespace {

std::vector<Rat> sample_grid(const PiecewiseFn& f, unsigned samples) {
  if (samples < 2) throw std::invalid_argument("plot needs at least 2 samples");
  std::vector<Rat> xs;
  Rat a = f.dom_lo(), b = f.dom_hi();
  Rat step = (b - a) / Rat(samples - 1);
  for (unsigned k = 0; k < samples; ++k) xs.push_back(Rat(a + Rat(k) * step));
  xs.insert(xs.end(), f.breakpoints().begin(), f.breakpoints().end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

void write_plot_csv(const PiecewiseFn& f, std::ostream& os, unsigned samples,
                    const NumberStyle& style) {
  std::vector<Rat> xs = sample_grid(f, samples);
  os << "x,lo,hi\n";
  for (const Rat& x : xs) {
    XInterval v = f(x);
    os << fmt_rat(x, style) << "," << fmt_ext(v.lo(), style) << "," << fmt_ext(v.hi(), style)
       << "\n";
  }
}

void write_plot_svg(const PiecewiseFn& f, std::ostream& os, unsigned samples) {
  const double W = 800, H = 600, ML = 50, MR = 20, MT = 20, MB = 30;
  std::vector<Rat> xs = sample_grid(f, samples);

  double ylo = 0, yhi = 0;
  bool seen = false;
  auto note = [&](const ExtReal& e) {
    if (!e.is_finite()) return;
    double d = e.rat().get_d();
    if (!seen) { ylo = yhi = d; seen = true; }
    ylo = std::min(ylo, d);
    yhi = std::max(yhi, d);
  };
  for (const Rat& x : xs) {
    XInterval v = f(x);
    note(v.lo());
    note(v.hi());
  }
  if (!seen) { ylo = -1; yhi = 1; }
  if (yhi - ylo < 1e-9) { ylo -= 1; yhi += 1; }
  double pad = (yhi - ylo) * 0.05;
  ylo -= pad;
  yhi += pad;

  double xa = f.dom_lo().get_d(), xb = f.dom_hi().get_d();
  auto X = [&](double x) { return ML + (x - xa) / (xb - xa) * (W - ML - MR); };
  auto Y = [&](double y) { return H - MB - (y - ylo) / (yhi - ylo) * (H - MT - MB); };
  auto Yc = [&](const ExtReal& e) {
    if (e.is_pos_inf()) return MT;
    if (e.is_neg_inf()) return H - MB;
    return std::min(H - MB, std::max(MT, Y(e.rat().get_d())));
  };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
        "viewBox=\"0 0 800 600\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  os << "<rect x=\"" << px(ML) << "\" y=\"" << px(MT) << "\" width=\"" << px(W - ML - MR)
     << "\" height=\"" << px(H - MT - MB)
     << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  if (ylo < 0 && 0 < yhi)
    os << "<line x1=\"" << px(ML) << "\" y1=\"" << px(Y(0)) << "\" x2=\"" << px(W - MR)
       << "\" y2=\"" << px(Y(0)) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  if (xa < 0 && 0 < xb)
    os << "<line x1=\"" << px(X(0)) << "\" y1=\"" << px(MT) << "\" x2=\"" << px(X(0))
       << "\" y2=\"" << px(H - MB) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

  // Bound curves, one polyline per segment (two when the bounds differ).
  for (size_t i = 0; i < f.segments().size(); ++i) {
    const Rat& u = f.breakpoints()[i];
    const Rat& v = f.breakpoints()[i + 1];
    bool proper = !(f.segments()[i].lo == f.segments()[i].hi);
    for (int side = 0; side < (proper ? 2 : 1); ++side) {
      const RationalFunc& phi = side ? f.segments()[i].hi : f.segments()[i].lo;
      std::string pts;
      for (const Rat& x : xs) {
        if (x <= u || v <= x) continue;
        double yy = std::min(H - MB, std::max(MT, Y(phi(x).get_d())));
        pts += px(X(x.get_d())) + "," + px(yy) + " ";
      }
      if (pts.empty()) continue;
      pts.pop_back();
      os << "<polyline fill=\"none\" stroke=\"" << (side ? "#d62728" : "#1f77b4")
         << "\" stroke-width=\"1.5\" points=\"" << pts << "\"/>\n";
    }
  }

  // Breakpoint bars and infinity markers.
  for (size_t i = 0; i < f.breakpoints().size(); ++i) {
    const XInterval& val = f.values()[i];
    double x = X(f.breakpoints()[i].get_d());
    if (!val.is_point())
      os << "<line x1=\"" << px(x) << "\" y1=\"" << px(Yc(val.lo())) << "\" x2=\"" << px(x)
         << "\" y2=\"" << px(Yc(val.hi())) << "\" stroke=\"#2ca02c\" stroke-width=\"2.5\"/>\n";
    if (val.hi().is_pos_inf())
      os << "<path d=\"M " << px(x - 5) << "," << px(MT + 10) << " L " << px(x + 5) << ","
         << px(MT + 10) << " L " << px(x) << "," << px(MT) << " Z\" fill=\"#d62728\"/>\n";
    if (val.lo().is_neg_inf())
      os << "<path d=\"M " << px(x - 5) << "," << px(H - MB - 10) << " L " << px(x + 5) << ","
         << px(H - MB - 10) << " L " << px(x) << "," << px(H - MB) << " Z\" fill=\"#d62728\"/>\n";
  }
  os << "</svg>\n";
}

void emit_plot(const PiecewiseFn& f, const std::string& path, unsigned samples, bool svg,
               const NumberStyle& style) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io_error, "cannot open " + path);
  if (svg)
    write_plot_svg(f, out, samples);
  else
    write_plot_csv(f, out, samples, style);
  out.flush();
  if (!out) fail(errc::io_error, "write failed: " + path);
}

}  // namespace hnf

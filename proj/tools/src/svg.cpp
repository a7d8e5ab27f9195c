#include "gqs_cli/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace gqs::cli {
namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kMargin = 30.0;

const char* const kLocalColors[] = {"#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

struct Frame {
  double x0, x1, y0, y1;

  double sx(double x) const { return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin); }
  double sy(double y) const {
    return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin);
  }
};

std::string points(const Frame& f, const std::vector<Vertex>& vs) {
  std::ostringstream os;
  char buf[64];
  for (const Vertex& v : vs) {
    std::snprintf(buf, sizeof buf, "%.3f,%.3f ", f.sx(v.x), f.sy(v.y));
    os << buf;
  }
  std::string s = os.str();
  if (!s.empty()) s.pop_back();
  return s;
}

}  // namespace

std::string render_svg(const GqsSpline& spline, int levels) {
  std::vector<Vertex> curve;
  for (const DyadicRow& r : spline.sample(levels)) curve.push_back({r.x, r.value});
  const ControlPolygon global = scp(spline);

  Frame f{spline.space().a(), spline.space().b(), curve.front().y, curve.front().y};
  const auto extend = [&](const std::vector<Vertex>& vs) {
    for (const Vertex& v : vs) {
      f.y0 = std::min(f.y0, v.y);
      f.y1 = std::max(f.y1, v.y);
    }
  };
  extend(curve);
  extend(global.vertices);
  if (f.y1 - f.y0 < 1e-12) {
    f.y0 -= 1.0;
    f.y1 += 1.0;
  }

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
     << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<g id=\"lcp\" fill=\"none\" stroke-width=\"1\">\n";
  for (std::size_t i = 1; i <= spline.intervals(); ++i) {
    os << "<polyline stroke=\"" << kLocalColors[(i - 1) % 4] << "\" points=\""
       << points(f, lcp(spline, i).vertices) << "\"/>\n";
  }
  os << "</g>\n";
  os << "<polyline id=\"scp\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1\" "
        "stroke-dasharray=\"6 4\" points=\""
     << points(f, global.vertices) << "\"/>\n";
  os << "<polyline id=\"curve\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\""
     << points(f, curve) << "\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace gqs::cli

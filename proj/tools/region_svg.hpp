#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "k3acm/candidates.hpp"

// Picture of the effective cone in the (x, y) plane, D = xh + yA. Doubles are
// used only for the boundary curves; points are placed from integer data and
// colored by the exact effectivity test.

namespace k3acm::cli {

struct RegionOptions {
  int x_min = -4, x_max = 10;
  int y_min = -6, y_max = 6;
  int scale = 40;  // pixels per unit
  int margin = 40;
};

struct RegionSummary {
  std::string svg;
  std::size_t points = 0;
  std::size_t effective = 0;
  std::size_t anti_effective = 0;
  std::size_t neither = 0;
};

namespace detail {

// Branches of x^2 + 3xy + y^2 = 1 (D^2 = 4).
inline double effective_branch(double x) { return (-3.0 * x + std::sqrt(5.0 * x * x + 4.0)) / 2.0; }
inline double anti_effective_branch(double x) { return (-3.0 * x - std::sqrt(5.0 * x * x + 4.0)) / 2.0; }
// 6h - D effective: the effective branch reflected through (3, 0).
inline double residual_branch(double x) {
  const double u = 6.0 - x;
  return (3.0 * u - std::sqrt(5.0 * u * u + 4.0)) / 2.0;
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace detail

inline RegionSummary render_region_svg(const RegionOptions& opt = {}) {
  if (opt.x_min >= opt.x_max || opt.y_min >= opt.y_max || opt.scale <= 0)
    throw UsageError("empty plot window");
  const int width = (opt.x_max - opt.x_min) * opt.scale + 2 * opt.margin;
  const int height = (opt.y_max - opt.y_min) * opt.scale + 2 * opt.margin;
  auto px = [&](double x) { return opt.margin + (x - opt.x_min) * opt.scale; };
  auto py = [&](double y) { return opt.margin + (opt.y_max - y) * opt.scale; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
      << "<title>Effective classes xh+yA on the determinantal quartic</title>\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Grid and axes.
  svg << "<g stroke=\"#eeeeee\" stroke-width=\"1\">\n";
  for (int x = opt.x_min; x <= opt.x_max; ++x)
    svg << "<line x1=\"" << px(x) << "\" y1=\"" << py(opt.y_min) << "\" x2=\"" << px(x) << "\" y2=\"" << py(opt.y_max)
        << "\"/>\n";
  for (int y = opt.y_min; y <= opt.y_max; ++y)
    svg << "<line x1=\"" << px(opt.x_min) << "\" y1=\"" << py(y) << "\" x2=\"" << px(opt.x_max) << "\" y2=\"" << py(y)
        << "\"/>\n";
  svg << "</g>\n<g stroke=\"#555555\" stroke-width=\"1.5\">\n"
      << "<line x1=\"" << px(opt.x_min) << "\" y1=\"" << py(0) << "\" x2=\"" << px(opt.x_max) << "\" y2=\"" << py(0)
      << "\"/>\n"
      << "<line x1=\"" << px(0) << "\" y1=\"" << py(opt.y_min) << "\" x2=\"" << px(0) << "\" y2=\"" << py(opt.y_max)
      << "\"/>\n</g>\n";

  // Boundary curves, clipped to the window by sampling.
  auto curve = [&](double (*f)(double), const char* colour, const char* dash) {
    svg << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\"" << dash << " points=\"";
    const int samples = (opt.x_max - opt.x_min) * 20;
    bool first = true;
    for (int i = 0; i <= samples; ++i) {
      const double x = opt.x_min + (opt.x_max - opt.x_min) * static_cast<double>(i) / samples;
      const double y = std::clamp(f(x), static_cast<double>(opt.y_min), static_cast<double>(opt.y_max));
      svg << (first ? "" : " ") << detail::fmt(px(x)) << "," << detail::fmt(py(y));
      first = false;
    }
    svg << "\"/>\n";
  };
  curve(detail::effective_branch, "#2a9d46", "");
  curve(detail::anti_effective_branch, "#c0392b", "");
  curve(detail::residual_branch, "#2c6fbb", " stroke-dasharray=\"6,4\"");

  // Lattice points.
  RegionSummary summary;
  const auto eff = enumerate_c1_effective();
  const auto noneff = enumerate_c1_noneffective();
  svg << "<g>\n";
  for (int x = opt.x_min; x <= opt.x_max; ++x)
    for (int y = opt.y_min; y <= opt.y_max; ++y) {
      const DivisorClass d{x, y};
      const auto kind = effectivity(d).kind;
      const char* fill = "#9e9e9e";
      switch (kind) {
        case Effectivity::zero: fill = "#000000"; break;
        case Effectivity::effective: fill = "#2a9d46"; ++summary.effective; break;
        case Effectivity::anti_effective: fill = "#c0392b"; ++summary.anti_effective; break;
        case Effectivity::neither: ++summary.neither; break;
      }
      ++summary.points;
      svg << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3.5\" fill=\"" << fill << "\"><title>"
          << to_string(d) << " (" << to_string(kind) << ")</title></circle>\n";
      const char* ring = eff.contains(d) ? "#2c6fbb" : noneff.contains(d) ? "#e67e22" : nullptr;
      if (ring)
        svg << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"7\" fill=\"none\" stroke=\"" << ring
            << "\" stroke-width=\"1.5\"/>\n";
    }
  svg << "</g>\n";

  svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<text x=\"" << opt.margin << "\" y=\"20\">green: effective, red: anti-effective, grey: neither; "
      << "rings: candidate c1 (blue effective, orange non-effective); dashed: boundary of 6h-D effective</text>\n"
      << "<text x=\"" << px(opt.x_max) - 10 << "\" y=\"" << py(0) - 6 << "\">x (h)</text>\n"
      << "<text x=\"" << px(0) + 6 << "\" y=\"" << py(opt.y_max) + 12 << "\">y (A)</text>\n</g>\n";
  svg << "</svg>\n";
  summary.svg = svg.str();
  return summary;
}

}  // namespace k3acm::cli

// Static SVG rendering of a density curve: axes, curve, rug of the
// per-spec means, bandwidth in the caption.
#include <algorithm>
#include <cstdio>
#include <ostream>

#include "dimv/report.hpp"

namespace dimv {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 620.0;
constexpr double kTop = 24.0;
constexpr double kBottom = 360.0;

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

}  // namespace

void write_density_svg(std::ostream& out, const DensityCurve& curve,
                       std::span<const double> rug_means) {
  double x_min = curve.values.front();
  double x_max = curve.values.back();
  double y_max = *std::max_element(curve.densities.begin(),
                                   curve.densities.end());
  if (!(y_max > 0.0)) y_max = 1.0;
  y_max *= 1.05;

  auto sx = [&](double v) {
    return kLeft + (v - x_min) / (x_max - x_min) * (kRight - kLeft);
  };
  auto sy = [&](double d) {
    return kBottom - d / y_max * (kBottom - kTop);
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  out << "  <rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";

  // axes
  out << "  <line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\""
      << kRight << "\" y2=\"" << kBottom
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "  <line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
      << "\" y2=\"" << kBottom << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    double frac = static_cast<double>(i) / kTicks;
    double vx = x_min + frac * (x_max - x_min);
    double px = sx(vx);
    out << "  <line x1=\"" << px << "\" y1=\"" << kBottom << "\" x2=\"" << px
        << "\" y2=\"" << kBottom + 5 << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << px << "\" y=\"" << kBottom + 20
        << "\" font-size=\"11\" text-anchor=\"middle\">" << tick_label(vx)
        << "</text>\n";
    double vy = frac * y_max;
    double py = sy(vy);
    out << "  <line x1=\"" << kLeft - 5 << "\" y1=\"" << py << "\" x2=\""
        << kLeft << "\" y2=\"" << py << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << kLeft - 8 << "\" y=\"" << py + 4
        << "\" font-size=\"11\" text-anchor=\"end\">" << tick_label(vy)
        << "</text>\n";
  }

  out << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" "
         "points=\"";
  for (std::size_t i = 0; i < curve.values.size(); ++i) {
    if (i > 0) out << ' ';
    out << sx(curve.values[i]) << ',' << sy(curve.densities[i]);
  }
  out << "\"/>\n";

  // rug of the per-spec means along the baseline
  for (double v : rug_means) {
    double px = sx(v);
    out << "  <line x1=\"" << px << "\" y1=\"" << kBottom - 8 << "\" x2=\""
        << px << "\" y2=\"" << kBottom
        << "\" stroke=\"#d62728\" stroke-width=\"1\" opacity=\"0.7\"/>\n";
  }

  out << "  <text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kBottom + 42
      << "\" font-size=\"13\" text-anchor=\"middle\">average disruption "
         "score</text>\n";
  out << "  <text x=\"18\" y=\"" << (kTop + kBottom) / 2
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 "
         "18 "
      << (kTop + kBottom) / 2 << ")\">density</text>\n";
  out << "  <text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kBottom + 66
      << "\" font-size=\"12\" text-anchor=\"middle\">Gaussian kernel density "
         "of "
      << rug_means.size() << " specification means, bandwidth = "
      << format_double(curve.bandwidth) << "</text>\n";
  out << "</svg>\n";
}

}  // namespace dimv

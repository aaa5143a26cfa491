#include "dimv/kde.hpp"

#include <algorithm>
#include <cmath>

#include "dimv/errors.hpp"

namespace dimv {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Linear-interpolation quantile over sorted data (numpy default / R type 7).
double quantile_sorted(std::span<const double> sorted, double p) {
  double h = p * static_cast<double>(sorted.size() - 1);
  auto lo = static_cast<std::size_t>(h);
  double frac = h - static_cast<double>(lo);
  if (lo + 1 >= sorted.size()) return sorted[sorted.size() - 1];
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

double silverman_bandwidth(std::span<const double> values) {
  std::size_t n = values.size();
  if (n == 0) throw ConfigError("kde: empty input");
  double dispersion = 0.0;
  if (n >= 2) {
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    double sd = std::sqrt(ss / static_cast<double>(n - 1));

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);

    dispersion = std::min(sd, iqr / 1.34);
  }
  double h = 0.9 * dispersion *
             std::pow(static_cast<double>(n), -0.2);
  if (!(h > 0.0)) h = 1e-6;
  return h;
}

DensityCurve kde(std::span<const double> values,
                 std::optional<double> bandwidth) {
  if (values.empty()) throw ConfigError("kde: empty input");
  for (double v : values) {
    if (!std::isfinite(v)) throw ConfigError("kde: non-finite input value");
  }
  if (bandwidth && !(*bandwidth > 0.0)) {
    throw ConfigError("kde: bandwidth must be positive");
  }
  double h = bandwidth ? *bandwidth : silverman_bandwidth(values);

  auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
  double lo = *min_it - 4.0 * h;
  double hi = *max_it + 4.0 * h;
  double step = (hi - lo) / static_cast<double>(kKdeGridPoints);

  DensityCurve curve;
  curve.bandwidth = h;
  curve.values.resize(kKdeGridPoints);
  curve.densities.resize(kKdeGridPoints);
  double norm = 1.0 /
      (static_cast<double>(values.size()) * h * std::sqrt(kTwoPi));
  for (int i = 0; i < kKdeGridPoints; ++i) {
    double x = lo + static_cast<double>(i) * step;
    double sum = 0.0;
    for (double v : values) {
      double u = (x - v) / h;
      sum += std::exp(-0.5 * u * u);
    }
    curve.values[static_cast<std::size_t>(i)] = x;
    curve.densities[static_cast<std::size_t>(i)] = norm * sum;
  }
  return curve;
}

double trapezoid_integral(std::span<const double> x,
                          std::span<const double> y) {
  double total = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    total += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
  }
  return total;
}

}  // namespace dimv

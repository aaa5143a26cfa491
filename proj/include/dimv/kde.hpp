#pragma once
// Gaussian kernel density estimate over per-specification mean scores.

#include <optional>
#include <span>
#include <vector>

namespace dimv {

inline constexpr int kKdeGridPoints = 512;

struct DensityCurve {
  std::vector<double> values;     // evaluation grid, ascending
  std::vector<double> densities;  // same length as values
  double bandwidth = 0.0;
};

// Silverman's rule: 0.9 * min(sd, IQR/1.34) * n^(-1/5), with the sample
// standard deviation (n-1 denominator) and linear-interpolation quartiles.
// Falls back to 1e-6 when the dispersion estimate is zero (all values
// equal, or a single value).
double silverman_bandwidth(std::span<const double> values);

// Evaluates on kKdeGridPoints points covering [min - 4h, max + 4h] with
// step (hi - lo) / kKdeGridPoints, so the midpoint of the span is always on
// the grid (a single value lands exactly on its density peak). Throws
// ConfigError on empty or non-finite input.
DensityCurve kde(std::span<const double> values,
                 std::optional<double> bandwidth = std::nullopt);

double trapezoid_integral(std::span<const double> x, std::span<const double> y);

}  // namespace dimv

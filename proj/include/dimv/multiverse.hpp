#pragma once
// Specification-grid enumeration, the (focal paper x specification) sweep,
// and aggregation into summaries, extremes, and the specification curve.
//
// Sweep cells are pure and independent; run_sweep fills a preallocated
// matrix from an OpenMP-parallel loop, so results are identical for any
// worker count. run_sweep_serial is the plain-loop reference kept for
// testing and benchmarking against the parallel kernel.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dimv/disruption.hpp"

namespace dimv {

struct SpecGrid {
  std::vector<int> x_values;
  std::vector<std::optional<int>> y_values;  // nullopt = unbounded window
  WindowMode window_mode = WindowMode::PostOnly;
  std::vector<int> z_values;  // minimum cited references of the FP
  int z_cites = 0;
  NfMode nf_mode = NfMode::Complement;
};

// x in {1..5}, y in {3, 5, 10}, z in {1, 5, 10}: 45 cells.
SpecGrid default_grid();

// Cartesian product in deterministic order: x outer, then y, then z.
// Duplicate axis values are collapsed (first occurrence wins); an empty
// axis throws ConfigError.
std::vector<Specification> build_grid(const SpecGrid& axes);

struct ScoreMatrix {
  std::vector<PaperIndex> fps;
  std::vector<Specification> specs;
  std::vector<ScoreOutcome> cells;  // row-major: fps x specs

  const ScoreOutcome& cell(std::size_t fp_i, std::size_t spec_i) const {
    return cells[fp_i * specs.size() + spec_i];
  }
};

// workers = 0 uses the OpenMP default. Validates that every fp is
// registered, has a known year, and appears once, before any computation.
ScoreMatrix run_sweep(const CitationGraph& g, std::span<const PaperIndex> fps,
                      std::span<const Specification> specs, int workers = 0);

ScoreMatrix run_sweep_serial(const CitationGraph& g,
                             std::span<const PaperIndex> fps,
                             std::span<const Specification> specs);

struct SpecSummary {
  Specification spec;
  std::optional<double> mean;  // over Defined cells; absent if none
  std::int64_t n_included = 0;
  std::int64_t n_undefined = 0;
  std::int64_t n_ineligible = 0;
  std::int64_t total_skipped_unknown_year = 0;
};

std::vector<SpecSummary> summarize(const ScoreMatrix& m);

struct Extremes {
  SpecSummary min;
  SpecSummary max;
  bool min_tied = false;  // another spec shares the extreme mean
  bool max_tied = false;
};

// Ties break toward grid order (first wins). Throws ConfigError when no
// summary has a mean.
Extremes extremes(std::span<const SpecSummary> summaries);

struct CurveEntry {
  std::optional<int> rank;  // 1-based; nullopt for specs without a mean
  Specification spec;
  std::optional<double> mean;
  std::int64_t n_included = 0;
};

// Summaries with means sorted ascending (stable in grid order), ranked
// 1..n; mean-less specs appended unranked.
std::vector<CurveEntry> spec_curve(std::span<const SpecSummary> summaries);

}  // namespace dimv

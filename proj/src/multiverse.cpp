#include "dimv/multiverse.hpp"

#include <algorithm>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dimv/errors.hpp"

namespace dimv {

SpecGrid default_grid() {
  SpecGrid g;
  g.x_values = {1, 2, 3, 4, 5};
  g.y_values = {3, 5, 10};
  g.z_values = {1, 5, 10};
  return g;
}

namespace {

template <typename T>
std::vector<T> dedup_keep_order(const std::vector<T>& in) {
  std::vector<T> out;
  for (const T& v : in) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<Specification> build_grid(const SpecGrid& axes) {
  if (axes.x_values.empty()) throw ConfigError("grid: empty x axis");
  if (axes.y_values.empty()) throw ConfigError("grid: empty y axis");
  if (axes.z_values.empty()) throw ConfigError("grid: empty z axis");

  auto xs = dedup_keep_order(axes.x_values);
  auto ys = dedup_keep_order(axes.y_values);
  auto zs = dedup_keep_order(axes.z_values);
  for (int x : xs) {
    if (x < 1) throw ConfigError("grid: x must be >= 1");
  }
  for (const auto& y : ys) {
    if (y && *y < 1) throw ConfigError("grid: y must be >= 1 or unbounded");
  }
  for (int z : zs) {
    if (z < 0) throw ConfigError("grid: z must be >= 0");
  }
  if (axes.z_cites < 0) throw ConfigError("grid: z_cites must be >= 0");

  std::vector<Specification> specs;
  specs.reserve(xs.size() * ys.size() * zs.size());
  for (int x : xs) {
    for (const auto& y : ys) {
      for (int z : zs) {
        Specification s;
        s.x = x;
        s.window = WindowSpec{y, axes.window_mode};
        s.z_refs = z;
        s.z_cites = axes.z_cites;
        s.nf_mode = axes.nf_mode;
        specs.push_back(s);
      }
    }
  }
  return specs;
}

namespace {

void validate_fps(const CitationGraph& g, std::span<const PaperIndex> fps) {
  std::unordered_set<PaperIndex> seen;
  for (PaperIndex fp : fps) {
    const PaperMeta& meta = g.meta(fp);  // throws LookupError if out of range
    if (!meta.pub_year) {
      throw PreconditionError("focal paper '" + meta.id +
                              "' has an unknown publication year");
    }
    if (!seen.insert(fp).second) {
      throw ConfigError("duplicate focal paper '" + meta.id + "'");
    }
  }
}

}  // namespace

ScoreMatrix run_sweep(const CitationGraph& g, std::span<const PaperIndex> fps,
                      std::span<const Specification> specs, int workers) {
  validate_fps(g, fps);

  ScoreMatrix m;
  m.fps.assign(fps.begin(), fps.end());
  m.specs.assign(specs.begin(), specs.end());
  m.cells.resize(fps.size() * specs.size());

  auto n_fps = static_cast<std::int64_t>(fps.size());
  auto n_specs = static_cast<std::int64_t>(specs.size());
#ifdef _OPENMP
  int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for collapse(2) schedule(dynamic, 16) num_threads(threads)
#else
  (void)workers;
#endif
  for (std::int64_t i = 0; i < n_fps; ++i) {
    for (std::int64_t j = 0; j < n_specs; ++j) {
      m.cells[static_cast<std::size_t>(i * n_specs + j)] =
          compute_score(g, m.fps[static_cast<std::size_t>(i)],
                        m.specs[static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

ScoreMatrix run_sweep_serial(const CitationGraph& g,
                             std::span<const PaperIndex> fps,
                             std::span<const Specification> specs) {
  validate_fps(g, fps);

  ScoreMatrix m;
  m.fps.assign(fps.begin(), fps.end());
  m.specs.assign(specs.begin(), specs.end());
  m.cells.reserve(fps.size() * specs.size());
  for (PaperIndex fp : m.fps) {
    for (const Specification& spec : m.specs) {
      m.cells.push_back(compute_score(g, fp, spec));
    }
  }
  return m;
}

std::vector<SpecSummary> summarize(const ScoreMatrix& m) {
  std::vector<SpecSummary> out;
  out.reserve(m.specs.size());
  for (std::size_t j = 0; j < m.specs.size(); ++j) {
    SpecSummary s;
    s.spec = m.specs[j];
    double sum = 0.0;
    for (std::size_t i = 0; i < m.fps.size(); ++i) {
      const ScoreOutcome& cell = m.cell(i, j);
      switch (cell.status) {
        case ScoreStatus::Defined:
          sum += cell.score;
          ++s.n_included;
          break;
        case ScoreStatus::Undefined:
          ++s.n_undefined;
          break;
        case ScoreStatus::Ineligible:
          ++s.n_ineligible;
          break;
      }
      if (cell.counts) {
        s.total_skipped_unknown_year += cell.counts->skipped_unknown_year;
      }
    }
    if (s.n_included > 0) {
      s.mean = sum / static_cast<double>(s.n_included);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Extremes extremes(std::span<const SpecSummary> summaries) {
  const SpecSummary* min = nullptr;
  const SpecSummary* max = nullptr;
  bool min_tied = false;
  bool max_tied = false;
  for (const SpecSummary& s : summaries) {
    if (!s.mean) continue;
    if (!min || *s.mean < *min->mean) {
      min = &s;
      min_tied = false;
    } else if (*s.mean == *min->mean) {
      min_tied = true;
    }
    if (!max || *s.mean > *max->mean) {
      max = &s;
      max_tied = false;
    } else if (*s.mean == *max->mean) {
      max_tied = true;
    }
  }
  if (!min) throw ConfigError("extremes: no summary has a mean");
  return Extremes{*min, *max, min_tied, max_tied};
}

std::vector<CurveEntry> spec_curve(std::span<const SpecSummary> summaries) {
  std::vector<const SpecSummary*> with_mean;
  std::vector<const SpecSummary*> without_mean;
  for (const SpecSummary& s : summaries) {
    (s.mean ? with_mean : without_mean).push_back(&s);
  }
  std::stable_sort(with_mean.begin(), with_mean.end(),
                   [](const SpecSummary* a, const SpecSummary* b) {
                     return *a->mean < *b->mean;
                   });
  std::vector<CurveEntry> curve;
  curve.reserve(summaries.size());
  int rank = 1;
  for (const SpecSummary* s : with_mean) {
    curve.push_back(CurveEntry{rank++, s->spec, s->mean, s->n_included});
  }
  for (const SpecSummary* s : without_mean) {
    curve.push_back(CurveEntry{std::nullopt, s->spec, std::nullopt,
                               s->n_included});
  }
  return curve;
}

}  // namespace dimv

#include "dimv/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "dimv/errors.hpp"

namespace dimv {

namespace {

bool naive_in_window(std::optional<int> year, int fp_year,
                     const WindowSpec& w) {
  if (!year) return false;
  if (w.mode == WindowMode::PostOnly && *year < fp_year) return false;
  if (w.length && *year > fp_year + *w.length) return false;
  return true;
}

bool naive_contains(std::span<const PaperIndex> list, PaperIndex p) {
  for (PaperIndex q : list) {
    if (q == p) return true;
  }
  return false;
}

// Knuth's product method. Adequate for the modest means used here; the
// loop count grows linearly with the mean.
int poisson_draw(SplitMix64& rng, double mean) {
  if (mean <= 0.0) return 0;
  double limit = std::exp(-mean);
  int k = 0;
  double p = 1.0;
  do {
    ++k;
    p *= rng.next_unit();
  } while (p > limit);
  return k - 1;
}

}  // namespace

TriCount naive_classify(const CitationGraph& g, PaperIndex fp,
                        const Specification& spec) {
  const PaperMeta& fp_meta = g.meta(fp);
  if (!fp_meta.pub_year) {
    throw PreconditionError("focal paper '" + fp_meta.id +
                            "' has an unknown publication year");
  }
  int fp_year = *fp_meta.pub_year;
  auto fp_refs = g.cited_references(fp);

  TriCount t;
  auto n = static_cast<PaperIndex>(g.paper_count());
  for (PaperIndex q = 0; q < n; ++q) {
    if (q == fp) continue;
    auto q_refs = g.cited_references(q);
    bool cites_fp = naive_contains(q_refs, fp);
    int coupling = 0;
    for (PaperIndex r : q_refs) {
      if (naive_contains(fp_refs, r)) ++coupling;
    }
    const PaperMeta& meta = g.meta(q);
    if (cites_fp) {
      if (!meta.pub_year) {
        ++t.skipped_unknown_year;
        continue;
      }
      if (!naive_in_window(meta.pub_year, fp_year, spec.window)) continue;
      if (coupling >= spec.x) {
        ++t.n_b;
      } else if (spec.nf_mode == NfMode::Complement || coupling == 0) {
        ++t.n_f;
      }
    } else if (coupling >= 1) {
      if (!meta.pub_year) {
        ++t.skipped_unknown_year;
        continue;
      }
      if (naive_in_window(meta.pub_year, fp_year, spec.window)) ++t.n_r;
    }
  }
  return t;
}

SyntheticCorpus gen_synthetic(const GenParams& params) {
  if (params.n_papers < 1) {
    throw ConfigError("gen: n_papers must be >= 1");
  }
  if (params.year_max < params.year_min + 1) {
    throw ConfigError("gen: year range must span at least 2 years");
  }
  if (params.year_min < kMinYear || params.year_max > kMaxYear) {
    throw ConfigError("gen: year range outside sanity bounds");
  }
  if (params.mean_out_refs < 0.0) {
    throw ConfigError("gen: mean_out_refs must be >= 0");
  }

  auto n = static_cast<std::size_t>(params.n_papers);
  SplitMix64 rng(params.seed);

  auto span = static_cast<std::uint64_t>(params.year_max - params.year_min) + 1;
  std::vector<int> years(n);
  for (std::size_t i = 0; i < n; ++i) {
    years[i] = params.year_min + static_cast<int>(rng.bounded(span));
  }

  // order[] lists papers by (year, index); earlier_count[i] is how many
  // papers precede paper i in publication year, i.e. its citable universe.
  std::vector<PaperIndex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<PaperIndex>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](PaperIndex a, PaperIndex b) {
                     return years[static_cast<std::size_t>(a)] <
                            years[static_cast<std::size_t>(b)];
                   });
  std::vector<std::size_t> earlier_count(n);
  {
    std::size_t pos = 0;
    std::vector<std::size_t> by_year_start(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0 && years[static_cast<std::size_t>(order[k])] !=
                       years[static_cast<std::size_t>(order[k - 1])]) {
        pos = k;
      }
      by_year_start[static_cast<std::size_t>(order[k])] = pos;
    }
    for (std::size_t i = 0; i < n; ++i) earlier_count[i] = by_year_start[i];
  }

  int width = 1;
  for (int v = params.n_papers - 1; v >= 10; v /= 10) ++width;

  CorpusBuilder builder;
  for (std::size_t i = 0; i < n; ++i) {
    std::string id = std::to_string(i);
    if (static_cast<int>(id.size()) < width) {
      id.insert(0, static_cast<std::size_t>(width) - id.size(), '0');
    }
    builder.add_paper("P" + id, years[i]);
  }

  std::vector<PaperIndex> targets;
  for (std::size_t i = 0; i < n; ++i) {
    int k = poisson_draw(rng, params.mean_out_refs);
    std::size_t m = earlier_count[i];
    if (m == 0 || k == 0) continue;
    targets.clear();
    for (int d = 0; d < k; ++d) {
      targets.push_back(order[rng.bounded(m)]);
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (PaperIndex tgt : targets) {
      builder.add_edge(static_cast<PaperIndex>(i), tgt);
    }
  }

  SyntheticCorpus corpus{std::move(builder).build(), {}};
  auto total = static_cast<PaperIndex>(corpus.graph.paper_count());
  for (PaperIndex p = 0; p < total; ++p) {
    if (!corpus.graph.cited_references(p).empty() &&
        !corpus.graph.citing_papers(p).empty()) {
      corpus.fps.push_back(p);
    }
  }
  return corpus;
}

}  // namespace dimv

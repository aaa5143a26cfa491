#include "dimv/disruption.hpp"

#include <algorithm>

#include "dimv/errors.hpp"

namespace dimv {

namespace {

// Window test with the FP year already unwrapped; unknown years never pass.
bool in_window_year(std::optional<int> year, int fp_year,
                    const WindowSpec& w) {
  if (!year) return false;
  int y = *year;
  if (w.mode == WindowMode::PostOnly && y < fp_year) return false;
  if (w.length && y > fp_year + *w.length) return false;
  return true;
}

int sorted_intersection_size(std::span<const PaperIndex> a,
                             std::span<const PaperIndex> b) {
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

int require_known_fp_year(const CitationGraph& g, PaperIndex fp) {
  const PaperMeta& meta = g.meta(fp);
  if (!meta.pub_year) {
    throw PreconditionError("focal paper '" + meta.id +
                            "' has an unknown publication year");
  }
  return *meta.pub_year;
}

}  // namespace

bool in_window(const PaperMeta& meta, const PaperMeta& fp_meta,
               const WindowSpec& window) {
  if (!fp_meta.pub_year) {
    throw PreconditionError("focal paper '" + fp_meta.id +
                            "' has an unknown publication year");
  }
  return in_window_year(meta.pub_year, *fp_meta.pub_year, window);
}

int coupling_strength(const CitationGraph& g,
                      std::span<const PaperIndex> fp_refs, PaperIndex citer) {
  return sorted_intersection_size(g.cited_references(citer), fp_refs);
}

TriCount classify(const CitationGraph& g, PaperIndex fp,
                  const Specification& spec) {
  int fp_year = require_known_fp_year(g, fp);
  auto refs = g.cited_references(fp);
  auto citers = g.citing_papers(fp);

  TriCount t;
  for (PaperIndex c : citers) {
    const PaperMeta& meta = g.meta(c);
    if (!meta.pub_year) {
      ++t.skipped_unknown_year;
      continue;
    }
    if (!in_window_year(meta.pub_year, fp_year, spec.window)) continue;
    int coupling = coupling_strength(g, refs, c);
    if (coupling >= spec.x) {
      ++t.n_b;
    } else if (spec.nf_mode == NfMode::Complement || coupling == 0) {
      ++t.n_f;
    }
  }

  // N_R candidates: papers citing at least one of the FP's references.
  // The FP itself and anything citing the FP are excluded before the
  // window test, so the three sets stay pairwise disjoint.
  std::vector<PaperIndex> candidates;
  for (PaperIndex r : refs) {
    auto citers_of_ref = g.citing_papers(r);
    candidates.insert(candidates.end(), citers_of_ref.begin(),
                      citers_of_ref.end());
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (PaperIndex c : candidates) {
    if (c == fp) continue;
    if (std::binary_search(citers.begin(), citers.end(), c)) continue;
    const PaperMeta& meta = g.meta(c);
    if (!meta.pub_year) {
      ++t.skipped_unknown_year;
      continue;
    }
    if (in_window_year(meta.pub_year, fp_year, spec.window)) ++t.n_r;
  }
  return t;
}

ScoreOutcome di_score(const TriCount& counts) {
  std::int64_t denom = counts.n_f + counts.n_b + counts.n_r;
  if (denom == 0) {
    return {ScoreStatus::Undefined, 0.0, counts};
  }
  double score = static_cast<double>(counts.n_f - counts.n_b) /
                 static_cast<double>(denom);
  return {ScoreStatus::Defined, score, counts};
}

bool eligible(const CitationGraph& g, PaperIndex fp,
              const Specification& spec) {
  return g.cited_references(fp).size() >=
             static_cast<std::size_t>(spec.z_refs) &&
         g.citing_papers(fp).size() >= static_cast<std::size_t>(spec.z_cites);
}

ScoreOutcome compute_score(const CitationGraph& g, PaperIndex fp,
                           const Specification& spec) {
  require_known_fp_year(g, fp);
  if (!eligible(g, fp, spec)) {
    return {ScoreStatus::Ineligible, 0.0, std::nullopt};
  }
  return di_score(classify(g, fp, spec));
}

}  // namespace dimv

#pragma once
// DI1 disruption scoring of a focal paper (FP) under one specification.
//
// The score is (N_F - N_B) / (N_F + N_B + N_R) where, within the citation
// window:
//   N_B = papers citing the FP and at least `x` of its cited references
//   N_F = papers citing the FP with coupling below the threshold
//         (Complement mode: coupling < x; StrictZero mode: coupling == 0,
//          citers with 0 < coupling < x count toward neither set)
//   N_R = papers citing at least one of the FP's cited references without
//         citing the FP itself
//
// Window boundaries are inclusive year arithmetic: PostOnly admits years in
// [fp_year, fp_year + length]; AllPublications drops the lower bound, so
// papers predating the FP can enter N_R. An unbounded length drops the upper
// bound in both modes. Papers with an unknown year never pass a window and
// are tallied in TriCount::skipped_unknown_year.
//
// All operations are pure functions over the immutable graph and safe to
// call concurrently.

#include <cstdint>
#include <optional>
#include <span>

#include "dimv/citation_graph.hpp"

namespace dimv {

enum class WindowMode { PostOnly, AllPublications };

struct WindowSpec {
  std::optional<int> length;  // nullopt = unbounded
  WindowMode mode = WindowMode::PostOnly;
};

enum class NfMode { Complement, StrictZero };

// One multiverse cell.
struct Specification {
  int x = 1;  // coupling threshold, >= 1
  WindowSpec window;
  int z_refs = 0;   // minimum cited references of the FP
  int z_cites = 0;  // minimum citations of the FP (whole graph)
  NfMode nf_mode = NfMode::Complement;
};

struct TriCount {
  std::int64_t n_f = 0;
  std::int64_t n_b = 0;
  std::int64_t n_r = 0;
  std::int64_t skipped_unknown_year = 0;
  bool operator==(const TriCount&) const = default;
};

enum class ScoreStatus { Defined, Undefined, Ineligible };

struct ScoreOutcome {
  ScoreStatus status = ScoreStatus::Undefined;
  double score = 0.0;              // meaningful only when Defined
  std::optional<TriCount> counts;  // absent when Ineligible
};

// requires fp_meta.pub_year to be known (throws PreconditionError otherwise)
bool in_window(const PaperMeta& meta, const PaperMeta& fp_meta,
               const WindowSpec& window);

// |cited_references(citer) ∩ fp_refs|; fp_refs must be sorted ascending.
int coupling_strength(const CitationGraph& g,
                      std::span<const PaperIndex> fp_refs, PaperIndex citer);

TriCount classify(const CitationGraph& g, PaperIndex fp,
                  const Specification& spec);

ScoreOutcome di_score(const TriCount& counts);

// |cited_references(fp)| >= z_refs and |citing_papers(fp)| >= z_cites.
// Citation counts are taken over the whole graph, not window-filtered.
bool eligible(const CitationGraph& g, PaperIndex fp, const Specification& spec);

// Ineligible if the Z filter fails, otherwise di_score(classify(...)) with
// the counts attached. Pure function of (graph, fp, spec).
ScoreOutcome compute_score(const CitationGraph& g, PaperIndex fp,
                           const Specification& spec);

}  // namespace dimv

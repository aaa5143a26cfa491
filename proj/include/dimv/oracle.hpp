#pragma once
// Test support that ships with the library: a deliberately naive reference
// classifier and a seeded synthetic corpus generator (also behind the `gen`
// CLI subcommand).
//
// The generator is specified down to the RNG so that a seed reproduces the
// same corpus everywhere:
//   rng        splitmix64 (Steele et al. 2014 constants)
//   uniform    bounded(n) = next() % n
//   unit       (next() >> 11) * 2^-53
//   poisson    Knuth product-of-uniforms method
// Papers are P0..P{n-1} zero-padded to the width of n-1. Years are drawn
// uniformly over the inclusive range, then each paper draws a Poisson number
// of references uniformly from the papers with a strictly earlier year
// (duplicates collapse), so generated graphs are acyclic with no same-year
// citations.

#include <cstdint>

#include "dimv/citation_graph.hpp"
#include "dimv/disruption.hpp"

namespace dimv {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t bounded(std::uint64_t n) { return next() % n; }

  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Classifies by scanning every paper in the corpus and testing the
// set-membership definitions literally; no transposed index, no sorted
// intersections. Must agree with classify() on all inputs.
TriCount naive_classify(const CitationGraph& g, PaperIndex fp,
                        const Specification& spec);

struct GenParams {
  int n_papers = 0;
  int year_min = 1980;
  int year_max = 2010;  // inclusive; must allow at least 2 distinct years
  double mean_out_refs = 5.0;
  std::uint64_t seed = 1;
};

struct SyntheticCorpus {
  CitationGraph graph;
  // Papers with at least one reference and at least one citer, ascending.
  std::vector<PaperIndex> fps;
};

SyntheticCorpus gen_synthetic(const GenParams& params);

}  // namespace dimv

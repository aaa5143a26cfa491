#include <algorithm>

#include "doctest.h"
#include "dimv/errors.hpp"
#include "dimv/multiverse.hpp"
#include "dimv/oracle.hpp"
#include "property_checks.hpp"
#include "test_helpers.hpp"

using namespace dimv;
using testutil::make_spec;

TEST_CASE("naive classifier on G1 matches the hand enumeration") {
  CitationGraph g = testutil::make_g1();
  CHECK(naive_classify(g, g.require("F"), make_spec(1, 5)) ==
        TriCount{1, 2, 1, 0});
  CHECK(naive_classify(g, g.require("I0"), make_spec(1, 5)) ==
        TriCount{0, 0, 0, 0});
  CHECK(naive_classify(g, g.require("I0"),
                       make_spec(3, std::nullopt,
                                 WindowMode::AllPublications)) ==
        TriCount{0, 0, 0, 0});
}

TEST_CASE("naive classifier on a corpus holding only the fp") {
  CorpusBuilder b;
  b.add_paper("ONLY", 2000);
  CitationGraph g = std::move(b).build();
  CHECK(naive_classify(g, g.require("ONLY"), make_spec(1, 5)) ==
        TriCount{0, 0, 0, 0});
}

TEST_CASE("generator is a deterministic function of the seed") {
  GenParams params;
  params.n_papers = 80;
  params.year_min = 1985;
  params.year_max = 2000;
  params.mean_out_refs = 4.0;
  params.seed = 99;
  SyntheticCorpus a = gen_synthetic(params);
  SyntheticCorpus b = gen_synthetic(params);
  REQUIRE(a.graph.paper_count() == b.graph.paper_count());
  REQUIRE(a.graph.stored_edges() == b.graph.stored_edges());
  CHECK(a.fps == b.fps);
  for (PaperIndex p = 0; p < static_cast<PaperIndex>(a.graph.paper_count());
       ++p) {
    CHECK(a.graph.meta(p).id == b.graph.meta(p).id);
    CHECK(a.graph.meta(p).pub_year == b.graph.meta(p).pub_year);
    auto ra = a.graph.cited_references(p);
    auto rb = b.graph.cited_references(p);
    CHECK(std::equal(ra.begin(), ra.end(), rb.begin(), rb.end()));
  }

  params.seed = 100;
  SyntheticCorpus c = gen_synthetic(params);
  CHECK(c.graph.stored_edges() != a.graph.stored_edges());
}

TEST_CASE("generator only cites strictly earlier years") {
  GenParams params;
  params.n_papers = 120;
  params.year_min = 1990;
  params.year_max = 2010;
  params.mean_out_refs = 5.0;
  params.seed = 7;
  CitationGraph g = gen_synthetic(params).graph;
  for (PaperIndex p = 0; p < static_cast<PaperIndex>(g.paper_count()); ++p) {
    for (PaperIndex r : g.cited_references(p)) {
      CHECK(*g.meta(r).pub_year < *g.meta(p).pub_year);
    }
  }
}

TEST_CASE("generator degenerate cases") {
  GenParams params;
  params.n_papers = 30;
  params.year_min = 1990;
  params.year_max = 2000;
  params.mean_out_refs = 0.0;
  params.seed = 5;
  SyntheticCorpus corpus = gen_synthetic(params);
  CHECK(corpus.graph.stored_edges() == 0);
  CHECK(corpus.fps.empty());

  SUBCASE("invalid parameter combinations are rejected") {
    GenParams bad = params;
    bad.n_papers = 0;
    CHECK_THROWS_AS(gen_synthetic(bad), ConfigError);
    bad = params;
    bad.year_max = bad.year_min;  // needs at least 2 distinct years
    CHECK_THROWS_AS(gen_synthetic(bad), ConfigError);
    bad = params;
    bad.mean_out_refs = -1.0;
    CHECK_THROWS_AS(gen_synthetic(bad), ConfigError);
  }
}

TEST_CASE("fp list contains exactly the papers with refs and citers") {
  GenParams params;
  params.n_papers = 70;
  params.year_min = 1990;
  params.year_max = 2005;
  params.mean_out_refs = 2.0;
  params.seed = 21;
  SyntheticCorpus corpus = gen_synthetic(params);
  const CitationGraph& g = corpus.graph;
  std::vector<PaperIndex> expected;
  for (PaperIndex p = 0; p < static_cast<PaperIndex>(g.paper_count()); ++p) {
    if (!g.cited_references(p).empty() && !g.citing_papers(p).empty()) {
      expected.push_back(p);
    }
  }
  CHECK(corpus.fps == expected);
}

TEST_CASE("classify agrees with the naive oracle on seeded graphs") {
  // A fast slice of the full acceptance run: every grid spec under both
  // window modes and both nf modes.
  std::vector<Specification> specs;
  for (auto mode : {WindowMode::PostOnly, WindowMode::AllPublications}) {
    for (auto nf : {NfMode::Complement, NfMode::StrictZero}) {
      SpecGrid grid = default_grid();
      grid.window_mode = mode;
      grid.nf_mode = nf;
      for (const Specification& s : build_grid(grid)) specs.push_back(s);
    }
  }
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GenParams params;
    params.n_papers = static_cast<int>(10 + (seed * 17) % 41);
    params.year_min = 1995;
    params.year_max = 2005;
    params.mean_out_refs = 2.0 + static_cast<double>(seed % 5);
    params.seed = seed;
    SyntheticCorpus corpus = gen_synthetic(params);
    auto mismatch =
        propcheck::oracle_equivalence(corpus.graph, corpus.fps, specs);
    CHECK_MESSAGE(!mismatch, mismatch.value_or(""));
  }
}

TEST_CASE("oracle equivalence covers unknown-year papers") {
  CitationGraph g = testutil::make_g2();
  std::vector<Specification> specs;
  for (int x : {1, 2}) {
    for (auto mode : {WindowMode::PostOnly, WindowMode::AllPublications}) {
      specs.push_back(make_spec(x, 5, mode));
      specs.push_back(make_spec(x, std::nullopt, mode));
    }
  }
  std::vector<PaperIndex> fps = {g.require("FB"), g.require("S1")};
  auto mismatch = propcheck::oracle_equivalence(g, fps, specs);
  CHECK_MESSAGE(!mismatch, mismatch.value_or(""));
}

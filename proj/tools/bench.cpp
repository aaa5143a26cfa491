// Benchmark: OpenMP sweep kernel vs the plain serial loop, plus the naive
// reference classifier on a reduced slice for scale. Checks that all three
// agree before reporting timings.
#include <chrono>
#include <iostream>
#include <vector>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "dimv/multiverse.hpp"
#include "dimv/oracle.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool matrices_equal(const dimv::ScoreMatrix& a, const dimv::ScoreMatrix& b) {
  if (a.cells.size() != b.cells.size()) return false;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    if (a.cells[i].status != b.cells[i].status) return false;
    if (a.cells[i].score != b.cells[i].score) return false;
    if (a.cells[i].counts != b.cells[i].counts) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dimv sweep benchmark"};
  int n_papers = 100000;
  double mean_refs = 10.0;
  int n_fps = 1000;
  int naive_fps = 20;
  std::uint64_t seed = 7;
  std::vector<int> worker_counts = {1, 2, 4, 8};
  app.add_option("--n-papers", n_papers, "Corpus size");
  app.add_option("--mean-refs", mean_refs, "Mean cited references per paper");
  app.add_option("--n-fps", n_fps, "Focal papers to sweep");
  app.add_option("--naive-fps", naive_fps,
                 "Focal papers for the naive reference pass (0 to skip)");
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--workers", worker_counts, "Worker counts to time")
      ->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  dimv::GenParams params;
  params.n_papers = n_papers;
  params.year_min = 1980;
  params.year_max = 2010;
  params.mean_out_refs = mean_refs;
  params.seed = seed;

  auto t0 = Clock::now();
  dimv::SyntheticCorpus corpus = dimv::gen_synthetic(params);
  double gen_time = seconds_since(t0);

  std::vector<dimv::PaperIndex> fps = corpus.fps;
  if (static_cast<int>(fps.size()) > n_fps) {
    fps.resize(static_cast<std::size_t>(n_fps));
  }
  std::vector<dimv::Specification> specs =
      dimv::build_grid(dimv::default_grid());

  std::cout << "corpus: " << corpus.graph.paper_count() << " papers, "
            << corpus.graph.stored_edges() << " edges ("
            << gen_time << " s to generate)\n";
  std::cout << "sweep: " << fps.size() << " focal papers x " << specs.size()
            << " specs = " << fps.size() * specs.size() << " cells\n";
#ifdef _OPENMP
  std::cout << "openmp: max " << omp_get_max_threads() << " threads\n";
#else
  std::cout << "openmp: not enabled in this build\n";
#endif

  t0 = Clock::now();
  dimv::ScoreMatrix serial = dimv::run_sweep_serial(corpus.graph, fps, specs);
  double serial_time = seconds_since(t0);
  std::cout << "serial reference: " << serial_time << " s\n";

  for (int workers : worker_counts) {
    t0 = Clock::now();
    dimv::ScoreMatrix parallel =
        dimv::run_sweep(corpus.graph, fps, specs, workers);
    double t = seconds_since(t0);
    std::cout << "parallel " << workers << " worker(s): " << t
              << " s, speedup x" << serial_time / t
              << (matrices_equal(serial, parallel) ? "" : "  MISMATCH")
              << "\n";
  }

  if (naive_fps > 0) {
    std::vector<dimv::PaperIndex> small(
        fps.begin(),
        fps.begin() + std::min<std::size_t>(fps.size(),
                                            static_cast<std::size_t>(naive_fps)));
    t0 = Clock::now();
    bool match = true;
    for (dimv::PaperIndex fp : small) {
      for (const dimv::Specification& spec : specs) {
        dimv::TriCount naive = dimv::naive_classify(corpus.graph, fp, spec);
        dimv::TriCount fast = dimv::classify(corpus.graph, fp, spec);
        if (!(naive == fast)) match = false;
      }
    }
    double naive_time = seconds_since(t0);
    std::cout << "naive reference (" << small.size()
              << " fps, includes agreement check): " << naive_time << " s"
              << (match ? "" : "  MISMATCH") << "\n";
  }
  return 0;
}

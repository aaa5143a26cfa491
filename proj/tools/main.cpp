// dimv: disruption-index multiverse CLI.
//   score  one focal paper under a single specification
//   sweep  full (focal papers x specification grid) run with CSV/JSON output
//   plot   kernel density of per-spec means from a summary.csv
//   gen    seeded synthetic corpus in the standard file formats
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dimv/commands.hpp"
#include "dimv/errors.hpp"
#include "dimv/report.hpp"
#include "dimv/version.hpp"

namespace {

std::vector<std::optional<int>> parse_window_lengths(
    const std::vector<std::string>& raw) {
  std::vector<std::optional<int>> out;
  out.reserve(raw.size());
  for (const std::string& s : raw) out.push_back(dimv::parse_window_length(s));
  return out;
}

char parse_delimiter(const std::string& s) {
  if (s == "tab" || s == "\\t") return '\t';
  if (s.size() == 1) return s[0];
  throw dimv::ConfigError("delimiter must be a single character or 'tab'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(dimv::kToolName) +
               " - disruption index multiverse toolkit"};
  app.set_version_flag("--version", std::string(dimv::kToolVersion));
  app.require_subcommand(1);

  std::string metadata_path, edges_path, fps_path, out_dir, fp_id;
  std::string window_mode = "post";
  std::string nf_mode = "complement";
  std::string delimiter = ",";
  int z_cites = 0;
  int workers = 0;

  // score
  auto* score = app.add_subcommand(
      "score", "Score one focal paper under a single specification");
  std::string score_y = "inf";
  int score_x = 1;
  int score_z_refs = 0;
  score->add_option("--metadata", metadata_path, "Paper metadata CSV")
      ->required();
  score->add_option("--edges", edges_path, "Citation edge CSV")->required();
  score->add_option("--fp", fp_id, "Focal paper id")->required();
  score->add_option("--x", score_x, "Coupling threshold (>= 1)");
  score->add_option("--y", score_y, "Citation window length in years, or 'inf'");
  score->add_option("--window", window_mode, "Window mode: post|all");
  score->add_option("--z-refs", score_z_refs, "Minimum cited references");
  score->add_option("--z-cites", z_cites, "Minimum citations");
  score->add_option("--nf-mode", nf_mode, "N_F mode: complement|strict-zero");
  score->add_option("--delimiter", delimiter, "CSV delimiter (default ',')");

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "Run the full specification-grid sweep over a focal paper set");
  std::vector<int> xs = {1, 2, 3, 4, 5};
  std::vector<std::string> ys = {"3", "5", "10"};
  std::vector<int> zs = {1, 5, 10};
  sweep->add_option("--metadata", metadata_path, "Paper metadata CSV")
      ->required();
  sweep->add_option("--edges", edges_path, "Citation edge CSV")->required();
  sweep->add_option("--fps", fps_path, "Focal paper list (one id per line)")
      ->required();
  sweep->add_option("--out", out_dir, "Output directory")->required();
  sweep->add_option("--x", xs, "Coupling thresholds")->delimiter(',');
  sweep->add_option("--y", ys, "Window lengths (integers or 'inf')")
      ->delimiter(',');
  sweep->add_option("--z-refs", zs, "Minimum cited-reference thresholds")
      ->delimiter(',');
  sweep->add_option("--z-cites", z_cites, "Minimum citations (all cells)");
  sweep->add_option("--window", window_mode, "Window mode: post|all");
  sweep->add_option("--nf-mode", nf_mode, "N_F mode: complement|strict-zero");
  sweep->add_option("--workers", workers, "Worker threads (0 = auto)");
  sweep->add_option("--delimiter", delimiter, "CSV delimiter (default ',')");

  // plot
  auto* plot = app.add_subcommand(
      "plot", "Render the kernel density of per-spec mean scores");
  std::string summary_path;
  double bandwidth = 0.0;
  plot->add_option("--summary", summary_path, "summary.csv from a sweep")
      ->required();
  plot->add_option("--out", out_dir, "Output directory")->required();
  auto* bw_opt =
      plot->add_option("--bandwidth", bandwidth, "Bandwidth override");

  // gen
  auto* gen = app.add_subcommand(
      "gen", "Generate a seeded synthetic corpus (metadata, edges, fps)");
  dimv::GenParams params;
  gen->add_option("--n-papers", params.n_papers, "Number of papers")
      ->required();
  gen->add_option("--year-min", params.year_min, "Earliest publication year");
  gen->add_option("--year-max", params.year_max, "Latest publication year");
  gen->add_option("--mean-refs", params.mean_out_refs,
                  "Mean cited references per paper");
  gen->add_option("--seed", params.seed, "RNG seed");
  gen->add_option("--out", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return dimv::kExitBadConfig;
  }

  try {
    if (score->parsed()) {
      dimv::ScoreCommand cmd;
      cmd.corpus = {metadata_path, edges_path, parse_delimiter(delimiter)};
      cmd.fp_id = fp_id;
      cmd.spec.x = score_x;
      cmd.spec.window = {dimv::parse_window_length(score_y),
                         dimv::parse_window_mode(window_mode)};
      cmd.spec.z_refs = score_z_refs;
      cmd.spec.z_cites = z_cites;
      cmd.spec.nf_mode = dimv::parse_nf_mode(nf_mode);
      return dimv::run_score(cmd, std::cout, std::cerr);
    }
    if (sweep->parsed()) {
      dimv::SweepCommand cmd;
      cmd.corpus = {metadata_path, edges_path, parse_delimiter(delimiter)};
      cmd.fps_path = fps_path;
      cmd.out_dir = out_dir;
      cmd.workers = workers;
      cmd.grid.x_values = xs;
      cmd.grid.y_values = parse_window_lengths(ys);
      cmd.grid.z_values = zs;
      cmd.grid.z_cites = z_cites;
      cmd.grid.window_mode = dimv::parse_window_mode(window_mode);
      cmd.grid.nf_mode = dimv::parse_nf_mode(nf_mode);
      return dimv::run_sweep_command(cmd, std::cout, std::cerr);
    }
    if (plot->parsed()) {
      dimv::PlotCommand cmd;
      cmd.summary_path = summary_path;
      cmd.out_dir = out_dir;
      if (bw_opt->count() > 0) cmd.bandwidth = bandwidth;
      return dimv::run_plot(cmd, std::cout, std::cerr);
    }
    dimv::GenCommand cmd;
    cmd.params = params;
    cmd.out_dir = out_dir;
    return dimv::run_gen(cmd, std::cout, std::cerr);
  } catch (const dimv::Error& e) {
    std::cerr << dimv::kToolName << ": error: " << e.what() << "\n";
    return dimv::kExitBadConfig;
  }
}

#pragma once
// Command implementations behind the CLI. Each returns a process exit code:
//   0  success (including ineligible/undefined scores)
//   2  missing/unreadable input
//   3  unknown paper id
//   4  nothing to plot
//   5  invalid configuration
// Keeping them here (not in main) lets the test suites drive the exact
// command paths, output files included.

#include <iosfwd>
#include <optional>
#include <string>

#include "dimv/multiverse.hpp"
#include "dimv/oracle.hpp"

namespace dimv {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 2;
inline constexpr int kExitUnknownId = 3;
inline constexpr int kExitNothingToPlot = 4;
inline constexpr int kExitBadConfig = 5;

struct CorpusPaths {
  std::string metadata;
  std::string edges;
  char delimiter = ',';
};

struct ScoreCommand {
  CorpusPaths corpus;
  std::string fp_id;
  Specification spec;
};

struct SweepCommand {
  CorpusPaths corpus;
  std::string fps_path;
  SpecGrid grid;
  std::string out_dir;
  int workers = 0;  // 0 = auto
};

struct PlotCommand {
  std::string summary_path;
  std::string out_dir;
  std::optional<double> bandwidth;
};

struct GenCommand {
  GenParams params;
  std::string out_dir;
};

int run_score(const ScoreCommand& cmd, std::ostream& out, std::ostream& err);
int run_sweep_command(const SweepCommand& cmd, std::ostream& out,
                      std::ostream& err);
int run_plot(const PlotCommand& cmd, std::ostream& out, std::ostream& err);
int run_gen(const GenCommand& cmd, std::ostream& out, std::ostream& err);

}  // namespace dimv

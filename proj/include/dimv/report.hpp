#pragma once
// Tabular and SVG output for sweep results, plus the parsers used to audit
// emitted files. Doubles are printed with the shortest digit string that
// parses back to the same value, so every CSV round-trips exactly and
// reruns are byte-identical.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "dimv/kde.hpp"
#include "dimv/multiverse.hpp"

namespace dimv {

std::string format_double(double v);

std::string window_mode_name(WindowMode mode);    // "post" / "all"
std::string nf_mode_name(NfMode mode);            // "complement" / "strict-zero"
std::string status_name(ScoreStatus status);      // "defined" / ...
std::string window_length_field(std::optional<int> length);  // int or "inf"

WindowMode parse_window_mode(const std::string& s);
NfMode parse_nf_mode(const std::string& s);
std::optional<int> parse_window_length(const std::string& s);

// scores.csv: one row per (fp, spec) cell.
// header: fp_id,x,y,window_mode,z_refs,z_cites,nf_mode,
//         n_f,n_b,n_r,skipped_unknown_year,status,score
// Count and score fields are empty when the cell carries no counts
// (ineligible) or no defined score.
void write_scores_csv(std::ostream& out, const CitationGraph& g,
                      const ScoreMatrix& m);

struct ScoreRow {
  std::string fp_id;
  Specification spec;
  ScoreOutcome outcome;
};
std::vector<ScoreRow> read_scores_csv(std::istream& in);

// summary.csv header: x,y,window_mode,z_refs,z_cites,nf_mode,mean,
//                     n_included,n_undefined,n_ineligible
void write_summary_csv(std::ostream& out,
                       std::span<const SpecSummary> summaries);
std::vector<SpecSummary> read_summary_csv(std::istream& in);

// curve.csv header: rank,x,y,window_mode,z_refs,z_cites,nf_mode,mean,
//                   n_included
void write_curve_csv(std::ostream& out, std::span<const CurveEntry> curve);
std::vector<CurveEntry> read_curve_csv(std::istream& in);

// kde.csv header: value,density
void write_kde_csv(std::ostream& out, const DensityCurve& curve);
DensityCurve read_kde_csv(std::istream& in);

struct RunRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  const CitationGraph* graph = nullptr;
  std::size_t n_fps = 0;
  std::size_t fp_duplicates_dropped = 0;
  const Extremes* extremes = nullptr;  // null when no mean exists
  bool window_mode_recorded = false;
  WindowMode window_mode = WindowMode::PostOnly;
};
std::string run_record_json(const RunRecord& record);

// Density plot: the curve, axis labels, a rug of the per-spec means, and
// the bandwidth in the caption.
void write_density_svg(std::ostream& out, const DensityCurve& curve,
                       std::span<const double> rug_means);

// Collects (path, content) pairs and commits them all at once via
// temp-file + rename, so a failed run never leaves a partial result behind.
class OutputStage {
 public:
  void add(std::filesystem::path path, std::string content);
  void commit();  // throws IoError; removes its temp files on failure

 private:
  std::vector<std::pair<std::filesystem::path, std::string>> staged_;
};

}  // namespace dimv

#include "dimv/commands.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "dimv/csv.hpp"
#include "dimv/errors.hpp"
#include "dimv/report.hpp"
#include "dimv/version.hpp"

namespace dimv {

namespace {

int exit_code_for(const Error& e) {
  if (dynamic_cast<const LookupError*>(&e)) return kExitUnknownId;
  if (dynamic_cast<const PlotError*>(&e)) return kExitNothingToPlot;
  if (dynamic_cast<const IoError*>(&e) ||
      dynamic_cast<const IngestError*>(&e) ||
      dynamic_cast<const ConflictError*>(&e)) {
    return kExitIo;
  }
  return kExitBadConfig;  // ConfigError, PreconditionError
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << kToolName << ": error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << kToolName << ": error: " << e.what() << "\n";
    return 1;
  }
}

CitationGraph load(const CorpusPaths& paths) {
  return load_corpus(paths.metadata, paths.edges,
                     CsvDialect{paths.delimiter});
}

// One PaperId per line; blank lines skipped, duplicates collapsed.
std::vector<std::string> read_fp_ids(const std::string& path,
                                     std::size_t& duplicates_dropped) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open fps file: " + path);
  std::vector<std::string> ids;
  std::unordered_set<std::string> seen;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (seen.insert(line).second) {
      ids.push_back(line);
    } else {
      ++duplicates_dropped;
    }
  }
  return ids;
}

}  // namespace

int run_score(const ScoreCommand& cmd, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    if (cmd.spec.x < 1) throw ConfigError("x must be >= 1");
    if (cmd.spec.z_refs < 0 || cmd.spec.z_cites < 0) {
      throw ConfigError("z thresholds must be >= 0");
    }
    CitationGraph graph = load(cmd.corpus);
    PaperIndex fp = graph.require(cmd.fp_id);
    ScoreOutcome outcome = compute_score(graph, fp, cmd.spec);

    write_csv_row(out, {"fp_id", "x", "y", "window_mode", "z_refs", "nf_mode",
                        "n_f", "n_b", "n_r", "status", "score"});
    std::vector<std::string> row = {
        cmd.fp_id,
        std::to_string(cmd.spec.x),
        window_length_field(cmd.spec.window.length),
        window_mode_name(cmd.spec.window.mode),
        std::to_string(cmd.spec.z_refs),
        nf_mode_name(cmd.spec.nf_mode),
    };
    if (outcome.counts) {
      row.push_back(std::to_string(outcome.counts->n_f));
      row.push_back(std::to_string(outcome.counts->n_b));
      row.push_back(std::to_string(outcome.counts->n_r));
    } else {
      row.insert(row.end(), 3, "");
    }
    row.push_back(status_name(outcome.status));
    row.push_back(outcome.status == ScoreStatus::Defined
                      ? format_double(outcome.score)
                      : "");
    write_csv_row(out, row);
    return kExitOk;
  });
}

int run_sweep_command(const SweepCommand& cmd, std::ostream& out,
                      std::ostream& err) {
  return guarded(err, [&]() {
    if (cmd.out_dir.empty()) throw ConfigError("sweep: --out is required");
    if (cmd.workers < 0) throw ConfigError("sweep: workers must be >= 0");
    std::vector<Specification> specs = build_grid(cmd.grid);

    CitationGraph graph = load(cmd.corpus);
    std::size_t fp_duplicates = 0;
    std::vector<std::string> fp_ids =
        read_fp_ids(cmd.fps_path, fp_duplicates);
    std::vector<PaperIndex> fps;
    fps.reserve(fp_ids.size());
    for (const std::string& id : fp_ids) {
      PaperIndex fp = graph.require(id);
      if (!graph.meta(fp).pub_year) {
        throw ConfigError("focal paper '" + id +
                          "' has an unknown publication year");
      }
      fps.push_back(fp);
    }

    ScoreMatrix matrix = run_sweep(graph, fps, specs, cmd.workers);
    std::vector<SpecSummary> summaries = summarize(matrix);
    std::vector<CurveEntry> curve = spec_curve(summaries);

    std::optional<Extremes> ext;
    for (const SpecSummary& s : summaries) {
      if (s.mean) {
        ext = extremes(summaries);
        break;
      }
    }

    RunRecord record;
    record.command = "sweep";
    record.config = {
        {"metadata", cmd.corpus.metadata},
        {"edges", cmd.corpus.edges},
        {"fps", cmd.fps_path},
        {"out", cmd.out_dir},
        {"workers", std::to_string(cmd.workers)},
        {"grid_cells", std::to_string(specs.size())},
        {"nf_mode", nf_mode_name(cmd.grid.nf_mode)},
        {"z_cites", std::to_string(cmd.grid.z_cites)},
    };
    record.graph = &graph;
    record.n_fps = fps.size();
    record.fp_duplicates_dropped = fp_duplicates;
    record.extremes = ext ? &*ext : nullptr;
    record.window_mode_recorded = true;
    record.window_mode = cmd.grid.window_mode;

    std::ostringstream scores_s, summary_s, curve_s;
    write_scores_csv(scores_s, graph, matrix);
    write_summary_csv(summary_s, summaries);
    write_curve_csv(curve_s, curve);

    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(cmd.out_dir, ec);
    if (ec) {
      throw IoError("cannot create output directory " + cmd.out_dir + ": " +
                    ec.message());
    }
    fs::path dir(cmd.out_dir);
    OutputStage stage;
    stage.add(dir / "scores.csv", scores_s.str());
    stage.add(dir / "summary.csv", summary_s.str());
    stage.add(dir / "curve.csv", curve_s.str());
    stage.add(dir / "run.json", run_record_json(record));
    stage.commit();

    out << "sweep: " << fps.size() << " focal papers x " << specs.size()
        << " specifications -> " << cmd.out_dir << "\n";
    if (ext) {
      out << "extremes: min mean " << format_double(*ext->min.mean) << " (x="
          << ext->min.spec.x << ", y="
          << window_length_field(ext->min.spec.window.length)
          << ", z=" << ext->min.spec.z_refs << (ext->min_tied ? ", tied" : "")
          << "), max mean " << format_double(*ext->max.mean) << " (x="
          << ext->max.spec.x << ", y="
          << window_length_field(ext->max.spec.window.length)
          << ", z=" << ext->max.spec.z_refs << (ext->max_tied ? ", tied" : "")
          << ")\n";
    } else {
      out << "extremes: none (no spec has a mean)\n";
    }
    return kExitOk;
  });
}

int run_plot(const PlotCommand& cmd, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    if (cmd.out_dir.empty()) throw ConfigError("plot: --out is required");
    if (cmd.bandwidth && !(*cmd.bandwidth > 0.0)) {
      throw ConfigError("plot: bandwidth must be positive");
    }
    std::ifstream in(cmd.summary_path);
    if (!in) throw IoError("cannot open summary file: " + cmd.summary_path);
    std::vector<SpecSummary> summaries = read_summary_csv(in);

    std::vector<double> means;
    for (const SpecSummary& s : summaries) {
      if (s.mean) means.push_back(*s.mean);
    }
    if (means.empty()) {
      throw PlotError("no specification has a mean score; nothing to plot");
    }

    DensityCurve curve = kde(means, cmd.bandwidth);

    std::ostringstream kde_s, svg_s;
    write_kde_csv(kde_s, curve);
    write_density_svg(svg_s, curve, means);

    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(cmd.out_dir, ec);
    if (ec) {
      throw IoError("cannot create output directory " + cmd.out_dir + ": " +
                    ec.message());
    }
    fs::path dir(cmd.out_dir);
    OutputStage stage;
    stage.add(dir / "kde.csv", kde_s.str());
    stage.add(dir / "plot.svg", svg_s.str());
    stage.commit();

    out << "plot: " << means.size() << " specification means, bandwidth "
        << format_double(curve.bandwidth) << " -> " << cmd.out_dir << "\n";
    return kExitOk;
  });
}

int run_gen(const GenCommand& cmd, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    if (cmd.out_dir.empty()) throw ConfigError("gen: --out is required");
    SyntheticCorpus corpus = gen_synthetic(cmd.params);
    const CitationGraph& g = corpus.graph;

    std::ostringstream meta_s, edges_s, fps_s;
    write_csv_row(meta_s, {"paper_id", "pub_year"});
    auto n = static_cast<PaperIndex>(g.paper_count());
    for (PaperIndex p = 0; p < n; ++p) {
      const PaperMeta& meta = g.meta(p);
      write_csv_row(meta_s, {meta.id, meta.pub_year
                                          ? std::to_string(*meta.pub_year)
                                          : ""});
    }
    write_csv_row(edges_s, {"citing_id", "cited_id"});
    for (PaperIndex p = 0; p < n; ++p) {
      for (PaperIndex r : g.cited_references(p)) {
        write_csv_row(edges_s, {g.meta(p).id, g.meta(r).id});
      }
    }
    for (PaperIndex fp : corpus.fps) fps_s << g.meta(fp).id << "\n";

    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(cmd.out_dir, ec);
    if (ec) {
      throw IoError("cannot create output directory " + cmd.out_dir + ": " +
                    ec.message());
    }
    fs::path dir(cmd.out_dir);
    OutputStage stage;
    stage.add(dir / "metadata.csv", meta_s.str());
    stage.add(dir / "edges.csv", edges_s.str());
    stage.add(dir / "fps.txt", fps_s.str());
    stage.commit();

    out << "gen: " << g.paper_count() << " papers, " << g.stored_edges()
        << " edges, " << corpus.fps.size() << " focal papers (seed "
        << cmd.params.seed << ") -> " << cmd.out_dir << "\n";
    return kExitOk;
  });
}

}  // namespace dimv

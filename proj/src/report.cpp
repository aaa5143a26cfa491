#include "dimv/report.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "dimv/csv.hpp"
#include "dimv/errors.hpp"
#include "dimv/version.hpp"

namespace dimv {

std::string format_double(double v) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string window_mode_name(WindowMode mode) {
  return mode == WindowMode::PostOnly ? "post" : "all";
}

std::string nf_mode_name(NfMode mode) {
  return mode == NfMode::Complement ? "complement" : "strict-zero";
}

std::string status_name(ScoreStatus status) {
  switch (status) {
    case ScoreStatus::Defined: return "defined";
    case ScoreStatus::Undefined: return "undefined";
    case ScoreStatus::Ineligible: return "ineligible";
  }
  return "";
}

std::string window_length_field(std::optional<int> length) {
  return length ? std::to_string(*length) : "inf";
}

WindowMode parse_window_mode(const std::string& s) {
  if (s == "post") return WindowMode::PostOnly;
  if (s == "all") return WindowMode::AllPublications;
  throw ConfigError("unknown window mode '" + s + "' (expected post|all)");
}

NfMode parse_nf_mode(const std::string& s) {
  if (s == "complement") return NfMode::Complement;
  if (s == "strict-zero") return NfMode::StrictZero;
  throw ConfigError("unknown nf mode '" + s +
                    "' (expected complement|strict-zero)");
}

std::optional<int> parse_window_length(const std::string& s) {
  if (s == "inf") return std::nullopt;
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1) {
    throw ConfigError("window length must be a positive integer or 'inf', got '" +
                      s + "'");
  }
  return v;
}

namespace {

const std::vector<std::string> kScoresHeader = {
    "fp_id", "x", "y", "window_mode", "z_refs", "z_cites", "nf_mode",
    "n_f", "n_b", "n_r", "skipped_unknown_year", "status", "score"};
const std::vector<std::string> kSummaryHeader = {
    "x", "y", "window_mode", "z_refs", "z_cites", "nf_mode",
    "mean", "n_included", "n_undefined", "n_ineligible"};
const std::vector<std::string> kCurveHeader = {
    "rank", "x", "y", "window_mode", "z_refs", "z_cites", "nf_mode",
    "mean", "n_included"};

std::int64_t parse_int(const std::string& s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("expected integer, got '" + s + "'");
  }
  return v;
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty()) {
    throw ConfigError("expected number, got '" + s + "'");
  }
  return v;
}

void expect_header(CsvReader& reader, const std::vector<std::string>& want,
                   const char* what) {
  auto row = reader.next_row();
  if (!row || *row != want) {
    throw ConfigError(std::string("unexpected ") + what + " header");
  }
}

void append_spec_fields(std::vector<std::string>& row,
                        const Specification& spec) {
  row.push_back(std::to_string(spec.x));
  row.push_back(window_length_field(spec.window.length));
  row.push_back(window_mode_name(spec.window.mode));
  row.push_back(std::to_string(spec.z_refs));
  row.push_back(std::to_string(spec.z_cites));
  row.push_back(nf_mode_name(spec.nf_mode));
}

// Reads the six spec columns starting at `base`.
Specification spec_from_fields(const std::vector<std::string>& f,
                               std::size_t base) {
  Specification spec;
  spec.x = static_cast<int>(parse_int(f[base]));
  spec.window.length = parse_window_length(f[base + 1]);
  spec.window.mode = parse_window_mode(f[base + 2]);
  spec.z_refs = static_cast<int>(parse_int(f[base + 3]));
  spec.z_cites = static_cast<int>(parse_int(f[base + 4]));
  spec.nf_mode = parse_nf_mode(f[base + 5]);
  return spec;
}

}  // namespace

void write_scores_csv(std::ostream& out, const CitationGraph& g,
                      const ScoreMatrix& m) {
  write_csv_row(out, kScoresHeader);
  for (std::size_t i = 0; i < m.fps.size(); ++i) {
    for (std::size_t j = 0; j < m.specs.size(); ++j) {
      const ScoreOutcome& cell = m.cell(i, j);
      std::vector<std::string> row;
      row.push_back(g.meta(m.fps[i]).id);
      append_spec_fields(row, m.specs[j]);
      if (cell.counts) {
        row.push_back(std::to_string(cell.counts->n_f));
        row.push_back(std::to_string(cell.counts->n_b));
        row.push_back(std::to_string(cell.counts->n_r));
        row.push_back(std::to_string(cell.counts->skipped_unknown_year));
      } else {
        row.insert(row.end(), 4, "");
      }
      row.push_back(status_name(cell.status));
      row.push_back(cell.status == ScoreStatus::Defined
                        ? format_double(cell.score)
                        : "");
      write_csv_row(out, row);
    }
  }
}

std::vector<ScoreRow> read_scores_csv(std::istream& in) {
  CsvReader reader(in);
  expect_header(reader, kScoresHeader, "scores.csv");
  std::vector<ScoreRow> rows;
  while (auto row = reader.next_row()) {
    const auto& f = *row;
    if (f.size() != kScoresHeader.size()) {
      throw ConfigError("scores.csv row has wrong column count");
    }
    ScoreRow r;
    r.fp_id = f[0];
    r.spec = spec_from_fields(f, 1);
    const std::string& status = f[11];
    if (status == "ineligible") {
      r.outcome = {ScoreStatus::Ineligible, 0.0, std::nullopt};
    } else {
      TriCount t;
      t.n_f = parse_int(f[7]);
      t.n_b = parse_int(f[8]);
      t.n_r = parse_int(f[9]);
      t.skipped_unknown_year = parse_int(f[10]);
      if (status == "defined") {
        r.outcome = {ScoreStatus::Defined, parse_double(f[12]), t};
      } else if (status == "undefined") {
        r.outcome = {ScoreStatus::Undefined, 0.0, t};
      } else {
        throw ConfigError("unknown status '" + status + "'");
      }
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_summary_csv(std::ostream& out,
                       std::span<const SpecSummary> summaries) {
  write_csv_row(out, kSummaryHeader);
  for (const SpecSummary& s : summaries) {
    std::vector<std::string> row;
    append_spec_fields(row, s.spec);
    row.push_back(s.mean ? format_double(*s.mean) : "");
    row.push_back(std::to_string(s.n_included));
    row.push_back(std::to_string(s.n_undefined));
    row.push_back(std::to_string(s.n_ineligible));
    write_csv_row(out, row);
  }
}

std::vector<SpecSummary> read_summary_csv(std::istream& in) {
  CsvReader reader(in);
  expect_header(reader, kSummaryHeader, "summary.csv");
  std::vector<SpecSummary> out;
  while (auto row = reader.next_row()) {
    const auto& f = *row;
    if (f.size() != kSummaryHeader.size()) {
      throw ConfigError("summary.csv row has wrong column count");
    }
    SpecSummary s;
    s.spec = spec_from_fields(f, 0);
    if (!f[6].empty()) s.mean = parse_double(f[6]);
    s.n_included = parse_int(f[7]);
    s.n_undefined = parse_int(f[8]);
    s.n_ineligible = parse_int(f[9]);
    out.push_back(std::move(s));
  }
  return out;
}

void write_curve_csv(std::ostream& out, std::span<const CurveEntry> curve) {
  write_csv_row(out, kCurveHeader);
  for (const CurveEntry& e : curve) {
    std::vector<std::string> row;
    row.push_back(e.rank ? std::to_string(*e.rank) : "");
    append_spec_fields(row, e.spec);
    row.push_back(e.mean ? format_double(*e.mean) : "");
    row.push_back(std::to_string(e.n_included));
    write_csv_row(out, row);
  }
}

std::vector<CurveEntry> read_curve_csv(std::istream& in) {
  CsvReader reader(in);
  expect_header(reader, kCurveHeader, "curve.csv");
  std::vector<CurveEntry> out;
  while (auto row = reader.next_row()) {
    const auto& f = *row;
    if (f.size() != kCurveHeader.size()) {
      throw ConfigError("curve.csv row has wrong column count");
    }
    CurveEntry e;
    if (!f[0].empty()) e.rank = static_cast<int>(parse_int(f[0]));
    e.spec = spec_from_fields(f, 1);
    if (!f[7].empty()) e.mean = parse_double(f[7]);
    e.n_included = parse_int(f[8]);
    out.push_back(std::move(e));
  }
  return out;
}

void write_kde_csv(std::ostream& out, const DensityCurve& curve) {
  write_csv_row(out, {"value", "density"});
  for (std::size_t i = 0; i < curve.values.size(); ++i) {
    write_csv_row(out, {format_double(curve.values[i]),
                        format_double(curve.densities[i])});
  }
}

DensityCurve read_kde_csv(std::istream& in) {
  CsvReader reader(in);
  expect_header(reader, {"value", "density"}, "kde.csv");
  DensityCurve curve;
  while (auto row = reader.next_row()) {
    const auto& f = *row;
    if (f.size() != 2) throw ConfigError("kde.csv row has wrong column count");
    curve.values.push_back(parse_double(f[0]));
    curve.densities.push_back(parse_double(f[1]));
  }
  return curve;
}

namespace {

nlohmann::ordered_json summary_json(const SpecSummary& s) {
  nlohmann::ordered_json j;
  j["x"] = s.spec.x;
  if (s.spec.window.length) {
    j["y"] = *s.spec.window.length;
  } else {
    j["y"] = "inf";
  }
  j["window_mode"] = window_mode_name(s.spec.window.mode);
  j["z_refs"] = s.spec.z_refs;
  j["z_cites"] = s.spec.z_cites;
  j["nf_mode"] = nf_mode_name(s.spec.nf_mode);
  j["mean"] = s.mean ? nlohmann::ordered_json(*s.mean)
                     : nlohmann::ordered_json(nullptr);
  j["n_included"] = s.n_included;
  return j;
}

}  // namespace

std::string run_record_json(const RunRecord& record) {
  nlohmann::ordered_json j;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["command"] = record.command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  for (const auto& [key, value] : record.config) config[key] = value;
  j["config"] = config;
  if (record.window_mode_recorded) {
    j["window_mode"] = window_mode_name(record.window_mode);
  }
  if (record.graph) {
    const IngestCounters& c = record.graph->counters();
    j["corpus"] = {
        {"papers", record.graph->paper_count()},
        {"stored_edges", record.graph->stored_edges()},
        {"edges_ingested", c.edges_ingested},
        {"duplicates_dropped", c.duplicates_dropped},
        {"self_loops_dropped", c.self_loops_dropped},
        {"edges_with_unregistered_endpoints",
         c.edges_with_unregistered_endpoints},
        {"metadata_duplicates_dropped", c.metadata_duplicates_dropped},
    };
    j["fps"] = {{"count", record.n_fps},
                {"duplicates_dropped", record.fp_duplicates_dropped}};
  }
  if (record.extremes) {
    j["extremes"] = {{"min", summary_json(record.extremes->min)},
                     {"max", summary_json(record.extremes->max)},
                     {"min_tied", record.extremes->min_tied},
                     {"max_tied", record.extremes->max_tied}};
  } else {
    j["extremes"] = nullptr;
  }
  return j.dump(2) + "\n";
}

void OutputStage::add(std::filesystem::path path, std::string content) {
  staged_.emplace_back(std::move(path), std::move(content));
}

void OutputStage::commit() {
  namespace fs = std::filesystem;
  std::vector<fs::path> temps;
  auto cleanup = [&temps]() {
    for (const fs::path& t : temps) {
      std::error_code ec;
      fs::remove(t, ec);
    }
  };
  for (const auto& [path, content] : staged_) {
    fs::path temp = path;
    temp += ".tmp";
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) {
      cleanup();
      throw IoError("cannot write " + temp.string());
    }
    out << content;
    out.flush();
    if (!out) {
      cleanup();
      throw IoError("write failed for " + temp.string());
    }
    out.close();
    temps.push_back(temp);
  }
  // All temps written; promote them.
  for (std::size_t i = 0; i < staged_.size(); ++i) {
    std::error_code ec;
    fs::rename(temps[i], staged_[i].first, ec);
    if (ec) {
      cleanup();
      throw IoError("cannot rename " + temps[i].string() + " to " +
                    staged_[i].first.string() + ": " + ec.message());
    }
  }
  staged_.clear();
}

}  // namespace dimv

#pragma once
// Immutable citation graph with forward (cited references) and transposed
// (citing papers) adjacency in CSR layout.
//
// Ingest contract:
// - self-loops are dropped and counted, never stored or registered
// - duplicate edges collapse to one stored edge (set semantics)
// - edge endpoints missing from the metadata table are auto-registered with
//   an unknown publication year and counted, so data loss stays visible
//
// Ingestion is single-writer (CorpusBuilder). After build() the graph is
// immutable and safe for unlimited concurrent readers.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dimv/csv.hpp"

namespace dimv {

using PaperIndex = std::int32_t;

// Sanity bounds for publication years; violations are rejected at ingest.
constexpr int kMinYear = 1500;
constexpr int kMaxYear = 2100;

struct PaperMeta {
  std::string id;
  std::optional<int> pub_year;  // nullopt = unknown
};

struct IngestCounters {
  std::uint64_t edges_ingested = 0;
  std::uint64_t duplicates_dropped = 0;
  std::uint64_t self_loops_dropped = 0;
  std::uint64_t edges_with_unregistered_endpoints = 0;
  std::uint64_t metadata_duplicates_dropped = 0;
};

class CitationGraph;

class CorpusBuilder {
 public:
  // Registers a paper. A repeated id with the same year is deduplicated and
  // counted; a repeated id with a different year throws ConflictError.
  PaperIndex add_paper(std::string_view id, std::optional<int> pub_year);

  // Records one citation (citing -> cited). Unknown endpoints are
  // auto-registered with an unknown year.
  void add_edge(std::string_view citing, std::string_view cited);

  // Index-based variant for callers that already hold valid indices.
  void add_edge(PaperIndex citing, PaperIndex cited);

  std::size_t paper_count() const { return papers_.size(); }

  CitationGraph build() &&;

 private:
  PaperIndex find_or_register(std::string_view id);

  std::vector<PaperMeta> papers_;
  std::unordered_map<std::string, PaperIndex> index_;
  std::vector<std::pair<PaperIndex, PaperIndex>> edges_;
  IngestCounters counters_;
};

class CitationGraph {
 public:
  std::size_t paper_count() const { return papers_.size(); }
  std::uint64_t stored_edges() const { return out_targets_.size(); }
  const IngestCounters& counters() const { return counters_; }

  std::optional<PaperIndex> find(std::string_view id) const;
  PaperIndex require(std::string_view id) const;  // throws LookupError
  const PaperMeta& meta(PaperIndex p) const;

  // Sorted, deduplicated adjacency. cited_references(p) lists the papers p
  // cites; citing_papers(p) is the exact transpose.
  std::span<const PaperIndex> cited_references(PaperIndex p) const;
  std::span<const PaperIndex> citing_papers(PaperIndex p) const;
  bool cites(PaperIndex citing, PaperIndex cited) const;

  // Id-keyed conveniences.
  std::vector<std::string> cited_reference_ids(std::string_view id) const;
  std::vector<std::string> citing_paper_ids(std::string_view id) const;

 private:
  friend class CorpusBuilder;
  void check(PaperIndex p) const;

  std::vector<PaperMeta> papers_;
  std::unordered_map<std::string, PaperIndex> index_;
  std::vector<std::size_t> out_offsets_;
  std::vector<PaperIndex> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<PaperIndex> in_sources_;
  IngestCounters counters_;
};

// File ingestion. Both formats carry a mandatory header row:
//   metadata: paper_id,pub_year   (empty pub_year = unknown)
//   edges:    citing_id,cited_id
// Throws IngestError (with line number), ConflictError, or IoError.
void read_metadata_csv(std::istream& in, CorpusBuilder& builder,
                       CsvDialect dialect = {});
void read_edges_csv(std::istream& in, CorpusBuilder& builder,
                    CsvDialect dialect = {});

CitationGraph load_corpus(const std::string& metadata_path,
                          const std::string& edges_path,
                          CsvDialect dialect = {});

}  // namespace dimv

#include "dimv/citation_graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "dimv/errors.hpp"

namespace dimv {

PaperIndex CorpusBuilder::find_or_register(std::string_view id) {
  auto it = index_.find(std::string(id));
  if (it != index_.end()) return it->second;
  auto idx = static_cast<PaperIndex>(papers_.size());
  papers_.push_back(PaperMeta{std::string(id), std::nullopt});
  index_.emplace(std::string(id), idx);
  return idx;
}

PaperIndex CorpusBuilder::add_paper(std::string_view id,
                                    std::optional<int> pub_year) {
  auto it = index_.find(std::string(id));
  if (it != index_.end()) {
    if (papers_[it->second].pub_year != pub_year) {
      throw ConflictError(std::string(id));
    }
    ++counters_.metadata_duplicates_dropped;
    return it->second;
  }
  auto idx = static_cast<PaperIndex>(papers_.size());
  papers_.push_back(PaperMeta{std::string(id), pub_year});
  index_.emplace(std::string(id), idx);
  return idx;
}

void CorpusBuilder::add_edge(std::string_view citing, std::string_view cited) {
  ++counters_.edges_ingested;
  if (citing == cited) {
    ++counters_.self_loops_dropped;
    return;
  }
  std::size_t before = papers_.size();
  PaperIndex a = find_or_register(citing);
  PaperIndex b = find_or_register(cited);
  if (papers_.size() != before) ++counters_.edges_with_unregistered_endpoints;
  edges_.emplace_back(a, b);
}

void CorpusBuilder::add_edge(PaperIndex citing, PaperIndex cited) {
  ++counters_.edges_ingested;
  if (citing == cited) {
    ++counters_.self_loops_dropped;
    return;
  }
  edges_.emplace_back(citing, cited);
}

CitationGraph CorpusBuilder::build() && {
  std::sort(edges_.begin(), edges_.end());
  auto last = std::unique(edges_.begin(), edges_.end());
  counters_.duplicates_dropped +=
      static_cast<std::uint64_t>(edges_.end() - last);
  edges_.erase(last, edges_.end());

  CitationGraph g;
  g.papers_ = std::move(papers_);
  g.index_ = std::move(index_);
  g.counters_ = counters_;

  std::size_t n = g.papers_.size();
  std::size_t m = edges_.size();

  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (auto [a, b] : edges_) {
    ++g.out_offsets_[static_cast<std::size_t>(a) + 1];
    ++g.in_offsets_[static_cast<std::size_t>(b) + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) {
    g.out_offsets_[i] += g.out_offsets_[i - 1];
    g.in_offsets_[i] += g.in_offsets_[i - 1];
  }
  g.out_targets_.resize(m);
  g.in_sources_.resize(m);
  std::vector<std::size_t> out_cursor(g.out_offsets_.begin(),
                                      g.out_offsets_.end() - 1);
  std::vector<std::size_t> in_cursor(g.in_offsets_.begin(),
                                     g.in_offsets_.end() - 1);
  // edges_ is sorted by (citing, cited), so out adjacency comes out sorted;
  // the transpose is filled in the same pass and sorted afterwards.
  for (auto [a, b] : edges_) {
    g.out_targets_[out_cursor[static_cast<std::size_t>(a)]++] = b;
    g.in_sources_[in_cursor[static_cast<std::size_t>(b)]++] = a;
  }
  for (std::size_t p = 0; p < n; ++p) {
    std::sort(g.in_sources_.begin() + static_cast<std::ptrdiff_t>(g.in_offsets_[p]),
              g.in_sources_.begin() + static_cast<std::ptrdiff_t>(g.in_offsets_[p + 1]));
  }
  return g;
}

void CitationGraph::check(PaperIndex p) const {
  if (p < 0 || static_cast<std::size_t>(p) >= papers_.size()) {
    throw LookupError("#" + std::to_string(p));
  }
}

std::optional<PaperIndex> CitationGraph::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PaperIndex CitationGraph::require(std::string_view id) const {
  auto idx = find(id);
  if (!idx) throw LookupError(std::string(id));
  return *idx;
}

const PaperMeta& CitationGraph::meta(PaperIndex p) const {
  check(p);
  return papers_[static_cast<std::size_t>(p)];
}

std::span<const PaperIndex> CitationGraph::cited_references(PaperIndex p) const {
  check(p);
  auto lo = out_offsets_[static_cast<std::size_t>(p)];
  auto hi = out_offsets_[static_cast<std::size_t>(p) + 1];
  return {out_targets_.data() + lo, hi - lo};
}

std::span<const PaperIndex> CitationGraph::citing_papers(PaperIndex p) const {
  check(p);
  auto lo = in_offsets_[static_cast<std::size_t>(p)];
  auto hi = in_offsets_[static_cast<std::size_t>(p) + 1];
  return {in_sources_.data() + lo, hi - lo};
}

bool CitationGraph::cites(PaperIndex citing, PaperIndex cited) const {
  auto refs = cited_references(citing);
  return std::binary_search(refs.begin(), refs.end(), cited);
}

std::vector<std::string> CitationGraph::cited_reference_ids(
    std::string_view id) const {
  std::vector<std::string> out;
  for (PaperIndex p : cited_references(require(id))) out.push_back(meta(p).id);
  return out;
}

std::vector<std::string> CitationGraph::citing_paper_ids(
    std::string_view id) const {
  std::vector<std::string> out;
  for (PaperIndex p : citing_papers(require(id))) out.push_back(meta(p).id);
  return out;
}

namespace {

std::optional<int> parse_year_field(const std::string& field,
                                    std::size_t line) {
  if (field.empty()) return std::nullopt;
  int year = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), year);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw IngestError("pub_year is not an integer: '" + field + "'", line);
  }
  if (year < kMinYear || year > kMaxYear) {
    throw IngestError("pub_year " + std::to_string(year) + " outside [" +
                          std::to_string(kMinYear) + ", " +
                          std::to_string(kMaxYear) + "]",
                      line);
  }
  return year;
}

std::vector<std::string> expect_columns(CsvReader& reader,
                                        std::vector<std::string> row,
                                        std::size_t want) {
  if (row.size() != want) {
    throw IngestError("expected " + std::to_string(want) + " columns, got " +
                          std::to_string(row.size()),
                      reader.row_line());
  }
  return row;
}

}  // namespace

void read_metadata_csv(std::istream& in, CorpusBuilder& builder,
                       CsvDialect dialect) {
  CsvReader reader(in, dialect);
  auto header = reader.next_row();
  if (!header || *header != std::vector<std::string>{"paper_id", "pub_year"}) {
    throw IngestError("expected header 'paper_id,pub_year'", 1);
  }
  while (auto row = reader.next_row()) {
    auto fields = expect_columns(reader, std::move(*row), 2);
    if (fields[0].empty()) {
      throw IngestError("empty paper_id", reader.row_line());
    }
    builder.add_paper(fields[0], parse_year_field(fields[1], reader.row_line()));
  }
}

void read_edges_csv(std::istream& in, CorpusBuilder& builder,
                    CsvDialect dialect) {
  CsvReader reader(in, dialect);
  auto header = reader.next_row();
  if (!header ||
      *header != std::vector<std::string>{"citing_id", "cited_id"}) {
    throw IngestError("expected header 'citing_id,cited_id'", 1);
  }
  while (auto row = reader.next_row()) {
    auto fields = expect_columns(reader, std::move(*row), 2);
    if (fields[0].empty() || fields[1].empty()) {
      throw IngestError("empty paper id in edge row", reader.row_line());
    }
    builder.add_edge(fields[0], fields[1]);
  }
}

CitationGraph load_corpus(const std::string& metadata_path,
                          const std::string& edges_path, CsvDialect dialect) {
  std::ifstream meta(metadata_path);
  if (!meta) throw IoError("cannot open metadata file: " + metadata_path);
  std::ifstream edges(edges_path);
  if (!edges) throw IoError("cannot open edge file: " + edges_path);
  CorpusBuilder builder;
  read_metadata_csv(meta, builder, dialect);
  read_edges_csv(edges, builder, dialect);
  return std::move(builder).build();
}

}  // namespace dimv

#pragma once
// Small CSV reader/writer. Quoted fields may contain the delimiter, doubled
// quotes, and newlines. The delimiter is configurable (comma default, tab
// for TSV dumps); encoding is assumed UTF-8 throughout.

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dimv {

struct CsvDialect {
  char delimiter = ',';
};

class CsvReader {
 public:
  explicit CsvReader(std::istream& in, CsvDialect dialect = {})
      : in_(in), dialect_(dialect) {}

  // Next record, or nullopt at end of input. Throws IngestError on an
  // unterminated quoted field.
  std::optional<std::vector<std::string>> next_row();

  // Physical line the most recent row started on (1-based).
  std::size_t row_line() const { return row_line_; }

 private:
  std::istream& in_;
  CsvDialect dialect_;
  std::size_t line_ = 1;
  std::size_t row_line_ = 1;
};

std::string csv_escape(const std::string& field, CsvDialect dialect = {});

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields,
                   CsvDialect dialect = {});

}  // namespace dimv

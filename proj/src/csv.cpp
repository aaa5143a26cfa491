#include "dimv/csv.hpp"

#include "dimv/errors.hpp"

namespace dimv {

std::optional<std::vector<std::string>> CsvReader::next_row() {
  int first = in_.peek();
  if (first == std::istream::traits_type::eof()) return std::nullopt;

  row_line_ = line_;
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;

  for (;;) {
    int ci = in_.get();
    if (ci == std::istream::traits_type::eof()) {
      if (quoted) throw IngestError("unterminated quoted field", row_line_);
      fields.push_back(std::move(field));
      return fields;
    }
    char c = static_cast<char>(ci);
    if (quoted) {
      if (c == '"') {
        if (in_.peek() == '"') {
          in_.get();
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line_;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == dialect_.delimiter) {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\r') {
      // swallow; the following '\n' terminates the row
    } else if (c == '\n') {
      ++line_;
      fields.push_back(std::move(field));
      return fields;
    } else {
      field.push_back(c);
    }
  }
}

std::string csv_escape(const std::string& field, CsvDialect dialect) {
  bool needs_quotes = field.find(dialect.delimiter) != std::string::npos ||
                      field.find('"') != std::string::npos ||
                      field.find('\n') != std::string::npos ||
                      field.find('\r') != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += '"';
  return out;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields,
                   CsvDialect dialect) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << dialect.delimiter;
    out << csv_escape(fields[i], dialect);
  }
  out << '\n';
}

}  // namespace dimv

#pragma once
// Exception types shared across the library. The CLI maps them to exit
// codes in tools/main.cpp: IoError/IngestError/ConflictError -> 2,
// LookupError -> 3, PlotError -> 4, ConfigError/PreconditionError -> 5.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dimv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Missing or unreadable input file, or a failed output write.
struct IoError : Error {
  using Error::Error;
};

// Malformed input row; carries the 1-based physical line number.
struct IngestError : Error {
  IngestError(const std::string& msg, std::size_t line_no)
      : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
  std::size_t line;
};

// Duplicate paper id registered with a different publication year.
struct ConflictError : Error {
  explicit ConflictError(const std::string& paper_id)
      : Error("conflicting publication year for paper id '" + paper_id + "'"),
        id(paper_id) {}
  std::string id;
};

// Paper id not present in the corpus.
struct LookupError : Error {
  explicit LookupError(const std::string& paper_id)
      : Error("unknown paper id '" + paper_id + "'"), id(paper_id) {}
  std::string id;
};

struct ConfigError : Error {
  using Error::Error;
};

// A documented operation precondition was violated (e.g. scoring a focal
// paper whose publication year is unknown).
struct PreconditionError : Error {
  using Error::Error;
};

// Plot requested but no mean scores are available.
struct PlotError : Error {
  using Error::Error;
};

}  // namespace dimv

#include <sstream>

#include "doctest.h"
#include "dimv/csv.hpp"
#include "dimv/errors.hpp"
#include "dimv/oracle.hpp"

using namespace dimv;

TEST_CASE("csv reader handles plain rows and CRLF") {
  std::istringstream in("a,b,c\r\nd,,f\n");
  CsvReader reader(in);
  auto r1 = reader.next_row();
  REQUIRE(r1.has_value());
  CHECK(*r1 == std::vector<std::string>{"a", "b", "c"});
  CHECK(reader.row_line() == 1);
  auto r2 = reader.next_row();
  REQUIRE(r2.has_value());
  CHECK(*r2 == std::vector<std::string>{"d", "", "f"});
  CHECK(reader.row_line() == 2);
  CHECK(!reader.next_row().has_value());
}

TEST_CASE("csv reader handles quoted fields") {
  std::istringstream in("\"a,b\",\"with \"\"quotes\"\"\",\"two\nlines\"\nx,y,z\n");
  CsvReader reader(in);
  auto r1 = reader.next_row();
  REQUIRE(r1.has_value());
  CHECK((*r1)[0] == "a,b");
  CHECK((*r1)[1] == "with \"quotes\"");
  CHECK((*r1)[2] == "two\nlines");
  auto r2 = reader.next_row();
  REQUIRE(r2.has_value());
  CHECK(reader.row_line() == 3);  // quoted newline counted
}

TEST_CASE("csv reader reports unterminated quotes") {
  std::istringstream in("ok,row\n\"unterminated\n");
  CsvReader reader(in);
  reader.next_row();
  CHECK_THROWS_AS(reader.next_row(), IngestError);
}

TEST_CASE("csv reader supports tab dialect") {
  std::istringstream in("a\tb\nc\td\n");
  CsvReader reader(in, CsvDialect{'\t'});
  auto r1 = reader.next_row();
  REQUIRE(r1.has_value());
  CHECK(*r1 == std::vector<std::string>{"a", "b"});
}

TEST_CASE("csv escape round-trips random fields") {
  SplitMix64 rng(20240901);
  const char alphabet[] = {'a', ',', '"', '\n', ' ', 'Z', '\t', '\r'};
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<std::string> fields(1 + rng.bounded(4));
    for (auto& f : fields) {
      auto len = rng.bounded(12);
      for (std::uint64_t i = 0; i < len; ++i) {
        f.push_back(alphabet[rng.bounded(sizeof(alphabet))]);
      }
    }
    std::ostringstream out;
    write_csv_row(out, fields);
    std::istringstream in(out.str());
    CsvReader reader(in);
    auto parsed = reader.next_row();
    REQUIRE(parsed.has_value());
    CHECK(*parsed == fields);
  }
}

#include <doctest.h>

#include <sstream>

#include "scimap/strings.hpp"
#include "scimap/table.hpp"

using namespace scimap;

TEST_CASE("trim and collapse") {
  CHECK(trim("  a b  ") == "a b");
  CHECK(trim("\t\r\n") == "");
  CHECK(collapse_whitespace("  Smith,   J  ") == "Smith, J");
  CHECK(collapse_whitespace("a\t\tb\nc") == "a b c");
}

TEST_CASE("split and join") {
  CHECK(split("a;b;;c", ';') == std::vector<std::string>{"a", "b", "", "c"});
  CHECK(split("", ';') == std::vector<std::string>{""});
  CHECK(join({"x", "y"}, ", ") == "x, y");
}

TEST_CASE("ascii_fold maps common accents") {
  CHECK(ascii_fold("París") == "Paris");
  CHECK(ascii_fold("Müller") == "Muller");
  CHECK(ascii_fold("Karlsruhe") == "Karlsruhe");
  CHECK(ascii_fold("œuvre") == "oeuvre");
  // en dash becomes a plain hyphen
  CHECK(ascii_fold("IoT \xe2\x80\x93 things") == "IoT - things");
}

TEST_CASE("format_fixed is locale independent and stable") {
  CHECK(format_fixed(3.14159, 2) == "3.14");
  CHECK(format_fixed(-0.5, 3) == "-0.500");
  CHECK(format_fixed(2.0, 0) == "2");
}

TEST_CASE("csv round trips quoting") {
  std::ostringstream out;
  write_csv_row(out, {"plain", "with,comma", "with\"quote", "line\nbreak"});
  std::istringstream in(out.str());
  auto rows = read_csv(in);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == std::vector<std::string>{"plain", "with,comma",
                                            "with\"quote", "line\nbreak"});
}

TEST_CASE("csv handles crlf and quoted commas") {
  std::istringstream in("a,b\r\n\"x,y\",z\r\n");
  auto rows = read_csv(in);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][0] == "x,y");
  CHECK(rows[1][1] == "z");
}

TEST_CASE("pairs reader skips comments") {
  std::istringstream in("# comment\nA\tB\n\nC\tD\n");
  auto pairs = read_pairs(in);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == std::pair<std::string, std::string>{"A", "B"});
}

#include <doctest.h>

#include <cstdio>

#include "subcode/constructions.hpp"
#include "subcode/geometry.hpp"
#include "subcode/io.hpp"
#include "support.hpp"

using namespace subcode;

TEST_CASE("code files round trip") {
  for (int q : {2, 3, 4, 9}) {
    const SubspaceCode c = q <= 3 ? construction_a(q) : plane_spread_field_reduction(q);
    const std::string text = write_code(c);
    CHECK(read_code(text) == c);
    CHECK(write_code(read_code(text)) == text);
  }
  const std::string text = write_code(construction_a(2));
  CHECK(text.rfind("v=6 q=2 k=3 count=77\n", 0) == 0);
  CHECK(text.find("\n000100,000010,000001\n") == std::string::npos);  // S is not a codeword
}

TEST_CASE("parse_rows") {
  const Subspace s = parse_rows("000100,000010,000001", 2, 6);
  CHECK(s == special_flat(GaloisField::get(2), 6, 3));
  CHECK(parse_rows("10,01", 3, 2).dim() == 2);
  CHECK_THROWS_AS(parse_rows("12,21", 3, 2), ParseError);
  CHECK_THROWS_AS(parse_rows("102", 2, 3), ParseError);
  CHECK_THROWS_AS(parse_rows("10", 2, 3), ParseError);
}

TEST_CASE("parser rejects malformed files") {
  CHECK_THROWS_AS(parse_code(""), ParseError);
  CHECK_THROWS_AS(parse_code("v=6 q=2 k=3\n"), ParseError);
  CHECK_THROWS_AS(parse_code("v=6 q=6 k=3 count=0\n"), ParseError);
  CHECK_THROWS_AS(parse_code("v=6 q=2 k=3 count=1\n"), ParseError);
  CHECK_THROWS_AS(parse_code("v=6 q=2 k=3 count=1\n100000,010000\n"), ParseError);
  CHECK_THROWS_AS(parse_code("v=6 q=2 k=3 count=1\n110000,010000,001000\n"), ParseError);
  CHECK_THROWS_AS(parse_code("v=6 q=2 k=3 count=1\n100000,010000,00100\n"), ParseError);
  CHECK_THROWS_AS(parse_code("v=6 q=2 k=3 count=x\n"), ParseError);
  try {
    parse_code("v=4 q=2 k=2 count=1\n\n1000,0200\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  // Duplicates survive parse_code but not read_code.
  const std::string dup = "v=4 q=2 k=2 count=2\n1000,0100\n1000,0100\n";
  CHECK(parse_code(dup).members.size() == 2);
  CHECK_THROWS_AS(read_code(dup), ParseError);
}

TEST_CASE("files") {
  const std::string path = "subcode_io_test.txt";
  write_file(path, "hello\n");
  CHECK(read_file(path) == "hello\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_file("/nonexistent/dir/file"), std::runtime_error);
  CHECK_THROWS_AS(write_file("/nonexistent/dir/file", "x"), std::runtime_error);
}

TEST_CASE("reports round trip") {
  AnalyzeOptions opt;
  opt.aut = true;
  const CodeReport r = analyze(construction_a(2), opt);
  const std::string text = write_report(r);
  CHECK(read_report(text) == r);
  CHECK(text.find("degrees = 5^7 9^56") != std::string::npos);
  CHECK(text.find("light_plane = 000100,000010,000001") != std::string::npos);
  CHECK(!report_summary(r).empty());

  const CodeReport r3 = analyze(plane_spread_field_reduction(3));
  CHECK(read_report(write_report(r3)) == r3);

  CHECK_THROWS_AS(read_report(text + "bogus = 1\n"), ParseError);
  CHECK_THROWS_AS(read_report(text + "size = 77\n"), ParseError);
  std::string broken = text;
  broken.replace(broken.find("aut_with_correlations = 336"), 27, "aut_with_correlations = 335");
  CHECK_THROWS_AS(read_report(broken), ParseError);
}

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "subcode/analysis.hpp"
#include "subcode/linalg.hpp"

namespace subcode {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Code file text:
///   v=6 q=2 k=3 count=77
///   100000,010000,001000
///   ...
/// one codeword per line, canonical matrix rows separated by commas, each
/// row one base-q digit per column.
std::string write_code(const SubspaceCode& c);

/// The body of a code file as read, duplicates kept (verification wants to
/// see them).
struct CodeFileContents {
  int v = 0, q = 0, k = 0;
  std::vector<Subspace> members;
};

/// Throws ParseError on malformed input or non-canonical rows.
CodeFileContents parse_code(const std::string& text);
/// parse_code plus the distinctness requirement of SubspaceCode.
SubspaceCode read_code(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// Subspace from "100,010" style rows over GF(q).
Subspace parse_rows(const std::string& rows, int q, int v);

/// `key = value` lines; read_report(write_report(r)) == r.
std::string write_report(const CodeReport& r);
CodeReport read_report(const std::string& text);
/// Short human-readable rendering.
std::string report_summary(const CodeReport& r);

}  // namespace subcode

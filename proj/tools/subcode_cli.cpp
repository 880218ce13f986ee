// Command-line front end; talks to the library only through subcode.h.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "subcode/subcode.h"

namespace {

// 0 success, 1 verification failure, 2 usage or input error, 3 budget.
int exit_code(sc_status s) {
  switch (s) {
    case SC_OK: return 0;
    case SC_VERIFY_FAILED: return 1;
    case SC_BUDGET: return 3;
    case SC_USAGE:
    case SC_IO:
    case SC_PARSE: return 2;
    case SC_INTERNAL: return 1;
  }
  return 1;
}

int fail(sc_status s) {
  std::cerr << "error: " << sc_last_error() << '\n';
  return exit_code(s);
}

// Takes ownership of s.
void emit(char* s, std::ostream& os = std::cout) {
  if (!s) return;
  os << s;
  sc_string_free(s);
}

std::string read_all(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) return {};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  std::fclose(f);
  return out;
}

bool readable(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) return false;
  std::fclose(f);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-dimension subspace codes over PG(5,q)"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 1;
  std::uint64_t budget = 0;
  app.add_option("--threads", threads, "Worker threads for distance sweeps")->check(CLI::Range(1, 256));
  app.add_option("--budget", budget, "Search node budget (0 = default)");

  auto* construct = app.add_subcommand("construct", "Build a code and write it in code-file format");
  std::string kind, out_path;
  int q = 2;
  construct->add_option("kind", kind, "lmrd | construction-a-core | construction-a | core-plus-s | plane-spread")
      ->required();
  construct->add_option("--q", q, "Field order")->required();
  construct->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check the minimum distance of a code file");
  std::string in_path;
  int min_d = 4;
  verify->add_option("file", in_path)->required();
  verify->add_option("--min-distance", min_d, "Required minimum subspace distance")->required();

  auto* analyze = app.add_subcommand("analyze", "Report distance, degrees, configurations and constraints");
  bool aut = false;
  std::string report_path;
  analyze->add_option("file", in_path)->required();
  analyze->add_flag("--aut", aut, "Also compute the automorphism order and self-duality");
  analyze->add_option("--out", report_path, "Write the key-value report here");

  auto* bounds = app.add_subcommand("bounds", "Evaluate the recursive upper bound for A_q(v,d;k)");
  int bv = 0, bd = 0, bk = 0, bq = 0;
  bounds->add_option("v", bv)->required();
  bounds->add_option("d", bd)->required();
  bounds->add_option("k", bk)->required();
  bounds->add_option("q", bq)->required();

  auto* spreads = app.add_subcommand("spreads", "Size-9 partial line spreads of PG(4,2)");
  spreads->require_subcommand(1);
  auto* classify = spreads->add_subcommand("classify", "Exhaustive classification");
  bool orbits = false;
  classify->add_flag("--orbits", orbits, "Stabilizer orders and point orbits");
  auto* show = spreads->add_subcommand("show", "Print a representative and its profile");
  std::string type;
  show->add_option("type", type, "X | E | IDelta | IDelta'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (*construct) {
    sc_code* c = nullptr;
    if (sc_status s = sc_code_construct(kind.c_str(), q, &c); s != SC_OK) return fail(s);
    sc_status s = SC_OK;
    if (out_path.empty()) {
      char* text = nullptr;
      s = sc_code_text(c, &text);
      emit(text);
    } else {
      s = sc_code_save(c, out_path.c_str());
    }
    sc_code_free(c);
    return s == SC_OK ? 0 : fail(s);
  }

  if (*verify) {
    if (!readable(in_path)) {
      std::cerr << "error: cannot open " << in_path << '\n';
      return 2;
    }
    const std::string text = read_all(in_path);
    char* report = nullptr;
    const sc_status s = sc_verify_text(text.c_str(), min_d, threads, &report);
    emit(report);
    if (s != SC_OK && s != SC_VERIFY_FAILED) return fail(s);
    return exit_code(s);
  }

  if (*analyze) {
    sc_code* c = nullptr;
    if (sc_status s = sc_code_load(in_path.c_str(), &c); s != SC_OK) return fail(s);
    sc_analyze_options opt{aut ? 1 : 0, threads, budget};
    char* report = nullptr;
    char* summary = nullptr;
    const sc_status s = sc_analyze(c, &opt, &report, &summary);
    sc_code_free(c);
    if (s != SC_OK) return fail(s);
    std::istringstream lines(summary ? summary : "");
    for (std::string l; std::getline(lines, l);) std::cout << "# " << l << '\n';
    sc_string_free(summary);
    const std::string kv = report ? report : "";
    sc_string_free(report);
    std::cout << kv;
    if (!report_path.empty()) {
      std::FILE* f = std::fopen(report_path.c_str(), "wb");
      if (!f || std::fwrite(kv.data(), 1, kv.size(), f) != kv.size()) {
        if (f) std::fclose(f);
        std::cerr << "error: cannot write " << report_path << '\n';
        return 2;
      }
      std::fclose(f);
    }
    return 0;
  }

  if (*bounds) {
    std::uint64_t value = 0;
    int known = 0;
    char* trace = nullptr;
    const sc_status s = sc_bound(bv, bd, bk, bq, &value, &known, &trace);
    if (s != SC_OK) return fail(s);
    std::cout << "A_" << bq << "(" << bv << "," << bd << ";" << bk << ") <= ";
    if (known)
      std::cout << value << '\n';
    else
      std::cout << "unknown\n";
    std::cout << "# ";
    emit(trace);
    std::cout << '\n';
    return 0;
  }

  if (*classify) {
    char* report = nullptr;
    const sc_status s = sc_spreads_classify(orbits ? 1 : 0, budget, &report);
    if (s != SC_OK) return fail(s);
    emit(report);
    return 0;
  }

  if (*show) {
    char* report = nullptr;
    const sc_status s = sc_spreads_show(type.c_str(), &report);
    if (s != SC_OK) return fail(s);
    emit(report);
    return 0;
  }
  return 2;
}

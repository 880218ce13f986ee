#include "subcode/subcode.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "subcode/analysis.hpp"
#include "subcode/constructions.hpp"
#include "subcode/geometry.hpp"
#include "subcode/io.hpp"
#include "subcode/pg42.hpp"

struct sc_code {
  subcode::SubspaceCode code;
};

namespace {

thread_local std::string last_error;

class IoFailure : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
sc_status guard(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const subcode::BudgetExceeded& e) {
    last_error = e.what();
    return SC_BUDGET;
  } catch (const subcode::ParseError& e) {
    last_error = e.what();
    return SC_PARSE;
  } catch (const IoFailure& e) {
    last_error = e.what();
    return SC_IO;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return SC_USAGE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SC_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return SC_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** dst, const std::string& s) {
  if (dst) *dst = dup(s);
}

sc_status need(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
  return SC_OK;
}

std::string line_rows(subcode::LineMask l) { return subcode::subspace_from_mask(subcode::kPg42Dim, l).to_string(); }

std::string point_list(subcode::PointMask m) {
  std::string out;
  for (unsigned p = 1; p < 64; ++p)
    if (m >> p & 1u) {
      if (!out.empty()) out += ' ';
      out += std::to_string(p);
    }
  return out;
}

}  // namespace

extern "C" {

const char* sc_version(void) { return "1.0.0"; }

const char* sc_last_error(void) { return last_error.c_str(); }

void sc_string_free(char* s) { std::free(s); }

sc_status sc_code_construct(const char* kind, int q, sc_code** out) {
  return guard([&] {
    need(kind && out, "null argument");
    const std::string k = kind;
    subcode::SubspaceCode c;
    if (k == "lmrd")
      c = subcode::lift_gabidulin(q);
    else if (k == "construction-a-core")
      c = subcode::construction_a_core(q);
    else if (k == "construction-a")
      c = subcode::construction_a(q);
    else if (k == "core-plus-s")
      c = subcode::core_plus_s(q);
    else if (k == "plane-spread")
      c = subcode::plane_spread_field_reduction(q);
    else
      throw std::invalid_argument("unknown construction '" + k + "'");
    *out = new sc_code{std::move(c)};
    return SC_OK;
  });
}

sc_status sc_code_parse(const char* text, sc_code** out) {
  return guard([&] {
    need(text && out, "null argument");
    *out = new sc_code{subcode::read_code(text)};
    return SC_OK;
  });
}

sc_status sc_code_load(const char* path, sc_code** out) {
  return guard([&] {
    need(path && out, "null argument");
    std::string text;
    try {
      text = subcode::read_file(path);
    } catch (const std::runtime_error& e) {
      throw IoFailure(e.what());
    }
    *out = new sc_code{subcode::read_code(text)};
    return SC_OK;
  });
}

sc_status sc_code_save(const sc_code* c, const char* path) {
  return guard([&] {
    need(c && path, "null argument");
    const std::string text = subcode::write_code(c->code);
    try {
      subcode::write_file(path, text);
    } catch (const std::runtime_error& e) {
      throw IoFailure(e.what());
    }
    return SC_OK;
  });
}

sc_status sc_code_text(const sc_code* c, char** out) {
  return guard([&] {
    need(c && out, "null argument");
    put(out, subcode::write_code(c->code));
    return SC_OK;
  });
}

sc_status sc_code_dual(const sc_code* c, sc_code** out) {
  return guard([&] {
    need(c && out, "null argument");
    *out = new sc_code{subcode::dual_code(c->code)};
    return SC_OK;
  });
}

void sc_code_free(sc_code* c) { delete c; }

size_t sc_code_size(const sc_code* c) { return c ? c->code.size() : 0; }
int sc_code_ambient(const sc_code* c) { return c ? c->code.ambient() : 0; }
int sc_code_field(const sc_code* c) { return c ? c->code.field().order() : 0; }
int sc_code_dim(const sc_code* c) { return c ? c->code.constant_dim() : 0; }

sc_status sc_min_distance(const sc_code* c, int threads, int* distance) {
  return guard([&] {
    need(c && distance, "null argument");
    *distance = subcode::min_distance(c->code, threads);
    return SC_OK;
  });
}

sc_status sc_verify_text(const char* code_text, int min_distance, int threads, char** report) {
  return guard([&] {
    need(code_text != nullptr, "null argument");
    const subcode::CodeFileContents f = subcode::parse_code(code_text);
    std::ostringstream os;
    os << "count = " << f.members.size() << '\n' << "required = " << min_distance << '\n';
    if (f.members.size() < 2) {
      os << "distance = none\nresult = pass\n";
      put(report, os.str());
      return SC_OK;
    }
    const auto r = subcode::min_distance_pair(f.members, threads);
    os << "distance = " << r.distance << '\n';
    const bool ok = r.distance >= min_distance;
    if (!ok)
      os << "violating_pair = " << r.first << ' ' << r.second << '\n'
         << "first = " << f.members[r.first].to_string() << '\n'
         << "second = " << f.members[r.second].to_string() << '\n';
    os << "result = " << (ok ? "pass" : "fail") << '\n';
    put(report, os.str());
    return ok ? SC_OK : SC_VERIFY_FAILED;
  });
}

sc_status sc_is_maximal(const sc_code* c, int d, int* maximal, uint64_t* checked, uint64_t* addable) {
  return guard([&] {
    need(c != nullptr, "null argument");
    const auto r = subcode::is_maximal(c->code, d);
    if (maximal) *maximal = r.maximal ? 1 : 0;
    if (checked) *checked = r.planes_checked;
    if (addable) *addable = r.addable.size();
    return SC_OK;
  });
}

sc_status sc_analyze(const sc_code* c, const sc_analyze_options* opt, char** report, char** summary) {
  return guard([&] {
    need(c != nullptr, "null argument");
    subcode::AnalyzeOptions o;
    if (opt) {
      o.aut = opt->aut != 0;
      o.threads = opt->threads;
      if (opt->budget) o.budget = opt->budget;
    }
    const subcode::CodeReport r = subcode::analyze(c->code, o);
    put(report, subcode::write_report(r));
    put(summary, subcode::report_summary(r));
    return SC_OK;
  });
}

sc_status sc_bound(int v, int d, int k, int q, uint64_t* value, int* known, char** trace) {
  return guard([&] {
    const auto r = subcode::recursive_bound({v, d, k, q});
    if (known) *known = r.value ? 1 : 0;
    if (value) *value = r.value.value_or(0);
    put(trace, r.trace());
    return SC_OK;
  });
}

sc_status sc_partial_spread_max(int v, int q, uint64_t* value) {
  return guard([&] {
    need(value != nullptr, "null argument");
    (void)subcode::GaloisField::get(q);
    *value = subcode::partial_spread_max(v, q);
    return SC_OK;
  });
}

sc_status sc_spreads_classify(int orbits, uint64_t budget, char** report) {
  return guard([&] {
    const std::uint64_t b = budget ? budget : subcode::kDefaultNodeBudget;
    const auto cl = subcode::classify_all_size9(b);
    std::ostringstream os;
    os << "classes = " << cl.classes.size() << '\n'
       << "leaves = " << cl.leaves << '\n'
       << "iso_tests = " << cl.iso_tests << '\n';
    for (const auto& c : cl.classes) {
      const std::string t = subcode::type_name(c.type);
      os << "class " << t << " leaves = " << c.hits << '\n';
      os << "class " << t << " pattern = " << subcode::type_name(subcode::profile(c.representative).pattern) << '\n';
      if (orbits) {
        const auto a = subcode::spread_aut_and_orbits(c.representative, b);
        os << "class " << t << " order = " << a.order << '\n'
           << "class " << t << " orbits = " << subcode::orbit_string(a.orbits) << '\n'
           << "class " << t << " doubled_orbits = " << subcode::orbit_string(a.doubled_orbits) << '\n';
      }
    }
    put(report, os.str());
    return SC_OK;
  });
}

sc_status sc_spreads_show(const char* type, char** report) {
  return guard([&] {
    need(type != nullptr, "null argument");
    const auto t = subcode::parse_type(type);
    if (!t) throw std::invalid_argument(std::string("unknown spread type '") + type + "'");
    const auto ps = subcode::construct_type(*t);
    const auto pr = subcode::profile(ps);
    std::ostringstream os;
    os << "type = " << subcode::type_name(*t) << '\n';
    for (std::size_t i = 0; i < ps.lines.size(); ++i)
      os << "line " << i << " = " << line_rows(ps.lines[i]) << " (reguli " << pr.regulus_count[i] << ")\n";
    os << "holes = " << point_list(pr.holes) << '\n'
       << "E = " << point_list(pr.plane) << '\n'
       << "L = " << point_list(pr.line) << '\n'
       << "reguli = " << pr.reguli.size() << '\n'
       << "pattern = " << subcode::type_name(pr.pattern) << '\n';
    put(report, os.str());
    return SC_OK;
  });
}

}  // extern "C"

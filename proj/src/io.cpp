#include "subcode/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace subcode {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

long long to_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const long long x = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return x;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
}

std::string rows_string(const Subspace& s) {
  std::string out;
  for (int r = 0; r < s.dim(); ++r) {
    if (r) out += ',';
    for (int c = 0; c < s.ambient(); ++c) out += static_cast<char>('0' + s.cm()(r, c));
  }
  return out;
}

Matrix parse_matrix(const std::string& rows, int q, int v, int line) {
  const GaloisField& f = GaloisField::get(q);
  Matrix m(f, 0, v);
  for (const std::string& row : split(rows, ',')) {
    if (static_cast<int>(row.size()) != v) throw ParseError(line, "row '" + row + "' does not have " + std::to_string(v) + " digits");
    std::vector<Fq> r(v);
    for (int j = 0; j < v; ++j) {
      const int d = row[j] - '0';
      if (d < 0 || d >= q) throw ParseError(line, "digit out of range in '" + row + "'");
      r[j] = static_cast<Fq>(d);
    }
    if (m.rows() >= kMaxDim) throw ParseError(line, "too many rows");
    m.append_row(r);
  }
  return m;
}

Histogram parse_histogram(const std::string& s, int line) {
  Histogram h;
  if (s == "-") return h;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    const auto caret = tok.find('^');
    if (caret == std::string::npos) throw ParseError(line, "bad histogram entry '" + tok + "'");
    h[static_cast<int>(to_int(tok.substr(0, caret), line))] = static_cast<std::uint64_t>(to_int(tok.substr(caret + 1), line));
  }
  return h;
}

std::string histogram_or_dash(const Histogram& h) {
  const std::string s = histogram_string(h);
  return s.empty() ? "-" : s;
}

}  // namespace

std::string write_code(const SubspaceCode& c) {
  std::ostringstream os;
  const int k = c.size() ? c.constant_dim() : 0;
  if (k < 0) throw std::invalid_argument("code files hold constant-dimension codes");
  os << "v=" << c.ambient() << " q=" << c.field().order() << " k=" << k << " count=" << c.size() << '\n';
  for (const auto& e : c.members()) os << rows_string(e) << '\n';
  return os.str();
}

Subspace parse_rows(const std::string& rows, int q, int v) {
  const Matrix m = parse_matrix(rows, q, v, 0);
  if (!is_canonical(m)) throw ParseError(0, "rows are not in canonical form");
  return Subspace::from_canonical(m);
}

CodeFileContents parse_code(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  CodeFileContents out;
  long long count = -1;
  bool header = false;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    if (!header) {
      std::map<std::string, long long> kv;
      std::istringstream hs(line);
      std::string tok;
      while (hs >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "header token '" + tok + "' lacks '='");
        kv[tok.substr(0, eq)] = to_int(tok.substr(eq + 1), lineno);
      }
      for (const char* key : {"v", "q", "k", "count"})
        if (!kv.count(key)) throw ParseError(lineno, std::string("header lacks ") + key);
      if (kv.size() != 4) throw ParseError(lineno, "unexpected header keys");
      out.v = static_cast<int>(kv["v"]);
      out.q = static_cast<int>(kv["q"]);
      out.k = static_cast<int>(kv["k"]);
      count = kv["count"];
      if (out.v < 1 || out.v > kMaxDim || out.k < 0 || out.k > out.v || count < 0)
        throw ParseError(lineno, "header values out of range");
      try {
        (void)GaloisField::get(out.q);
      } catch (const std::invalid_argument&) {
        throw ParseError(lineno, "unsupported field order " + std::to_string(out.q));
      }
      header = true;
      continue;
    }
    const Matrix m = parse_matrix(line, out.q, out.v, lineno);
    if (m.rows() != out.k) throw ParseError(lineno, "codeword does not have k rows");
    if (!is_canonical(m)) throw ParseError(lineno, "codeword is not in canonical form");
    out.members.push_back(Subspace::from_canonical(m));
  }
  if (!header) throw ParseError(lineno, "missing header");
  if (static_cast<long long>(out.members.size()) != count)
    throw ParseError(lineno, "count says " + std::to_string(count) + " but " + std::to_string(out.members.size()) +
                                 " codewords follow");
  return out;
}

SubspaceCode read_code(const std::string& text) {
  CodeFileContents c = parse_code(text);
  try {
    return SubspaceCode(GaloisField::get(c.q), c.v, std::move(c.members));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::string write_report(const CodeReport& r) {
  std::ostringstream os;
  os << "v = " << r.v << '\n'
     << "q = " << r.q << '\n'
     << "k = " << r.k << '\n'
     << "size = " << r.size << '\n'
     << "distance = " << r.distance << '\n'
     << "degrees = " << histogram_or_dash(r.degrees) << '\n'
     << "s_profile = " << histogram_or_dash(r.s_profile) << '\n'
     << "binary_analytics = " << (r.binary_analytics ? 1 : 0) << '\n';
  if (r.binary_analytics) {
    os << "light_plane = " << (r.light_plane ? rows_string(*r.light_plane) : "none") << '\n'
       << "light_candidates = " << r.light_candidates << '\n'
       << "nine_count = " << r.nine_count << '\n'
       << "nine_types =";
    if (r.nine_types.empty()) os << " -";
    for (const auto& [t, n] : r.nine_types) os << ' ' << t << '^' << n;
    os << '\n' << "seventeen = " << r.seventeen << '\n';
  }
  if (r.feasibility) {
    os << "feasibility =";
    for (int i = 0; i < 4; ++i) os << ' ' << r.feasibility->worst[i];
    os << '\n';
  }
  if (r.aut) {
    os << "aut_collineations = " << r.aut->collineations << '\n'
       << "self_dual = " << (r.aut->self_dual ? 1 : 0) << '\n'
       << "aut_with_correlations = " << r.aut->with_correlations() << '\n';
  }
  return os.str();
}

CodeReport read_report(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  std::map<std::string, std::pair<std::string, int>> kv;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    if (kv.count(key)) throw ParseError(lineno, "duplicate key " + key);
    kv[key] = {trim(line.substr(eq + 1)), lineno};
  }
  auto take = [&](const std::string& key) -> std::pair<std::string, int> {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(lineno, "missing key " + key);
    auto v = it->second;
    kv.erase(it);
    return v;
  };
  auto take_int = [&](const std::string& key) {
    auto [v, l] = take(key);
    return to_int(v, l);
  };

  CodeReport r;
  r.v = static_cast<int>(take_int("v"));
  r.q = static_cast<int>(take_int("q"));
  r.k = static_cast<int>(take_int("k"));
  r.size = static_cast<std::uint64_t>(take_int("size"));
  r.distance = static_cast<int>(take_int("distance"));
  {
    auto [v, l] = take("degrees");
    r.degrees = parse_histogram(v, l);
  }
  {
    auto [v, l] = take("s_profile");
    r.s_profile = parse_histogram(v, l);
  }
  r.binary_analytics = take_int("binary_analytics") != 0;
  if (r.binary_analytics) {
    auto [lp, l] = take("light_plane");
    if (lp != "none") {
      try {
        r.light_plane = parse_rows(lp, r.q, r.v);
      } catch (const ParseError& e) {
        throw ParseError(l, e.what());
      }
    }
    r.light_candidates = static_cast<int>(take_int("light_candidates"));
    r.nine_count = static_cast<std::uint64_t>(take_int("nine_count"));
    auto [nt, nl] = take("nine_types");
    if (nt != "-") {
      std::istringstream ts(nt);
      std::string tok;
      while (ts >> tok) {
        const auto caret = tok.rfind('^');
        if (caret == std::string::npos) throw ParseError(nl, "bad type entry '" + tok + "'");
        r.nine_types[tok.substr(0, caret)] = static_cast<std::uint64_t>(to_int(tok.substr(caret + 1), nl));
      }
    }
    r.seventeen = static_cast<std::uint64_t>(take_int("seventeen"));
  }
  if (kv.count("feasibility")) {
    auto [fv, fl] = take("feasibility");
    std::istringstream fs(fv);
    FeasibilityReport f;
    const std::array<int, 4> limit{1, 9, 9, 1};
    for (int i = 0; i < 4; ++i) {
      std::string tok;
      if (!(fs >> tok)) throw ParseError(fl, "feasibility needs four counts");
      f.worst[i] = static_cast<int>(to_int(tok, fl));
      f.pass[i] = f.worst[i] <= limit[i];
    }
    r.feasibility = f;
  }
  if (kv.count("aut_collineations")) {
    AutReport a;
    a.collineations = static_cast<std::uint64_t>(take_int("aut_collineations"));
    a.self_dual = take_int("self_dual") != 0;
    auto [wv, wl] = take("aut_with_correlations");
    if (static_cast<std::uint64_t>(to_int(wv, wl)) != a.with_correlations())
      throw ParseError(wl, "aut_with_correlations disagrees with the other aut fields");
    r.aut = a;
  }
  if (!kv.empty()) throw ParseError(kv.begin()->second.second, "unknown key " + kv.begin()->first);
  return r;
}

std::string report_summary(const CodeReport& r) {
  std::ostringstream os;
  os << "(" << r.v << ", " << r.size << ", " << r.distance << "; " << r.k << ")_" << r.q << " code\n";
  os << "  degree distribution  " << histogram_or_dash(r.degrees) << '\n';
  os << "  position of S        " << histogram_or_dash(r.s_profile) << '\n';
  if (r.binary_analytics) {
    os << "  light plane          " << (r.light_plane ? r.light_plane->to_string() : "none") << " ("
       << r.light_candidates << " candidates)\n";
    os << "  9-configurations     " << r.nine_count;
    for (const auto& [t, n] : r.nine_types) os << ' ' << t << '^' << n;
    os << "\n  17-configurations    " << r.seventeen << '\n';
  }
  if (r.feasibility) {
    os << "  constraints         ";
    for (int i = 0; i < 4; ++i)
      os << ' ' << FeasibilityReport::kNames[i] << (r.feasibility->pass[i] ? " ok" : " FAIL");
    os << '\n';
  }
  if (r.aut) {
    os << "  #Aut (GL)            " << r.aut->collineations << '\n';
    os << "  self-dual            " << (r.aut->self_dual ? "yes" : "no") << " (with correlations "
       << r.aut->with_correlations() << ")\n";
  }
  return os.str();
}

}  // namespace subcode

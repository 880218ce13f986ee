#include "subcode/pg42.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "subcode/geometry.hpp"

namespace subcode {

namespace {

PointMask bit(unsigned p) { return PointMask{1} << p; }

std::vector<unsigned> points_of(PointMask m) {
  std::vector<unsigned> out;
  while (m) {
    out.push_back(static_cast<unsigned>(__builtin_ctzll(m)));
    m &= m - 1;
  }
  return out;
}

bool is_line(LineMask l) {
  if (popcount(l) != 3 || (l & 1u)) return false;
  const auto p = points_of(l);
  return (p[0] ^ p[1]) == p[2];
}

std::vector<LineMask> lines_inside(PointMask m) {
  std::vector<LineMask> out;
  for (LineMask l : all_lines(kPg42Dim))
    if ((l & ~m) == 0) out.push_back(l);
  return out;
}

}  // namespace

std::vector<LineMask> all_lines(int n) {
  if (n < 2 || n > kMaxBinaryDim) throw std::invalid_argument("all_lines: n out of range");
  std::vector<LineMask> out;
  const unsigned top = 1u << n;
  for (unsigned a = 1; a < top; ++a)
    for (unsigned b = a + 1; b < top; ++b)
      if ((a ^ b) > b) out.push_back(bit(a) | bit(b) | bit(a ^ b));
  std::sort(out.begin(), out.end());
  return out;
}

PointMask span_mask(PointMask points) {
  PointMask span = 1;
  for (unsigned p : points_of(points & ~PointMask{1})) {
    if (span & bit(p)) continue;
    PointMask grown = span;
    for (unsigned x : points_of(span)) grown |= bit(x ^ p);
    span = grown;
  }
  return span & ~PointMask{1};
}

PointMask PartialSpread::covered() const {
  PointMask m = 0;
  for (LineMask l : lines) m |= l;
  return m;
}

bool PartialSpread::valid() const {
  PointMask seen = 0;
  for (LineMask l : lines) {
    if (!is_line(l) || (l & ~kPg42Points) || (seen & l)) return false;
    seen |= l;
  }
  return true;
}

std::vector<LineMask> PartialSpread::sorted() const {
  std::vector<LineMask> s = lines;
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<Subspace> PartialSpread::subspaces() const {
  std::vector<Subspace> out;
  for (LineMask l : lines) out.push_back(subspace_from_mask(kPg42Dim, l));
  return out;
}

std::optional<Regulus> regulus_of(LineMask a, LineMask b, LineMask c) {
  if ((a & b) || (a & c) || (b & c)) return std::nullopt;
  if (popcount(span_mask(a | b | c)) != 15) return std::nullopt;
  return Regulus{a, b, c};
}

std::vector<LineMask> transversals(LineMask a, LineMask b, LineMask c) {
  std::vector<LineMask> out;
  for (LineMask m : all_lines(kPg42Dim))
    if (popcount(m & a) == 1 && popcount(m & b) == 1 && popcount(m & c) == 1) out.push_back(m);
  return out;
}

Regulus opposite_regulus(const Regulus& r) {
  if (!regulus_of(r[0], r[1], r[2])) throw std::invalid_argument("not a regulus");
  const auto t = transversals(r[0], r[1], r[2]);
  if (t.size() != 3) throw std::logic_error("a regulus of PG(3,2) has three transversals");
  return {t[0], t[1], t[2]};
}

std::string type_name(SpreadType t) {
  switch (t) {
    case SpreadType::X: return "X";
    case SpreadType::E: return "E";
    case SpreadType::IDelta: return "IDelta";
    case SpreadType::IDeltaPrime: return "IDelta'";
  }
  return "?";
}

std::optional<SpreadType> parse_type(const std::string& s) {
  if (s == "X") return SpreadType::X;
  if (s == "E") return SpreadType::E;
  if (s == "IDelta" || s == "ID") return SpreadType::IDelta;
  if (s == "IDelta'" || s == "IDeltaPrime" || s == "ID'") return SpreadType::IDeltaPrime;
  return std::nullopt;
}

SpreadProfile profile(const PartialSpread& ps) {
  if (ps.lines.size() != 9 || !ps.valid()) throw std::invalid_argument("profile expects a partial spread of 9 lines");
  SpreadProfile pr;
  pr.holes = kPg42Points & ~ps.covered();
  if (popcount(pr.holes) != 4) throw std::logic_error("expected 4 holes");
  pr.plane = span_mask(pr.holes);
  pr.line = pr.plane & ~pr.holes;
  if (popcount(pr.plane) != 7 || !is_line(pr.line)) throw std::logic_error("holes are not a plane minus a line");

  const auto& l = ps.lines;
  pr.regulus_count.assign(l.size(), 0);
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j)
      for (std::size_t k = j + 1; k < l.size(); ++k)
        if (auto r = regulus_of(l[i], l[j], l[k])) {
          pr.reguli.push_back(*r);
          ++pr.regulus_count[i];
          ++pr.regulus_count[j];
          ++pr.regulus_count[k];
        }
  if (pr.reguli.size() != 4) throw std::logic_error("expected 4 reguli");
  for (std::size_t i = 0; i < l.size(); ++i) {
    const int meet = popcount(l[i] & pr.line);
    const int want = meet == 3 ? 4 : meet == 1 ? 2 : 1;
    if (pr.regulus_count[i] != want) throw std::logic_error("regulus membership contradicts the position of L");
  }

  const bool has_l = std::any_of(pr.regulus_count.begin(), pr.regulus_count.end(), [](int c) { return c == 4; });
  auto all_of_regulus = [&](auto pred) {
    return std::any_of(pr.reguli.begin(), pr.reguli.end(),
                       [&](const Regulus& r) { return std::all_of(r.begin(), r.end(), pred); });
  };
  if (has_l)
    pr.pattern = SpreadType::X;
  else if (all_of_regulus([&](LineMask m) { return (m & pr.line) != 0; }))
    pr.pattern = SpreadType::E;
  else if (all_of_regulus([&](LineMask m) { return (m & pr.plane) == 0; }))
    pr.pattern = SpreadType::IDelta;
  else
    throw std::logic_error("regulus pattern matches no known type");
  return pr;
}

namespace {

PartialSpread type_x() {
  const BinaryStructure spread = to_binary(plane_spread_field_reduction(2));
  // Hyperplane x_6 = 0 is the set of even points; p -> p >> 1 drops the last coordinate.
  PointMask even = 0;
  for (unsigned p = 2; p < 64; p += 2) even |= bit(p);
  PartialSpread ps;
  for (PointMask plane : spread.blocks) {
    PointMask section = plane & even;
    if (popcount(section) == 7) {
      const auto p = points_of(section);
      section = bit(p[0]) | bit(p[1]) | bit(p[0] ^ p[1]);
    }
    LineMask l = 0;
    for (unsigned p : points_of(section)) l |= bit(p >> 1);
    ps.lines.push_back(l);
  }
  std::sort(ps.lines.begin(), ps.lines.end());
  return ps;
}

PartialSpread type_e() {
  const PartialSpread x = type_x();
  const SpreadProfile pr = profile(x);
  for (const Regulus& r : pr.reguli) {
    PartialSpread e;
    for (LineMask l : x.lines)
      if (std::find(r.begin(), r.end(), l) == r.end()) e.lines.push_back(l);
    for (LineMask l : opposite_regulus(r)) e.lines.push_back(l);
    std::sort(e.lines.begin(), e.lines.end());
    if (profile(e).pattern == SpreadType::E) return e;
  }
  throw std::logic_error("no regulus swap of X gives type E");
}

struct IDeltaFrame {
  std::array<LineMask, 3> base{};
  std::array<PointMask, 4> solids{};  // H1, H2, H3, H4
  LineMask l = 0;
  PointMask e = 0;
};

IDeltaFrame idelta_frame() {
  const auto lines = all_lines(kPg42Dim);
  IDeltaFrame fr;
  bool found = false;
  for (std::size_t i = 0; i < lines.size() && !found; ++i)
    for (std::size_t j = i + 1; j < lines.size() && !found; ++j) {
      if (lines[i] & lines[j]) continue;
      for (std::size_t k = j + 1; k < lines.size() && !found; ++k) {
        if ((lines[k] & lines[i]) || (lines[k] & lines[j])) continue;
        if (span_mask(lines[i] | lines[j] | lines[k]) != kPg42Points) continue;
        fr.base = {lines[i], lines[j], lines[k]};
        found = true;
      }
    }
  const auto& b = fr.base;
  fr.solids[0] = span_mask(b[1] | b[2]);
  fr.solids[1] = span_mask(b[0] | b[2]);
  fr.solids[2] = span_mask(b[0] | b[1]);
  fr.l = fr.solids[0] & fr.solids[1] & fr.solids[2];
  if (!is_line(fr.l)) throw std::logic_error("the three solids do not meet in a line");

  const auto others = points_of(kPg42Points & ~fr.l);
  int planes = 0;
  for (unsigned p : others) {
    const PointMask e = span_mask(fr.l | bit(p));
    if (e == fr.e) continue;
    if ((e & fr.solids[0]) == fr.l && (e & fr.solids[1]) == fr.l && (e & fr.solids[2]) == fr.l) {
      fr.e = e;
      ++planes;
    }
  }
  if (planes == 0) throw std::logic_error("no plane E");
  int solids = 0;
  for (unsigned p : others)
    for (unsigned r : others) {
      const PointMask h = span_mask(fr.l | bit(p) | bit(r));
      if (popcount(h) != 15 || h == fr.solids[3]) continue;
      if (h == fr.solids[0] || h == fr.solids[1] || h == fr.solids[2]) continue;
      if ((h & fr.e) == fr.l) {
        if (solids && h != fr.solids[3]) throw std::logic_error("H4 is not unique");
        fr.solids[3] = h;
        solids = 1;
      }
    }
  if (!solids) throw std::logic_error("no solid H4");
  return fr;
}

std::vector<std::array<LineMask, 3>> wirings(const IDeltaFrame& fr) {
  const PointMask used = fr.base[0] | fr.base[1] | fr.base[2];
  std::array<std::vector<LineMask>, 3> cand;
  for (int i = 0; i < 3; ++i)
    for (LineMask m : lines_inside(fr.solids[i]))
      if (!(m & used)) cand[i].push_back(m);
  std::vector<std::array<LineMask, 3>> out;
  for (LineMask a : cand[0])
    for (LineMask b : cand[1])
      for (LineMask c : cand[2])
        if (!(a & b) && !(a & c) && !(b & c)) out.push_back({a, b, c});
  return out;
}

PartialSpread type_idelta(int which) {
  const IDeltaFrame fr = idelta_frame();
  const auto w = wirings(fr);
  if (w.empty()) throw std::logic_error("no admissible L_i'");
  const auto& lp = w.front();
  LineMask lprime = 0;
  for (LineMask m : lp) {
    const PointMask y = m & fr.solids[3];
    if (popcount(y) != 1) throw std::logic_error("L_i' must meet H4 in a point");
    lprime |= y;
  }
  if (!is_line(lprime)) throw std::logic_error("L' is not a line");

  // Spreads of H4 through L and L': three more lines covering the other 9 points.
  std::vector<LineMask> free;
  for (LineMask m : lines_inside(fr.solids[3]))
    if (!(m & (fr.l | lprime))) free.push_back(m);
  std::vector<std::array<LineMask, 3>> completions;
  for (std::size_t i = 0; i < free.size(); ++i)
    for (std::size_t j = i + 1; j < free.size(); ++j)
      for (std::size_t k = j + 1; k < free.size(); ++k)
        if (!(free[i] & free[j]) && !(free[i] & free[k]) && !(free[j] & free[k]))
          completions.push_back({free[i], free[j], free[k]});
  if (completions.size() != 2) throw std::logic_error("expected two completions of L, L'");

  PartialSpread ps;
  for (LineMask m : fr.base) ps.lines.push_back(m);
  for (LineMask m : lp) ps.lines.push_back(m);
  for (LineMask m : completions[which]) ps.lines.push_back(m);
  std::sort(ps.lines.begin(), ps.lines.end());
  return ps;
}

}  // namespace

PartialSpread construct_type(SpreadType t) {
  switch (t) {
    case SpreadType::X: return type_x();
    case SpreadType::E: return type_e();
    case SpreadType::IDelta: return type_idelta(0);
    case SpreadType::IDeltaPrime: return type_idelta(1);
  }
  throw std::invalid_argument("unknown spread type");
}

std::vector<PartialSpread> idelta_wirings() {
  const IDeltaFrame fr = idelta_frame();
  std::vector<PartialSpread> out;
  for (const auto& w : wirings(fr)) {
    PartialSpread ps;
    for (LineMask m : fr.base) ps.lines.push_back(m);
    for (LineMask m : w) ps.lines.push_back(m);
    std::sort(ps.lines.begin(), ps.lines.end());
    out.push_back(ps);
  }
  return out;
}

SpreadType identify(const PartialSpread& ps, std::uint64_t budget) {
  const SpreadType pattern = profile(ps).pattern;
  if (pattern != SpreadType::IDelta) return pattern;
  static const BinaryStructure plain = construct_type(SpreadType::IDelta).structure();
  static const BinaryStructure prime = construct_type(SpreadType::IDeltaPrime).structure();
  if (find_isomorphism(ps.structure(), plain, budget)) return SpreadType::IDelta;
  if (find_isomorphism(ps.structure(), prime, budget)) return SpreadType::IDeltaPrime;
  throw std::logic_error("IDelta pattern matches neither representative");
}

Classification classify_all_size9(std::uint64_t budget) {
  const auto lines = all_lines(kPg42Dim);
  const LineMask l0 = lines[0];
  LineMask l1 = 0;
  for (LineMask m : lines)
    if (!(m & l0)) {
      l1 = m;
      break;
    }
  std::vector<LineMask> cand;
  for (LineMask m : lines)
    if (!(m & (l0 | l1))) cand.push_back(m);

  Classification out;
  struct Rep {
    PartialSpread ps;
    std::uint64_t hits;
  };
  std::map<std::tuple<int, std::uint64_t>, std::vector<Rep>> reps;
  std::uint64_t nodes = 0;
  std::vector<LineMask> chosen{l0, l1};

  auto leaf = [&]() {
    ++out.leaves;
    PartialSpread ps{chosen};
    const int pattern = static_cast<int>(profile(ps).pattern);
    const BinaryStructure s = ps.structure();
    auto& bucket = reps[{pattern, refine(s).fingerprint}];
    for (auto& r : bucket) {
      ++out.iso_tests;
      if (find_isomorphism(s, r.ps.structure(), budget)) {
        ++r.hits;
        return;
      }
    }
    bucket.push_back({ps, 1});
  };

  auto dfs = [&](auto&& self, std::size_t start, PointMask covered) -> void {
    if (++nodes > budget) throw BudgetExceeded(nodes);
    if (chosen.size() == 9) {
      leaf();
      return;
    }
    const std::size_t need = 9 - chosen.size();
    for (std::size_t i = start; i + need <= cand.size(); ++i) {
      if (cand[i] & covered) continue;
      chosen.push_back(cand[i]);
      self(self, i + 1, covered | cand[i]);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, l0 | l1);

  for (auto& [key, bucket] : reps)
    for (auto& r : bucket) out.classes.push_back({identify(r.ps, budget), r.ps, r.hits});
  std::sort(out.classes.begin(), out.classes.end(),
            [](const SpreadClass& a, const SpreadClass& b) { return a.type < b.type; });
  return out;
}

std::string orbit_string(const std::vector<int>& sizes) {
  std::vector<int> s = sizes;
  std::sort(s.rbegin(), s.rend());
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    if (!out.empty()) out += ' ';
    out += std::to_string(s[i]) + "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

SpreadAutData spread_aut_and_orbits(const PartialSpread& ps, std::uint64_t budget) {
  if (!ps.valid()) throw std::invalid_argument("not a partial spread");
  const auto group = automorphisms(ps.structure(), budget);
  SpreadAutData d;
  d.order = group.size();
  for (const auto& o : point_orbits(group, ps.covered())) d.orbits.push_back(static_cast<int>(o.size()));
  std::sort(d.orbits.rbegin(), d.orbits.rend());
  for (int s : d.orbits) d.doubled_orbits.push_back(2 * s);
  return d;
}

BinaryStructure nine_configuration_planes(const PartialSpread& ps) {
  BinaryStructure s;
  s.n = 6;
  for (LineMask l : ps.lines) {
    PointMask plane = bit(1);
    for (unsigned p : points_of(l)) plane |= bit(p << 1) | bit((p << 1) | 1u);
    s.blocks.push_back(plane);
  }
  std::sort(s.blocks.begin(), s.blocks.end());
  return s;
}

}  // namespace subcode

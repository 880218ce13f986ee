#include "subcode/analysis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "subcode/geometry.hpp"

namespace subcode {

namespace {

void require_binary_plane_code(const SubspaceCode& c, const char* what) {
  if (c.field().order() != 2 || c.ambient() != 6 || (c.size() > 0 && c.constant_dim() != 3))
    throw std::invalid_argument(std::string(what) + " needs planes of PG(5,2)");
}

// Point masks of all k-flats of PG(5, 2), computed once.
const std::vector<PointMask>& binary_flats(int k) {
  static const std::array<std::vector<PointMask>, 7> table = [] {
    std::array<std::vector<PointMask>, 7> t;
    const Geometry g(GaloisField::get(2), 6);
    for (int dim = 1; dim <= 6; ++dim)
      g.for_each_flat(dim, [&](const Subspace& s) { t[dim].push_back(point_mask(s)); });
    return t;
  }();
  return table.at(k);
}

std::array<int, 64> binary_degrees(const BinaryStructure& s) {
  std::array<int, 64> deg{};
  for (PointMask b : s.blocks) {
    PointMask m = b;
    while (m) {
      ++deg[__builtin_ctzll(m)];
      m &= m - 1;
    }
  }
  return deg;
}

// Image of x in V/P, realised on the coordinates other than the highest bit of P.
unsigned quotient_point(unsigned x, unsigned p) {
  const int h = 31 - __builtin_clz(p);
  if (x >> h & 1u) x ^= p;
  const unsigned low = x & ((1u << h) - 1u);
  const unsigned high = x >> (h + 1);
  return (high << h) | low;
}

}  // namespace

DistanceResult min_distance_pair(const SubspaceCode& c, int threads) { return min_distance_pair(c.members(), threads); }

DistanceResult min_distance_pair(const std::vector<Subspace>& c, int threads) {
  const std::size_t n = c.size();
  if (n < 2) throw std::invalid_argument("minimum distance needs at least two codewords");
  using Best = std::tuple<int, std::size_t, std::size_t>;
  auto scan = [&](std::size_t start, std::size_t step) {
    Best best{1 << 30, 0, 0};
    for (std::size_t i = start; i < n; i += step)
      for (std::size_t j = i + 1; j < n; ++j) {
        const int d = subspace_distance(c[i], c[j]);
        if (Best{d, i, j} < best) best = {d, i, j};
      }
    return best;
  };
  Best best;
  if (threads <= 1) {
    best = scan(0, 1);
  } else {
    std::vector<Best> part(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] { part[t] = scan(static_cast<std::size_t>(t), static_cast<std::size_t>(threads)); });
    for (auto& th : pool) th.join();
    best = *std::min_element(part.begin(), part.end());
  }
  return {std::get<0>(best), std::get<1>(best), std::get<2>(best)};
}

int min_distance(const SubspaceCode& c, int threads) { return min_distance_pair(c, threads).distance; }

Histogram degree_distribution(const SubspaceCode& c) {
  std::unordered_map<Subspace, int, SubspaceHash> deg;
  for (const auto& e : c.members()) for_each_subspace(e, 1, [&](const Subspace& p) { ++deg[p]; });
  Histogram h;
  for (const auto& [p, r] : deg) ++h[r];
  const std::uint64_t points = gaussian(c.ambient(), 1, c.field().order());
  if (points > deg.size()) h[0] += points - deg.size();
  return h;
}

std::string histogram_string(const Histogram& h) {
  std::string out;
  for (const auto& [k, n] : h) {
    if (n == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(k) + "^" + std::to_string(n);
  }
  return out;
}

Histogram s_profile(const SubspaceCode& c, const Subspace& s) {
  Histogram h;
  for (const auto& e : c.members()) ++h[e.dim() + s.dim() - join_dim(e, s)];
  return h;
}

Histogram intersection_profile(const SubspaceCode& c) {
  Histogram h;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) ++h[c[i].dim() + c[j].dim() - join_dim(c[i], c[j])];
  return h;
}

LightPlaneResult find_light_plane(const SubspaceCode& c) {
  require_binary_plane_code(c, "find_light_plane");
  const auto deg = binary_degrees(to_binary(c));
  PointMask light = 0, heavy = 0;
  for (unsigned p = 1; p < 64; ++p) {
    if (deg[p] <= 6) light |= PointMask{1} << p;
    if (deg[p] >= 8) heavy |= PointMask{1} << p;
  }
  const PointMask all = ~PointMask{1};
  LightPlaneResult r;
  for (PointMask e : binary_flats(3)) {
    if ((e & ~light) || ((all & ~e) & ~heavy)) continue;
    ++r.candidates;
    if (r.candidates == 1)
      r.plane = subspace_from_mask(6, e);
    else
      r.plane.reset();
  }
  return r;
}

std::vector<NineConfiguration> nine_configurations(const SubspaceCode& c, std::uint64_t budget) {
  require_binary_plane_code(c, "nine_configurations");
  const BinaryStructure s = to_binary(c);
  const auto deg = binary_degrees(s);
  std::vector<NineConfiguration> out;
  for (unsigned p = 1; p < 64; ++p) {
    if (deg[p] != 9) continue;
    NineConfiguration nc;
    nc.point = p;
    for (PointMask b : s.blocks) {
      if (!(b >> p & 1u)) continue;
      LineMask l = 0;
      PointMask m = b & ~(PointMask{1} << p);
      while (m) {
        l |= PointMask{1} << quotient_point(static_cast<unsigned>(__builtin_ctzll(m)), p);
        m &= m - 1;
      }
      nc.derived.lines.push_back(l);
    }
    std::sort(nc.derived.lines.begin(), nc.derived.lines.end());
    nc.type = identify(nc.derived, budget);
    out.push_back(std::move(nc));
  }
  return out;
}

std::uint64_t seventeen_config_count(const SubspaceCode& c) {
  require_binary_plane_code(c, "seventeen_config_count");
  const BinaryStructure s = to_binary(c);
  const auto deg = binary_degrees(s);
  PointMask nine = 0;
  for (unsigned p = 1; p < 64; ++p)
    if (deg[p] == 9) nine |= PointMask{1} << p;
  std::uint64_t twice = 0;
  for (unsigned p = 1; p < 64; ++p) {
    if (!(nine >> p & 1u)) continue;
    PointMask joined = 0;
    for (PointMask b : s.blocks)
      if (b >> p & 1u) joined |= b;
    twice += static_cast<std::uint64_t>(popcount(joined & nine & ~(PointMask{1} << p)));
  }
  return twice / 2;
}

FeasibilityReport feasibility_check(const SubspaceCode& c) {
  require_binary_plane_code(c, "feasibility_check");
  const BinaryStructure s = to_binary(c);
  FeasibilityReport r;
  std::unordered_map<PointMask, int> line_count;
  for (PointMask b : s.blocks)
    for (PointMask l : binary_flats(2))
      if ((l & ~b) == 0) r.worst[0] = std::max(r.worst[0], ++line_count[l]);
  const auto deg = binary_degrees(s);
  r.worst[1] = *std::max_element(deg.begin(), deg.end());
  auto contained = [&](PointMask h) {
    int n = 0;
    for (PointMask b : s.blocks)
      if ((b & ~h) == 0) ++n;
    return n;
  };
  for (PointMask h : binary_flats(5)) r.worst[2] = std::max(r.worst[2], contained(h));
  for (PointMask h : binary_flats(4)) r.worst[3] = std::max(r.worst[3], contained(h));
  const std::array<int, 4> limit{1, 9, 9, 1};
  for (int i = 0; i < 4; ++i) r.pass[i] = r.worst[i] <= limit[i];
  return r;
}

MaximalityReport is_maximal(const SubspaceCode& c, int d) {
  const int k = c.constant_dim();
  if (k <= 0) throw std::invalid_argument("is_maximal needs a nonempty constant-dimension code");
  MaximalityReport r;
  const Geometry g(c.field(), c.ambient());
  g.for_each_flat(k, [&](const Subspace& e) {
    if (c.contains(e)) return;
    ++r.planes_checked;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (subspace_distance(e, c[j]) < d) {
        r.blocked.emplace_back(e, j);
        return;
      }
    r.addable.push_back(e);
  });
  r.maximal = r.addable.empty();
  return r;
}

std::uint64_t partial_spread_max(int v, int q) {
  if (v < 4) throw std::invalid_argument("partial_spread_max needs v >= 4");
  const std::uint64_t Q = static_cast<std::uint64_t>(q);
  // q^(v-2) + q^(v-4) + ... down to q^2 (v even) or q^3 (v odd), plus 1.
  std::uint64_t sum = 1;
  const int low = v % 2 == 0 ? 2 : 3;
  for (int e = v - 2; e >= low; e -= 2) {
    std::uint64_t p = 1;
    for (int i = 0; i < e; ++i) p *= Q;
    sum += p;
  }
  return sum;
}

std::string BoundResult::trace() const {
  std::ostringstream os;
  os << "t = " << t << "; gauss(v,t-1)/gauss(k,t-1) = " << numerator << "/" << denominator << "; inner A_q("
     << inner_v << ",d;" << inner_k << ") = ";
  if (inner)
    os << *inner << " (" << inner_rule << ")";
  else
    os << "unknown (" << inner_rule << ")";
  if (value) os << "; bound = " << *value;
  return os.str();
}

BoundResult recursive_bound(const BoundQuery& bq) {
  const auto [v, d, k, q] = bq;
  if (k < 1 || k > v - 1 || d <= 0 || d % 2 != 0 || d > 2 * std::min(k, v - k))
    throw std::invalid_argument("invalid bound query");
  (void)GaloisField::get(q);
  BoundResult r;
  const int delta = d / 2;
  r.t = k - delta + 1;
  r.numerator = gaussian(v, r.t - 1, q);
  r.denominator = gaussian(k, r.t - 1, q);
  r.inner_v = v - k + delta;
  r.inner_k = delta;
  const int n = r.inner_v;
  if (n % delta == 0) {
    std::uint64_t num = 1, den = 1;
    for (int i = 0; i < n; ++i) num *= static_cast<std::uint64_t>(q);
    for (int i = 0; i < delta; ++i) den *= static_cast<std::uint64_t>(q);
    r.inner = (num - 1) / (den - 1);
    r.inner_rule = "spread";
  } else if (delta == 2) {
    r.inner = partial_spread_max(n, q);
    r.inner_rule = "partial line spread";
  } else {
    r.inner_rule = "no formula";
  }
  if (r.inner) {
    const unsigned __int128 top = static_cast<unsigned __int128>(r.numerator) * *r.inner;
    r.value = static_cast<std::uint64_t>(top / r.denominator);
  }
  return r;
}

AutReport automorphism_order(const SubspaceCode& c, std::uint64_t budget) {
  const BinaryStructure s = to_binary(c);
  AutReport r;
  r.collineations = automorphisms(s, budget).size();
  r.self_dual = find_isomorphism(s, to_binary(dual_code(c)), budget).has_value();
  return r;
}

bool are_isomorphic(const SubspaceCode& a, const SubspaceCode& b, std::uint64_t budget) {
  if (a.field().order() != b.field().order() || a.ambient() != b.ambient() || a.size() != b.size()) return false;
  if (a.constant_dim() != b.constant_dim()) return false;
  if (a.field().order() != 2) throw std::invalid_argument("isomorphism tests are implemented for q = 2");
  if (degree_distribution(a) != degree_distribution(b)) return false;
  if (intersection_profile(a) != intersection_profile(b)) return false;
  return find_isomorphism(to_binary(a), to_binary(b), budget).has_value();
}

CodeReport analyze(const SubspaceCode& c, const AnalyzeOptions& opt) {
  CodeReport r;
  r.v = c.ambient();
  r.q = c.field().order();
  r.k = c.constant_dim();
  r.size = c.size();
  if (c.size() >= 2) r.distance = min_distance(c, opt.threads);
  r.degrees = degree_distribution(c);
  if (r.k > 0 && r.k < r.v) r.s_profile = s_profile(c, special_flat(c.field(), r.v, r.k));
  r.binary_analytics = r.q == 2 && r.v == 6 && r.k == 3;
  if (r.binary_analytics) {
    const LightPlaneResult lp = find_light_plane(c);
    r.light_plane = lp.plane;
    r.light_candidates = lp.candidates;
    const auto nine = nine_configurations(c, opt.budget);
    r.nine_count = nine.size();
    for (const auto& nc : nine) ++r.nine_types[type_name(nc.type)];
    r.seventeen = seventeen_config_count(c);
    r.feasibility = feasibility_check(c);
  }
  if (opt.aut) {
    if (r.q != 2 || r.v > kMaxBinaryDim) throw std::invalid_argument("automorphism search needs q = 2 and v <= 6");
    r.aut = automorphism_order(c, opt.budget);
  }
  return r;
}

}  // namespace subcode

#include <doctest.h>

#include <set>

#include "subcode/analysis.hpp"
#include "subcode/constructions.hpp"
#include "subcode/geometry.hpp"
#include "support.hpp"

using namespace subcode;

namespace {

const SubspaceCode& type_a() {
  static const SubspaceCode c = construction_a(2);
  return c;
}

// Degree of every point by scanning the oracle point list.
Histogram oracle_degrees(const SubspaceCode& c) {
  Histogram h;
  const int q = c.field().order();
  int total = 1;
  for (int i = 0; i < c.ambient(); ++i) total *= q;
  for (int code = 1; code < total; ++code) {
    std::vector<Fq> x(c.ambient());
    int r = code;
    for (auto& e : x) {
      e = static_cast<Fq>(r % q);
      r /= q;
    }
    int lead = 0;
    while (x[lead] == 0) ++lead;
    if (x[lead] != 1) continue;
    int deg = 0;
    for (const auto& e : c.members()) deg += e.contains_vector(x);
    ++h[deg];
  }
  return h;
}

SubspaceCode random_subcode(const SubspaceCode& c, std::size_t size, std::mt19937_64& g) {
  std::vector<Subspace> m = c.members();
  std::shuffle(m.begin(), m.end(), g);
  m.resize(size);
  return SubspaceCode(c.field(), c.ambient(), m);
}

}  // namespace

TEST_CASE("minimum distance pairs") {
  auto g = oracle::rng(70);
  const GaloisField& f = GaloisField::get(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Subspace> m;
    for (int i = 0; i < 30; ++i) m.push_back(oracle::random_subspace_exact(f, 3, 6, g));
    int best = 99;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) best = std::min(best, subspace_distance(m[i], m[j]));
    const DistanceResult serial = min_distance_pair(m, 1);
    const DistanceResult par = min_distance_pair(m, 3);
    CHECK(serial.distance == best);
    CHECK(par.distance == best);
    CHECK(par.first == serial.first);
    CHECK(par.second == serial.second);
    CHECK(subspace_distance(m[serial.first], m[serial.second]) == best);
  }
  std::vector<Subspace> dup{type_a()[0], type_a()[1], type_a()[0]};
  CHECK(min_distance_pair(dup).distance == 0);
  CHECK_THROWS_AS(min_distance_pair(std::vector<Subspace>{type_a()[0]}), std::invalid_argument);
}

TEST_CASE("degree distribution of construction A") {
  const Histogram h = degree_distribution(type_a());
  CHECK(h == oracle_degrees(type_a()));
  CHECK(histogram_string(h) == "5^7 9^56");
  std::uint64_t incidences = 0;
  for (const auto& [d, n] : h) incidences += d * n;
  CHECK(incidences == 77 * 7);
  CHECK(histogram_string({}) == "");
  const SubspaceCode a3 = construction_a(3);
  CHECK(degree_distribution(a3) == oracle_degrees(a3));
}

TEST_CASE("S-profile, light plane and intersection profile") {
  const Subspace s = special_flat(GaloisField::get(2), 6, 3);
  CHECK(histogram_string(s_profile(type_a(), s)) == "0^56 1^14 2^7");
  const LightPlaneResult lp = find_light_plane(type_a());
  CHECK(lp.candidates == 1);
  REQUIRE(lp.plane.has_value());
  CHECK(*lp.plane == s);
  CHECK(lp.plane->to_string() == "000100,000010,000001");
  const Histogram ip = intersection_profile(type_a());
  std::uint64_t pairs = 0;
  for (const auto& [d, n] : ip) {
    CHECK(d <= 1);
    pairs += n;
  }
  CHECK(pairs == 77 * 76 / 2);
  // LMRD: no light plane.
  const SubspaceCode lmrd = lift_gabidulin(2);
  CHECK(histogram_string(s_profile(lmrd, s)) == "0^64");
  CHECK_THROWS_AS(find_light_plane(construction_a(3)), std::invalid_argument);
}

TEST_CASE("nine- and seventeen-configurations of construction A") {
  const auto nine = nine_configurations(type_a());
  CHECK(nine.size() == 56);
  int x = 0, e = 0;
  for (const auto& n : nine) {
    CHECK(n.derived.lines.size() == 9);
    CHECK(n.derived.valid());
    x += n.type == SpreadType::X;
    e += n.type == SpreadType::E;
  }
  CHECK(x == 28);
  CHECK(e == 28);
  CHECK(seventeen_config_count(type_a()) == 1428);
  CHECK(seventeen_config_count(lift_gabidulin(2)) == 0);
}

TEST_CASE("size lemmas hold on random subcodes") {
  auto g = oracle::rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t size = 73 + g() % 5;
    const SubspaceCode c = random_subcode(type_a(), size, g);
    const Histogram h = degree_distribution(c);
    CHECK(h.rbegin()->first >= 9);
    CHECK(!nine_configurations(c).empty());
    if (size >= 74) CHECK(seventeen_config_count(c) > 0);
  }
}

TEST_CASE("feasibility") {
  for (const SubspaceCode& c : {type_a(), core_plus_s(2), construction_a_core(2), lift_gabidulin(2)}) {
    const auto r = feasibility_check(c);
    CHECK(r.all());
    CHECK(feasibility_check(dual_code(c)).all());
  }
  // Two planes through a common line break the first family.
  const GaloisField& f = GaloisField::get(2);
  const Subspace a = Subspace::span(Matrix::from_rows(f, 6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}}));
  const Subspace b = Subspace::span(Matrix::from_rows(f, 6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}}));
  const auto bad = feasibility_check(SubspaceCode(f, 6, {a, b}));
  CHECK_FALSE(bad.pass[0]);
  CHECK(bad.worst[0] == 2);
}

TEST_CASE("maximality") {
  const auto full = is_maximal(type_a(), 4);
  CHECK(full.maximal);
  CHECK(full.planes_checked == 1395 - 77);
  CHECK(full.addable.empty());
  for (const auto& [plane, idx] : full.blocked) CHECK(subspace_distance(plane, type_a()[idx]) < 4);
  const auto core = is_maximal(construction_a_core(2), 4);
  CHECK_FALSE(core.maximal);
  CHECK(core.addable.size() == 8);
  const auto cps = is_maximal(core_plus_s(2), 4);
  CHECK(cps.maximal);
  CHECK(core_plus_s(2).size() == 71);
}

TEST_CASE("bounds") {
  CHECK(partial_spread_max(4, 2) == 5);
  CHECK(partial_spread_max(5, 2) == 9);
  CHECK(partial_spread_max(6, 2) == 21);
  CHECK(partial_spread_max(4, 3) == 10);
  CHECK(partial_spread_max(5, 3) == 28);
  CHECK(partial_spread_max(7, 2) == 41);
  CHECK_THROWS_AS(partial_spread_max(3, 2), std::invalid_argument);
  const auto b = recursive_bound({6, 4, 3, 2});
  REQUIRE(b.value.has_value());
  CHECK(*b.value == 81);
  CHECK(b.t == 2);
  CHECK(b.numerator == 63);
  CHECK(b.denominator == 7);
  CHECK(b.inner == 9);
  CHECK(!b.trace().empty());
  for (int q : {2, 3, 4, 5, 7}) {
    const std::uint64_t Q = static_cast<std::uint64_t>(q);
    CHECK(recursive_bound({6, 4, 3, q}).value == (Q * Q * Q + 1) * (Q * Q * Q + 1));
  }
  CHECK(recursive_bound({6, 4, 3, 3}).value == 784);
  CHECK_FALSE(recursive_bound({13, 6, 5, 2}).value.has_value());
  CHECK(recursive_bound({5, 4, 2, 2}).value == 9);
  CHECK_THROWS_AS(recursive_bound({6, 5, 3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(recursive_bound({6, 4, 3, 6}), std::invalid_argument);
}

TEST_CASE("automorphisms and isomorphism") {
  const AutReport aut = automorphism_order(type_a());
  CHECK(aut.collineations == 168);
  CHECK(aut.self_dual);
  CHECK(aut.with_correlations() == 336);
  CHECK(are_isomorphic(type_a(), dual_code(type_a())));
  CHECK_FALSE(are_isomorphic(type_a(), core_plus_s(2)));
  // A random GL(6,2) image is isomorphic.
  auto g = oracle::rng(72);
  const GaloisField& f = GaloisField::get(2);
  Matrix m(f, 6, 6);
  do m = oracle::random_matrix(f, 6, 6, g);
  while (rank(m) < 6);
  std::vector<Subspace> img;
  for (const auto& e : type_a().members()) img.push_back(Subspace::span(e.cm() * m));
  CHECK(are_isomorphic(type_a(), SubspaceCode(f, 6, img)));
  CHECK_THROWS_AS(are_isomorphic(construction_a(3), construction_a(3)), std::invalid_argument);
}

TEST_CASE("full report for construction A") {
  AnalyzeOptions opt;
  opt.aut = true;
  const CodeReport r = analyze(type_a(), opt);
  CHECK(r.size == 77);
  CHECK(r.distance == 4);
  CHECK(r.k == 3);
  CHECK(histogram_string(r.degrees) == "5^7 9^56");
  CHECK(histogram_string(r.s_profile) == "0^56 1^14 2^7");
  CHECK(r.light_candidates == 1);
  CHECK(r.nine_count == 56);
  CHECK(r.nine_types == std::map<std::string, std::uint64_t>{{"E", 28}, {"X", 28}});
  CHECK(r.seventeen == 1428);
  REQUIRE(r.feasibility.has_value());
  CHECK(r.feasibility->all());
  REQUIRE(r.aut.has_value());
  CHECK(r.aut->collineations == 168);
  CHECK(r.binary_analytics);
  const CodeReport r3 = analyze(construction_a(3));
  CHECK(r3.size == 754);
  CHECK(r3.distance == 4);
  CHECK_FALSE(r3.binary_analytics);
}

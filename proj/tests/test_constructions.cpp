#include <doctest.h>

#include <map>
#include <set>
#include <unordered_map>

#include "subcode/analysis.hpp"
#include "subcode/constructions.hpp"
#include "subcode/geometry.hpp"
#include "support.hpp"

using namespace subcode;

namespace {

// Pairwise distance by brute force, independent of the threaded sweep.
int brute_min_distance(const SubspaceCode& c) {
  int best = 1 << 20;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const int s = oracle::brute_rank(vstack(c[i].cm(), c[j].cm()));
      best = std::min(best, 2 * s - c[i].dim() - c[j].dim());
    }
  return best;
}

std::map<Subspace, int> line_cover(const SubspaceCode& c, const Subspace& s) {
  std::map<Subspace, int> out;
  for (const auto& e : c.members())
    for_each_subspace(e, 2, [&](const Subspace& l) {
      if (intersect(l, s).dim() == 0) ++out[l];
    });
  return out;
}

}  // namespace

TEST_CASE("lifted Gabidulin code") {
  const SubspaceCode l2 = lift_gabidulin(2);
  CHECK(l2.size() == 64);
  CHECK(brute_min_distance(l2) == 4);
  const Subspace s = special_flat(l2.field(), 6, 3);
  const auto cover = line_cover(l2, s);
  CHECK(cover.size() == 448);
  for (const auto& [l, n] : cover) CHECK(n == 1);
  for (const auto& e : l2.members()) CHECK(intersect(e, s).dim() == 0);

  const SubspaceCode l3 = lift_gabidulin(3);
  CHECK(l3.size() == 729);
  CHECK(min_distance(l3) == 4);
  const auto cover3 = line_cover(l3, special_flat(l3.field(), 6, 3));
  CHECK(cover3.size() == 9477);
  for (const auto& [l, n] : cover3) CHECK(n == 1);
}

TEST_CASE("lift is the graph of the map") {
  const CubicExtension& ext = CubicExtension::get(3);
  auto g = oracle::rng(40);
  std::uniform_int_distribution<int> d(0, ext.order() - 1);
  for (int i = 0; i < 20; ++i) {
    const LinPoly f{static_cast<Fq3>(d(g)), static_cast<Fq3>(d(g))};
    const Subspace e = lift(ext, f);
    for (int x = 0; x < ext.order(); ++x) {
      const auto v = pair_vector(ext, static_cast<Fq3>(x), evaluate(ext, f, static_cast<Fq3>(x)));
      CHECK(e.contains_vector(v));
    }
  }
}

TEST_CASE("v0 is the first element of nonzero trace") {
  for (int q : kSupportedOrders) {
    const CubicExtension& ext = CubicExtension::get(q);
    const Fq3 v0 = choose_v0(ext);
    CHECK(ext.trace(v0) != 0);
    for (int x = 0; x < v0; ++x) CHECK(ext.trace(static_cast<Fq3>(x)) == 0);
  }
}

TEST_CASE("construction A parts at q=2 and q=3") {
  for (int q : {2, 3}) {
    const auto parts = construction_a_parts(q);
    const int q3 = q * q * q;
    CHECK(parts.old_planes.size() == static_cast<std::size_t>(q3 * q3 - q3));
    CHECK(parts.removed_planes.size() == static_cast<std::size_t>(q3));
    CHECK(parts.new_planes.size() == static_cast<std::size_t>(q3 + q * q + q));
    CHECK(parts.line_planes.size() == static_cast<std::size_t>(q * q + q + 1));
    const Subspace s = special_flat(parts.old_planes.field(), 6, 3);

    // Rearrangement: removed and new planes cover the same disjoint lines.
    CHECK(line_cover(parts.removed_planes, s) == line_cover(parts.new_planes, s));
    const auto all = line_cover(code_union(parts.old_planes, parts.new_planes), s);
    CHECK(all.size() == static_cast<std::size_t>(q3 * q3 * (q * q + q + 1)));
    for (const auto& [l, n] : all) CHECK(n == 1);

    // q new planes through each point of S.
    std::map<Subspace, int> through;
    for (const auto& e : parts.new_planes.members()) {
      const Subspace m = intersect(e, s);
      CHECK(m.dim() == 1);
      ++through[m];
    }
    CHECK(through.size() == static_cast<std::size_t>(q * q + q + 1));
    for (const auto& [p, n] : through) CHECK(n == q);

    // E(x): pairwise meeting inside S, distinct lines of S, no line already
    // covered by a new plane.
    std::set<Subspace> s_lines;
    const auto new_cover = line_cover(parts.new_planes, Subspace(s.field(), 6));
    for (std::size_t i = 0; i < parts.line_planes.size(); ++i) {
      const Subspace& e = parts.line_planes[i];
      s_lines.insert(intersect(e, s));
      CHECK(intersect(e, s).dim() == 2);
      for (std::size_t j = i + 1; j < parts.line_planes.size(); ++j)
        CHECK(s.contains(intersect(e, parts.line_planes[j])));
      for_each_subspace(e, 2, [&](const Subspace& l) { CHECK(new_cover.count(l) == 0); });
    }
    CHECK(s_lines.size() == parts.line_planes.size());
  }
}

TEST_CASE("removed planes cover the trace-zero points q times each") {
  for (int q : {2, 3}) {
    const CubicExtension& ext = CubicExtension::get(q);
    const auto parts = construction_a_parts(q);
    std::map<Subspace, int> cover;
    for (const auto& e : parts.removed_planes.members())
      for (const auto& p : subspaces_of(e, 1))
        if (intersect(p, special_flat(ext.base(), 6, 3)).dim() == 0) ++cover[p];
    std::set<Subspace> expected;
    for (int x = 1; x < ext.order(); ++x)
      for (int v = 0; v < ext.order(); ++v) {
        if (ext.trace(static_cast<Fq3>(v)) != 0) continue;
        const Fq3 xx = static_cast<Fq3>(x);
        const Fq3 y = ext.mul(ext.pow(xx, static_cast<std::uint64_t>(q + 1)), static_cast<Fq3>(v));
        Matrix m(ext.base(), 0, 6);
        m.append_row(pair_vector(ext, xx, y));
        expected.insert(Subspace::span(m));
      }
    std::set<Subspace> got;
    for (const auto& [p, n] : cover) {
      got.insert(p);
      CHECK(n == q);
    }
    CHECK(got == expected);
  }
}

TEST_CASE("construction A sizes and distances") {
  const SubspaceCode core = construction_a_core(2);
  CHECK(core.size() == 70);
  CHECK(brute_min_distance(core) == 4);
  const SubspaceCode a2 = construction_a(2);
  CHECK(a2.size() == 77);
  CHECK(brute_min_distance(a2) == 4);
  CHECK(a2.constant_dim() == 3);
  const SubspaceCode s2 = core_plus_s(2);
  CHECK(s2.size() == 71);
  CHECK(min_distance(s2) == 4);
  const Subspace s = special_flat(s2.field(), 6, 3);
  const auto parts = construction_a_parts(2);
  for (const auto& e : parts.old_planes.members()) CHECK(subspace_distance(e, s) == 6);
  CHECK(construction_a_core(3).size() == 741);
  const SubspaceCode a3 = construction_a(3);
  CHECK(a3.size() == 754);
  CHECK(min_distance(a3) == 4);
}

TEST_CASE("S-profile of construction A at q=2") {
  const SubspaceCode a2 = construction_a(2);
  std::map<int, int> prof;
  const Subspace s = special_flat(a2.field(), 6, 3);
  for (const auto& e : a2.members()) ++prof[intersect(e, s).dim()];
  CHECK(prof == std::map<int, int>{{0, 56}, {1, 14}, {2, 7}});
}

TEST_CASE("construction is deterministic") {
  CHECK(construction_a(2) == construction_a(2));
  CHECK(construction_a_parts(3).v0 == construction_a_parts(3).v0);
}

TEST_CASE("LMRD cap") {
  const auto rep = lmrd_cap_check(2);
  CHECK(rep.planes_checked == 1395);
  CHECK(rep.holds());
  CHECK(rep.s_addable);
  CHECK(rep.bound == 71);
  CHECK(rep.low_planes + rep.line_planes + 1 == 1395);
  CHECK(rep.line_planes == 7 * 14);  // 15 planes through each line of S, one of them S
}

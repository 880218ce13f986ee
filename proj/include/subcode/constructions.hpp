#pragma once

#include <cstdint>
#include <vector>

#include "subcode/fields.hpp"
#include "subcode/gabidulin.hpp"
#include "subcode/linalg.hpp"

namespace subcode {

/// <(I_3 | M_f)>, the graph {(x, f(x))} of f in coordinates.
Subspace lift(const CubicExtension& ext, const LinPoly& f);

/// The q^6 lifted Gabidulin planes, all disjoint from the special plane.
SubspaceCode lift_gabidulin(int q);

struct ConstructionAParts {
  SubspaceCode old_planes;      // lifts of codewords outside R
  SubspaceCode removed_planes;  // lifts of R
  SubspaceCode new_planes;      // N(a, b, c), each meeting S in a point
  SubspaceCode line_planes;     // E(x), each meeting S in a line
  Fq3 v0 = 0;                   // trace(v0) != 0
};

/// First element (in code order) with nonzero trace.
Fq3 choose_v0(const CubicExtension& ext);

/// Plane N(a, b, c) = {(x, c x^q - c^q x + y (a b^q - a^q b)) : x in <a,b>, y in GF(q)}.
Subspace new_plane(const CubicExtension& ext, Fq3 a, Fq3 b, Fq3 c);
/// Plane E(x) spanned by the point (x, x^(q+1) v0) and the line
/// {(0, y) : trace(y x^(-q-1)) = 0} of S.
Subspace line_plane(const CubicExtension& ext, Fq3 x, Fq3 v0);

ConstructionAParts construction_a_parts(int q);
/// Old planes and new planes: q^6 + q^2 + q members.
SubspaceCode construction_a_core(int q);
/// The core plus the q^2 + q + 1 planes E(x): q^6 + 2q^2 + 2q + 1 members.
SubspaceCode construction_a(int q);
/// The core plus the special plane S.
SubspaceCode core_plus_s(int q);

struct LmrdCapReport {
  std::uint64_t planes_checked = 0;
  std::uint64_t low_planes = 0;          // dim(E ∩ S) <= 1
  std::uint64_t low_planes_blocked = 0;  // ... containing a line already covered
  std::uint64_t line_planes = 0;         // dim(E ∩ S) = 2
  bool s_addable = false;
  std::uint64_t bound = 0;               // q^6 + q^2 + q + 1
  bool holds() const { return low_planes == low_planes_blocked && s_addable; }
};

/// Sweeps every plane of PG(5, q) against the lifted Gabidulin code.
LmrdCapReport lmrd_cap_check(int q);

}  // namespace subcode

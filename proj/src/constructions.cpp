#include "subcode/constructions.hpp"

#include <stdexcept>
#include <unordered_set>

#include "subcode/geometry.hpp"

namespace subcode {

Subspace lift(const CubicExtension& ext, const LinPoly& f) {
  return Subspace::from_canonical(hstack(Matrix::identity(ext.base(), 3), matrix_of(ext, f)));
}

SubspaceCode lift_gabidulin(int q) {
  const CubicExtension& ext = CubicExtension::get(q);
  std::vector<Subspace> planes;
  for_each_codeword(ext, [&](const LinPoly& f) { planes.push_back(lift(ext, f)); });
  return SubspaceCode(ext.base(), 6, std::move(planes));
}

Fq3 choose_v0(const CubicExtension& ext) {
  for (int x = 0; x < ext.order(); ++x)
    if (ext.trace(static_cast<Fq3>(x)) != 0) return static_cast<Fq3>(x);
  throw std::logic_error("trace is identically zero");
}

Subspace new_plane(const CubicExtension& ext, Fq3 a, Fq3 b, Fq3 c) {
  const LinPoly phi = removable_member(ext, c);  // x -> c x^q - c^q x
  const Fq3 d = ext.sub(ext.mul(a, ext.frobenius(b)), ext.mul(ext.frobenius(a), b));
  return span_of_pairs(ext, {{a, evaluate(ext, phi, a)}, {b, evaluate(ext, phi, b)}, {0, d}});
}

Subspace line_plane(const CubicExtension& ext, Fq3 x, Fq3 v0) {
  const int q = ext.q();
  std::vector<std::pair<Fq3, Fq3>> rows;
  rows.emplace_back(x, ext.mul(ext.pow(x, static_cast<std::uint64_t>(q + 1)), v0));
  const Fq3 w = ext.inv(ext.pow(x, static_cast<std::uint64_t>(q + 1)));
  // Two independent elements of the trace-zero line suffice.
  std::vector<Fq3> line;
  for (int y = 1; y < ext.order() && line.size() < 2; ++y) {
    if (ext.trace(ext.mul(static_cast<Fq3>(y), w)) != 0) continue;
    line.push_back(static_cast<Fq3>(y));
    if (element_span(ext, line).dim() < static_cast<int>(line.size())) line.pop_back();
  }
  for (Fq3 y : line) rows.emplace_back(0, y);
  return span_of_pairs(ext, rows);
}

ConstructionAParts construction_a_parts(int q) {
  const CubicExtension& ext = CubicExtension::get(q);
  const GaloisField& f = ext.base();
  ConstructionAParts parts{SubspaceCode(f, 6), SubspaceCode(f, 6), SubspaceCode(f, 6), SubspaceCode(f, 6), 0};

  std::vector<Subspace> old_planes;
  std::vector<Subspace> removed;
  for_each_codeword(ext, [&](const LinPoly& g) {
    // g lies in R iff g = u x^q - u^q x with u = a1.
    if (g.a0 == ext.neg(ext.frobenius(g.a1)))
      removed.push_back(lift(ext, g));
    else
      old_planes.push_back(lift(ext, g));
  });
  parts.old_planes = SubspaceCode(f, 6, std::move(old_planes));
  parts.removed_planes = SubspaceCode(f, 6, std::move(removed));

  const Geometry pg2(f, 3);
  std::vector<Subspace> new_planes;
  pg2.for_each_flat(2, [&](const Subspace& z) {
    const Fq3 a = ext.from_coords(z.cm().row(0));
    const Fq3 b = ext.from_coords(z.cm().row(1));
    // One representative per coset of z: the smallest element code.
    std::vector<Fq3> reps;
    for (int c = 0; c < ext.order(); ++c) {
      bool fresh = true;
      for (Fq3 r : reps)
        if (z.contains_vector(ext.coords(ext.sub(static_cast<Fq3>(c), r)))) {
          fresh = false;
          break;
        }
      if (fresh) reps.push_back(static_cast<Fq3>(c));
    }
    for (Fq3 c : reps) new_planes.push_back(new_plane(ext, a, b, c));
  });
  parts.new_planes = SubspaceCode(f, 6, std::move(new_planes));

  parts.v0 = choose_v0(ext);
  std::vector<Subspace> line_planes;
  pg2.for_each_flat(1, [&](const Subspace& p) {
    line_planes.push_back(line_plane(ext, ext.from_coords(p.cm().row(0)), parts.v0));
  });
  parts.line_planes = SubspaceCode(f, 6, std::move(line_planes));
  return parts;
}

SubspaceCode construction_a_core(int q) {
  const ConstructionAParts parts = construction_a_parts(q);
  return code_union(parts.old_planes, parts.new_planes);
}

SubspaceCode construction_a(int q) {
  const ConstructionAParts parts = construction_a_parts(q);
  return code_union(code_union(parts.old_planes, parts.new_planes), parts.line_planes);
}

SubspaceCode core_plus_s(int q) {
  SubspaceCode c = construction_a_core(q);
  c.insert(special_flat(c.field(), 6, 3));
  return c;
}

LmrdCapReport lmrd_cap_check(int q) {
  const CubicExtension& ext = CubicExtension::get(q);
  const GaloisField& f = ext.base();
  const SubspaceCode lmrd = lift_gabidulin(q);
  const Subspace s = special_flat(f, 6, 3);

  std::unordered_set<Subspace, SubspaceHash> covered;
  for (const auto& e : lmrd.members()) for_each_subspace(e, 2, [&](const Subspace& l) { covered.insert(l); });

  LmrdCapReport rep;
  const Geometry pg5(f, 6);
  pg5.for_each_flat(3, [&](const Subspace& e) {
    ++rep.planes_checked;
    const int meet = 6 - join_dim(e, s);
    if (meet == 2) ++rep.line_planes;
    if (meet > 1) return;
    ++rep.low_planes;
    bool blocked = false;
    for_each_subspace(e, 2, [&](const Subspace& l) {
      if (!blocked && join_dim(l, s) == 5 && covered.count(l)) blocked = true;
    });
    if (blocked) ++rep.low_planes_blocked;
  });

  rep.s_addable = true;
  for (const auto& e : lmrd.members())
    if (subspace_distance(e, s) < 4) rep.s_addable = false;
  const std::uint64_t Q = static_cast<std::uint64_t>(q);
  rep.bound = Q * Q * Q * Q * Q * Q + Q * Q + Q + 1;
  return rep;
}

}  // namespace subcode

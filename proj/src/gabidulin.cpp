#include "subcode/gabidulin.hpp"

#include <set>
#include <stdexcept>
#include <unordered_set>

namespace subcode {

Fq3 evaluate(const CubicExtension& ext, const LinPoly& f, Fq3 x) {
  return ext.add(ext.mul(f.a0, x), ext.mul(f.a1, ext.frobenius(x)));
}

LinPoly add(const CubicExtension& ext, const LinPoly& f, const LinPoly& g) {
  return {ext.add(f.a0, g.a0), ext.add(f.a1, g.a1)};
}

LinPoly scale(const CubicExtension& ext, Fq s, const LinPoly& f) {
  return {ext.scale(s, f.a0), ext.scale(s, f.a1)};
}

Matrix matrix_of(const CubicExtension& ext, const LinPoly& f) {
  Matrix m(ext.base(), 0, 3);
  for (Fq3 b : ext.basis()) m.append_row(ext.coords(evaluate(ext, f, b)));
  return m;
}

Matrix multiplication_matrix(const CubicExtension& ext, Fq3 a) { return matrix_of(ext, {a, 0}); }

Matrix frobenius_matrix(const CubicExtension& ext) { return matrix_of(ext, {0, 1}); }

void for_each_codeword(const CubicExtension& ext, const std::function<void(const LinPoly&)>& fn) {
  for (int a0 = 0; a0 < ext.order(); ++a0)
    for (int a1 = 0; a1 < ext.order(); ++a1) fn({static_cast<Fq3>(a0), static_cast<Fq3>(a1)});
}

std::vector<LinPoly> codewords(const CubicExtension& ext) {
  std::vector<LinPoly> out;
  out.reserve(static_cast<std::size_t>(ext.order()) * ext.order());
  for_each_codeword(ext, [&](const LinPoly& f) { out.push_back(f); });
  return out;
}

int rank_by_norm(const CubicExtension& ext, const LinPoly& f) {
  if (f.a0 == 0 && f.a1 == 0) return 0;
  if (f.a0 == 0 || f.a1 == 0) return 3;
  // a0 x + a1 x^q = a1 (x^q - b x) with b = -a0 / a1.
  const Fq3 b = ext.neg(ext.div(f.a0, f.a1));
  return ext.norm(b) == 1 ? 2 : 3;
}

int rank_of(const CubicExtension& ext, const LinPoly& f) {
  const int by_matrix = rank(matrix_of(ext, f));
  const int by_norm = rank_by_norm(ext, f);
  if (by_matrix != by_norm) throw std::logic_error("rank mismatch between matrix and norm criterion");
  return by_matrix;
}

std::array<std::uint64_t, 4> rank_distribution(const CubicExtension& ext) {
  std::array<std::uint64_t, 4> hist{};
  for_each_codeword(ext, [&](const LinPoly& f) { ++hist[rank_of(ext, f)]; });
  return hist;
}

std::array<std::uint64_t, 4> rank_distribution_formula(int q) {
  const std::uint64_t Q = static_cast<std::uint64_t>(q);
  const std::uint64_t q3 = Q * Q * Q;
  return {1, 0, (q3 - 1) * (Q * Q + Q + 1), (q3 - 1) * (q3 - Q * Q - Q)};
}

RestrictionWitness mrd_restriction(const CubicExtension& ext, const Matrix& z) {
  if (z.cols() != 3 || rank(z) != z.rows()) throw std::invalid_argument("Z must have full row rank and 3 columns");
  std::unordered_set<std::uint64_t> image;
  const int q = ext.q();
  for_each_codeword(ext, [&](const LinPoly& f) {
    const Matrix za = z * matrix_of(ext, f);
    std::uint64_t key = 0;
    for (Fq x : za.entries()) key = key * static_cast<std::uint64_t>(q) + x;
    image.insert(key);
  });
  RestrictionWitness w;
  w.t = z.rows();
  w.image_size = image.size();
  std::uint64_t full = 1;
  for (int i = 0; i < 3 * w.t; ++i) full *= static_cast<std::uint64_t>(q);
  const std::uint64_t code_size = static_cast<std::uint64_t>(ext.order()) * ext.order();
  w.injective = w.image_size == code_size;
  w.surjective = w.image_size == full;
  return w;
}

Subspace element_span(const CubicExtension& ext, const std::vector<Fq3>& elems) {
  Matrix m(ext.base(), 0, 3);
  for (Fq3 x : elems) m.append_row(ext.coords(x));
  return Subspace::span(m);
}

std::vector<Fq3> elements_of(const CubicExtension& ext, const Subspace& s) {
  std::vector<Fq3> out;
  for (int x = 1; x < ext.order(); ++x)
    if (s.contains_vector(ext.coords(static_cast<Fq3>(x)))) out.push_back(static_cast<Fq3>(x));
  return out;
}

std::vector<LinPoly> ConstantRankSpace::members() const {
  std::vector<LinPoly> out;
  const int q = ext->q();
  for (int l = 0; l < q; ++l)
    for (int m = 0; m < q; ++m)
      out.push_back(add(*ext, scale(*ext, static_cast<Fq>(l), f), scale(*ext, static_cast<Fq>(m), g)));
  return out;
}

namespace {

std::size_t gaussian_points(int q) { return static_cast<std::size_t>(q * q + q + 1); }

Fq3 wedge(const CubicExtension& ext, Fq3 a, Fq3 b) {
  return ext.sub(ext.mul(a, ext.frobenius(b)), ext.mul(ext.frobenius(a), b));
}

}  // namespace

ConstantRankSpace d_space(const CubicExtension& ext, Fq3 a, Fq3 b, Fq3 c) {
  if (c == 0) throw std::invalid_argument("P must be a point (c != 0)");
  const Fq3 d = wedge(ext, a, b);
  if (element_span(ext, {a, b}).dim() != 2 || d == 0)
    throw std::invalid_argument("a and b must be linearly independent over GF(q)");
  ConstantRankSpace out;
  out.ext = &ext;
  // f = c (a x^q - a^q x) / d,  g = c (b x^q - b^q x) / (-d).
  const Fq3 cd = ext.div(c, d);
  out.f = {ext.neg(ext.mul(cd, ext.frobenius(a))), ext.mul(cd, a)};
  out.g = {ext.mul(cd, ext.frobenius(b)), ext.neg(ext.mul(cd, b))};
  out.z = element_span(ext, {a, b});
  out.p = element_span(ext, {c});
  return out;
}

LinPoly removable_member(const CubicExtension& ext, Fq3 u) { return {ext.neg(ext.frobenius(u)), u}; }

std::vector<LinPoly> removable_set(const CubicExtension& ext) {
  std::vector<LinPoly> out;
  for (int u = 0; u < ext.order(); ++u) out.push_back(removable_member(ext, static_cast<Fq3>(u)));
  return out;
}

Subspace corr(const CubicExtension& ext, Fq3 a, Fq3 b) {
  const Fq3 d = wedge(ext, a, b);
  if (element_span(ext, {a, b}).dim() != 2 || d == 0)
    throw std::invalid_argument("a and b must be linearly independent over GF(q)");
  return element_span(ext, {d});
}

Subspace corr(const CubicExtension& ext, const Subspace& z) {
  if (z.dim() != 2 || z.ambient() != 3) throw std::invalid_argument("corr expects a 2-dim subspace of GF(q)^3");
  return corr(ext, ext.from_coords(z.cm().row(0)), ext.from_coords(z.cm().row(1)));
}

bool triple_determinant_check(const CubicExtension& ext, Fq3 a, Fq3 b, Fq3 c) {
  return element_span(ext, {wedge(ext, b, c), wedge(ext, c, a), wedge(ext, a, b)}).dim() == 3;
}

RemovableSetCheck check_removable_set(const CubicExtension& ext) {
  RemovableSetCheck out;
  out.contains_d_spaces = out.corr_bijective = out.stacked_rank = true;
  const std::vector<LinPoly> r = removable_set(ext);
  const std::set<LinPoly> members(r.begin(), r.end());
  std::vector<Matrix> mats;
  for (const LinPoly& f : r) mats.push_back(matrix_of(ext, f));
  std::set<Subspace> images;
  const Subspace full = Subspace::full(ext.base(), 3);
  const auto planes = subspaces_of(full, 2);
  for (const Subspace& z : planes) {
    const Fq3 a = ext.from_coords(z.cm().row(0)), b = ext.from_coords(z.cm().row(1));
    const Subspace p = corr(ext, z);
    images.insert(p);
    const ConstantRankSpace d = d_space(ext, a, b, ext.from_coords(p.cm().row(0)));
    const auto dm = d.members();
    const std::set<LinPoly> dset(dm.begin(), dm.end());
    for (const LinPoly& f : dm)
      if (!members.count(f)) out.contains_d_spaces = false;
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = i + 1; j < r.size(); ++j) {
        // A1 and A2 lie in one coset of D iff their difference is in D.
        const LinPoly diff = add(ext, r[i], scale(ext, ext.base().neg(1), r[j]));
        if (dset.count(diff)) continue;
        ++out.pairs_checked;
        const Matrix stacked = vstack(z.cm() * (mats[i] - mats[j]), p.cm());
        if (rank(stacked) != 3) out.stacked_rank = false;
      }
  }
  out.corr_bijective = images.size() == planes.size() && images.size() == gaussian_points(ext.q());
  return out;
}

Subspace left_kernel(const Matrix& m) { return dual(Subspace::span(m.transpose())); }

}  // namespace subcode

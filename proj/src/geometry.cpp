#include "subcode/geometry.hpp"

#include <stdexcept>

namespace subcode {

std::uint64_t gaussian(int v, int k, int q) {
  if (k < 0 || k > v) return 0;
  // Multiplicative formula; every partial quotient is itself a Gaussian
  // binomial, so the divisions are exact.
  unsigned __int128 result = 1;
  for (int i = 0; i < k; ++i) {
    unsigned __int128 a = 1, b = 1;
    for (int j = 0; j < v - i; ++j) a *= static_cast<unsigned>(q);
    for (int j = 0; j < i + 1; ++j) b *= static_cast<unsigned>(q);
    result = result * (a - 1) / (b - 1);
  }
  return static_cast<std::uint64_t>(result);
}

Geometry::Geometry(const GaloisField& f, int v) : field_(&f), v_(v) {
  if (v < 1 || v > kMaxDim) throw std::invalid_argument("ambient dimension out of range");
  for (int k = 0; k <= v; ++k) counts_.push_back(gaussian(v, k, f.order()));
}

void Geometry::for_each_flat(int k, const std::function<void(const Subspace&)>& fn) const {
  if (k < 0 || k > v_) return;
  for_each_subspace(full(), k, fn);
}

std::vector<Subspace> Geometry::flats(int k) const {
  std::vector<Subspace> out;
  out.reserve(static_cast<std::size_t>(flat_count(k)));
  for_each_flat(k, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

Subspace special_flat(const GaloisField& f, int v, int k) {
  Matrix m(f, v - k, v);
  for (int i = 0; i < v - k; ++i) m(i, k + i) = 1;
  return Subspace::from_canonical(std::move(m));
}

std::vector<Subspace> lines_disjoint_from(const Geometry& g, const Subspace& s) {
  std::vector<Subspace> out;
  g.for_each_flat(2, [&](const Subspace& l) {
    if (join_dim(l, s) == 2 + s.dim()) out.push_back(l);
  });
  return out;
}

std::array<Fq, 6> pair_vector(const CubicExtension& ext, Fq3 x, Fq3 y) {
  const auto cx = ext.coords(x);
  const auto cy = ext.coords(y);
  return {cx[0], cx[1], cx[2], cy[0], cy[1], cy[2]};
}

Subspace span_of_pairs(const CubicExtension& ext, const std::vector<std::pair<Fq3, Fq3>>& pairs) {
  Matrix m(ext.base(), 0, 6);
  for (const auto& [x, y] : pairs) m.append_row(pair_vector(ext, x, y));
  return Subspace::span(m);
}

SubspaceCode plane_spread_field_reduction(int q) {
  const CubicExtension& ext = CubicExtension::get(q);
  const auto& basis = ext.basis();
  SubspaceCode code(ext.base(), 6);
  for (int m = 0; m < ext.order(); ++m) {
    std::vector<std::pair<Fq3, Fq3>> rows;
    for (Fq3 b : basis) rows.emplace_back(b, ext.mul(static_cast<Fq3>(m), b));
    code.insert(span_of_pairs(ext, rows));
  }
  std::vector<std::pair<Fq3, Fq3>> rows;
  for (Fq3 b : basis) rows.emplace_back(0, b);
  code.insert(span_of_pairs(ext, rows));
  return code;
}

Subspace affine_matrix_flat(const Matrix& z, const Matrix& a) {
  const GaloisField& f = a.field();
  const int m = a.rows();
  const int n = a.cols();
  if (z.cols() != n) throw std::invalid_argument("Z and A column counts differ");
  if (!is_canonical(z) || rank(z) != z.rows()) throw std::invalid_argument("Z must be canonical of full rank");
  const Rref zr = rref(z);
  // A' = A - A[:, pivots(Z)] * Z clears the entries above the pivots of Z.
  Matrix reduced = a;
  for (int i = 0; i < m; ++i)
    for (int r = 0; r < z.rows(); ++r) {
      const Fq c = a(i, zr.pivots[r]);
      if (c == 0) continue;
      for (int j = 0; j < n; ++j) reduced(i, j) = f.sub(reduced(i, j), f.mul(c, z(r, j)));
    }
  Matrix top = hstack(Matrix::identity(f, m), reduced);
  Matrix bottom = hstack(Matrix(f, z.rows(), m), z);
  return Subspace::from_canonical(vstack(top, bottom));
}

}  // namespace subcode

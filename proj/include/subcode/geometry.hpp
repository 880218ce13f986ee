#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "subcode/fields.hpp"
#include "subcode/linalg.hpp"

namespace subcode {

/// Number of k-dimensional subspaces of GF(q)^v; 0 when k < 0 or k > v.
std::uint64_t gaussian(int v, int k, int q);

/// PG(v-1, q) with cached flat counts.
class Geometry {
 public:
  Geometry(const GaloisField& f, int v);

  const GaloisField& field() const { return *field_; }
  int v() const { return v_; }
  /// Number of k-dimensional subspaces (vector dimension k).
  std::uint64_t flat_count(int k) const { return counts_.at(k); }

  /// All k-dimensional subspaces in canonical order.
  void for_each_flat(int k, const std::function<void(const Subspace&)>& fn) const;
  std::vector<Subspace> flats(int k) const;

  Subspace full() const { return Subspace::full(*field_, v_); }

 private:
  const GaloisField* field_;
  int v_;
  std::vector<std::uint64_t> counts_;
};

/// The span of the last v - k unit vectors.
Subspace special_flat(const GaloisField& f, int v, int k);

/// Lines (2-dim subspaces) meeting s only in 0.
std::vector<Subspace> lines_disjoint_from(const Geometry& g, const Subspace& s);

/// Vector (coords(x), coords(y)) of GF(q)^6 for x, y in GF(q^3).
std::array<Fq, 6> pair_vector(const CubicExtension& ext, Fq3 x, Fq3 y);
/// Subspace of GF(q)^6 spanned by the given pairs.
Subspace span_of_pairs(const CubicExtension& ext, const std::vector<std::pair<Fq3, Fq3>>& pairs);

/// The q^3 + 1 planes {(x, m x)} and {(0, y)} of PG(5, q) coming from the
/// points of PG(1, q^3).
SubspaceCode plane_spread_field_reduction(int q);

/// Flat of PG(m+n-1, q) associated with the affine flat A + {V Z} of the left
/// matrix geometry: canonical matrix (I_m | A') over (0 | Z), where A' is A
/// with the columns above the pivots of Z cleared. Throws
/// std::invalid_argument if Z is not canonical of full rank.
Subspace affine_matrix_flat(const Matrix& z, const Matrix& a);

}  // namespace subcode

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "subcode/fields.hpp"

namespace subcode {

inline constexpr int kMaxDim = 12;

/// Dense matrix over GF(q), row-major, at most kMaxDim x kMaxDim.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const GaloisField& f, int rows, int cols);

  static Matrix identity(const GaloisField& f, int n);
  /// Rows given as Fq codes; all rows must have equal length.
  static Matrix from_rows(const GaloisField& f, int cols, const std::vector<std::vector<Fq>>& rows);

  const GaloisField& field() const { return *field_; }
  bool has_field() const { return field_ != nullptr; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Fq operator()(int r, int c) const { return entries_[r * cols_ + c]; }
  Fq& operator()(int r, int c) { return entries_[r * cols_ + c]; }
  std::span<const Fq> row(int r) const { return {entries_.data() + r * cols_, static_cast<std::size_t>(cols_)}; }
  std::span<Fq> row(int r) { return {entries_.data() + r * cols_, static_cast<std::size_t>(cols_)}; }
  std::span<const Fq> entries() const { return entries_; }

  void append_row(std::span<const Fq> r);
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  const GaloisField* field_ = nullptr;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Fq> entries_;
};

/// Vertical concatenation; column counts must agree.
Matrix vstack(const Matrix& top, const Matrix& bottom);
/// Horizontal concatenation; row counts must agree.
Matrix hstack(const Matrix& left, const Matrix& right);

struct Rref {
  Matrix cm;                // zero rows dropped
  std::vector<int> pivots;  // strictly increasing
  int rank() const { return static_cast<int>(pivots.size()); }
};

/// Reduced row echelon form with zero rows removed. A zero matrix yields the
/// empty (0 x cols) matrix.
Rref rref(Matrix m);
int rank(const Matrix& m);
/// Rank of rows stored contiguously in `data` (modified in place).
int rank_in_place(const GaloisField& f, Fq* data, int rows, int cols);

/// True iff m is in reduced row echelon form without zero rows.
bool is_canonical(const Matrix& m);

/// Product of two canonical matrices, which is again canonical. Throws
/// std::invalid_argument on a shape mismatch and std::logic_error if the
/// product is not canonical.
Matrix canonical_product_check(const Matrix& z, const Matrix& u);

/// Calls fn for every canonical rows x cols matrix of full row rank, in order
/// of pivot tuple (lexicographic) and then entries (row-major, 0 < 1 < ...).
void for_each_canonical_matrix(const GaloisField& f, int rows, int cols,
                               const std::function<void(const Matrix&)>& fn);

/// A subspace of GF(q)^v, stored as its canonical matrix.
class Subspace {
 public:
  Subspace() = default;
  /// Zero subspace of GF(q)^v.
  Subspace(const GaloisField& f, int v);
  /// Row space of an arbitrary matrix.
  static Subspace span(const Matrix& m);
  /// Adopts a matrix already in canonical form (checked).
  static Subspace from_canonical(Matrix cm);
  static Subspace full(const GaloisField& f, int v);

  const GaloisField& field() const { return cm_.field(); }
  int ambient() const { return cm_.cols(); }
  int dim() const { return cm_.rows(); }
  const Matrix& cm() const { return cm_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Membership of a vector of length ambient().
  bool contains_vector(std::span<const Fq> x) const;
  bool contains(const Subspace& w) const;

  /// Ordering: dimension, then pivot tuple, then entries row-major.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.cm_.cols() == b.cm_.cols() && a.cm_ == b.cm_;
  }

  std::size_t hash() const;
  /// Rows as digit strings separated by commas ("-" for the zero space).
  std::string to_string() const;

 private:
  Matrix cm_;
  std::vector<int> pivots_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

Subspace sum(const Subspace& u, const Subspace& w);
/// Computed as the dual of the sum of the duals.
Subspace intersect(const Subspace& u, const Subspace& w);
/// dim(u + w) - dim(u ∩ w).
int subspace_distance(const Subspace& u, const Subspace& w);
/// dim(u + w); cheaper than building the sum.
int join_dim(const Subspace& u, const Subspace& w);
/// Orthogonal complement under the standard dot product.
Subspace dual(const Subspace& u);

/// All t-dimensional subspaces of u, each produced as Z * cm(u) for a
/// canonical t x dim(u) matrix Z (never re-reduced).
void for_each_subspace(const Subspace& u, int t, const std::function<void(const Subspace&)>& fn);
std::vector<Subspace> subspaces_of(const Subspace& u, int t);

/// A finite set of subspaces of a common GF(q)^v, kept sorted and distinct.
class SubspaceCode {
 public:
  SubspaceCode() = default;
  SubspaceCode(const GaloisField& f, int v);
  /// Throws std::invalid_argument on ambient mismatch or duplicates.
  SubspaceCode(const GaloisField& f, int v, std::vector<Subspace> members);

  const GaloisField& field() const { return *field_; }
  int ambient() const { return v_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<Subspace>& members() const { return members_; }
  const Subspace& operator[](std::size_t i) const { return members_[i]; }

  /// Returns false (and leaves the code unchanged) if u is already present.
  bool insert(const Subspace& u);
  bool contains(const Subspace& u) const;
  /// Common dimension, or -1 for a mixed-dimension or empty code.
  int constant_dim() const;

  friend bool operator==(const SubspaceCode& a, const SubspaceCode& b) {
    return a.v_ == b.v_ && a.members_ == b.members_;
  }

 private:
  const GaloisField* field_ = nullptr;
  int v_ = 0;
  std::vector<Subspace> members_;
};

SubspaceCode dual_code(const SubspaceCode& c);
SubspaceCode code_union(const SubspaceCode& a, const SubspaceCode& b);

}  // namespace subcode

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "subcode/fields.hpp"
#include "subcode/linalg.hpp"

namespace subcode {

/// The GF(q)-linear map x -> a0 x + a1 x^q on GF(q^3).
struct LinPoly {
  Fq3 a0 = 0;
  Fq3 a1 = 0;
  friend bool operator==(const LinPoly&, const LinPoly&) = default;
  friend auto operator<=>(const LinPoly&, const LinPoly&) = default;
};

Fq3 evaluate(const CubicExtension& ext, const LinPoly& f, Fq3 x);
LinPoly add(const CubicExtension& ext, const LinPoly& f, const LinPoly& g);
LinPoly scale(const CubicExtension& ext, Fq s, const LinPoly& f);

/// 3x3 matrix over GF(q) whose i-th row is coords(f(b_i)) for the fixed
/// basis b of GF(q^3), so that coords(f(x)) = coords(x) * M.
Matrix matrix_of(const CubicExtension& ext, const LinPoly& f);
/// Matrix of multiplication by a.
Matrix multiplication_matrix(const CubicExtension& ext, Fq3 a);
/// Matrix of x -> x^q.
Matrix frobenius_matrix(const CubicExtension& ext);

/// All q^6 codewords of the (3,3,2) Gabidulin code, a0 major, a1 minor.
void for_each_codeword(const CubicExtension& ext, const std::function<void(const LinPoly&)>& fn);
std::vector<LinPoly> codewords(const CubicExtension& ext);

/// Rank from the norm criterion alone (rank 2 iff f = a (x^q - b x) with
/// b^(q^2+q+1) = 1).
int rank_by_norm(const CubicExtension& ext, const LinPoly& f);
/// Rank of the evaluation map. Computes both the matrix rank and the norm
/// classification and throws std::logic_error if they disagree.
int rank_of(const CubicExtension& ext, const LinPoly& f);

/// Number of codewords of rank 0, 1, 2, 3.
std::array<std::uint64_t, 4> rank_distribution(const CubicExtension& ext);
/// Closed form (1, 0, (q^3-1)(q^2+q+1), (q^3-1)(q^3-q^2-q)).
std::array<std::uint64_t, 4> rank_distribution_formula(int q);

struct RestrictionWitness {
  int t = 0;
  std::uint64_t image_size = 0;
  bool injective = false;   // image size = q^6
  bool surjective = false;  // image size = q^(3t)
};

/// Collects {Z A : A in the code} for a full-rank canonical t x 3 matrix Z.
/// Throws std::invalid_argument if Z is rank deficient.
RestrictionWitness mrd_restriction(const CubicExtension& ext, const Matrix& z);

/// Span over GF(q) of the given elements of GF(q^3), in coordinates.
Subspace element_span(const CubicExtension& ext, const std::vector<Fq3>& elems);
/// Nonzero elements of a subspace of GF(q)^3 read back as GF(q^3) elements.
std::vector<Fq3> elements_of(const CubicExtension& ext, const Subspace& s);

/// 2-dimensional space of rank-2 maps vanishing on the points of z and
/// mapping z onto p.
struct ConstantRankSpace {
  LinPoly f;  // f(a) = 0, f(b) = c
  LinPoly g;  // g(b) = 0, g(a) = c
  Subspace z;
  Subspace p;
  std::vector<LinPoly> members() const;  // all q^2 members
  const CubicExtension* ext = nullptr;
};

/// D(Z, P) for Z = <a, b> and P = <c>. Throws std::invalid_argument if a, b
/// are dependent or c = 0.
ConstantRankSpace d_space(const CubicExtension& ext, Fq3 a, Fq3 b, Fq3 c);

/// The set R = {u x^q - u^q x : u in GF(q^3)}, indexed by u.
std::vector<LinPoly> removable_set(const CubicExtension& ext);
LinPoly removable_member(const CubicExtension& ext, Fq3 u);

/// Z = <a, b>  ->  <a b^q - a^q b>. Throws std::invalid_argument if a, b are
/// dependent.
Subspace corr(const CubicExtension& ext, Fq3 a, Fq3 b);
/// corr applied to a 2-dimensional subspace of GF(q)^3 (coordinates).
Subspace corr(const CubicExtension& ext, const Subspace& z);

/// Whether {b c^q - b^q c, c a^q - c^q a, a b^q - a^q b} spans GF(q^3).
bool triple_determinant_check(const CubicExtension& ext, Fq3 a, Fq3 b, Fq3 c);

/// The three conditions under which R can be rearranged into new planes,
/// each checked exhaustively over all 2-dimensional Z.
struct RemovableSetCheck {
  bool contains_d_spaces = false;  // D(Z, corr Z) inside R for every Z
  bool corr_bijective = false;
  bool stacked_rank = false;       // rank(Z(A1 - A2) over s) = 3 across cosets
  std::uint64_t pairs_checked = 0;
  bool all() const { return contains_d_spaces && corr_bijective && stacked_rank; }
};

RemovableSetCheck check_removable_set(const CubicExtension& ext);

/// Left kernel of a 3x3 matrix (row vectors x with x M = 0).
Subspace left_kernel(const Matrix& m);

}  // namespace subcode

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "subcode/linalg.hpp"

namespace subcode {

/// Points of PG(n-1, 2), n <= 6, are the nonzero integers below 2^n; the
/// vector (x_0, ..., x_{n-1}) is the integer sum x_j 2^(n-1-j). A set of
/// points is a 64-bit mask with bit p set for point p.
using PointMask = std::uint64_t;

inline constexpr int kMaxBinaryDim = 6;

/// Point set of a subspace of GF(2)^n. Throws std::invalid_argument unless
/// q = 2 and n <= 6.
PointMask point_mask(const Subspace& s);
/// Point p as a one-row subspace.
Subspace point_subspace(int n, unsigned p);
/// Subspace whose point set is the given mask (must be closed under sums;
/// bit 0 is ignored).
Subspace subspace_from_mask(int n, PointMask m);

/// A family of flats of PG(n-1, 2) given by point masks.
struct BinaryStructure {
  int n = 0;
  std::vector<PointMask> blocks;  // sorted, distinct
};

BinaryStructure to_binary(const SubspaceCode& c);

/// Element of GL(n, 2), given by the images of the points 1 << i.
struct BinaryMap {
  int n = 0;
  std::array<unsigned, kMaxBinaryDim> image{};

  unsigned apply(unsigned x) const {
    unsigned y = 0;
    for (int i = 0; i < n; ++i)
      if (x >> i & 1u) y ^= image[i];
    return y;
  }
  PointMask apply(PointMask m) const;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t nodes)
      : std::runtime_error("search node budget exceeded after " + std::to_string(nodes) + " nodes") {}
};

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000ULL;

/// Canonical point colouring by iterated refinement over blocks and the
/// lines of the projective space. `fingerprint` is an isomorphism invariant,
/// and equal fingerprints make colours comparable across structures.
struct Refinement {
  std::array<int, 64> color{};
  int classes = 0;
  std::uint64_t fingerprint = 0;
};

Refinement refine(const BinaryStructure& s);

/// All elements of GL(n, 2) mapping the block set onto itself.
std::vector<BinaryMap> automorphisms(const BinaryStructure& s, std::uint64_t budget = kDefaultNodeBudget);
/// A map carrying the blocks of a onto the blocks of b, if one exists.
std::optional<BinaryMap> find_isomorphism(const BinaryStructure& a, const BinaryStructure& b,
                                          std::uint64_t budget = kDefaultNodeBudget);

/// Orbits of the group on the points in `points`, each sorted; orbits are
/// listed by smallest point.
std::vector<std::vector<unsigned>> point_orbits(const std::vector<BinaryMap>& group, PointMask points);

inline int popcount(PointMask m) { return __builtin_popcountll(m); }

}  // namespace subcode

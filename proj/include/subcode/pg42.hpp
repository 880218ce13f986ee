#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subcode/binary.hpp"

namespace subcode {

/// Lines of PG(4, 2) as 3-point masks (see binary.hpp for the point encoding).
using LineMask = PointMask;

inline constexpr int kPg42Dim = 5;
inline constexpr PointMask kPg42Points = 0xFFFFFFFEULL;  // points 1..31

/// All lines of PG(n-1, 2), sorted by mask.
std::vector<LineMask> all_lines(int n);
/// Point set of the span of the given point set, n <= 6.
PointMask span_mask(PointMask points);

struct PartialSpread {
  std::vector<LineMask> lines;  // pairwise disjoint

  PointMask covered() const;
  bool valid() const;  // lines, pairwise disjoint
  BinaryStructure structure() const { return BinaryStructure{kPg42Dim, sorted()}; }
  std::vector<LineMask> sorted() const;
  std::vector<Subspace> subspaces() const;
};

using Regulus = std::array<LineMask, 3>;

/// The triple as a regulus when the three lines are pairwise skew and span a solid.
std::optional<Regulus> regulus_of(LineMask a, LineMask b, LineMask c);
/// Lines of PG(4, 2) meeting each of the three lines in exactly one point.
std::vector<LineMask> transversals(LineMask a, LineMask b, LineMask c);
/// The three transversals of a regulus. Throws std::invalid_argument otherwise.
Regulus opposite_regulus(const Regulus& r);

enum class SpreadType { X, E, IDelta, IDeltaPrime };

std::string type_name(SpreadType t);
std::optional<SpreadType> parse_type(const std::string& s);

struct SpreadProfile {
  PointMask holes = 0;
  PointMask plane = 0;  // E, with holes = E \ L
  PointMask line = 0;   // L
  std::vector<Regulus> reguli;
  std::vector<int> regulus_count;  // per line of the spread, in input order
  SpreadType pattern = SpreadType::X;  // X, E or IDelta; the IDelta classes are not split here
};

/// Throws std::invalid_argument unless ps is a partial spread of 9 lines
/// and std::logic_error if the hole or regulus structure is not as expected.
SpreadProfile profile(const PartialSpread& ps);

/// A representative of each type. X is a hyperplane section of the plane
/// spread; E swaps one regulus of X; the two IDelta types complete the
/// six-line configuration in the two possible ways, the first completion in
/// mask order being IDelta.
PartialSpread construct_type(SpreadType t);

/// The six lines L1, L2, L3, L1', L2', L3' of the IDelta recipe for every
/// admissible choice of the L_i' (8 of them).
std::vector<PartialSpread> idelta_wirings();

struct SpreadClass {
  SpreadType type = SpreadType::X;
  PartialSpread representative;
  std::uint64_t hits = 0;  // search leaves falling into the class
};

struct Classification {
  std::vector<SpreadClass> classes;  // ordered X, E, IDelta, IDelta'
  std::uint64_t leaves = 0;          // spreads through the two fixed skew lines
  std::uint64_t iso_tests = 0;
};

/// Exhaustive search over size-9 partial spreads containing two fixed skew
/// lines (GL(5,2) is transitive on skew pairs), with isomorph rejection.
Classification classify_all_size9(std::uint64_t budget = kDefaultNodeBudget);

struct SpreadAutData {
  std::uint64_t order = 0;
  std::vector<int> orbits;          // sizes on the 27 covered points, descending
  std::vector<int> doubled_orbits;  // 9-configuration view on 54 points
};

SpreadAutData spread_aut_and_orbits(const PartialSpread& ps, std::uint64_t budget = kDefaultNodeBudget);

/// The nine planes of PG(5, 2) through the point 1 whose quotient is ps.
BinaryStructure nine_configuration_planes(const PartialSpread& ps);

/// Identify which of the four classes ps belongs to.
SpreadType identify(const PartialSpread& ps, std::uint64_t budget = kDefaultNodeBudget);

/// "48^1 6^1" style rendering of orbit sizes.
std::string orbit_string(const std::vector<int>& sizes);

}  // namespace subcode

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subcode/binary.hpp"
#include "subcode/linalg.hpp"
#include "subcode/pg42.hpp"

namespace subcode {

/// Smallest pairwise distance and the first pair attaining it.
struct DistanceResult {
  int distance = 0;
  std::size_t first = 0;
  std::size_t second = 0;
};

/// Throws std::invalid_argument for codes with fewer than two members.
/// `threads` <= 1 runs serially.
DistanceResult min_distance_pair(const SubspaceCode& c, int threads = 1);
/// Same over a plain list; duplicates give distance 0.
DistanceResult min_distance_pair(const std::vector<Subspace>& members, int threads = 1);
int min_distance(const SubspaceCode& c, int threads = 1);

/// Degree -> number of points of PG(v-1, q) with that degree.
using Histogram = std::map<int, std::uint64_t>;

/// Number of codewords through each point, as a histogram over all points.
Histogram degree_distribution(const SubspaceCode& c);
/// "5^7 9^56" rendering, ascending keys.
std::string histogram_string(const Histogram& h);

/// Frequencies of dim(E ∩ s) over the codewords E.
Histogram s_profile(const SubspaceCode& c, const Subspace& s);

/// Histogram of dim(E ∩ E') over unordered pairs of codewords.
Histogram intersection_profile(const SubspaceCode& c);

struct LightPlaneResult {
  std::optional<Subspace> plane;  // set iff exactly one plane qualifies
  int candidates = 0;
};

/// Planes with every point of degree <= 6 and every point off the plane of
/// degree >= 8, found by sweeping all planes. q = 2, v = 6 only.
LightPlaneResult find_light_plane(const SubspaceCode& c);

struct NineConfiguration {
  unsigned point = 0;  // binary point encoding
  PartialSpread derived;
  SpreadType type = SpreadType::X;
};

/// Points of degree 9 with their derived partial spreads in PG(V/P) = PG(4,2).
std::vector<NineConfiguration> nine_configurations(const SubspaceCode& c,
                                                   std::uint64_t budget = kDefaultNodeBudget);
/// Unordered pairs of degree-9 points lying on a common codeword.
std::uint64_t seventeen_config_count(const SubspaceCode& c);

struct FeasibilityReport {
  static constexpr std::array<const char*, 4> kNames{"lines<=1", "points<=9", "hyperplanes<=9", "solids<=1"};
  std::array<int, 4> worst{};  // largest count seen per family
  std::array<bool, 4> pass{};
  bool all() const { return pass[0] && pass[1] && pass[2] && pass[3]; }
  friend bool operator==(const FeasibilityReport&, const FeasibilityReport&) = default;
};

/// The four incidence families for a (6, M, 4; 3)_2 code. q = 2, v = 6, k = 3.
FeasibilityReport feasibility_check(const SubspaceCode& c);

struct MaximalityReport {
  bool maximal = false;
  std::uint64_t planes_checked = 0;
  std::vector<std::pair<Subspace, std::size_t>> blocked;  // rejected plane, blocking codeword index
  std::vector<Subspace> addable;
};

/// Tries every k-flat outside the code against minimum distance d.
MaximalityReport is_maximal(const SubspaceCode& c, int d);

/// Maximum size of a partial line spread in PG(v-1, q). Requires v >= 4.
std::uint64_t partial_spread_max(int v, int q);

struct BoundQuery {
  int v = 0, d = 0, k = 0, q = 0;
};

struct BoundResult {
  std::optional<std::uint64_t> value;  // absent when the inner number is not covered
  int t = 0;
  std::uint64_t numerator = 0;    // gaussian(v, t-1)
  std::uint64_t denominator = 0;  // gaussian(k, t-1)
  int inner_v = 0, inner_k = 0;
  std::optional<std::uint64_t> inner;
  std::string inner_rule;
  std::string trace() const;
};

/// Throws std::invalid_argument for an invalid query.
BoundResult recursive_bound(const BoundQuery& bq);

struct AutReport {
  std::uint64_t collineations = 0;
  bool self_dual = false;
  std::uint64_t with_correlations() const { return self_dual ? 2 * collineations : collineations; }
  friend bool operator==(const AutReport&, const AutReport&) = default;
};

/// Stabilizer order in GL(v, 2) and whether C is isomorphic to its dual.
/// Throws BudgetExceeded if the search exceeds the node budget.
AutReport automorphism_order(const SubspaceCode& c, std::uint64_t budget = kDefaultNodeBudget);

/// Isomorphism under GL(v, 2). Invariants first, then backtracking.
bool are_isomorphic(const SubspaceCode& a, const SubspaceCode& b, std::uint64_t budget = kDefaultNodeBudget);

struct CodeReport {
  int v = 0, q = 0, k = 0;
  std::uint64_t size = 0;
  int distance = -1;  // -1 for fewer than two codewords
  Histogram degrees;
  Histogram s_profile;  // relative to the special flat
  std::optional<Subspace> light_plane;
  int light_candidates = 0;
  std::map<std::string, std::uint64_t> nine_types;  // type name -> count
  std::uint64_t nine_count = 0;
  std::uint64_t seventeen = 0;
  std::optional<FeasibilityReport> feasibility;
  std::optional<AutReport> aut;
  bool binary_analytics = false;  // configuration data present
  friend bool operator==(const CodeReport&, const CodeReport&) = default;
};

struct AnalyzeOptions {
  bool aut = false;
  int threads = 1;
  std::uint64_t budget = kDefaultNodeBudget;
};

CodeReport analyze(const SubspaceCode& c, const AnalyzeOptions& opt = {});

}  // namespace subcode

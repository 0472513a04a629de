#pragma once

// Concrete operators and families, exhaustive enumerators, and seeded random
// generators.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cospan/cospanning.hpp"
#include "cospan/operators.hpp"
#include "cospan/setcore.hpp"

namespace cospan {

struct BuiltinParams {
  int n = 3;
  int k = 1;
  bool bases = false;  // paper_example_3: return its bases family instead
};

using Instance = std::variant<SetOperator, SetFamily>;

/// Known names: paper_example_3, identity, full, empty, uniform_matroid,
/// chain_antimatroid, free_antimatroid.  Ground labels are "1".."n".
Instance builtin_instance(std::string_view name, const BuiltinParams& params = {});
std::vector<std::string> builtin_names();

/// Identity on {1,2,3} except {1} ↦ {1,3}.
SetOperator paper_example_3();

/// All subsets of size ≤ k.
SetFamily uniform_matroid(int n, int k);

/// Down-sets of the partial order generated by `less_than` (pairs of element
/// indices a < b).  InvalidArgumentError on cycles.
SetFamily poset_antimatroid(const GroundSet& ground, const std::vector<std::pair<int, int>>& less_than);

struct Point2D {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Point2D&, const Point2D&) = default;
};

inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 20;

/// Distinct integer points with |x|, |y| ≤ 2^20.
class PointSet2D {
 public:
  PointSet2D(std::vector<std::string> labels, std::vector<Point2D> points);
  explicit PointSet2D(std::vector<Point2D> points);  // labels p1..pn

  const GroundSet& ground() const { return ground_; }
  const std::vector<Point2D>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  GroundSet ground_;
  std::vector<Point2D> points_;
};

/// Sign of the cross product (b − a) × (c − a).
int orientation(const Point2D& a, const Point2D& b, const Point2D& c);

/// τ(X) = points of E inside the (closed) convex hull of X.
SetOperator convex_hull_geometry(const PointSet2D& pts);

/// φ(X) = points of E inside the closed smallest enclosing disk of X;
/// φ(∅) = ∅.  At most 16 points.
SetOperator seb_violator(const PointSet2D& pts);

// ---------------------------------------------------------------------------
// Exhaustive enumeration

enum class SpaceKind {
  kExtensive,
  kViolator,
  kClosure,
  kConvexGeometry,
  kRelationR1R2,
  kPartition,  // every equivalence partition of 2^E
  kFamily,
  kGreedoid,
  kAntimatroid,
  kMatroid,
};

std::string_view to_string(SpaceKind k);
SpaceKind parse_space_kind(std::string_view name);

using Space = std::variant<SetOperator, CospanningPartition, SetFamily>;

/// Streams every structure of the kind over {1..n} to `visit`, duplicate
/// free, and returns how many were visited.  Operator kinds and partition
/// kinds require n ≤ 3, family kinds n ≤ 4 (CapacityError otherwise).
std::size_t enumerate_spaces(int n, SpaceKind kind, const std::function<void(const Space&)>& visit);

/// Typed conveniences over enumerate_spaces.
std::size_t for_each_operator(int n, SpaceKind kind, const std::function<void(const SetOperator&)>& visit);
std::size_t for_each_partition(int n, SpaceKind kind, const std::function<void(const CospanningPartition&)>& visit);
std::size_t for_each_family(int n, SpaceKind kind, const std::function<void(const SetFamily&)>& visit);

// ---------------------------------------------------------------------------
// Seeded random generators (deterministic in their arguments)

/// Peeling construction: an unassigned inclusion-maximal subset becomes hi,
/// then a random lo ⊆ hi whose whole interval is still unassigned.  n ≤ 6.
IntervalPartition random_hypercube_partition(int n, std::uint64_t seed);

/// Union closure of the prefixes of a few random permutations; n ≤ 10.
SetFamily random_antimatroid(int n, std::uint64_t seed);

/// Linearly independent subsets of random vectors over GF(2); n ≤ 10.
SetFamily random_matroid(int n, std::uint64_t seed);

/// Intersection closure of a few random subsets together with E; n ≤ 10.
SetFamily random_closed_family(int n, std::uint64_t seed);

/// Random distinct points in a small box; 1 ≤ n ≤ 16.
PointSet2D random_points(int n, std::uint64_t seed);

}  // namespace cospan

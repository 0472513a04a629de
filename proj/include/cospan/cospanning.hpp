#pragma once

// Cospanning partitions of the hypercube 2^E: classes of subsets that an
// operator maps to the same image, relation-property checkers over those
// classes, interval detection, and operator reconstruction.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cospan/operators.hpp"
#include "cospan/setcore.hpp"

namespace cospan {

struct CospanningClass {
  std::vector<Mask> members;      // ascending mask order
  std::optional<Mask> maximum;    // unique inclusion-maximal member, if any
  std::vector<Mask> minima;       // inclusion-minimal members, ascending
};

/// Partition of 2^E.  Class ids are contiguous and ordered by the smallest
/// member mask of each class.
class CospanningPartition {
 public:
  /// Builds from an arbitrary labeling (one label per subset, indexed by mask);
  /// labels are renumbered canonically.
  CospanningPartition(GroundSet ground, const std::vector<std::size_t>& labels);
  /// Builds from explicit classes; they must cover 2^E exactly once.
  static CospanningPartition from_classes(GroundSet ground, const std::vector<std::vector<Mask>>& classes);

  const GroundSet& ground() const { return ground_; }
  std::size_t class_count() const { return classes_.size(); }
  std::size_t class_of(Mask x) const { return class_of_[x]; }
  const std::vector<std::size_t>& class_ids() const { return class_of_; }
  const CospanningClass& cls(std::size_t id) const { return classes_.at(id); }
  const std::vector<CospanningClass>& classes() const { return classes_; }
  bool related(Mask x, Mask y) const { return class_of_[x] == class_of_[y]; }

  friend bool operator==(const CospanningPartition& a, const CospanningPartition& b) {
    return a.ground_ == b.ground_ && a.class_of_ == b.class_of_;
  }

 private:
  GroundSet ground_;
  std::vector<std::size_t> class_of_;
  std::vector<CospanningClass> classes_;
};

struct Interval {
  Mask lo = 0;
  Mask hi = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Partition of 2^E into disjoint intervals [lo, hi].
class IntervalPartition {
 public:
  /// Validates lo ⊆ hi, disjointness and coverage.
  IntervalPartition(GroundSet ground, std::vector<Interval> intervals);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  /// Index into intervals() of the interval containing x.
  std::size_t interval_of(Mask x) const { return owner_[x]; }

  CospanningPartition to_partition() const;

 private:
  GroundSet ground_;
  std::vector<Interval> intervals_;
  std::vector<std::size_t> owner_;
};

/// Fibers of op.
CospanningPartition partition_from_operator(const SetOperator& op);

enum class RelationProperty { kR1, kR2, kR3, kR33, kR4G, kR4CG, kR5, kEqCL, kEqAN };

std::string_view to_string(RelationProperty p);
RelationProperty parse_relation_property(std::string_view name);

/// Exhaustive check.  Quantifications (R denotes "same class"):
///   R1   X R Y ⇒ X R X∪Y                       witness X, Y
///   R2   X ⊆ Y ⊆ Z, X R Z ⇒ X R Y               witness X, Y, Z
///   R3   X R Y ⇒ X R X∩Y                       witness X, Y
///   R33  p ≠ q ∉ X: ¬(X R X∪p), ¬(X R X∪q), X∪p R X∪pq ⇒ ¬(X∪q R X∪pq)
///   R4G  x ≠ y ∉ X: X∪y R X∪xy, ¬(X∪x R X∪xy) ⇒ ∃z ∈ X∪x: X∪x−z R X∪x
///   R4CG x ∈ X: [∀z ∉ X ¬(X R X∪z)], ¬(X R X−x) ⇒ ∀y ∉ X: ¬(X−x R X−x∪y)
///   R5   [∀x ∈ X ¬(X R X−x)] ⇒ ∀x ∈ X ∀z ∈ X−x: ¬(X−x−z R X−x)
///   EqCL interval [A,B], x ∈ A ⇒ B−x is the top of some interval
///   EqAN interval [A,B], x ∉ B ⇒ A∪x is the bottom of some interval
/// EqCL/EqAN throw PreconditionError when p is not an interval partition.
PropertyReport check_relation_property(const CospanningPartition& p, RelationProperty prop);

enum class ExtremalSide { kMin, kMax };

/// kMin: every inclusion-minimal member of every class.  kMax: the unique
/// maximum of every class (PreconditionError naming the class otherwise).
SetFamily extremal_sets(const CospanningPartition& p, ExtremalSide side);

/// kMax: X ↦ the unique maximal member of [X] (requires the class union to be
/// a member).  kMin: X ↦ the unique minimal member (class intersection).
SetOperator operator_from_partition(const CospanningPartition& p, ExtremalSide mode);

/// Succeeds iff every class is the full interval between its unique minimum
/// and unique maximum; PreconditionError naming the offending class otherwise.
IntervalPartition interval_form(const CospanningPartition& p);

/// Class of X in the result = complements of the class of E−X.
CospanningPartition complement_partition(const CospanningPartition& p);

/// Graphviz rendering: one node per subset, clustered and colored by class,
/// hypercube edges between subsets that differ in one element.
std::string to_dot(const CospanningPartition& p);

}  // namespace cospan

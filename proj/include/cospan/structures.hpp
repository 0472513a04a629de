#pragma once

// Greedoids, antimatroids, matroids and convex geometries.

#include <variant>
#include <vector>

#include "cospan/cospanning.hpp"
#include "cospan/operators.hpp"
#include "cospan/setcore.hpp"

namespace cospan {

/// ∅ ∈ F and augmentation: |X| > |Y| ⇒ ∃x ∈ X−Y with Y∪x ∈ F.
/// Witness roles: "missing" (∅ absent) or X, Y (non-augmentable pair).
PropertyReport check_greedoid(const SetFamily& fam);

class Greedoid {
 public:
  const SetFamily& family() const { return family_; }
  /// r(X) = max{|A| : A ∈ F, A ⊆ X}, indexed by mask.
  const std::vector<int>& rank() const { return rank_; }
  /// σ(X) = {x : r(X∪x) = r(X)}.
  const SetOperator& sigma() const { return sigma_; }
  /// Γ(X) = {x ∈ E−X : X∪x ∈ F}.
  Mask gamma(Mask x) const;

 private:
  friend Greedoid build_greedoid(const SetFamily& fam);
  Greedoid(SetFamily family, std::vector<int> rank, SetOperator sigma)
      : family_(std::move(family)), rank_(std::move(rank)), sigma_(std::move(sigma)) {}

  SetFamily family_;
  std::vector<int> rank_;
  SetOperator sigma_;
};

/// PreconditionError when fam is not a greedoid.
Greedoid build_greedoid(const SetFamily& fam);

/// {X : ex(X) = X}.
SetFamily feasible_from_operator(const SetOperator& op);

struct FamilyClass {
  bool greedoid = false;
  bool antimatroid = false;  // greedoid ∧ union-closed
  bool matroid = false;      // greedoid ∧ hereditary
  std::vector<PropertyReport> reports;  // greedoid, union-closed, hereditary
};

FamilyClass classify_family(const SetFamily& fam);

/// The three equivalent descriptions of antimatroids among accessible set
/// systems: greedoid ∧ union-closed, union-closed, and the local condition
/// A, A∪x, A∪y ∈ F ⇒ A∪{x,y} ∈ F.
struct AntimatroidForms {
  bool antimatroid = false;
  bool union_closed = false;
  bool local_union = false;
};

AntimatroidForms antimatroid_forms(const SetFamily& fam);

/// τ_K(X) = ⋂{A ∈ K : X ⊆ A}.  Requires E ∈ K and K intersection-closed.
SetOperator closure_from_closed_sets(const SetFamily& closed);

/// Fixed points of op.
SetFamily fixed_points(const SetOperator& op);

struct ConvexGeometryReport {
  PropertyReport geometry;       // C1 ∧ C2 ∧ C3 ∧ AE
  PropertyReport accessibility;  // ∀X ∈ K: x ∈ ex(X) ⇔ X−x ∈ K
  PropertyReport chain;          // chain property of the closed sets
  bool holds() const { return geometry.holds && accessibility.holds && chain.holds; }
};

ConvexGeometryReport check_convex_geometry(const SetOperator& op);
/// Family form: fam is K; builds τ_K first (malformed K throws).
ConvexGeometryReport check_convex_geometry(const SetFamily& closed);

/// Chain property: for X ⊂ Y in fam there is a chain from X to Y in fam
/// adding one element per step.  Witness roles X, Y.
PropertyReport check_chain_property(const SetFamily& fam);

/// B_X = ⋃{A ∈ F : A ⊆ X}; PreconditionError unless fam is an antimatroid.
Subset antimatroid_basis(const SetFamily& fam, const Subset& x);

/// Exhaustive antimatroid / convex geometry duality checks, in order:
///   complement-geometry  N = {E−X : X ∈ F} is a convex geometry
///   closure-of-complement  τ(E−X) = E − ex_σ(X)
///   ex-of-complement     ex_τ(E−X) = E − σ(X)
///   class-bijection      A ∈ [X]_σ ⇔ E−A ∈ [E−X]_τ
///   monotone-ex          X ⊆ Y ⇒ ex_σ(X) ⊆ ex_σ(Y)
///   basis-union          B_X is the unique σ-basis of X
/// PreconditionError unless fam is an antimatroid with n ≤ 16.
std::vector<PropertyReport> duality_suite(const SetFamily& fam);

}  // namespace cospan

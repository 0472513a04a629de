#pragma once

// Set operators 2^E -> 2^E and exhaustive checkers for their axioms.

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cospan/setcore.hpp"

namespace cospan {

/// A total map on 2^E.  Either backed by a dense table, or by a pure callback
/// that is memoized and materialized into a table on the first full scan.
/// Copies share state; the operator itself is immutable.
class SetOperator {
 public:
  using Callback = std::function<Mask(Mask)>;

  SetOperator(GroundSet ground, std::vector<Mask> table, std::string name = {});
  static SetOperator from_callback(GroundSet ground, Callback f, std::string name = {});

  static SetOperator identity(const GroundSet& ground);
  static SetOperator constant(const GroundSet& ground, Mask value, std::string name = {});

  const GroundSet& ground() const;
  const std::string& name() const;
  SetOperator renamed(std::string name) const;

  Mask operator()(Mask x) const;
  Subset operator()(const Subset& x) const;

  /// Dense table indexed by mask; tabulates a callback backend on first use.
  const std::vector<Mask>& table() const;
  bool is_tabulated() const;

  /// Tablewise equality over 2^E.
  friend bool operator==(const SetOperator& a, const SetOperator& b);

 private:
  struct Impl;
  explicit SetOperator(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

enum class Axiom {
  kV1,   // X ⊆ φ(X)
  kV2,   // X ⊆ Y ⊆ φ(X) ⇒ φ(X) = φ(Y)
  kVV2,  // X ⊆ φ(Y) ∧ Y ⊆ φ(X) ⇒ φ(X) = φ(Y)
  kC2,   // X ⊆ Y ⇒ φ(X) ⊆ φ(Y)
  kC3,   // φ(φ(X)) = φ(X)
  kCV1,  // c(X) ⊆ X
  kCV2,  // c(X) ⊆ Y ⊆ X ⇒ c(X) = c(Y)
  kAE,   // p,q ∉ φ(X), p ≠ q, p ∈ φ(X∪q) ⇒ q ∉ φ(X∪p)
  kEX,   // x ∉ φ(X), x ∈ φ(X∪y) ⇒ y ∈ φ(X∪x)
  kG3,   // greedoid rank-closure exchange, see check_axiom
};

std::string_view to_string(Axiom a);
Axiom parse_axiom(std::string_view name);  // throws InvalidArgumentError

/// Exhaustive evaluation of one axiom.  Witness roles: X, Y for set pairs;
/// X, p, q for AE; X, x, y for EX and G3.
///
/// G3: for all X and x ≠ y outside X, if φ(X∪y) = φ(X∪x∪y) and
/// φ(X∪x) ≠ φ(X∪x∪y) then some z ∈ X∪x has φ(X∪x−z) = φ(X∪x).
PropertyReport check_axiom(const SetOperator& op, Axiom axiom);

struct SpaceClass {
  bool violator = false;        // V1 ∧ V2
  bool co_violator = false;     // CV1 ∧ CV2
  bool closure = false;         // V1 ∧ C2 ∧ C3
  bool convex_geometry = false; // closure ∧ AE
};

SpaceClass classify_space(const SetOperator& op);

/// c(X) = E − op(E − X).
SetOperator dual_interior(const SetOperator& op);

/// ex(X) = {x ∈ X : x ∉ op(X − x)}.
Mask extreme_points(const SetOperator& op, Mask x);
Subset extreme_points(const SetOperator& op, const Subset& x);

/// The operator X ↦ ex(X), tabulated.
SetOperator extreme_point_operator(const SetOperator& op);

struct GeneratorsAndBases {
  SetFamily generators;  // {Y : op(Y) = op(X)}
  SetFamily bases;       // inclusion-minimal generators
};

GeneratorsAndBases generators_and_bases(const SetOperator& op, const Subset& x);

/// op(X) = op(Y) ⇒ op(X∩Y) = op(X) over all pairs; witness roles X, Y.
PropertyReport is_uniquely_generated(const SetOperator& op);

/// Independent route: every subset has exactly one basis.
bool every_subset_has_one_basis(const SetOperator& op);

struct IntersectionBasis {
  Subset basis;       // ⋂ of all generators of X
  bool is_generator;  // op(basis) = op(X)
};

IntersectionBasis basis_by_intersection(const SetOperator& op, const Subset& x);

}  // namespace cospan

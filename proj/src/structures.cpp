#include "cospan/structures.hpp"

#include <algorithm>
#include <iterator>
#include <unordered_map>

namespace cospan {

PropertyReport check_greedoid(const SetFamily& fam) {
  const auto& g = fam.ground();
  if (!fam.contains(Mask{0})) return PropertyReport::fail("greedoid", Witness(g).set("missing", 0));
  const auto& ms = fam.masks();
  for (Mask x : ms) {
    for (Mask y : ms) {
      if (popcount(x) <= popcount(y)) continue;
      bool augmentable = false;
      for_each_bit(x & ~y, [&](int e) { augmentable = augmentable || fam.contains(y | bit(e)); });
      if (!augmentable) return PropertyReport::fail("greedoid", Witness(g).set("X", x).set("Y", y));
    }
  }
  return PropertyReport::pass("greedoid");
}

Mask Greedoid::gamma(Mask x) const {
  Mask out = 0;
  for_each_bit(family_.ground().full_mask() & ~x, [&](int e) {
    if (family_.contains(x | bit(e))) out |= bit(e);
  });
  return out;
}

Greedoid build_greedoid(const SetFamily& fam) {
  const auto& g = fam.ground();
  require_dense(g.size(), "build_greedoid");
  if (auto rep = check_greedoid(fam); !rep.holds) {
    throw PreconditionError("family is not a greedoid: " + rep.witness->to_string());
  }
  const int n = g.size();
  const std::size_t size = g.hypercube_size();
  // r(X) = max over feasible A ⊆ X of |A|: a max-transform over submasks.
  std::vector<int> rank(size, -1);
  for (Mask a : fam.masks()) rank[a] = popcount(a);
  for (int i = 0; i < n; ++i) {
    for (Mask x = 0; x < size; ++x) {
      if (has_bit(x, i)) rank[x] = std::max(rank[x], rank[x & ~bit(i)]);
    }
  }
  std::vector<Mask> sigma(size);
  for (Mask x = 0; x < size; ++x) {
    Mask s = 0;
    for (int e = 0; e < n; ++e) {
      if (rank[x | bit(e)] == rank[x]) s |= bit(e);
    }
    sigma[x] = s;
  }
  return Greedoid(fam, std::move(rank), SetOperator(g, std::move(sigma), "sigma"));
}

SetFamily feasible_from_operator(const SetOperator& op) {
  require_dense(op.ground().size(), "feasible_from_operator");
  const auto ex = extreme_point_operator(op);
  const auto& t = ex.table();
  std::vector<Mask> out;
  for (Mask x = 0; x < t.size(); ++x) {
    if (t[x] == x) out.push_back(x);
  }
  return SetFamily(op.ground(), std::move(out));
}

FamilyClass classify_family(const SetFamily& fam) {
  FamilyClass c;
  c.reports.push_back(check_greedoid(fam));
  c.reports.push_back(family_predicate(fam, FamilyPredicate::kUnionClosed));
  c.reports.push_back(family_predicate(fam, FamilyPredicate::kHereditary));
  c.greedoid = c.reports[0].holds;
  c.antimatroid = c.greedoid && c.reports[1].holds;
  c.matroid = c.greedoid && c.reports[2].holds;
  return c;
}

AntimatroidForms antimatroid_forms(const SetFamily& fam) {
  AntimatroidForms f;
  f.union_closed = family_predicate(fam, FamilyPredicate::kUnionClosed).holds;
  f.antimatroid = f.union_closed && check_greedoid(fam).holds;
  const int n = fam.ground().size();
  f.local_union = true;
  for (Mask a : fam.masks()) {
    for (int x = 0; x < n && f.local_union; ++x) {
      if (has_bit(a, x) || !fam.contains(a | bit(x))) continue;
      for (int y = x + 1; y < n; ++y) {
        if (has_bit(a, y) || !fam.contains(a | bit(y))) continue;
        if (!fam.contains(a | bit(x) | bit(y))) {
          f.local_union = false;
          break;
        }
      }
    }
    if (!f.local_union) break;
  }
  return f;
}

SetOperator closure_from_closed_sets(const SetFamily& closed) {
  const auto& g = closed.ground();
  require_dense(g.size(), "closure_from_closed_sets");
  const Mask full = g.full_mask();
  if (!closed.contains(full)) throw PreconditionError("closed-set family must contain the ground set");
  if (auto rep = family_predicate(closed, FamilyPredicate::kIntersectionClosed); !rep.holds) {
    throw PreconditionError("closed-set family is not intersection-closed: " + rep.witness->to_string());
  }
  const int n = g.size();
  const std::size_t size = g.hypercube_size();
  // Intersection over closed supersets: an AND-transform over supermasks.
  std::vector<Mask> tau(size, full);
  for (Mask a : closed.masks()) tau[a] = a;
  for (int i = 0; i < n; ++i) {
    for (Mask x = 0; x < size; ++x) {
      if (!has_bit(x, i)) tau[x] &= tau[x | bit(i)];
    }
  }
  return {g, std::move(tau), "tau"};
}

SetFamily fixed_points(const SetOperator& op) {
  const auto& t = op.table();
  std::vector<Mask> out;
  for (Mask x = 0; x < t.size(); ++x) {
    if (t[x] == x) out.push_back(x);
  }
  return SetFamily(op.ground(), std::move(out));
}

PropertyReport check_chain_property(const SetFamily& fam) {
  const auto& g = fam.ground();
  const auto& ms = fam.masks();
  std::unordered_map<Mask, bool> reach;
  for (Mask y : ms) {
    std::vector<Mask> below;
    for (Mask x : ms) {
      if (is_submask(x, y)) below.push_back(x);
    }
    reach.clear();
    // Canonical order puts supersets after subsets; walk it backwards.
    for (auto it = below.rbegin(); it != below.rend(); ++it) {
      const Mask x = *it;
      bool ok = x == y;
      for_each_bit(y & ~x, [&](int e) {
        if (ok) return;
        auto r = reach.find(x | bit(e));
        ok = r != reach.end() && r->second;
      });
      reach[x] = ok;
    }
    for (Mask x : below) {
      if (!reach[x]) return PropertyReport::fail("chain", Witness(g).set("X", x).set("Y", y));
    }
  }
  return PropertyReport::pass("chain");
}

namespace {

PropertyReport geometry_axioms(const SetOperator& op) {
  for (Axiom a : {Axiom::kV1, Axiom::kC2, Axiom::kC3, Axiom::kAE}) {
    auto rep = check_axiom(op, a);
    if (!rep.holds) {
      rep.property = "convex-geometry/" + std::string(to_string(a));
      return rep;
    }
  }
  return PropertyReport::pass("convex-geometry");
}

PropertyReport accessibility(const SetOperator& op, const SetFamily& closed) {
  const auto& g = op.ground();
  for (Mask x : closed.masks()) {
    const Mask ex = extreme_points(op, x);
    PropertyReport bad = PropertyReport::pass("accessibility");
    for_each_bit(x, [&](int e) {
      if (bad.holds && has_bit(ex, e) != closed.contains(x & ~bit(e))) {
        bad = PropertyReport::fail("accessibility", Witness(g).set("X", x).element("x", e));
      }
    });
    if (!bad.holds) return bad;
  }
  return PropertyReport::pass("accessibility");
}

}  // namespace

ConvexGeometryReport check_convex_geometry(const SetOperator& op) {
  require_dense(op.ground().size(), "check_convex_geometry");
  const auto closed = fixed_points(op);
  return {geometry_axioms(op), accessibility(op, closed), check_chain_property(closed)};
}

ConvexGeometryReport check_convex_geometry(const SetFamily& closed) {
  return check_convex_geometry(closure_from_closed_sets(closed));
}

Subset antimatroid_basis(const SetFamily& fam, const Subset& x) {
  require_same_ground(fam.ground(), x.ground());
  if (!classify_family(fam).antimatroid) throw PreconditionError("family is not an antimatroid");
  Mask u = 0;
  for (Mask a : fam.masks()) {
    if (is_submask(a, x.mask())) u |= a;
  }
  return {fam.ground(), u};
}

std::vector<PropertyReport> duality_suite(const SetFamily& fam) {
  const auto& g = fam.ground();
  if (g.size() > 16) throw CapacityError("duality_suite supports at most 16 elements");
  require_dense(g.size(), "duality_suite");
  if (!classify_family(fam).antimatroid) throw PreconditionError("duality suite requires an antimatroid");

  const int n = g.size();
  const Mask full = g.full_mask();
  const std::size_t size = g.hypercube_size();
  const auto greedoid = build_greedoid(fam);
  const auto& sigma = greedoid.sigma().table();
  const auto ex_sigma_op = extreme_point_operator(greedoid.sigma());
  const auto& ex_sigma = ex_sigma_op.table();
  const auto complement = complement_family(fam);

  std::vector<PropertyReport> out;

  {
    auto rep = check_convex_geometry(complement).geometry;
    rep.property = "complement-geometry" + (rep.holds ? std::string{} : " (" + rep.property + ")");
    out.push_back(std::move(rep));
  }

  const auto tau_op = closure_from_closed_sets(complement);
  const auto& tau = tau_op.table();
  const auto ex_tau_op = extreme_point_operator(tau_op);
  const auto& ex_tau = ex_tau_op.table();

  auto pointwise = [&](const char* name, auto&& ok) {
    for (Mask x = 0; x < size; ++x) {
      if (!ok(x)) return PropertyReport::fail(name, Witness(g).set("X", x));
    }
    return PropertyReport::pass(name);
  };

  out.push_back(pointwise("closure-of-complement", [&](Mask x) { return tau[full & ~x] == (full & ~ex_sigma[x]); }));
  out.push_back(pointwise("ex-of-complement", [&](Mask x) { return ex_tau[full & ~x] == (full & ~sigma[x]); }));

  {
    const auto p_sigma = partition_from_operator(greedoid.sigma());
    const auto mirrored = complement_partition(p_sigma);
    const auto p_tau = partition_from_operator(tau_op);
    PropertyReport rep = PropertyReport::pass("class-bijection");
    for (Mask y = 0; y < size && rep.holds; ++y) {
      const auto& a = mirrored.cls(mirrored.class_of(y)).members;
      const auto& b = p_tau.cls(p_tau.class_of(y)).members;
      if (a == b) continue;
      std::vector<Mask> diff;
      std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
      rep = PropertyReport::fail("class-bijection", Witness(g).set("X", full & ~y).set("A", full & ~diff.front()));
    }
    out.push_back(std::move(rep));
  }

  {
    PropertyReport rep = PropertyReport::pass("monotone-ex");
    for (Mask x = 0; x < size && rep.holds; ++x) {
      for (int e = 0; e < n; ++e) {
        if (has_bit(x, e)) continue;
        if (!is_submask(ex_sigma[x], ex_sigma[x | bit(e)])) {
          rep = PropertyReport::fail("monotone-ex", Witness(g).set("X", x).set("Y", x | bit(e)));
          break;
        }
      }
    }
    out.push_back(std::move(rep));
  }

  {
    std::vector<Mask> union_below(size, 0);
    for (Mask a : fam.masks()) union_below[a] = a;
    for (int i = 0; i < n; ++i) {
      for (Mask x = 0; x < size; ++x) {
        if (has_bit(x, i)) union_below[x] |= union_below[x & ~bit(i)];
      }
    }
    const auto p_sigma = partition_from_operator(greedoid.sigma());
    out.push_back(pointwise("basis-union", [&](Mask x) {
      const auto& minima = p_sigma.cls(p_sigma.class_of(x)).minima;
      return minima.size() == 1 && minima.front() == union_below[x];
    }));
  }
  return out;
}

}  // namespace cospan

#include "cospan/verify.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "cospan/cospanning.hpp"
#include "cospan/instances.hpp"
#include "cospan/operators.hpp"
#include "cospan/structures.hpp"

namespace cospan {

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::kAll: return "all";
    case Suite::kViolator: return "violator";
    case Suite::kGreedoid: return "greedoid";
    case Suite::kAntimatroid: return "antimatroid";
    case Suite::kMatroid: return "matroid";
    case Suite::kConvexGeometry: return "convex-geometry";
    case Suite::kDuality: return "duality";
  }
  return "?";
}

Suite parse_suite(std::string_view name) {
  for (auto s : {Suite::kAll, Suite::kViolator, Suite::kGreedoid, Suite::kAntimatroid, Suite::kMatroid,
                 Suite::kConvexGeometry, Suite::kDuality}) {
    if (to_string(s) == name) return s;
  }
  throw InvalidArgumentError("unknown suite \"" + std::string(name) + "\"");
}

bool VerifyReport::holds() const {
  return std::all_of(theorems.begin(), theorems.end(), [](const TheoremResult& t) { return t.holds(); });
}

namespace {

constexpr int kOperatorBound = 3;
constexpr int kFamilyBound = 4;

using Table = std::vector<Mask>;
using Check = std::optional<Witness>;
using MakeCx = std::function<Counterexample()>;

class Runner {
 public:
  TheoremResult& add(std::string name, int n) {
    auto& t = theorems_.emplace_back();
    t.name = std::move(name);
    t.n = n;
    return t;
  }

  // First report of a count wins, so suites sharing an enumeration agree.
  void count(const std::string& what, std::size_t k) {
    for (const auto& entry : counts_) {
      if (entry.first == what) return;
    }
    counts_.emplace_back(what, k);
  }

  VerifyReport finish(bool sampled) {
    VerifyReport r;
    r.sampled = sampled;
    r.theorems.assign(theorems_.begin(), theorems_.end());
    r.counts = counts_;
    return r;
  }

 private:
  std::deque<TheoremResult> theorems_;  // stable references
  std::vector<std::pair<std::string, std::size_t>> counts_;
};

void record(TheoremResult& t, bool ok, const MakeCx& make) {
  ++t.checked;
  if (ok) return;
  if (t.counterexamples++ == 0) t.first = make();
}

MakeCx about(const SetOperator& op, Check w = std::nullopt, std::string note = {}) {
  return [=] { return Counterexample{io::operator_to_json(op), w, note}; };
}
MakeCx about(const SetFamily& fam, Check w = std::nullopt, std::string note = {}) {
  return [=] { return Counterexample{io::family_to_json(fam), w, note}; };
}
MakeCx about(const CospanningPartition& p, Check w = std::nullopt, std::string note = {}) {
  return [=] { return Counterexample{io::partition_to_json(p), w, note}; };
}

template <class Subject>
void record_check(TheoremResult& t, const Check& w, const Subject& s) {
  record(t, !w.has_value(), about(s, w));
}

template <class Subject>
void record_report(TheoremResult& t, const PropertyReport& rep, const Subject& s) {
  record(t, rep.holds, about(s, rep.witness, rep.holds ? std::string{} : rep.property));
}

Check first_failure(std::initializer_list<PropertyReport> reps) {
  for (const auto& r : reps) {
    if (!r.holds) return r.witness;
  }
  return std::nullopt;
}

bool has_rel(const CospanningPartition& p, RelationProperty r) { return check_relation_property(p, r).holds; }

bool all_rel(const CospanningPartition& p, std::initializer_list<RelationProperty> rs) {
  return std::all_of(rs.begin(), rs.end(), [&](RelationProperty r) { return has_rel(p, r); });
}

std::optional<SetOperator> try_reconstruct(const CospanningPartition& p, ExtremalSide side) {
  try {
    return operator_from_partition(p, side);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

std::optional<IntervalPartition> try_intervals(const CospanningPartition& p) {
  try {
    return interval_form(p);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

/// The greedoid whose σ-partition is p, if p is one.
std::optional<Greedoid> greedoid_of_partition(const CospanningPartition& p) {
  const auto minima = extremal_sets(p, ExtremalSide::kMin);
  if (!check_greedoid(minima).holds) return std::nullopt;
  auto g = build_greedoid(minima);
  if (!(partition_from_operator(g.sigma()) == p)) return std::nullopt;
  return g;
}

std::uint64_t sample_seed(std::uint64_t seed, std::size_t i) {
  return seed * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL * (i + 1);
}

// ---------------------------------------------------------------------------
// Table-level lemmas; each returns the first violating witness.

// t[X] = t[Y] ⇒ t[X∪Y] = t[X]  (join)  or  t[X∩Y] = t[X]  (meet)
Check fibre_closed(const GroundSet& g, const Table& t, bool join) {
  for (Mask x = 0; x < t.size(); ++x) {
    for (Mask y = x + 1; y < t.size(); ++y) {
      if (t[x] == t[y] && t[join ? (x | y) : (x & y)] != t[x]) return Witness(g).set("X", x).set("Y", y);
    }
  }
  return std::nullopt;
}

// X ⊆ Y ⊆ Z ∧ t[X] = t[Z] ⇒ t[Y] = t[X]
Check sandwich(const GroundSet& g, const Table& t) {
  for (Mask z = 0; z < t.size(); ++z) {
    Check bad;
    for_each_submask(z, [&](Mask y) {
      if (bad) return;
      for_each_submask(y, [&](Mask x) {
        if (!bad && t[x] == t[z] && t[y] != t[x]) bad = Witness(g).set("X", x).set("Y", y).set("Z", z);
      });
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

Check idempotent(const GroundSet& g, const Table& t) {
  for (Mask x = 0; x < t.size(); ++x) {
    if (t[t[x]] != t[x]) return Witness(g).set("X", x);
  }
  return std::nullopt;
}

// B ⊆ φ(A) ⇔ φ(A) = φ(A∪B)
Check lemma2_law(const GroundSet& g, const Table& t) {
  for (Mask a = 0; a < t.size(); ++a) {
    for (Mask b = 0; b < t.size(); ++b) {
      if (is_submask(b, t[a]) != (t[a] == t[a | b])) return Witness(g).set("A", a).set("B", b);
    }
  }
  return std::nullopt;
}

// x ∈ φ(X) ⇔ φ(X) = φ(X∪x)
Check corollary_law(const GroundSet& g, const Table& t) {
  for (Mask x = 0; x < t.size(); ++x) {
    for (int e = 0; e < g.size(); ++e) {
      if (has_bit(t[x], e) != (t[x] == t[x | bit(e)])) return Witness(g).set("X", x).element("x", e);
    }
  }
  return std::nullopt;
}

// ex(X) = ⋂{B ⊆ X : φ(B) = φ(X)}
Check exp_law(const GroundSet& g, const Table& t, const Table& ex) {
  for (Mask x = 0; x < t.size(); ++x) {
    Mask meet = x;
    for_each_submask(x, [&](Mask b) {
      if (t[b] == t[x]) meet &= b;
    });
    if (meet != ex[x]) return Witness(g).set("X", x);
  }
  return std::nullopt;
}

// ex(φ(X)) ⊆ ex(X)
Check exp_vs_law(const GroundSet& g, const Table& t, const Table& ex) {
  for (Mask x = 0; x < t.size(); ++x) {
    if (!is_submask(ex[t[x]], ex[x])) return Witness(g).set("X", x);
  }
  return std::nullopt;
}

// ex(X) ⊆ Y ⊆ X ⇒ ex(X) = ex(Y)
Check x5_law(const GroundSet& g, const Table& ex) {
  for (Mask x = 0; x < ex.size(); ++x) {
    Check bad;
    for_each_submask(x & ~ex[x], [&](Mask s) {
      if (!bad && ex[ex[x] | s] != ex[x]) bad = Witness(g).set("X", x).set("Y", ex[x] | s);
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

// φ(ex(X)) = φ(X)
Check x6_law(const GroundSet& g, const Table& t, const Table& ex) {
  for (Mask x = 0; x < t.size(); ++x) {
    if (t[ex[x]] != t[x]) return Witness(g).set("X", x);
  }
  return std::nullopt;
}

// ex(φ(X)) = ex(X)
Check x7_law(const GroundSet& g, const Table& t, const Table& ex) {
  for (Mask x = 0; x < t.size(); ++x) {
    if (ex[t[x]] != ex[x]) return Witness(g).set("X", x);
  }
  return std::nullopt;
}

bool extensive(const Table& t) {
  for (Mask x = 0; x < t.size(); ++x) {
    if (!is_submask(x, t[x])) return false;
  }
  return true;
}

// Augmentation of minimal sets: A minimal, a ∉ A, A ≁ A∪a ⇒ A∪a minimal.
Check minimal_augmentation(const CospanningPartition& p) {
  const auto& g = p.ground();
  const auto minima = extremal_sets(p, ExtremalSide::kMin);
  for (Mask a : minima.masks()) {
    for (int e = 0; e < g.size(); ++e) {
      if (has_bit(a, e) || p.related(a, a | bit(e))) continue;
      if (!minima.contains(a | bit(e))) return Witness(g).set("A", a).element("a", e);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Violator spaces

struct ViolatorOracles {
  TheoremResult &sc_g, &lem2, &co_operator, &t_rel, &lemma2, &corollary, &un, &idem, &exp, &exp_vs, &th, &ug_forms,
      &outcast, &x1x4, &clarkson, &co_un, &co_idem, &cv_rel;

  explicit ViolatorOracles(Runner& r, int n)
      : sc_g(r.add("SC_G: V2 ⇔ VV2 for extensive operators", n)),
        lem2(r.add("lem2: closure operators satisfy V2", n)),
        co_operator(r.add("co-operator: violator ⇔ dual interior is co-violator", n)),
        t_rel(r.add("T_rel: violator partitions satisfy R1 ∧ R2", n)),
        lemma2(r.add("lemma2: B ⊆ φ(A) ⇔ φ(A) = φ(A∪B)", n)),
        corollary(r.add("corollary: x ∈ φ(X) ⇔ φ(X) = φ(X∪x)", n)),
        un(r.add("un: generators closed under union and sandwich", n)),
        idem(r.add("idempotence of violator operators", n)),
        exp(r.add("exp: ex(X) is the meet of generators inside X", n)),
        exp_vs(r.add("exp-vs: ex(φ(X)) ⊆ ex(X)", n)),
        th(r.add("TH: uniquely generated ⇔ anti-exchange", n)),
        ug_forms(r.add("intersection property ⇔ one basis per subset", n)),
        outcast(r.add("outcast_u: uniquely generated ⇔ X5 ⇔ X6 ⇔ X7", n)),
        x1x4(r.add("X1-X4: ex laws in uniquely generated spaces", n)),
        clarkson(r.add("Clarkson: uniquely generated ⇒ classes are [ex(A), φ(A)]", n)),
        co_un(r.add("co-un: co-violator generators closed under meet and sandwich", n)),
        co_idem(r.add("idempotence of co-violator operators", n)),
        cv_rel(r.add("cv_rel: co-violator partitions satisfy R3 ∧ R2", n)) {}

  void run(const SetOperator& op) {
    const auto& g = op.ground();
    const auto& t = op.table();
    const auto cls = classify_space(op);
    const auto dual = dual_interior(op);
    const auto dual_cls = classify_space(dual);

    if (extensive(t)) {
      record(sc_g, check_axiom(op, Axiom::kV2).holds == check_axiom(op, Axiom::kVV2).holds, about(op));
    }
    if (cls.closure) record_report(lem2, check_axiom(op, Axiom::kV2), op);
    record(co_operator, cls.violator == dual_cls.co_violator, about(op));

    if (cls.violator) run_violator(op, g, t);

    if (dual_cls.co_violator) {
      const auto& c = dual.table();
      Check w = fibre_closed(g, c, false);
      if (!w) w = sandwich(g, c);
      record_check(co_un, w, dual);
      record_check(co_idem, idempotent(g, c), dual);
      const auto p = partition_from_operator(dual);
      record(cv_rel, all_rel(p, {RelationProperty::kR3, RelationProperty::kR2}), about(dual));
    }
  }

  void run_violator(const SetOperator& op, const GroundSet& g, const Table& t) {
    const auto p = partition_from_operator(op);
    record(t_rel, all_rel(p, {RelationProperty::kR1, RelationProperty::kR2}), about(op));
    record_check(lemma2, lemma2_law(g, t), op);
    record_check(corollary, corollary_law(g, t), op);
    {
      Check w = fibre_closed(g, t, true);
      if (!w) w = sandwich(g, t);
      record_check(un, w, op);
    }
    record_check(idem, idempotent(g, t), op);
    const auto ex_op = extreme_point_operator(op);
    const auto& ex = ex_op.table();
    record_check(exp, exp_law(g, t, ex), op);
    record_check(exp_vs, exp_vs_law(g, t, ex), op);

    const auto ug = is_uniquely_generated(op);
    const auto ae = check_axiom(op, Axiom::kAE);
    record(th, ug.holds == ae.holds, about(op, ug.holds ? ae.witness : ug.witness));
    record(ug_forms, ug.holds == every_subset_has_one_basis(op), about(op, ug.witness));
    const bool b5 = !x5_law(g, ex), b6 = !x6_law(g, t, ex), b7 = !x7_law(g, t, ex);
    record(outcast, ug.holds == b5 && b5 == b6 && b6 == b7,
           about(op, std::nullopt,
                 "UG=" + std::to_string(ug.holds) + " X5=" + std::to_string(b5) + " X6=" + std::to_string(b6) +
                     " X7=" + std::to_string(b7)));
    if (!ug.holds) return;

    Check w = idempotent(g, ex);
    if (!w) w = fibre_closed(g, ex, true);
    if (!w) w = sandwich(g, ex);
    if (!w) w = fibre_closed(g, ex, false);
    record_check(x1x4, w, op);

    Check where;
    bool ok = true;
    if (auto ip = try_intervals(p)) {
      for (Mask a = 0; a < t.size() && ok; ++a) {
        const auto& iv = ip->intervals()[ip->interval_of(a)];
        if (iv.lo != ex[a] || iv.hi != t[a]) {
          ok = false;
          where = Witness(g).set("A", a);
        }
      }
    } else {
      ok = false;
    }
    record(clarkson, ok, about(op, where));
  }
};

struct ViolatorPartitionOracles {
  TheoremResult &t_rel, &cv_rel, &r3_r33, &clarkson;

  ViolatorPartitionOracles(Runner& r, int n, bool exhaustive)
      : t_rel(r.add(exhaustive ? "T_rel: R1 ∧ R2 ⇔ max-reconstruction is a violator space with round trip"
                               : "T_rel: violator partitions reconstruct with round trip",
                    n)),
        cv_rel(r.add(exhaustive ? "cv_rel: R3 ∧ R2 ⇔ min-reconstruction is a co-violator space with round trip"
                                : "cv_rel: co-violator partitions reconstruct with round trip",
                     n)),
        r3_r33(r.add("R3 ⇔ R33 under R1 ∧ R2", n)),
        clarkson(r.add("Clarkson: interval partitions reconstruct to uniquely generated violator spaces", n)) {}

  static bool round_trip(const CospanningPartition& p, ExtremalSide side) {
    const auto op = try_reconstruct(p, side);
    if (!op) return false;
    const auto c = classify_space(*op);
    return (side == ExtremalSide::kMax ? c.violator : c.co_violator) && partition_from_operator(*op) == p;
  }

  void run(const CospanningPartition& p) {
    const bool r1 = has_rel(p, RelationProperty::kR1);
    const bool r2 = has_rel(p, RelationProperty::kR2);
    const bool r3 = has_rel(p, RelationProperty::kR3);
    record(t_rel, (r1 && r2) == round_trip(p, ExtremalSide::kMax), about(p));
    record(cv_rel, (r3 && r2) == round_trip(p, ExtremalSide::kMin), about(p));
    if (r1 && r2) record(r3_r33, r3 == has_rel(p, RelationProperty::kR33), about(p));
    if (try_intervals(p)) run_interval(p);
  }

  void run_interval(const CospanningPartition& p) {
    const auto op = try_reconstruct(p, ExtremalSide::kMax);
    const bool ok = op && classify_space(*op).violator && is_uniquely_generated(*op).holds &&
                    partition_from_operator(*op) == p;
    record(clarkson, ok, about(p));
  }
};

void violator_suite(Runner& r, const VerifyOptions& o) {
  if (!o.samples) {
    const int n = std::min(o.n, kOperatorBound);
    ViolatorOracles ops(r, n);
    r.count("extensive operators", for_each_operator(n, SpaceKind::kExtensive, [&](const SetOperator& op) {
              ops.run(op);
            }));
    ViolatorPartitionOracles parts(r, n, true);
    r.count("partitions", for_each_partition(n, SpaceKind::kPartition, [&](const CospanningPartition& p) {
              parts.run(p);
            }));
    return;
  }
  ViolatorOracles ops(r, o.n);
  ViolatorPartitionOracles parts(r, o.n, false);
  for (std::size_t i = 0; i < *o.samples; ++i) {
    const auto seed = sample_seed(o.seed, i);
    if (i % 2 == 0) {
      const auto p = random_hypercube_partition(o.n, seed).to_partition();
      parts.run_interval(p);
      ops.run(operator_from_partition(p, ExtremalSide::kMax));
    } else {
      const auto op = closure_from_closed_sets(random_closed_family(o.n, seed));
      ops.run(op);
      const auto p = partition_from_operator(op);
      record(parts.t_rel, ViolatorPartitionOracles::round_trip(p, ExtremalSide::kMax), about(p));
      const auto c = partition_from_operator(dual_interior(op));
      record(parts.cv_rel, ViolatorPartitionOracles::round_trip(c, ExtremalSide::kMin), about(c));
      if (all_rel(p, {RelationProperty::kR1, RelationProperty::kR2})) {
        record(parts.r3_r33, has_rel(p, RelationProperty::kR3) == has_rel(p, RelationProperty::kR33), about(p));
      }
    }
  }
  r.count("samples", *o.samples);
}

// ---------------------------------------------------------------------------
// Greedoids

struct GreedoidOracles {
  TheoremResult &l_gr, &g3, &g1g3, &t_gr, &bb, &aug_p, &sigma_gamma;

  GreedoidOracles(Runner& r, int n)
      : l_gr(r.add("L_Gr: σ satisfies V1 ∧ VV2 and exchange (iii)", n)),
        g3(r.add("σ satisfies G3", n)),
        g1g3(r.add("G1-G3: σ satisfies V1 ∧ V2 ∧ G3", n)),
        t_gr(r.add("T_Gr: σ-partitions satisfy R1 ∧ R2 ∧ R4G", n)),
        bb(r.add("BB: minimal class members and fixed points of ex are F", n)),
        aug_p(r.add("aug_p: minimal members of a σ-class share cardinality", n)),
        sigma_gamma(r.add("σ(X) = E − Γ(X) for feasible X", n)) {}

  static Check exchange_iii(const SetFamily& fam, const Table& s) {
    const auto& g = fam.ground();
    const int n = g.size();
    for (Mask x = 0; x < s.size(); ++x) {
      for (int a = 0; a < n; ++a) {
        if (has_bit(x, a) || !fam.contains(x | bit(a))) continue;
        for (int b = 0; b < n; ++b) {
          if (has_bit(x, b)) continue;
          if (has_bit(s[x | bit(b)], a) && !has_bit(s[x | bit(a)], b)) {
            return Witness(g).set("X", x).element("x", a).element("y", b);
          }
        }
      }
    }
    return std::nullopt;
  }

  void run(const SetFamily& fam, const Greedoid& gr) {
    const auto& g = fam.ground();
    const auto& sigma = gr.sigma();
    const auto& s = sigma.table();
    {
      Check w = first_failure({check_axiom(sigma, Axiom::kV1), check_axiom(sigma, Axiom::kVV2)});
      if (!w) w = exchange_iii(fam, s);
      record_check(l_gr, w, fam);
    }
    const auto g3_rep = check_axiom(sigma, Axiom::kG3);
    record_report(g3, g3_rep, sigma);
    record(g1g3, check_axiom(sigma, Axiom::kV1).holds && check_axiom(sigma, Axiom::kV2).holds && g3_rep.holds,
           about(sigma));
    const auto p = partition_from_operator(sigma);
    record(t_gr, all_rel(p, {RelationProperty::kR1, RelationProperty::kR2, RelationProperty::kR4G}), about(fam));
    record(bb, feasible_from_operator(sigma) == fam && extremal_sets(p, ExtremalSide::kMin) == fam, about(fam));
    {
      bool ok = true;
      Check where;
      for (const auto& c : p.classes()) {
        for (Mask m : c.minima) {
          if (ok && popcount(m) != popcount(c.minima.front())) {
            ok = false;
            where = Witness(g).set("X", c.minima.front()).set("Y", m);
          }
        }
      }
      record(aug_p, ok, about(fam, where));
    }
    {
      Check where;
      for (Mask x : fam.masks()) {
        if (!where && s[x] != (g.full_mask() & ~gr.gamma(x))) where = Witness(g).set("X", x);
      }
      record_check(sigma_gamma, where, fam);
    }
  }
};

void greedoid_suite(Runner& r, const VerifyOptions& o) {
  if (!o.samples) {
    const int nf = std::min(o.n, kFamilyBound);
    GreedoidOracles fams(r, nf);
    r.count("families", std::size_t{1} << (std::size_t{1} << nf));
    r.count("greedoids", for_each_family(nf, SpaceKind::kGreedoid, [&](const SetFamily& f) {
              fams.run(f, build_greedoid(f));
            }));
    const int n = std::min(o.n, kOperatorBound);
    auto& rank_closures = r.add("G1-G3: V1 ∧ V2 ∧ G3 operators are rank-closures of their feasible sets", n);
    auto& t_gr = r.add("T_Gr: R1 ∧ R2 ∧ R4G partitions are σ-partitions of their minimal sets", n);
    auto& aug = r.add("aug_p: R4G ⇔ augmentation of minimal sets under R1 ∧ R2", n);
    for_each_operator(n, SpaceKind::kViolator, [&](const SetOperator& op) {
      if (!check_axiom(op, Axiom::kG3).holds) return;
      const auto fam = feasible_from_operator(op);
      record(rank_closures, check_greedoid(fam).holds && build_greedoid(fam).sigma() == op, about(op));
    });
    r.count("partitions", for_each_partition(n, SpaceKind::kPartition, [&](const CospanningPartition& p) {
              if (!all_rel(p, {RelationProperty::kR1, RelationProperty::kR2})) return;
              const bool r4g = has_rel(p, RelationProperty::kR4G);
              record(aug, r4g == !minimal_augmentation(p), about(p));
              if (r4g) record(t_gr, greedoid_of_partition(p).has_value(), about(p));
            }));
    return;
  }
  GreedoidOracles fams(r, o.n);
  for (std::size_t i = 0; i < *o.samples; ++i) {
    const auto seed = sample_seed(o.seed, i);
    const auto f = i % 2 == 0 ? random_antimatroid(o.n, seed) : random_matroid(o.n, seed);
    fams.run(f, build_greedoid(f));
  }
  r.count("samples", *o.samples);
}

// ---------------------------------------------------------------------------
// Antimatroids and matroids

struct AntimatroidOracles {
  TheoremResult &ug_a, &relations;

  AntimatroidOracles(Runner& r, int n)
      : ug_a(r.add("UG_A: antimatroid ⇔ σ uniquely generated ⇔ σ anti-exchange", n)),
        relations(r.add("antimatroid partitions satisfy R1 ∧ R2 ∧ R3 ∧ R4G and EqAN", n)) {}

  void run(const SetFamily& fam, const Greedoid& gr) {
    const bool am = classify_family(fam).antimatroid;
    const auto ug = is_uniquely_generated(gr.sigma());
    const auto ae = check_axiom(gr.sigma(), Axiom::kAE);
    record(ug_a, am == ug.holds && ug.holds == ae.holds, about(fam));
    if (!am) return;
    const auto p = partition_from_operator(gr.sigma());
    const bool ok = all_rel(p, {RelationProperty::kR1, RelationProperty::kR2, RelationProperty::kR3,
                                RelationProperty::kR4G}) &&
                    try_intervals(p) && has_rel(p, RelationProperty::kEqAN);
    record(relations, ok, about(fam));
  }
};

void antimatroid_suite(Runner& r, const VerifyOptions& o) {
  if (!o.samples) {
    const int nf = std::min(o.n, kFamilyBound);
    AntimatroidOracles am(r, nf);
    auto& forms = r.add("antimatroid forms agree on accessible families", nf);
    r.count("families", for_each_family(nf, SpaceKind::kFamily, [&](const SetFamily& f) {
              if (!f.contains(Mask{0}) || !family_predicate(f, FamilyPredicate::kAccessible).holds) return;
              const auto forms_ = antimatroid_forms(f);
              record(forms, forms_.antimatroid == forms_.union_closed && forms_.union_closed == forms_.local_union,
                     about(f));
              if (check_greedoid(f).holds) am.run(f, build_greedoid(f));
            }));
    const int n = std::min(o.n, kOperatorBound);
    auto& relation = r.add("R1 ∧ R2 ∧ R3 ∧ R4G ⇔ antimatroid σ-partition", n);
    auto& eq_an = r.add("EqAN interval partitions are antimatroid σ-partitions", n);
    auto& eq_an_aug = r.add("EqAN ⇔ augmentation of minimal sets on interval partitions", n);
    for_each_partition(n, SpaceKind::kPartition, [&](const CospanningPartition& p) {
      const auto gr = greedoid_of_partition(p);
      const bool is_am = gr && classify_family(gr->family()).antimatroid;
      const bool rel = all_rel(p, {RelationProperty::kR1, RelationProperty::kR2, RelationProperty::kR3,
                                   RelationProperty::kR4G});
      record(relation, rel == is_am, about(p));
      if (!try_intervals(p)) return;
      const bool an = has_rel(p, RelationProperty::kEqAN);
      record(eq_an_aug, an == !minimal_augmentation(p), about(p));
      if (an) record(eq_an, is_am, about(p));
    });
    return;
  }
  AntimatroidOracles am(r, o.n);
  for (std::size_t i = 0; i < *o.samples; ++i) {
    const auto seed = sample_seed(o.seed, i);
    const auto f = i % 4 == 3 ? random_matroid(o.n, seed) : random_antimatroid(o.n, seed);
    am.run(f, build_greedoid(f));
  }
  r.count("samples", *o.samples);
}

struct MatroidOracles {
  TheoremResult &relations, &r5;

  MatroidOracles(Runner& r, int n)
      : relations(r.add("matroid partitions satisfy R1 ∧ R2 ∧ R4G ∧ R5; σ satisfies EX", n)),
        r5(r.add("R5 on a greedoid σ-partition ⇔ matroid", n)) {}

  void run(const SetFamily& fam, const Greedoid& gr) {
    const auto p = partition_from_operator(gr.sigma());
    const bool mat = classify_family(fam).matroid;
    record(r5, has_rel(p, RelationProperty::kR5) == mat, about(fam));
    if (!mat) return;
    const bool ok =
        all_rel(p, {RelationProperty::kR1, RelationProperty::kR2, RelationProperty::kR4G, RelationProperty::kR5}) &&
        check_axiom(gr.sigma(), Axiom::kEX).holds;
    record(relations, ok, about(fam));
  }
};

void matroid_suite(Runner& r, const VerifyOptions& o) {
  if (!o.samples) {
    const int nf = std::min(o.n, kFamilyBound);
    MatroidOracles mat(r, nf);
    r.count("families", std::size_t{1} << (std::size_t{1} << nf));
    r.count("greedoids", for_each_family(nf, SpaceKind::kGreedoid, [&](const SetFamily& f) {
              mat.run(f, build_greedoid(f));
            }));
    const int n = std::min(o.n, kOperatorBound);
    auto& relation = r.add("R1 ∧ R2 ∧ R4G ∧ R5 ⇔ matroid σ-partition", n);
    for_each_partition(n, SpaceKind::kPartition, [&](const CospanningPartition& p) {
      const auto gr = greedoid_of_partition(p);
      const bool is_mat = gr && classify_family(gr->family()).matroid;
      const bool rel = all_rel(p, {RelationProperty::kR1, RelationProperty::kR2, RelationProperty::kR4G,
                                   RelationProperty::kR5});
      record(relation, rel == is_mat, about(p));
    });
    return;
  }
  MatroidOracles mat(r, o.n);
  for (std::size_t i = 0; i < *o.samples; ++i) {
    const auto seed = sample_seed(o.seed, i);
    const auto f = i % 4 == 3 ? random_antimatroid(o.n, seed) : random_matroid(o.n, seed);
    mat.run(f, build_greedoid(f));
  }
  r.count("samples", *o.samples);
}

// ---------------------------------------------------------------------------
// Convex geometries

struct GeometryOracles {
  TheoremResult &cltov, &augm_cs, &r4cg, &cg_ug, &cg_report, &cg_partition;

  GeometryOracles(Runner& r, int n)
      : cltov(r.add("cltov: closure spaces are violator spaces", n)),
        augm_cs(r.add("Augm_CS: for closed X, X−x ≁ X ⇔ X−x closed", n)),
        r4cg(r.add("closure partitions satisfy R4CG", n)),
        cg_ug(r.add("closure spaces: anti-exchange ⇔ uniquely generated", n)),
        cg_report(r.add("convex geometries: accessibility and chain property of closed sets", n)),
        cg_partition(r.add("convex-geometry partitions are interval partitions with EqCL", n)) {}

  void run(const SetOperator& op) {
    const auto cls = classify_space(op);
    if (!cls.closure) return;
    const auto& g = op.ground();
    record(cltov, cls.violator, about(op));
    const auto p = partition_from_operator(op);
    {
      Check where;
      const auto closed = fixed_points(op);
      for (Mask x : closed.masks()) {
        for_each_bit(x, [&](int e) {
          const Mask y = x & ~bit(e);
          if (!where && (!p.related(y, x)) != (op(y) == y)) where = Witness(g).set("X", x).element("x", e);
        });
      }
      record_check(augm_cs, where, op);
    }
    record_report(r4cg, check_relation_property(p, RelationProperty::kR4CG), op);
    record(cg_ug, cls.convex_geometry == is_uniquely_generated(op).holds, about(op));
    if (!cls.convex_geometry) return;
    const auto rep = check_convex_geometry(op);
    record(cg_report, rep.holds(), about(op, first_failure({rep.geometry, rep.accessibility, rep.chain})));
    record(cg_partition, try_intervals(p) && has_rel(p, RelationProperty::kEqCL), about(op));
  }
};

// lem_cg: C ⊆ B, C ∉ [A,B] ⇒ ∃x ∈ B−C with B−x an interval maximum.
Check lem_cg_law(const IntervalPartition& ip) {
  const auto& g = ip.ground();
  for (const auto& [lo, hi] : ip.intervals()) {
    Check bad;
    for_each_submask(hi, [&](Mask c) {
      if (bad || is_submask(lo, c)) return;
      bool found = false;
      for_each_bit(hi & ~c, [&](int x) {
        const Mask top = hi & ~bit(x);
        found = found || ip.intervals()[ip.interval_of(top)].hi == top;
      });
      if (!found) bad = Witness(g).set("A", lo).set("B", hi).set("C", c);
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

void geometry_suite(Runner& r, const VerifyOptions& o) {
  if (!o.samples) {
    const int n = std::min(o.n, kOperatorBound);
    GeometryOracles ops(r, n);
    r.count("extensive operators", for_each_operator(n, SpaceKind::kExtensive, [&](const SetOperator& op) {
              ops.run(op);
            }));
    auto& eq_cl = r.add("EqCL interval partitions reconstruct to convex geometries", n);
    auto& lem_cg = r.add("lem_cg: EqCL interval partitions have descending maxima", n);
    auto& relation = r.add("R1 ∧ R2 ∧ R3 ∧ R4CG ⇔ convex-geometry partition", n);
    r.count("partitions", for_each_partition(n, SpaceKind::kPartition, [&](const CospanningPartition& p) {
              const auto op = try_reconstruct(p, ExtremalSide::kMax);
              const bool is_cg = op && classify_space(*op).convex_geometry && partition_from_operator(*op) == p;
              const bool rel = all_rel(p, {RelationProperty::kR1, RelationProperty::kR2, RelationProperty::kR3,
                                           RelationProperty::kR4CG});
              record(relation, rel == is_cg, about(p));
              const auto ip = try_intervals(p);
              if (!ip || !has_rel(p, RelationProperty::kEqCL)) return;
              record(eq_cl, is_cg && is_uniquely_generated(*op).holds, about(p));
              record_check(lem_cg, lem_cg_law(*ip), p);
            }));
    return;
  }
  GeometryOracles ops(r, o.n);
  for (std::size_t i = 0; i < *o.samples; ++i) {
    ops.run(closure_from_closed_sets(random_closed_family(o.n, sample_seed(o.seed, i))));
  }
  r.count("samples", *o.samples);
}

// ---------------------------------------------------------------------------
// Duality

void duality_suite_run(Runner& r, const VerifyOptions& o) {
  const int nf = o.samples ? o.n : std::min(o.n, kFamilyBound);
  std::vector<TheoremResult*> checks;
  for (const char* name : {"complement-geometry", "closure-of-complement", "ex-of-complement", "class-bijection",
                           "monotone-ex", "basis-union"}) {
    checks.push_back(&r.add(std::string("duality: ") + name, nf));
  }
  auto run = [&](const SetFamily& f) {
    const auto reps = duality_suite(f);
    for (std::size_t i = 0; i < reps.size(); ++i) record_report(*checks[i], reps[i], f);
  };
  const int n = o.samples ? o.n : std::min(o.n, kOperatorBound);
  auto& co_co = r.add("co-co: partition of the dual interior is the complement partition", n);
  auto co = [&](const SetOperator& op) {
    record(co_co, partition_from_operator(dual_interior(op)) == complement_partition(partition_from_operator(op)),
           about(op));
  };
  if (!o.samples) {
    r.count("families", std::size_t{1} << (std::size_t{1} << nf));
    r.count("antimatroids", for_each_family(nf, SpaceKind::kAntimatroid, run));
    r.count("violator spaces", for_each_operator(n, SpaceKind::kViolator, co));
    return;
  }
  for (std::size_t i = 0; i < *o.samples; ++i) {
    const auto seed = sample_seed(o.seed, i);
    run(random_antimatroid(o.n, seed));
    co(operator_from_partition(random_hypercube_partition(o.n, seed).to_partition(), ExtremalSide::kMax));
  }
  r.count("samples", *o.samples);
}

int suite_bound(Suite s) {
  switch (s) {
    case Suite::kViolator:
    case Suite::kConvexGeometry: return kOperatorBound;
    default: return kFamilyBound;
  }
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& o) {
  if (o.n < 0) throw InvalidArgumentError("n must be non-negative");
  if (o.samples) {
    if (o.n > kMaxSampledN) {
      throw CapacityError("sampled verification supports n ≤ " + std::to_string(kMaxSampledN));
    }
    if (o.n < 1) throw InvalidArgumentError("sampled verification needs n ≥ 1");
  } else if (o.n > suite_bound(o.suite)) {
    throw CapacityError("exhaustive " + std::string(to_string(o.suite)) + " suite is limited to n ≤ " +
                        std::to_string(suite_bound(o.suite)) + "; pass --samples for larger n");
  }
  require_dense(o.n, "verify");
  Runner r;
  const bool all = o.suite == Suite::kAll;
  if (all || o.suite == Suite::kViolator) violator_suite(r, o);
  if (all || o.suite == Suite::kGreedoid) greedoid_suite(r, o);
  if (all || o.suite == Suite::kAntimatroid) antimatroid_suite(r, o);
  if (all || o.suite == Suite::kMatroid) matroid_suite(r, o);
  if (all || o.suite == Suite::kConvexGeometry) geometry_suite(r, o);
  if (all || o.suite == Suite::kDuality) duality_suite_run(r, o);
  return r.finish(o.samples.has_value());
}

io::Json to_json(const TheoremResult& t) {
  io::Json out = {{"theorem", t.name},
                  {"n", t.n},
                  {"checked", t.checked},
                  {"counterexamples", t.counterexamples},
                  {"holds", t.holds()}};
  if (t.first) {
    io::Json cx = {{"subject", t.first->subject}};
    if (t.first->witness) cx["witness"] = io::witness_to_json(*t.first->witness);
    if (!t.first->note.empty()) cx["note"] = t.first->note;
    out["first_counterexample"] = std::move(cx);
  }
  return out;
}

io::Json to_json(const VerifyReport& r) {
  io::Json counts = io::Json::object();
  for (const auto& [name, c] : r.counts) counts[name] = c;
  io::Json theorems = io::Json::array();
  for (const auto& t : r.theorems) theorems.push_back(to_json(t));
  return {{"mode", r.sampled ? "sampled" : "exhaustive"},
          {"holds", r.holds()},
          {"counts", std::move(counts)},
          {"theorems", std::move(theorems)}};
}

}  // namespace cospan

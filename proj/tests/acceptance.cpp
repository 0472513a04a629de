// Acceptance criteria 1-11.  One PASS/FAIL line per criterion, each with its
// runtime bound; exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "cospan/cospanning.hpp"
#include "cospan/instances.hpp"
#include "cospan/operators.hpp"
#include "cospan/structures.hpp"
#include "oracles.hpp"

using namespace cospan;

namespace {

using Table = std::vector<Mask>;
using oracle::sub;

// Collects the first failure of a criterion.
class Probe {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && !failure_) failure_ = what;
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : ", ") + text; }
  bool failed() const { return failure_.has_value(); }
  const std::string& notes() const { return notes_; }
  const std::optional<std::string>& failure() const { return failure_; }

 private:
  std::optional<std::string> failure_;
  std::string notes_;
};

int failures = 0;

void criterion(int id, const char* title, double bound_s, const std::function<void(Probe&)>& body) {
  Probe p;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(p);
  } catch (const std::exception& e) {
    p.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= bound_s) {
    std::ostringstream os;
    os << "runtime " << secs << " s exceeds bound";
    p.expect(false, os.str());
  }
  const bool ok = !p.failed();
  failures += !ok;
  const std::string notes = p.notes().empty() ? "" : "  [" + p.notes() + "]";
  std::printf("%s  %2d  %-50s %8.3f s  (bound %g s)%s%s%s\n", ok ? "PASS" : "FAIL", id, title, secs, bound_s,
              notes.c_str(), ok ? "" : "  ", ok ? "" : p.failure()->c_str());
  std::fflush(stdout);
}

bool violator(const SetOperator& op) {
  return check_axiom(op, Axiom::kV1).holds && check_axiom(op, Axiom::kV2).holds;
}

bool co_violator(const SetOperator& op) {
  return check_axiom(op, Axiom::kCV1).holds && check_axiom(op, Axiom::kCV2).holds;
}

std::vector<SetOperator> violator_spaces(int n) {
  std::vector<SetOperator> out;
  for_each_operator(n, SpaceKind::kExtensive, [&](const SetOperator& op) {
    if (violator(op)) out.push_back(op);
  });
  return out;
}

std::vector<CospanningPartition> all_partitions(int n) {
  std::vector<CospanningPartition> out;
  for_each_partition(n, SpaceKind::kPartition, [&](const CospanningPartition& p) { out.push_back(p); });
  return out;
}

std::vector<SetFamily> greedoids(int n, Probe& p) {
  std::vector<SetFamily> out;
  std::size_t literal = 0;
  for_each_family(n, SpaceKind::kFamily, [&](const SetFamily& f) { literal += oracle::is_greedoid(f.masks()); });
  for_each_family(n, SpaceKind::kGreedoid, [&](const SetFamily& f) { out.push_back(f); });
  p.expect(out.size() == literal, "greedoid stream disagrees with brute-force count");
  return out;
}

std::optional<SetOperator> reconstruct(const CospanningPartition& p, ExtremalSide side) {
  try {
    return operator_from_partition(p, side);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

bool holds(const CospanningPartition& p, RelationProperty r) { return check_relation_property(p, r).holds; }

template <class F>
bool all_pairs(std::size_t size, F&& f) {
  for (Mask x = 0; x < size; ++x)
    for (Mask y = 0; y < size; ++y)
      if (!f(x, y)) return false;
  return true;
}

bool sandwich(const Table& t) {
  for (Mask x = 0; x < t.size(); ++x)
    for (Mask z = 0; z < t.size(); ++z) {
      if (!sub(x, z) || t[x] != t[z]) continue;
      for (Mask y : oracle::submasks(z))
        if (sub(x, y) && t[y] != t[x]) return false;
    }
  return true;
}

Table ex_table(const SetOperator& op) {
  Table ex(op.table().size());
  for (Mask x = 0; x < ex.size(); ++x) ex[x] = extreme_points(op, x);
  return ex;
}

const GroundSet kE3 = GroundSet::numbered(3);

Mask s(std::initializer_list<std::string_view> labels) { return Subset::of(kE3, labels).mask(); }

}  // namespace

int main() {
  criterion(1, "worked example PEX3", 1, [](Probe& p) {
    const auto pex = paper_example_3();
    p.expect(classify_space(pex).violator, "not a violator space");
    p.expect(is_uniquely_generated(pex).holds, "not uniquely generated");
    std::vector<Mask> expect;
    for (Mask x = 0; x < 8; ++x)
      if (x != s({"1", "3"})) expect.push_back(x);
    const auto bases = feasible_from_operator(pex);
    p.expect(bases == SetFamily(kE3, expect), "bases family");
    const auto cls = classify_family(bases);
    p.expect(cls.greedoid && !cls.antimatroid, "greedoid / antimatroid verdicts");
    const auto g3 = check_axiom(pex, Axiom::kG3);
    p.expect(!g3.holds && g3.witness->set_value("X") == 0 && g3.witness->element_value("x") == 2 &&
                 g3.witness->element_value("y") == 0,
             "G3 witness");
    p.expect(!holds(partition_from_operator(pex), RelationProperty::kR4G), "partition satisfies R4G");
    const auto sigma = build_greedoid(bases).sigma();
    p.expect(sigma(s({"1"})) == s({"1", "3"}) && sigma(s({"3"})) == s({"1", "3"}), "σ values");
    p.expect(holds(partition_from_operator(sigma), RelationProperty::kR4G), "σ partition fails R4G");
    p.expect(!is_uniquely_generated(sigma).holds, "σ uniquely generated");
  });

  criterion(2, "SEB square", 1, [](Probe& p) {
    const auto op = seb_violator(PointSet2D({{0, 0}, {2, 0}, {0, 2}, {2, 2}}));
    p.expect(op.table() == oracle::seb_table({{0, 0}, {2, 0}, {0, 2}, {2, 2}}), "SEB table vs exact oracle");
    const auto full = Subset::full(op.ground());
    p.expect(generators_and_bases(op, full).bases.masks() == std::vector<Mask>{0b0110, 0b1001}, "bases");
    const auto ib = basis_by_intersection(op, full);
    p.expect(ib.basis.empty() && !ib.is_generator, "intersection of generators");
    p.expect(!check_axiom(op, Axiom::kAE).holds, "AE holds");
    p.expect(!is_uniquely_generated(op).holds, "uniquely generated");
  });

  criterion(3, "unique generation <=> anti-exchange, n=3", 10, [](Probe& p) {
    std::size_t seen = 0;
    const auto total = for_each_operator(3, SpaceKind::kExtensive, [&](const SetOperator& op) {
      if (!violator(op)) return;
      ++seen;
      const bool ug = is_uniquely_generated(op).holds;
      p.expect(ug == oracle::one_basis_everywhere(op.table()), "UG vs basis-count oracle");
      p.expect(ug == check_axiom(op, Axiom::kAE).holds, "UG vs AE");
    });
    p.expect(total == 4096, "extensive operator count");
    p.expect(seen > 0, "no violator spaces");
    p.note(std::to_string(total) + " extensive, " + std::to_string(seen) + " violator");
  });

  criterion(4, "relation theorems over 4140 partitions", 30, [](Probe& p) {
    const auto parts = all_partitions(3);
    p.expect(parts.size() == 4140, "partition count");
    p.note(std::to_string(parts.size()) + " partitions");
    for (const auto& part : parts) {
      const bool r12 = holds(part, RelationProperty::kR1) && holds(part, RelationProperty::kR2);
      const auto hi = reconstruct(part, ExtremalSide::kMax);
      const bool as_violator = hi && violator(*hi) && partition_from_operator(*hi) == part;
      p.expect(r12 == as_violator, "R1∧R2 vs violator reconstruction");
      const bool r32 = holds(part, RelationProperty::kR3) && holds(part, RelationProperty::kR2);
      const auto lo = reconstruct(part, ExtremalSide::kMin);
      const bool as_co = lo && co_violator(*lo) && partition_from_operator(*lo) == part;
      p.expect(r32 == as_co, "R3∧R2 vs co-violator reconstruction");
    }
  });

  criterion(5, "R3 <=> R33 under R1 and R2", 10, [](Probe& p) {
    std::size_t seen = 0;
    for_each_partition(3, SpaceKind::kRelationR1R2, [&](const CospanningPartition& part) {
      ++seen;
      p.expect(holds(part, RelationProperty::kR3) == holds(part, RelationProperty::kR33), "R3 vs R33");
    });
    p.expect(seen > 0, "no R1∧R2 partitions");
    p.note(std::to_string(seen) + " R1∧R2 partitions");
  });

  criterion(6, "interval partitions of uniquely generated spaces", 30, [](Probe& p) {
    std::size_t ug = 0;
    for (const auto& op : violator_spaces(3)) {
      if (!is_uniquely_generated(op).holds) continue;
      ++ug;
      const auto ip = interval_form(partition_from_operator(op));
      for (Mask a = 0; a < 8; ++a) {
        p.expect(ip.intervals()[ip.interval_of(a)] == Interval{extreme_points(op, a), op(a)}, "[ex(A), φ(A)]");
      }
    }
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const auto part = random_hypercube_partition(5, seed).to_partition();
      const auto alpha = operator_from_partition(part, ExtremalSide::kMax);
      p.expect(violator(alpha), "reconstruction not a violator space");
      p.expect(is_uniquely_generated(alpha).holds, "reconstruction not uniquely generated");
      p.expect(partition_from_operator(alpha) == part, "no round trip");
    }
    p.note(std::to_string(ug) + " uniquely generated, 1000 samples at n=5");
  });

  criterion(7, "greedoid theorems, n=4 families", 120, [](Probe& p) {
    const auto all = greedoids(4, p);
    std::size_t r124 = 0;
    for (const auto& f : all) {
      const auto g = build_greedoid(f);
      const auto& sigma = g.sigma();
      const auto& t = sigma.table();
      const int n = 4;
      p.expect(check_axiom(sigma, Axiom::kV1).holds && check_axiom(sigma, Axiom::kV2).holds &&
                   check_axiom(sigma, Axiom::kVV2).holds && check_axiom(sigma, Axiom::kG3).holds,
               "σ axioms");
      for (Mask x = 0; x < t.size(); ++x)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            const Mask xa = x | bit(a), xb = x | bit(b);
            if (has_bit(x, a) || has_bit(x, b) || !f.contains(xa)) continue;
            if (has_bit(t[xb], a)) p.expect(has_bit(t[xa], b), "property (iii)");
          }
      const auto part = partition_from_operator(sigma);
      p.expect(holds(part, RelationProperty::kR1) && holds(part, RelationProperty::kR2) &&
                   holds(part, RelationProperty::kR4G),
               "σ partition relations");
      p.expect(extremal_sets(part, ExtremalSide::kMin) == f, "class minima differ from F");
      for (const auto& c : part.classes())
        for (Mask m : c.minima) p.expect(popcount(m) == popcount(c.minima.front()), "minima sizes differ");
    }
    for (const auto& part : all_partitions(3)) {
      if (!(holds(part, RelationProperty::kR1) && holds(part, RelationProperty::kR2) &&
            holds(part, RelationProperty::kR4G)))
        continue;
      ++r124;
      const auto f = extremal_sets(part, ExtremalSide::kMin);
      p.expect(check_greedoid(f).holds, "minima not a greedoid");
      if (check_greedoid(f).holds) {
        p.expect(partition_from_operator(build_greedoid(f).sigma()) == part, "σ partition differs from input");
      }
    }
    p.note(std::to_string(all.size()) + " greedoids, " + std::to_string(r124) + " R1∧R2∧R4G partitions");
  });

  criterion(8, "antimatroid and matroid theorems, n=4", 120, [](Probe& p) {
    std::size_t antis = 0, matroids = 0;
    for (const auto& f : greedoids(4, p)) {
      const auto cls = classify_family(f);
      const auto sigma = build_greedoid(f).sigma();
      const bool ug = is_uniquely_generated(sigma).holds;
      const bool ae = check_axiom(sigma, Axiom::kAE).holds;
      p.expect(cls.antimatroid == ug && ug == ae, "antimatroid / UG / AE disagree");
      const auto part = partition_from_operator(sigma);
      if (cls.antimatroid) {
        ++antis;
        for (auto r : {RelationProperty::kR1, RelationProperty::kR2, RelationProperty::kR3, RelationProperty::kR4G,
                       RelationProperty::kEqAN})
          p.expect(holds(part, r), "antimatroid partition fails " + std::string(to_string(r)));
      }
      if (cls.matroid) {
        ++matroids;
        p.expect(holds(part, RelationProperty::kR5), "matroid partition fails R5");
        p.expect(check_axiom(sigma, Axiom::kEX).holds, "matroid σ fails EX");
      }
    }
    p.expect(antis > 0 && matroids > 0, "empty classes");
    p.note(std::to_string(antis) + " antimatroids, " + std::to_string(matroids) + " matroids");
    const auto chain = partition_from_operator(build_greedoid(poset_antimatroid(kE3, {{0, 1}, {1, 2}})).sigma());
    const auto r5 = check_relation_property(chain, RelationProperty::kR5);
    p.expect(!r5.holds && r5.witness->set_value("X") == s({"1", "2"}), "chain R5 witness");
  });

  criterion(9, "convex-geometry theorems, n=3", 60, [](Probe& p) {
    const auto closures = for_each_operator(3, SpaceKind::kClosure, [&](const SetOperator& op) {
      p.expect(violator(op), "closure space not a violator space");
      const auto part = partition_from_operator(op);
      const auto closed = fixed_points(op);
      for (Mask x : closed.masks())
        for_each_bit(x, [&](int e) {
          p.expect(!part.related(x & ~bit(e), x) == closed.contains(x & ~bit(e)), "accessibility biconditional");
        });
    });
    std::size_t geometries = 0;
    for_each_operator(3, SpaceKind::kConvexGeometry, [&](const SetOperator& op) {
      ++geometries;
      const auto part = partition_from_operator(op);
      interval_form(part);
      p.expect(holds(part, RelationProperty::kEqCL), "geometry partition fails EqCL");
    });
    std::size_t eqcl = 0;
    for (const auto& part : all_partitions(3)) {
      try {
        interval_form(part);
      } catch (const PreconditionError&) {
        continue;
      }
      if (!holds(part, RelationProperty::kEqCL)) continue;
      ++eqcl;
      const auto alpha = operator_from_partition(part, ExtremalSide::kMax);
      p.expect(check_convex_geometry(alpha).holds(), "EqCL reconstruction not a convex geometry");
      p.expect(is_uniquely_generated(alpha).holds, "EqCL reconstruction not uniquely generated");
    }
    p.expect(geometries == eqcl, "geometries and EqCL interval partitions differ in number");
    p.note(std::to_string(closures) + " closures, " + std::to_string(geometries) + " geometries, " +
           std::to_string(eqcl) + " EqCL partitions");
  });

  criterion(10, "antimatroid / convex-geometry duality", 120, [](Probe& p) {
    std::size_t antis = 0;
    for_each_family(4, SpaceKind::kAntimatroid, [&](const SetFamily& f) {
      ++antis;
      for (const auto& r : duality_suite(f)) p.expect(r.holds, "duality check " + r.property);
    });
    p.expect(antis > 0, "no antimatroids");
    const auto spaces = violator_spaces(3);
    p.note(std::to_string(antis) + " antimatroids, " + std::to_string(spaces.size()) + " violator spaces");
    for (const auto& op : spaces) {
      p.expect(partition_from_operator(dual_interior(op)) == complement_partition(partition_from_operator(op)),
               "complement partition vs dual interior");
    }
  });

  criterion(11, "operator invariants battery, n=3", 60, [](Probe& p) {
    const auto spaces = violator_spaces(3);
    p.note(std::to_string(spaces.size()) + " violator spaces and their duals");
    for (const auto& op : spaces) {
      const auto& t = op.table();
      const std::size_t size = t.size();
      p.expect(all_pairs(size, [&](Mask a, Mask b) { return sub(b, t[a]) == (t[a] == t[a | b]); }), "lemma2");
      for (Mask x = 0; x < size; ++x)
        for (int e = 0; e < 3; ++e) p.expect(has_bit(t[x], e) == (t[x] == t[x | bit(e)]), "corollary");
      p.expect(all_pairs(size, [&](Mask x, Mask y) { return t[x] != t[y] || t[x | y] == t[x]; }), "un: union");
      p.expect(sandwich(t), "un: sandwich");
      for (Mask x = 0; x < size; ++x) p.expect(t[t[x]] == t[x], "idempotence");

      const auto ex = ex_table(op);
      for (Mask x = 0; x < size; ++x) {
        Mask meet = 7;
        for (Mask b : oracle::submasks(x))
          if (t[b] == t[x]) meet &= b;
        p.expect(ex[x] == meet, "exp");
        p.expect(sub(ex[t[x]], ex[x]), "exp-vs");
      }

      const bool ug = is_uniquely_generated(op).holds;
      bool x5 = true, x6 = true, x7 = true;
      for (Mask x = 0; x < size; ++x) {
        for (Mask y : oracle::submasks(x))
          if (sub(ex[x], y) && ex[y] != ex[x]) x5 = false;
        if (t[ex[x]] != t[x]) x6 = false;
        if (ex[t[x]] != ex[x]) x7 = false;
      }
      p.expect(ug == x5 && ug == x6 && ug == x7, "outcast_u equivalence");
      if (ug) {
        for (Mask x = 0; x < size; ++x) p.expect(ex[ex[x]] == ex[x], "X1");
        p.expect(all_pairs(size, [&](Mask x, Mask y) { return ex[x] != ex[y] || ex[x | y] == ex[x]; }), "X2");
        p.expect(sandwich(ex), "X3");
        p.expect(all_pairs(size, [&](Mask x, Mask y) { return ex[x] != ex[y] || ex[x & y] == ex[x]; }), "X4");
      }

      const auto c = dual_interior(op);
      const auto& ct = c.table();
      p.expect(co_violator(c), "dual interior not a co-violator space");
      p.expect(all_pairs(size, [&](Mask x, Mask y) { return ct[x] != ct[y] || ct[x & y] == ct[x]; }), "co-un: meet");
      p.expect(sandwich(ct), "co-un: sandwich");
      for (Mask x = 0; x < size; ++x) p.expect(ct[ct[x]] == ct[x], "co-idempotence");
    }
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

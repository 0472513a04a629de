#include <doctest.h>

#include <random>

#include "cospan/instances.hpp"
#include "cospan/structures.hpp"
#include "oracles.hpp"

using namespace cospan;

namespace {

const GroundSet kE3 = GroundSet::numbered(3);
const GroundSet kE2 = GroundSet::numbered(2);

Mask s(std::initializer_list<std::string_view> labels, const GroundSet& g = kE3) {
  return Subset::of(g, labels).mask();
}

SetFamily chain() { return SetFamily(kE3, {0, s({"1"}), s({"1", "2"}), s({"1", "2", "3"})}); }

SetFamily pex3_bases() {
  std::vector<Mask> all;
  for (Mask x = 0; x < 8; ++x)
    if (x != s({"1", "3"})) all.push_back(x);
  return SetFamily(kE3, all);
}

SetFamily u12() { return uniform_matroid(2, 1); }

}  // namespace

TEST_CASE("check_greedoid examples") {
  CHECK(check_greedoid(chain()).holds);
  CHECK(check_greedoid(pex3_bases()).holds);
  const auto bad = check_greedoid(SetFamily(kE3, {0, s({"1", "2"})}));
  REQUIRE_FALSE(bad.holds);
  CHECK(bad.witness->set_value("X") == s({"1", "2"}));
  CHECK(bad.witness->set_value("Y") == 0);
  const auto no_empty = check_greedoid(SetFamily(kE3, std::vector<Mask>{s({"1"})}));
  REQUIRE_FALSE(no_empty.holds);
  CHECK(no_empty.witness->has("missing"));
}

TEST_CASE("build_greedoid examples") {
  const auto c = build_greedoid(chain());
  const auto& sig = c.sigma();
  CHECK(sig(Mask{0}) == s({"2", "3"}));
  CHECK(sig(s({"1"})) == s({"1", "3"}));
  CHECK(sig(s({"1", "2"})) == s({"1", "2"}));
  CHECK(c.rank()[s({"2", "3"})] == 0);
  CHECK(c.rank()[s({"1", "3"})] == 1);
  CHECK(c.gamma(s({"1"})) == s({"2"}));

  const auto g = build_greedoid(pex3_bases());
  CHECK(g.sigma()(s({"1"})) == s({"1", "3"}));
  CHECK(g.sigma()(s({"3"})) == s({"1", "3"}));
  CHECK(g.sigma()(s({"1", "3"})) == s({"1", "3"}));

  CHECK(build_greedoid(u12()).sigma()(s({"1"}, kE2)) == s({"1", "2"}, kE2));
  CHECK_THROWS_AS(build_greedoid(SetFamily(kE3, {0, s({"1", "2"})})), PreconditionError);
}

TEST_CASE("σ and E−Γ agree on feasible sets only") {
  const SetFamily f(kE3, {0, s({"1"}), s({"2"}), s({"1", "2"}), s({"1", "3"}), s({"1", "2", "3"})});
  const auto g = build_greedoid(f);
  for (Mask x : f.masks()) CHECK(g.sigma()(x) == (kE3.full_mask() & ~g.gamma(x)));
  CHECK(g.sigma()(s({"3"})) == s({"3"}));
  CHECK((kE3.full_mask() & ~g.gamma(s({"3"}))) == s({"2", "3"}));
}

TEST_CASE("feasible_from_operator examples") {
  CHECK(feasible_from_operator(SetOperator::identity(kE3)).size() == 8);
  CHECK(feasible_from_operator(SetOperator::constant(kE3, 7)) == SetFamily(kE3, std::vector<Mask>{0}));
  CHECK(feasible_from_operator(paper_example_3()) == pex3_bases());
}

TEST_CASE("classify_family examples") {
  const auto c = classify_family(chain());
  CHECK(c.greedoid);
  CHECK(c.antimatroid);
  CHECK_FALSE(c.matroid);
  const auto u = classify_family(u12());
  CHECK(u.greedoid);
  CHECK_FALSE(u.antimatroid);
  CHECK(u.matroid);
  const auto p = classify_family(pex3_bases());
  CHECK(p.greedoid);
  CHECK_FALSE(p.antimatroid);
  CHECK_FALSE(p.matroid);
  REQUIRE_FALSE(p.reports[2].holds);
  CHECK(p.reports[2].witness->has("X"));
}

TEST_CASE("antimatroid forms") {
  const auto c = antimatroid_forms(chain());
  CHECK(c.antimatroid);
  CHECK(c.union_closed);
  CHECK(c.local_union);
  const auto u = antimatroid_forms(u12());
  CHECK_FALSE(u.antimatroid);
  CHECK_FALSE(u.union_closed);
  CHECK_FALSE(u.local_union);
}

TEST_CASE("closure_from_closed_sets examples and errors") {
  const auto tau = closure_from_closed_sets(SetFamily(kE3, {0, s({"3"}), s({"2", "3"}), 7}));
  CHECK(tau(s({"2"})) == s({"2", "3"}));
  CHECK(tau(s({"1"})) == 7);
  CHECK(closure_from_closed_sets(SetFamily(kE3, std::vector<Mask>{7})) == SetOperator::constant(kE3, 7));
  CHECK(closure_from_closed_sets(SetFamily(kE3, enumerate_subsets(kE3))) == SetOperator::identity(kE3));
  CHECK_THROWS_AS(closure_from_closed_sets(SetFamily(kE3, {0, s({"1"})})), PreconditionError);
  CHECK_THROWS_AS(closure_from_closed_sets(SetFamily(kE3, {s({"1", "2"}), s({"2", "3"}), 7})), PreconditionError);
}

TEST_CASE("check_convex_geometry examples") {
  const auto comp = check_convex_geometry(complement_family(chain()));
  CHECK(comp.holds());
  CHECK(comp.accessibility.holds);
  CHECK(comp.chain.holds);

  const auto hull = convex_hull_geometry(PointSet2D({{0, 0}, {6, 0}, {0, 6}, {1, 1}}));
  CHECK(check_convex_geometry(hull).holds());

  const auto small = closure_from_closed_sets(SetFamily(kE2, {0, 1, 2, 3}));
  CHECK(check_axiom(small, Axiom::kAE).holds);
  CHECK(check_convex_geometry(SetFamily(kE2, {0, 1, 2, 3})).holds());

  // {1} ∩ {2} = ∅ is missing
  CHECK_THROWS_AS(check_convex_geometry(SetFamily(kE2, {1, 2, 3})), PreconditionError);

  auto seb = seb_violator(PointSet2D({{0, 0}, {2, 0}, {0, 2}, {2, 2}}));
  const auto r = check_convex_geometry(seb);
  CHECK_FALSE(r.geometry.holds);
  CHECK_THROWS_AS(check_convex_geometry(SetFamily(kE3, std::vector<Mask>{0})), PreconditionError);
}

TEST_CASE("chain property") {
  CHECK(check_chain_property(chain()).holds);
  const auto gap = check_chain_property(SetFamily(kE3, {0, 7}));
  REQUIRE_FALSE(gap.holds);
  CHECK(gap.witness->set_value("X") == 0);
  CHECK(gap.witness->set_value("Y") == 7);
}

TEST_CASE("antimatroid_basis") {
  CHECK(antimatroid_basis(chain(), Subset::of(kE3, {"2", "3"})).empty());
  CHECK(antimatroid_basis(chain(), Subset::of(kE3, {"1", "3"})) == Subset::of(kE3, {"1"}));
  CHECK(antimatroid_basis(chain(), Subset::full(kE3)) == Subset::full(kE3));
  CHECK_THROWS_AS(antimatroid_basis(u12(), Subset::full(kE2)), PreconditionError);
}

TEST_CASE("duality_suite") {
  const auto chain_reports = duality_suite(chain());
  REQUIRE(chain_reports.size() == 6);
  const char* names[] = {"complement-geometry", "closure-of-complement", "ex-of-complement",
                         "class-bijection",     "monotone-ex",           "basis-union"};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(chain_reports[i].property == names[i]);
    CHECK(chain_reports[i].holds);
  }
  for (const auto& r : duality_suite(SetFamily(kE2, {0, 1, 2, 3}))) CHECK(r.holds);
  CHECK_THROWS_AS(duality_suite(u12()), PreconditionError);

  // X={2}: σ({2}) = {2,3} and ex_τ({1,3}) = {1}
  const auto sig = build_greedoid(chain()).sigma();
  const auto tau = closure_from_closed_sets(complement_family(chain()));
  CHECK(sig(s({"2"})) == s({"2", "3"}));
  CHECK(extreme_points(tau, s({"1", "3"})) == s({"1"}));
}

TEST_CASE("property: rank, σ and greedoid checks agree with brute force") {
  std::mt19937_64 rng(11);
  int greedoids = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto g = GroundSet::numbered(n);
    auto masks = oracle::random_family(n, rng, true);
    const SetFamily fam(g, masks);
    const bool expect = oracle::is_greedoid(masks);
    CHECK(check_greedoid(fam).holds == expect);
    if (!expect) continue;
    ++greedoids;
    const auto gr = build_greedoid(fam);
    const auto sig = oracle::sigma(masks, n);
    CHECK(gr.sigma().table() == sig);
    for (Mask x = 0; x < sig.size(); ++x) {
      CHECK(gr.rank()[x] == oracle::rank(masks, x));
      CHECK(gr.rank()[x] <= oracle::card(x));
    }
    // all minimal members of a σ-class have the same size
    for (const auto& fib : oracle::fibres(sig)) {
      int size = -1;
      for (Mask a : fib) {
        bool minimal = true;
        for (Mask b : fib)
          if (a != b && oracle::sub(b, a)) minimal = false;
        if (!minimal) continue;
        if (size < 0) size = oracle::card(a);
        CHECK(oracle::card(a) == size);
      }
    }
    CHECK(feasible_from_operator(gr.sigma()) == fam);
    CHECK(extremal_sets(partition_from_operator(gr.sigma()), ExtremalSide::kMin) == fam);
  }
  CHECK(greedoids > 50);
}

TEST_CASE("property: τ_K and fixed points agree with brute force") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const auto k = random_closed_family(n, seed);
    const auto tau = closure_from_closed_sets(k);
    CHECK(tau.table() == oracle::tau(k.masks(), n));
    CHECK(fixed_points(tau) == k);
    CHECK(check_axiom(tau, Axiom::kV1).holds);
    CHECK(check_axiom(tau, Axiom::kC2).holds);
    CHECK(check_axiom(tau, Axiom::kC3).holds);
    CHECK(check_convex_geometry(tau).holds() == check_axiom(tau, Axiom::kAE).holds);
  }
}

TEST_CASE("property: random antimatroids") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const auto f = random_antimatroid(n, seed);
    CHECK(classify_family(f).antimatroid);
    const auto forms = antimatroid_forms(f);
    CHECK(forms.union_closed);
    CHECK(forms.local_union);
    const auto sig = build_greedoid(f).sigma();
    CHECK(is_uniquely_generated(sig).holds);
    CHECK(check_axiom(sig, Axiom::kAE).holds);
    for (const auto& r : duality_suite(f)) CHECK_MESSAGE(r.holds, r.property);
    for (Mask x = 0; x <= f.ground().full_mask(); ++x) {
      Mask u = 0;
      for (Mask a : f.masks())
        if (oracle::sub(a, x)) u |= a;
      CHECK(antimatroid_basis(f, Subset(f.ground(), x)).mask() == u);
    }
  }
}

TEST_CASE("property: random matroids") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const auto f = random_matroid(n, seed);
    CHECK(classify_family(f).matroid);
    const auto sig = build_greedoid(f).sigma();
    CHECK(check_axiom(sig, Axiom::kEX).holds);
    CHECK(check_axiom(sig, Axiom::kC2).holds);
    CHECK(check_relation_property(partition_from_operator(sig), RelationProperty::kR5).holds);
  }
}

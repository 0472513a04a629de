#include <doctest.h>

#include <random>
#include <set>

#include "cospan/instances.hpp"
#include "cospan/structures.hpp"
#include "oracles.hpp"

using namespace cospan;

namespace {

const GroundSet kE3 = GroundSet::numbered(3);

std::vector<oracle::Pt> as_oracle(const PointSet2D& p) {
  std::vector<oracle::Pt> out;
  for (const auto& q : p.points()) out.push_back({q.x, q.y});
  return out;
}

PointSet2D wide_points(int n, std::mt19937_64& rng, std::int64_t range) {
  std::vector<Point2D> pts;
  while (static_cast<int>(pts.size()) < n) {
    const Point2D p{static_cast<std::int64_t>(rng() % (2 * range + 1)) - range,
                    static_cast<std::int64_t>(rng() % (2 * range + 1)) - range};
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return PointSet2D(pts);
}

bool literal_violator(const oracle::Table& t) {
  for (Mask x = 0; x < t.size(); ++x) {
    if (!oracle::sub(x, t[x])) return false;
    for (Mask y = 0; y < t.size(); ++y)
      if (oracle::sub(x, y) && oracle::sub(y, t[x]) && t[x] != t[y]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("builtin instances") {
  const auto pex = paper_example_3();
  for (Mask x = 0; x < 8; ++x) CHECK(pex(x) == (x == 1 ? Mask{0b101} : x));
  CHECK(uniform_matroid(3, 1) == SetFamily(kE3, {0, 1, 2, 4}));
  CHECK_THROWS_AS(uniform_matroid(2, 3), InvalidArgumentError);
  CHECK_THROWS_AS(uniform_matroid(2, -1), InvalidArgumentError);
  CHECK(poset_antimatroid(kE3, {{0, 1}, {1, 2}}) == SetFamily(kE3, {0, 1, 3, 7}));
  CHECK(poset_antimatroid(kE3, {}).size() == 8);
  CHECK_THROWS_AS(poset_antimatroid(kE3, {{0, 1}, {1, 0}}), InvalidArgumentError);
  CHECK_THROWS_AS(poset_antimatroid(kE3, {{0, 3}}), InvalidArgumentError);

  const auto names = builtin_names();
  for (const char* n : {"paper_example_3", "identity", "full", "empty", "uniform_matroid", "chain_antimatroid",
                        "free_antimatroid"}) {
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  }
  CHECK(std::get<SetOperator>(builtin_instance("paper_example_3")) == pex);
  CHECK(std::get<SetFamily>(builtin_instance("paper_example_3", {3, 1, true})) == feasible_from_operator(pex));
  CHECK(std::get<SetOperator>(builtin_instance("identity", {2})) == SetOperator::identity(GroundSet::numbered(2)));
  CHECK(std::get<SetOperator>(builtin_instance("full", {2}))(Mask{0}) == 3);
  CHECK(std::get<SetOperator>(builtin_instance("empty", {2}))(Mask{3}) == 0);
  CHECK(std::get<SetFamily>(builtin_instance("uniform_matroid", {3, 1})) == uniform_matroid(3, 1));
  CHECK(std::get<SetFamily>(builtin_instance("chain_antimatroid", {3})) == SetFamily(kE3, {0, 1, 3, 7}));
  CHECK(std::get<SetFamily>(builtin_instance("free_antimatroid", {2})).size() == 4);
  CHECK_THROWS_AS(builtin_instance("nope"), InvalidArgumentError);
  CHECK_THROWS_AS(builtin_instance("identity", {-1}), InvalidArgumentError);
  CHECK_THROWS_AS(builtin_instance("uniform_matroid", {2, 5}), InvalidArgumentError);
}

TEST_CASE("point set validation") {
  CHECK_THROWS_AS(PointSet2D({{0, 0}, {0, 0}}), InvalidArgumentError);
  CHECK_THROWS_AS(PointSet2D({{kMaxCoordinate + 1, 0}}), InvalidArgumentError);
  CHECK_NOTHROW(PointSet2D({{kMaxCoordinate, -kMaxCoordinate}}));
  CHECK_THROWS_AS(PointSet2D({"a"}, {{0, 0}, {1, 1}}), InvalidArgumentError);
  const PointSet2D p({"a", "b"}, {{0, 0}, {1, 1}});
  CHECK(p.ground().label(1) == "b");
  CHECK(PointSet2D({{0, 0}}).ground().label(0) == "p1");
  CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == -1);
  CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == 0);
}

TEST_CASE("convex hull examples") {
  const auto tri = convex_hull_geometry(PointSet2D({{0, 0}, {4, 0}, {0, 4}, {1, 1}}));
  CHECK(tri.name() == "convex-hull");
  CHECK(tri(Mask{0b0111}) == 0b1111);
  CHECK(extreme_points(tri, 0b1111) == 0b0111);
  const auto line = convex_hull_geometry(PointSet2D({{0, 0}, {1, 0}, {2, 0}}));
  CHECK(line(Mask{0b101}) == 0b111);
  CHECK(line(Mask{0b011}) == 0b011);
  CHECK(convex_hull_geometry(PointSet2D({{3, 3}})) == SetOperator::identity(GroundSet({"p1"})));
  CHECK(check_convex_geometry(tri).holds());
}

TEST_CASE("SEB examples") {
  const auto sq = seb_violator(PointSet2D({{0, 0}, {2, 0}, {0, 2}, {2, 2}}));
  CHECK(sq.name() == "seb");
  CHECK(sq(Mask{0}) == 0);
  CHECK(sq(Mask{0b1001}) == 0b1111);
  CHECK(sq(Mask{0b0011}) == 0b0011);
  CHECK(seb_violator(PointSet2D({{5, 5}})) == SetOperator::identity(GroundSet({"p1"})));
  // collinear support: the diameter disk of the extreme pair
  const auto line = seb_violator(PointSet2D({{0, 0}, {1, 0}, {4, 0}, {2, 1}}));
  CHECK(line(Mask{0b0111}) == 0b1111);
  std::vector<Point2D> many;
  for (int i = 0; i < 17; ++i) many.push_back({i, i * i});
  CHECK_THROWS_AS(seb_violator(PointSet2D(many)), CapacityError);
}

TEST_CASE("property: hull agrees with the orientation-test oracle") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto pts = trial % 2 ? random_points(n, trial) : wide_points(n, rng, kMaxCoordinate);
    const auto hull = convex_hull_geometry(pts);
    CHECK(hull.table() == oracle::hull_table(as_oracle(pts)));
    for (Axiom a : {Axiom::kV1, Axiom::kC2, Axiom::kC3, Axiom::kAE}) CHECK(check_axiom(hull, a).holds);
  }
}

TEST_CASE("property: SEB agrees with the exact candidate-disk oracle") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto pts = trial % 3 == 0 ? wide_points(n, rng, kMaxCoordinate)
                                    : (trial % 3 == 1 ? wide_points(n, rng, 3) : random_points(n, trial));
    const auto op = seb_violator(pts);
    CHECK(op.table() == oracle::seb_table(as_oracle(pts)));
    CHECK(check_axiom(op, Axiom::kV1).holds);
    CHECK(check_axiom(op, Axiom::kV2).holds);
    CHECK(check_axiom(op, Axiom::kAE).holds == is_uniquely_generated(op).holds);
  }
}

TEST_CASE("enumeration counts") {
  CHECK(for_each_operator(1, SpaceKind::kExtensive, [](const SetOperator&) {}) == 2);
  CHECK(for_each_operator(0, SpaceKind::kExtensive, [](const SetOperator&) {}) == 1);

  std::set<std::vector<Mask>> seen;
  std::size_t violators = 0;
  const auto total = for_each_operator(3, SpaceKind::kExtensive, [&](const SetOperator& op) {
    seen.insert(op.table());
    violators += literal_violator(op.table());
  });
  CHECK(total == 4096);
  CHECK(seen.size() == 4096);

  std::size_t streamed = 0;
  for_each_operator(3, SpaceKind::kViolator, [&](const SetOperator& op) {
    CHECK(seen.count(op.table()) == 1);
    CHECK(literal_violator(op.table()));
    ++streamed;
  });
  CHECK(streamed == violators);
  for_each_operator(3, SpaceKind::kClosure, [&](const SetOperator& op) {
    CHECK(check_axiom(op, Axiom::kC3).holds);
    CHECK(literal_violator(op.table()));
  });

  std::set<std::vector<std::size_t>> parts;
  const auto bell = for_each_partition(3, SpaceKind::kPartition, [&](const CospanningPartition& p) {
    parts.insert(p.class_ids());
  });
  CHECK(bell == 4140);
  CHECK(parts.size() == 4140);
  CHECK(for_each_partition(2, SpaceKind::kPartition, [](const CospanningPartition&) {}) == 15);
  std::size_t r1r2 = 0;
  for_each_partition(3, SpaceKind::kRelationR1R2, [&](const CospanningPartition& p) {
    CHECK(check_relation_property(p, RelationProperty::kR1).holds);
    CHECK(check_relation_property(p, RelationProperty::kR2).holds);
    ++r1r2;
  });
  // R1 ∧ R2 partitions are exactly the violator-space fibres
  CHECK(r1r2 == violators);

  std::size_t greedoids = 0;
  CHECK(for_each_family(4, SpaceKind::kFamily, [&](const SetFamily& f) { greedoids += oracle::is_greedoid(f.masks()); }) ==
        65536);
  CHECK(for_each_family(4, SpaceKind::kGreedoid, [](const SetFamily&) {}) == greedoids);
  const auto antis = for_each_family(3, SpaceKind::kAntimatroid, [](const SetFamily& f) {
    CHECK(family_predicate(f, FamilyPredicate::kUnionClosed).holds);
  });
  CHECK(antis == 35);  // 1·22 + 3·3 + 3·1 + 1
  for_each_family(3, SpaceKind::kMatroid, [](const SetFamily& f) {
    CHECK(family_predicate(f, FamilyPredicate::kHereditary).holds);
  });
}

TEST_CASE("enumeration errors") {
  CHECK_THROWS_AS(for_each_operator(4, SpaceKind::kExtensive, [](const SetOperator&) {}), CapacityError);
  CHECK_THROWS_AS(for_each_partition(4, SpaceKind::kPartition, [](const CospanningPartition&) {}), CapacityError);
  CHECK_THROWS_AS(for_each_family(5, SpaceKind::kFamily, [](const SetFamily&) {}), CapacityError);
  CHECK_THROWS_AS(for_each_family(2, SpaceKind::kViolator, [](const SetFamily&) {}), InvalidArgumentError);
  CHECK_THROWS_AS(for_each_operator(2, SpaceKind::kFamily, [](const SetOperator&) {}), InvalidArgumentError);
  CHECK_THROWS_AS(for_each_operator(-1, SpaceKind::kExtensive, [](const SetOperator&) {}), InvalidArgumentError);
  for (auto k : {SpaceKind::kExtensive, SpaceKind::kViolator, SpaceKind::kClosure, SpaceKind::kConvexGeometry,
                 SpaceKind::kRelationR1R2, SpaceKind::kPartition, SpaceKind::kFamily, SpaceKind::kGreedoid,
                 SpaceKind::kAntimatroid, SpaceKind::kMatroid}) {
    CHECK(parse_space_kind(to_string(k)) == k);
  }
  CHECK_THROWS_AS(parse_space_kind("lattice"), InvalidArgumentError);
}

TEST_CASE("random generators: invariants and determinism") {
  const auto zero = random_hypercube_partition(0, 3);
  REQUIRE(zero.intervals().size() == 1);
  CHECK(zero.intervals()[0] == Interval{0, 0});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = static_cast<int>(seed % 7);
    const auto a = random_hypercube_partition(n, seed);
    const auto b = random_hypercube_partition(n, seed);
    CHECK(a.intervals() == b.intervals());
    std::vector<int> cover(std::size_t{1} << n, 0);
    for (const auto& iv : a.intervals()) {
      CHECK(oracle::sub(iv.lo, iv.hi));
      for (Mask x : oracle::submasks(iv.hi))
        if (oracle::sub(iv.lo, x)) ++cover[x];
    }
    for (int c : cover) CHECK(c == 1);

    const int m = 1 + static_cast<int>(seed % 10);
    CHECK(random_antimatroid(m, seed) == random_antimatroid(m, seed));
    CHECK(classify_family(random_antimatroid(m, seed)).antimatroid);
    CHECK(random_matroid(m, seed) == random_matroid(m, seed));
    CHECK(classify_family(random_matroid(m, seed)).matroid);
    const auto k = random_closed_family(m, seed);
    CHECK(k == random_closed_family(m, seed));
    CHECK(k.contains(k.ground().full_mask()));
    CHECK(family_predicate(k, FamilyPredicate::kIntersectionClosed).holds);
    CHECK(random_points(m, seed).points() == random_points(m, seed).points());
  }
  CHECK_THROWS_AS(random_hypercube_partition(7, 0), CapacityError);
  CHECK_THROWS_AS(random_antimatroid(11, 0), CapacityError);
  CHECK_THROWS_AS(random_matroid(11, 0), CapacityError);
  CHECK_THROWS_AS(random_closed_family(11, 0), CapacityError);
  CHECK_THROWS_AS(random_points(0, 0), InvalidArgumentError);
  CHECK_THROWS_AS(random_points(17, 0), InvalidArgumentError);
  // different seeds should not all collapse to one output
  std::set<std::vector<std::size_t>> distinct;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    distinct.insert(random_hypercube_partition(4, seed).to_partition().class_ids());
  }
  CHECK(distinct.size() > 10);
}

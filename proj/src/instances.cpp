#include "cospan/instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "cospan/structures.hpp"

namespace cospan {

SetOperator paper_example_3() {
  const auto g = GroundSet::numbered(3);
  std::vector<Mask> t(8);
  std::iota(t.begin(), t.end(), Mask{0});
  t[0b001] = 0b101;  // {1} ↦ {1,3}
  return {g, std::move(t), "paper_example_3"};
}

SetFamily uniform_matroid(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw InvalidArgumentError("uniform_matroid requires 0 ≤ k ≤ n");
  const auto g = GroundSet::numbered(n);
  std::vector<Mask> members;
  for (Mask m = 0; m < g.hypercube_size(); ++m) {
    if (popcount(m) <= k) members.push_back(m);
  }
  return SetFamily(g, std::move(members));
}

SetFamily poset_antimatroid(const GroundSet& ground, const std::vector<std::pair<int, int>>& less_than) {
  const int n = ground.size();
  require_dense(n, "poset_antimatroid");
  // below[b] = all elements strictly below b, by transitive closure.
  std::vector<Mask> below(n, 0);
  for (auto [a, b] : less_than) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidArgumentError("poset relation outside the ground set");
    below[b] |= bit(a);
  }
  for (int round = 0; round < n; ++round) {
    for (int b = 0; b < n; ++b) {
      Mask acc = below[b];
      for_each_bit(below[b], [&](int a) { acc |= below[a]; });
      below[b] = acc;
    }
  }
  for (int b = 0; b < n; ++b) {
    if (has_bit(below[b], b)) throw InvalidArgumentError("poset relation has a cycle through " + ground.label(b));
  }
  std::vector<Mask> members;
  for (Mask m = 0; m < ground.hypercube_size(); ++m) {
    bool down = true;
    for_each_bit(m, [&](int b) { down = down && is_submask(below[b], m); });
    if (down) members.push_back(m);
  }
  return SetFamily(ground, std::move(members));
}

std::vector<std::string> builtin_names() {
  return {"paper_example_3", "identity", "full", "empty", "uniform_matroid", "chain_antimatroid", "free_antimatroid"};
}

Instance builtin_instance(std::string_view name, const BuiltinParams& params) {
  if (params.n < 0) throw InvalidArgumentError("n must be non-negative");
  if (name == "paper_example_3") {
    auto op = paper_example_3();
    if (params.bases) return feasible_from_operator(op);
    return op;
  }
  const auto g = GroundSet::numbered(params.n);
  if (name == "identity") return SetOperator::identity(g);
  if (name == "full") return SetOperator::constant(g, g.full_mask(), "full");
  if (name == "empty") return SetOperator::constant(g, 0, "empty");
  if (name == "uniform_matroid") return uniform_matroid(params.n, params.k);
  if (name == "chain_antimatroid") {
    std::vector<std::pair<int, int>> chain;
    for (int i = 0; i + 1 < params.n; ++i) chain.emplace_back(i, i + 1);
    return poset_antimatroid(g, chain);
  }
  if (name == "free_antimatroid") return poset_antimatroid(g, {});
  throw InvalidArgumentError("unknown builtin instance \"" + std::string(name) + "\"");
}

// ---------------------------------------------------------------------------
// Geometry

PointSet2D::PointSet2D(std::vector<std::string> labels, std::vector<Point2D> points)
    : ground_(std::move(labels)), points_(std::move(points)) {
  if (points_.size() != static_cast<std::size_t>(ground_.size())) {
    throw InvalidArgumentError("point set needs exactly one label per point");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (p.x > kMaxCoordinate || p.x < -kMaxCoordinate || p.y > kMaxCoordinate || p.y < -kMaxCoordinate) {
      throw InvalidArgumentError("point coordinates must lie within ±2^20");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points_[j] == p) throw InvalidArgumentError("duplicate point " + ground_.label(i));
    }
  }
}

PointSet2D::PointSet2D(std::vector<Point2D> points)
    : PointSet2D(
          [&] {
            std::vector<std::string> labels;
            for (std::size_t i = 1; i <= points.size(); ++i) labels.push_back("p" + std::to_string(i));
            return labels;
          }(),
          points) {}

int orientation(const Point2D& a, const Point2D& b, const Point2D& c) {
  const std::int64_t cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return cross > 0 ? 1 : (cross < 0 ? -1 : 0);
}

namespace {

// Strict convex hull (collinear points dropped), counter-clockwise.
std::vector<Point2D> hull_vertices(std::vector<Point2D> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2D& a, const Point2D& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  if (pts.size() < 2) return pts;
  std::vector<Point2D> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

bool on_segment(const Point2D& a, const Point2D& b, const Point2D& q) {
  return orientation(a, b, q) == 0 && std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

bool in_hull(const std::vector<Point2D>& hull, const Point2D& q) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return hull[0] == q;
  if (hull.size() == 2) return on_segment(hull[0], hull[1], q);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (orientation(hull[i], hull[(i + 1) % hull.size()], q) < 0) return false;
  }
  return true;
}

using Wide = __int128;

// Closed disk through `origin`, center origin + u / d.
struct Disk {
  bool empty = true;
  Point2D origin;
  Wide ux = 0, uy = 0, d = 1;

  bool contains(const Point2D& q) const {
    if (empty) return false;
    const Wide qx = q.x - origin.x;
    const Wide qy = q.y - origin.y;
    // |q'd − u|² ≤ |u|²  ⇔  d (d|q'|² − 2 q'·u) ≤ 0
    const Wide inner = d * (qx * qx + qy * qy) - 2 * (qx * ux + qy * uy);
    const int sd = d > 0 ? 1 : -1;
    const int si = inner > 0 ? 1 : (inner < 0 ? -1 : 0);
    return sd * si <= 0;
  }
};

Disk disk_of(const std::vector<Point2D>& r) {
  Disk disk;
  if (r.empty()) return disk;
  disk.empty = false;
  disk.origin = r[0];
  if (r.size() == 1) return disk;
  const Wide bx = r[1].x - r[0].x, by = r[1].y - r[0].y;
  if (r.size() == 2) {
    disk.ux = bx;
    disk.uy = by;
    disk.d = 2;
    return disk;
  }
  const Wide cx = r[2].x - r[0].x, cy = r[2].y - r[0].y;
  const Wide det = bx * cy - by * cx;
  if (det == 0) {
    // Collinear support: the disk on the two extreme points.
    std::vector<Point2D> ends = r;
    std::sort(ends.begin(), ends.end(), [](const Point2D& a, const Point2D& b) {
      return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    return disk_of({ends.front(), ends.back()});
  }
  const Wide b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
  disk.ux = cy * b2 - by * c2;
  disk.uy = bx * c2 - cx * b2;
  disk.d = 2 * det;
  return disk;
}

Disk welzl(const std::vector<Point2D>& pts, std::size_t m, std::vector<Point2D>& support) {
  if (m == 0 || support.size() == 3) return disk_of(support);
  const Point2D& p = pts[m - 1];
  Disk d = welzl(pts, m - 1, support);
  if (d.contains(p)) return d;
  support.push_back(p);
  d = welzl(pts, m - 1, support);
  support.pop_back();
  return d;
}

std::vector<Point2D> select(const PointSet2D& pts, Mask x) {
  std::vector<Point2D> out;
  for_each_bit(x, [&](int i) { out.push_back(pts.points()[i]); });
  return out;
}

}  // namespace

SetOperator convex_hull_geometry(const PointSet2D& pts) {
  const auto& g = pts.ground();
  require_dense(g.size(), "convex_hull_geometry");
  std::vector<Mask> t(g.hypercube_size());
  for (Mask x = 0; x < t.size(); ++x) {
    const auto hull = hull_vertices(select(pts, x));
    Mask out = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (in_hull(hull, pts.points()[i])) out |= bit(static_cast<int>(i));
    }
    t[x] = out | x;
  }
  return {g, std::move(t), "convex-hull"};
}

SetOperator seb_violator(const PointSet2D& pts) {
  const auto& g = pts.ground();
  if (g.size() > 16) throw CapacityError("seb_violator supports at most 16 points");
  require_dense(g.size(), "seb_violator");
  std::vector<Mask> t(g.hypercube_size());
  for (Mask x = 0; x < t.size(); ++x) {
    const auto chosen = select(pts, x);
    std::vector<Point2D> support;
    const Disk disk = welzl(chosen, chosen.size(), support);
    Mask out = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (disk.contains(pts.points()[i])) out |= bit(static_cast<int>(i));
    }
    t[x] = out;
  }
  return {g, std::move(t), "seb"};
}

// ---------------------------------------------------------------------------
// Enumeration

std::string_view to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::kExtensive: return "extensive";
    case SpaceKind::kViolator: return "violator";
    case SpaceKind::kClosure: return "closure";
    case SpaceKind::kConvexGeometry: return "convex-geometry";
    case SpaceKind::kRelationR1R2: return "relationR1R2";
    case SpaceKind::kPartition: return "partition";
    case SpaceKind::kFamily: return "family";
    case SpaceKind::kGreedoid: return "greedoid";
    case SpaceKind::kAntimatroid: return "antimatroid";
    case SpaceKind::kMatroid: return "matroid";
  }
  return "?";
}

SpaceKind parse_space_kind(std::string_view name) {
  for (auto k : {SpaceKind::kExtensive, SpaceKind::kViolator, SpaceKind::kClosure, SpaceKind::kConvexGeometry,
                 SpaceKind::kRelationR1R2, SpaceKind::kPartition, SpaceKind::kFamily, SpaceKind::kGreedoid,
                 SpaceKind::kAntimatroid, SpaceKind::kMatroid}) {
    if (to_string(k) == name) return k;
  }
  throw InvalidArgumentError("unknown space kind \"" + std::string(name) + "\"");
}

namespace {

constexpr int kMaxOperatorEnumN = 3;
constexpr int kMaxFamilyEnumN = 4;

void require_enum_bound(int n, int bound, SpaceKind kind) {
  if (n < 0) throw InvalidArgumentError("n must be non-negative");
  if (n > bound) {
    throw CapacityError("exhaustive enumeration of " + std::string(to_string(kind)) + " is limited to n ≤ " +
                        std::to_string(bound));
  }
}

std::size_t enumerate_operators(int n, SpaceKind kind, const std::function<void(const Space&)>& visit) {
  const auto g = GroundSet::numbered(n);
  const Mask full = g.full_mask();
  const std::size_t size = std::size_t{1} << n;
  // Mixed-radix counter: the image of X is X ∪ s with s ⊆ E − X.
  std::vector<Mask> free(size), choice(size, 0);
  for (Mask x = 0; x < size; ++x) free[x] = full & ~x;
  std::size_t visited = 0;
  while (true) {
    std::vector<Mask> table(size);
    for (Mask x = 0; x < size; ++x) table[x] = x | choice[x];
    SetOperator op(g, std::move(table));
    bool keep = true;
    if (kind != SpaceKind::kExtensive) {
      const auto c = classify_space(op);
      keep = kind == SpaceKind::kViolator ? c.violator
             : kind == SpaceKind::kClosure ? c.closure
                                           : c.convex_geometry;
    }
    if (keep) {
      visit(op);
      ++visited;
    }
    std::size_t i = 0;
    for (; i < size; ++i) {
      if (choice[i] == free[i]) {
        choice[i] = 0;
        continue;
      }
      choice[i] = (choice[i] - free[i]) & free[i];  // next submask of free[i]
      break;
    }
    if (i == size) break;
  }
  return visited;
}

std::size_t enumerate_partitions(int n, SpaceKind kind, const std::function<void(const Space&)>& visit) {
  const auto g = GroundSet::numbered(n);
  const std::size_t size = std::size_t{1} << n;
  // Restricted growth strings: label[i] ≤ 1 + max(label[0..i)).
  std::vector<std::size_t> label(size, 0), prefix_max(size, 0);
  std::size_t visited = 0;
  while (true) {
    CospanningPartition p(g, label);
    bool keep = true;
    if (kind == SpaceKind::kRelationR1R2) {
      keep = check_relation_property(p, RelationProperty::kR1).holds &&
             check_relation_property(p, RelationProperty::kR2).holds;
    }
    if (keep) {
      visit(p);
      ++visited;
    }
    std::size_t i = size;
    while (i-- > 1) {
      if (label[i] <= prefix_max[i - 1]) break;
    }
    if (i == 0) break;
    ++label[i];
    prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
    for (std::size_t j = i + 1; j < size; ++j) {
      label[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return visited;
}

std::size_t enumerate_families(int n, SpaceKind kind, const std::function<void(const Space&)>& visit) {
  const auto g = GroundSet::numbered(n);
  const std::size_t size = std::size_t{1} << n;
  const std::uint64_t count = std::uint64_t{1} << size;
  std::size_t visited = 0;
  std::vector<Mask> members;
  for (std::uint64_t code = 0; code < count; ++code) {
    members.clear();
    for (Mask m = 0; m < size; ++m) {
      if ((code >> m) & 1U) members.push_back(m);
    }
    SetFamily fam(g, members);
    bool keep = true;
    if (kind != SpaceKind::kFamily) {
      const auto c = classify_family(fam);
      keep = kind == SpaceKind::kGreedoid ? c.greedoid : kind == SpaceKind::kAntimatroid ? c.antimatroid : c.matroid;
    }
    if (keep) {
      visit(fam);
      ++visited;
    }
  }
  return visited;
}

}  // namespace

std::size_t enumerate_spaces(int n, SpaceKind kind, const std::function<void(const Space&)>& visit) {
  switch (kind) {
    case SpaceKind::kExtensive:
    case SpaceKind::kViolator:
    case SpaceKind::kClosure:
    case SpaceKind::kConvexGeometry:
      require_enum_bound(n, kMaxOperatorEnumN, kind);
      return enumerate_operators(n, kind, visit);
    case SpaceKind::kRelationR1R2:
    case SpaceKind::kPartition:
      require_enum_bound(n, kMaxOperatorEnumN, kind);
      return enumerate_partitions(n, kind, visit);
    case SpaceKind::kFamily:
    case SpaceKind::kGreedoid:
    case SpaceKind::kAntimatroid:
    case SpaceKind::kMatroid:
      require_enum_bound(n, kMaxFamilyEnumN, kind);
      return enumerate_families(n, kind, visit);
  }
  throw InvalidArgumentError("unknown space kind");
}

std::size_t for_each_operator(int n, SpaceKind kind, const std::function<void(const SetOperator&)>& visit) {
  return enumerate_spaces(n, kind, [&](const Space& s) {
    if (const auto* op = std::get_if<SetOperator>(&s)) visit(*op);
    else throw InvalidArgumentError("space kind does not produce operators");
  });
}

std::size_t for_each_partition(int n, SpaceKind kind, const std::function<void(const CospanningPartition&)>& visit) {
  return enumerate_spaces(n, kind, [&](const Space& s) {
    if (const auto* p = std::get_if<CospanningPartition>(&s)) visit(*p);
    else throw InvalidArgumentError("space kind does not produce partitions");
  });
}

std::size_t for_each_family(int n, SpaceKind kind, const std::function<void(const SetFamily&)>& visit) {
  return enumerate_spaces(n, kind, [&](const Space& s) {
    if (const auto* f = std::get_if<SetFamily>(&s)) visit(*f);
    else throw InvalidArgumentError("space kind does not produce families");
  });
}

// ---------------------------------------------------------------------------
// Random generators

namespace {

// mt19937_64 output is fully specified; reducing by modulo keeps results
// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }

 private:
  std::mt19937_64 engine_;
};

void require_random_bound(int n, int bound, const char* what) {
  if (n < 0) throw InvalidArgumentError("n must be non-negative");
  if (n > bound) throw CapacityError(std::string(what) + " supports n ≤ " + std::to_string(bound));
}

std::vector<Mask> closure_under(std::vector<Mask> seeds, bool use_union) {
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  std::vector<bool> present;
  Mask top = 0;
  for (Mask s : seeds) top = std::max(top, s);
  std::size_t size = 1;
  while (size <= top) size <<= 1;
  present.assign(size, false);
  for (Mask s : seeds) present[s] = true;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Mask r = use_union ? (seeds[i] | seeds[j]) : (seeds[i] & seeds[j]);
      if (!present[r]) {
        present[r] = true;
        seeds.push_back(r);
      }
    }
  }
  return seeds;
}

}  // namespace

IntervalPartition random_hypercube_partition(int n, std::uint64_t seed) {
  require_random_bound(n, 6, "random_hypercube_partition");
  const auto g = GroundSet::numbered(n);
  const std::size_t size = std::size_t{1} << n;
  Rng rng(seed);
  std::vector<bool> assigned(size, false);
  std::vector<Interval> intervals;
  std::size_t remaining = size;
  while (remaining > 0) {
    std::vector<Mask> maximal;
    for (Mask x = 0; x < size; ++x) {
      if (assigned[x]) continue;
      bool top = true;
      for (int e = 0; e < n && top; ++e) {
        if (!has_bit(x, e)) top = assigned[x | bit(e)];
      }
      // Every unassigned proper superset contains an unassigned cover of x,
      // so checking single-element extensions suffices.
      if (top) maximal.push_back(x);
    }
    const Mask hi = maximal[rng.below(maximal.size())];
    std::vector<Mask> admissible;
    for_each_submask(hi, [&](Mask lo) {
      bool free = true;
      for_each_submask(hi & ~lo, [&](Mask s) { free = free && !assigned[lo | s]; });
      if (free) admissible.push_back(lo);
    });
    const Mask lo = admissible[rng.below(admissible.size())];
    for_each_submask(hi & ~lo, [&](Mask s) { assigned[lo | s] = true; });
    remaining -= std::size_t{1} << popcount(hi & ~lo);
    intervals.push_back({lo, hi});
  }
  return {g, std::move(intervals)};
}

SetFamily random_antimatroid(int n, std::uint64_t seed) {
  require_random_bound(n, 10, "random_antimatroid");
  Rng rng(seed);
  std::vector<Mask> seeds{0};
  const std::size_t words = 1 + rng.below(std::max(1, n));
  for (std::size_t w = 0; w < words; ++w) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    // A random-length prefix keeps the union below E sometimes.
    const std::size_t length = rng.below(n + 1);
    Mask prefix = 0;
    for (std::size_t i = 0; i < length; ++i) {
      prefix |= bit(perm[i]);
      seeds.push_back(prefix);
    }
  }
  return SetFamily(GroundSet::numbered(n), closure_under(std::move(seeds), true));
}

SetFamily random_matroid(int n, std::uint64_t seed) {
  require_random_bound(n, 10, "random_matroid");
  Rng rng(seed);
  const int rank = n == 0 ? 0 : 1 + static_cast<int>(rng.below(std::min(n, 4)));
  std::vector<Mask> vectors(n);
  for (auto& v : vectors) v = rng.below(std::size_t{1} << rank);
  std::vector<Mask> members;
  const std::size_t size = std::size_t{1} << n;
  for (Mask x = 0; x < size; ++x) {
    std::vector<Mask> basis;  // XOR basis, reduced on insertion
    bool independent = true;
    for_each_bit(x, [&](int e) {
      if (!independent) return;
      Mask v = vectors[e];
      for (Mask b : basis) v = std::min(v, v ^ b);
      if (v == 0) independent = false;
      else basis.push_back(v);
    });
    if (independent) members.push_back(x);
  }
  return SetFamily(GroundSet::numbered(n), std::move(members));
}

SetFamily random_closed_family(int n, std::uint64_t seed) {
  require_random_bound(n, 10, "random_closed_family");
  Rng rng(seed);
  const auto g = GroundSet::numbered(n);
  const std::size_t size = std::size_t{1} << n;
  std::vector<Mask> seeds{g.full_mask()};
  const std::size_t count = 1 + rng.below(n + 2);
  for (std::size_t i = 0; i < count; ++i) seeds.push_back(rng.below(size));
  return SetFamily(g, closure_under(std::move(seeds), false));
}

PointSet2D random_points(int n, std::uint64_t seed) {
  if (n < 1 || n > 16) throw InvalidArgumentError("random_points supports 1 ≤ n ≤ 16");
  Rng rng(seed);
  std::vector<Point2D> pts;
  while (pts.size() < static_cast<std::size_t>(n)) {
    const Point2D p{static_cast<std::int64_t>(rng.below(8)), static_cast<std::int64_t>(rng.below(8))};
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return PointSet2D(std::move(pts));
}

}  // namespace cospan

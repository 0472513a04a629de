#include "cospan/operators.hpp"

#include <atomic>
#include <mutex>
#include <unordered_map>

namespace cospan {

struct SetOperator::Impl {
  GroundSet ground;
  std::string name;
  Callback callback;
  mutable std::vector<Mask> table;
  mutable std::atomic<bool> tabulated{false};
  mutable std::mutex mutex;
  mutable std::unordered_map<Mask, Mask> memo;
};

namespace {

void validate_value(const GroundSet& g, Mask value) {
  if ((value & ~g.full_mask()) != 0) {
    throw InvalidArgumentError("operator value has members outside the ground set");
  }
}

}  // namespace

SetOperator::SetOperator(GroundSet ground, std::vector<Mask> table, std::string name)
    : impl_(std::make_shared<Impl>()) {
  const std::size_t size = ground.hypercube_size();
  if (table.size() != size) {
    throw InvalidArgumentError("operator table has " + std::to_string(table.size()) + " entries, expected " +
                               std::to_string(size));
  }
  for (Mask v : table) validate_value(ground, v);
  impl_->ground = std::move(ground);
  impl_->name = std::move(name);
  impl_->table = std::move(table);
  impl_->tabulated = true;
}

SetOperator SetOperator::from_callback(GroundSet ground, Callback f, std::string name) {
  auto impl = std::make_shared<Impl>();
  impl->ground = std::move(ground);
  impl->name = std::move(name);
  impl->callback = std::move(f);
  return SetOperator(std::move(impl));
}

SetOperator SetOperator::identity(const GroundSet& ground) {
  std::vector<Mask> t(ground.hypercube_size());
  for (std::size_t m = 0; m < t.size(); ++m) t[m] = m;
  return {ground, std::move(t), "identity"};
}

SetOperator SetOperator::constant(const GroundSet& ground, Mask value, std::string name) {
  validate_value(ground, value);
  return {ground, std::vector<Mask>(ground.hypercube_size(), value), std::move(name)};
}

const GroundSet& SetOperator::ground() const { return impl_->ground; }
const std::string& SetOperator::name() const { return impl_->name; }

SetOperator SetOperator::renamed(std::string name) const {
  return {impl_->ground, table(), std::move(name)};
}

Mask SetOperator::operator()(Mask x) const {
  if ((x & ~impl_->ground.full_mask()) != 0) throw InvalidArgumentError("operator argument outside the ground set");
  if (impl_->tabulated.load(std::memory_order_acquire)) return impl_->table[x];
  std::lock_guard lock(impl_->mutex);
  if (auto it = impl_->memo.find(x); it != impl_->memo.end()) return it->second;
  const Mask v = impl_->callback(x);
  validate_value(impl_->ground, v);
  impl_->memo.emplace(x, v);
  return v;
}

Subset SetOperator::operator()(const Subset& x) const {
  require_same_ground(impl_->ground, x.ground());
  return {impl_->ground, (*this)(x.mask())};
}

const std::vector<Mask>& SetOperator::table() const {
  if (impl_->tabulated.load(std::memory_order_acquire)) return impl_->table;
  std::lock_guard lock(impl_->mutex);
  if (!impl_->tabulated.load(std::memory_order_relaxed)) {
    const std::size_t size = impl_->ground.hypercube_size();
    std::vector<Mask> t(size);
    for (std::size_t m = 0; m < size; ++m) {
      auto it = impl_->memo.find(m);
      t[m] = it != impl_->memo.end() ? it->second : impl_->callback(m);
      validate_value(impl_->ground, t[m]);
    }
    impl_->table = std::move(t);
    impl_->memo.clear();
    impl_->tabulated.store(true, std::memory_order_release);
  }
  return impl_->table;
}

bool SetOperator::is_tabulated() const { return impl_->tabulated.load(std::memory_order_acquire); }

bool operator==(const SetOperator& a, const SetOperator& b) {
  return a.ground() == b.ground() && a.table() == b.table();
}

// ---------------------------------------------------------------------------
// Axioms

std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::kV1: return "V1";
    case Axiom::kV2: return "V2";
    case Axiom::kVV2: return "VV2";
    case Axiom::kC2: return "C2";
    case Axiom::kC3: return "C3";
    case Axiom::kCV1: return "CV1";
    case Axiom::kCV2: return "CV2";
    case Axiom::kAE: return "AE";
    case Axiom::kEX: return "EX";
    case Axiom::kG3: return "G3";
  }
  return "?";
}

Axiom parse_axiom(std::string_view name) {
  for (Axiom a : {Axiom::kV1, Axiom::kV2, Axiom::kVV2, Axiom::kC2, Axiom::kC3, Axiom::kCV1, Axiom::kCV2,
                  Axiom::kAE, Axiom::kEX, Axiom::kG3}) {
    if (to_string(a) == name) return a;
  }
  throw InvalidArgumentError("unknown axiom \"" + std::string(name) + "\"");
}

namespace {

using Table = std::vector<Mask>;

PropertyReport check_v1(const GroundSet& g, const Table& t) {
  for (Mask x = 0; x < t.size(); ++x) {
    if (!is_submask(x, t[x])) return PropertyReport::fail("V1", Witness(g).set("X", x));
  }
  return PropertyReport::pass("V1");
}

PropertyReport check_v2(const GroundSet& g, const Table& t) {
  for (Mask x = 0; x < t.size(); ++x) {
    if (!is_submask(x, t[x])) continue;  // no Y with X ⊆ Y ⊆ φ(X)
    PropertyReport bad = PropertyReport::pass("V2");
    for_each_submask(t[x] & ~x, [&](Mask s) {
      if (bad.holds && t[x | s] != t[x]) bad = PropertyReport::fail("V2", Witness(g).set("X", x).set("Y", x | s));
    });
    if (!bad.holds) return bad;
  }
  return PropertyReport::pass("V2");
}

PropertyReport check_vv2(const GroundSet& g, const Table& t) {
  for (Mask x = 0; x < t.size(); ++x) {
    PropertyReport bad = PropertyReport::pass("VV2");
    for_each_submask(t[x], [&](Mask y) {
      if (bad.holds && is_submask(x, t[y]) && t[x] != t[y]) {
        bad = PropertyReport::fail("VV2", Witness(g).set("X", x).set("Y", y));
      }
    });
    if (!bad.holds) return bad;
  }
  return PropertyReport::pass("VV2");
}

PropertyReport check_c2(const GroundSet& g, const Table& t) {
  // Isotonicity along single-element steps implies it along every chain.
  const int n = g.size();
  for (Mask x = 0; x < t.size(); ++x) {
    for (int e = 0; e < n; ++e) {
      if (has_bit(x, e)) continue;
      if (!is_submask(t[x], t[x | bit(e)])) return PropertyReport::fail("C2", Witness(g).set("X", x).set("Y", x | bit(e)));
    }
  }
  return PropertyReport::pass("C2");
}

PropertyReport check_c3(const GroundSet& g, const Table& t) {
  for (Mask x = 0; x < t.size(); ++x) {
    if (t[t[x]] != t[x]) return PropertyReport::fail("C3", Witness(g).set("X", x));
  }
  return PropertyReport::pass("C3");
}

PropertyReport check_cv1(const GroundSet& g, const Table& t) {
  for (Mask x = 0; x < t.size(); ++x) {
    if (!is_submask(t[x], x)) return PropertyReport::fail("CV1", Witness(g).set("X", x));
  }
  return PropertyReport::pass("CV1");
}

PropertyReport check_cv2(const GroundSet& g, const Table& t) {
  for (Mask x = 0; x < t.size(); ++x) {
    if (!is_submask(t[x], x)) continue;
    PropertyReport bad = PropertyReport::pass("CV2");
    for_each_submask(x & ~t[x], [&](Mask s) {
      const Mask y = t[x] | s;
      if (bad.holds && t[y] != t[x]) bad = PropertyReport::fail("CV2", Witness(g).set("X", x).set("Y", y));
    });
    if (!bad.holds) return bad;
  }
  return PropertyReport::pass("CV2");
}

PropertyReport check_ae(const GroundSet& g, const Table& t) {
  const int n = g.size();
  for (Mask x = 0; x < t.size(); ++x) {
    for (int p = 0; p < n; ++p) {
      if (has_bit(t[x], p)) continue;
      for (int q = 0; q < n; ++q) {
        if (q == p || has_bit(t[x], q)) continue;
        if (has_bit(t[x | bit(q)], p) && has_bit(t[x | bit(p)], q)) {
          return PropertyReport::fail("AE", Witness(g).set("X", x).element("p", p).element("q", q));
        }
      }
    }
  }
  return PropertyReport::pass("AE");
}

PropertyReport check_ex(const GroundSet& g, const Table& t) {
  const int n = g.size();
  for (Mask x = 0; x < t.size(); ++x) {
    for (int a = 0; a < n; ++a) {
      if (has_bit(t[x], a)) continue;
      for (int b = 0; b < n; ++b) {
        if (has_bit(t[x | bit(b)], a) && !has_bit(t[x | bit(a)], b)) {
          return PropertyReport::fail("EX", Witness(g).set("X", x).element("x", a).element("y", b));
        }
      }
    }
  }
  return PropertyReport::pass("EX");
}

PropertyReport check_g3(const GroundSet& g, const Table& t) {
  const int n = g.size();
  for (Mask x = 0; x < t.size(); ++x) {
    for (int a = 0; a < n; ++a) {
      if (has_bit(x, a)) continue;
      const Mask xa = x | bit(a);
      for (int b = 0; b < n; ++b) {
        if (b == a || has_bit(x, b)) continue;
        const Mask xb = x | bit(b);
        const Mask xab = xa | bit(b);
        if (t[xb] != t[xab] || t[xa] == t[xab]) continue;
        bool found = false;
        for_each_bit(xa, [&](int z) { found = found || t[xa & ~bit(z)] == t[xa]; });
        if (!found) return PropertyReport::fail("G3", Witness(g).set("X", x).element("x", a).element("y", b));
      }
    }
  }
  return PropertyReport::pass("G3");
}

}  // namespace

PropertyReport check_axiom(const SetOperator& op, Axiom axiom) {
  const auto& g = op.ground();
  require_dense(g.size(), "check_axiom");
  const Table& t = op.table();
  switch (axiom) {
    case Axiom::kV1: return check_v1(g, t);
    case Axiom::kV2: return check_v2(g, t);
    case Axiom::kVV2: return check_vv2(g, t);
    case Axiom::kC2: return check_c2(g, t);
    case Axiom::kC3: return check_c3(g, t);
    case Axiom::kCV1: return check_cv1(g, t);
    case Axiom::kCV2: return check_cv2(g, t);
    case Axiom::kAE: return check_ae(g, t);
    case Axiom::kEX: return check_ex(g, t);
    case Axiom::kG3: return check_g3(g, t);
  }
  throw InvalidArgumentError("unknown axiom");
}

SpaceClass classify_space(const SetOperator& op) {
  auto holds = [&](Axiom a) { return check_axiom(op, a).holds; };
  SpaceClass c;
  const bool v1 = holds(Axiom::kV1);
  c.violator = v1 && holds(Axiom::kV2);
  c.co_violator = holds(Axiom::kCV1) && holds(Axiom::kCV2);
  c.closure = v1 && holds(Axiom::kC2) && holds(Axiom::kC3);
  c.convex_geometry = c.closure && holds(Axiom::kAE);
  return c;
}

SetOperator dual_interior(const SetOperator& op) {
  const auto& g = op.ground();
  require_dense(g.size(), "dual_interior");
  const Mask full = g.full_mask();
  const Table& t = op.table();
  Table c(t.size());
  for (Mask x = 0; x < t.size(); ++x) c[x] = full & ~t[full & ~x];
  return {g, std::move(c), op.name().empty() ? std::string{} : "dual(" + op.name() + ")"};
}

Mask extreme_points(const SetOperator& op, Mask x) {
  Mask ex = 0;
  for_each_bit(x, [&](int e) {
    if (!has_bit(op(x & ~bit(e)), e)) ex |= bit(e);
  });
  return ex;
}

Subset extreme_points(const SetOperator& op, const Subset& x) {
  require_same_ground(op.ground(), x.ground());
  return {op.ground(), extreme_points(op, x.mask())};
}

SetOperator extreme_point_operator(const SetOperator& op) {
  const auto& g = op.ground();
  require_dense(g.size(), "extreme_point_operator");
  const Table& t = op.table();
  Table ex(t.size());
  for (Mask x = 0; x < t.size(); ++x) {
    Mask e = 0;
    for_each_bit(x, [&](int i) {
      if (!has_bit(t[x & ~bit(i)], i)) e |= bit(i);
    });
    ex[x] = e;
  }
  return {g, std::move(ex), "ex"};
}

namespace {

std::vector<Mask> fiber(const Table& t, Mask value) {
  std::vector<Mask> out;
  for (Mask y = 0; y < t.size(); ++y) {
    if (t[y] == value) out.push_back(y);
  }
  return out;
}

std::vector<Mask> inclusion_minimal(const std::vector<Mask>& members) {
  std::vector<Mask> out;
  for (Mask a : members) {
    bool minimal = true;
    for (Mask b : members) {
      if (b != a && is_submask(b, a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

}  // namespace

GeneratorsAndBases generators_and_bases(const SetOperator& op, const Subset& x) {
  require_same_ground(op.ground(), x.ground());
  require_dense(op.ground().size(), "generators_and_bases");
  const Table& t = op.table();
  auto gens = fiber(t, t[x.mask()]);
  auto bases = inclusion_minimal(gens);
  return {SetFamily(op.ground(), std::move(gens)), SetFamily(op.ground(), std::move(bases))};
}

PropertyReport is_uniquely_generated(const SetOperator& op) {
  const auto& g = op.ground();
  require_dense(g.size(), "is_uniquely_generated");
  const Table& t = op.table();
  std::unordered_map<Mask, std::vector<Mask>> fibers;
  for (Mask y = 0; y < t.size(); ++y) {
    auto& f = fibers[t[y]];
    for (Mask x : f) {
      if (t[x & y] != t[y]) return PropertyReport::fail("uniquely-generated", Witness(g).set("X", x).set("Y", y));
    }
    f.push_back(y);
  }
  return PropertyReport::pass("uniquely-generated");
}

bool every_subset_has_one_basis(const SetOperator& op) {
  require_dense(op.ground().size(), "every_subset_has_one_basis");
  const Table& t = op.table();
  std::unordered_map<Mask, std::vector<Mask>> fibers;
  for (Mask y = 0; y < t.size(); ++y) fibers[t[y]].push_back(y);
  for (const auto& [value, members] : fibers) {
    if (inclusion_minimal(members).size() != 1) return false;
  }
  return true;
}

IntersectionBasis basis_by_intersection(const SetOperator& op, const Subset& x) {
  require_same_ground(op.ground(), x.ground());
  require_dense(op.ground().size(), "basis_by_intersection");
  const Table& t = op.table();
  const Mask target = t[x.mask()];
  Mask acc = op.ground().full_mask();
  for (Mask y = 0; y < t.size(); ++y) {
    if (t[y] == target) acc &= y;
  }
  return {Subset(op.ground(), acc), t[acc] == target};
}

}  // namespace cospan

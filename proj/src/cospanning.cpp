#include "cospan/cospanning.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace cospan {

namespace {

constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

bool has_proper_submask_in(const std::vector<std::size_t>& class_of, Mask x, std::size_t c) {
  bool found = false;
  for_each_bit(x, [&](int e) { found = found || class_of[x & ~bit(e)] == c; });
  if (found || popcount(x) < 2) return found;
  // Non-convex classes can have members below x that are not adjacent to it.
  for (Mask s = (x - 1) & x;; s = (s - 1) & x) {
    if (class_of[s] == c) return true;
    if (s == 0) break;
  }
  return false;
}

}  // namespace

CospanningPartition::CospanningPartition(GroundSet ground, const std::vector<std::size_t>& labels)
    : ground_(std::move(ground)) {
  const std::size_t size = ground_.hypercube_size();
  if (labels.size() != size) throw InvalidArgumentError("partition labeling must cover all 2^n subsets");
  class_of_.assign(size, kUnassigned);
  std::unordered_map<std::size_t, std::size_t> renumber;
  for (Mask x = 0; x < size; ++x) {
    auto [it, inserted] = renumber.emplace(labels[x], renumber.size());
    class_of_[x] = it->second;
    if (inserted) classes_.emplace_back();
    classes_[it->second].members.push_back(x);
  }
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    auto& cls = classes_[c];
    Mask u = 0;
    for (Mask m : cls.members) u |= m;
    if (class_of_[u] == c) cls.maximum = u;
    for (Mask m : cls.members) {
      if (!has_proper_submask_in(class_of_, m, c)) cls.minima.push_back(m);
    }
  }
}

CospanningPartition CospanningPartition::from_classes(GroundSet ground,
                                                      const std::vector<std::vector<Mask>>& classes) {
  const std::size_t size = ground.hypercube_size();
  std::vector<std::size_t> labels(size, kUnassigned);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw FormatError("partition class " + std::to_string(c) + " is empty");
    for (Mask m : classes[c]) {
      if (m >= size) throw FormatError("partition member outside the ground set");
      if (labels[m] != kUnassigned) {
        throw FormatError("subset " + ground.format(m) + " appears in more than one partition class");
      }
      labels[m] = c;
    }
  }
  for (Mask m = 0; m < size; ++m) {
    if (labels[m] == kUnassigned) throw FormatError("subset " + ground.format(m) + " is in no partition class");
  }
  return {std::move(ground), labels};
}

IntervalPartition::IntervalPartition(GroundSet ground, std::vector<Interval> intervals)
    : ground_(std::move(ground)), intervals_(std::move(intervals)) {
  const std::size_t size = ground_.hypercube_size();
  owner_.assign(size, kUnassigned);
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto [lo, hi] = intervals_[i];
    if (hi >= size) throw InvalidArgumentError("interval outside the ground set");
    if (!is_submask(lo, hi)) {
      throw InvalidArgumentError("interval [" + ground_.format(lo) + ", " + ground_.format(hi) + "] has lo ⊄ hi");
    }
    for_each_submask(hi & ~lo, [&](Mask s) {
      if (owner_[lo | s] != kUnassigned) {
        throw InvalidArgumentError("intervals overlap at " + ground_.format(lo | s));
      }
      owner_[lo | s] = i;
    });
  }
  for (Mask m = 0; m < size; ++m) {
    if (owner_[m] == kUnassigned) throw InvalidArgumentError("intervals do not cover " + ground_.format(m));
  }
}

CospanningPartition IntervalPartition::to_partition() const { return {ground_, owner_}; }

CospanningPartition partition_from_operator(const SetOperator& op) {
  require_dense(op.ground().size(), "partition_from_operator");
  const auto& t = op.table();
  std::vector<std::size_t> labels(t.begin(), t.end());
  return {op.ground(), labels};
}

// ---------------------------------------------------------------------------
// Relation properties

std::string_view to_string(RelationProperty p) {
  switch (p) {
    case RelationProperty::kR1: return "R1";
    case RelationProperty::kR2: return "R2";
    case RelationProperty::kR3: return "R3";
    case RelationProperty::kR33: return "R33";
    case RelationProperty::kR4G: return "R4G";
    case RelationProperty::kR4CG: return "R4CG";
    case RelationProperty::kR5: return "R5";
    case RelationProperty::kEqCL: return "EqCL";
    case RelationProperty::kEqAN: return "EqAN";
  }
  return "?";
}

RelationProperty parse_relation_property(std::string_view name) {
  for (auto p : {RelationProperty::kR1, RelationProperty::kR2, RelationProperty::kR3, RelationProperty::kR33,
                 RelationProperty::kR4G, RelationProperty::kR4CG, RelationProperty::kR5, RelationProperty::kEqCL,
                 RelationProperty::kEqAN}) {
    if (to_string(p) == name) return p;
  }
  throw InvalidArgumentError("unknown relation property \"" + std::string(name) + "\"");
}

namespace {

PropertyReport check_pairwise(const CospanningPartition& p, bool use_union, const char* name) {
  const auto& g = p.ground();
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    const auto& ms = p.cls(c).members;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        const Mask r = use_union ? (ms[i] | ms[j]) : (ms[i] & ms[j]);
        if (p.class_of(r) != c) return PropertyReport::fail(name, Witness(g).set("X", ms[i]).set("Y", ms[j]));
      }
    }
  }
  return PropertyReport::pass(name);
}

PropertyReport check_r2(const CospanningPartition& p) {
  // A class is convex iff for all members X ⊊ Z it contains every Z − e with
  // e ∈ Z − X (induction on |Z − Y|).
  const auto& g = p.ground();
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    const auto& ms = p.cls(c).members;
    for (Mask z : ms) {
      for (Mask x : ms) {
        if (x == z || !is_submask(x, z)) continue;
        PropertyReport bad = PropertyReport::pass("R2");
        for_each_bit(z & ~x, [&](int e) {
          const Mask y = z & ~bit(e);
          if (bad.holds && p.class_of(y) != c) {
            bad = PropertyReport::fail("R2", Witness(g).set("X", x).set("Y", y).set("Z", z));
          }
        });
        if (!bad.holds) return bad;
      }
    }
  }
  return PropertyReport::pass("R2");
}

PropertyReport check_r33(const CospanningPartition& p) {
  const auto& g = p.ground();
  const int n = g.size();
  const Mask size = Mask{1} << n;
  for (Mask x = 0; x < size; ++x) {
    for (int a = 0; a < n; ++a) {
      if (has_bit(x, a) || p.related(x, x | bit(a))) continue;
      for (int b = 0; b < n; ++b) {
        if (b == a || has_bit(x, b) || p.related(x, x | bit(b))) continue;
        const Mask xab = x | bit(a) | bit(b);
        if (p.related(x | bit(a), xab) && p.related(x | bit(b), xab)) {
          return PropertyReport::fail("R33", Witness(g).set("X", x).element("p", a).element("q", b));
        }
      }
    }
  }
  return PropertyReport::pass("R33");
}

PropertyReport check_r4g(const CospanningPartition& p) {
  const auto& g = p.ground();
  const int n = g.size();
  const Mask size = Mask{1} << n;
  for (Mask x = 0; x < size; ++x) {
    for (int a = 0; a < n; ++a) {
      if (has_bit(x, a)) continue;
      const Mask xa = x | bit(a);
      for (int b = 0; b < n; ++b) {
        if (b == a || has_bit(x, b)) continue;
        const Mask xab = xa | bit(b);
        if (!p.related(x | bit(b), xab) || p.related(xa, xab)) continue;
        bool found = false;
        for_each_bit(xa, [&](int z) { found = found || p.related(xa & ~bit(z), xa); });
        if (!found) return PropertyReport::fail("R4G", Witness(g).set("X", x).element("x", a).element("y", b));
      }
    }
  }
  return PropertyReport::pass("R4G");
}

PropertyReport check_r4cg(const CospanningPartition& p) {
  const auto& g = p.ground();
  const int n = g.size();
  const Mask full = g.full_mask();
  const Mask size = Mask{1} << n;
  for (Mask x = 0; x < size; ++x) {
    bool top = true;
    for_each_bit(full & ~x, [&](int z) { top = top && !p.related(x, x | bit(z)); });
    if (!top) continue;
    for (int a = 0; a < n; ++a) {
      if (!has_bit(x, a) || p.related(x, x & ~bit(a))) continue;
      const Mask xa = x & ~bit(a);
      for (int y = 0; y < n; ++y) {
        if (has_bit(x, y)) continue;
        if (p.related(xa, xa | bit(y))) {
          return PropertyReport::fail("R4CG", Witness(g).set("X", x).element("x", a).element("y", y));
        }
      }
    }
  }
  return PropertyReport::pass("R4CG");
}

PropertyReport check_r5(const CospanningPartition& p) {
  const auto& g = p.ground();
  const int n = g.size();
  const Mask size = Mask{1} << n;
  for (Mask x = 0; x < size; ++x) {
    bool premise = true;
    for_each_bit(x, [&](int e) { premise = premise && !p.related(x, x & ~bit(e)); });
    if (!premise) continue;
    for (int a = 0; a < n; ++a) {
      if (!has_bit(x, a)) continue;
      const Mask xa = x & ~bit(a);
      for (int z = 0; z < n; ++z) {
        if (!has_bit(xa, z)) continue;
        if (p.related(xa & ~bit(z), xa)) {
          return PropertyReport::fail("R5", Witness(g).set("X", x).element("x", a).element("z", z));
        }
      }
    }
  }
  return PropertyReport::pass("R5");
}

PropertyReport check_eq_cl(const CospanningPartition& p) {
  const auto ip = interval_form(p);
  const auto& g = p.ground();
  for (const auto& [lo, hi] : ip.intervals()) {
    PropertyReport bad = PropertyReport::pass("EqCL");
    for_each_bit(lo, [&](int x) {
      const Mask target = hi & ~bit(x);
      if (bad.holds && ip.intervals()[ip.interval_of(target)].hi != target) {
        bad = PropertyReport::fail("EqCL", Witness(g).set("A", lo).set("B", hi).element("x", x));
      }
    });
    if (!bad.holds) return bad;
  }
  return PropertyReport::pass("EqCL");
}

PropertyReport check_eq_an(const CospanningPartition& p) {
  const auto ip = interval_form(p);
  const auto& g = p.ground();
  for (const auto& [lo, hi] : ip.intervals()) {
    PropertyReport bad = PropertyReport::pass("EqAN");
    for_each_bit(g.full_mask() & ~hi, [&](int x) {
      const Mask target = lo | bit(x);
      if (bad.holds && ip.intervals()[ip.interval_of(target)].lo != target) {
        bad = PropertyReport::fail("EqAN", Witness(g).set("A", lo).set("B", hi).element("x", x));
      }
    });
    if (!bad.holds) return bad;
  }
  return PropertyReport::pass("EqAN");
}

}  // namespace

PropertyReport check_relation_property(const CospanningPartition& p, RelationProperty prop) {
  switch (prop) {
    case RelationProperty::kR1: return check_pairwise(p, true, "R1");
    case RelationProperty::kR2: return check_r2(p);
    case RelationProperty::kR3: return check_pairwise(p, false, "R3");
    case RelationProperty::kR33: return check_r33(p);
    case RelationProperty::kR4G: return check_r4g(p);
    case RelationProperty::kR4CG: return check_r4cg(p);
    case RelationProperty::kR5: return check_r5(p);
    case RelationProperty::kEqCL: return check_eq_cl(p);
    case RelationProperty::kEqAN: return check_eq_an(p);
  }
  throw InvalidArgumentError("unknown relation property");
}

// ---------------------------------------------------------------------------
// Extremal sets and reconstruction

namespace {

std::string describe_class(const CospanningPartition& p, std::size_t c) {
  std::string out = "class " + std::to_string(c) + " {";
  const auto& ms = p.cls(c).members;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i > 0) out += ", ";
    if (i == 8) {
      out += "...";
      break;
    }
    out += p.ground().format(ms[i]);
  }
  return out + "}";
}

}  // namespace

SetFamily extremal_sets(const CospanningPartition& p, ExtremalSide side) {
  std::vector<Mask> out;
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    const auto& cls = p.cls(c);
    if (side == ExtremalSide::kMin) {
      out.insert(out.end(), cls.minima.begin(), cls.minima.end());
    } else {
      if (!cls.maximum) throw PreconditionError(describe_class(p, c) + " has no unique maximal member");
      out.push_back(*cls.maximum);
    }
  }
  return SetFamily(p.ground(), std::move(out));
}

SetOperator operator_from_partition(const CospanningPartition& p, ExtremalSide mode) {
  std::vector<Mask> rep(p.class_count());
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    const auto& cls = p.cls(c);
    if (mode == ExtremalSide::kMax) {
      if (!cls.maximum) throw PreconditionError(describe_class(p, c) + " does not contain the union of its members");
      rep[c] = *cls.maximum;
    } else {
      Mask inter = p.ground().full_mask();
      for (Mask m : cls.members) inter &= m;
      if (p.class_of(inter) != c) {
        throw PreconditionError(describe_class(p, c) + " does not contain the intersection of its members");
      }
      rep[c] = inter;
    }
  }
  std::vector<Mask> table(p.class_ids().size());
  for (Mask x = 0; x < table.size(); ++x) table[x] = rep[p.class_of(x)];
  return {p.ground(), std::move(table), mode == ExtremalSide::kMax ? "partition-max" : "partition-min"};
}

IntervalPartition interval_form(const CospanningPartition& p) {
  std::vector<Interval> intervals;
  intervals.reserve(p.class_count());
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    const auto& cls = p.cls(c);
    if (!cls.maximum || cls.minima.size() != 1) {
      throw PreconditionError(describe_class(p, c) + " is not an interval: " +
                              (cls.maximum ? std::to_string(cls.minima.size()) + " minimal members"
                                           : std::string("no unique maximum")));
    }
    const Mask lo = cls.minima.front();
    const Mask hi = *cls.maximum;
    // A unique minimum and maximum bound every member, so only holes remain.
    if (!is_submask(lo, hi) || cls.members.size() != (std::size_t{1} << popcount(hi & ~lo))) {
      throw PreconditionError(describe_class(p, c) + " is not the full interval [" + p.ground().format(lo) + ", " +
                              p.ground().format(hi) + "]");
    }
    intervals.push_back({lo, hi});
  }
  return {p.ground(), std::move(intervals)};
}

CospanningPartition complement_partition(const CospanningPartition& p) {
  const Mask full = p.ground().full_mask();
  std::vector<std::size_t> labels(p.class_ids().size());
  for (Mask x = 0; x < labels.size(); ++x) labels[x] = p.class_of(full & ~x);
  return {p.ground(), labels};
}

std::string to_dot(const CospanningPartition& p) {
  static constexpr std::array<const char*, 12> kPalette = {
      "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
      "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};
  const auto& g = p.ground();
  std::ostringstream os;
  os << "graph cospanning {\n  node [shape=box, style=filled];\n";
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    os << "  subgraph cluster_" << c << " {\n    label=\"class " << c << "\";\n";
    for (Mask m : p.cls(c).members) {
      os << "    s" << m << " [label=\"" << g.format(m) << "\", fillcolor=\"" << kPalette[c % kPalette.size()]
         << "\"];\n";
    }
    os << "  }\n";
  }
  const Mask size = p.class_ids().size();
  for (Mask m = 0; m < size; ++m) {
    for (int e = 0; e < g.size(); ++e) {
      if (!has_bit(m, e)) os << "  s" << m << " -- s" << (m | bit(e)) << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace cospan

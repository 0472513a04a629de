#include "cospan/setcore.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace cospan {

int dense_capacity() {
  int cap = kMaxDenseN;
  if (const char* env = std::getenv("COSPAN_MAX_N"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v < cap) cap = static_cast<int>(v);
  }
  return cap;
}

void require_dense(int n, std::string_view what) {
  const int cap = dense_capacity();
  if (n > cap) {
    throw CapacityError(std::string(what) + ": ground set of " + std::to_string(n) +
                        " elements exceeds the dense capacity of " + std::to_string(cap));
  }
}

// ---------------------------------------------------------------------------
// GroundSet

GroundSet::GroundSet() : GroundSet(std::vector<std::string>{}) {}

GroundSet::GroundSet(std::vector<std::string> labels) {
  if (labels.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    throw CapacityError("ground set of " + std::to_string(labels.size()) + " elements exceeds " +
                        std::to_string(kMaxGroundSize));
  }
  auto data = std::make_shared<Data>();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!data->index.emplace(labels[i], static_cast<int>(i)).second) {
      throw InvalidArgumentError("duplicate ground label \"" + labels[i] + "\"");
    }
  }
  data->labels = std::move(labels);
  data_ = std::move(data);
}

GroundSet GroundSet::numbered(int n) {
  if (n < 0) throw InvalidArgumentError("negative ground size");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::index_of(std::string_view label) const {
  auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

int GroundSet::require_index(std::string_view label) const {
  auto i = index_of(label);
  if (!i) throw FormatError("unknown element label \"" + std::string(label) + "\"");
  return *i;
}

Mask GroundSet::full_mask() const {
  const int n = size();
  return n == 64 ? ~Mask{0} : (bit(n) - 1);
}

std::size_t GroundSet::hypercube_size() const {
  require_dense(size(), "hypercube");
  return std::size_t{1} << size();
}

Mask GroundSet::mask_of(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= bit(require_index(l));
  return m;
}

std::vector<std::string> GroundSet::labels_of(Mask m) const {
  std::vector<std::string> out;
  for_each_bit(m, [&](int i) { out.push_back(label(i)); });
  return out;
}

std::string GroundSet::format(Mask m) const {
  std::string out = "{";
  bool first = true;
  for_each_bit(m, [&](int i) {
    if (!first) out += ',';
    out += label(i);
    first = false;
  });
  out += '}';
  return out;
}

bool GroundSet::operator==(const GroundSet& other) const {
  return data_ == other.data_ || data_->labels == other.data_->labels;
}

void require_same_ground(const GroundSet& a, const GroundSet& b) {
  if (!(a == b)) throw GroundMismatchError("operands live over different ground sets");
}

// ---------------------------------------------------------------------------
// Subset

Subset::Subset(GroundSet ground, Mask mask) : ground_(std::move(ground)), mask_(mask) {
  if ((mask_ & ~ground_.full_mask()) != 0) {
    throw InvalidArgumentError("subset has members outside the ground set");
  }
}

Subset Subset::of(const GroundSet& ground, std::initializer_list<std::string_view> labels) {
  Mask m = 0;
  for (auto l : labels) m |= bit(ground.require_index(l));
  return {ground, m};
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  for_each_bit(mask_, [&](int i) { out.push_back(i); });
  return out;
}

Subset Subset::with(int element) const { return {ground_, mask_ | bit(element)}; }
Subset Subset::without(int element) const { return {ground_, mask_ & ~bit(element)}; }

bool Subset::is_subset_of(const Subset& other) const {
  require_same_ground(ground_, other.ground_);
  return is_submask(mask_, other.mask_);
}

Subset operator|(const Subset& a, const Subset& b) {
  require_same_ground(a.ground_, b.ground_);
  return {a.ground_, a.mask_ | b.mask_};
}

Subset operator&(const Subset& a, const Subset& b) {
  require_same_ground(a.ground_, b.ground_);
  return {a.ground_, a.mask_ & b.mask_};
}

Subset operator-(const Subset& a, const Subset& b) {
  require_same_ground(a.ground_, b.ground_);
  return {a.ground_, a.mask_ & ~b.mask_};
}

bool operator==(const Subset& a, const Subset& b) {
  return a.mask_ == b.mask_ && a.ground_ == b.ground_;
}

std::variant<Subset, bool> subset_algebra(const Subset& a, const Subset& b, SetAlgebra kind) {
  require_same_ground(a.ground(), b.ground());
  switch (kind) {
    case SetAlgebra::kUnion:
      return a | b;
    case SetAlgebra::kIntersection:
      return a & b;
    case SetAlgebra::kDifference:
      return a - b;
    case SetAlgebra::kComplement:
      return a.complement();
    case SetAlgebra::kIsSubset:
      return a.is_subset_of(b);
  }
  throw InvalidArgumentError("unknown set-algebra kind");
}

std::vector<Subset> enumerate_subsets(const GroundSet& ground) {
  const std::size_t count = ground.hypercube_size();
  std::vector<Subset> out;
  out.reserve(count);
  for (std::size_t m = 0; m < count; ++m) out.emplace_back(ground, static_cast<Mask>(m));
  return out;
}

// ---------------------------------------------------------------------------
// SetFamily

SetFamily::SetFamily(GroundSet ground, std::vector<Mask> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  const Mask full = ground_.full_mask();
  for (Mask m : members_) {
    if ((m & ~full) != 0) throw InvalidArgumentError("family member outside the ground set");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  sorted_ = members_;
  std::sort(members_.begin(), members_.end(), canonical_less);
}

SetFamily::SetFamily(GroundSet ground, const std::vector<Subset>& members)
    : SetFamily(ground, [&] {
        std::vector<Mask> masks;
        masks.reserve(members.size());
        for (const auto& s : members) {
          require_same_ground(ground, s.ground());
          masks.push_back(s.mask());
        }
        return masks;
      }()) {}

std::vector<Subset> SetFamily::members() const {
  std::vector<Subset> out;
  out.reserve(members_.size());
  for (Mask m : members_) out.emplace_back(ground_, m);
  return out;
}

bool SetFamily::contains(Mask m) const { return std::binary_search(sorted_.begin(), sorted_.end(), m); }

bool SetFamily::contains(const Subset& s) const {
  require_same_ground(ground_, s.ground());
  return contains(s.mask());
}

bool operator==(const SetFamily& a, const SetFamily& b) {
  return a.ground_ == b.ground_ && a.members_ == b.members_;
}

// ---------------------------------------------------------------------------
// Witness

Witness& Witness::set(std::string role, Mask value) {
  entries_.push_back({std::move(role), value, false});
  return *this;
}

Witness& Witness::element(std::string role, int index) {
  entries_.push_back({std::move(role), bit(index), true});
  return *this;
}

const WitnessEntry& Witness::find(std::string_view role) const {
  for (const auto& e : entries_) {
    if (e.role == role) return e;
  }
  throw InvalidArgumentError("witness has no entry \"" + std::string(role) + "\"");
}

bool Witness::has(std::string_view role) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.role == role; });
}

Mask Witness::set_value(std::string_view role) const { return find(role).value; }

int Witness::element_value(std::string_view role) const {
  return std::countr_zero(find(role).value);
}

std::string Witness::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& e : entries_) {
    if (!first) os << ", ";
    first = false;
    os << e.role << '=';
    if (e.is_element) {
      os << ground_.label(std::countr_zero(e.value));
    } else {
      os << ground_.format(e.value);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Family predicates

std::string_view to_string(FamilyPredicate p) {
  switch (p) {
    case FamilyPredicate::kUnionClosed:
      return "union-closed";
    case FamilyPredicate::kIntersectionClosed:
      return "intersection-closed";
    case FamilyPredicate::kHereditary:
      return "hereditary";
    case FamilyPredicate::kAccessible:
      return "accessible";
    case FamilyPredicate::kContainsEmpty:
      return "contains-empty";
    case FamilyPredicate::kContainsGround:
      return "contains-ground";
  }
  return "?";
}

PropertyReport family_predicate(const SetFamily& fam, FamilyPredicate kind) {
  const std::string name(to_string(kind));
  const auto& g = fam.ground();
  const auto& ms = fam.masks();
  switch (kind) {
    case FamilyPredicate::kUnionClosed:
    case FamilyPredicate::kIntersectionClosed: {
      const bool is_union = kind == FamilyPredicate::kUnionClosed;
      for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
          const Mask r = is_union ? (ms[i] | ms[j]) : (ms[i] & ms[j]);
          if (!fam.contains(r)) return PropertyReport::fail(name, Witness(g).set("X", ms[i]).set("Y", ms[j]));
        }
      }
      return PropertyReport::pass(name);
    }
    case FamilyPredicate::kHereditary: {
      // Closure under single deletions is equivalent to closure under subsets.
      for (Mask x : ms) {
        for (int e = 0; e < g.size(); ++e) {
          if (has_bit(x, e) && !fam.contains(x & ~bit(e))) {
            return PropertyReport::fail(name, Witness(g).set("X", x).set("Y", x & ~bit(e)));
          }
        }
      }
      return PropertyReport::pass(name);
    }
    case FamilyPredicate::kAccessible: {
      for (Mask x : ms) {
        if (x == 0) continue;
        bool ok = false;
        for_each_bit(x, [&](int e) { ok = ok || fam.contains(x & ~bit(e)); });
        if (!ok) return PropertyReport::fail(name, Witness(g).set("X", x));
      }
      return PropertyReport::pass(name);
    }
    case FamilyPredicate::kContainsEmpty:
      if (fam.contains(Mask{0})) return PropertyReport::pass(name);
      return PropertyReport::fail(name, Witness(g).set("missing", 0));
    case FamilyPredicate::kContainsGround:
      if (fam.contains(g.full_mask())) return PropertyReport::pass(name);
      return PropertyReport::fail(name, Witness(g).set("missing", g.full_mask()));
  }
  throw InvalidArgumentError("unknown family predicate");
}

SetFamily complement_family(const SetFamily& fam) {
  const Mask full = fam.ground().full_mask();
  std::vector<Mask> out;
  out.reserve(fam.size());
  for (Mask m : fam.masks()) out.push_back(full & ~m);
  return SetFamily(fam.ground(), std::move(out));
}

}  // namespace cospan

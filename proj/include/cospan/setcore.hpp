#pragma once

// Ground sets, subsets as bitmasks, and canonical set families.
//
// Every structure in the library lives over a GroundSet of n labeled
// elements; element i corresponds to bit i of a Mask.  Dense structures that
// hold one entry per subset of E (operator tables, partitions, rank tables)
// are limited to dense_capacity() elements.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "cospan/error.hpp"

namespace cospan {

using Mask = std::uint64_t;

inline constexpr int kMaxGroundSize = 64;
inline constexpr int kMaxDenseN = 20;

/// Largest n for which 2^n tables may be built: 20, lowered (never raised)
/// by the COSPAN_MAX_N environment variable.
int dense_capacity();

/// Throws CapacityError mentioning `what` when n > dense_capacity().
void require_dense(int n, std::string_view what);

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline bool has_bit(Mask m, int i) { return ((m >> i) & 1U) != 0; }
inline bool is_submask(Mask a, Mask b) { return (a & ~b) == 0; }

/// Calls f(i) for each set bit i in ascending order.
template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

/// Calls f(s) for every submask s of m, including 0 and m, ascending.
template <class F>
void for_each_submask(Mask m, F&& f) {
  Mask s = 0;
  while (true) {
    f(s);
    if (s == m) break;
    s = (s - m) & m;
  }
}

/// Cardinality first, then numeric mask value.
inline bool canonical_less(Mask a, Mask b) {
  const int pa = popcount(a);
  const int pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

class GroundSet {
 public:
  GroundSet();
  explicit GroundSet(std::vector<std::string> labels);

  /// Elements labeled "1".."n".
  static GroundSet numbered(int n);

  int size() const { return static_cast<int>(data_->labels.size()); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(int i) const { return data_->labels.at(i); }
  std::optional<int> index_of(std::string_view label) const;
  int require_index(std::string_view label) const;

  Mask full_mask() const;
  /// 2^n; requires n within the dense capacity.
  std::size_t hypercube_size() const;

  Mask mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Mask m) const;
  /// "{1,3}" style rendering.
  std::string format(Mask m) const;

  bool operator==(const GroundSet& other) const;

 private:
  struct Data {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
  };
  std::shared_ptr<const Data> data_;
};

/// Throws GroundMismatchError unless a == b.
void require_same_ground(const GroundSet& a, const GroundSet& b);

class Subset {
 public:
  Subset(GroundSet ground, Mask mask);

  static Subset empty(const GroundSet& ground) { return {ground, 0}; }
  static Subset full(const GroundSet& ground) { return {ground, ground.full_mask()}; }
  static Subset of(const GroundSet& ground, std::initializer_list<std::string_view> labels);

  Mask mask() const { return mask_; }
  const GroundSet& ground() const { return ground_; }
  int size() const { return popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int element) const { return has_bit(mask_, element); }
  std::vector<int> elements() const;
  std::vector<std::string> labels() const { return ground_.labels_of(mask_); }

  Subset with(int element) const;
  Subset without(int element) const;
  Subset complement() const { return {ground_, ground_.full_mask() & ~mask_}; }
  bool is_subset_of(const Subset& other) const;

  friend Subset operator|(const Subset& a, const Subset& b);
  friend Subset operator&(const Subset& a, const Subset& b);
  friend Subset operator-(const Subset& a, const Subset& b);
  friend bool operator==(const Subset& a, const Subset& b);

  std::string to_string() const { return ground_.format(mask_); }

 private:
  GroundSet ground_;
  Mask mask_;
};

enum class SetAlgebra { kUnion, kIntersection, kDifference, kComplement, kIsSubset };

/// Complement ignores b except for the ground check.
std::variant<Subset, bool> subset_algebra(const Subset& a, const Subset& b, SetAlgebra kind);

/// All 2^n subsets in ascending mask order.
std::vector<Subset> enumerate_subsets(const GroundSet& ground);

/// Duplicate-free family kept in canonical order (cardinality, then mask).
class SetFamily {
 public:
  explicit SetFamily(GroundSet ground, std::vector<Mask> members = {});
  SetFamily(GroundSet ground, const std::vector<Subset>& members);

  const GroundSet& ground() const { return ground_; }
  /// Members in canonical order.
  const std::vector<Mask>& masks() const { return members_; }
  std::vector<Subset> members() const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Mask m) const;
  bool contains(const Subset& s) const;

  friend bool operator==(const SetFamily& a, const SetFamily& b);

 private:
  GroundSet ground_;
  std::vector<Mask> members_;
  std::vector<Mask> sorted_;  // ascending, for lookup
};

/// One entry of a counterexample: a named subset or a named element.
struct WitnessEntry {
  std::string role;
  Mask value = 0;
  bool is_element = false;
};

/// Concrete inputs that instantiate a property violation.
class Witness {
 public:
  explicit Witness(GroundSet ground) : ground_(std::move(ground)) {}

  Witness& set(std::string role, Mask value);
  Witness& element(std::string role, int index);

  const GroundSet& ground() const { return ground_; }
  const std::vector<WitnessEntry>& entries() const { return entries_; }
  bool has(std::string_view role) const;
  Mask set_value(std::string_view role) const;
  int element_value(std::string_view role) const;
  std::string to_string() const;

 private:
  const WitnessEntry& find(std::string_view role) const;

  GroundSet ground_;
  std::vector<WitnessEntry> entries_;
};

struct PropertyReport {
  std::string property;
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds

  static PropertyReport pass(std::string property) { return {std::move(property), true, std::nullopt}; }
  static PropertyReport fail(std::string property, Witness w) {
    return {std::move(property), false, std::move(w)};
  }
  explicit operator bool() const { return holds; }
};

enum class FamilyPredicate {
  kUnionClosed,
  kIntersectionClosed,
  kHereditary,
  kAccessible,
  kContainsEmpty,
  kContainsGround,
};

std::string_view to_string(FamilyPredicate p);

/// Exhaustive check; witnesses use roles X, Y (pairs) or X (single set).
PropertyReport family_predicate(const SetFamily& fam, FamilyPredicate kind);

/// {E - X : X in fam}.
SetFamily complement_family(const SetFamily& fam);

}  // namespace cospan

#pragma once

// Theorem oracles run over exhaustive enumerations (or seeded samples) of
// small spaces.  Each theorem reports how many instances it checked and the
// first counterexample, if any.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cospan/io.hpp"
#include "cospan/setcore.hpp"

namespace cospan {

enum class Suite { kAll, kViolator, kGreedoid, kAntimatroid, kMatroid, kConvexGeometry, kDuality };

std::string_view to_string(Suite s);
Suite parse_suite(std::string_view name);

struct Counterexample {
  io::Json subject;                // the offending operator, family or partition
  std::optional<Witness> witness;  // where inside the subject, when known
  std::string note;
};

struct TheoremResult {
  std::string name;
  int n = 0;  // ground-set size the theorem ran at
  std::size_t checked = 0;
  std::size_t counterexamples = 0;
  std::optional<Counterexample> first;
  bool holds() const { return counterexamples == 0; }
};

struct VerifyOptions {
  int n = 3;
  Suite suite = Suite::kAll;
  std::optional<std::size_t> samples;  // set: sampled mode
  std::uint64_t seed = 0;
};

struct VerifyReport {
  bool sampled = false;
  std::vector<TheoremResult> theorems;
  std::vector<std::pair<std::string, std::size_t>> counts;  // structures enumerated, in order
  bool holds() const;
};

/// Exhaustive oracles run at min(n, bound) for their own enumeration bound
/// (3 for operators and partitions, 4 for families).  CapacityError when n
/// exceeds every bound of the suite and no samples were requested, or when a
/// sampled run asks for n > kMaxSampledN.
VerifyReport run_verify(const VerifyOptions& opts);

inline constexpr int kMaxSampledN = 6;

io::Json to_json(const TheoremResult& t);
io::Json to_json(const VerifyReport& r);

}  // namespace cospan

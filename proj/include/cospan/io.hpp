#pragma once

// JSON forms of families, operators, partitions, point sets, posets and
// property reports.  Sets are lists of element labels; output lists elements
// in ground order and families in canonical order.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cospan/cospanning.hpp"
#include "cospan/instances.hpp"
#include "cospan/operators.hpp"
#include "cospan/setcore.hpp"

namespace cospan::io {

using Json = nlohmann::ordered_json;

enum class DocumentKind { kFamily, kOperator, kPartition, kPoints, kPoset };

/// Decided by the distinguishing key: sets, map, classes, points, less_than.
DocumentKind detect_kind(const Json& doc);

Json subset_to_json(const GroundSet& ground, Mask m);
/// `where` names the record in error messages, e.g. "sets[2]".
Mask subset_from_json(const GroundSet& ground, const Json& j, std::string_view where);

Json family_to_json(const SetFamily& fam);
SetFamily family_from_json(const Json& doc);

Json operator_to_json(const SetOperator& op);
SetOperator operator_from_json(const Json& doc);

Json partition_to_json(const CospanningPartition& p);
CospanningPartition partition_from_json(const Json& doc);

Json points_to_json(const PointSet2D& pts);
PointSet2D points_from_json(const Json& doc);

struct Poset {
  GroundSet ground;
  std::vector<std::pair<int, int>> less_than;
};
Poset poset_from_json(const Json& doc);

/// {"X": [...], "x": "3", ...} in witness role order.
Json witness_to_json(const Witness& w);
Json report_to_json(const PropertyReport& r);

/// FormatError on unreadable files or malformed JSON.
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace cospan::io

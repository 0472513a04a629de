#include "cospan/io.hpp"

#include <bit>
#include <fstream>
#include <sstream>

namespace cospan::io {

namespace {

[[noreturn]] void bad(std::string_view where, std::string_view what) {
  throw FormatError(std::string(where) + ": " + std::string(what));
}

const Json& field(const Json& doc, const char* key, std::string_view where) {
  if (!doc.is_object()) bad(where, "expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& doc, const char* key, std::string_view where) {
  const Json& j = field(doc, key, where);
  if (!j.is_array()) bad(std::string(where) + "." + key, "expected an array");
  return j;
}

std::string at(std::string_view base, std::size_t i) {
  return std::string(base) + "[" + std::to_string(i) + "]";
}

GroundSet ground_from(const Json& doc, const char* key = "ground") {
  const Json& g = array_field(doc, key, "document");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g[i].is_string()) bad(at(key, i), "labels must be strings");
    labels.push_back(g[i].get<std::string>());
  }
  try {
    return GroundSet(std::move(labels));
  } catch (const InvalidArgumentError& e) {
    bad(key, e.what());
  }
}

Json ground_to_json(const GroundSet& g) {
  Json out = Json::array();
  for (const auto& l : g.labels()) out.push_back(l);
  return out;
}

std::int64_t coordinate(const Json& j, std::string_view where) {
  if (!j.is_number_integer()) bad(where, "coordinates must be integers");
  return j.get<std::int64_t>();
}

}  // namespace

DocumentKind detect_kind(const Json& doc) {
  if (!doc.is_object()) bad("document", "expected a JSON object");
  if (doc.contains("map")) return DocumentKind::kOperator;
  if (doc.contains("classes")) return DocumentKind::kPartition;
  if (doc.contains("sets")) return DocumentKind::kFamily;
  if (doc.contains("points")) return DocumentKind::kPoints;
  if (doc.contains("less_than")) return DocumentKind::kPoset;
  bad("document", "not a family, operator, partition, points or poset document");
}

Json subset_to_json(const GroundSet& ground, Mask m) {
  Json out = Json::array();
  for (const auto& l : ground.labels_of(m)) out.push_back(l);
  return out;
}

Mask subset_from_json(const GroundSet& ground, const Json& j, std::string_view where) {
  if (!j.is_array()) bad(where, "a set must be an array of labels");
  Mask m = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) bad(where, "labels must be strings");
    const auto idx = ground.index_of(j[i].get<std::string>());
    if (!idx) bad(where, "unknown element \"" + j[i].get<std::string>() + "\"");
    m |= bit(*idx);
  }
  return m;
}

Json family_to_json(const SetFamily& fam) {
  Json sets = Json::array();
  for (Mask m : fam.masks()) sets.push_back(subset_to_json(fam.ground(), m));
  return {{"ground", ground_to_json(fam.ground())}, {"sets", std::move(sets)}};
}

SetFamily family_from_json(const Json& doc) {
  const auto g = ground_from(doc);
  const Json& sets = array_field(doc, "sets", "document");
  std::vector<Mask> members;
  for (std::size_t i = 0; i < sets.size(); ++i) members.push_back(subset_from_json(g, sets[i], at("sets", i)));
  return SetFamily(g, std::move(members));
}

Json operator_to_json(const SetOperator& op) {
  const auto& g = op.ground();
  Json map = Json::array();
  const auto& t = op.table();
  for (Mask x = 0; x < t.size(); ++x) {
    map.push_back({{"in", subset_to_json(g, x)}, {"out", subset_to_json(g, t[x])}});
  }
  Json out = {{"ground", ground_to_json(g)}};
  if (!op.name().empty()) out["name"] = op.name();
  out["map"] = std::move(map);
  return out;
}

SetOperator operator_from_json(const Json& doc) {
  const auto g = ground_from(doc);
  require_dense(g.size(), "operator JSON");
  const Json& map = array_field(doc, "map", "document");
  const std::size_t size = g.hypercube_size();
  std::vector<Mask> table(size, 0);
  std::vector<bool> seen(size, false);
  for (std::size_t i = 0; i < map.size(); ++i) {
    const auto where = at("map", i);
    const Mask in = subset_from_json(g, field(map[i], "in", where), where + ".in");
    const Mask out = subset_from_json(g, field(map[i], "out", where), where + ".out");
    if (seen[in]) bad(where, "duplicate input " + g.format(in));
    seen[in] = true;
    table[in] = out;
  }
  for (Mask x = 0; x < size; ++x) {
    if (!seen[x]) bad("map", "missing input " + g.format(x));
  }
  std::string name;
  if (auto it = doc.find("name"); it != doc.end() && it->is_string()) name = it->get<std::string>();
  return {g, std::move(table), std::move(name)};
}

Json partition_to_json(const CospanningPartition& p) {
  Json classes = Json::array();
  for (const auto& c : p.classes()) {
    Json members = Json::array();
    for (Mask m : c.members) members.push_back(subset_to_json(p.ground(), m));
    classes.push_back(std::move(members));
  }
  return {{"ground", ground_to_json(p.ground())}, {"classes", std::move(classes)}};
}

CospanningPartition partition_from_json(const Json& doc) {
  const auto g = ground_from(doc);
  require_dense(g.size(), "partition JSON");
  const Json& classes = array_field(doc, "classes", "document");
  std::vector<std::vector<Mask>> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto where = at("classes", i);
    if (!classes[i].is_array()) bad(where, "a class must be an array of sets");
    std::vector<Mask> members;
    for (std::size_t j = 0; j < classes[i].size(); ++j) {
      members.push_back(subset_from_json(g, classes[i][j], at(where, j)));
    }
    out.push_back(std::move(members));
  }
  return CospanningPartition::from_classes(g, out);
}

Json points_to_json(const PointSet2D& pts) {
  Json points = Json::array();
  for (const auto& p : pts.points()) points.push_back(Json::array({p.x, p.y}));
  return {{"labels", ground_to_json(pts.ground())}, {"points", std::move(points)}};
}

PointSet2D points_from_json(const Json& doc) {
  const Json& points = array_field(doc, "points", "document");
  std::vector<Point2D> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto where = at("points", i);
    if (!points[i].is_array() || points[i].size() != 2) bad(where, "a point must be [x, y]");
    out.push_back({coordinate(points[i][0], where), coordinate(points[i][1], where)});
  }
  try {
    if (!doc.contains("labels")) return PointSet2D(std::move(out));
    return PointSet2D(ground_from(doc, "labels").labels(), std::move(out));
  } catch (const InvalidArgumentError& e) {
    bad("points", e.what());
  }
}

Poset poset_from_json(const Json& doc) {
  Poset p{ground_from(doc), {}};
  const Json& rel = array_field(doc, "less_than", "document");
  for (std::size_t i = 0; i < rel.size(); ++i) {
    const auto where = at("less_than", i);
    if (!rel[i].is_array() || rel[i].size() != 2 || !rel[i][0].is_string() || !rel[i][1].is_string()) {
      bad(where, "a relation must be [\"a\", \"b\"]");
    }
    const auto a = p.ground.index_of(rel[i][0].get<std::string>());
    const auto b = p.ground.index_of(rel[i][1].get<std::string>());
    if (!a || !b) bad(where, "unknown element");
    p.less_than.emplace_back(*a, *b);
  }
  return p;
}

Json witness_to_json(const Witness& w) {
  Json out = Json::object();
  for (const auto& e : w.entries()) {
    if (e.is_element) {
      out[e.role] = w.ground().label(std::countr_zero(e.value));
    } else {
      out[e.role] = subset_to_json(w.ground(), e.value);
    }
  }
  return out;
}

Json report_to_json(const PropertyReport& r) {
  Json out = {{"property", r.property}, {"holds", r.holds}};
  if (r.witness) out["witness"] = witness_to_json(*r.witness);
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

}  // namespace cospan::io

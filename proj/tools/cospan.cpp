// cospan: command-line front end.  Every command prints one JSON run report
// on stdout.  Exit codes: 0 ok, 1 a requested property failed, 2 input
// error, 3 capacity exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cospan/cospanning.hpp"
#include "cospan/instances.hpp"
#include "cospan/io.hpp"
#include "cospan/operators.hpp"
#include "cospan/structures.hpp"
#include "cospan/verify.hpp"

namespace {

using cospan::io::Json;
using namespace cospan;
using io::DocumentKind;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

struct Report {
  Json body = Json::object();
  std::vector<PropertyReport> checks;  // decide the exit status
  std::vector<PropertyReport> info;    // reported only
  bool failed = false;                 // set by commands with their own verdict

  int status() const {
    if (failed) return kExitFailed;
    for (const auto& c : checks) {
      if (!c.holds) return kExitFailed;
    }
    return kExitOk;
  }
};

Json reports_json(const std::vector<PropertyReport>& reps) {
  Json out = Json::array();
  for (const auto& r : reps) out.push_back(io::report_to_json(r));
  return out;
}

PropertyReport all_of(std::string name, std::initializer_list<PropertyReport> parts) {
  for (const auto& p : parts) {
    if (!p.holds) {
      PropertyReport r = p;
      r.property = std::move(name) + "/" + p.property;
      return r;
    }
  }
  return PropertyReport::pass(std::move(name));
}

Json classification_json(const SpaceClass& c) {
  return {{"violator", c.violator},
          {"co-violator", c.co_violator},
          {"closure", c.closure},
          {"convex-geometry", c.convex_geometry}};
}

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
  std::string file;
  std::string kind;
  std::vector<std::string> axioms;
};

void check_operator(const SetOperator& op, const std::string& kind, Report& rep) {
  const auto cls = classify_space(op);
  rep.body["classification"] = classification_json(cls);
  if (kind == "violator") {
    rep.checks.push_back(all_of("violator", {check_axiom(op, Axiom::kV1), check_axiom(op, Axiom::kV2)}));
  } else if (kind == "co-violator") {
    rep.checks.push_back(all_of("co-violator", {check_axiom(op, Axiom::kCV1), check_axiom(op, Axiom::kCV2)}));
  } else if (kind == "closure") {
    rep.checks.push_back(all_of(
        "closure", {check_axiom(op, Axiom::kV1), check_axiom(op, Axiom::kC2), check_axiom(op, Axiom::kC3)}));
  } else {
    const auto cg = check_convex_geometry(op);
    rep.checks.push_back(all_of("convex-geometry", {cg.geometry, cg.accessibility, cg.chain}));
  }
  rep.info.push_back(is_uniquely_generated(op));
  rep.info.push_back(check_axiom(op, Axiom::kAE));
  rep.info.push_back(check_axiom(op, Axiom::kG3));
}

void check_family(const SetFamily& fam, const std::string& kind, Report& rep,
                  std::optional<SetOperator>& axis_op) {
  if (kind == "convex-geometry") {
    // fam lists the closed sets.
    auto has_ground = family_predicate(fam, FamilyPredicate::kContainsGround);
    auto meets = family_predicate(fam, FamilyPredicate::kIntersectionClosed);
    if (!has_ground.holds || !meets.holds) {
      rep.checks.push_back(all_of("convex-geometry", {has_ground, meets}));
      return;
    }
    const auto tau = closure_from_closed_sets(fam);
    const auto cg = check_convex_geometry(tau);
    rep.checks.push_back(all_of("convex-geometry", {cg.geometry, cg.accessibility, cg.chain}));
    rep.info.push_back(is_uniquely_generated(tau));
    axis_op = tau;
    return;
  }
  const auto c = classify_family(fam);
  rep.body["classification"] = {{"greedoid", c.greedoid}, {"antimatroid", c.antimatroid}, {"matroid", c.matroid}};
  const auto& greedoid = c.reports[0];
  if (kind == "greedoid") {
    rep.checks.push_back(greedoid);
  } else if (kind == "antimatroid") {
    rep.checks.push_back(all_of("antimatroid", {greedoid, c.reports[1]}));
  } else {
    rep.checks.push_back(all_of("matroid", {greedoid, c.reports[2]}));
  }
  if (!c.greedoid) return;
  const auto g = build_greedoid(fam);
  rep.info.push_back(is_uniquely_generated(g.sigma()));
  rep.info.push_back(check_axiom(g.sigma(), Axiom::kAE));
  axis_op = g.sigma();
}

int run_check(const CheckArgs& a, Report& rep) {
  const auto doc = io::read_json_file(a.file);
  const auto doc_kind = io::detect_kind(doc);
  const bool operator_kind =
      a.kind == "violator" || a.kind == "co-violator" || a.kind == "closure" || a.kind == "convex-geometry";
  rep.body["kind"] = a.kind;

  std::optional<SetOperator> axis_op;
  if (doc_kind == DocumentKind::kOperator && operator_kind) {
    axis_op = io::operator_from_json(doc);
    check_operator(*axis_op, a.kind, rep);
  } else if (doc_kind == DocumentKind::kPoints && (a.kind == "violator" || a.kind == "convex-geometry")) {
    const auto pts = io::points_from_json(doc);
    axis_op = a.kind == "violator" ? seb_violator(pts) : convex_hull_geometry(pts);
    check_operator(*axis_op, a.kind, rep);
  } else if (doc_kind == DocumentKind::kFamily && (!operator_kind || a.kind == "convex-geometry")) {
    check_family(io::family_from_json(doc), a.kind, rep, axis_op);
  } else if (doc_kind == DocumentKind::kPoset && !operator_kind) {
    const auto poset = io::poset_from_json(doc);
    check_family(poset_antimatroid(poset.ground, poset.less_than), a.kind, rep, axis_op);
  } else {
    throw FormatError(a.file + ": document does not match --kind " + a.kind);
  }

  Json skipped = Json::array();
  for (const auto& name : a.axioms) {
    const Axiom ax = parse_axiom(name);
    if (axis_op) {
      rep.checks.push_back(check_axiom(*axis_op, ax));
    } else {
      skipped.push_back(name);
      rep.failed = true;
    }
  }
  if (!skipped.empty()) rep.body["axioms_skipped"] = std::move(skipped);
  return rep.status();
}

// ---------------------------------------------------------------------------
// partition

struct PartitionArgs {
  std::string file;
  std::string dot;
  std::string json;
  std::vector<std::string> props;
};

SetOperator load_operator(const std::string& file) {
  const auto doc = io::read_json_file(file);
  switch (io::detect_kind(doc)) {
    case DocumentKind::kOperator: return io::operator_from_json(doc);
    case DocumentKind::kPoints: return seb_violator(io::points_from_json(doc));
    default: throw FormatError(file + ": expected an operator document");
  }
}

int run_partition(const PartitionArgs& a, Report& rep) {
  const auto op = load_operator(a.file);
  const auto p = partition_from_operator(op);
  const auto& g = p.ground();
  std::optional<IntervalPartition> ip;
  try {
    ip = interval_form(p);
  } catch (const PreconditionError& e) {
    rep.body["interval_form_error"] = e.what();
  }
  rep.body["counts"] = {{"classes", p.class_count()}, {"intervals", ip ? ip->intervals().size() : 0}};
  rep.body["interval_form"] = ip.has_value();
  if (ip) {
    // Each class is [A]_φ = [ex(A), φ(A)] when the partition is an interval partition.
    Json intervals = Json::array();
    for (std::size_t id = 0; id < p.class_count(); ++id) {
      const auto& iv = ip->intervals()[ip->interval_of(p.cls(id).members.front())];
      intervals.push_back({{"class", id},
                           {"lo", io::subset_to_json(g, iv.lo)},
                           {"hi", io::subset_to_json(g, iv.hi)},
                           {"is_ex_phi", extreme_points(op, iv.lo) == iv.lo && op(iv.lo) == iv.hi}});
    }
    rep.body["intervals"] = std::move(intervals);
  }
  Json errors = Json::object();
  for (const auto& name : a.props) {
    const auto prop = parse_relation_property(name);
    try {
      rep.checks.push_back(check_relation_property(p, prop));
    } catch (const PreconditionError& e) {
      rep.failed = true;
      errors[std::string(to_string(prop))] = e.what();
    }
  }
  if (!errors.empty()) rep.body["property_errors"] = std::move(errors);
  if (a.json.empty()) {
    rep.body["partition"] = io::partition_to_json(p);
  } else {
    io::write_text_file(a.json, io::partition_to_json(p).dump(2));
  }
  if (!a.dot.empty()) io::write_text_file(a.dot, to_dot(p));
  return rep.status();
}

// ---------------------------------------------------------------------------
// reconstruct

struct ReconstructArgs {
  std::string from_partition;
  std::string mode = "max";
  std::string complement;
  std::string out;
};

void emit(const Json& result, const std::string& out, Report& rep) {
  if (out.empty()) {
    rep.body["result"] = result;
  } else {
    io::write_text_file(out, result.dump(2));
    rep.body["written"] = out;
  }
}

int run_reconstruct(const ReconstructArgs& a, Report& rep) {
  if (a.from_partition.empty() == a.complement.empty()) {
    throw InvalidArgumentError("give exactly one of --from-partition or --complement");
  }
  if (!a.from_partition.empty()) {
    const auto p = io::partition_from_json(io::read_json_file(a.from_partition));
    const auto side = a.mode == "max" ? ExtremalSide::kMax : ExtremalSide::kMin;
    const auto op = operator_from_partition(p, side);
    const bool round_trip = partition_from_operator(op) == p;
    rep.body["mode"] = a.mode;
    rep.body["round_trip"] = round_trip;
    rep.body["classification"] = classification_json(classify_space(op));
    emit(io::operator_to_json(op), a.out, rep);
    rep.failed = !round_trip;
    return rep.status();
  }
  const auto doc = io::read_json_file(a.complement);
  switch (io::detect_kind(doc)) {
    case DocumentKind::kFamily:
      emit(io::family_to_json(complement_family(io::family_from_json(doc))), a.out, rep);
      break;
    case DocumentKind::kPartition:
      emit(io::partition_to_json(complement_partition(io::partition_from_json(doc))), a.out, rep);
      break;
    case DocumentKind::kOperator:
      emit(io::operator_to_json(dual_interior(io::operator_from_json(doc))), a.out, rep);
      break;
    default:
      throw FormatError(a.complement + ": expected a family, partition or operator document");
  }
  return rep.status();
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  int n = 3;
  std::string suite = "all";
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
};

int run_verify_cmd(const VerifyArgs& a, Report& rep) {
  VerifyOptions o;
  o.n = a.n;
  o.suite = parse_suite(a.suite);
  o.samples = a.samples;
  o.seed = a.seed;
  const auto r = run_verify(o);
  const auto body = to_json(r);
  for (const auto& [k, v] : body.items()) rep.body[k] = v;
  rep.failed = !r.holds();
  return rep.status();
}

// ---------------------------------------------------------------------------
// instance

struct InstanceArgs {
  std::string name;
  int n = 3;
  int k = 1;
  bool bases = false;
  std::string points;
  std::string poset;
  std::string out;
};

int run_instance(const InstanceArgs& a, Report& rep) {
  Json result;
  if (a.name == "seb" || a.name == "convex_hull") {
    if (a.points.empty()) throw InvalidArgumentError(a.name + " needs --points");
    const auto pts = io::points_from_json(io::read_json_file(a.points));
    result = io::operator_to_json(a.name == "seb" ? seb_violator(pts) : convex_hull_geometry(pts));
  } else if (a.name == "poset_antimatroid") {
    if (a.poset.empty()) throw InvalidArgumentError("poset_antimatroid needs --poset");
    const auto poset = io::poset_from_json(io::read_json_file(a.poset));
    result = io::family_to_json(poset_antimatroid(poset.ground, poset.less_than));
  } else {
    const auto inst = builtin_instance(a.name, {a.n, a.k, a.bases});
    if (const auto* op = std::get_if<SetOperator>(&inst)) {
      result = io::operator_to_json(*op);
    } else {
      result = io::family_to_json(std::get<SetFamily>(inst));
    }
  }
  emit(result, a.out, rep);
  return rep.status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set operators, cospanning partitions, greedoids and convex geometries"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Check a structure against a kind and optional axioms");
  c->add_option("file", check.file, "Operator, family, points or poset JSON")->required();
  c->add_option("--kind", check.kind, "What to check")
      ->required()
      ->check(CLI::IsMember(
          {"violator", "co-violator", "closure", "convex-geometry", "greedoid", "antimatroid", "matroid"}));
  c->add_option("--axioms", check.axioms, "Axioms: V1 V2 VV2 C2 C3 CV1 CV2 AE EX G3")->delimiter(',');

  PartitionArgs part;
  auto* p = app.add_subcommand("partition", "Cospanning partition of an operator");
  p->add_option("file", part.file, "Operator JSON")->required();
  p->add_option("--dot", part.dot, "Write Graphviz output here");
  p->add_option("--json", part.json, "Write partition JSON here");
  p->add_option("--props", part.props, "R1 R2 R3 R33 R4G R4CG R5 EqCL EqAN")->delimiter(',');

  ReconstructArgs rec;
  auto* r = app.add_subcommand("reconstruct", "Operator from a partition, or the complement of a structure");
  r->add_option("--from-partition", rec.from_partition, "Partition JSON");
  r->add_option("--mode", rec.mode, "Extremal side")->check(CLI::IsMember({"max", "min"}));
  r->add_option("--complement", rec.complement, "Family, partition or operator JSON");
  r->add_option("--out", rec.out, "Write the result here");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run theorem oracles");
  v->add_option("--n", ver.n, "Ground-set size")->required();
  v->add_option("--suite", ver.suite, "Suite")
      ->check(CLI::IsMember({"all", "violator", "greedoid", "antimatroid", "matroid", "convex-geometry", "duality"}));
  v->add_option("--samples", ver.samples, "Sampled mode with this many samples");
  v->add_option("--seed", ver.seed, "Seed for sampled mode");

  InstanceArgs inst;
  auto* i = app.add_subcommand("instance", "Emit a built-in structure");
  i->add_option("name", inst.name,
                "paper_example_3 identity full empty uniform_matroid chain_antimatroid free_antimatroid "
                "poset_antimatroid seb convex_hull")
      ->required();
  i->add_option("--n", inst.n, "Ground-set size");
  i->add_option("--k", inst.k, "Rank for uniform_matroid");
  i->add_flag("--bases", inst.bases, "paper_example_3: emit the bases family");
  i->add_option("--points", inst.points, "Points JSON for seb and convex_hull");
  i->add_option("--poset", inst.poset, "Poset JSON for poset_antimatroid");
  i->add_option("--out", inst.out, "Write the result here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitInput;
  }

  Report rep;
  Json command = Json::array();
  for (int k = 1; k < argc; ++k) command.push_back(argv[k]);
  rep.body["command"] = std::move(command);

  int status = kExitOk;
  auto fail = [&](const char* type, const std::exception& e, int code) {
    rep.body["error"] = {{"type", type}, {"message", e.what()}};
    std::cerr << "cospan: " << e.what() << '\n';
    status = code;
  };
  try {
    if (*c) status = run_check(check, rep);
    else if (*p) status = run_partition(part, rep);
    else if (*r) status = run_reconstruct(rec, rep);
    else if (*v) status = run_verify_cmd(ver, rep);
    else status = run_instance(inst, rep);
  } catch (const CapacityError& e) {
    fail("capacity", e, kExitCapacity);
  } catch (const PreconditionError& e) {
    fail("precondition", e, kExitFailed);
  } catch (const Error& e) {
    fail("input", e, kExitInput);
  } catch (const nlohmann::json::exception& e) {
    fail("input", e, kExitInput);
  }

  if (!rep.checks.empty()) rep.body["checks"] = reports_json(rep.checks);
  if (!rep.info.empty()) rep.body["info"] = reports_json(rep.info);
  rep.body["exit_status"] = status;
  std::cout << rep.body.dump(2) << '\n';
  return status;
}

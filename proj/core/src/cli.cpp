#include "gjts/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "gjts/json_io.hpp"
#include "gjts/left_unit.hpp"
#include "gjts/models.hpp"
#include "gjts/tripotent.hpp"
#include "json_detail.hpp"

namespace gjts {

namespace {

using detail::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* check_set_name(RunConfig::CheckSet c) {
  switch (c) {
    case RunConfig::CheckSet::standard: return "standard";
    case RunConfig::CheckSet::identities: return "identities";
    case RunConfig::CheckSet::weak_comm: return "weak-comm";
    case RunConfig::CheckSet::operator_relations: return "operator-relations";
    case RunConfig::CheckSet::all: return "all";
  }
  return "?";
}

// Everything run() needs about the system under analysis.
struct Source {
  TripleSystem system;
  std::optional<Vector> tripotent;
  std::optional<ModelDescriptor> descriptor;
  Json describe;  // "source" block of every report
};

Source resolve_source(const RunConfig& config) {
  if (!config.model.empty() && !config.input_path.empty())
    throw UsageError("pass either --model or --input, not both");
  if (config.model.empty() && config.input_path.empty())
    throw UsageError("a system is required: pass --model NAME or --input PATH");
  if (!config.model.empty()) {
    BuiltModel built = build_model(config.model, config.params);
    Json desc;
    desc["model"] = config.model;
    desc["params"] = config.params;
    desc["label"] = built.descriptor.display;
    desc["dim"] = built.system.dim();
    return {std::move(built.system), std::move(built.tripotent), std::move(built.descriptor),
            std::move(desc)};
  }
  LoadedSystem loaded = system_from_json_text(read_file(config.input_path));
  Json desc;
  desc["input"] = config.input_path;
  desc["label"] = loaded.system.label();
  desc["dim"] = loaded.system.dim();
  return {std::move(loaded.system), std::move(loaded.tripotent), std::nullopt, std::move(desc)};
}

Vector resolve_tripotent(const RunConfig& config, const Source& source) {
  if (!config.tripotent_path.empty())
    return tripotent_from_json_text(read_file(config.tripotent_path), source.system.dim());
  if (source.tripotent) return *source.tripotent;
  throw UsageError("no tripotent available: pass --tripotent PATH or use a built-in model");
}

CheckMode resolve_mode(const RunConfig& config, int dim) {
  switch (config.mode) {
    case RunConfig::Mode::exhaustive: return CheckMode::exhaustive_mode();
    case RunConfig::Mode::sampled: return CheckMode::sampled(config.seed, config.sample_count);
    case RunConfig::Mode::automatic: break;
  }
  CheckMode mode = CheckMode::automatic(dim);
  if (!mode.exhaustive) {
    mode.seed = config.seed;
    mode.count = config.sample_count;
  }
  return mode;
}

Json mode_json(const CheckMode& mode) {
  Json j;
  j["mode"] = mode.exhaustive ? "exhaustive" : "sampled";
  if (!mode.exhaustive) {
    j["seed"] = mode.seed;
    j["count"] = mode.count;
  }
  return j;
}

Json witness_json(const std::optional<IdentityWitness>& w) {
  if (!w) return nullptr;
  Json j;
  if (!w->basis_indices.empty()) {
    j["kind"] = "basis";
    j["indices"] = w->basis_indices;
  } else {
    j["kind"] = "vectors";
    Json vecs = Json::array();
    for (const Vector& v : w->vectors) vecs.push_back(detail::vector_to_json(v));
    j["vectors"] = std::move(vecs);
  }
  j["residual"] = detail::vector_to_json(w->residual);
  return j;
}

Json identity_json(const IdentityReport& r) {
  Json j;
  j["id"] = identity_label(r.id);
  j.update(mode_json(r.mode));
  j["tuples"] = r.tuples_checked;
  j["passed"] = r.passed;
  j["witness"] = witness_json(r.witness);
  return j;
}

Json pair_witness_json(const std::optional<std::pair<int, int>>& w) {
  if (!w) return nullptr;
  Json j = Json::array();
  j.push_back(w->first);
  j.push_back(w->second);
  return j;
}

Json relations_json(const OperatorRelationReport& report) {
  Json rel;
  for (const RelationCheck& c : report.core) rel[c.id] = c.passed;
  for (const RelationCheck& c : report.weak) rel[c.id] = c.passed;
  return rel;
}

Json relation_residuals_json(const OperatorRelationReport& report) {
  Json res = Json::array();
  auto add = [&](const RelationCheck& c) {
    if (c.passed) return;
    Json j;
    j["id"] = c.id;
    j["residual_entries"] = c.residual_entries;
    res.push_back(std::move(j));
  };
  for (const RelationCheck& c : report.core) add(c);
  for (const RelationCheck& c : report.weak) add(c);
  return res;
}

Json components_json(const PeirceDecomposition& d, bool with_bases) {
  Json arr = Json::array();
  for (const ComponentLabel& label : ComponentLabel::all()) {
    const Subspace& sub = d.component(label);
    Json c;
    c["lambda"] = label.lambda_str();
    c["mu"] = label.mu_str();
    c["sign"] = label.sign == ComponentLabel::Sign::none
                    ? Json(nullptr)
                    : Json(label.sign == ComponentLabel::Sign::plus ? "+" : "-");
    c["dim"] = sub.dim();
    if (with_bases) {
      Json basis = Json::array();
      for (const Vector& b : sub.basis()) basis.push_back(detail::vector_to_json(b));
      c["basis"] = std::move(basis);
    }
    arr.push_back(std::move(c));
  }
  return arr;
}

std::string render_scalar(const Json& four_array) {
  return detail::scalar_from_json(four_array, "$").str();
}

// ---------------------------------------------------------------------------
// Table rendering. Tables are views over the JSON report: every number shown
// here is read back out of the report object.

void render_source(const Json& report, std::ostream& out) {
  const Json& src = report["source"];
  out << "source: " << src["label"].get<std::string>() << " (dim "
      << src["dim"].get<int>() << ")\n";
}

void render_identity_checks(const Json& checks, std::ostream& out) {
  for (const Json& c : checks) {
    out << "  identity " << c["id"].get<std::string>() << "  "
        << c["mode"].get<std::string>();
    if (c.contains("seed")) out << " (seed " << c["seed"].get<std::uint64_t>() << ")";
    out << "  tuples " << c["tuples"].get<std::uint64_t>() << "  "
        << (c["passed"].get<bool>() ? "PASS" : "FAIL");
    if (!c["witness"].is_null() && c["witness"].contains("indices")) {
      out << "  witness (";
      const Json& idx = c["witness"]["indices"];
      for (size_t i = 0; i < idx.size(); ++i) out << (i ? "," : "") << idx[i].get<int>();
      out << ")";
    }
    out << "\n";
  }
}

void render_relations(const Json& report, std::ostream& out) {
  if (!report.contains("relations")) return;
  out << "  relations:";
  for (const auto& [id, passed] : report["relations"].items())
    out << " " << id << (passed.get<bool>() ? " PASS" : " FAIL");
  out << "\n";
  if (report.contains("relation_residuals"))
    for (const Json& r : report["relation_residuals"])
      out << "    " << r["id"].get<std::string>() << " residual entries "
          << r["residual_entries"].get<int>() << "\n";
}

void render_components(const Json& report, std::ostream& out) {
  if (!report.contains("components")) return;
  out << "  component            dim\n";
  int total = 0;
  for (const Json& c : report["components"]) {
    std::string name = "U_{" + c["lambda"].get<std::string>() + "," +
                       c["mu"].get<std::string>() + "}";
    if (!c["sign"].is_null()) name += "^" + c["sign"].get<std::string>();
    out << "  " << name << std::string(name.size() < 21 ? 21 - name.size() : 1, ' ')
        << c["dim"].get<int>() << "\n";
    total += c["dim"].get<int>();
  }
  out << "  total                " << total << "\n";
}

void render_equation_list(const Json& list, const char* title, std::ostream& out) {
  out << "  " << title << ":";
  for (const Json& e : list) {
    out << " " << e["id"].get<std::string>();
    bool passed = e["passed"].get<bool>();
    bool expected = !e.contains("expected") || e["expected"].get<bool>();
    out << (passed ? " PASS" : (expected ? " FAIL" : " fail*"));
  }
  out << "\n";
}

void render_table(const Json& report, std::ostream& out) {
  out << "gjts " << report["command"].get<std::string>() << "\n";
  render_source(report, out);
  if (report.contains("tripotent")) {
    out << "tripotent: [";
    const Json& t = report["tripotent"];
    for (size_t i = 0; i < t.size(); ++i) out << (i ? ", " : "") << render_scalar(t[i]);
    out << "]\n";
  }
  if (report.contains("checks")) render_identity_checks(report["checks"], out);
  render_relations(report, out);
  render_components(report, out);
  if (report.contains("weak_commutativity"))
    out << "  weakly commutative: "
        << (report["weak_commutativity"]["passed"].get<bool>() ? "yes" : "no") << "\n";
  if (report.contains("classification")) {
    const Json& cls = report["classification"];
    if (!cls["violations"].empty()) {
      out << "  forbidden nonzero components:";
      for (const Json& v : cls["violations"]) out << " " << v.get<std::string>();
      out << "\n";
    }
  }
  if (report.contains("left_unit"))
    out << "  left unit: " << (report["left_unit"].get<bool>() ? "yes" : "no") << "\n";
  if (report.contains("dims")) {
    const Json& d = report["dims"];
    out << "  graded dims: u11p " << d["u11p"].get<int>() << ", u11m " << d["u11m"].get<int>()
        << ", u13p " << d["u13p"].get<int>() << ", u13m " << d["u13m"].get<int>() << "\n";
  }
  if (report.contains("properties")) render_equation_list(report["properties"], "properties", out);
  if (report.contains("equations")) render_equation_list(report["equations"], "equations", out);
  if (report.contains("axioms")) render_equation_list(report["axioms"], "axioms", out);
  if (report.contains("round_trip"))
    out << "  round trip exact: " << (report["round_trip"].get<bool>() ? "yes" : "no") << "\n";
  if (report.contains("left_unit_element"))
    out << "  left unit element: " << (report["left_unit_element"].is_null() ? "none" : "found")
        << (report.contains("left_unit_valid") && report["left_unit_valid"].get<bool>()
                ? " (valid tripotent)"
                : "")
        << "\n";
  out << "result: " << (report["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

// ---------------------------------------------------------------------------
// Commands.

struct Outcome {
  Json report;
  bool passed = false;
};

Outcome run_verify(const RunConfig& config, const Source& source) {
  Json report;
  report["schema"] = "1";
  report["command"] = "verify";
  report["source"] = source.describe;
  report["config"]["checks"] = check_set_name(config.checks);

  CheckMode mode = resolve_mode(config, source.system.dim());
  bool passed = true;
  using Set = RunConfig::CheckSet;

  Json checks = Json::array();
  if (config.checks != Set::operator_relations) {
    std::vector<IdentityReport> reports;
    if (config.checks == Set::standard || config.checks == Set::identities ||
        config.checks == Set::all) {
      reports.push_back(check_identity_1_1(source.system, mode));
      reports.push_back(check_identity_1_2(source.system, mode));
    }
    if (config.checks == Set::standard || config.checks == Set::weak_comm ||
        config.checks == Set::all) {
      reports.push_back(check_weak_commutativity(source.system, mode));
    }
    for (const IdentityReport& r : reports) {
      checks.push_back(identity_json(r));
      passed = passed && r.passed;
    }
  }
  report["checks"] = std::move(checks);

  if (config.checks == Set::operator_relations || config.checks == Set::all) {
    Vector e = resolve_tripotent(config, source);
    TripotentContext ctx = make_context(source.system, e);
    OperatorRelationReport relations = check_operator_relations(ctx);
    report["tripotent"] = detail::vector_to_json(e);
    report["relations"] = relations_json(relations);
    report["relation_residuals"] = relation_residuals_json(relations);
    passed = passed && relations.core_passed();
  }

  report["passed"] = passed;
  return {std::move(report), passed};
}

Outcome run_decompose(const RunConfig& config, const Source& source) {
  Json report;
  report["schema"] = "1";
  report["command"] = "decompose";
  report["source"] = source.describe;

  Vector e = resolve_tripotent(config, source);
  TripotentContext ctx = make_context(source.system, e);
  OperatorRelationReport relations = check_operator_relations(ctx);
  report["tripotent"] = detail::vector_to_json(e);
  report["relations"] = relations_json(relations);
  report["relation_residuals"] = relation_residuals_json(relations);

  bool passed = relations.core_passed();
  if (passed) {
    PeirceDecomposition d = peirce_decompose(ctx);
    report["components"] = components_json(d, true);
    report["tau"] = detail::matrix_to_json(d.tau);

    IdentityReport weak =
        check_weak_commutativity(source.system, resolve_mode(config, source.system.dim()));
    report["weak_commutativity"] = identity_json(weak);
    ClassifyReport cls = classify(d, weak.passed);
    Json cj;
    Json nonzero = Json::array();
    for (const ClassifyEntry& entry : cls.nonzero) {
      Json c;
      c["component"] = entry.label.str();
      c["dim"] = entry.dim;
      nonzero.push_back(std::move(c));
    }
    cj["nonzero"] = std::move(nonzero);
    Json violations = Json::array();
    for (const ComponentLabel& l : cls.violations) violations.push_back(l.str());
    cj["violations"] = std::move(violations);
    report["classification"] = std::move(cj);
    passed = cls.ok();
  }

  report["passed"] = passed;
  return {std::move(report), passed};
}

Outcome run_left_unit(const RunConfig& config, const Source& source) {
  Json report;
  report["schema"] = "1";
  report["command"] = "left-unit";
  report["source"] = source.describe;

  Vector e = resolve_tripotent(config, source);
  TripotentContext ctx = make_context(source.system, e);
  report["tripotent"] = detail::vector_to_json(e);
  bool left = is_left_unit(ctx);
  report["left_unit"] = left;
  if (!left) {
    report["passed"] = false;
    return {std::move(report), false};
  }

  PeirceDecomposition d = peirce_decompose(ctx);
  CircleExtraction ex = extract_circle(ctx, d);
  Json dims;
  dims["u11p"] = ex.frame.space.dim(GradedPart::u11p);
  dims["u11m"] = ex.frame.space.dim(GradedPart::u11m);
  dims["u13p"] = ex.frame.space.dim(GradedPart::u13p);
  dims["u13m"] = ex.frame.space.dim(GradedPart::u13m);
  report["dims"] = std::move(dims);
  Json basis = Json::array();
  for (const Vector& b : ex.frame.basis) basis.push_back(detail::vector_to_json(b));
  report["basis"] = std::move(basis);
  Json table = Json::array();
  for (const auto& [key, val] : ex.circle.table()) {
    Json entry;
    entry["i"] = key.first;
    entry["j"] = key.second;
    entry["value"] = detail::vector_to_json(val);
    table.push_back(std::move(entry));
  }
  report["circle"] = std::move(table);

  CirclePropertyReport properties = check_circle_properties(ex.circle);
  Json props = Json::array();
  for (const PropertyCheck& p : properties.properties) {
    Json pj;
    pj["id"] = p.id;
    pj["passed"] = p.passed;
    pj["witness"] = pair_witness_json(p.witness);
    props.push_back(std::move(pj));
  }
  report["properties"] = std::move(props);

  IdentityReport weak =
      check_weak_commutativity(source.system, resolve_mode(config, source.system.dim()));
  report["weak_commutativity"] = identity_json(weak);

  BilinearEquationReport equations = check_bilinear_equations(ex.circle, weak.passed);
  Json eqs = Json::array();
  for (const EquationCheck& eq : equations.equations) {
    Json ej;
    ej["id"] = eq.id;
    ej["passed"] = eq.passed;
    ej["expected"] = eq.expected;
    ej["witness"] = pair_witness_json(eq.witness);
    eqs.push_back(std::move(ej));
  }
  report["equations"] = std::move(eqs);

  TripleSystem reconstructed = rebase_system(reconstruct_triple(ex.circle), ex.frame, "round-trip");
  bool round_trip = reconstructed == source.system;
  report["round_trip"] = round_trip;

  bool passed = properties.passed() && equations.expected_passed() && round_trip;
  report["passed"] = passed;
  return {std::move(report), passed};
}

Outcome run_synthesize(const RunConfig& config, std::ostream& err) {
  if (config.input_path.empty())
    throw UsageError("synthesize requires --input CIRCLE.json");
  (void)err;
  LoadedCircle loaded = circle_from_json_text(read_file(config.input_path));

  Json report;
  report["schema"] = "1";
  report["command"] = "synthesize";
  report["source"]["input"] = config.input_path;
  Json dims;
  dims["u11p"] = loaded.space.dim(GradedPart::u11p);
  dims["u11m"] = loaded.space.dim(GradedPart::u11m);
  dims["u13p"] = loaded.space.dim(GradedPart::u13p);
  dims["u13m"] = loaded.space.dim(GradedPart::u13m);
  report["dims"] = std::move(dims);

  auto [system, synth] = synthesize_from_circle(loaded.space, loaded.table);

  Json props = Json::array();
  for (const PropertyCheck& p : synth.properties.properties) {
    Json pj;
    pj["id"] = p.id;
    pj["passed"] = p.passed;
    pj["expected"] = p.id == "3.39" || p.id == "3.40" || p.id == "3.42";
    pj["witness"] = pair_witness_json(p.witness);
    props.push_back(std::move(pj));
  }
  report["properties"] = std::move(props);

  Json eqs = Json::array();
  for (const EquationCheck& eq : synth.equations.equations) {
    Json ej;
    ej["id"] = eq.id;
    ej["passed"] = eq.passed;
    ej["expected"] = eq.expected;
    ej["witness"] = pair_witness_json(eq.witness);
    eqs.push_back(std::move(ej));
  }
  report["equations"] = std::move(eqs);

  Json axioms = Json::array();
  axioms.push_back(identity_json(synth.axiom_1_1));
  axioms.push_back(identity_json(synth.axiom_1_2));
  report["axioms"] = std::move(axioms);

  report["left_unit_element"] = synth.left_unit_element
                                    ? detail::vector_to_json(*synth.left_unit_element)
                                    : Json(nullptr);
  report["left_unit_valid"] = synth.left_unit_valid;
  report["system"] = detail::parse_json(system_to_json_text(system));

  bool passed = synth.properties_pass() && synth.equations_pass() && synth.axioms_pass();
  report["passed"] = passed;
  return {std::move(report), passed};
}

void write_report(const RunConfig& config, const Json& report, std::ostream& out) {
  std::ostream* sink = &out;
  std::ofstream file;
  if (!config.output_path.empty()) {
    file.open(config.output_path, std::ios::binary);
    if (!file) throw UsageError("cannot write \"" + config.output_path + "\"");
    sink = &file;
  }
  if (config.output == RunConfig::Output::json)
    *sink << report.dump(2) << "\n";
  else
    render_table(report, *sink);
}

}  // namespace

std::optional<RunConfig> parse_cli(int argc, const char* const* argv, std::ostream& out) {
  RunConfig config;
  CLI::App app{"exact verification and Peirce decomposition of generalized Jordan triple systems"};
  app.require_subcommand(1);

  std::string tripotent_source = "canonical";
  std::string check_name = "standard";
  std::string mode_name;
  std::string output_name = "table";
  std::string params_text;

  auto add_common = [&](CLI::App* cmd, bool with_checks) {
    cmd->add_option("--model", config.model, "built-in model: akn, ann, dnk, structurable");
    cmd->add_option("--params", params_text, "comma-separated model parameters, e.g. 2,3");
    cmd->add_option("--input", config.input_path, "system JSON file");
    cmd->add_option("--tripotent", tripotent_source,
                    "tripotent source: 'canonical' or a JSON file path");
    if (with_checks)
      cmd->add_option("--check", check_name,
                      "checks to run: standard, identities, weak-comm, operator-relations, all");
    cmd->add_option("--mode", mode_name, "exhaustive or sampled (default: by dimension)");
    cmd->add_option("--seed", config.seed, "sampling seed");
    cmd->add_option("--samples", config.sample_count, "sampled tuple count");
    cmd->add_option("--output", output_name, "report format: table or json");
    cmd->add_option("--out", config.output_path, "write the report to this path");
  };

  CLI::App* verify = app.add_subcommand("verify", "check the defining identities");
  add_common(verify, true);
  CLI::App* decompose = app.add_subcommand("decompose", "Peirce decomposition of a tripotent");
  add_common(decompose, false);
  CLI::App* left_unit =
      app.add_subcommand("left-unit", "circle-algebra analysis of a left unit");
  add_common(left_unit, false);
  CLI::App* synthesize =
      app.add_subcommand("synthesize", "build a triple system from a circle table");
  add_common(synthesize, false);
  CLI::App* example = app.add_subcommand("example", "emit a built-in model as JSON");
  add_common(example, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (verify->parsed()) config.command = RunConfig::Command::verify;
  if (decompose->parsed()) config.command = RunConfig::Command::decompose;
  if (left_unit->parsed()) config.command = RunConfig::Command::left_unit;
  if (synthesize->parsed()) config.command = RunConfig::Command::synthesize;
  if (example->parsed()) config.command = RunConfig::Command::example;

  if (!params_text.empty()) {
    std::stringstream ss(params_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        config.params.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw UsageError("bad --params entry \"" + item + "\"");
      }
    }
  }

  if (tripotent_source != "canonical") config.tripotent_path = tripotent_source;

  if (check_name == "standard")
    config.checks = RunConfig::CheckSet::standard;
  else if (check_name == "identities")
    config.checks = RunConfig::CheckSet::identities;
  else if (check_name == "weak-comm")
    config.checks = RunConfig::CheckSet::weak_comm;
  else if (check_name == "operator-relations")
    config.checks = RunConfig::CheckSet::operator_relations;
  else if (check_name == "all")
    config.checks = RunConfig::CheckSet::all;
  else
    throw UsageError("unknown --check \"" + check_name + "\"");

  if (mode_name.empty())
    config.mode = RunConfig::Mode::automatic;
  else if (mode_name == "exhaustive")
    config.mode = RunConfig::Mode::exhaustive;
  else if (mode_name == "sampled")
    config.mode = RunConfig::Mode::sampled;
  else
    throw UsageError("unknown --mode \"" + mode_name + "\"");

  if (output_name == "table")
    config.output = RunConfig::Output::table;
  else if (output_name == "json")
    config.output = RunConfig::Output::json;
  else
    throw UsageError("unknown --output \"" + output_name + "\"");

  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == RunConfig::Command::example) {
      if (config.model.empty()) throw UsageError("example requires --model");
      BuiltModel built = build_model(config.model, config.params);
      std::string text = system_to_json_text(built.system, &built.tripotent, &built.descriptor);
      if (!config.output_path.empty()) {
        std::ofstream file(config.output_path, std::ios::binary);
        if (!file) throw UsageError("cannot write \"" + config.output_path + "\"");
        file << text;
      } else {
        out << text;
      }
      return kExitPassed;
    }

    Outcome outcome;
    if (config.command == RunConfig::Command::synthesize) {
      outcome = run_synthesize(config, err);
    } else {
      Source source = resolve_source(config);
      switch (config.command) {
        case RunConfig::Command::verify: outcome = run_verify(config, source); break;
        case RunConfig::Command::decompose: outcome = run_decompose(config, source); break;
        case RunConfig::Command::left_unit: outcome = run_left_unit(config, source); break;
        default: throw UsageError("unhandled command");
      }
    }
    write_report(config, outcome.report, out);
    return outcome.passed ? kExitPassed : kExitMathFailure;
  } catch (const NotATripotent& e) {
    err << "error: " << e.what() << "\n";
    err << "residual:";
    for (int i = 0; i < e.residual().dim(); ++i) err << " " << e.residual()[i].str();
    err << "\n";
    return kExitMathFailure;
  } catch (const DecompositionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const NotALeftUnit& e) {
    err << "error: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const UnexpectedComponent& e) {
    err << "error: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const JsonFormatError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GradingMismatch& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace gjts

// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance here is exactness: the arithmetic is an exact field, so
// residuals are required to be identically zero, never merely small.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "circle_gen.hpp"
#include "gjts/cli.hpp"
#include "gjts/json_io.hpp"
#include "gjts/left_unit.hpp"
#include "gjts/models.hpp"
#include "gjts/tripotent.hpp"

using namespace gjts;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

#define REQUIRE_THAT(cond, note)                                      \
  do {                                                                \
    if (!(cond)) {                                                    \
      g_notes.push_back(std::string(#cond) + " -- " + (note));        \
      return false;                                                   \
    }                                                                 \
  } while (0)

using Criterion = std::function<bool()>;

void run_criterion(int number, const std::string& title, const Criterion& body) {
  g_notes.clear();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    g_notes.push_back(std::string("exception: ") + e.what());
  }
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << title << "\n";
  if (!ok) {
    ++g_failures;
    for (const std::string& note : g_notes) std::cout << "       " << note << "\n";
  }
}

ComponentLabel U(int ln, int ld, int mn, int md,
                 ComponentLabel::Sign s = ComponentLabel::Sign::none) {
  return ComponentLabel::make(ln, ld, mn, md, s);
}
constexpr auto kPlus = ComponentLabel::Sign::plus;
constexpr auto kMinus = ComponentLabel::Sign::minus;

// ---------------------------------------------------------------------------

bool criterion_1_axioms() {
  auto started = std::chrono::steady_clock::now();
  for (const BuiltModel& m : {build_akn_ank(2, 3), build_dnk(3, 2, 1), build_dnk(4, 3, 2),
                              build_structurable_matrix(2)}) {
    IdentityReport r1 = check_identity_1_1(m.system, CheckMode::exhaustive_mode());
    REQUIRE_THAT(r1.passed, m.descriptor.display + " identity 1.1");
    IdentityReport r2 = check_identity_1_2(m.system, CheckMode::exhaustive_mode());
    REQUIRE_THAT(r2.passed, m.descriptor.display + " identity 1.2");
  }
  BuiltModel a33 = build_ann_ann(1);
  REQUIRE_THAT(a33.system.dim() == 18, "square pair model has dimension 18");
  CheckMode sampled = CheckMode::sampled(1, 10000);
  IdentityReport s1 = check_identity_1_1(a33.system, sampled);
  REQUIRE_THAT(s1.passed && s1.tuples_checked >= 10000, "A33-A33 sampled 1.1 >= 10000 tuples");
  IdentityReport s2 = check_identity_1_2(a33.system, sampled);
  REQUIRE_THAT(s2.passed && s2.tuples_checked >= 10000, "A33-A33 sampled 1.2 >= 10000 tuples");
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  std::ostringstream budget;
  budget << "exhaustive dim<=12 suite took " << elapsed << "s (budget 600s)";
  REQUIRE_THAT(elapsed < 600.0, budget.str());
  return true;
}

bool criterion_2_operator_relations() {
  for (const BuiltModel& m :
       {build_akn_ank(1, 1), build_akn_ank(2, 3), build_ann_ann(1), build_ann_ann(2),
        build_dnk(3, 2, 1), build_dnk(4, 3, 2), build_dnk(3, 3, 3),
        build_structurable_matrix(2)}) {
    TripotentContext ctx = make_context(m.system, m.tripotent);
    OperatorRelationReport report = check_operator_relations(ctx);
    REQUIRE_THAT(report.core_passed(), m.descriptor.display + " relations 1.4-1.8'");
    if (m.descriptor.name == "dnk")
      REQUIRE_THAT(report.weak[0].passed, m.descriptor.display + " relation 1.42");
  }
  BuiltModel a23 = build_akn_ank(2, 3);
  OperatorRelationReport report =
      check_operator_relations(make_context(a23.system, a23.tripotent));
  REQUIRE_THAT(!report.weak[0].passed && report.weak[0].residual_entries > 0,
               "A23-A32 relation 1.42 fails with a nonzero residual matrix");
  return true;
}

bool expect_dims(const BuiltModel& m, const std::vector<std::pair<ComponentLabel, int>>& want,
                 PeirceDecomposition* out = nullptr) {
  TripotentContext ctx = make_context(m.system, m.tripotent);
  PeirceDecomposition d = peirce_decompose(ctx);
  for (const auto& [label, dim] : want) {
    std::ostringstream note;
    note << m.descriptor.display << " " << label.str() << " expected " << dim << " got "
         << d.component_dim(label);
    REQUIRE_THAT(d.component_dim(label) == dim, note.str());
  }
  // Independent exact rank computation over the stacked component bases.
  std::vector<Vector> all;
  int claimed = 0;
  for (const auto& [label, sub] : d.components) {
    claimed += sub.dim();
    for (const Vector& b : sub.basis()) all.push_back(b);
  }
  int stacked_rank = all.empty() ? 0 : rank(Matrix::from_rows(all, m.system.dim()));
  REQUIRE_THAT(stacked_rank == claimed && stacked_rank == m.system.dim(),
               m.descriptor.display + " stacked-basis rank equals the ambient dimension");
  if (out != nullptr) *out = std::move(d);
  return true;
}

bool criterion_3_decomposition_dimensions() {
  if (!expect_dims(build_akn_ank(2, 3), {{U(1, 1, 1, 1, kPlus), 5},
                                         {U(1, 1, 1, 1, kMinus), 3},
                                         {U(1, 1, 3, 1, kPlus), 3},
                                         {U(1, 1, 3, 1, kMinus), 1}}))
    return false;
  if (!expect_dims(build_ann_ann(2), {{U(0, 1, 0, 1), 4},
                                      {U(1, 2, 1, 2), 16},
                                      {U(1, 1, 1, 1, kPlus), 9},
                                      {U(1, 1, 1, 1, kMinus), 3},
                                      {U(3, 2, 3, 2), 8},
                                      {U(-1, 2, 0, 1), 8},
                                      {U(0, 1, 1, 1), 12},
                                      {U(1, 2, 2, 1), 8},
                                      {U(1, 1, 3, 1, kPlus), 3},
                                      {U(1, 1, 3, 1, kMinus), 1}}))
    return false;
  BuiltModel a66 = build_ann_ann(2);
  PeirceDecomposition d66 = peirce_decompose(make_context(a66.system, a66.tripotent));
  int total = 0, nonzero = 0;
  for (const auto& [label, sub] : d66.components) {
    total += sub.dim();
    nonzero += sub.dim() > 0;
  }
  REQUIRE_THAT(total == 72 && nonzero == 10, "A66-A66 has all ten components nonzero, total 72");
  if (!expect_dims(build_dnk(4, 3, 2), {{U(0, 1, 0, 1), 2},
                                        {U(1, 1, 1, 1, kPlus), 3},
                                        {U(1, 1, 1, 1, kMinus), 4},
                                        {U(0, 1, 1, 1), 2},
                                        {U(1, 1, 3, 1, kMinus), 1}}))
    return false;
  if (!expect_dims(build_structurable_matrix(2),
                   {{U(1, 1, 1, 1, kPlus), 3}, {U(1, 1, 3, 1, kMinus), 1}}))
    return false;
  return true;
}

bool criterion_4_peirce_invariants() {
  for (const BuiltModel& m :
       {build_akn_ank(1, 1), build_akn_ank(2, 3), build_ann_ann(1), build_ann_ann(2),
        build_dnk(3, 2, 1), build_dnk(4, 3, 2), build_dnk(3, 3, 3),
        build_structurable_matrix(2)}) {
    TripotentContext ctx = make_context(m.system, m.tripotent);
    PeirceDecomposition d = peirce_decompose(ctx);
    const std::string& name = m.descriptor.display;
    for (const auto& [label, sub] : d.components) {
      for (const Vector& b : sub.basis()) {
        REQUIRE_THAT(ctx.L.apply(b) == Scalar(label.lambda) * b, name + " L eigen-relation");
        REQUIRE_THAT(ctx.R.apply(b) == Scalar(label.mu) * b, name + " R eigen-relation");
        Vector q2 = ctx.Q.apply(ctx.Q.apply(b));
        if (label.signed_pair()) {
          // Q^2 = I on the (1,1) pair and 9I on the (1,3) pair.
          Scalar square(label.mu);
          square *= Scalar(label.mu);
          REQUIRE_THAT(q2 == square * b, name + " Q^2 on " + label.str());
        } else if (cmp(label.lambda, Rational(3, 2)) == 0 || cmp(label.mu, Rational(2)) == 0) {
          REQUIRE_THAT(q2 == Scalar(3) * b, name + " Q^2 = 3 on " + label.str());
        } else {
          REQUIRE_THAT(ctx.Q.apply(b).is_zero(), name + " Q = 0 on " + label.str());
        }
      }
    }
    REQUIRE_THAT(kernel(ctx.L.shifted(Scalar(-1))).dim() == 0, name + " kernel(L+1) = 0");
    int p = d.component_dim(U(3, 2, 3, 2));
    REQUIRE_THAT(d.component_dim(U(1, 2, 2, 1)) == p, name + " tau pairs equal dimensions");
    REQUIRE_THAT(d.tau_back * d.tau == Matrix::identity(p), name + " tau^2 = id (forward)");
    REQUIRE_THAT(d.tau * d.tau_back == Matrix::identity(p), name + " tau^2 = id (backward)");
    std::vector<Subspace> parts;
    for (const auto& [label, sub] : d.components) parts.push_back(sub);
    DirectSumReport sum = assert_direct_sum(parts, m.system.dim());
    REQUIRE_THAT(sum.ok && sum.achieved_rank == m.system.dim(),
                 name + " direct-sum rank equals the ambient dimension");
    if (m.descriptor.name == "ann" && m.descriptor.params[0].second == 2)
      REQUIRE_THAT(p == 8, "A66-A66 tau pairs 8 <-> 8");
  }
  return true;
}

bool criterion_5_weak_commutativity_dichotomy() {
  for (const BuiltModel& m : {build_dnk(4, 3, 2), build_dnk(3, 2, 1)}) {
    IdentityReport r = check_weak_commutativity(m.system, CheckMode::exhaustive_mode());
    REQUIRE_THAT(r.passed, m.descriptor.display + " weak commutativity exhaustive");
  }
  BuiltModel a23 = build_akn_ank(2, 3);
  IdentityReport r = check_weak_commutativity(a23.system, CheckMode::exhaustive_mode());
  REQUIRE_THAT(!r.passed, "A23-A32 weak commutativity fails");
  REQUIRE_THAT(r.witness.has_value() && r.witness->basis_indices.size() == 5 &&
                   !r.witness->residual.is_zero(),
               "A23-A32 weak commutativity records a concrete witness");
  // Re-evaluate the recorded witness through the dense route.
  {
    std::vector<Vector> u;
    for (int idx : r.witness->basis_indices) u.push_back(Vector::unit(12, idx));
    REQUIRE_THAT(residual_weak_comm_multilinear(a23.system, u[0], u[1], u[2], u[3], u[4]) ==
                     r.witness->residual,
                 "witness residual reproduces");
  }
  for (const BuiltModel& m : {build_dnk(3, 2, 1), build_dnk(4, 3, 2), build_dnk(3, 3, 3)}) {
    PeirceDecomposition d = peirce_decompose(make_context(m.system, m.tripotent));
    for (const ComponentLabel& label : weakly_forbidden_components()) {
      std::ostringstream note;
      note << m.descriptor.display << " " << label.str() << " must vanish";
      REQUIRE_THAT(d.component_dim(label) == 0, note.str());
    }
  }
  return true;
}

bool criterion_6_section3_round_trip() {
  for (const BuiltModel& m : {build_dnk(3, 3, 3), build_akn_ank(2, 3)}) {
    const std::string& name = m.descriptor.display;
    TripotentContext ctx = make_context(m.system, m.tripotent);
    PeirceDecomposition d = peirce_decompose(ctx);
    CircleExtraction ex = extract_circle(ctx, d);

    TripleSystem rebuilt = rebase_system(reconstruct_triple(ex.circle), ex.frame, "round-trip");
    REQUIRE_THAT(rebuilt == m.system, name + " reconstruction is bit-exact");

    CirclePropertyReport properties = check_circle_properties(ex.circle);
    for (const PropertyCheck& p : properties.properties)
      REQUIRE_THAT(p.passed, name + " property " + p.id);

    bool weak = m.descriptor.weakly_commutative;
    BilinearEquationReport equations = check_bilinear_equations(ex.circle, weak);
    for (const EquationCheck& e : equations.equations) {
      if (e.id == "3.53" || e.id == "3.54") continue;
      REQUIRE_THAT(e.passed, name + " equation " + e.id);
    }
    if (weak) {
      REQUIRE_THAT(equations.equation("3.53").passed, name + " equation 3.53");
      REQUIRE_THAT(equations.equation("3.54").passed, name + " equation 3.54");
    } else {
      REQUIRE_THAT(!equations.equation("3.53").passed &&
                       equations.equation("3.53").witness.has_value(),
                   name + " equation 3.53 fails with witness");
    }
  }
  return true;
}

bool criterion_7_converse_synthesis() {
  int instances = 0;
  for (std::uint64_t seed = 1; instances < 100; ++seed) {
    testing::CircleGen cg(seed);
    GradedSpace space = cg.random_dims(6);
    testing::RandomCircle rc = cg.random_admissible(space);
    auto [system, report] = synthesize_from_circle(space, rc.table);
    REQUIRE_THAT(report.properties_pass(),
                 "seed " + std::to_string(seed) + " generator produced an admissible table");
    for (const EquationCheck& e : report.equations.equations) {
      if (e.id == "3.53" || e.id == "3.54") continue;
      REQUIRE_THAT(e.passed, "seed " + std::to_string(seed) + " equation " + e.id);
    }
    ++instances;
  }

  using Mutator = bool (testing::CircleGen::*)(testing::RandomCircle&);
  const std::vector<std::pair<Mutator, std::string>> mutations = {
      {&testing::CircleGen::mutate_break_3_39, "3.39"},
      {&testing::CircleGen::mutate_break_3_40, "3.40"},
      {&testing::CircleGen::mutate_break_3_42, "3.42"}};
  for (std::uint64_t seed = 200; seed < 210; ++seed) {
    for (const auto& [mutate, property] : mutations) {
      testing::CircleGen cg(seed);
      GradedSpace space;
      space.dims = {2, 1, 1, 1};
      testing::RandomCircle rc = cg.random_admissible(space);
      REQUIRE_THAT((cg.*mutate)(rc), "mutation for " + property + " applies");
      auto [system, report] = synthesize_from_circle(space, rc.table);
      REQUIRE_THAT(!report.properties.property(property).passed,
                   "seed " + std::to_string(seed) + " mutation breaks " + property);
      bool some_failed = false;
      for (const EquationCheck& e : report.equations.equations)
        if (e.id != "3.53" && e.id != "3.54" && !e.passed) some_failed = true;
      REQUIRE_THAT(some_failed, "seed " + std::to_string(seed) + " mutated " + property +
                                    " breaks at least one equation");
    }
  }
  return true;
}

bool criterion_8_determinism() {
  std::vector<RunConfig> configs;
  {
    RunConfig c;
    c.command = RunConfig::Command::verify;
    c.model = "ann";
    c.params = {1};
    c.mode = RunConfig::Mode::sampled;
    c.seed = 42;
    c.sample_count = 2000;
    c.output = RunConfig::Output::json;
    configs.push_back(c);
  }
  {
    RunConfig c;
    c.command = RunConfig::Command::decompose;
    c.model = "akn";
    c.params = {2, 3};
    c.output = RunConfig::Output::json;
    configs.push_back(c);
  }
  {
    RunConfig c;
    c.command = RunConfig::Command::left_unit;
    c.model = "dnk";
    c.params = {3, 3, 3};
    c.output = RunConfig::Output::json;
    configs.push_back(c);
  }
  for (const RunConfig& config : configs) {
    std::ostringstream out1, out2, err;
    int code1 = run(config, out1, err);
    int code2 = run(config, out2, err);
    REQUIRE_THAT(code1 == code2, "exit codes agree across repeated runs");
    REQUIRE_THAT(!out1.str().empty() && out1.str() == out2.str(),
                 "JSON reports are byte-identical across repeated runs");
  }
  return true;
}

}  // namespace

int main() {
  run_criterion(1, "defining identities on the example systems (exact, within budget)",
                criterion_1_axioms);
  run_criterion(2, "operator relations exact; weak relation separates D from A models",
                criterion_2_operator_relations);
  run_criterion(3, "decomposition dimensions match the block-shape counts",
                criterion_3_decomposition_dimensions);
  run_criterion(4, "eigen-relations, Q squares, tau pairing, direct-sum ranks",
                criterion_4_peirce_invariants);
  run_criterion(5, "weak-commutativity dichotomy with recorded witness",
                criterion_5_weak_commutativity_dichotomy);
  run_criterion(6, "circle extraction and exact reconstruction round trip",
                criterion_6_section3_round_trip);
  run_criterion(7, "converse synthesis over seeded random circle tables",
                criterion_7_converse_synthesis);
  run_criterion(8, "byte-identical reports for identical configurations", criterion_8_determinism);
  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 8 criteria passed\n";
  return 0;
}

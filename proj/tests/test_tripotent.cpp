#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gjts/models.hpp"
#include "gjts/tripotent.hpp"
#include "test_helpers.hpp"

using namespace gjts;

namespace {

ComponentLabel U(int ln, int ld, int mn, int md,
                 ComponentLabel::Sign s = ComponentLabel::Sign::none) {
  return ComponentLabel::make(ln, ld, mn, md, s);
}
constexpr auto kPlus = ComponentLabel::Sign::plus;
constexpr auto kMinus = ComponentLabel::Sign::minus;

// Block formulas for the operators of the (2,3) pair model, written out
// independently of the library's structure-constant route. Layout: block 0
// is the 2x3 matrix (A11|A12) row-major, block 1 the 3x2 matrix stacking
// (A21; A22) row-major at offset 6.
struct Blocks {
  Scalar a11[2][2], a12[2], a21[2][2], a22[2];
};

Blocks split23(const Vector& v) {
  Blocks b;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) b.a11[r][c] = v[r * 3 + c];
    b.a12[r] = v[r * 3 + 2];
  }
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) b.a21[r][c] = v[6 + r * 2 + c];
  for (int c = 0; c < 2; ++c) b.a22[c] = v[6 + 2 * 2 + c];
  return b;
}

Vector join23(const Blocks& b) {
  Vector v(12);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) v[r * 3 + c] = b.a11[r][c];
    v[r * 3 + 2] = b.a12[r];
  }
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) v[6 + r * 2 + c] = b.a21[r][c];
  for (int c = 0; c < 2; ++c) v[6 + 4 + c] = b.a22[c];
  return v;
}

// R: (A11, A12; A21, A22) -> (2 A11 - A21, A12; 2 A21 - A11, A22).
Vector oracle_r23(const Vector& v) {
  Blocks b = split23(v), out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      out.a11[r][c] = Scalar(2) * b.a11[r][c] - b.a21[r][c];
      out.a21[r][c] = Scalar(2) * b.a21[r][c] - b.a11[r][c];
    }
  for (int r = 0; r < 2; ++r) out.a12[r] = b.a12[r];
  for (int c = 0; c < 2; ++c) out.a22[c] = b.a22[c];
  return join23(out);
}

// Q: (A11, A12; A21, A22) -> (2 A11^T - A21^T, -A22^T; 2 A21^T - A11^T, -A12^T).
Vector oracle_q23(const Vector& v) {
  Blocks b = split23(v), out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      out.a11[r][c] = Scalar(2) * b.a11[c][r] - b.a21[c][r];
      out.a21[r][c] = Scalar(2) * b.a21[c][r] - b.a11[c][r];
    }
  for (int r = 0; r < 2; ++r) out.a12[r] = -b.a22[r];
  for (int c = 0; c < 2; ++c) out.a22[c] = -b.a12[c];
  return join23(out);
}

std::vector<int> component_dims(const PeirceDecomposition& d,
                                const std::vector<ComponentLabel>& labels) {
  std::vector<int> dims;
  for (const ComponentLabel& l : labels) dims.push_back(d.component_dim(l));
  return dims;
}

void check_peirce_invariants(const PeirceDecomposition& d) {
  const Matrix& L = d.context.L;
  const Matrix& R = d.context.R;
  const Matrix& Q = d.context.Q;
  int n = L.rows();

  // Eigen-relations and the prescribed Q action on every component.
  for (const auto& [label, sub] : d.components) {
    for (const Vector& b : sub.basis()) {
      CHECK(L.apply(b) == Scalar(label.lambda) * b);
      CHECK(R.apply(b) == Scalar(label.mu) * b);
      Vector q2 = Q.apply(Q.apply(b));
      if (label.signed_pair()) {
        Scalar q_eigen(label.mu);
        if (label.sign == kMinus) q_eigen = -q_eigen;
        CHECK(Q.apply(b) == q_eigen * b);
        CHECK(q2 == q_eigen * q_eigen * b);
      } else if (cmp(label.lambda, Rational(3, 2)) == 0 || cmp(label.mu, Rational(2)) == 0) {
        CHECK(q2 == Scalar(3) * b);
      } else {
        CHECK(Q.apply(b).is_zero());
      }
    }
  }

  // -1 is never an eigenvalue of L.
  CHECK(kernel(L.shifted(Scalar(-1))).dim() == 0);

  // image(R - 2L - 1) and image(R - L) land in each other's kernels with
  // matching dimensions.
  Matrix r_2l_1 = R - Scalar(2) * L - Matrix::identity(n);
  Matrix r_l = R - L;
  Subspace im1 = image(r_2l_1), ker1 = kernel(r_l);
  Subspace im2 = image(r_l), ker2 = kernel(r_2l_1);
  CHECK(intersect(im1, ker1) == im1);
  CHECK(intersect(im2, ker2) == im2);
  CHECK(im1.dim() == ker1.dim());
  CHECK(im2.dim() == ker2.dim());

  // tau is an involutive pairing between the (3/2,3/2) and (1/2,2) parts.
  int p = d.component_dim(U(3, 2, 3, 2));
  CHECK(d.component_dim(U(1, 2, 2, 1)) == p);
  CHECK(d.tau_back * d.tau == Matrix::identity(p));
  CHECK(d.tau * d.tau_back == Matrix::identity(p));

  // Direct sum of all ten equals the ambient space.
  std::vector<Subspace> parts;
  for (const auto& [label, sub] : d.components) parts.push_back(sub);
  CHECK(assert_direct_sum(parts, n).ok);
}

}  // namespace

TEST_CASE("context of the smallest pair model") {
  BuiltModel m = build_akn_ank(1, 1);
  TripotentContext ctx = make_context(m.system, m.tripotent);
  CHECK(ctx.L == Matrix::identity(2));
  Matrix expected(2, 2);
  expected(0, 0) = Scalar(2);
  expected(0, 1) = Scalar(-1);
  expected(1, 0) = Scalar(-1);
  expected(1, 1) = Scalar(2);
  CHECK(ctx.R == expected);
  CHECK(ctx.Q == expected);
}

TEST_CASE("context of the scalar system") {
  TripleSystem s = TripleSystem::from_product_oracle(1, "D11", [](int, int, int) {
    Vector v(1);
    v[0] = Scalar(1);
    return v;
  });
  Vector e(1);
  e[0] = Scalar(1);
  TripotentContext ctx = make_context(s, e);
  CHECK(ctx.L == Matrix::identity(1));
  CHECK(ctx.R == Matrix::identity(1));
  CHECK(ctx.Q == Matrix::identity(1));
}

TEST_CASE("non-tripotent input carries its residual") {
  BuiltModel m = build_akn_ank(1, 1);
  Vector bad = m.tripotent;
  bad[0] = Scalar(2);
  try {
    make_context(m.system, bad);
    FAIL("expected NotATripotent");
  } catch (const NotATripotent& err) {
    CHECK(!err.residual().is_zero());
    Vector expected = m.system.product(bad, bad, bad);
    expected -= bad;
    CHECK(err.residual() == expected);
  }
}

TEST_CASE("operators of the (2,3) pair model match the block formulas") {
  BuiltModel m = build_akn_ank(2, 3);
  TripotentContext ctx = make_context(m.system, m.tripotent);
  CHECK(ctx.L == Matrix::identity(12));
  for (int i = 0; i < 12; ++i) {
    Vector unit = Vector::unit(12, i);
    CHECK(ctx.R.apply(unit) == oracle_r23(unit));
    CHECK(ctx.Q.apply(unit) == oracle_q23(unit));
  }
}

TEST_CASE("operator relations on all example models") {
  for (const BuiltModel& m :
       {build_akn_ank(1, 1), build_akn_ank(2, 3), build_ann_ann(1), build_dnk(3, 2, 1),
        build_dnk(4, 3, 2), build_dnk(3, 3, 3), build_structurable_matrix(2)}) {
    TripotentContext ctx = make_context(m.system, m.tripotent);
    OperatorRelationReport report = check_operator_relations(ctx);
    CHECK(report.core_passed());
    if (m.descriptor.weakly_commutative) {
      CHECK(report.weak_passed());
    }
  }
}

TEST_CASE("weak relation fails for the (2,3) pair model with scalar 12 on the plus part") {
  BuiltModel m = build_akn_ank(2, 3);
  TripotentContext ctx = make_context(m.system, m.tripotent);
  OperatorRelationReport report = check_operator_relations(ctx);
  REQUIRE(report.weak.size() == 2);
  CHECK(report.weak[0].id == "1.42");
  CHECK(!report.weak[0].passed);
  CHECK(report.weak[0].residual_entries > 0);

  PeirceDecomposition d = peirce_decompose(ctx);
  Matrix op = (ctx.R - ctx.L) * (ctx.R + ctx.Q + ctx.L - Matrix::identity(12));
  for (const Vector& b : d.component(U(1, 1, 3, 1, kPlus)).basis())
    CHECK(op.apply(b) == Scalar(12) * b);
}

TEST_CASE("decomposition of the smallest pair model") {
  BuiltModel m = build_akn_ank(1, 1);
  PeirceDecomposition d = peirce_decompose(make_context(m.system, m.tripotent));
  CHECK(d.component_dim(U(1, 1, 1, 1, kPlus)) == 1);
  CHECK(d.component_dim(U(1, 1, 3, 1, kPlus)) == 1);
  Vector u(2), v(2);
  u[0] = u[1] = Scalar(1);
  v[0] = Scalar(1);
  v[1] = Scalar(-1);
  CHECK(d.component(U(1, 1, 1, 1, kPlus)).basis()[0] == u);
  CHECK(d.component(U(1, 1, 3, 1, kPlus)).basis()[0] == v);
  int total = 0;
  for (const auto& [label, sub] : d.components) total += sub.dim();
  CHECK(total == 2);
  check_peirce_invariants(d);
}

TEST_CASE("decomposition dimensions match the descriptors") {
  for (const BuiltModel& m :
       {build_akn_ank(2, 3), build_ann_ann(1), build_dnk(4, 3, 2), build_dnk(3, 3, 3),
        build_structurable_matrix(2)}) {
    CAPTURE(m.descriptor.display);
    PeirceDecomposition d = peirce_decompose(make_context(m.system, m.tripotent));
    for (const auto& [label, expected] : m.descriptor.expected_components)
      CHECK(d.component_dim(label) == expected);
    check_peirce_invariants(d);
  }
}

TEST_CASE("hand-encoded plus-part basis of the (2,3) pair model") {
  // Elements (S, A; S, -A^T) with S symmetric 2x2 and A an arbitrary column.
  auto entry = [](std::initializer_list<std::pair<int, int>> plus,
                  std::initializer_list<std::pair<int, int>> minus) {
    Vector v(12);
    for (auto [i, val] : plus) v[i] = Scalar(val);
    for (auto [i, val] : minus) v[i] = Scalar(-val);
    return v;
  };
  std::vector<Vector> span;
  span.push_back(entry({{0, 1}, {6, 1}}, {}));                  // S = E11
  span.push_back(entry({{1, 1}, {3, 1}, {7, 1}, {8, 1}}, {}));  // S = E12 + E21
  span.push_back(entry({{4, 1}, {9, 1}}, {}));                  // S = E22
  span.push_back(entry({{2, 1}}, {{10, 1}}));                   // A = e1
  span.push_back(entry({{5, 1}}, {{11, 1}}));                   // A = e2

  BuiltModel m = build_akn_ank(2, 3);
  PeirceDecomposition d = peirce_decompose(make_context(m.system, m.tripotent));
  CHECK(d.component(U(1, 1, 1, 1, kPlus)) == Subspace(12, span));
}

TEST_CASE("classification flags forbidden components") {
  BuiltModel d43 = build_dnk(4, 3, 2);
  PeirceDecomposition d = peirce_decompose(make_context(d43.system, d43.tripotent));
  ClassifyReport report = classify(d, true);
  CHECK(report.ok());
  CHECK(report.nonzero.size() == 5);

  BuiltModel a23 = build_akn_ank(2, 3);
  PeirceDecomposition da = peirce_decompose(make_context(a23.system, a23.tripotent));
  ClassifyReport ra = classify(da, true);
  CHECK(!ra.ok());
  // The plus part of the (1,3) pair survives, violating the weak pattern.
  bool found = false;
  for (const ComponentLabel& l : ra.violations) found |= l == U(1, 1, 3, 1, kPlus);
  CHECK(found);
  CHECK(classify(da, false).ok());
}

TEST_CASE("distinct tripotents of one system both satisfy the weak relation") {
  // The rectangular model is weakly commutative, so every tripotent of it
  // obeys relation 1.42; the block size l selects genuinely different ones.
  BuiltModel deep = build_dnk(4, 3, 2);
  BuiltModel shallow = build_dnk(4, 3, 1);
  REQUIRE(deep.system == shallow.system);
  for (const Vector* e : {&deep.tripotent, &shallow.tripotent}) {
    TripotentContext ctx = make_context(deep.system, *e);
    CHECK(check_operator_relations(ctx).weak_passed());
  }
}

#include "gjts/tripotent.hpp"

namespace gjts {

const std::vector<ComponentLabel>& ComponentLabel::all() {
  static const std::vector<ComponentLabel> labels = {
      make(-1, 2, 0, 1), make(0, 1, 0, 1),  make(0, 1, 1, 1),
      make(1, 2, 1, 2),  make(1, 2, 2, 1),  make(1, 1, 1, 1, Sign::plus),
      make(1, 1, 1, 1, Sign::minus),        make(1, 1, 3, 1, Sign::plus),
      make(1, 1, 3, 1, Sign::minus),        make(3, 2, 3, 2),
  };
  return labels;
}

ComponentLabel ComponentLabel::make(int lam_num, int lam_den, int mu_num, int mu_den, Sign sign) {
  ComponentLabel l;
  l.lambda = Rational(lam_num, lam_den);
  l.lambda.canonicalize();
  l.mu = Rational(mu_num, mu_den);
  l.mu.canonicalize();
  l.sign = sign;
  return l;
}

std::string ComponentLabel::lambda_str() const { return rational_str(lambda); }
std::string ComponentLabel::mu_str() const { return rational_str(mu); }

std::string ComponentLabel::str() const {
  std::string s = "U_{" + lambda_str() + "," + mu_str() + "}";
  if (sign == Sign::plus) s += "^+";
  if (sign == Sign::minus) s += "^-";
  return s;
}

TripotentContext make_context(const TripleSystem& s, Vector e) {
  if (e.dim() != s.dim()) throw DimensionMismatch("make_context: tripotent dimension mismatch");
  Vector residual = s.product(e, e, e);
  residual -= e;
  if (!residual.is_zero()) throw NotATripotent(std::move(residual));

  int n = s.dim();
  TripotentContext ctx;
  ctx.system = &s;
  ctx.L = Matrix(n, n);
  ctx.R = Matrix(n, n);
  ctx.Q = Matrix(n, n);
  // One pass over the constant table per operator slot: L(e_k) sums over
  // (i,j), R(e_i) over (j,k), Q(e_j) over (i,k).
  for (const auto& [key, val] : s.constants()) {
    const int i = key[0], j = key[1], k = key[2];
    Scalar eij = e[i] * e[j];
    if (!eij.is_zero())
      for (const SparseEntry& t : val) ctx.L(t.index, k) += eij * t.value;
    Scalar ejk = e[j] * e[k];
    if (!ejk.is_zero())
      for (const SparseEntry& t : val) ctx.R(t.index, i) += ejk * t.value;
    Scalar eik = e[i] * e[k];
    if (!eik.is_zero())
      for (const SparseEntry& t : val) ctx.Q(t.index, j) += eik * t.value;
  }
  ctx.e = std::move(e);
  return ctx;
}

namespace {

RelationCheck relation(const std::string& id, const Matrix& residual) {
  RelationCheck c;
  c.id = id;
  c.residual_entries = residual.nonzero_count();
  c.passed = c.residual_entries == 0;
  return c;
}

}  // namespace

bool OperatorRelationReport::core_passed() const {
  for (const RelationCheck& c : core)
    if (!c.passed) return false;
  return true;
}

bool OperatorRelationReport::weak_passed() const {
  for (const RelationCheck& c : weak)
    if (!c.passed) return false;
  return true;
}

OperatorRelationReport check_operator_relations(const TripotentContext& ctx) {
  const Matrix& L = ctx.L;
  const Matrix& R = ctx.R;
  const Matrix& Q = ctx.Q;
  int n = L.rows();
  Matrix I = Matrix::identity(n);

  OperatorRelationReport report;
  report.core.push_back(relation("1.4", R * R - Q * Q + L * R - R));
  report.core.push_back(relation("1.5", R * Q - Q * R + L * Q - Q));
  report.core.push_back(relation("1.6", L * R - R * L));
  report.core.push_back(relation("1.7", L * Q + Q * L - Scalar(2) * Q));
  Matrix r_2l_1 = R - Scalar(2) * L - I;
  Matrix r_l = R - L;
  report.core.push_back(relation("1.8", r_2l_1 * r_l));
  report.core.push_back(relation("1.8'", r_l * r_2l_1));
  report.weak.push_back(relation("1.42", r_l * (R + Q + L - I)));
  report.weak.push_back(relation("1.43", r_l * Q + Scalar(3) * (r_l * L)));
  return report;
}

const std::vector<ComponentLabel>& weakly_forbidden_components() {
  using Sign = ComponentLabel::Sign;
  static const std::vector<ComponentLabel> labels = {
      ComponentLabel::make(3, 2, 3, 2),
      ComponentLabel::make(-1, 2, 0, 1),
      ComponentLabel::make(1, 2, 2, 1),
      ComponentLabel::make(1, 1, 3, 1, Sign::plus),
  };
  return labels;
}

const Subspace& PeirceDecomposition::component(const ComponentLabel& label) const {
  auto it = components.find(label);
  if (it == components.end()) throw Error("unknown component label " + label.str());
  return it->second;
}

int PeirceDecomposition::component_dim(const ComponentLabel& label) const {
  return component(label).dim();
}

PeirceDecomposition peirce_decompose(const TripotentContext& ctx) {
  OperatorRelationReport relations = check_operator_relations(ctx);
  if (!relations.core_passed())
    throw DecompositionError("operator relations 1.4-1.8 fail; not a second-order context");

  int n = ctx.L.rows();
  PeirceDecomposition d;
  d.context = ctx;

  using Sign = ComponentLabel::Sign;
  for (const ComponentLabel& label : ComponentLabel::all()) {
    Subspace lam_mu = intersect(kernel(ctx.L.shifted(Scalar(label.lambda))),
                                kernel(ctx.R.shifted(Scalar(label.mu))));
    if (label.sign == Sign::none) {
      d.components.emplace(label, std::move(lam_mu));
      continue;
    }
    Scalar q_eigen = Scalar(label.mu);  // +1/+3 on the plus parts
    if (label.sign == Sign::minus) q_eigen = -q_eigen;
    Subspace part = intersect(lam_mu, kernel(ctx.Q.shifted(q_eigen)));
    // The signed parts must exhaust the unsigned eigen-subspace.
    Scalar other = -q_eigen;
    Subspace other_part = intersect(lam_mu, kernel(ctx.Q.shifted(other)));
    if (part.dim() + other_part.dim() != lam_mu.dim())
      throw DecompositionError("Q does not split " + label.str() + " into signed parts");
    d.components.emplace(label, std::move(part));
  }

  std::vector<Subspace> parts;
  parts.reserve(d.components.size());
  for (const auto& [label, sub] : d.components) parts.push_back(sub);
  DirectSumReport sum = assert_direct_sum(parts, n);
  if (!sum.ok)
    throw DecompositionError("components do not form a direct sum of the space: rank " +
                             std::to_string(sum.achieved_rank) + " of " + std::to_string(n));

  // Q must annihilate the four unsigned components with lambda != 3/2, 1/2-2.
  for (const ComponentLabel& label : {ComponentLabel::make(0, 1, 0, 1),
                                      ComponentLabel::make(1, 2, 1, 2),
                                      ComponentLabel::make(0, 1, 1, 1),
                                      ComponentLabel::make(-1, 2, 0, 1)}) {
    for (const Vector& b : d.component(label).basis())
      if (!ctx.Q.apply(b).is_zero())
        throw DecompositionError("Q does not annihilate " + label.str());
  }

  // tau = (1/sqrt3) Q maps the (3/2,3/2) and (1/2,2) components onto each
  // other; in component coordinates the two directions are mutually inverse.
  const Subspace& u32 = d.component(ComponentLabel::make(3, 2, 3, 2));
  const Subspace& u12 = d.component(ComponentLabel::make(1, 2, 2, 1));
  if (u32.dim() != u12.dim())
    throw DecompositionError("tau pairing dimensions differ");
  Scalar inv_sqrt3 = Scalar::sqrt3().inverse();
  auto tau_matrix = [&](const Subspace& from, const Subspace& to) {
    Matrix m(to.dim(), from.dim());
    for (int c = 0; c < from.dim(); ++c) {
      Vector img = ctx.Q.apply(from.basis()[static_cast<size_t>(c)]);
      img.scale(inv_sqrt3);
      auto coords = to.coordinates_of(img);
      if (!coords) throw DecompositionError("tau image leaves the paired component");
      for (int r = 0; r < to.dim(); ++r) m(r, c) = (*coords)[r];
    }
    return m;
  };
  d.tau = tau_matrix(u32, u12);
  d.tau_back = tau_matrix(u12, u32);
  if (!(d.tau_back * d.tau == Matrix::identity(u32.dim())) ||
      !(d.tau * d.tau_back == Matrix::identity(u12.dim())))
    throw DecompositionError("tau is not an involutive correspondence");

  return d;
}

ClassifyReport classify(const PeirceDecomposition& d, bool weakly_commutative) {
  ClassifyReport report;
  for (const auto& [label, sub] : d.components)
    if (sub.dim() > 0) report.nonzero.push_back({label, sub.dim()});
  if (weakly_commutative) {
    for (const ComponentLabel& label : weakly_forbidden_components())
      if (d.component_dim(label) > 0) report.violations.push_back(label);
  }
  return report;
}

}  // namespace gjts

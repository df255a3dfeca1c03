#include "gjts/left_unit.hpp"

#include <algorithm>

namespace gjts {

namespace {
constexpr auto kPlus = ComponentLabel::Sign::plus;
constexpr auto kMinus = ComponentLabel::Sign::minus;

const std::array<GradedPart, 4> kParts{GradedPart::u11p, GradedPart::u11m, GradedPart::u13p,
                                       GradedPart::u13m};

ComponentLabel part_label(GradedPart p) {
  switch (p) {
    case GradedPart::u11p: return ComponentLabel::make(1, 1, 1, 1, kPlus);
    case GradedPart::u11m: return ComponentLabel::make(1, 1, 1, 1, kMinus);
    case GradedPart::u13p: return ComponentLabel::make(1, 1, 3, 1, kPlus);
    case GradedPart::u13m: return ComponentLabel::make(1, 1, 3, 1, kMinus);
  }
  throw Error("bad graded part");
}
}  // namespace

const char* graded_part_name(GradedPart p) {
  switch (p) {
    case GradedPart::u11p: return "u11p";
    case GradedPart::u11m: return "u11m";
    case GradedPart::u13p: return "u13p";
    case GradedPart::u13m: return "u13m";
  }
  return "?";
}

int GradedSpace::offset(GradedPart p) const {
  int off = 0;
  for (int i = 0; i < static_cast<int>(p); ++i) off += dims[static_cast<size_t>(i)];
  return off;
}

GradedPart GradedSpace::part_of(int index) const {
  int off = 0;
  for (GradedPart p : kParts) {
    off += dim(p);
    if (index < off) return p;
  }
  throw GradingMismatch("coordinate " + std::to_string(index) + " outside the graded space");
}

int GradedSpace::p_of(int index) const {
  GradedPart p = part_of(index);
  return (p == GradedPart::u13p || p == GradedPart::u13m) ? 1 : 0;
}

int GradedSpace::bar_sign(GradedPart p) {
  return (p == GradedPart::u11p || p == GradedPart::u13p) ? 1 : -1;
}

int GradedSpace::tilde_sign(GradedPart p) {
  return (p == GradedPart::u11p || p == GradedPart::u13m) ? 1 : -1;
}

int GradedSpace::r_eigen(GradedPart p) {
  return (p == GradedPart::u13p || p == GradedPart::u13m) ? 3 : 1;
}

int GradedSpace::q_eigen(GradedPart p) {
  switch (p) {
    case GradedPart::u11p: return 1;
    case GradedPart::u11m: return -1;
    case GradedPart::u13p: return 3;
    case GradedPart::u13m: return -3;
  }
  return 0;
}

namespace {
Vector apply_diagonal(const GradedSpace& s, const Vector& x, int (*sign_of)(GradedPart),
                      bool invert = false) {
  Vector out(x.dim());
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i].is_zero()) continue;
    int w = sign_of(s.part_of(i));
    Rational f(1, 1);
    if (invert) {
      f = Rational(1, w);
      f.canonicalize();
    } else {
      f = w;
    }
    out[i] = Scalar(f) * x[i];
  }
  return out;
}
}  // namespace

Vector GradedSpace::bar(const Vector& x) const { return apply_diagonal(*this, x, &bar_sign); }
Vector GradedSpace::tilde(const Vector& x) const { return apply_diagonal(*this, x, &tilde_sign); }
Vector GradedSpace::apply_r(const Vector& x) const { return apply_diagonal(*this, x, &r_eigen); }
Vector GradedSpace::apply_q(const Vector& x) const { return apply_diagonal(*this, x, &q_eigen); }
Vector GradedSpace::apply_q_inv(const Vector& x) const {
  return apply_diagonal(*this, x, &q_eigen, true);
}

Vector GradedSpace::project_u11(const Vector& x) const {
  Vector out(x.dim());
  for (int i = 0; i < x.dim(); ++i)
    if (!x[i].is_zero() && p_of(i) == 0) out[i] = x[i];
  return out;
}

Vector GradedSpace::project_u13(const Vector& x) const {
  Vector out(x.dim());
  for (int i = 0; i < x.dim(); ++i)
    if (!x[i].is_zero() && p_of(i) == 1) out[i] = x[i];
  return out;
}

std::optional<GradedPart> GradedSpace::homogeneous_part(const Vector& x) const {
  std::optional<GradedPart> found;
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i].is_zero()) continue;
    GradedPart p = part_of(i);
    if (found && *found != p) return std::nullopt;
    found = p;
  }
  return found;
}

void CircleAlgebra::set_basis_product(int i, int j, const Vector& value) {
  int n = space_.total();
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw GradingMismatch("circle table index (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside the graded space");
  if (value.dim() != n) throw GradingMismatch("circle table value has wrong dimension");
  if (value.is_zero())
    table_.erase({i, j});
  else
    table_[{i, j}] = value;
}

const Vector* CircleAlgebra::basis_product(int i, int j) const {
  auto it = table_.find({i, j});
  return it == table_.end() ? nullptr : &it->second;
}

Vector CircleAlgebra::circle(const Vector& x, const Vector& y) const {
  int n = space_.total();
  if (x.dim() != n || y.dim() != n) throw DimensionMismatch("circle: dimension mismatch");
  Vector out(n);
  for (const auto& [key, val] : table_) {
    const Scalar& xi = x[key.first];
    if (xi.is_zero()) continue;
    const Scalar& yj = y[key.second];
    if (yj.is_zero()) continue;
    out.axpy(xi * yj, val);
  }
  return out;
}

bool is_left_unit(const TripotentContext& ctx) {
  return ctx.L == Matrix::identity(ctx.L.rows());
}

CircleExtraction extract_circle(const TripotentContext& ctx, const PeirceDecomposition& d) {
  if (!is_left_unit(ctx)) throw NotALeftUnit();
  for (const ComponentLabel& label : ComponentLabel::all()) {
    bool graded = label.signed_pair();
    if (!graded && d.component_dim(label) > 0)
      throw UnexpectedComponent("component " + label.str() + " is nonzero under a left unit");
  }

  GradedFrame frame;
  for (size_t i = 0; i < kParts.size(); ++i) {
    GradedPart p = kParts[i];
    const Subspace& sub = d.component(part_label(p));
    frame.space.dims[i] = sub.dim();
    for (const Vector& b : sub.basis()) frame.basis.push_back(b);
  }
  int n = ctx.system->dim();
  if (frame.space.total() != n)
    throw UnexpectedComponent("graded components do not span the space");
  frame.to_ambient = Matrix::from_columns(n, frame.basis);
  auto inv = inverse(frame.to_ambient);
  if (!inv) throw UnexpectedComponent("graded basis is not invertible");
  frame.to_graded = std::move(*inv);

  CircleAlgebra circle(frame.space);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vector prod = ctx.system->product(frame.basis[static_cast<size_t>(i)], ctx.e,
                                        frame.basis[static_cast<size_t>(j)]);
      circle.set_basis_product(i, j, frame.to_graded_coords(prod));
    }
  return {std::move(circle), std::move(frame)};
}

Involutions involutions(const GradedSpace& space, const Vector& x) {
  Involutions inv;
  inv.bar = space.bar(x);
  inv.tilde = space.tilde(x);
  Vector u13 = space.project_u13(x);
  Vector u11 = space.project_u11(x);
  if (u13.is_zero())
    inv.p = 0;
  else if (u11.is_zero())
    inv.p = 1;
  return inv;
}

std::pair<Vector, Vector> split_circle(const CircleAlgebra& c, const Vector& x, const Vector& y) {
  Vector prod = c.circle(x, y);
  return {c.space().project_u11(prod), c.space().project_u13(prod)};
}

bool CirclePropertyReport::passed() const {
  for (const PropertyCheck& p : properties)
    if (!p.passed) return false;
  return true;
}

bool CirclePropertyReport::converse_gate_passed() const {
  for (const PropertyCheck& p : properties)
    if ((p.id == "3.39" || p.id == "3.40" || p.id == "3.42") && !p.passed) return false;
  return true;
}

const PropertyCheck& CirclePropertyReport::property(const std::string& id) const {
  for (const PropertyCheck& p : properties)
    if (p.id == id) return p;
  throw Error("unknown property id " + id);
}

CirclePropertyReport check_circle_properties(const CircleAlgebra& c) {
  const GradedSpace& s = c.space();
  int n = s.total();

  auto unit = [n](int i) { return Vector::unit(n, i); };
  auto pairwise = [n](auto&& residual_is_zero) -> PropertyCheck {
    PropertyCheck check;
    check.passed = true;
    for (int i = 0; i < n && check.passed; ++i)
      for (int j = 0; j < n && check.passed; ++j)
        if (!residual_is_zero(i, j)) {
          check.passed = false;
          check.witness = {i, j};
        }
    return check;
  };

  CirclePropertyReport report;

  // 3.39: the U11 part is symmetric.
  PropertyCheck p39 = pairwise([&](int i, int j) {
    return s.project_u11(c.circle(unit(i), unit(j))) == s.project_u11(c.circle(unit(j), unit(i)));
  });
  p39.id = "3.39";
  report.properties.push_back(p39);

  // 3.40: (-3)^{p(y)} A3(x,y) = -(-3)^{p(x)} A3(y,x).
  PropertyCheck p40 = pairwise([&](int i, int j) {
    Scalar lhs_w(s.p_of(j) == 1 ? -3 : 1);
    Scalar rhs_w(s.p_of(i) == 1 ? 3 : -1);
    Vector lhs = lhs_w * s.project_u13(c.circle(unit(i), unit(j)));
    Vector rhs = rhs_w * s.project_u13(c.circle(unit(j), unit(i)));
    return lhs == rhs;
  });
  p40.id = "3.40";
  report.properties.push_back(p40);

  // 3.41: the case form of 3.40.
  PropertyCheck p41 = pairwise([&](int i, int j) {
    Vector a3_ij = s.project_u13(c.circle(unit(i), unit(j)));
    Vector a3_ji = s.project_u13(c.circle(unit(j), unit(i)));
    int pi = s.p_of(i), pj = s.p_of(j);
    if (pi == pj) return a3_ij == -a3_ji;
    if (pi == 1 && pj == 0) return a3_ij == Scalar(3) * a3_ji;
    return Scalar(3) * a3_ij == a3_ji;
  });
  p41.id = "3.41";
  report.properties.push_back(p41);

  // 3.42: tilde is an automorphism of the circle product.
  PropertyCheck p42 = pairwise([&](int i, int j) {
    int sign = GradedSpace::tilde_sign(s.part_of(i)) * GradedSpace::tilde_sign(s.part_of(j));
    Vector prod = c.circle(unit(i), unit(j));
    return s.tilde(prod) == Scalar(sign) * prod;
  });
  p42.id = "3.42";
  report.properties.push_back(p42);

  // 3.43: the induced plus/minus grading is respected.
  PropertyCheck p43 = pairwise([&](int i, int j) {
    int sign = GradedSpace::tilde_sign(s.part_of(i)) * GradedSpace::tilde_sign(s.part_of(j));
    Vector prod = c.circle(unit(i), unit(j));
    for (int t = 0; t < n; ++t)
      if (!prod[t].is_zero() && GradedSpace::tilde_sign(s.part_of(t)) != sign) return false;
    return true;
  });
  p43.id = "3.43";
  report.properties.push_back(p43);

  // 3.28: case table for R(u o v).
  PropertyCheck p28 = pairwise([&](int i, int j) {
    Vector uv = c.circle(unit(i), unit(j));
    Vector vu = c.circle(unit(j), unit(i));
    Vector lhs = s.apply_r(uv);
    int pi = s.p_of(i), pj = s.p_of(j);
    if (pi == pj) return lhs == Scalar(2) * uv - vu;
    if (pi == 0 && pj == 1) return lhs == vu;
    return lhs == Scalar(4) * uv - Scalar(3) * vu;
  });
  p28.id = "3.28";
  report.properties.push_back(p28);

  // 3.30: case table for the conjugated product.
  PropertyCheck p30 = pairwise([&](int i, int j) {
    Vector u = unit(i), v = unit(j);
    Vector lhs = s.bar(c.circle(u, v));
    Vector vu = c.circle(s.bar(v), s.bar(u));
    Vector uv = c.circle(s.bar(u), s.bar(v));
    int pi = s.p_of(i), pj = s.p_of(j);
    if (pi == pj) return lhs == vu;
    if (pi == 0 && pj == 1) return lhs == vu - Scalar(2) * uv;
    return lhs == Scalar(-3) * vu + Scalar(2) * uv;
  });
  p30.id = "3.30";
  report.properties.push_back(p30);

  return report;
}

DerivedProducts derived_products(const CircleAlgebra& c, const Vector& x, const Vector& y) {
  const GradedSpace& s = c.space();
  DerivedProducts out;
  out.exy = c.circle(s.bar(x), y);
  Vector qinv_y = s.apply_q_inv(y);
  out.xye = s.apply_r(c.circle(qinv_y, x));
  out.xye += c.circle(x, s.bar(y));
  out.xye -= c.circle(qinv_y, s.apply_r(x));
  return out;
}

bool BilinearEquationReport::expected_passed() const {
  for (const EquationCheck& e : equations)
    if (e.expected && !e.passed) return false;
  return true;
}

bool BilinearEquationReport::all_passed() const {
  for (const EquationCheck& e : equations)
    if (!e.passed) return false;
  return true;
}

const EquationCheck& BilinearEquationReport::equation(const std::string& id) const {
  for (const EquationCheck& e : equations)
    if (e.id == id) return e;
  throw Error("unknown equation id " + id);
}

BilinearEquationReport check_bilinear_equations(const CircleAlgebra& c, bool weakly_commutative) {
  const GradedSpace& s = c.space();
  int n = s.total();

  auto C = [&](const Vector& x, const Vector& y) { return c.circle(x, y); };
  auto E = [&](const Vector& x, const Vector& y) { return c.circle(s.bar(x), y); };
  auto F = [&](const Vector& x, const Vector& y) {
    Vector qinv_y = s.apply_q_inv(y);
    Vector out = s.apply_r(c.circle(qinv_y, x));
    out += c.circle(x, s.bar(y));
    out -= c.circle(qinv_y, s.apply_r(x));
    return out;
  };
  auto R = [&](const Vector& x) { return s.apply_r(x); };
  auto Q = [&](const Vector& x) { return s.apply_q(x); };
  // L is the identity; these combinations keep the general shape readable.
  auto r_2l_1 = [&](const Vector& x) { return R(x) - Scalar(3) * x; };
  auto r_l = [&](const Vector& x) { return R(x) - x; };
  auto rq1 = [&](const Vector& x) { return R(x) + Q(x) + x; };

  using Residual = std::function<Vector(const Vector&, const Vector&)>;
  std::vector<std::pair<std::string, Residual>> eqs;

  eqs.emplace_back("3.1", [&](const Vector& y, const Vector& z) {
    return C(y, z) - C(y, z) + C(y, z) - C(y, z);
  });
  eqs.emplace_back("3.2", [&](const Vector& y, const Vector& v) {
    return F(y, v) - F(y, v) + F(y, v) - F(y, v);
  });
  eqs.emplace_back("3.3", [&](const Vector& v, const Vector& z) {
    return E(v, z) - E(v, z) + E(v, z) - E(v, z);
  });
  eqs.emplace_back("3.4", [&](const Vector& x, const Vector& u) {
    return F(x, u) - R(F(x, u)) + Q(F(u, x)) - F(x, u);
  });
  eqs.emplace_back("3.5", [&](const Vector& x, const Vector& v) {
    return C(x, Q(v)) - F(R(x), v) + Q(E(x, v)) - E(v, R(x));
  });
  eqs.emplace_back("3.6", [&](const Vector& x, const Vector& y) {
    return C(x, R(y)) - R(C(x, y)) + F(y, Q(x)) - C(y, R(x));
  });
  eqs.emplace_back("3.7", [&](const Vector& x, const Vector& z) {
    return C(x, z) - C(R(x), z) + E(Q(x), z) - C(x, z);
  });
  eqs.emplace_back("3.8", [&](const Vector& u, const Vector& y) {
    return E(u, R(y)) - R(E(u, y)) + F(y, R(u)) - C(y, Q(u));
  });
  eqs.emplace_back("3.9", [&](const Vector& u, const Vector& v) {
    return E(u, Q(v)) - F(Q(u), v) + Q(C(u, v)) - E(v, Q(u));
  });
  eqs.emplace_back("3.10", [&](const Vector& u, const Vector& z) {
    return E(u, z) - C(Q(u), z) + E(R(u), z) - E(u, z);
  });
  eqs.emplace_back("3.11", [&](const Vector& a, const Vector& b) {
    return r_2l_1(C(a, b) - C(b, a));
  });
  eqs.emplace_back("3.12", [&](const Vector& a, const Vector& u) {
    Vector w = r_2l_1(a);
    return F(w, u) - E(u, w);
  });
  eqs.emplace_back("3.13", [&](const Vector& a, const Vector& v) {
    return r_l(F(a, v) - E(v, a)) + E(R(v), a) - F(a, R(v)) - E(v, r_l(a));
  });
  eqs.emplace_back("3.14", [&](const Vector& a, const Vector& cc) {
    return C(r_l(a), cc) - Scalar(2) * C(cc, r_l(a)) - F(a, Q(cc)) + E(Q(cc), a);
  });
  eqs.emplace_back("3.53", [&](const Vector& z, const Vector& y) {
    return F(z, y) + E(y, rq1(z)) - E(y, z) - F(rq1(z), y);
  });
  eqs.emplace_back("3.54", [&](const Vector& u, const Vector& z) {
    Vector sym = E(u, z) + E(z, u) + C(u, z) + C(z, u) + F(u, z) + F(z, u);
    return C(z, rq1(u)) + C(u, rq1(z)) + sym - C(rq1(u), z) - C(rq1(z), u) - R(sym);
  });

  BilinearEquationReport report;
  for (const auto& [id, residual] : eqs) {
    EquationCheck check;
    check.id = id;
    check.expected = (id != "3.53" && id != "3.54") || weakly_commutative;
    check.passed = true;
    for (int i = 0; i < n && check.passed; ++i)
      for (int j = 0; j < n && check.passed; ++j) {
        if (!residual(Vector::unit(n, i), Vector::unit(n, j)).is_zero()) {
          check.passed = false;
          check.witness = {i, j};
        }
      }
    report.equations.push_back(std::move(check));
  }
  return report;
}

TripleSystem reconstruct_triple(const CircleAlgebra& c, std::string label) {
  const GradedSpace& s = c.space();
  int n = s.total();
  return TripleSystem::from_product_oracle(n, std::move(label), [&](int i, int j, int k) {
    // (e_i e_j e_k) = (Q^{-1}e_j o e_i) o e_k + e_i o (Q^{-1}e_j o e_k)
    //                 - Q^{-1}e_j o (e_i o e_k); Q^{-1} is diagonal.
    Vector ei = Vector::unit(n, i), ej = Vector::unit(n, j), ek = Vector::unit(n, k);
    Vector qj = s.apply_q_inv(ej);
    Vector out = c.circle(c.circle(qj, ei), ek);
    out += c.circle(ei, c.circle(qj, ek));
    out -= c.circle(qj, c.circle(ei, ek));
    return out;
  });
}

TripleSystem rebase_system(const TripleSystem& graded, const GradedFrame& frame,
                           std::string label) {
  int n = frame.to_ambient.rows();
  if (frame.space.total() != n)
    throw DimensionMismatch("rebase_system: frame is not square");
  std::vector<Vector> graded_units;
  graded_units.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) graded_units.push_back(frame.to_graded.column(i));
  return TripleSystem::from_product_oracle(n, std::move(label), [&](int i, int j, int k) {
    Vector prod = graded.product(graded_units[static_cast<size_t>(i)],
                                 graded_units[static_cast<size_t>(j)],
                                 graded_units[static_cast<size_t>(k)]);
    return frame.to_ambient_coords(prod);
  });
}

std::pair<TripleSystem, SynthesisReport> synthesize_from_circle(
    const GradedSpace& space, const std::map<std::pair<int, int>, Vector>& circle_constants) {
  CircleAlgebra circle(space);
  for (const auto& [key, val] : circle_constants)
    circle.set_basis_product(key.first, key.second, val);

  SynthesisReport report;
  report.properties = check_circle_properties(circle);
  bool weak_shape = space.dim(GradedPart::u13p) == 0;
  report.equations = check_bilinear_equations(circle, weak_shape);

  TripleSystem system = reconstruct_triple(circle, "synthesized");
  report.axiom_1_1 = check_identity_1_1(system, CheckMode::automatic(system.dim()));
  report.axiom_1_2 = check_identity_1_2(system, CheckMode::automatic(system.dim()));

  // A left identity of the circle table, if the linear system u o x = x has
  // a solution; whether it is a genuine left-unit tripotent of the
  // synthesized system is verified, never assumed.
  int n = space.total();
  Matrix a(n * n, n);
  Vector rhs(n * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Vector* prod = circle.basis_product(i, j);
      if (prod != nullptr)
        for (int t = 0; t < n; ++t) a(j * n + t, i) = (*prod)[t];
    }
    rhs[j * n + j] = Scalar(1);
  }
  if (auto u = solve(a, rhs)) {
    report.left_unit_element = *u;
    try {
      TripotentContext ctx = make_context(system, *u);
      report.left_unit_valid = is_left_unit(ctx);
    } catch (const NotATripotent&) {
      report.left_unit_valid = false;
    }
  }
  return {std::move(system), std::move(report)};
}

}  // namespace gjts

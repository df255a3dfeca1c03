#include "gjts/models.hpp"

#include "gjts/errors.hpp"

namespace gjts {

namespace {

using Sign = ComponentLabel::Sign;

ComponentLabel lab(int ln, int ld, int mn, int md, Sign s = Sign::none) {
  return ComponentLabel::make(ln, ld, mn, md, s);
}

std::map<ComponentLabel, int> zero_components() {
  std::map<ComponentLabel, int> m;
  for (const ComponentLabel& l : ComponentLabel::all()) m.emplace(l, 0);
  return m;
}

// Matrix-unit coordinates of the pair model: block 0 holds a (k,n) matrix
// row-major, block 1 a (n,k) matrix row-major.
struct PairIndex {
  int k, n;
  int dim() const { return 2 * k * n; }
  int block(int idx) const { return idx < k * n ? 0 : 1; }
  int row(int idx) const { return block(idx) == 0 ? idx / n : (idx - k * n) / k; }
  int col(int idx) const { return block(idx) == 0 ? idx % n : (idx - k * n) % k; }
  int at1(int r, int c) const { return r * n + c; }
  int at2(int r, int c) const { return k * n + r * k + c; }
};

TripleSystem build_pair_system(int k, int n, std::string label) {
  PairIndex ix{k, n};
  return TripleSystem::from_product_oracle(ix.dim(), std::move(label), [ix](int ia, int ib, int ic) {
    Vector out(ix.dim());
    int ba = ix.block(ia), bb = ix.block(ib), bc = ix.block(ic);
    int ar = ix.row(ia), ac = ix.col(ia);
    int br = ix.row(ib), bc2 = ix.col(ib);
    int cr = ix.row(ic), cc = ix.col(ic);
    // First block: A1 B1^T C1 + C1 B1^T A1 - C1 A2 B2^T.
    if (ba == 0 && bb == 0 && bc == 0) {
      if (ac == bc2 && br == cr) out[ix.at1(ar, cc)] += Scalar(1);
      if (cc == bc2 && br == ar) out[ix.at1(cr, ac)] += Scalar(1);
    }
    if (bc == 0 && ba == 1 && bb == 1) {
      if (cc == ar && ac == bc2) out[ix.at1(cr, br)] -= Scalar(1);
    }
    // Second block: A2 B2^T C2 + C2 B2^T A2 - B1^T A1 C2.
    if (ba == 1 && bb == 1 && bc == 1) {
      if (ac == bc2 && br == cr) out[ix.at2(ar, cc)] += Scalar(1);
      if (cc == bc2 && br == ar) out[ix.at2(cr, ac)] += Scalar(1);
    }
    if (bb == 0 && ba == 0 && bc == 1) {
      if (br == ar && ac == cr) out[ix.at2(bc2, cc)] -= Scalar(1);
    }
    return out;
  });
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw UsageError(msg);
}

}  // namespace

int ModelDescriptor::dim() const {
  int total = 0;
  for (const auto& [label, d] : expected_components) total += d;
  return total;
}

int ModelDescriptor::expected_dim(const ComponentLabel& label) const {
  auto it = expected_components.find(label);
  return it == expected_components.end() ? 0 : it->second;
}

BuiltModel build_akn_ank(int k, int n) {
  require(k >= 1 && k <= n, "akn model requires 1 <= k <= n");
  PairIndex ix{k, n};
  std::string display = "A" + std::to_string(k) + std::to_string(n) + "-A" + std::to_string(n) +
                        std::to_string(k);
  TripleSystem system = build_pair_system(k, n, display);

  Vector e(ix.dim());
  for (int r = 0; r < k; ++r) {
    e[ix.at1(r, r)] = Scalar(1);
    e[ix.at2(r, r)] = Scalar(1);
  }

  ModelDescriptor desc;
  desc.name = "akn";
  desc.display = display;
  desc.params = {{"k", k}, {"n", n}};
  desc.weakly_commutative = false;
  desc.expected_components = zero_components();
  desc.expected_components[lab(1, 1, 1, 1, Sign::plus)] = k * (k + 1) / 2 + k * (n - k);
  desc.expected_components[lab(1, 1, 1, 1, Sign::minus)] = k * (k - 1) / 2 + k * (n - k);
  desc.expected_components[lab(1, 1, 3, 1, Sign::plus)] = k * (k + 1) / 2;
  desc.expected_components[lab(1, 1, 3, 1, Sign::minus)] = k * (k - 1) / 2;
  return {std::move(system), std::move(e), std::move(desc)};
}

BuiltModel build_ann_ann(int l) {
  require(l >= 1, "ann model requires l >= 1");
  int n = 3 * l;
  PairIndex ix{n, n};
  std::string display =
      "A" + std::to_string(n) + std::to_string(n) + "-A" + std::to_string(n) + std::to_string(n);
  TripleSystem system = build_pair_system(n, n, display);

  // Diagonal tripotent with 1/sqrt2 on the outer l-blocks.
  Scalar inv_sqrt2(Rational(0), Rational(1, 2), Rational(0), Rational(0));
  Vector e(ix.dim());
  for (int r = 0; r < l; ++r) e[ix.at1(r, r)] = inv_sqrt2;
  for (int r = l; r < 2 * l; ++r) {
    e[ix.at1(r, r)] = Scalar(1);
    e[ix.at2(r, r)] = Scalar(1);
  }
  for (int r = 2 * l; r < 3 * l; ++r) e[ix.at2(r, r)] = inv_sqrt2;

  ModelDescriptor desc;
  desc.name = "ann";
  desc.display = display;
  desc.params = {{"l", l}};
  desc.weakly_commutative = false;
  desc.expected_components = zero_components();
  desc.expected_components[lab(0, 1, 0, 1)] = l * l;
  desc.expected_components[lab(1, 2, 1, 2)] = 4 * l * l;
  desc.expected_components[lab(1, 1, 1, 1, Sign::plus)] = 3 * l * (l + 1) / 2;
  desc.expected_components[lab(1, 1, 1, 1, Sign::minus)] = 3 * l * (l - 1) / 2;
  desc.expected_components[lab(3, 2, 3, 2)] = 2 * l * l;
  desc.expected_components[lab(-1, 2, 0, 1)] = 2 * l * l;
  desc.expected_components[lab(0, 1, 1, 1)] = 3 * l * l;
  desc.expected_components[lab(1, 2, 2, 1)] = 2 * l * l;
  desc.expected_components[lab(1, 1, 3, 1, Sign::plus)] = l * (l + 1) / 2;
  desc.expected_components[lab(1, 1, 3, 1, Sign::minus)] = l * (l - 1) / 2;
  return {std::move(system), std::move(e), std::move(desc)};
}

BuiltModel build_dnk(int n, int k, int l) {
  require(n >= k && k >= l && l >= 1, "dnk model requires n >= k >= l >= 1");
  int dim = n * k;
  auto at = [k](int r, int c) { return r * k + c; };
  std::string display =
      "D" + std::to_string(n) + std::to_string(k) + "(l=" + std::to_string(l) + ")";
  TripleSystem system =
      TripleSystem::from_product_oracle(dim, display, [n, k, at, dim](int ia, int ib, int ic) {
        Vector out(dim);
        int xr = ia / k, xc = ia % k;
        int yr = ib / k, yc = ib % k;
        int zr = ic / k, zc = ic % k;
        // X Y^T Z + Z Y^T X - Y X^T Z on matrix units.
        if (xc == yc && yr == zr) out[at(xr, zc)] += Scalar(1);
        if (zc == yc && yr == xr) out[at(zr, xc)] += Scalar(1);
        if (yc == xc && xr == zr) out[at(yr, zc)] -= Scalar(1);
        (void)n;
        return out;
      });

  Vector e(dim);
  for (int r = 0; r < l; ++r) e[at(r, r)] = Scalar(1);

  ModelDescriptor desc;
  desc.name = "dnk";
  desc.display = display;
  desc.params = {{"n", n}, {"k", k}, {"l", l}};
  desc.weakly_commutative = true;
  desc.expected_components = zero_components();
  desc.expected_components[lab(0, 1, 0, 1)] = (n - l) * (k - l);
  desc.expected_components[lab(1, 1, 1, 1, Sign::plus)] = l * (l + 1) / 2;
  desc.expected_components[lab(1, 1, 1, 1, Sign::minus)] = (n - l) * l;
  desc.expected_components[lab(0, 1, 1, 1)] = l * (k - l);
  desc.expected_components[lab(1, 1, 3, 1, Sign::minus)] = l * (l - 1) / 2;
  return {std::move(system), std::move(e), std::move(desc)};
}

BuiltModel build_structurable_matrix(int m) {
  require(m >= 1, "structurable model requires m >= 1");
  int dim = m * m;
  auto at = [m](int r, int c) { return r * m + c; };
  std::string display = "M" + std::to_string(m);
  TripleSystem system =
      TripleSystem::from_product_oracle(dim, display, [at, dim, m](int ia, int ib, int ic) {
        Vector out(dim);
        int xr = ia / m, xc = ia % m;
        int yr = ib / m, yc = ib % m;
        int zr = ic / m, zc = ic % m;
        // (x y^T) z + (z y^T) x - (z x^T) y with the transpose involution.
        if (xc == yc && yr == zr) out[at(xr, zc)] += Scalar(1);
        if (zc == yc && yr == xr) out[at(zr, xc)] += Scalar(1);
        if (zc == xc && xr == yr) out[at(zr, yc)] -= Scalar(1);
        return out;
      });

  Vector e(dim);
  for (int r = 0; r < m; ++r) e[at(r, r)] = Scalar(1);

  ModelDescriptor desc;
  desc.name = "structurable";
  desc.display = display;
  desc.params = {{"m", m}};
  desc.weakly_commutative = true;
  desc.expected_components = zero_components();
  desc.expected_components[lab(1, 1, 1, 1, Sign::plus)] = m * (m + 1) / 2;
  desc.expected_components[lab(1, 1, 3, 1, Sign::minus)] = m * (m - 1) / 2;
  return {std::move(system), std::move(e), std::move(desc)};
}

BuiltModel build_model(const std::string& name, const std::vector<int>& params) {
  auto arity = [&](size_t want) {
    require(params.size() == want, "model \"" + name + "\" expects " + std::to_string(want) +
                                       " parameter(s), got " + std::to_string(params.size()));
  };
  if (name == "akn") {
    arity(2);
    return build_akn_ank(params[0], params[1]);
  }
  if (name == "ann") {
    arity(1);
    return build_ann_ann(params[0]);
  }
  if (name == "dnk") {
    arity(3);
    return build_dnk(params[0], params[1], params[2]);
  }
  if (name == "structurable") {
    arity(1);
    return build_structurable_matrix(params[0]);
  }
  throw UsageError("unknown model \"" + name + "\"; available: akn, ann, dnk, structurable");
}

std::vector<std::string> model_names() {
  return {"akn", "ann", "dnk", "structurable"};
}

}  // namespace gjts

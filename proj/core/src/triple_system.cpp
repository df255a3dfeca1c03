#include "gjts/triple_system.hpp"

#include <algorithm>
#include <memory>
#include <random>

#include "gjts/errors.hpp"
#include "gjts/parallel.hpp"

namespace gjts {

SparseVec to_sparse(const Vector& v) {
  SparseVec sv;
  for (int i = 0; i < v.dim(); ++i)
    if (!v[i].is_zero()) sv.push_back({i, v[i]});
  return sv;
}

Vector to_dense(const SparseVec& sv, int dim) {
  Vector v(dim);
  for (const SparseEntry& e : sv) v[e.index] = e.value;
  return v;
}

TripleSystem::TripleSystem(int dim, std::string label)
    : dim_(dim), label_(std::move(label)) {
  if (dim < 1) throw DimensionMismatch("triple system dimension must be positive");
  std::size_t cube = static_cast<std::size_t>(dim) * dim * dim;
  use_flat_ = cube <= (std::size_t{1} << 24);
  if (use_flat_) flat_.assign(cube, nullptr);
}

TripleSystem::TripleSystem(const TripleSystem& o)
    : dim_(o.dim_), label_(o.label_), constants_(o.constants_), use_flat_(o.use_flat_) {
  if (use_flat_) {
    flat_.assign(static_cast<std::size_t>(dim_) * dim_ * dim_, nullptr);
    for (const auto& [key, val] : constants_) flat_[flat_off(key[0], key[1], key[2])] = &val;
  }
}

TripleSystem& TripleSystem::operator=(const TripleSystem& o) {
  if (this == &o) return *this;
  TripleSystem tmp(o);
  *this = std::move(tmp);
  return *this;
}

void TripleSystem::set_basis_product(int i, int j, int k, const Vector& value) {
  if (value.dim() != dim_) throw DimensionMismatch("set_basis_product: value dimension mismatch");
  std::array<int, 3> key{i, j, k};
  SparseVec sv = to_sparse(value);
  if (sv.empty()) {
    constants_.erase(key);
    if (use_flat_) flat_[flat_off(i, j, k)] = nullptr;
    return;
  }
  SparseVec& slot = constants_[key];
  slot = std::move(sv);
  if (use_flat_) flat_[flat_off(i, j, k)] = &slot;
}

const SparseVec* TripleSystem::basis_product(int i, int j, int k) const {
  if (use_flat_) return flat_[flat_off(i, j, k)];
  auto it = constants_.find({i, j, k});
  return it == constants_.end() ? nullptr : &it->second;
}

Vector TripleSystem::product(const Vector& x, const Vector& y, const Vector& z) const {
  if (x.dim() != dim_ || y.dim() != dim_ || z.dim() != dim_)
    throw DimensionMismatch("product: argument dimension mismatch");
  Vector out(dim_);
  for (const auto& [key, val] : constants_) {
    const Scalar& xi = x[key[0]];
    if (xi.is_zero()) continue;
    const Scalar& yj = y[key[1]];
    if (yj.is_zero()) continue;
    const Scalar& zk = z[key[2]];
    if (zk.is_zero()) continue;
    Scalar c = xi * yj;
    c *= zk;
    for (const SparseEntry& e : val) out[e.index] += c * e.value;
  }
  return out;
}

TripleSystem TripleSystem::from_product_oracle(
    int dim, std::string label, const std::function<Vector(int, int, int)>& basis_fn) {
  TripleSystem s(dim, std::move(label));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) s.set_basis_product(i, j, k, basis_fn(i, j, k));
  return s;
}

const char* identity_label(IdentityId id) {
  switch (id) {
    case IdentityId::identity_1_1: return "1.1";
    case IdentityId::identity_1_2: return "1.2";
    case IdentityId::weak_commutativity: return "1.41";
  }
  return "?";
}

namespace {

// Scratch accumulator for residuals of basis-tuple identities. Keeps a dense
// buffer plus the touched-index list so resets cost O(touched).
class Accum {
public:
  explicit Accum(const TripleSystem& s) : s_(s), buf_(static_cast<size_t>(s.dim())) {}

  void reset() {
    for (int i : touched_) buf_[static_cast<size_t>(i)] = Scalar();
    touched_.clear();
  }

  // buf += sign * sum_l w_l (a b e_l)
  void outer_left(int sign, int a, int b, const SparseVec* w) {
    if (w == nullptr) return;
    for (const SparseEntry& e : *w) add(sign, e.value, s_.basis_product(a, b, e.index));
  }
  // buf += sign * sum_l w_l (c e_l f)
  void outer_mid(int sign, int c, const SparseVec* w, int f) {
    if (w == nullptr) return;
    for (const SparseEntry& e : *w) add(sign, e.value, s_.basis_product(c, e.index, f));
  }
  // buf += sign * sum_l w_l (e_l d f)
  void outer_right(int sign, const SparseVec* w, int d, int f) {
    if (w == nullptr) return;
    for (const SparseEntry& e : *w) add(sign, e.value, s_.basis_product(e.index, d, f));
  }

  bool is_zero() const {
    for (int i : touched_)
      if (!buf_[static_cast<size_t>(i)].is_zero()) return false;
    return true;
  }

  Vector residual() const {
    Vector v(s_.dim());
    for (int i : touched_) v[i] = buf_[static_cast<size_t>(i)];
    return v;
  }

  const TripleSystem& system() const { return s_; }

private:
  void add(int sign, const Scalar& coeff, const SparseVec* sv) {
    if (sv == nullptr) return;
    for (const SparseEntry& e : *sv) {
      Scalar term = coeff * e.value;
      if (term.is_zero()) continue;
      Scalar& slot = buf_[static_cast<size_t>(e.index)];
      if (slot.is_zero()) touched_.push_back(e.index);
      if (sign > 0)
        slot += term;
      else
        slot -= term;
    }
  }

  const TripleSystem& s_;
  std::vector<Scalar> buf_;
  std::vector<int> touched_;
};

void accumulate_1_1(Accum& acc, int a, int b, int c, int d, int f) {
  const TripleSystem& s = acc.system();
  acc.outer_left(+1, a, b, s.basis_product(c, d, f));
  acc.outer_right(-1, s.basis_product(a, b, c), d, f);
  acc.outer_mid(+1, c, s.basis_product(b, a, d), f);
  acc.outer_left(-1, c, d, s.basis_product(a, b, f));
}

void accumulate_1_2(Accum& acc, int a, int b, int c, int u, int v) {
  const TripleSystem& s = acc.system();
  const SparseVec* vcu = s.basis_product(v, c, u);
  int x = a, y = b;
  for (int sign : {+1, -1}) {
    const SparseVec* xvy = s.basis_product(x, v, y);
    acc.outer_right(sign, xvy, u, c);
    acc.outer_left(-sign, c, u, xvy);
    acc.outer_left(-sign, c, v, s.basis_product(x, u, y));
    acc.outer_mid(-sign, x, vcu, y);
    std::swap(x, y);
  }
}

void accumulate_weak_comm(Accum& acc, int u, int x, int p, int q, int r) {
  const TripleSystem& s = acc.system();
  const std::array<int, 3> in{p, q, r};
  // Permute slot positions, not values: repeated indices must contribute
  // with multiplicity so the residual equals the multilinear form exactly.
  std::array<int, 3> pos{0, 1, 2};
  do {
    int a = in[static_cast<size_t>(pos[0])];
    int b = in[static_cast<size_t>(pos[1])];
    int c = in[static_cast<size_t>(pos[2])];
    const SparseVec* yyy = s.basis_product(a, b, c);
    const SparseVec* uyy = s.basis_product(u, b, c);
    const SparseVec* yuy = s.basis_product(b, u, c);
    const SparseVec* yyu = s.basis_product(b, c, u);
    acc.outer_left(+1, u, x, yyy);
    acc.outer_left(+1, a, x, uyy);
    acc.outer_left(+1, a, x, yuy);
    acc.outer_left(+1, a, x, yyu);
    acc.outer_right(-1, yyy, x, u);
    acc.outer_right(-1, uyy, x, a);
    acc.outer_right(-1, yuy, x, a);
    acc.outer_right(-1, yyu, x, a);
  } while (std::next_permutation(pos.begin(), pos.end()));
}

// Index arithmetic for exhaustive scans.
std::array<int, 5> decode_base(std::uint64_t t, int dim) {
  std::array<int, 5> tup;
  for (int slot = 4; slot >= 0; --slot) {
    tup[static_cast<size_t>(slot)] = static_cast<int>(t % static_cast<std::uint64_t>(dim));
    t /= static_cast<std::uint64_t>(dim);
  }
  return tup;
}

std::uint64_t pow5(int dim) {
  std::uint64_t d = static_cast<std::uint64_t>(dim);
  return d * d * d * d * d;
}

// Sorted triples y1 <= y2 <= y3 in lexicographic order; the weak
// commutativity residual is symmetric in these, so the reduced enumeration
// is complete.
std::vector<std::array<int, 3>> sorted_triples(int dim) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < dim; ++a)
    for (int b = a; b < dim; ++b)
      for (int c = b; c < dim; ++c) out.push_back({a, b, c});
  return out;
}

std::vector<std::array<int, 5>> sample_basis_tuples(int dim, std::uint64_t seed,
                                                    std::uint64_t count, bool sort_tail) {
  // rng() % dim instead of a distribution: identical streams on every
  // platform, which the byte-identical report contract needs.
  std::mt19937_64 rng(seed);
  std::vector<std::array<int, 5>> tuples;
  tuples.reserve(static_cast<size_t>(count));
  for (std::uint64_t t = 0; t < count; ++t) {
    std::array<int, 5> tup;
    for (int i = 0; i < 5; ++i)
      tup[static_cast<size_t>(i)] = static_cast<int>(rng() % static_cast<std::uint64_t>(dim));
    if (sort_tail) std::sort(tup.begin() + 2, tup.end());
    tuples.push_back(tup);
  }
  return tuples;
}

std::vector<std::vector<Vector>> sample_vector_tuples(int dim, std::uint64_t seed,
                                                      std::uint64_t count) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<std::vector<Vector>> tuples;
  std::uint64_t n = std::clamp<std::uint64_t>(count / 256, 4, 32);
  tuples.reserve(static_cast<size_t>(n));
  for (std::uint64_t t = 0; t < n; ++t) {
    std::vector<Vector> tup;
    for (int i = 0; i < 5; ++i) {
      Vector v(dim);
      for (int j = 0; j < dim; ++j) {
        long num = static_cast<long>(rng() % 5) - 2;
        long den = 1 + static_cast<long>(rng() % 2);
        v[j] = Scalar::fraction(num, den);
      }
      tup.push_back(std::move(v));
    }
    tuples.push_back(std::move(tup));
  }
  return tuples;
}

using BasisEval = void (*)(Accum&, int, int, int, int, int);
using DenseEval = Vector (*)(const TripleSystem&, const Vector&, const Vector&, const Vector&,
                             const Vector&, const Vector&);

Vector dense_1_1(const TripleSystem& s, const Vector& a, const Vector& b, const Vector& c,
                 const Vector& d, const Vector& f) {
  return residual_1_1(s, a, b, c, d, f);
}
Vector dense_1_2(const TripleSystem& s, const Vector& a, const Vector& b, const Vector& c,
                 const Vector& u, const Vector& v) {
  return residual_1_2(s, a, b, c, u, v);
}
Vector dense_weak(const TripleSystem& s, const Vector& u, const Vector& x, const Vector& y1,
                  const Vector& y2, const Vector& y3) {
  return residual_weak_comm_multilinear(s, u, x, y1, y2, y3);
}

IdentityReport run_check(const TripleSystem& s, IdentityId id, CheckMode mode,
                         BasisEval basis_eval, DenseEval dense_eval) {
  IdentityReport report;
  report.id = id;
  report.mode = mode;
  int dim = s.dim();

  // Each worker obtains its own closure (and scratch accumulator).
  auto checker_for = [&](auto tuple_at) {
    return [basis_eval, tuple_at, acc = std::make_shared<Accum>(s)](std::uint64_t t) {
      std::array<int, 5> tup = tuple_at(t);
      acc->reset();
      basis_eval(*acc, tup[0], tup[1], tup[2], tup[3], tup[4]);
      return acc->is_zero();
    };
  };

  if (mode.exhaustive) {
    std::optional<std::uint64_t> fail;
    std::uint64_t total;
    if (id == IdentityId::weak_commutativity) {
      std::vector<std::array<int, 3>> triples = sorted_triples(dim);
      std::uint64_t nt = triples.size();
      total = static_cast<std::uint64_t>(dim) * dim * nt;
      auto tuple_at = [dim, nt, &triples](std::uint64_t t) {
        std::array<int, 3> y = triples[static_cast<size_t>(t % nt)];
        std::uint64_t ux = t / nt;
        return std::array<int, 5>{static_cast<int>(ux / static_cast<std::uint64_t>(dim)),
                                  static_cast<int>(ux % static_cast<std::uint64_t>(dim)),
                                  y[0], y[1], y[2]};
      };
      auto make_checker = [&] { return checker_for(tuple_at); };
      fail = find_first_failure(total, make_checker);
      if (fail) {
        IdentityWitness w;
        std::array<int, 5> tup = tuple_at(*fail);
        w.basis_indices.assign(tup.begin(), tup.end());
        Accum acc(s);
        basis_eval(acc, tup[0], tup[1], tup[2], tup[3], tup[4]);
        w.residual = acc.residual();
        report.witness = std::move(w);
      }
    } else {
      total = pow5(dim);
      auto tuple_at = [dim](std::uint64_t t) { return decode_base(t, dim); };
      auto make_checker = [&] { return checker_for(tuple_at); };
      fail = find_first_failure(total, make_checker);
      if (fail) {
        IdentityWitness w;
        std::array<int, 5> tup = decode_base(*fail, dim);
        w.basis_indices.assign(tup.begin(), tup.end());
        Accum acc(s);
        basis_eval(acc, tup[0], tup[1], tup[2], tup[3], tup[4]);
        w.residual = acc.residual();
        report.witness = std::move(w);
      }
    }
    report.tuples_checked = total;
    report.passed = !fail.has_value();
    return report;
  }

  // Sampled mode: seeded basis tuples first, then a handful of dense
  // small-height vector tuples.
  bool sort_tail = id == IdentityId::weak_commutativity;
  std::vector<std::array<int, 5>> tuples = sample_basis_tuples(dim, mode.seed, mode.count, sort_tail);
  auto tuple_at = [&tuples](std::uint64_t t) { return tuples[static_cast<size_t>(t)]; };
  auto make_checker = [&] { return checker_for(tuple_at); };
  std::optional<std::uint64_t> fail = find_first_failure(tuples.size(), make_checker);
  report.tuples_checked = tuples.size();
  if (fail) {
    IdentityWitness w;
    std::array<int, 5> tup = tuples[static_cast<size_t>(*fail)];
    w.basis_indices.assign(tup.begin(), tup.end());
    Accum acc(s);
    basis_eval(acc, tup[0], tup[1], tup[2], tup[3], tup[4]);
    w.residual = acc.residual();
    report.witness = std::move(w);
    report.passed = false;
    return report;
  }
  std::vector<std::vector<Vector>> vec_tuples = sample_vector_tuples(dim, mode.seed, mode.count);
  for (const std::vector<Vector>& tup : vec_tuples) {
    ++report.tuples_checked;
    Vector r = dense_eval(s, tup[0], tup[1], tup[2], tup[3], tup[4]);
    if (!r.is_zero()) {
      IdentityWitness w;
      w.vectors = tup;
      w.residual = std::move(r);
      report.witness = std::move(w);
      report.passed = false;
      return report;
    }
  }
  report.passed = true;
  return report;
}

}  // namespace

IdentityReport check_identity_1_1(const TripleSystem& s, CheckMode mode) {
  return run_check(s, IdentityId::identity_1_1, mode, &accumulate_1_1, &dense_1_1);
}

IdentityReport check_identity_1_2(const TripleSystem& s, CheckMode mode) {
  return run_check(s, IdentityId::identity_1_2, mode, &accumulate_1_2, &dense_1_2);
}

IdentityReport check_weak_commutativity(const TripleSystem& s, CheckMode mode) {
  return run_check(s, IdentityId::weak_commutativity, mode, &accumulate_weak_comm, &dense_weak);
}

Vector residual_1_1(const TripleSystem& s, const Vector& a, const Vector& b, const Vector& c,
                    const Vector& d, const Vector& f) {
  Vector r = s.product(a, b, s.product(c, d, f));
  r -= s.product(s.product(a, b, c), d, f);
  r += s.product(c, s.product(b, a, d), f);
  r -= s.product(c, d, s.product(a, b, f));
  return r;
}

Vector residual_1_2(const TripleSystem& s, const Vector& a, const Vector& b, const Vector& c,
                    const Vector& u, const Vector& v) {
  auto expr = [&](const Vector& x, const Vector& y) {
    Vector r = s.product(s.product(x, v, y), u, c);
    r -= s.product(c, u, s.product(x, v, y));
    r -= s.product(c, v, s.product(x, u, y));
    r -= s.product(x, s.product(v, c, u), y);
    return r;
  };
  Vector r = expr(a, b);
  r -= expr(b, a);
  return r;
}

Vector residual_weak_comm_quartic(const TripleSystem& s, const Vector& y, const Vector& x) {
  Vector yyy = s.product(y, y, y);
  Vector r = s.product(y, x, yyy);
  r -= s.product(yyy, x, y);
  return r;
}

Vector residual_weak_comm_directional(const TripleSystem& s, const Vector& u, const Vector& x,
                                      const Vector& y) {
  Vector yyy = s.product(y, y, y);
  Vector uyy = s.product(u, y, y);
  Vector yuy = s.product(y, u, y);
  Vector yyu = s.product(y, y, u);
  Vector r = s.product(u, x, yyy);
  r += s.product(y, x, uyy);
  r += s.product(y, x, yuy);
  r += s.product(y, x, yyu);
  r -= s.product(yyy, x, u);
  r -= s.product(uyy, x, y);
  r -= s.product(yuy, x, y);
  r -= s.product(yyu, x, y);
  return r;
}

Vector residual_weak_comm_multilinear(const TripleSystem& s, const Vector& u, const Vector& x,
                                      const Vector& y1, const Vector& y2, const Vector& y3) {
  std::array<const Vector*, 3> y{&y1, &y2, &y3};
  std::array<int, 3> idx{0, 1, 2};
  Vector r(s.dim());
  do {
    const Vector& p = *y[static_cast<size_t>(idx[0])];
    const Vector& q = *y[static_cast<size_t>(idx[1])];
    const Vector& t = *y[static_cast<size_t>(idx[2])];
    Vector pqt = s.product(p, q, t);
    Vector uqt = s.product(u, q, t);
    Vector qut = s.product(q, u, t);
    Vector qtu = s.product(q, t, u);
    r += s.product(u, x, pqt);
    r += s.product(p, x, uqt);
    r += s.product(p, x, qut);
    r += s.product(p, x, qtu);
    r -= s.product(pqt, x, u);
    r -= s.product(uqt, x, p);
    r -= s.product(qut, x, p);
    r -= s.product(qtu, x, p);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return r;
}

}  // namespace gjts

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gjts/linalg.hpp"

namespace gjts {

struct SparseEntry {
  int index;
  Scalar value;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};
/// Sparse vector: entries sorted by index, values nonzero.
using SparseVec = std::vector<SparseEntry>;

SparseVec to_sparse(const Vector& v);
Vector to_dense(const SparseVec& sv, int dim);

/// Finite-dimensional triple system presented by structure constants:
/// (e_i e_j e_k) = sum_l c_{ijk}^l e_l. Triples absent from the table are
/// zero. Immutable after construction apart from set_basis_product, which
/// exists for building and for mutation tests.
class TripleSystem {
public:
  TripleSystem(int dim, std::string label);
  // The flat lookup table points into this object's own map, so copies must
  // rebuild it; moves keep map nodes in place and need no fixup.
  TripleSystem(const TripleSystem& o);
  TripleSystem& operator=(const TripleSystem& o);
  TripleSystem(TripleSystem&&) noexcept = default;
  TripleSystem& operator=(TripleSystem&&) noexcept = default;

  int dim() const { return dim_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  void set_basis_product(int i, int j, int k, const Vector& value);
  /// nullptr means the zero vector.
  const SparseVec* basis_product(int i, int j, int k) const;

  /// Trilinear extension of the structure constants; exact.
  Vector product(const Vector& x, const Vector& y, const Vector& z) const;

  const std::map<std::array<int, 3>, SparseVec>& constants() const { return constants_; }

  /// Builds the table by evaluating a trilinear product on all basis triples;
  /// the callback receives basis indices and returns (e_i e_j e_k).
  static TripleSystem from_product_oracle(
      int dim, std::string label, const std::function<Vector(int, int, int)>& basis_fn);

  /// Structural equality of dimension and constant table (labels ignored).
  friend bool operator==(const TripleSystem& a, const TripleSystem& b) {
    return a.dim_ == b.dim_ && a.constants_ == b.constants_;
  }

private:
  std::size_t flat_off(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + static_cast<std::size_t>(k);
  }

  int dim_;
  std::string label_;
  std::map<std::array<int, 3>, SparseVec> constants_;
  bool use_flat_;
  std::vector<const SparseVec*> flat_;
};

enum class IdentityId { identity_1_1, identity_1_2, weak_commutativity };
/// Public label used in reports: "1.1", "1.2", "1.41".
const char* identity_label(IdentityId id);

struct CheckMode {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;

  static CheckMode exhaustive_mode() { return CheckMode{}; }
  static CheckMode sampled(std::uint64_t seed, std::uint64_t count) {
    return CheckMode{false, seed, count};
  }
  /// Exhaustive up to dimension 16, sampled (seed 1, 10000 tuples) above.
  static CheckMode automatic(int dim) {
    return dim <= 16 ? exhaustive_mode() : sampled(1, 10000);
  }
  friend bool operator==(const CheckMode&, const CheckMode&) = default;
};

struct IdentityWitness {
  /// Basis-tuple witness; empty when the failure came from a sampled
  /// vector tuple, in which case `vectors` holds it.
  std::vector<int> basis_indices;
  std::vector<Vector> vectors;
  Vector residual;
};

struct IdentityReport {
  IdentityId id;
  CheckMode mode;
  bool passed = false;
  std::uint64_t tuples_checked = 0;
  std::optional<IdentityWitness> witness;
};

/// Defining identity of the variety, checked over all (or sampled) basis
/// quintuples (a,b,c,d,f). Multilinearity makes the exhaustive basis pass a
/// proof for all vectors. Sampled mode additionally evaluates a few random
/// small-height dense vector tuples.
IdentityReport check_identity_1_1(const TripleSystem& s, CheckMode mode);
/// Second defining identity, alternated on its first two arguments,
/// checked over basis quintuples (a,b,c,u,v).
IdentityReport check_identity_1_2(const TripleSystem& s, CheckMode mode);
/// Weak commutativity, verified through the full multilinearization of the
/// polarized form: the three cubic slots are symmetrized so that the checked
/// identity is multilinear in (u,x,y1,y2,y3) and basis exhaustion is
/// complete in characteristic zero.
IdentityReport check_weak_commutativity(const TripleSystem& s, CheckMode mode);

/// Residual evaluators on arbitrary vectors (zero iff the identity holds on
/// that tuple).
Vector residual_1_1(const TripleSystem& s, const Vector& a, const Vector& b, const Vector& c,
                    const Vector& d, const Vector& f);
Vector residual_1_2(const TripleSystem& s, const Vector& a, const Vector& b, const Vector& c,
                    const Vector& u, const Vector& v);
/// Unpolarized weak commutativity (y x (yyy)) - ((yyy) x y).
Vector residual_weak_comm_quartic(const TripleSystem& s, const Vector& y, const Vector& x);
/// Once-polarized weak commutativity, linear in u, cubic in y.
Vector residual_weak_comm_directional(const TripleSystem& s, const Vector& u, const Vector& x,
                                      const Vector& y);
/// Fully multilinearized weak commutativity in (u, x, y1, y2, y3).
Vector residual_weak_comm_multilinear(const TripleSystem& s, const Vector& u, const Vector& x,
                                      const Vector& y1, const Vector& y2, const Vector& y3);

}  // namespace gjts

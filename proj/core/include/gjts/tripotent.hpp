#pragma once

#include <map>
#include <string>
#include <vector>

#include "gjts/errors.hpp"
#include "gjts/triple_system.hpp"

namespace gjts {

/// The supplied element fails (eee) = e. Carries the exact residual.
class NotATripotent : public Error {
public:
  explicit NotATripotent(Vector residual)
      : Error("element is not a tripotent: (eee) - e != 0"), residual_(std::move(residual)) {}
  const Vector& residual() const { return residual_; }

private:
  Vector residual_;
};

/// The simultaneous eigen-subspaces did not assemble into the expected
/// decomposition; the input is not the context of a second-order system.
class DecompositionError : public Error {
public:
  using Error::Error;
};

/// One of the ten admissible (lambda, mu, sign) component labels. The sign
/// refines the labels (1,1) and (1,3); elsewhere it is `none`.
struct ComponentLabel {
  enum class Sign { plus, minus, none };

  Rational lambda;
  Rational mu;
  Sign sign = Sign::none;

  /// The ten labels in canonical report order: ascending (lambda, mu),
  /// with + before - on the signed pairs.
  static const std::vector<ComponentLabel>& all();
  static ComponentLabel make(int lam_num, int lam_den, int mu_num, int mu_den,
                             Sign sign = Sign::none);

  std::string lambda_str() const;
  std::string mu_str() const;
  /// Human-readable form, e.g. "U_{1,1}^+" or "U_{3/2,3/2}".
  std::string str() const;
  bool signed_pair() const { return sign != Sign::none; }

  friend bool operator==(const ComponentLabel& a, const ComponentLabel& b) {
    return cmp(a.lambda, b.lambda) == 0 && cmp(a.mu, b.mu) == 0 && a.sign == b.sign;
  }
  friend bool operator<(const ComponentLabel& a, const ComponentLabel& b) {
    if (int c = cmp(a.lambda, b.lambda); c != 0) return c < 0;
    if (int c = cmp(a.mu, b.mu); c != 0) return c < 0;
    return static_cast<int>(a.sign) < static_cast<int>(b.sign);
  }
};

/// A verified tripotent with the matrices of x -> (eex), (xee), (exe).
struct TripotentContext {
  const TripleSystem* system = nullptr;
  Vector e;
  Matrix L, R, Q;
};

/// Verifies (eee) = e exactly (throws NotATripotent with the residual
/// otherwise) and assembles the three operator matrices.
TripotentContext make_context(const TripleSystem& s, Vector e);

struct RelationCheck {
  std::string id;
  bool passed = false;
  int residual_entries = 0;
};

/// Operator relations split into the core set, valid in every second-order
/// system, and the weak-commutativity consequences reported separately.
struct OperatorRelationReport {
  std::vector<RelationCheck> core;  // 1.4, 1.5, 1.6, 1.7, 1.8, 1.8'
  std::vector<RelationCheck> weak;  // 1.42, 1.43
  bool core_passed() const;
  bool weak_passed() const;
};

OperatorRelationReport check_operator_relations(const TripotentContext& ctx);

struct PeirceDecomposition {
  TripotentContext context;
  std::map<ComponentLabel, Subspace> components;
  /// Coordinate matrix of (1/sqrt3) Q from U_{3/2,3/2} to U_{1/2,2}, and its
  /// inverse direction; their products are identities.
  Matrix tau;
  Matrix tau_back;

  const Subspace& component(const ComponentLabel& label) const;
  int component_dim(const ComponentLabel& label) const;
};

/// Simultaneous eigen-decomposition for the verified tripotent: the eight
/// (lambda, mu) kernels intersected, the signed splits carved out by the
/// kernels of Q -+ 1 and Q -+ 3, and the tau pairing. Throws
/// DecompositionError if the pieces fail to exhaust the space or the
/// operator action on any piece is wrong.
PeirceDecomposition peirce_decompose(const TripotentContext& ctx);

struct ClassifyEntry {
  ComponentLabel label;
  int dim = 0;
};

struct ClassifyReport {
  std::vector<ClassifyEntry> nonzero;
  /// Components that must vanish in the weakly commutative case but did not.
  std::vector<ComponentLabel> violations;
  bool ok() const { return violations.empty(); }
};

ClassifyReport classify(const PeirceDecomposition& d, bool weakly_commutative);

/// The four components forced to vanish by weak commutativity.
const std::vector<ComponentLabel>& weakly_forbidden_components();

}  // namespace gjts

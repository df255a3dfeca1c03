#pragma once

#include <string>
#include <vector>

#include "gjts/tripotent.hpp"
#include "gjts/triple_system.hpp"

namespace gjts {

/// What a built-in model promises about itself: the expected component
/// dimensions of its canonical tripotent's decomposition and whether the
/// system is weakly commutative.
struct ModelDescriptor {
  std::string name;     // registry name: akn | ann | dnk | structurable
  std::string display;  // e.g. "A23-A32"
  std::vector<std::pair<std::string, int>> params;
  std::map<ComponentLabel, int> expected_components;  // all ten labels
  bool weakly_commutative = false;

  int dim() const;
  int expected_dim(const ComponentLabel& label) const;
};

struct BuiltModel {
  TripleSystem system;
  Vector tripotent;
  ModelDescriptor descriptor;
};

/// Pairs of a (k,n) and an (n,k) matrix, 1 <= k <= n; dimension 2kn. The
/// canonical tripotent stacks identity blocks. Not weakly commutative.
BuiltModel build_akn_ank(int k, int n);

/// The square pair model at n = 3l whose canonical tripotent needs 1/sqrt2
/// entries and meets all ten components; dimension 18 l^2.
BuiltModel build_ann_ann(int l);

/// n x k matrices with (XYZ) = XY^T Z + ZY^T X - YX^T Z, n >= k >= l >= 1;
/// the tripotent is the order-l identity block. Weakly commutative.
BuiltModel build_dnk(int n, int k, int l);

/// m x m matrices under the triple product derived from matrix
/// multiplication with the transpose involution; the tripotent is the unit
/// matrix, a left unit.
BuiltModel build_structurable_matrix(int m);

/// CLI registry: akn(k,n), ann(l), dnk(n,k,l), structurable(m).
BuiltModel build_model(const std::string& name, const std::vector<int>& params);
std::vector<std::string> model_names();

}  // namespace gjts

#pragma once

#include <optional>
#include <vector>

#include "gjts/scalar.hpp"

namespace gjts {

/// Fixed-length coordinate vector over Q(sqrt2, sqrt3).
class Vector {
public:
  Vector() = default;
  explicit Vector(int dim) : e_(static_cast<size_t>(dim)) {}
  static Vector unit(int dim, int i) {
    Vector v(dim);
    v[i] = Scalar(1);
    return v;
  }

  int dim() const { return static_cast<int>(e_.size()); }
  Scalar& operator[](int i) { return e_[static_cast<size_t>(i)]; }
  const Scalar& operator[](int i) const { return e_[static_cast<size_t>(i)]; }

  bool is_zero() const;
  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  /// *this += s * o
  Vector& axpy(const Scalar& s, const Vector& o);
  Vector& scale(const Scalar& s);

  friend Vector operator+(Vector x, const Vector& y) { return x += y; }
  friend Vector operator-(Vector x, const Vector& y) { return x -= y; }
  friend Vector operator*(const Scalar& s, Vector x) { return x.scale(s); }
  friend Vector operator-(Vector x) { return x.scale(Scalar(-1)); }
  friend bool operator==(const Vector&, const Vector&) = default;

private:
  std::vector<Scalar> e_;
};

/// Dense row-major matrix over Q(sqrt2, sqrt3).
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}
  static Matrix identity(int n);
  static Matrix from_columns(int ambient_dim, const std::vector<Vector>& columns);
  static Matrix from_rows(const std::vector<Vector>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  int nonzero_count() const;
  Matrix transposed() const;
  Vector apply(const Vector& v) const;
  Vector row(int r) const;
  Vector column(int c) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
  friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const Scalar& s, Matrix m);
  /// m - s*I
  Matrix shifted(const Scalar& s) const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  int rows_, cols_;
  std::vector<Scalar> e_;
};

/// In-place reduced row echelon form (pivot entries 1, pivot columns cleared,
/// zero rows trailing). Returns the pivot columns in order.
std::vector<int> rref(Matrix& m);
int rank(Matrix m);

/// Linear subspace held by its unique reduced-row-echelon basis, so equality
/// of subspaces is literal equality of representations.
class Subspace {
public:
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim) {}
  Subspace(int ambient_dim, const std::vector<Vector>& spanning);
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const;
  /// Coordinates of v in the canonical basis, if v lies in the subspace.
  std::optional<Vector> coordinates_of(const Vector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

private:
  int ambient_;
  std::vector<Vector> basis_;  // RREF rows, pivots ascending
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
Subspace intersect(const Subspace& s1, const Subspace& s2);

struct DirectSumReport {
  bool ok = false;
  int ambient_dim = 0;
  int total_component_dim = 0;
  int achieved_rank = 0;
};

/// Checks that the parts span the whole space independently: the concatenated
/// bases must have rank equal to both the dimension sum and the ambient
/// dimension. Failure is a value, not an error.
DirectSumReport assert_direct_sum(const std::vector<Subspace>& parts, int ambient_dim);

/// Exact solution of a*x = b. Empty optional when the system is inconsistent;
/// free variables (if any) are set to zero.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Inverse of a square invertible matrix; empty optional when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace gjts

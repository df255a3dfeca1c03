#include "gjts/linalg.hpp"

#include "gjts/errors.hpp"

namespace gjts {

bool Vector::is_zero() const {
  for (const Scalar& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

Vector& Vector::operator+=(const Vector& o) {
  if (dim() != o.dim()) throw DimensionMismatch("vector add: dimension mismatch");
  for (int i = 0; i < dim(); ++i) e_[static_cast<size_t>(i)] += o[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (dim() != o.dim()) throw DimensionMismatch("vector sub: dimension mismatch");
  for (int i = 0; i < dim(); ++i) e_[static_cast<size_t>(i)] -= o[i];
  return *this;
}

Vector& Vector::axpy(const Scalar& s, const Vector& o) {
  if (dim() != o.dim()) throw DimensionMismatch("vector axpy: dimension mismatch");
  if (s.is_zero()) return *this;
  for (int i = 0; i < dim(); ++i) {
    if (!o[i].is_zero()) e_[static_cast<size_t>(i)] += s * o[i];
  }
  return *this;
}

Vector& Vector::scale(const Scalar& s) {
  for (Scalar& x : e_) x = s * x;
  return *this;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_columns(int ambient_dim, const std::vector<Vector>& columns) {
  Matrix m(ambient_dim, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (columns[static_cast<size_t>(c)].dim() != ambient_dim)
      throw DimensionMismatch("from_columns: column dimension mismatch");
    for (int r = 0; r < ambient_dim; ++r) m(r, c) = columns[static_cast<size_t>(c)][r];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (rows[static_cast<size_t>(r)].dim() != cols)
      throw DimensionMismatch("from_rows: row dimension mismatch");
    for (int c = 0; c < cols; ++c) m(r, c) = rows[static_cast<size_t>(r)][c];
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

int Matrix::nonzero_count() const {
  int n = 0;
  for (const Scalar& s : e_)
    if (!s.is_zero()) ++n;
  return n;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.dim() != cols_) throw DimensionMismatch("matrix apply: dimension mismatch");
  Vector out(rows_);
  for (int r = 0; r < rows_; ++r) {
    Scalar acc;
    for (int c = 0; c < cols_; ++c) {
      const Scalar& m = (*this)(r, c);
      if (!m.is_zero() && !v[c].is_zero()) acc += m * v[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

Vector Matrix::row(int r) const {
  Vector v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

Vector Matrix::column(int c) const {
  Vector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add: shape mismatch");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sub: shape mismatch");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols() != y.rows()) throw DimensionMismatch("matrix mul: shape mismatch");
  Matrix out(x.rows(), y.cols());
  for (int r = 0; r < x.rows(); ++r) {
    for (int k = 0; k < x.cols(); ++k) {
      const Scalar& xk = x(r, k);
      if (xk.is_zero()) continue;
      for (int c = 0; c < y.cols(); ++c) {
        if (!y(k, c).is_zero()) out(r, c) += xk * y(k, c);
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& s, Matrix m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m(r, c) = s * m(r, c);
  return m;
}

Matrix Matrix::shifted(const Scalar& s) const {
  if (rows_ != cols_) throw DimensionMismatch("shifted: matrix not square");
  Matrix out = *this;
  for (int i = 0; i < rows_; ++i) out(i, i) -= s;
  return out;
}

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pr = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (!m(r, col).is_zero()) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(pr, c));
    Scalar inv = m(row, col).inverse();
    for (int c = col; c < m.cols(); ++c) m(row, c) = inv * m(row, c);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar factor = m(r, col);
      for (int c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(Matrix m) {
  return static_cast<int>(rref(m).size());
}

Subspace::Subspace(int ambient_dim, const std::vector<Vector>& spanning) : ambient_(ambient_dim) {
  for (const Vector& v : spanning)
    if (v.dim() != ambient_dim) throw DimensionMismatch("subspace: spanning vector dimension mismatch");
  if (spanning.empty()) return;
  Matrix m = Matrix::from_rows(spanning, ambient_dim);
  std::vector<int> pivots = rref(m);
  basis_.reserve(pivots.size());
  for (size_t r = 0; r < pivots.size(); ++r) basis_.push_back(m.row(static_cast<int>(r)));
}

Subspace Subspace::full(int ambient_dim) {
  Subspace s(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) s.basis_.push_back(Vector::unit(ambient_dim, i));
  return s;
}

bool Subspace::contains(const Vector& v) const {
  return coordinates_of(v).has_value();
}

std::optional<Vector> Subspace::coordinates_of(const Vector& v) const {
  if (v.dim() != ambient_) throw DimensionMismatch("coordinates_of: dimension mismatch");
  Vector rem = v;
  Vector coords(dim());
  for (int b = 0; b < dim(); ++b) {
    // Basis rows are RREF: locate each row's pivot (first nonzero, value 1).
    const Vector& row = basis_[static_cast<size_t>(b)];
    int pivot = -1;
    for (int c = 0; c < ambient_; ++c) {
      if (!row[c].is_zero()) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0) continue;
    if (rem[pivot].is_zero()) continue;
    coords[b] = rem[pivot];
    rem.axpy(-coords[b], row);
  }
  if (!rem.is_zero()) return std::nullopt;
  return coords;
}

Subspace kernel(const Matrix& m) {
  Matrix r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<Vector> basis;
  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    Vector v(m.cols());
    v[free_col] = Scalar(1);
    for (size_t prow = 0; prow < pivots.size(); ++prow)
      v[pivots[prow]] = -r(static_cast<int>(prow), free_col);
    basis.push_back(std::move(v));
  }
  return Subspace(m.cols(), basis);
}

Subspace image(const Matrix& m) {
  std::vector<Vector> cols;
  cols.reserve(static_cast<size_t>(m.cols()));
  for (int c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace(m.rows(), cols);
}

Subspace intersect(const Subspace& s1, const Subspace& s2) {
  if (s1.ambient_dim() != s2.ambient_dim())
    throw DimensionMismatch("intersect: ambient dimension mismatch");
  int n = s1.ambient_dim();
  if (s1.dim() == 0 || s2.dim() == 0) return Subspace(n);
  // Solve b1*a + b2*b = 0; the b1*a parts span the intersection.
  std::vector<Vector> cols;
  cols.reserve(static_cast<size_t>(s1.dim() + s2.dim()));
  for (const Vector& v : s1.basis()) cols.push_back(v);
  for (const Vector& v : s2.basis()) cols.push_back(v);
  Subspace null = kernel(Matrix::from_columns(n, cols));
  std::vector<Vector> basis;
  for (const Vector& w : null.basis()) {
    Vector v(n);
    for (int i = 0; i < s1.dim(); ++i) v.axpy(w[i], s1.basis()[static_cast<size_t>(i)]);
    if (!v.is_zero()) basis.push_back(std::move(v));
  }
  return Subspace(n, basis);
}

DirectSumReport assert_direct_sum(const std::vector<Subspace>& parts, int ambient_dim) {
  DirectSumReport report;
  report.ambient_dim = ambient_dim;
  std::vector<Vector> all;
  for (const Subspace& s : parts) {
    if (s.ambient_dim() != ambient_dim)
      throw DimensionMismatch("assert_direct_sum: ambient dimension mismatch");
    report.total_component_dim += s.dim();
    for (const Vector& v : s.basis()) all.push_back(v);
  }
  report.achieved_rank = all.empty() ? 0 : rank(Matrix::from_rows(all, ambient_dim));
  report.ok = report.achieved_rank == report.total_component_dim &&
              report.achieved_rank == ambient_dim;
  return report;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.dim()) throw DimensionMismatch("solve: dimension mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (size_t prow = 0; prow < pivots.size(); ++prow)
    x[pivots[prow]] = aug(static_cast<int>(prow), a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse: matrix not square");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(1);
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

}  // namespace gjts

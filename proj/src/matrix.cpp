#include "hodge/matrix.hpp"

#include <sstream>

#include "hodge/errors.hpp"

namespace hodge {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t r, std::size_t c) {
  Matrix m(n, n);
  m(r, c) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t k = 0; k < diag.size(); ++k) m(k, k) = diag[k];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length does not match column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("column length does not match row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::conj() const {
  Matrix m(*this);
  for (auto& x : m.data_)
    if (!x.is_real()) x = x.conj();
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_real() const {
  for (const auto& x : data_)
    if (!x.is_real()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix m(*this);
  for (auto& x : m.data_)
    if (!x.is_zero()) x = -x;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Scalar& y = b(k, c);
        if (!y.is_zero()) out(r, c) += x * y;
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(r, k).is_zero() && !v[k].is_zero()) out[r] += a(r, k) * v[k];
  return out;
}

Matrix Matrix::pow(unsigned exponent) const {
  if (!is_square()) throw DimensionError("power of a non-square matrix");
  Matrix result = identity(rows_);
  for (unsigned k = 0; k < exponent; ++k) result = result * (*this);
  return result;
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) throw DimensionError("stacking matrices with different widths");
  Matrix m(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return m;
}

Matrix Matrix::augmented(const Matrix& right) const {
  if (rows_ != right.rows_) throw DimensionError("augmenting matrices with different heights");
  Matrix m(rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) m(r, cols_ + c) = right(r, c);
  }
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
  Matrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

EchelonForm echelon(const Matrix& input) {
  Matrix m = input;
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != lead)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(lead, k));
    if (m(lead, c) != Scalar(1)) {
      Scalar inv = Scalar(1) / m(lead, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!m(lead, k).is_zero()) m(lead, k) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, c).is_zero()) continue;
      Scalar f = m(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!m(lead, k).is_zero()) m(r, k) -= f * m(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

Matrix rref(const Matrix& m) { return echelon(m).matrix; }

std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Scalar determinant(const Matrix& input) {
  if (!input.is_square()) throw DimensionError("determinant of a non-square matrix");
  Matrix m = input;
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      Scalar f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k)
        if (!m(c, k).is_zero()) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  EchelonForm e = echelon(m.augmented(Matrix::identity(n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw PreconditionError("matrix is singular");
  return e.matrix.block(0, n, n, n);
}

bool solve(const Matrix& a, const Matrix& b, Matrix& x) {
  if (a.rows() != b.rows()) throw DimensionError("solve: right-hand side height mismatch");
  const std::size_t n = a.cols();
  EchelonForm e = echelon(a.augmented(b));
  for (std::size_t p : e.pivots)
    if (p >= n) return false;
  x = Matrix(n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) x(e.pivots[r], c) = e.matrix(r, n + c);
  return true;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

int nilpotency_index(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("nilpotency index of a non-square matrix");
  Matrix p = m;
  for (std::size_t k = 0; k <= m.rows(); ++k) {
    if (p.is_zero()) return static_cast<int>(k);
    p = p * m;
  }
  return -1;
}

Matrix exp_nilpotent(const Matrix& m) {
  int index = nilpotency_index(m);
  if (index < 0) throw PreconditionError("exp_nilpotent: matrix is not nilpotent");
  Matrix result = Matrix::identity(m.rows());
  Matrix term = Matrix::identity(m.rows());
  for (int k = 1; k <= index; ++k) {
    term = term * m;
    term *= Scalar(Rational(1, k));
    result += term;
  }
  return result;
}

Matrix log_unipotent_matrix(const Matrix& u) {
  if (!u.is_square()) throw DimensionError("log of a non-square matrix");
  const std::size_t n = u.rows();
  Matrix a = Matrix::identity(n) - u;
  if (nilpotency_index(a) < 0) throw PreconditionError("log_unipotent_matrix: matrix is not unipotent");
  Matrix term = a;
  Matrix sum(n, n);
  for (long k = 1; !term.is_zero(); ++k) {
    sum -= term * Scalar(Rational(1, k));
    term = term * a;
  }
  return sum;
}

bool is_hermitian(const Matrix& h) { return h.is_square() && h.transpose().conj() == h; }

bool is_positive_definite(const Matrix& h) {
  if (!is_hermitian(h)) return false;
  Matrix m = h;
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Scalar pivot = m(k, k);
    if (!pivot.is_real() || sgn(pivot.re()) <= 0) return false;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      Scalar f = m(r, k) / pivot;
      for (std::size_t c = k; c < n; ++c)
        if (!m(k, c).is_zero()) m(r, c) -= f * m(k, c);
    }
  }
  return true;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("dot product length mismatch");
  Scalar s;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
  return s;
}

Vector conj(const Vector& v) {
  Vector out(v);
  for (auto& x : out) x = x.conj();
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace hodge

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hodge/scalar.hpp"

namespace hodge {

using Vector = std::vector<Scalar>;

/// Dense matrix over Q(i). Matrices act on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  // Elementary matrix with a single 1 at (r, c).
  static Matrix unit(std::size_t n, std::size_t r, std::size_t c);
  static Matrix diagonal(std::span<const Scalar> diag);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_vectors() const;

  Matrix transpose() const;
  Matrix conj() const;
  bool is_zero() const;
  bool is_real() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  Matrix operator-() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix pow(unsigned exponent) const;
  // Vertical and horizontal concatenation.
  Matrix stacked(const Matrix& below) const;
  Matrix augmented(const Matrix& right) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Row-reduced echelon form together with its pivot columns.
struct EchelonForm {
  Matrix matrix;
  std::vector<std::size_t> pivots;
};

EchelonForm echelon(const Matrix& m);
/// Unique reduced row-echelon form; zero rows are kept so the shape is unchanged.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
bool is_invertible(const Matrix& m);
Scalar determinant(const Matrix& m);
/// Throws PreconditionError when singular.
Matrix inverse(const Matrix& m);
/// Solves a * x = b for one particular x (free variables set to zero), or
/// returns false when the system is inconsistent.
bool solve(const Matrix& a, const Matrix& b, Matrix& x);

Matrix commutator(const Matrix& a, const Matrix& b);

/// Smallest k with m^(k+1) == 0, or -1 if m is not nilpotent.
int nilpotency_index(const Matrix& m);
/// exp(m) for nilpotent m, as a finite series. Throws PreconditionError otherwise.
Matrix exp_nilpotent(const Matrix& m);
/// log(u) for unipotent u, as -sum_{k>=1} (I - u)^k / k. Throws PreconditionError otherwise.
Matrix log_unipotent_matrix(const Matrix& u);

/// Hermitian matrix test (h equals its conjugate transpose).
bool is_hermitian(const Matrix& h);
/// Positive definiteness of a Hermitian matrix via the pivots of an LDL^H
/// elimination; all pivots must be real and positive.
bool is_positive_definite(const Matrix& h);

Scalar dot(const Vector& a, const Vector& b);
Vector conj(const Vector& v);
bool is_zero(const Vector& v);

}  // namespace hodge

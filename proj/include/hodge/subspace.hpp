#pragma once

#include <cstddef>
#include <vector>

#include "hodge/matrix.hpp"

namespace hodge {

/// Subspace of Q(i)^n, stored as the nonzero rows of its reduced row-echelon
/// basis. Equal subspaces therefore have identical representations.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient);
  /// Span of the rows of `rows`.
  static Subspace span(const Matrix& rows);
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient);
  /// Span of the coordinate vectors e_k for k in `indices`.
  static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& indices);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  /// Rows form the canonical basis.
  const Matrix& basis() const { return basis_; }
  std::vector<Vector> vectors() const { return basis_.row_vectors(); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  bool is_real() const { return basis_.is_real(); }

  Subspace conj() const;
  /// Image { M v : v in this }.
  Subspace mapped(const Matrix& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
};

/// { v : M v = 0 }.
Subspace kernel(const Matrix& m);
/// Column space of M.
Subspace image(const Matrix& m);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// { v in domain : M v in target }.
Subspace preimage(const Matrix& m, const Subspace& target, const Subspace& domain);
/// Orthogonal complement for the plain (bilinear, non-Hermitian) dot product.
Subspace dot_complement(const Subspace& a);
/// Representatives of a basis of B/A, chosen greedily from B's canonical basis.
/// Throws PreconditionError unless A is contained in B.
Matrix quotient_basis(const Subspace& a, const Subspace& b);

/// A subspace of a quotient top/floor, represented by its preimage in `top`.
struct QuotientSubspace {
  Subspace lift;   // floor <= lift <= top
  Subspace floor;
  std::size_t dim() const { return lift.dim() - floor.dim(); }
};

enum class Symmetry { kSymmetric, kAntisymmetric };

/// Bilinear form S(u, v) = u^T G v.
class BilinearForm {
 public:
  BilinearForm() = default;
  /// Throws PreconditionError if `gram` does not have the declared symmetry.
  BilinearForm(Matrix gram, Symmetry symmetry);

  const Matrix& gram() const { return gram_; }
  Symmetry symmetry() const { return symmetry_; }
  std::size_t dim() const { return gram_.rows(); }
  Scalar operator()(const Vector& u, const Vector& v) const;
  bool is_nondegenerate() const;
  BilinearForm scaled(const Scalar& c) const { return BilinearForm(gram_ * c, symmetry_); }

 private:
  Matrix gram_;
  Symmetry symmetry_ = Symmetry::kSymmetric;
};

/// { v : S(v, a) = 0 for all a in A }. Throws PreconditionError on a degenerate form.
Subspace annihilator(const BilinearForm& form, const Subspace& a);
/// Gram matrix S(x_i, y_j) of two families given as rows.
Matrix pairing(const BilinearForm& form, const Matrix& x, const Matrix& y);

}  // namespace hodge

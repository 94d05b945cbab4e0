#include "hodge/subspace.hpp"

#include "hodge/errors.hpp"

namespace hodge {

namespace {

Matrix nonzero_rref_rows(const Matrix& m) {
  EchelonForm e = echelon(m);
  return e.matrix.block(0, 0, e.pivots.size(), m.cols());
}

}  // namespace

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = Matrix::identity(ambient);
  return s;
}

Subspace Subspace::span(const Matrix& rows) {
  Subspace s(rows.cols());
  if (rows.rows() > 0) s.basis_ = nonzero_rref_rows(rows);
  return s;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient) {
  return span(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& indices) {
  Matrix m(indices.size(), ambient);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= ambient) throw DimensionError("coordinate index out of range");
    m(k, indices[k]) = 1;
  }
  return span(m);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("vector length does not match ambient dimension");
  // Reduce v against the echelon basis; pivots are the leading ones.
  Vector r = v;
  std::size_t col = 0;
  for (std::size_t row = 0; row < basis_.rows(); ++row) {
    while (basis_(row, col).is_zero()) ++col;
    if (!r[col].is_zero()) {
      Scalar f = r[col];
      for (std::size_t k = col; k < ambient_; ++k)
        if (!basis_(row, k).is_zero()) r[k] -= f * basis_(row, k);
    }
  }
  return hodge::is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("ambient dimension mismatch");
  if (other.dim() > dim()) return false;
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::conj() const {
  // Conjugation is a field automorphism, so it maps an rref basis to an rref basis.
  Subspace s(ambient_);
  s.basis_ = basis_.conj();
  return s;
}

Subspace Subspace::mapped(const Matrix& m) const {
  if (m.cols() != ambient_) throw DimensionError("map domain does not match ambient dimension");
  if (dim() == 0) return Subspace(m.rows());
  return span(basis_ * m.transpose());
}

Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  EchelonForm e = echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.matrix(r, free);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(vectors, n);
}

Subspace image(const Matrix& m) { return Subspace::span(m.transpose()); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("sum: ambient dimension mismatch");
  if (a.is_zero() || b.is_full()) return b;
  if (b.is_zero() || a.is_full()) return a;
  return Subspace::span(a.basis().stacked(b.basis()));
}

Subspace dot_complement(const Subspace& a) {
  if (a.is_zero()) return Subspace::full(a.ambient());
  return kernel(a.basis());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("intersect: ambient dimension mismatch");
  if (a.is_zero() || b.is_full()) return a;
  if (b.is_zero() || a.is_full()) return b;
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  // A ∩ B = (A^perp + B^perp)^perp for the nondegenerate dot product.
  Subspace perp = sum(dot_complement(a), dot_complement(b));
  return dot_complement(perp);
}

Subspace preimage(const Matrix& m, const Subspace& target, const Subspace& domain) {
  if (m.rows() != target.ambient() || m.cols() != domain.ambient())
    throw DimensionError("preimage: shape mismatch");
  if (target.is_full()) return domain;
  Subspace perp = dot_complement(target);
  return intersect(domain, kernel(perp.basis() * m));
}

Matrix quotient_basis(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("quotient_basis: ambient dimension mismatch");
  if (!b.contains(a)) throw PreconditionError("quotient_basis: A is not contained in B");
  std::vector<Vector> chosen;
  Subspace acc = a;
  for (std::size_t r = 0; r < b.dim() && acc.dim() < b.dim(); ++r) {
    Vector v = b.basis().row(r);
    if (acc.contains(v)) continue;
    acc = sum(acc, Subspace::span(std::vector<Vector>{v}, a.ambient()));
    chosen.push_back(std::move(v));
  }
  return Matrix::from_rows(chosen, a.ambient());
}

BilinearForm::BilinearForm(Matrix gram, Symmetry symmetry) : gram_(std::move(gram)), symmetry_(symmetry) {
  if (!gram_.is_square()) throw DimensionError("Gram matrix must be square");
  Matrix expected = symmetry_ == Symmetry::kSymmetric ? gram_.transpose() : -gram_.transpose();
  if (expected != gram_)
    throw PreconditionError(symmetry_ == Symmetry::kSymmetric ? "Gram matrix is not symmetric"
                                                              : "Gram matrix is not antisymmetric");
}

Scalar BilinearForm::operator()(const Vector& u, const Vector& v) const { return dot(u, gram_ * v); }

bool BilinearForm::is_nondegenerate() const { return is_invertible(gram_); }

Subspace annihilator(const BilinearForm& form, const Subspace& a) {
  if (a.ambient() != form.dim()) throw DimensionError("annihilator: dimension mismatch");
  if (!form.is_nondegenerate()) throw PreconditionError("annihilator: form is degenerate");
  if (a.is_zero()) return Subspace::full(a.ambient());
  // S(v, a) = a^T G^T v, so the conditions are the rows of A G^T.
  return kernel(a.basis() * form.gram().transpose());
}

Matrix pairing(const BilinearForm& form, const Matrix& x, const Matrix& y) {
  return x * form.gram() * y.transpose();
}

}  // namespace hodge

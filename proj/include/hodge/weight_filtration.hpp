#pragma once

#include <map>
#include <string>
#include <vector>

#include "hodge/subspace.hpp"
#include "hodge/verdict.hpp"

namespace hodge {

/// Square matrix with rational entries and N^(index+1) = 0.
class NilpotentOperator {
 public:
  NilpotentOperator() = default;
  /// Throws PreconditionError if the matrix is not square, not rational, or not nilpotent.
  explicit NilpotentOperator(Matrix matrix);

  const Matrix& matrix() const { return matrix_; }
  /// Smallest k with N^(k+1) = 0; zero for the zero operator.
  int index() const { return index_; }
  std::size_t dim() const { return matrix_.rows(); }
  /// N^k, cached.
  const Matrix& power(int k) const;

 private:
  Matrix matrix_;
  int index_ = 0;
  std::vector<Matrix> powers_;
};

/// Square rational matrix T with (T - I) nilpotent.
class UnipotentOperator {
 public:
  explicit UnipotentOperator(Matrix matrix);
  const Matrix& matrix() const { return matrix_; }
  int index() const { return index_; }

 private:
  Matrix matrix_;
  int index_ = 0;
};

/// N = log T as the finite series -sum_{n>=1} (I - T)^n / n.
NilpotentOperator log_unipotent(const UnipotentOperator& t);

/// Increasing filtration W_0 <= ... <= W_{2m} = H with center m. Indices
/// below 0 give the zero space and indices above 2m give H.
class WeightFiltration {
 public:
  WeightFiltration() = default;
  /// Throws PreconditionError unless the chain is increasing and ends at the full space.
  WeightFiltration(int center, std::vector<Subspace> steps);

  int center() const { return center_; }
  std::size_t ambient() const { return ambient_; }
  const Subspace& operator[](int l) const;
  std::size_t gr_dim(int l) const;
  /// dim W_l for l = 0..2m.
  std::vector<std::size_t> step_dims() const;
  /// Gr_l as a quotient of W_l by W_{l-1}.
  QuotientSubspace gr(int l) const { return {(*this)[l], (*this)[l - 1]}; }

  friend bool operator==(const WeightFiltration& a, const WeightFiltration& b) {
    return a.center_ == b.center_ && a.steps_ == b.steps_;
  }

 private:
  int center_ = 0;
  std::size_t ambient_ = 0;
  std::vector<Subspace> steps_;
  Subspace zero_;
  Subspace full_;
};

WeightFiltration monodromy_weight_filtration(const NilpotentOperator& n, int center);

/// Checks N W_l <= W_{l-2} and that N^l : Gr_{m+l} -> Gr_{m-l} is an isomorphism.
Verdict verify_weight_filtration(const NilpotentOperator& n, const WeightFiltration& w);

/// Rank of the map Gr_{from} -> Gr_{from - 2*power} induced by N^power.
std::size_t induced_rank(const NilpotentOperator& n, const WeightFiltration& w, int from, int power);

struct PrimitiveDecomposition {
  /// Keyed by weight m + l with l >= 0.
  std::map<int, QuotientSubspace> parts;
  /// For weight k: the pieces N^i(P_{k+2i}) inside Gr_k, keyed by i.
  std::map<int, std::map<int, QuotientSubspace>> summands;
};

PrimitiveDecomposition primitive_decomposition(const NilpotentOperator& n, const WeightFiltration& w);

struct KernelGradedDecomposition {
  std::size_t gr_dim;                 // dim Gr_k H
  std::vector<std::size_t> kernel_gr; // dim Gr_{k-2a}(ker N) for a = 0, 1, ...
};

/// Throws PreconditionError for k > m.
KernelGradedDecomposition kernel_graded_decomposition(const NilpotentOperator& n, const WeightFiltration& w,
                                                      int k);

/// S(., N^l .) on Gr_{m+l} for l >= 0, in the basis given by quotient representatives.
struct GradedForm {
  Matrix basis;  // rows: representatives of a basis of Gr_{m+l}
  Matrix gram;
};
GradedForm graded_form(const NilpotentOperator& n, const BilinearForm& s, const WeightFiltration& w, int l);

/// The form on Gr_{m-l} obtained by transporting the one on Gr_{m+l} along N^l:
/// the basis is {N^l q_i} and the Gram matrix is S(q_i, N^l q_j).
GradedForm transported_form(const NilpotentOperator& n, const BilinearForm& s, const WeightFiltration& w, int l);

Verdict check_polarization_compat(const NilpotentOperator& n, const BilinearForm& s, const WeightFiltration& w);

}  // namespace hodge

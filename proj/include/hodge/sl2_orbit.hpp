#pragma once

#include <map>

#include "hodge/mixed_hodge.hpp"

namespace hodge {

/// [Y, N] = -2N, [Y, N+] = 2N+, [N+, N] = Y.
struct Sl2Triple {
  Matrix n_minus;
  Matrix y;
  Matrix n_plus;
};

struct GradingElement {
  Matrix y;
  std::map<int, Subspace> eigenspaces;
};

/// Y acting by p + q - k on I^{p,q}. Throws PreconditionError unless the splitting is R-split.
GradingElement canonical_grading(const BigradedSplitting& s, int k);

/// Eigenspace decomposition of a diagonalizable matrix with integer eigenvalues.
/// Throws PreconditionError otherwise.
std::map<int, Subspace> integer_eigenspaces(const Matrix& y);

/// Builds N+ from the strings N^j v over primitive vectors v of each Y-eigenspace.
/// Throws PreconditionError if no N+ completes (N, Y) to an sl2-triple.
Sl2Triple complete_sl2_triple(const NilpotentOperator& n, const Matrix& y);

Verdict check_sl2_relations(const Sl2Triple& t);

/// ker(ad N) ∩ im(ad N) inside End(H), returned as a list of matrices.
std::vector<Matrix> compute_c_space(const NilpotentOperator& n);

/// The X in the span of `c_space` with exp(X) y0 exp(-X) = y, solved grade by
/// grade for the ad(y0)-grading. Returns false if there is none.
bool grading_orbit_witness(const Matrix& y0, const Matrix& y, const std::vector<Matrix>& c_space, Matrix& x);

/// Gradings Y of W with [Y, N] = -2N form y0 + (a linear space). Returns a basis
/// of that linear space: lowering operators commuting with N.
std::vector<Matrix> grading_directions(const NilpotentOperator& n, const WeightFiltration& w);

/// exp(zN) applied to every step of F.
HodgeFiltration nilpotent_orbit_eval(const NilpotentOperator& n, const HodgeFiltration& f, const Scalar& z);

struct OrbitVerdict {
  Verdict verdict;
  PureVerdict moved;  // exp(iN) F at the central weight
};

/// Given an R-split PMHS (W(N), F), checks that exp(iN)F is a pure polarized
/// structure of weight m and that N+ + N + iY shifts its bigrading by (-1, 1).
OrbitVerdict check_orbit_correspondence(const BilinearForm& s, const NilpotentOperator& n, const HodgeFiltration& f,
                                        int m);

}  // namespace hodge

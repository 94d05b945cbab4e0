#pragma once

#include <map>

#include "hodge/mixed_hodge.hpp"

namespace hodge {

/// A limit-type polarized mixed Hodge structure: S, N, W = W(N) and F.
struct PmhsModel {
  BilinearForm s;
  NilpotentOperator n;
  WeightFiltration w;
  HodgeFiltration f;
  int weight = 0;
};

/// Weight 1 on Q^2: N e2 = e1, S(e2, e1) = 1, F^1 = span(e2).
PmhsModel weight_one_model();

/// Index-one model at odd weight k: a Tate class at weight k-1 and one at
/// weight k+1 joined by N, plus a pure weight-k middle with the given Hodge
/// numbers (keyed by p, symmetric under p <-> k-p). Basis order: the lower
/// Tate vector, then for each type (p, q) with p > q the real pairs (x, y),
/// then the upper Tate vector. The middle type (p, q) is spanned by x + i y.
PmhsModel index_one_model(int k, const std::map<int, std::size_t>& middle);

/// Two-dimensional MHS with W_0 = span(e1), weight 2 on the quotient and
/// F^1 = span(e2 + c e1). It is R-split iff c is real.
MixedHodgeStructure tate_extension(const Scalar& c);

}  // namespace hodge

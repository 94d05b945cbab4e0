#pragma once

#include <map>

#include "hodge/json_io.hpp"
#include "hodge/mixed_hodge.hpp"

namespace hodge {

/// Primitive Hodge numbers p^{a, lambda - a}_lambda for lambda = k-1, k, k+1.
struct PrimitiveTable {
  int k = 0;
  std::map<int, HodgeNumbers> by_weight;
  friend bool operator==(const PrimitiveTable& a, const PrimitiveTable& b) {
    return a.k == b.k && a.by_weight == b.by_weight;
  }
};

/// For the limit of an index-one degeneration whose F has Hodge numbers h at odd weight k.
/// Throws PreconditionError if k is even or h^{(k-1)/2} or h^{(k+1)/2} is zero.
PrimitiveTable primitive_numbers(const HodgeNumbers& h);

/// h^{a, k-a} = sum over lambda of p^{a, lambda-a}_lambda.
Verdict check_primitive_sums(const PrimitiveTable& p, const HodgeNumbers& h);

struct BoundaryDatum {
  Subspace w_minus1;  // W_{k-1}, a rational isotropic line
  PrimitiveTable p;
  int psi_sign = 0;   // sign of S(u, w) for N u = w spanning W_{k-1}
  Rational psi_value; // S(u, w) for the canonical generator w; informational

  /// Polarizing forms are compared up to positive multiples.
  friend bool operator==(const BoundaryDatum& a, const BoundaryDatum& b) {
    return a.w_minus1 == b.w_minus1 && a.p == b.p && a.psi_sign == b.psi_sign;
  }
};

/// Pure structure induced on Gr^W_k, in the coordinates of a rational basis
/// of W_k modulo W_{k-1}.
struct GradedLimitPoint {
  int weight = 0;
  Matrix basis;  // rows, representatives in the ambient space
  HodgeFiltration f;
  Matrix form;   // induced S on the basis
  HodgeNumbers numbers;
};

struct BoundaryResult {
  BoundaryDatum datum;
  GradedLimitPoint point;
  /// Purity and polarization of the graded point and the type match with p_k.
  Verdict verdict;
};

/// Requires N != 0, N^2 = 0, rank N = 1 and a polarized MHS (W(N), F) centered at k.
BoundaryResult boundary_point(const BilinearForm& s, const NilpotentOperator& n, const HodgeFiltration& f, int k);

/// Passes iff both filtrations induce the same filtration on every Gr^W_l.
Verdict reference_vs_limit_graded(const HodgeFiltration& f_limit, const HodgeFiltration& f_reference,
                                  const WeightFiltration& w);

Json to_json(const PrimitiveTable& p);
Json to_json(const BoundaryResult& r);

}  // namespace hodge

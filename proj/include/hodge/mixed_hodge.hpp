#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "hodge/subspace.hpp"
#include "hodge/weight_filtration.hpp"

namespace hodge {

/// Decreasing filtration F^p over Q(i). Steps are stored for p = p_min..p_max;
/// F^p is the full space below p_min and zero above p_max. The standard basis
/// is the real structure, so conjugation is entrywise.
class HodgeFiltration {
 public:
  HodgeFiltration() = default;
  /// Throws PreconditionError unless the steps decrease.
  HodgeFiltration(int p_min, std::vector<Subspace> steps);

  int p_min() const { return p_min_; }
  int p_max() const { return p_min_ + static_cast<int>(steps_.size()) - 1; }
  std::size_t ambient() const { return ambient_; }
  const Subspace& operator[](int p) const;
  const std::vector<Subspace>& steps() const { return steps_; }

  HodgeFiltration conj() const;
  /// g applied to every step.
  HodgeFiltration mapped(const Matrix& g) const;

  friend bool operator==(const HodgeFiltration& a, const HodgeFiltration& b);

 private:
  int p_min_ = 0;
  std::size_t ambient_ = 0;
  std::vector<Subspace> steps_;
  Subspace zero_;
  Subspace full_;
};

/// h^{p, k-p} keyed by p; zero entries are omitted.
struct HodgeNumbers {
  int weight = 0;
  std::map<int, std::size_t> h;

  std::size_t at(int p) const {
    auto it = h.find(p);
    return it == h.end() ? 0 : it->second;
  }
  std::size_t total() const;
  friend bool operator==(const HodgeNumbers& a, const HodgeNumbers& b) { return a.weight == b.weight && a.h == b.h; }
};

struct PureVerdict {
  Verdict verdict;
  HodgeNumbers numbers;
};

/// Pass iff F^p + conj(F^{k-p+1}) is a direct sum equal to H for every p.
PureVerdict validate_pure(const HodgeFiltration& f, int k);

struct MixedHodgeStructure {
  WeightFiltration w;
  HodgeFiltration f;
};

struct MhsVerdict {
  Verdict verdict;
  std::map<int, HodgeNumbers> graded;  // keyed by weight, nonzero Gr only
};

/// Pass iff every Gr^W_k with the induced filtration is pure of weight k.
MhsVerdict validate_mhs(const WeightFiltration& w, const HodgeFiltration& f);

/// Induced filtration on Gr^W_k, each step represented by its preimage in W_k.
std::map<int, QuotientSubspace> induced_on_gr(const WeightFiltration& w, const HodgeFiltration& f, int k);

using Bidegree = std::pair<int, int>;

struct BigradedSplitting {
  std::size_t ambient = 0;
  std::map<Bidegree, Subspace> pieces;  // nonzero pieces only

  Subspace piece(int a, int b) const;
  /// Columns are the canonical bases of the pieces, in bidegree order.
  Matrix basis_columns() const;
  /// Sum of the pieces I^{a,b} with a < p and b < q.
  Subspace lower(int p, int q) const;
  std::map<Bidegree, std::size_t> dims() const;
};

/// Throws PreconditionError if (W, F) is not a mixed Hodge structure.
BigradedSplitting deligne_splitting(const WeightFiltration& w, const HodgeFiltration& f);

/// Rebuilds W and F from the pieces and checks them against the inputs,
/// together with the direct-sum property and the conjugation congruence.
Verdict verify_splitting(const BigradedSplitting& s, const WeightFiltration& w, const HodgeFiltration& f);

bool is_r_split(const BigradedSplitting& s);

/// W_l = sum of I^{a,b} with a + b <= l and F^p = sum of I^{a,b} with a >= p,
/// from explicit piece bases (rows). The center is the smallest m with every
/// weight in [0, 2m].
MixedHodgeStructure mhs_from_bigrading(const std::map<Bidegree, Matrix>& pieces);

/// The real operator delta, lowering the bigrading in both indices, with
/// exp(-i delta) F R-split. Throws Error if any of these checks fails.
Matrix r_split_delta(const WeightFiltration& w, const HodgeFiltration& f);

/// i^e for any integer e.
Scalar i_power(int e);

struct PmhsVerdict {
  Verdict verdict;
  /// Conditions: N^{m+1} = 0, W = W(N), N F^p <= F^{p-1},
  /// S(F^p, F^{m-p+1}) = 0, Hodge-Riemann positivity.
  std::array<bool, 5> conditions{true, true, true, true, true};
  std::map<int, HodgeNumbers> primitive;  // keyed by weight m + l
};

/// Positivity convention: on the primitive part of I^{p,q} with p + q = m + l,
/// the Hermitian form i^{p-q} S(u, N^l conj(v)) is positive definite.
PmhsVerdict validate_pmhs(const BilinearForm& s, const NilpotentOperator& n, const WeightFiltration& w,
                          const HodgeFiltration& f);

}  // namespace hodge

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hodge/json_io.hpp"
#include "hodge/subspace.hpp"
#include "hodge/verdict.hpp"

namespace hodge {

class SeveriCatalogue;

/// Betti numbers indexed by real degree.
using BettiVector = std::vector<long>;

long betti_at(const BettiVector& b, int degree);

/// A statement taken as given by a bookkeeping computation, kept with the
/// instance so that every assumed number is visible in its output.
struct Axiom {
  std::string statement;
  std::string value;
};

/// Central fiber with two smooth components X and E meeting along E0.
/// The E1 differential in degree q is H^q(X) + H^q(E) -> H^q(E0), given
/// either as an explicit matrix or by its rank.
struct SncCentralFiber {
  std::string label;
  BettiVector b_x;
  BettiVector b_e;
  BettiVector b_e0;
  std::map<int, Matrix> d1_matrix;
  std::map<int, long> d1_rank;
  std::vector<Axiom> axioms;

  /// Throws DimensionError on a shape mismatch, MissingDataError if degree q has no differential.
  long rank_d1(int q) const;
  void check_shapes() const;
};

struct E2Page {
  int m = 0;
  long e2_0m = 0;   // ker d1 in degree m
  long e2_1m1 = 0;  // coker d1 in degree m - 1
  /// Gr^W_k H^m of the central fiber, with E2^{p,q} placed at k = q for p + q = m.
  std::map<int, long> gr;
  /// E1 and E2 Euler characteristics of the two-term complex in degrees m - 1 and m.
  long euler_e1[2] = {0, 0};
  long euler_e2[2] = {0, 0};
};

E2Page e1_to_e2(const SncCentralFiber& fiber, int m);

/// Clemens-Schmid data around H^m. Limit data are the weight-graded dimensions
/// of H^m_lim, or an explicit N from which they are computed.
struct ClemensSchmidInstance {
  int n = 0;  // relative dimension of the family
  int m = 0;
  std::optional<long> homology_source_dim;  // H_{2n+2-m} of the central fiber
  std::optional<long> homology_target_dim;  // H_{2n-m} of the central fiber
  std::map<int, long> central_graded;       // Gr^W_k H^m of the central fiber
  std::map<int, long> limit_graded;         // Gr^W_k H^m_lim
  std::optional<Matrix> limit_n;
  long rank_alpha = 0;
  long rank_i_star = 0;
  long rank_n = 0;
  long rank_beta = 0;
  /// Hodge types of alpha, i*, N, beta.
  std::pair<int, int> shifts[4] = {{0, 0}, {0, 0}, {0, 0}, {0, 0}};
  std::vector<Axiom> axioms;
};

struct CsStage {
  std::string name;
  Verdict verdict;
};

struct CsReport {
  std::vector<CsStage> stages;  // alpha, i_star, N, beta, weights, nilpotency_biconditional
  /// Rank of N forced by the central fiber when W_{m-2} H^m vanishes there.
  std::optional<long> forced_rank_n;
  bool ok() const;
  /// Name of the first failing stage, or empty.
  std::string first_failure() const;
};

CsReport clemens_schmid_check(const ClemensSchmidInstance& inst);

/// Required Hodge types (n+1,n+1), (0,0), (-1,-1), (-n,-n).
void set_standard_shifts(ClemensSchmidInstance& inst);

enum class StalkValue { kZero, kZ, kZ2 };
std::string to_string(StalkValue v);

struct QuadricCohomologyTable {
  int fiber_dim = 0;  // 2n - 1
  int corank = 0;
  std::vector<StalkValue> values;  // q = 0 .. 2 * fiber_dim
};

/// Primitive quotient H^q(Q)_v of a corank-s quadric of odd dimension 2n - 1.
QuadricCohomologyTable quadric_table(int fiber_dim, int corank);

/// Betti numbers of a smooth quadric of dimension `fiber_dim`; an even-dimensional
/// quadric has rank 2 in the middle when `middle_rank_2` is set.
BettiVector quadric_betti(int fiber_dim, bool middle_rank_2);
BettiVector projective_betti(int dim);
BettiVector kunneth(const BettiVector& a, const BettiVector& b);
/// Cohomology of a fiber bundle with trivial monodromy over a simply connected base.
BettiVector quadric_bundle_betti(const BettiVector& base, int fiber_dim, bool middle_rank_2);

struct InvolutionModel {
  Matrix doubled_gram;    // intersection form on V + V
  Matrix fiber_gram;      // <a, b> for n odd, <a, i*b> for n even
  Matrix quotient_map;    // (z1, z2) -> z1 - z2
  Matrix induced_gram;    // (psi x, psi y) on V
  int sign = 1;           // (-1)^n
  Subspace invariant;     // fixed vectors of the swap
  Verdict verdict;
};

/// Doubles V, descends the pairing (-1)^n <a, b - i*b> through the quotient
/// map and checks it equals (-1)^n times the form on V for several lifts.
InvolutionModel involution_pairing_model(const BilinearForm& v_form, int n);

struct CentralFiberAssembly {
  std::string name;
  int m = 0;
  int d = 0;
  SncCentralFiber fiber;
  E2Page e2;
  ClemensSchmidInstance instance;
  long coker_rho = 0;
};

/// Central fiber of the semistable model of the degeneration to the secant
/// cubic of a Severi variety with full ring data (Segre, Gr26).
CentralFiberAssembly assemble_central_fiber(const SeveriCatalogue& catalogue, const std::string& name);
CentralFiberAssembly assemble_segre_central_fiber(const SeveriCatalogue& catalogue);

Json to_json(const SncCentralFiber& f);
SncCentralFiber snc_fiber_from_json(const Json& j);
Json to_json(const ClemensSchmidInstance& inst);
ClemensSchmidInstance cs_instance_from_json(const Json& j);
Json to_json(const E2Page& e);
Json to_json(const CsReport& r);

}  // namespace hodge

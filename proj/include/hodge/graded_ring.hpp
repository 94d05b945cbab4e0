#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "hodge/json_io.hpp"
#include "hodge/subspace.hpp"
#include "hodge/verdict.hpp"

namespace hodge {

class GradedRing;

/// Integer combination of the basis symbols of one ring.
class RingElement {
 public:
  RingElement(const GradedRing& ring, std::vector<Integer> coeffs);

  const GradedRing& ring() const { return *ring_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t k) const { return coeffs_[k]; }
  Integer coeff(const std::string& symbol) const;
  bool is_zero() const;
  /// Part of real degree `degree`.
  RingElement part(int degree) const;

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement scaled(const Integer& c) const;
  friend bool operator==(const RingElement& a, const RingElement& b);

  /// e.g. "3*H1^2+9*H1H2+3*H2^2", or "0".
  std::string to_string() const;

 private:
  const GradedRing* ring_;
  std::vector<Integer> coeffs_;
};

/// Finite graded commutative ring with integer structure constants, graded
/// by real cohomological degree. Rings without full data only carry Betti numbers.
class GradedRing {
 public:
  static GradedRing from_json(const Json& j);
  static GradedRing from_file(const std::filesystem::path& path);

  const std::string& name() const { return name_; }
  int top_degree() const { return top_degree_; }
  bool full() const { return full_; }
  std::size_t rank() const { return symbols_.size(); }
  const std::string& symbol(std::size_t k) const { return symbols_[k]; }
  int degree(std::size_t k) const { return degrees_[k]; }
  std::size_t index(const std::string& symbol) const;
  /// Indices of the basis elements of real degree `degree`.
  std::vector<std::size_t> degree_basis(int degree) const;
  std::size_t betti(int degree) const;
  const std::vector<std::string>& annotations() const { return annotations_; }

  RingElement zero() const;
  RingElement one() const;
  RingElement element(const std::string& symbol) const;
  /// Parses "3*H1+3*H2", "s3,1-s2,2", "-H^2" and similar integer combinations.
  RingElement parse(const std::string& text) const;
  RingElement multiply(const RingElement& a, const RingElement& b) const;
  /// Coefficient of the point class.
  Integer integrate(const RingElement& a) const;
  /// Total Chern class of the tangent bundle, if recorded.
  bool has_tangent() const { return has_tangent_; }
  RingElement tangent_total_chern() const;

  /// Associativity, commutativity and unimodularity of the Poincare pairing.
  Verdict audit() const;

 private:
  void require_full(const std::string& what) const;
  const std::vector<Integer>& product(std::size_t i, std::size_t j) const;

  std::string name_;
  int top_degree_ = 0;
  bool full_ = false;
  std::vector<std::string> symbols_;
  std::vector<int> degrees_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<Integer>> table_;  // rank * rank products
  std::vector<Integer> integration_;
  std::map<int, std::size_t> betti_;
  bool has_tangent_ = false;
  std::vector<Integer> tangent_;
  std::vector<std::string> annotations_;
};

/// Directory holding the ring files: HODGE_LIMITS_CATALOGUE's sibling rings/
/// when that variable is set, otherwise the data directory of the source tree.
std::filesystem::path rings_directory();
std::filesystem::path default_catalogue_path();
/// Loads one of P2, P2xP2, Gr26, OP2-shell. Throws MissingDataError for unknown names.
GradedRing load_ring(const std::string& name);

struct ChernResult {
  RingElement total;  // c(T_V), pushed into the ring of S
  Integer euler;      // integral of c_top(T_V) [V]
  bool degenerate = false;
};

/// c(T_V) = c(T_S) / (1 + [V]) as a truncated series, and chi(V).
ChernResult chern_hypersurface(const GradedRing& ring, const RingElement& tangent_total, const RingElement& divisor);

/// Integer matrix of multiplication by `divisor` from degree `source_deg` to source_deg + 2.
Matrix cup_matrix(const GradedRing& ring, const RingElement& divisor, int source_deg);
/// Column space of cup_matrix, in the coordinates of the target degree.
Subspace cup_with_divisor_image(const GradedRing& ring, const RingElement& divisor, int source_deg);

/// Middle cohomology of the even-dimensional quadric fiber: lambda_1, lambda_2,
/// with the power of the relative hyperplane class equal to lambda_1 + lambda_2.
struct FiberMiddleData {
  std::string lambda1 = "lambda1";
  std::string lambda2 = "lambda2";
};

struct CokerRho {
  std::size_t target_dim;  // 2 * b_d(S)
  std::size_t rank;        // dimension of the spanned subspace
  std::size_t coker_rank;
  std::string representative;  // a class sigma (x) lambda_1 outside the span
};

/// Target H^d(S) (x) span(lambda_1, lambda_2) with d = dim_C S; spans
/// im(cup [V]) (x) lambda_i and sigma (x) (lambda_1 + lambda_2) for all sigma.
CokerRho coker_rho_rank(const GradedRing& ring, const RingElement& divisor, const FiberMiddleData& fiber = {});

}  // namespace hodge

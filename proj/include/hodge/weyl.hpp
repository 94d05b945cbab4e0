#pragma once

#include <string>
#include <vector>

#include "hodge/scalar.hpp"

namespace hodge {

/// A simply-laced root system given by its Cartan matrix; products of simple
/// factors are block diagonal. Simple roots and fundamental weights are indexed
/// from 1 in the textual interface and from 0 internally.
class RootSystem {
 public:
  /// Accepts "A<n>", "D<n>", "E6", "E7", "E8" and products joined by 'x', e.g. "A2xA2".
  /// E-type nodes follow Bourbaki: 1-3-4-5-6(-7-8) is the long chain, 2 hangs off 4.
  static RootSystem parse(const std::string& id);

  const std::string& id() const { return id_; }
  std::size_t rank() const { return cartan_.size(); }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// Positive roots in simple-root coordinates.
  const std::vector<std::vector<int>>& positive_roots() const { return positive_; }
  /// rank + 2 * (number of positive roots).
  std::size_t lie_algebra_dim() const { return rank() + 2 * positive_.size(); }

 private:
  std::string id_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> positive_;
};

/// Dominant weight in fundamental-weight coordinates, parsed from "3w2",
/// "3w1+3w3" or a comma list "0,3,0,0,0". Throws ParseError or PreconditionError.
std::vector<int> parse_weight(const RootSystem& rs, const std::string& text);

/// Weyl dimension formula, prod over positive roots of <l + rho, a> / <rho, a>.
Integer rep_dimension(const RootSystem& rs, const std::vector<int>& highest_weight);
Integer rep_dimension(const std::string& group, const std::string& weight);

}  // namespace hodge

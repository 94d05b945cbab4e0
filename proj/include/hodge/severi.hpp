#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hodge/json_io.hpp"
#include "hodge/mixed_hodge.hpp"
#include "hodge/verdict.hpp"

namespace hodge {

inline constexpr const char* kSeveriSchema = "hodge-limits/severi/1";

/// One Severi variety S of dimension d in P^{m+1}; its secant variety is a
/// cubic hypersurface of dimension m.
struct SeveriDatum {
  std::string name;
  int d = 0;
  int m = 0;
  int ambient_proj_dim = 0;
  Integer dim_G;
  Integer dim_H;
  std::string stabilizer_group;
  std::string section_weight;
  Integer rep_dim_sym3;
  Integer sections_dim;
  std::string ring_name;
  /// (h^{d-1,0}, h^{d-2,1}, ...) down to the middle, absent for the Veronese surface.
  std::optional<std::vector<Integer>> v_hodge_expected;
};

class SeveriCatalogue {
 public:
  /// Parses and self-validates; a stored number that does not match its
  /// recomputation raises ParseError listing every mismatch.
  static SeveriCatalogue from_json(const Json& j);
  static SeveriCatalogue from_file(const std::filesystem::path& path);
  /// HODGE_LIMITS_CATALOGUE if set, else the bundled data/severi.json.
  static SeveriCatalogue load_default();

  const std::vector<SeveriDatum>& entries() const { return entries_; }
  const SeveriDatum& at(const std::string& name) const;
  /// Further reference values checked by the catalogue verifier.
  const Json& golden() const { return golden_; }

 private:
  std::vector<SeveriDatum> entries_;
  Json golden_ = Json::object();
};

/// Recomputes every stored number of the entry from binomials and the Weyl
/// dimension formula.
Verdict validate_datum(const SeveriDatum& s);

/// h^{p, m-p} = C(m+2, 2m+1-3p) for the smooth cubic of odd dimension m >= 3.
HodgeNumbers cubic_hodge_numbers(int m);

struct LimitMhsSummary {
  std::string name;
  int m = 0;
  int d = 0;
  std::size_t w_dims[3] = {0, 0, 0};  // dim W_{m-1}, W_m, W_{m+1}
  HodgeNumbers gr_low;                 // weight m-1
  HodgeNumbers gr_mid;                 // weight m
  HodgeNumbers gr_high;                // weight m+1
  std::string tate_low;                // e.g. "Q(-3)"
  std::string tate_high;
  int twist = 0;           // (m - d + 1) / 2
  int polarization_sign = 1;// (-1)^twist, reported on its own
  HodgeNumbers v_hodge;    // weight d - 1
  /// (h^{d-1,0}, h^{d-2,1}, ...) down to the middle.
  std::vector<Integer> v_hodge_vector() const;
};

LimitMhsSummary limit_mhs_summary(const SeveriDatum& s);

struct SegreCrosscheck {
  Integer euler;
  Integer h21;
  Verdict verdict;
};

SegreCrosscheck segre_cy_crosscheck(const SeveriCatalogue& catalogue);

struct LunaCheck {
  Integer sym3;
  Integer orbit_dim;  // dim G - dim H
  Integer sections;
  Integer lie_dim_H;  // dimension of the stabilizer from its root system
  Verdict verdict;
};

LunaCheck luna_slice_check(const SeveriDatum& s);

Integer binomial(long n, long k);

}  // namespace hodge

#include "hodge/severi.hpp"

#include <cstdlib>
#include <fstream>

#include "hodge/errors.hpp"
#include "hodge/graded_ring.hpp"
#include "hodge/weyl.hpp"

namespace hodge {

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

namespace {

Integer integer_field(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) return Integer(v.get<std::string>());
  throw ParseError(std::string("catalogue field '") + key + "' is not an integer");
}

std::size_t to_size(const Integer& x) {
  if (sgn(x) < 0 || !x.fits_ulong_p()) throw Error("Hodge number out of range: " + x.get_str());
  return x.get_ui();
}

std::string tate_label(int k) { return "Q(" + std::to_string(k) + ")"; }

}  // namespace

HodgeNumbers cubic_hodge_numbers(int m) {
  if (m < 3 || m % 2 == 0) throw PreconditionError("cubic Hodge numbers need an odd dimension m >= 3");
  HodgeNumbers h;
  h.weight = m;
  for (int p = 0; p <= m; ++p) {
    std::size_t v = to_size(binomial(m + 2, 2L * m + 1 - 3L * p));
    if (v) h.h[p] = v;
  }
  return h;
}

std::vector<Integer> LimitMhsSummary::v_hodge_vector() const {
  std::vector<Integer> out;
  const int w = d - 1;
  for (int p = w; 2 * p > w; --p) out.push_back(Integer(static_cast<unsigned long>(v_hodge.at(p))));
  return out;
}

LimitMhsSummary limit_mhs_summary(const SeveriDatum& s) {
  if (s.d <= 2) throw PreconditionError(s.name + ": the index-one limit needs dim S > 2");
  const int m = s.m;
  HodgeNumbers cubic = cubic_hodge_numbers(m);
  LimitMhsSummary out;
  out.name = s.name;
  out.m = m;
  out.d = s.d;
  const int lo = (m - 1) / 2, hi = (m + 1) / 2;
  if (cubic.at(lo) < 1 || cubic.at(hi) < 1) throw PreconditionError("no room for the Tate pieces");

  out.gr_low.weight = m - 1;
  out.gr_low.h[lo] = 1;
  out.gr_high.weight = m + 1;
  out.gr_high.h[hi] = 1;
  out.gr_mid = cubic;
  for (int p : {lo, hi}) {
    if (--out.gr_mid.h[p] == 0) out.gr_mid.h.erase(p);
  }
  const std::size_t total = cubic.total();
  out.w_dims[0] = 1;
  out.w_dims[1] = total - 1;
  out.w_dims[2] = total;
  out.tate_low = tate_label((1 - m) / 2);
  out.tate_high = tate_label(-(1 + m) / 2);

  out.twist = (m - s.d + 1) / 2;
  out.polarization_sign = out.twist % 2 == 0 ? 1 : -1;
  out.v_hodge.weight = s.d - 1;
  for (const auto& [p, v] : out.gr_mid.h) out.v_hodge.h[p - out.twist] = v;
  return out;
}

Verdict validate_datum(const SeveriDatum& s) {
  Verdict v;
  auto expect = [&](const std::string& what, const Integer& stored, const Integer& computed) {
    if (stored != computed)
      v.fail(s.name + ": " + what + " stored " + stored.get_str() + ", recomputed " + computed.get_str());
  };
  if (3 * s.d + 2 != 2 * s.m) v.fail(s.name + ": d = 2(m-1)/3 fails");
  expect("ambient_proj_dim", s.ambient_proj_dim, s.m + 1);
  expect("dim_G", s.dim_G, Integer((s.m + 2) * (s.m + 2) - 1));
  expect("rep_dim_sym3", s.rep_dim_sym3, binomial(s.m + 4, 3));
  try {
    RootSystem rs = RootSystem::parse(s.stabilizer_group);
    expect("dim_H", s.dim_H, Integer(static_cast<unsigned long>(rs.lie_algebra_dim())));
    expect("sections_dim", s.sections_dim, rep_dimension(rs, parse_weight(rs, s.section_weight)));
  } catch (const Error& e) {
    v.fail(s.name + ": " + e.what());
  }
  expect("dimension identity", s.rep_dim_sym3 - 1 - (s.dim_G - s.dim_H), s.sections_dim);
  if (s.d > 2) {
    if (!s.v_hodge_expected) {
      v.fail(s.name + ": missing V_hodge_expected");
    } else {
      auto computed = limit_mhs_summary(s).v_hodge_vector();
      if (computed != *s.v_hodge_expected) v.fail(s.name + ": V_hodge_expected does not match the limit computation");
    }
  } else if (s.v_hodge_expected) {
    v.fail(s.name + ": V_hodge_expected is recorded for a case outside the index-one theorem");
  }
  return v;
}

SeveriCatalogue SeveriCatalogue::from_json(const Json& j) {
  SeveriCatalogue c;
  try {
    if (j.at("schema").get<std::string>() != kSeveriSchema)
      throw ParseError("catalogue schema is '" + j.at("schema").get<std::string>() + "', expected " + kSeveriSchema);
    for (const auto& e : j.at("entries")) {
      SeveriDatum s;
      s.name = e.at("name").get<std::string>();
      s.d = e.at("d").get<int>();
      s.m = e.at("m").get<int>();
      s.ambient_proj_dim = e.at("ambient_proj_dim").get<int>();
      s.dim_G = integer_field(e, "dim_G");
      s.dim_H = integer_field(e, "dim_H");
      s.stabilizer_group = e.at("stabilizer_group").get<std::string>();
      s.section_weight = e.at("section_weight").get<std::string>();
      s.rep_dim_sym3 = integer_field(e, "rep_dim_sym3");
      s.sections_dim = integer_field(e, "sections_dim");
      s.ring_name = e.at("ring").get<std::string>();
      if (e.contains("V_hodge_expected") && !e.at("V_hodge_expected").is_null()) {
        std::vector<Integer> h;
        for (const auto& x : e.at("V_hodge_expected")) h.push_back(Integer(x.get<long>()));
        s.v_hodge_expected = std::move(h);
      }
      c.entries_.push_back(std::move(s));
    }
    if (j.contains("golden")) c.golden_ = j.at("golden");
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed catalogue: ") + e.what());
  }
  Verdict all;
  for (const auto& s : c.entries_) all.absorb(validate_datum(s));
  if (!all.ok) {
    std::string msg = "catalogue fails self-validation:";
    for (const auto& f : all.failures) msg += "\n  " + f;
    throw ParseError(msg);
  }
  return c;
}

SeveriCatalogue SeveriCatalogue::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open catalogue " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("catalogue " + path.string() + " is not valid JSON: " + e.what());
  }
  return from_json(j);
}

SeveriCatalogue SeveriCatalogue::load_default() { return from_file(default_catalogue_path()); }

const SeveriDatum& SeveriCatalogue::at(const std::string& name) const {
  for (const auto& s : entries_)
    if (s.name == name) return s;
  throw MissingDataError("no Severi variety named '" + name + "' in the catalogue");
}

SegreCrosscheck segre_cy_crosscheck(const SeveriCatalogue& catalogue) {
  const SeveriDatum& segre = catalogue.at("Segre");
  GradedRing ring = load_ring(segre.ring_name);
  ChernResult c = chern_hypersurface(ring, ring.tangent_total_chern(), ring.parse("3*H1+3*H2"));
  SegreCrosscheck out;
  out.euler = c.euler;
  // chi = 2 + 2 h11 - 2 (h30 + h21) with h11 = 2 (Lefschetz) and h30 = 1 (trivial canonical class).
  const Integer h11 = 2, h30 = 1;
  Integer twice = 2 + 2 * h11 - c.euler;
  if (twice % 2 != 0) out.verdict.fail("Euler characteristic has the wrong parity");
  out.h21 = twice / 2 - h30;
  if (!c.total.part(2).is_zero()) out.verdict.fail("c_1(V) is not zero");
  auto summary = limit_mhs_summary(segre).v_hodge_vector();
  if (summary.size() != 2 || summary[0] != h30 || summary[1] != out.h21)
    out.verdict.fail("Hodge numbers from the Euler characteristic disagree with the limit computation");
  return out;
}

LunaCheck luna_slice_check(const SeveriDatum& s) {
  if (s.d <= 2) throw PreconditionError(s.name + ": the slice identity is checked for dim S > 2");
  LunaCheck out;
  RootSystem rs = RootSystem::parse(s.stabilizer_group);
  out.sym3 = binomial(s.m + 4, 3);
  out.lie_dim_H = Integer(static_cast<unsigned long>(rs.lie_algebra_dim()));
  out.orbit_dim = Integer((s.m + 2) * (s.m + 2) - 1) - out.lie_dim_H;
  out.sections = rep_dimension(rs, parse_weight(rs, s.section_weight));
  if (out.sym3 - 1 - out.orbit_dim != out.sections)
    out.verdict.fail(s.name + ": (" + out.sym3.get_str() + " - 1) - " + out.orbit_dim.get_str() +
                     " != " + out.sections.get_str());
  if (out.sym3 != s.rep_dim_sym3) out.verdict.fail(s.name + ": Sym^3 dimension differs from the catalogue");
  if (out.lie_dim_H != s.dim_H) out.verdict.fail(s.name + ": stabilizer dimension differs from the catalogue");
  if (out.sections != s.sections_dim) out.verdict.fail(s.name + ": section count differs from the catalogue");
  return out;
}

}  // namespace hodge

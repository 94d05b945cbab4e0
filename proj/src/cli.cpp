#include "hodge/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <future>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "hodge/boundary.hpp"
#include "hodge/degeneration.hpp"
#include "hodge/errors.hpp"
#include "hodge/graded_ring.hpp"
#include "hodge/json_io.hpp"
#include "hodge/mixed_hodge.hpp"
#include "hodge/severi.hpp"
#include "hodge/sl2_orbit.hpp"
#include "hodge/weight_filtration.hpp"
#include "hodge/weyl.hpp"

namespace hodge::cli {

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

namespace {

constexpr const char* kReportSchema = "hodge-limits/report/1";

struct Golden {
  std::string name;
  Json expected;
  Json actual;
  bool ok() const { return expected == actual; }
};

struct Report {
  std::string command;
  std::string digest_input;
  std::vector<std::pair<std::string, Verdict>> verdicts;
  std::vector<Golden> golden;
  Json result = Json::object();
  std::vector<std::string> table;  // human-readable lines

  void add(std::string name, Verdict v) { verdicts.emplace_back(std::move(name), std::move(v)); }
  void compare(std::string name, Json expected, Json actual) {
    golden.push_back({std::move(name), std::move(expected), std::move(actual)});
  }
  void line(const std::string& key, const std::string& value) { table.push_back(key + ": " + value); }

  int exit_status() const {
    for (const auto& [_, v] : verdicts)
      if (!v.ok) return kVerdictFailed;
    for (const auto& g : golden)
      if (!g.ok()) return kVerdictFailed;
    return kOk;
  }

  Json to_json() const {
    Json vs = Json::array();
    for (const auto& [name, v] : verdicts) vs.push_back({{"name", name}, {"ok", v.ok}, {"failures", v.failures}});
    Json gs = Json::array();
    for (const auto& g : golden)
      gs.push_back({{"name", g.name}, {"expected", g.expected}, {"actual", g.actual}, {"ok", g.ok()}});
    return {{"schema", kReportSchema},
            {"command", command},
            {"inputs_digest", fnv1a_hex(digest_input)},
            {"verdicts", vs},
            {"golden", gs},
            {"result", result},
            {"exit_status", exit_status()}};
  }

  void print_table(std::ostream& out) const {
    out << command << "\n";
    for (const auto& l : table) out << "  " << l << "\n";
    for (const auto& [name, v] : verdicts) {
      out << "  [" << (v.ok ? "PASS" : "FAIL") << "] " << name << "\n";
      for (const auto& f : v.failures) out << "      " << f << "\n";
    }
    for (const auto& g : golden)
      out << "  [" << (g.ok() ? "PASS" : "FAIL") << "] " << g.name << " expected " << g.expected.dump()
          << " got " << g.actual.dump() << "\n";
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw FileError("cannot read " + path);
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

// An argument starting with '{' is inline JSON, anything else names a file.
Json read_input(Report& r, const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return parse_json(arg, "inline input");
  std::string bytes = read_file(arg);
  r.digest_input += '\0' + bytes;
  return parse_json(bytes, arg);
}

SeveriCatalogue load_catalogue(Report& r) {
  auto path = default_catalogue_path();
  std::string bytes = read_file(path.string());
  r.digest_input += '\0' + bytes;
  return SeveriCatalogue::from_json(parse_json(bytes, path.string()));
}

GradedRing load_ring_tracked(Report& r, const std::string& name) {
  GradedRing ring = load_ring(name);
  r.digest_input += '\0' + read_file((rings_directory() / (name + ".json")).string());
  return ring;
}

Json numbers_json(const HodgeNumbers& h) {
  Json j = Json::object();
  for (const auto& [p, v] : h.h) j[std::to_string(p)] = v;
  return j;
}

std::string numbers_text(const HodgeNumbers& h) {
  std::string s = "weight " + std::to_string(h.weight) + " {";
  bool first = true;
  for (const auto& [p, v] : h.h) {
    s += (first ? "" : ", ") + ("h^" + std::to_string(p) + "," + std::to_string(h.weight - p)) + "=" +
         std::to_string(v);
    first = false;
  }
  return s + "}";
}

Json integers_json(const std::vector<Integer>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.get_str());
  return j;
}

std::string join_integers(const std::vector<Integer>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].get_str();
  return s + ")";
}

// ---- filtered vector space input -------------------------------------------

struct FilteredInput {
  std::size_t dim = 0;
  std::optional<NilpotentOperator> n;
  std::optional<int> center;
  std::optional<WeightFiltration> w;
  std::optional<HodgeFiltration> f;
  std::optional<BilinearForm> s;
  std::optional<Matrix> y;

  const NilpotentOperator& need_n() const {
    if (!n) throw ParseError("input needs \"N\"");
    return *n;
  }
  const WeightFiltration& need_w() const {
    if (!w) throw ParseError("input needs \"W\" or \"N\"");
    return *w;
  }
  const HodgeFiltration& need_f() const {
    if (!f) throw ParseError("input needs \"F\"");
    return *f;
  }
  const BilinearForm& need_s() const {
    if (!s) throw ParseError("input needs \"S\"");
    return *s;
  }
};

std::size_t infer_dim(const Json& j) {
  if (j.contains("dim")) return j.at("dim").get<std::size_t>();
  for (const char* key : {"N", "T", "Y"})
    if (j.contains(key) && j.at(key).is_array()) return j.at(key).size();
  if (j.contains("S") && j.at("S").contains("gram")) return j.at("S").at("gram").size();
  auto scan = [](const Json& steps) -> std::size_t {
    for (const auto& step : steps)
      if (step.is_array() && !step.empty() && step.front().is_array()) return step.front().size();
    return 0;
  };
  if (j.contains("F") && j.at("F").contains("steps"))
    if (std::size_t d = scan(j.at("F").at("steps"))) return d;
  if (j.contains("W"))
    if (std::size_t d = scan(j.at("W"))) return d;
  throw ParseError("cannot determine the dimension; add \"dim\"");
}

FilteredInput parse_filtered(const Json& j, std::optional<int> center_override = std::nullopt) {
  if (!j.is_object()) throw ParseError("input must be a JSON object");
  try {
    FilteredInput in;
    in.dim = infer_dim(j);
    if (j.contains("N")) {
      in.n = NilpotentOperator(matrix_from_json(j.at("N")));
    } else if (j.contains("T")) {
      in.n = log_unipotent(UnipotentOperator(matrix_from_json(j.at("T"))));
    }
    if (in.n && in.n->dim() != in.dim) throw DimensionError("N has the wrong size");
    if (j.contains("center")) in.center = j.at("center").get<int>();
    if (center_override) in.center = center_override;
    if (j.contains("W")) {
      std::vector<Subspace> steps;
      for (const auto& s : j.at("W")) steps.push_back(subspace_from_json(s, in.dim));
      if (steps.empty() || steps.size() % 2 == 0) throw ParseError("\"W\" needs 2m+1 steps");
      int c = static_cast<int>(steps.size() - 1) / 2;
      if (in.center && *in.center != c) throw ParseError("\"center\" disagrees with the number of W steps");
      in.center = c;
      in.w = WeightFiltration(c, std::move(steps));
    } else if (in.n) {
      if (!in.center) in.center = in.n->index();
      in.w = monodromy_weight_filtration(*in.n, *in.center);
    }
    if (j.contains("F")) {
      const Json& f = j.at("F");
      std::vector<Subspace> steps;
      for (const auto& s : f.at("steps")) steps.push_back(subspace_from_json(s, in.dim));
      in.f = HodgeFiltration(f.at("p_min").get<int>(), std::move(steps));
    }
    if (j.contains("S")) {
      const Json& s = j.at("S");
      std::string sym = s.value("symmetry", "symmetric");
      if (sym != "symmetric" && sym != "antisymmetric") throw ParseError("unknown symmetry " + sym);
      in.s = BilinearForm(matrix_from_json(s.at("gram")),
                          sym == "symmetric" ? Symmetry::kSymmetric : Symmetry::kAntisymmetric);
      if (in.s->dim() != in.dim) throw DimensionError("S has the wrong size");
    }
    if (j.contains("Y")) in.y = matrix_from_json(j.at("Y"));
    return in;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed input: ") + e.what());
  }
}

Json filtration_json(const WeightFiltration& w) {
  Json steps = Json::array();
  for (int l = 0; l <= 2 * w.center(); ++l) steps.push_back(subspace_to_json(w[l]));
  return steps;
}

Json hodge_filtration_json(const HodgeFiltration& f) {
  Json steps = Json::array();
  for (const auto& s : f.steps()) steps.push_back(subspace_to_json(s));
  return {{"p_min", f.p_min()}, {"steps", steps}};
}

std::string dims_text(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
  return s + "]";
}

// ---- subcommands ------------------------------------------------------------

void cmd_mwf(Report& r, const std::string& input, std::optional<int> center, bool verify) {
  FilteredInput in = parse_filtered(read_input(r, input), center);
  const NilpotentOperator& n = in.need_n();
  const WeightFiltration& w = in.need_w();
  Json gr = Json::object();
  for (int l = 0; l <= 2 * w.center(); ++l)
    if (w.gr_dim(l)) gr[std::to_string(l)] = w.gr_dim(l);
  r.result = {{"center", w.center()},
              {"index", n.index()},
              {"step_dims", w.step_dims()},
              {"gr_dims", gr},
              {"steps", filtration_json(w)}};
  r.line("center", std::to_string(w.center()));
  r.line("index", std::to_string(n.index()));
  r.line("dim W_l", dims_text(w.step_dims()));
  if (verify) r.add("weight filtration conditions", verify_weight_filtration(n, w));
}

void cmd_mhs(Report& r, const std::string& action, const std::string& input) {
  FilteredInput in = parse_filtered(read_input(r, input));
  const WeightFiltration& w = in.need_w();
  const HodgeFiltration& f = in.need_f();
  if (action == "validate") {
    MhsVerdict mv = validate_mhs(w, f);
    Json graded = Json::object();
    for (const auto& [k, h] : mv.graded) {
      graded[std::to_string(k)] = numbers_json(h);
      r.line("Gr_" + std::to_string(k), numbers_text(h));
    }
    r.result = {{"graded", graded}};
    r.add("mixed Hodge structure", mv.verdict);
    if (in.s && in.n) {
      PmhsVerdict pv = validate_pmhs(*in.s, *in.n, w, f);
      static const char* names[5] = {"nilpotency", "weight filtration of N", "N F^p in F^(p-1)",
                                     "orthogonality", "Hodge-Riemann positivity"};
      Json conds = Json::object();
      for (int c = 0; c < 5; ++c) conds[names[c]] = pv.conditions[static_cast<std::size_t>(c)];
      Json prim = Json::object();
      for (const auto& [k, h] : pv.primitive) prim[std::to_string(k)] = numbers_json(h);
      r.result["polarized"] = {{"conditions", conds}, {"primitive", prim}};
      r.add("polarized mixed Hodge structure", pv.verdict);
    }
  } else if (action == "split") {
    BigradedSplitting s = deligne_splitting(w, f);
    Json pieces = Json::array();
    for (const auto& [bd, sub] : s.pieces) {
      pieces.push_back({{"p", bd.first}, {"q", bd.second}, {"dim", sub.dim()}, {"basis", subspace_to_json(sub)}});
      r.line("I^" + std::to_string(bd.first) + "," + std::to_string(bd.second), std::to_string(sub.dim()));
    }
    bool split = is_r_split(s);
    r.result = {{"pieces", pieces}, {"r_split", split}};
    r.line("R-split", split ? "yes" : "no");
    r.add("splitting reproduces (W, F)", verify_splitting(s, w, f));
  } else {
    Matrix delta = r_split_delta(w, f);
    HodgeFiltration fs = f.mapped(exp_nilpotent(Scalar(Rational(0), Rational(-1)) * delta));
    bool split = is_r_split(deligne_splitting(w, fs));
    r.result = {{"delta", matrix_to_json(delta)}, {"split_F", hodge_filtration_json(fs)}, {"delta_zero", delta.is_zero()}};
    r.line("delta", delta.is_zero() ? "0" : delta.to_string());
    Verdict v;
    if (!split) v.fail("exp(-i delta) F is not R-split");
    r.add("exp(-i delta) F is R-split", v);
  }
}

void cmd_sl2(Report& r, const std::string& action, const std::string& input, const std::string& z) {
  FilteredInput in = parse_filtered(read_input(r, input));
  const NilpotentOperator& n = in.need_n();
  if (action == "complete") {
    Matrix y;
    if (in.y) {
      y = *in.y;
    } else {
      y = canonical_grading(deligne_splitting(in.need_w(), in.need_f()), *in.center).y;
    }
    Sl2Triple t = complete_sl2_triple(n, y);
    r.result = {{"N", matrix_to_json(t.n_minus)}, {"Y", matrix_to_json(t.y)}, {"N_plus", matrix_to_json(t.n_plus)}};
    r.line("N+", t.n_plus.to_string());
    r.add("sl2 relations", check_sl2_relations(t));
  } else if (action == "orbit-eval") {
    Scalar zs = Scalar::parse(z);
    HodgeFiltration moved = nilpotent_orbit_eval(n, in.need_f(), zs);
    r.result = {{"z", zs.to_string()}, {"F", hodge_filtration_json(moved)}};
    r.line("z", zs.to_string());
    for (int p = moved.p_min(); p <= moved.p_max(); ++p)
      r.line("dim F^" + std::to_string(p), std::to_string(moved[p].dim()));
  } else {
    OrbitVerdict ov = check_orbit_correspondence(in.need_s(), n, in.need_f(), *in.center);
    r.result = {{"moved_numbers", numbers_json(ov.moved.numbers)}};
    r.line("exp(iN)F", numbers_text(ov.moved.numbers));
    r.add("exp(iN)F pure of weight " + std::to_string(*in.center), ov.moved.verdict);
    r.add("orbit correspondence", ov.verdict);
  }
}

void cmd_ring(Report& r, const std::string& action, const std::vector<std::string>& args) {
  std::size_t need = action == "mult" ? 3 : 2;
  if (args.size() != need) throw ParseError("ring " + action + " expects " + std::to_string(need) + " arguments");
  GradedRing ring = load_ring_tracked(r, args[0]);
  if (action == "mult") {
    RingElement p = ring.parse(args[1]) * ring.parse(args[2]);
    r.result = {{"ring", ring.name()}, {"a", args[1]}, {"b", args[2]}, {"product", p.to_string()}};
    r.line(args[1] + " * " + args[2], p.to_string());
  } else if (action == "chern") {
    ChernResult c = chern_hypersurface(ring, ring.tangent_total_chern(), ring.parse(args[1]));
    Json parts = Json::object();
    int top = ring.top_degree();
    for (int deg = 0; deg <= top; deg += 2) {
      std::string text = c.total.part(deg).to_string();
      parts["c" + std::to_string(deg / 2)] = text;
      r.line("c" + std::to_string(deg / 2), text);
    }
    r.result = {{"ring", ring.name()}, {"divisor", args[1]}, {"chern", parts}, {"euler", c.euler.get_str()},
                {"degenerate", c.degenerate}};
    r.line("euler characteristic", c.euler.get_str());
  } else {
    CokerRho c = coker_rho_rank(ring, ring.parse(args[1]));
    r.result = {{"ring", ring.name()},           {"divisor", args[1]},   {"target_dim", c.target_dim},
                {"rank", c.rank},                {"coker_rank", c.coker_rank},
                {"representative", c.representative}};
    r.line("coker rank", std::to_string(c.coker_rank));
    r.line("representative", c.representative);
  }
  r.add("ring audit", ring.full() ? ring.audit() : Verdict{});
}

void cmd_repdim(Report& r, const std::string& group, const std::string& weight) {
  Integer dim = rep_dimension(group, weight);
  r.result = {{"group", group}, {"weight", weight}, {"dimension", dim.get_str()}};
  r.line("dimension", dim.get_str());
}

Json summary_json(const LimitMhsSummary& s) {
  return {{"name", s.name},
          {"m", s.m},
          {"d", s.d},
          {"w_dims", {s.w_dims[0], s.w_dims[1], s.w_dims[2]}},
          {"gr", {{std::to_string(s.m - 1), numbers_json(s.gr_low)},
                  {std::to_string(s.m), numbers_json(s.gr_mid)},
                  {std::to_string(s.m + 1), numbers_json(s.gr_high)}}},
          {"tate_low", s.tate_low},
          {"tate_high", s.tate_high},
          {"twist", s.twist},
          {"polarization_sign", s.polarization_sign},
          {"V_hodge", integers_json(s.v_hodge_vector())}};
}

void limit_mhs_into(Report& r, const SeveriDatum& d, const std::string& prefix) {
  LimitMhsSummary s = limit_mhs_summary(d);
  if (d.v_hodge_expected)
    r.compare(prefix + "V Hodge numbers", integers_json(*d.v_hodge_expected), integers_json(s.v_hodge_vector()));
  r.result[d.name] = summary_json(s);
  r.line(d.name + " Gr_" + std::to_string(d.m - 1), s.tate_low);
  r.line(d.name + " Gr_" + std::to_string(d.m), numbers_text(s.gr_mid));
  r.line(d.name + " Gr_" + std::to_string(d.m + 1), s.tate_high);
  r.line(d.name + " H^" + std::to_string(d.d - 1) + "(V)", join_integers(s.v_hodge_vector()));
}

void cmd_severi_limit(Report& r, const std::string& name) {
  SeveriCatalogue cat = load_catalogue(r);
  const SeveriDatum& d = cat.at(name);
  r.add(name + " catalogue entry", validate_datum(d));
  limit_mhs_into(r, d, "");
  Json summary = r.result[name];
  r.result = std::move(summary);
}

// Everything checked for one entry; computed independently of the others.
Report verify_entry(const SeveriDatum& d) {
  Report part;
  part.add(d.name + ": catalogue entry", validate_datum(d));
  if (d.d > 2) {
    LunaCheck l = luna_slice_check(d);
    part.add(d.name + ": Luna slice identity", l.verdict);
    part.compare(d.name + ": sections of O(3)", d.sections_dim.get_str(), Integer(l.sym3 - 1 - l.orbit_dim).get_str());
    part.line(d.name + " (Sym^3 - 1) - orbit", Integer(l.sym3 - 1).get_str() + " - " + l.orbit_dim.get_str() + " = " +
                                                   l.sections.get_str());
    limit_mhs_into(part, d, d.name + ": ");
  }
  return part;
}

void merge(Report& into, Report&& part) {
  for (auto& v : part.verdicts) into.verdicts.push_back(std::move(v));
  for (auto& g : part.golden) into.golden.push_back(std::move(g));
  for (auto& l : part.table) into.table.push_back(std::move(l));
  for (auto& [k, v] : part.result.items()) into.result["limit_mhs"][k] = v;
}

void cmd_severi_verify_all(Report& r) {
  SeveriCatalogue cat = load_catalogue(r);
  r.result = {{"limit_mhs", Json::object()}};
  std::vector<std::future<Report>> jobs;
  for (const auto& d : cat.entries())
    jobs.push_back(std::async(std::launch::async, [&d] { return verify_entry(d); }));
  for (auto& job : jobs) merge(r, job.get());

  const Json& g = cat.golden();
  SegreCrosscheck sc = segre_cy_crosscheck(cat);
  r.add("Segre crosscheck", sc.verdict);
  if (g.contains("segre_euler_characteristic"))
    r.compare("Segre euler characteristic", g.at("segre_euler_characteristic"), std::stol(sc.euler.get_str()));
  if (g.contains("segre_h21")) r.compare("Segre h^{2,1}", g.at("segre_h21"), std::stol(sc.h21.get_str()));

  std::map<std::string, GradedRing> rings;
  auto ring = [&](const std::string& name) -> const GradedRing& {
    auto it = rings.find(name);
    if (it == rings.end()) {
      it = rings.emplace(name, load_ring_tracked(r, name)).first;
      r.add(name + " ring audit", it->second.audit());
    }
    return it->second;
  };
  for (const auto& p : g.value("schubert_products", Json::array())) {
    const GradedRing& R = ring(p.at("ring").get<std::string>());
    std::string a = p.at("a"), b = p.at("b");
    RingElement expected = R.parse(p.at("product").get<std::string>());
    RingElement actual = R.parse(a) * R.parse(b);
    r.compare(R.name() + ": " + a + " * " + b, expected.to_string(), actual.to_string());
  }
  for (const auto& c : g.value("coker_rho", Json::array())) {
    const GradedRing& R = ring(c.at("ring").get<std::string>());
    CokerRho cr = coker_rho_rank(R, R.parse(c.at("divisor").get<std::string>()));
    r.compare(R.name() + ": coker rho rank", c.at("rank"), cr.coker_rank);
  }
  if (g.contains("central_fiber")) {
    for (const auto& expected : g.at("central_fiber")) {
      std::string name = expected.at("name");
      CentralFiberAssembly a = assemble_central_fiber(cat, name);
      CsReport cs = clemens_schmid_check(a.instance);
      Verdict v;
      if (!cs.ok()) v.fail("first failing stage: " + cs.first_failure());
      r.add(name + ": Clemens-Schmid", v);
      auto gr = [&](int k) { return a.e2.gr.count(k) ? a.e2.gr.at(k) : 0L; };
      if (expected.contains("gr_m")) r.compare(name + ": central Gr_m", expected.at("gr_m"), gr(a.m));
      if (expected.contains("gr_m_minus_1"))
        r.compare(name + ": central Gr_(m-1)", expected.at("gr_m_minus_1"), gr(a.m - 1));
      if (expected.contains("rank_N"))
        r.compare(name + ": forced rank N", expected.at("rank_N"), cs.forced_rank_n ? Json(*cs.forced_rank_n) : Json());
    }
  }
}

void cmd_severi_assemble(Report& r, const std::string& name) {
  SeveriCatalogue cat = load_catalogue(r);
  CentralFiberAssembly a = assemble_central_fiber(cat, name);
  CsReport cs = clemens_schmid_check(a.instance);
  r.result = {{"name", a.name},
              {"m", a.m},
              {"d", a.d},
              {"coker_rho", a.coker_rho},
              {"fiber", to_json(a.fiber)},
              {"e2", to_json(a.e2)},
              {"instance", to_json(a.instance)},
              {"clemens_schmid", to_json(cs)}};
  for (const auto& [k, v] : a.e2.gr) r.line("central Gr_" + std::to_string(k), std::to_string(v));
  if (cs.forced_rank_n) r.line("forced rank N", std::to_string(*cs.forced_rank_n));
  for (const auto& st : cs.stages) r.add("Clemens-Schmid " + st.name, st.verdict);
}

void cmd_cs_check(Report& r, const std::string& input) {
  ClemensSchmidInstance inst = cs_instance_from_json(read_input(r, input));
  CsReport cs = clemens_schmid_check(inst);
  r.result = to_json(cs);
  if (cs.forced_rank_n) r.line("forced rank N", std::to_string(*cs.forced_rank_n));
  for (const auto& a : inst.axioms) r.line("axiom", a.statement + (a.value.empty() ? "" : " = " + a.value));
  for (const auto& st : cs.stages) r.add(st.name, st.verdict);
}

void cmd_snc_e2(Report& r, const std::string& input, std::optional<int> m_override) {
  Json j = read_input(r, input);
  SncCentralFiber fiber = snc_fiber_from_json(j);
  std::optional<int> m = m_override;
  if (!m && j.contains("m")) m = j.at("m").get<int>();
  if (!m) throw ParseError("snc-e2 needs the degree \"m\" (in the file or via --m)");
  E2Page e = e1_to_e2(fiber, *m);
  r.result = to_json(e);
  for (const auto& [k, v] : e.gr) r.line("Gr_" + std::to_string(k), std::to_string(v));
  Verdict euler;
  for (int k = 0; k < 2; ++k)
    if (e.euler_e1[k] != e.euler_e2[k]) euler.fail("Euler characteristic changed in degree " + std::to_string(*m - 1 + k));
  r.add("E1/E2 Euler characteristics", euler);
}

void cmd_boundary(Report& r, const std::string& input) {
  FilteredInput in = parse_filtered(read_input(r, input));
  BoundaryResult b = boundary_point(in.need_s(), in.need_n(), in.need_f(), *in.center);
  r.result = to_json(b);
  r.line("psi sign", std::to_string(b.datum.psi_sign));
  r.line("graded point", numbers_text(b.point.numbers));
  r.add("boundary point", b.verdict);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for limit mixed Hodge structures", "hodge-limits"};
  app.require_subcommand(0, 1);
  bool json = false;
  std::string schema_name;
  app.add_flag("--json", json, "print the machine-readable report");
  auto* schema_opt = app.add_option("--schema", schema_name, "print a JSON schema (all names if omitted)")
                         ->expected(0, 1);

  std::string input, action, group, weight, name, z = "i";
  std::optional<int> center, degree;
  bool verify = false;
  std::vector<std::string> ring_args;

  auto* mwf = app.add_subcommand("mwf", "monodromy weight filtration of N (or log T)")->fallthrough();
  mwf->add_option("input", input, "JSON file or inline JSON")->required();
  mwf->add_option("--center", center, "center m of the filtration");
  mwf->add_flag("--verify", verify, "re-check the defining conditions");

  auto* mhs = app.add_subcommand("mhs", "mixed Hodge structures")->fallthrough();
  mhs->require_subcommand(1);
  for (const char* a : {"validate", "split", "delta"}) {
    auto* s = mhs->add_subcommand(a)->fallthrough();
    s->add_option("input", input)->required();
    s->callback([&action, a] { action = a; });
  }

  auto* sl2 = app.add_subcommand("sl2", "sl2-triples and nilpotent orbits")->fallthrough();
  sl2->require_subcommand(1);
  for (const char* a : {"complete", "orbit-eval", "verify"}) {
    auto* s = sl2->add_subcommand(a)->fallthrough();
    s->add_option("input", input)->required();
    if (std::string(a) == "orbit-eval") s->add_option("--z", z, "Gaussian rational point, default i");
    s->callback([&action, a] { action = a; });
  }

  auto* ring = app.add_subcommand("ring", "graded cohomology rings")->fallthrough();
  ring->require_subcommand(1);
  auto* mult = ring->add_subcommand("mult", "product of two classes")->fallthrough();
  mult->add_option("args", ring_args, "<ring> <a> <b>")->required();
  mult->callback([&action] { action = "mult"; });
  auto* chern = ring->add_subcommand("chern", "Chern classes of a hypersurface")->fallthrough();
  chern->add_option("args", ring_args, "<ring> <divisor>")->required();
  chern->callback([&action] { action = "chern"; });
  auto* coker = ring->add_subcommand("coker-rho", "rank of the cokernel of rho")->fallthrough();
  coker->add_option("args", ring_args, "<ring> <divisor>")->required();
  coker->callback([&action] { action = "coker-rho"; });

  auto* repdim = app.add_subcommand("repdim", "dimension of an irreducible representation")->fallthrough();
  repdim->add_option("group", group)->required();
  repdim->add_option("weight", weight)->required();

  auto* severi = app.add_subcommand("severi", "Severi variety catalogue")->fallthrough();
  severi->require_subcommand(1);
  auto* limit = severi->add_subcommand("limit-mhs", "limit mixed Hodge structure summary")->fallthrough();
  limit->add_option("name", name)->required();
  limit->callback([&action] { action = "limit-mhs"; });
  auto* verify_all = severi->add_subcommand("verify-all", "check every golden number")->fallthrough();
  verify_all->callback([&action] { action = "verify-all"; });
  auto* assemble = severi->add_subcommand("assemble", "central fiber bookkeeping instance")->fallthrough();
  assemble->add_option("name", name)->required();
  assemble->callback([&action] { action = "assemble"; });

  auto* cs = app.add_subcommand("cs-check", "Clemens-Schmid bookkeeping")->fallthrough();
  cs->add_option("input", input)->required();
  auto* snc = app.add_subcommand("snc-e2", "E2 page of a two-component central fiber")->fallthrough();
  snc->add_option("input", input)->required();
  snc->add_option("--m", degree, "cohomological degree");

  auto* boundary = app.add_subcommand("boundary", "boundary data of an index-one limit")->fallthrough();
  boundary->require_subcommand(1);
  auto* from_limit = boundary->add_subcommand("from-limit")->fallthrough();
  from_limit->add_option("input", input)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  if (*schema_opt) {
    const auto& all = schemas();
    if (schema_name.empty()) {
      for (const auto& [n, _] : all) out << n << "\n";
      return kOk;
    }
    auto it = all.find(schema_name);
    if (it == all.end()) {
      err << "error: unknown schema " << schema_name << "\n";
      return kUsage;
    }
    out << it->second << "\n";
    return kOk;
  }
  if (app.get_subcommands().empty()) {
    err << app.help();
    return kUsage;
  }

  Report r;
  for (const auto& a : args) {
    if (a == "--json") continue;
    r.command += (r.command.empty() ? "" : " ") + a;
    r.digest_input += a + '\0';
  }
  try {
    if (*mwf) cmd_mwf(r, input, center, verify);
    else if (*mhs) cmd_mhs(r, action, input);
    else if (*sl2) cmd_sl2(r, action, input, z);
    else if (*ring) cmd_ring(r, action, ring_args);
    else if (*repdim) cmd_repdim(r, group, weight);
    else if (*severi && action == "limit-mhs") cmd_severi_limit(r, name);
    else if (*severi && action == "verify-all") cmd_severi_verify_all(r);
    else if (*severi) cmd_severi_assemble(r, name);
    else if (*cs) cmd_cs_check(r, input);
    else if (*snc) cmd_snc_e2(r, input, degree);
    else cmd_boundary(r, input);
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kFileError;
  } catch (const ParseError& e) {
    err << "error: invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const DimensionError& e) {
    err << "error: invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const PreconditionError& e) {
    err << "error: precondition: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const MissingDataError& e) {
    err << "error: missing data: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const Error& e) {
    r.add("computation", [&] {
      Verdict v;
      v.fail(e.what());
      return v;
    }());
  } catch (const Json::exception& e) {
    err << "error: invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid input: " << e.what() << "\n";
    return kInvalidInput;
  }

  if (json) {
    out << r.to_json().dump(2) << "\n";
  } else {
    r.print_table(out);
  }
  return r.exit_status();
}

}  // namespace hodge::cli

#include "hodge/degeneration.hpp"

#include <numeric>

#include "hodge/errors.hpp"
#include "hodge/graded_ring.hpp"
#include "hodge/severi.hpp"
#include "hodge/weight_filtration.hpp"

namespace hodge {

long betti_at(const BettiVector& b, int degree) {
  if (degree < 0 || static_cast<std::size_t>(degree) >= b.size()) return 0;
  return b[degree];
}

long SncCentralFiber::rank_d1(int q) const {
  const long source = betti_at(b_x, q) + betti_at(b_e, q);
  const long target = betti_at(b_e0, q);
  if (auto it = d1_matrix.find(q); it != d1_matrix.end()) {
    const Matrix& d = it->second;
    if (static_cast<long>(d.rows()) != target || static_cast<long>(d.cols()) != source)
      throw DimensionError("d1 in degree " + std::to_string(q) + " has shape " + std::to_string(d.rows()) + "x" +
                           std::to_string(d.cols()) + ", expected " + std::to_string(target) + "x" +
                           std::to_string(source));
    return static_cast<long>(rank(d));
  }
  if (auto it = d1_rank.find(q); it != d1_rank.end()) {
    if (it->second < 0 || it->second > std::min(source, target))
      throw DimensionError("declared rank of d1 in degree " + std::to_string(q) + " exceeds its shape");
    return it->second;
  }
  if (source == 0 || target == 0) return 0;
  throw MissingDataError("no differential recorded in degree " + std::to_string(q));
}

void SncCentralFiber::check_shapes() const {
  for (const auto& [q, d] : d1_matrix) (void)rank_d1(q);
  for (const auto& [q, r] : d1_rank) (void)rank_d1(q);
  for (const BettiVector* b : {&b_x, &b_e, &b_e0})
    for (long x : *b)
      if (x < 0) throw DimensionError("negative Betti number");
}

E2Page e1_to_e2(const SncCentralFiber& fiber, int m) {
  fiber.check_shapes();
  E2Page out;
  out.m = m;
  const long r_m = fiber.rank_d1(m), r_m1 = fiber.rank_d1(m - 1);
  const long src_m = betti_at(fiber.b_x, m) + betti_at(fiber.b_e, m);
  const long src_m1 = betti_at(fiber.b_x, m - 1) + betti_at(fiber.b_e, m - 1);
  out.e2_0m = src_m - r_m;
  out.e2_1m1 = betti_at(fiber.b_e0, m - 1) - r_m1;
  out.gr[m] = out.e2_0m;
  out.gr[m - 1] = out.e2_1m1;
  out.euler_e1[0] = src_m1 - betti_at(fiber.b_e0, m - 1);
  out.euler_e1[1] = src_m - betti_at(fiber.b_e0, m);
  out.euler_e2[0] = (src_m1 - r_m1) - out.e2_1m1;
  out.euler_e2[1] = out.e2_0m - (betti_at(fiber.b_e0, m) - r_m);
  return out;
}

bool CsReport::ok() const {
  for (const auto& s : stages)
    if (!s.verdict.ok) return false;
  return true;
}

std::string CsReport::first_failure() const {
  for (const auto& s : stages)
    if (!s.verdict.ok) return s.name;
  return {};
}

void set_standard_shifts(ClemensSchmidInstance& inst) {
  inst.shifts[0] = {inst.n + 1, inst.n + 1};
  inst.shifts[1] = {0, 0};
  inst.shifts[2] = {-1, -1};
  inst.shifts[3] = {-inst.n, -inst.n};
}

namespace {

// Ranks of N^k and dimensions of ker N in the weight filtration of H^m_lim.
struct LimitProfile {
  long dim = 0;
  std::map<int, long> graded;
  std::vector<long> rank_power;  // index k >= 1
  std::vector<long> kernel_in_w; // index k >= 0: dim(ker N cap W_{m-k})
};

LimitProfile profile_from_graded(const std::map<int, long>& g, int m, Verdict& v) {
  LimitProfile p;
  p.graded = g;
  auto at = [&](int k) {
    auto it = g.find(k);
    return it == g.end() ? 0L : it->second;
  };
  for (const auto& [k, x] : g) {
    p.dim += x;
    if (x < 0) v.fail("negative graded dimension of the limit in weight " + std::to_string(k));
    if (k < 0 || k > 2 * m) v.fail("limit weight " + std::to_string(k) + " outside [0, 2m]");
  }
  // Strings of the sl2 action: c_l strings with weights m - l .. m + l.
  std::vector<long> strings(m + 1, 0);
  for (int l = 0; l <= m; ++l) {
    if (at(m + l) != at(m - l)) v.fail("limit graded dimensions are not symmetric about weight m");
    strings[l] = at(m + l) - at(m + l + 2);
    if (strings[l] < 0) v.fail("limit graded dimensions do not come from a nilpotent operator");
  }
  p.rank_power.assign(2 * m + 2, 0);
  for (int k = 1; k <= 2 * m + 1; ++k)
    for (int l = k; l <= m; ++l) p.rank_power[k] += strings[l] * (l + 1 - k);
  p.kernel_in_w.assign(2 * m + 2, 0);
  for (int k = 0; k <= 2 * m + 1; ++k)
    for (int l = k; l <= m; ++l) p.kernel_in_w[k] += strings[l];
  return p;
}

LimitProfile profile_from_matrix(const Matrix& n_matrix, int m) {
  NilpotentOperator n(n_matrix);
  WeightFiltration w = monodromy_weight_filtration(n, m);
  LimitProfile p;
  p.dim = static_cast<long>(n.dim());
  for (int k = 0; k <= 2 * m; ++k)
    if (w.gr_dim(k)) p.graded[k] = static_cast<long>(w.gr_dim(k));
  p.rank_power.assign(2 * m + 2, 0);
  for (int k = 1; k <= 2 * m + 1; ++k) p.rank_power[k] = k > n.index() ? 0 : static_cast<long>(rank(n.power(k)));
  Subspace ker = kernel(n.matrix());
  p.kernel_in_w.assign(2 * m + 2, 0);
  for (int k = 0; k <= 2 * m + 1; ++k) p.kernel_in_w[k] = static_cast<long>(intersect(ker, w[m - k]).dim());
  return p;
}

long central_w(const std::map<int, long>& g, int upto) {
  long s = 0;
  for (const auto& [k, x] : g)
    if (k <= upto) s += x;
  return s;
}

std::string eq(const char* what, long a, long b) {
  return std::string(what) + ": " + std::to_string(a) + " != " + std::to_string(b);
}

}  // namespace

CsReport clemens_schmid_check(const ClemensSchmidInstance& inst) {
  const int m = inst.m;
  CsReport report;
  Verdict shape;
  if (m < 0) shape.fail("negative degree m");

  LimitProfile lim;
  Verdict limit_v;
  if (inst.limit_n) {
    lim = profile_from_matrix(*inst.limit_n, m);
    if (!inst.limit_graded.empty() && inst.limit_graded != lim.graded)
      limit_v.fail("declared limit graded dimensions disagree with W(N)");
  } else {
    lim = profile_from_graded(inst.limit_graded, m, limit_v);
  }
  long dim_central = 0;
  for (const auto& [k, x] : inst.central_graded) {
    dim_central += x;
    if (x < 0) shape.fail("negative graded dimension of the central fiber");
    if (k > m) shape.fail("central fiber has weight " + std::to_string(k) + " above m");
  }
  const long dim_kernel = lim.dim - lim.rank_power[1];

  Verdict alpha = shape;
  if (inst.rank_alpha < 0) alpha.fail("negative rank of alpha");
  if (inst.homology_source_dim && inst.rank_alpha > *inst.homology_source_dim)
    alpha.fail(eq("rank alpha exceeds the dimension of its source", inst.rank_alpha, *inst.homology_source_dim));
  if (inst.rank_alpha + inst.rank_i_star != dim_central)
    alpha.fail(eq("rank alpha + rank i* = dim H^m of the central fiber", inst.rank_alpha + inst.rank_i_star,
                  dim_central));
  report.stages.push_back({"alpha", alpha});

  Verdict istar;
  if (inst.rank_i_star != dim_kernel) istar.fail(eq("rank i* = dim ker N", inst.rank_i_star, dim_kernel));
  for (int k = 1; k <= m; ++k) {
    const long c = central_w(inst.central_graded, m - k);
    if (c != lim.kernel_in_w[k])
      istar.fail(eq(("W_{m-" + std::to_string(k) + "} of the central fiber vs ker N cap W_{m-" + std::to_string(k) +
                     "}").c_str(),
                    c, lim.kernel_in_w[k]));
  }
  report.stages.push_back({"i_star", istar});

  Verdict nstage = limit_v;
  if (inst.rank_n != lim.rank_power[1]) nstage.fail(eq("declared rank N vs the limit data", inst.rank_n, lim.rank_power[1]));
  report.stages.push_back({"N", nstage});

  Verdict beta;
  if (inst.rank_n + inst.rank_beta != lim.dim)
    beta.fail(eq("rank N + rank beta = dim H^m_lim", inst.rank_n + inst.rank_beta, lim.dim));
  if (inst.homology_target_dim && inst.rank_beta > *inst.homology_target_dim)
    beta.fail(eq("rank beta exceeds the dimension of its target", inst.rank_beta, *inst.homology_target_dim));
  report.stages.push_back({"beta", beta});

  Verdict weights;
  ClemensSchmidInstance standard = inst;
  set_standard_shifts(standard);
  static const char* names[4] = {"alpha", "i*", "N", "beta"};
  for (int k = 0; k < 4; ++k)
    if (inst.shifts[k] != standard.shifts[k])
      weights.fail(std::string(names[k]) + " has type (" + std::to_string(inst.shifts[k].first) + "," +
                   std::to_string(inst.shifts[k].second) + "), expected (" +
                   std::to_string(standard.shifts[k].first) + "," + std::to_string(standard.shifts[k].second) + ")");
  report.stages.push_back({"weights", weights});

  Verdict nil;
  for (int k = 1; k <= m; ++k) {
    const bool n_vanishes = lim.rank_power[k] == 0;
    const bool w_vanishes = central_w(inst.central_graded, m - k) == 0;
    if (n_vanishes != w_vanishes)
      nil.fail("N^" + std::to_string(k) + (n_vanishes ? " = 0" : " != 0") + " but W_{m-" + std::to_string(k) +
               "} H^m " + (w_vanishes ? "= 0" : "!= 0"));
  }
  if (m >= 2 && central_w(inst.central_graded, m - 2) == 0) {
    report.forced_rank_n = central_w(inst.central_graded, m - 1);
    if (inst.rank_n != *report.forced_rank_n)
      nil.fail(eq("rank N forced by the central fiber", inst.rank_n, *report.forced_rank_n));
  }
  report.stages.push_back({"nilpotency_biconditional", nil});
  return report;
}

std::string to_string(StalkValue v) {
  switch (v) {
    case StalkValue::kZero:
      return "0";
    case StalkValue::kZ:
      return "Z";
    case StalkValue::kZ2:
      return "Z/2";
  }
  return "?";
}

QuadricCohomologyTable quadric_table(int fiber_dim, int corank) {
  if (fiber_dim < 1 || fiber_dim % 2 == 0) throw PreconditionError("quadric fiber dimension must be odd and positive");
  if (corank != 0 && corank != 1) throw PreconditionError("only coranks 0 and 1 occur in a quadric fibration here");
  QuadricCohomologyTable t{fiber_dim, corank, {}};
  const int threshold = fiber_dim + corank;
  for (int q = 0; q <= 2 * fiber_dim; ++q) {
    if (q % 2 != 0 || q < threshold) t.values.push_back(StalkValue::kZero);
    else if (q == threshold) t.values.push_back(StalkValue::kZ);
    else t.values.push_back(StalkValue::kZ2);
  }
  return t;
}

BettiVector quadric_betti(int fiber_dim, bool middle_rank_2) {
  if (fiber_dim < 0) throw PreconditionError("negative fiber dimension");
  BettiVector b(2 * fiber_dim + 1, 0);
  for (int q = 0; q <= 2 * fiber_dim; q += 2) b[q] = 1;
  if (middle_rank_2 && fiber_dim % 2 == 0) b[fiber_dim] = 2;
  return b;
}

BettiVector projective_betti(int dim) { return quadric_betti(dim, false); }

BettiVector kunneth(const BettiVector& a, const BettiVector& b) {
  if (a.empty() || b.empty()) return {};
  BettiVector out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

BettiVector quadric_bundle_betti(const BettiVector& base, int fiber_dim, bool middle_rank_2) {
  return kunneth(base, quadric_betti(fiber_dim, middle_rank_2));
}

InvolutionModel involution_pairing_model(const BilinearForm& v_form, int n) {
  const Matrix& b = v_form.gram();
  const std::size_t k = b.rows();
  if (k == 0 || !v_form.is_nondegenerate()) throw PreconditionError("involution model needs a nondegenerate form");
  InvolutionModel out;
  out.sign = n % 2 == 0 ? 1 : -1;

  Matrix doubled(2 * k, 2 * k), swap(2 * k, 2 * k), quotient(k, 2 * k), lift(2 * k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) doubled(i, j) = doubled(k + i, k + j) = b(i, j);
    swap(i, k + i) = swap(k + i, i) = 1;
    quotient(i, i) = 1;
    quotient(i, k + i) = -1;
    lift(i, i) = 1;
  }
  out.doubled_gram = doubled;
  out.fiber_gram = n % 2 == 0 ? doubled * swap : doubled;
  out.quotient_map = quotient;
  out.invariant = kernel(quotient);

  const Matrix pairing_on_double = doubled * (Matrix::identity(2 * k) - swap) * Scalar(out.sign);
  out.induced_gram = lift.transpose() * pairing_on_double * lift;

  if (out.invariant != kernel(Matrix::identity(2 * k) - swap))
    out.verdict.fail("kernel of the quotient map is not the invariant part of the swap");
  if (quotient * lift != Matrix::identity(k)) out.verdict.fail("lift is not a section of the quotient map");
  if (out.induced_gram != b * Scalar(out.sign)) out.verdict.fail("descended form is not (-1)^n times the form on V");
  for (const auto& inv : out.invariant.vectors()) {
    Vector left = pairing_on_double.transpose() * inv, right = pairing_on_double * inv;
    if (!is_zero(left) || !is_zero(right)) out.verdict.fail("pairing does not vanish on invariant classes");
  }
  // Other lifts differ by invariant classes (u, u); the descended form must not change.
  std::vector<Matrix> shifts;
  Matrix all_ones(k, k), shift_up(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      all_ones(i, j) = 1;
      if (j == i + 1) shift_up(i, j) = Scalar(Rational(2), Rational(0));
    }
  shifts = {Matrix::identity(k), all_ones, shift_up};
  for (const Matrix& u : shifts) {
    Matrix other = lift + u.stacked(u);
    if (quotient * other != Matrix::identity(k)) out.verdict.fail("shifted lift is not a section");
    if (other.transpose() * pairing_on_double * lift != out.induced_gram ||
        lift.transpose() * pairing_on_double * other != out.induced_gram)
      out.verdict.fail("descended form depends on the choice of lift");
  }
  return out;
}

CentralFiberAssembly assemble_central_fiber(const SeveriCatalogue& catalogue, const std::string& name) {
  const SeveriDatum& s = catalogue.at(name);
  LimitMhsSummary summary = limit_mhs_summary(s);
  GradedRing ring = load_ring(s.ring_name);
  if (!ring.full()) throw MissingDataError("assembling the central fiber of " + name + " needs the ring of " + ring.name());
  const int d = s.d, m = s.m;
  BettiVector base(2 * d + 1, 0);
  for (int k = 0; k <= 2 * d; ++k) base[k] = static_cast<long>(ring.betti(k));

  CentralFiberAssembly out;
  out.name = name;
  out.m = m;
  out.d = d;
  SncCentralFiber& f = out.fiber;
  f.label = name;
  f.b_x = kunneth(base, projective_betti(d / 2 + 1));
  f.axioms.push_back({"the proper transform of the secant cubic is a P^{d/2+1}-bundle over a copy of S",
                      "P^" + std::to_string(d / 2 + 1)});
  f.b_e0 = quadric_bundle_betti(base, d / 2, true);
  f.axioms.push_back({"E0 is a smooth bundle of " + std::to_string(d / 2) + "-dimensional quadrics over S",
                      "b_" + std::to_string(m - 1) + "(E0) = " + std::to_string(betti_at(f.b_e0, m - 1))});

  long b_v = 0;
  for (const auto& x : summary.v_hodge_vector()) b_v += 2 * x.get_si();
  if ((d - 1) % 2 == 0) throw PreconditionError("the middle cohomology of V must have odd degree");
  f.b_e = quadric_bundle_betti(base, d / 2 + 1, false);
  f.b_e[m] = b_v;
  f.axioms.push_back({"H^m(E) is isomorphic to H^{d-1}(V)", "b_" + std::to_string(m) + "(E) = " + std::to_string(b_v)});
  f.axioms.push_back({"H^{m-2}(E) vanishes", "b_" + std::to_string(m - 2) + "(E) = " + std::to_string(f.b_e[m - 2])});
  f.axioms.push_back({"away from degree m, E has the cohomology of a smooth bundle of odd-dimensional quadrics",
                      "fiber dimension " + std::to_string(d / 2 + 1)});

  // The hyperplane class is the sum of the degree-two generators for every catalogue ring.
  RingElement hyperplane = ring.zero();
  for (std::size_t k : ring.degree_basis(2)) hyperplane = hyperplane + ring.element(ring.symbol(k));
  CokerRho coker = coker_rho_rank(ring, hyperplane.scaled(3));
  out.coker_rho = static_cast<long>(coker.coker_rank);
  f.d1_rank[m - 1] = betti_at(f.b_e0, m - 1) - out.coker_rho;
  f.d1_rank[m] = 0;
  f.axioms.push_back({"the image of the restriction to E0 in degree m-1 has corank equal to the cokernel over "
                      "H^d(S) (x) span(lambda1, lambda2)",
                      "corank " + std::to_string(out.coker_rho)});

  out.e2 = e1_to_e2(f, m);

  ClemensSchmidInstance& cs = out.instance;
  cs.n = m;
  cs.m = m;
  cs.central_graded = out.e2.gr;
  const long dim_lim = static_cast<long>(cubic_hodge_numbers(m).total());
  const long low = out.e2.gr[m - 1];
  cs.limit_graded[m - 1] = low;
  cs.limit_graded[m] = dim_lim - 2 * low;
  cs.limit_graded[m + 1] = low;
  cs.axioms.push_back({"H^m_lim has the dimension of the middle cohomology of a smooth cubic", std::to_string(dim_lim)});
  cs.rank_alpha = 0;
  cs.axioms.push_back({"alpha vanishes because H^{m-2}(E) = 0 and the other components have no odd cohomology", "0"});
  cs.rank_i_star = std::accumulate(cs.central_graded.begin(), cs.central_graded.end(), 0L,
                                   [](long acc, const auto& kv) { return acc + kv.second; });
  cs.rank_n = low;
  cs.rank_beta = dim_lim - cs.rank_n;
  set_standard_shifts(cs);
  return out;
}

CentralFiberAssembly assemble_segre_central_fiber(const SeveriCatalogue& catalogue) {
  return assemble_central_fiber(catalogue, "Segre");
}

namespace {

Json betti_json(const BettiVector& b) { return Json(b); }

BettiVector betti_from(const Json& j) {
  BettiVector b;
  for (const auto& x : j) b.push_back(x.get<long>());
  return b;
}

Json graded_json(const std::map<int, long>& g) {
  Json j = Json::object();
  for (const auto& [k, x] : g) j[std::to_string(k)] = x;
  return j;
}

std::map<int, long> graded_from(const Json& j) {
  std::map<int, long> g;
  for (const auto& [k, x] : j.items()) g[std::stoi(k)] = x.get<long>();
  return g;
}

Json axioms_json(const std::vector<Axiom>& axioms) {
  Json j = Json::array();
  for (const auto& a : axioms) j.push_back({{"statement", a.statement}, {"value", a.value}});
  return j;
}

std::vector<Axiom> axioms_from(const Json& j) {
  std::vector<Axiom> out;
  for (const auto& a : j) out.push_back({a.at("statement").get<std::string>(), a.value("value", "")});
  return out;
}

template <class F>
auto parsing(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError(std::string("malformed ") + what + ": bad degree key");
  }
}

}  // namespace

Json to_json(const SncCentralFiber& f) {
  Json d1 = Json::object();
  for (const auto& [q, r] : f.d1_rank) d1[std::to_string(q)] = {{"rank", r}};
  for (const auto& [q, mtx] : f.d1_matrix) d1[std::to_string(q)] = {{"matrix", matrix_to_json(mtx)}};
  return {{"schema", "hodge-limits/snc-fiber/1"},
          {"label", f.label},
          {"b_x", betti_json(f.b_x)},
          {"b_e", betti_json(f.b_e)},
          {"b_e0", betti_json(f.b_e0)},
          {"d1", d1},
          {"axioms", axioms_json(f.axioms)}};
}

SncCentralFiber snc_fiber_from_json(const Json& j) {
  return parsing("central fiber", [&] {
    SncCentralFiber f;
    f.label = j.value("label", "");
    f.b_x = betti_from(j.at("b_x"));
    f.b_e = betti_from(j.at("b_e"));
    f.b_e0 = betti_from(j.at("b_e0"));
    if (j.contains("d1"))
      for (const auto& [q, entry] : j.at("d1").items()) {
        if (entry.contains("matrix")) f.d1_matrix[std::stoi(q)] = matrix_from_json(entry.at("matrix"));
        else f.d1_rank[std::stoi(q)] = entry.at("rank").get<long>();
      }
    if (j.contains("axioms")) f.axioms = axioms_from(j.at("axioms"));
    f.check_shapes();
    return f;
  });
}

Json to_json(const ClemensSchmidInstance& inst) {
  Json j = {{"schema", "hodge-limits/clemens-schmid/1"},
            {"n", inst.n},
            {"m", inst.m},
            {"central_graded", graded_json(inst.central_graded)},
            {"ranks", {{"alpha", inst.rank_alpha}, {"i_star", inst.rank_i_star}, {"N", inst.rank_n}, {"beta", inst.rank_beta}}},
            {"axioms", axioms_json(inst.axioms)}};
  if (!inst.limit_graded.empty()) j["limit_graded"] = graded_json(inst.limit_graded);
  if (inst.limit_n) j["limit_N"] = matrix_to_json(*inst.limit_n);
  if (inst.homology_source_dim) j["homology_source_dim"] = *inst.homology_source_dim;
  if (inst.homology_target_dim) j["homology_target_dim"] = *inst.homology_target_dim;
  static const char* names[4] = {"alpha", "i_star", "N", "beta"};
  Json shifts = Json::object();
  for (int k = 0; k < 4; ++k) shifts[names[k]] = {inst.shifts[k].first, inst.shifts[k].second};
  j["shifts"] = shifts;
  return j;
}

ClemensSchmidInstance cs_instance_from_json(const Json& j) {
  return parsing("Clemens-Schmid instance", [&] {
    ClemensSchmidInstance inst;
    inst.n = j.at("n").get<int>();
    inst.m = j.at("m").get<int>();
    inst.central_graded = graded_from(j.at("central_graded"));
    if (j.contains("limit_graded")) inst.limit_graded = graded_from(j.at("limit_graded"));
    if (j.contains("limit_N")) inst.limit_n = matrix_from_json(j.at("limit_N"));
    if (!j.contains("limit_graded") && !j.contains("limit_N"))
      throw ParseError("Clemens-Schmid instance needs limit_graded or limit_N");
    if (j.contains("homology_source_dim")) inst.homology_source_dim = j.at("homology_source_dim").get<long>();
    if (j.contains("homology_target_dim")) inst.homology_target_dim = j.at("homology_target_dim").get<long>();
    const Json& r = j.at("ranks");
    inst.rank_alpha = r.at("alpha").get<long>();
    inst.rank_i_star = r.at("i_star").get<long>();
    inst.rank_n = r.at("N").get<long>();
    inst.rank_beta = r.at("beta").get<long>();
    set_standard_shifts(inst);
    if (j.contains("shifts")) {
      static const char* names[4] = {"alpha", "i_star", "N", "beta"};
      for (int k = 0; k < 4; ++k)
        if (j.at("shifts").contains(names[k])) {
          const Json& s = j.at("shifts").at(names[k]);
          inst.shifts[k] = {s.at(0).get<int>(), s.at(1).get<int>()};
        }
    }
    if (j.contains("axioms")) inst.axioms = axioms_from(j.at("axioms"));
    return inst;
  });
}

Json to_json(const E2Page& e) {
  return {{"m", e.m},
          {"E2_0_m", e.e2_0m},
          {"E2_1_m-1", e.e2_1m1},
          {"gr", graded_json(e.gr)},
          {"euler_E1", {e.euler_e1[0], e.euler_e1[1]}},
          {"euler_E2", {e.euler_e2[0], e.euler_e2[1]}}};
}

Json to_json(const CsReport& r) {
  Json stages = Json::array();
  for (const auto& s : r.stages) stages.push_back({{"stage", s.name}, {"ok", s.verdict.ok}, {"failures", s.verdict.failures}});
  Json j = {{"ok", r.ok()}, {"stages", stages}};
  if (r.forced_rank_n) j["forced_rank_N"] = *r.forced_rank_n;
  return j;
}

}  // namespace hodge

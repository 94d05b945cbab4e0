#include "hodge/boundary.hpp"

#include "hodge/errors.hpp"

namespace hodge {

PrimitiveTable primitive_numbers(const HodgeNumbers& h) {
  const int k = h.weight;
  if (k % 2 == 0) throw PreconditionError("index-one primitive numbers need an odd weight");
  const int lo = (k - 1) / 2, hi = (k + 1) / 2;
  if (h.at(lo) < 1 || h.at(hi) < 1)
    throw PreconditionError("h^{" + std::to_string(lo) + "," + std::to_string(hi) +
                            "} must be positive for an index-one limit");
  PrimitiveTable t;
  t.k = k;
  HodgeNumbers mid = h;
  for (int a : {lo, hi})
    if (--mid.h[a] == 0) mid.h.erase(a);
  t.by_weight[k] = mid;
  t.by_weight[k - 1] = HodgeNumbers{k - 1, {{lo, 1}}};
  t.by_weight[k + 1] = HodgeNumbers{k + 1, {{hi, 1}}};
  return t;
}

Verdict check_primitive_sums(const PrimitiveTable& p, const HodgeNumbers& h) {
  Verdict v;
  std::map<int, std::size_t> sums;
  for (const auto& [lambda, numbers] : p.by_weight)
    for (const auto& [a, x] : numbers.h) sums[a] += x;
  for (int a = 0; a <= 2 * p.k + 2; ++a) {
    auto it = sums.find(a);
    const std::size_t s = it == sums.end() ? 0 : it->second;
    if (s != h.at(a))
      v.fail("sum of primitive numbers at a = " + std::to_string(a) + " is " + std::to_string(s) + ", h is " +
             std::to_string(h.at(a)));
  }
  return v;
}

namespace {

// Coordinates of the rows of `vectors` in the basis `basis` modulo `floor`.
Matrix quotient_coordinates(const Matrix& vectors, const Matrix& basis, const Subspace& floor) {
  Matrix ext = floor.is_zero() ? basis : basis.stacked(floor.basis());
  Matrix coords;
  if (!solve(ext.transpose(), vectors.transpose(), coords))
    throw Error("vector outside the weight step while building the graded point");
  return coords.block(0, 0, basis.rows(), coords.cols()).transpose();
}

HodgeNumbers numbers_of(const HodgeFiltration& f, std::size_t ambient, int weight) {
  HodgeNumbers h;
  h.weight = weight;
  for (int p = f.p_min() - 1; p <= f.p_max() + 1; ++p) {
    const std::size_t d = f[p].dim() - f[p + 1].dim();
    if (d) h.h[p] = d;
  }
  (void)ambient;
  return h;
}

}  // namespace

BoundaryResult boundary_point(const BilinearForm& s, const NilpotentOperator& n, const HodgeFiltration& f, int k) {
  if (n.index() == 0) throw PreconditionError("boundary point needs N != 0");
  if (n.index() > 1) throw PreconditionError("boundary point needs N^2 = 0");
  if (rank(n.matrix()) != 1) throw PreconditionError("boundary point needs rank N = 1");
  WeightFiltration w = monodromy_weight_filtration(n, k);
  PmhsVerdict pv = validate_pmhs(s, n, w, f);
  if (!pv.verdict.ok) throw PreconditionError("(W(N), F) is not polarized: " + pv.verdict.failures.front());

  BoundaryResult out;
  BoundaryDatum& datum = out.datum;
  datum.w_minus1 = w[k - 1];
  if (datum.w_minus1.dim() != 1) throw PreconditionError("W_{k-1} is not a line");
  const Vector gen = datum.w_minus1.basis().row(0);
  if (!s(gen, gen).is_zero()) throw PreconditionError("W_{k-1} is not isotropic");

  // N^{-1} on W_{k-1}: the echelon solution of N u = w, then a second lift
  // shifted by ker N to confirm the value does not depend on it.
  Matrix u;
  solve(n.matrix(), Matrix::from_columns({gen}, gen.size()), u);
  const Vector lift = u.transpose().row(0);
  const Scalar value = s(lift, gen);
  if (!value.is_real() || value.is_zero()) throw Error("psi is not a nonzero rational number");
  for (const auto& kv : kernel(n.matrix()).vectors()) {
    Vector other = lift;
    for (std::size_t i = 0; i < other.size(); ++i) other[i] += kv[i];
    if (s(other, gen) != value) out.verdict.fail("psi depends on the choice of N^{-1}");
  }
  datum.psi_value = value.re();
  datum.psi_sign = sgn(datum.psi_value);

  HodgeNumbers h = numbers_of(f, f.ambient(), k);
  datum.p = primitive_numbers(h);
  out.verdict.absorb(check_primitive_sums(datum.p, h), "primitive sums: ");

  GradedLimitPoint& pt = out.point;
  pt.weight = k;
  pt.basis = quotient_basis(w[k - 1], w[k]);
  const std::size_t g = pt.basis.rows();
  std::map<int, QuotientSubspace> induced = induced_on_gr(w, f, k);
  std::vector<Subspace> steps;
  int p_min = induced.empty() ? 0 : induced.begin()->first;
  for (const auto& [p, q] : induced) {
    (void)p;
    Subspace step = q.lift.dim() == q.floor.dim()
                        ? Subspace::zero(g)
                        : Subspace::span(quotient_coordinates(quotient_basis(q.floor, q.lift), pt.basis, w[k - 1]));
    steps.push_back(step);
  }
  pt.f = HodgeFiltration(p_min, steps);
  pt.form = pairing(s, pt.basis, pt.basis);

  PureVerdict pure = validate_pure(pt.f, k);
  out.verdict.absorb(pure.verdict, "graded point: ");
  pt.numbers = pure.numbers;
  if (pure.verdict.ok) {
    for (const auto& [p, dim] : pure.numbers.h) {
      (void)dim;
      Subspace hpq = intersect(pt.f[p], pt.f[k - p].conj());
      Matrix v = hpq.basis();
      Matrix herm = v * pt.form * v.conj().transpose() * i_power(2 * p - k);
      if (!is_positive_definite(herm))
        out.verdict.fail("graded point is not polarized on H^{" + std::to_string(p) + "," + std::to_string(k - p) + "}");
    }
  }
  if (!(pt.numbers == datum.p.by_weight.at(k)))
    out.verdict.fail("graded point does not have the type p_k of the boundary component");
  // Gr_{k-1} and Gr_{k+1} are lines, so they coincide with their primitive parts.
  MhsVerdict mv = validate_mhs(w, f);
  for (int lambda : {k - 1, k + 1}) {
    auto it = mv.graded.find(lambda);
    if (it == mv.graded.end() || !(it->second == datum.p.by_weight.at(lambda)))
      out.verdict.fail("primitive numbers at weight " + std::to_string(lambda) + " disagree with the limit");
  }
  return out;
}

Verdict reference_vs_limit_graded(const HodgeFiltration& f_limit, const HodgeFiltration& f_reference,
                                  const WeightFiltration& w) {
  Verdict v;
  for (int l = 0; l <= 2 * w.center() + 1; ++l) {
    if (w.gr_dim(l) == 0) continue;
    auto a = induced_on_gr(w, f_limit, l);
    auto b = induced_on_gr(w, f_reference, l);
    const int lo = std::min(a.empty() ? 0 : a.begin()->first, b.empty() ? 0 : b.begin()->first);
    const int hi = std::max(a.empty() ? 0 : a.rbegin()->first, b.empty() ? 0 : b.rbegin()->first);
    for (int p = lo; p <= hi; ++p) {
      Subspace la = sum(intersect(f_limit[p], w[l]), w[l - 1]);
      Subspace lb = sum(intersect(f_reference[p], w[l]), w[l - 1]);
      if (la != lb) v.fail("induced F^" + std::to_string(p) + " differs on Gr_" + std::to_string(l));
    }
  }
  return v;
}

Json to_json(const PrimitiveTable& p) {
  Json j = Json::object();
  for (const auto& [lambda, h] : p.by_weight) {
    Json row = Json::object();
    for (const auto& [a, x] : h.h) row[std::to_string(a) + "," + std::to_string(lambda - a)] = x;
    j[std::to_string(lambda)] = row;
  }
  return {{"k", p.k}, {"primitive", j}};
}

Json to_json(const BoundaryResult& r) {
  Json numbers = Json::object();
  for (const auto& [a, x] : r.point.numbers.h) numbers[std::to_string(a) + "," + std::to_string(r.point.weight - a)] = x;
  Json steps = Json::object();
  for (int p = r.point.f.p_min(); p <= r.point.f.p_max(); ++p) steps[std::to_string(p)] = subspace_to_json(r.point.f[p]);
  return {{"schema", "hodge-limits/boundary/1"},
          {"ok", r.verdict.ok},
          {"failures", r.verdict.failures},
          {"W_minus1", subspace_to_json(r.datum.w_minus1)},
          {"psi_sign", r.datum.psi_sign},
          {"psi_value", r.datum.psi_value.get_str()},
          {"primitive_numbers", to_json(r.datum.p)},
          {"graded_point",
           {{"weight", r.point.weight},
            {"basis", matrix_to_json(r.point.basis)},
            {"hodge_numbers", numbers},
            {"F", steps},
            {"form", matrix_to_json(r.point.form)}}}};
}

}  // namespace hodge

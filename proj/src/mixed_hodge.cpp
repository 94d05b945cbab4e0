#include "hodge/mixed_hodge.hpp"

#include "hodge/errors.hpp"

namespace hodge {

namespace {

std::string bideg(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// Pure check on a quotient top/floor with floor and top real. `lift(p)` is the
// preimage in top of the induced F^p.
template <typename Lift>
PureVerdict validate_pure_quotient(const Subspace& top, const Subspace& floor, int k, int p_lo, int p_hi,
                                   Lift lift) {
  PureVerdict out;
  out.numbers.weight = k;
  const std::size_t n = top.dim() - floor.dim();
  for (int p = p_lo; p <= p_hi + 1; ++p) {
    Subspace a = lift(p);
    Subspace b = lift(k - p + 1).conj();
    const std::size_t da = a.dim() - floor.dim(), db = b.dim() - floor.dim();
    const std::size_t ds = sum(a, b).dim() - floor.dim();
    if (da + db != n || ds != n)
      out.verdict.fail("F^" + std::to_string(p) + " + conj F^" + std::to_string(k - p + 1) +
                       " is not a direct sum decomposition at weight " + std::to_string(k) + " (dims " +
                       std::to_string(da) + " + " + std::to_string(db) + ", span " + std::to_string(ds) + " of " +
                       std::to_string(n) + ")");
  }
  for (int p = p_lo; p <= p_hi; ++p) {
    const std::size_t h = lift(p).dim() - lift(p + 1).dim();
    if (h) out.numbers.h[p] = h;
  }
  return out;
}

}  // namespace

HodgeFiltration::HodgeFiltration(int p_min, std::vector<Subspace> steps) : p_min_(p_min), steps_(std::move(steps)) {
  if (steps_.empty()) throw PreconditionError("Hodge filtration needs at least one step");
  ambient_ = steps_.front().ambient();
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    if (steps_[k].ambient() != ambient_) throw DimensionError("Hodge filtration steps differ in ambient dimension");
    if (k > 0 && !steps_[k - 1].contains(steps_[k]))
      throw PreconditionError("Hodge filtration is not decreasing at F^" + std::to_string(p_min_ + static_cast<int>(k)));
  }
  zero_ = Subspace::zero(ambient_);
  full_ = Subspace::full(ambient_);
}

const Subspace& HodgeFiltration::operator[](int p) const {
  if (p < p_min_) return full_;
  if (p > p_max()) return zero_;
  return steps_[static_cast<std::size_t>(p - p_min_)];
}

HodgeFiltration HodgeFiltration::conj() const {
  std::vector<Subspace> s;
  for (const auto& x : steps_) s.push_back(x.conj());
  return HodgeFiltration(p_min_, std::move(s));
}

HodgeFiltration HodgeFiltration::mapped(const Matrix& g) const {
  std::vector<Subspace> s;
  for (const auto& x : steps_) s.push_back(x.mapped(g));
  return HodgeFiltration(p_min_, std::move(s));
}

bool operator==(const HodgeFiltration& a, const HodgeFiltration& b) {
  if (a.ambient_ != b.ambient_) return false;
  const int lo = std::min(a.p_min(), b.p_min()), hi = std::max(a.p_max(), b.p_max());
  for (int p = lo; p <= hi; ++p)
    if (a[p] != b[p]) return false;
  return true;
}

std::size_t HodgeNumbers::total() const {
  std::size_t t = 0;
  for (const auto& [p, v] : h) t += v;
  return t;
}

PureVerdict validate_pure(const HodgeFiltration& f, int k) {
  Subspace full = Subspace::full(f.ambient()), zero = Subspace::zero(f.ambient());
  const int lo = std::min(f.p_min() - 1, k - f.p_max() - 1);
  const int hi = std::max(f.p_max(), k - f.p_min() + 1);
  return validate_pure_quotient(full, zero, k, lo, hi, [&](int p) { return f[p]; });
}

std::map<int, QuotientSubspace> induced_on_gr(const WeightFiltration& w, const HodgeFiltration& f, int k) {
  std::map<int, QuotientSubspace> out;
  for (int p = f.p_min() - 1; p <= f.p_max() + 1; ++p)
    out[p] = {sum(intersect(f[p], w[k]), w[k - 1]), w[k - 1]};
  return out;
}

MhsVerdict validate_mhs(const WeightFiltration& w, const HodgeFiltration& f) {
  MhsVerdict out;
  if (w.ambient() != f.ambient()) {
    out.verdict.fail("W and F live in different dimensions");
    return out;
  }
  for (int l = 0; l <= 2 * w.center(); ++l)
    if (!w[l].is_real()) out.verdict.fail("W_" + std::to_string(l) + " is not defined over Q");
  if (!out.verdict.ok) return out;
  for (int k = 0; k <= 2 * w.center(); ++k) {
    if (w.gr_dim(k) == 0) continue;
    const int lo = std::min(f.p_min() - 1, k - f.p_max() - 1);
    const int hi = std::max(f.p_max(), k - f.p_min() + 1);
    auto lift = [&](int p) { return sum(intersect(f[p], w[k]), w[k - 1]); };
    PureVerdict pv = validate_pure_quotient(w[k], w[k - 1], k, lo, hi, lift);
    out.verdict.absorb(pv.verdict, "Gr_" + std::to_string(k) + ": ");
    out.graded[k] = pv.numbers;
  }
  return out;
}

Subspace BigradedSplitting::piece(int a, int b) const {
  auto it = pieces.find({a, b});
  return it == pieces.end() ? Subspace::zero(ambient) : it->second;
}

Matrix BigradedSplitting::basis_columns() const {
  Matrix rows(0, ambient);
  for (const auto& [ab, s] : pieces) rows = rows.stacked(s.basis());
  return rows.transpose();
}

Subspace BigradedSplitting::lower(int p, int q) const {
  Subspace out = Subspace::zero(ambient);
  for (const auto& [ab, s] : pieces)
    if (ab.first < p && ab.second < q) out = sum(out, s);
  return out;
}

std::map<Bidegree, std::size_t> BigradedSplitting::dims() const {
  std::map<Bidegree, std::size_t> out;
  for (const auto& [ab, s] : pieces) out[ab] = s.dim();
  return out;
}

BigradedSplitting deligne_splitting(const WeightFiltration& w, const HodgeFiltration& f) {
  MhsVerdict v = validate_mhs(w, f);
  if (!v.verdict.ok) throw PreconditionError("not a mixed Hodge structure: " + v.verdict.failures.front());
  HodgeFiltration fc = f.conj();
  BigradedSplitting out;
  out.ambient = f.ambient();
  for (int l = 0; l <= 2 * w.center(); ++l) {
    if (w.gr_dim(l) == 0) continue;
    for (int a = f.p_min() - 1; a <= f.p_max(); ++a) {
      const int b = l - a;
      Subspace left = intersect(f[a], w[l]);
      if (left.is_zero()) continue;
      Subspace right = intersect(fc[b], w[l]);
      for (int j = 1; l - j - 1 >= 0; ++j) right = sum(right, intersect(fc[b - j], w[l - j - 1]));
      Subspace piece = intersect(left, right);
      if (!piece.is_zero()) out.pieces.emplace(Bidegree{a, b}, std::move(piece));
    }
  }
  Verdict check = verify_splitting(out, w, f);
  if (!check.ok) throw Error("internal: Deligne splitting failed verification: " + check.failures.front());
  return out;
}

Verdict verify_splitting(const BigradedSplitting& s, const WeightFiltration& w, const HodgeFiltration& f) {
  Verdict v;
  std::size_t total = 0;
  Subspace span = Subspace::zero(s.ambient);
  for (const auto& [ab, piece] : s.pieces) {
    total += piece.dim();
    span = sum(span, piece);
  }
  if (total != s.ambient || !span.is_full()) v.fail("pieces do not form a direct sum decomposition");
  for (int l = -1; l <= 2 * w.center(); ++l) {
    Subspace rebuilt = Subspace::zero(s.ambient);
    for (const auto& [ab, piece] : s.pieces)
      if (ab.first + ab.second <= l) rebuilt = sum(rebuilt, piece);
    if (rebuilt != w[l]) v.fail("W_" + std::to_string(l) + " is not the sum of I^{a,b} with a+b <= l");
  }
  for (int p = f.p_min() - 1; p <= f.p_max() + 1; ++p) {
    Subspace rebuilt = Subspace::zero(s.ambient);
    for (const auto& [ab, piece] : s.pieces)
      if (ab.first >= p) rebuilt = sum(rebuilt, piece);
    if (rebuilt != f[p]) v.fail("F^" + std::to_string(p) + " is not the sum of I^{a,b} with a >= p");
  }
  for (const auto& [ab, piece] : s.pieces) {
    const auto [p, q] = ab;
    Subspace target = sum(s.piece(q, p).conj(), s.lower(p, q));
    if (!target.contains(piece)) v.fail("I^" + bideg(p, q) + " is not congruent to conj I^" + bideg(q, p));
  }
  return v;
}

bool is_r_split(const BigradedSplitting& s) {
  for (const auto& [ab, piece] : s.pieces)
    if (s.piece(ab.second, ab.first).conj() != piece) return false;
  return true;
}

MixedHodgeStructure mhs_from_bigrading(const std::map<Bidegree, Matrix>& pieces) {
  if (pieces.empty()) throw PreconditionError("no pieces given");
  const std::size_t n = pieces.begin()->second.cols();
  int max_weight = 0, p_lo = pieces.begin()->first.first, p_hi = p_lo;
  for (const auto& [ab, m] : pieces) {
    if (m.cols() != n) throw DimensionError("pieces differ in ambient dimension");
    if (ab.first + ab.second < 0) throw PreconditionError("negative weights are not supported");
    max_weight = std::max(max_weight, ab.first + ab.second);
    p_lo = std::min(p_lo, ab.first);
    p_hi = std::max(p_hi, ab.first);
  }
  const int center = (max_weight + 1) / 2;
  std::vector<Subspace> ws;
  for (int l = 0; l <= 2 * center; ++l) {
    Matrix rows(0, n);
    for (const auto& [ab, m] : pieces)
      if (ab.first + ab.second <= l) rows = rows.stacked(m);
    ws.push_back(rows.rows() ? Subspace::span(rows) : Subspace::zero(n));
  }
  std::vector<Subspace> fs;
  for (int p = p_lo; p <= p_hi; ++p) {
    Matrix rows(0, n);
    for (const auto& [ab, m] : pieces)
      if (ab.first >= p) rows = rows.stacked(m);
    fs.push_back(rows.rows() ? Subspace::span(rows) : Subspace::zero(n));
  }
  return {WeightFiltration(center, std::move(ws)), HodgeFiltration(p_lo, std::move(fs))};
}

Matrix r_split_delta(const WeightFiltration& w, const HodgeFiltration& f) {
  BigradedSplitting s = deligne_splitting(w, f);
  const std::size_t n = s.ambient;
  if (n == 0) return Matrix();
  // g sends each I^{p,q} onto conj I^{q,p} and is the identity modulo lower pieces.
  std::vector<Vector> sources, targets;
  for (const auto& [ab, piece] : s.pieces) {
    const auto [p, q] = ab;
    Subspace conj_piece = s.piece(q, p).conj();
    Subspace low = s.lower(p, q);
    Matrix gens = conj_piece.basis().stacked(low.basis()).transpose();
    for (const auto& v : piece.vectors()) {
      Matrix x;
      if (!solve(gens, Matrix::from_columns({v}, n), x))
        throw Error("internal: conjugation congruence fails for I^" + bideg(p, q));
      Vector w_vec(n);
      for (std::size_t k = 0; k < conj_piece.dim(); ++k)
        for (std::size_t c = 0; c < n; ++c)
          if (!x(k, 0).is_zero()) w_vec[c] += x(k, 0) * conj_piece.basis()(k, c);
      sources.push_back(v);
      targets.push_back(std::move(w_vec));
    }
  }
  Matrix b = Matrix::from_columns(sources, n);
  Matrix g = Matrix::from_columns(targets, n) * inverse(b);
  Matrix delta = log_unipotent_matrix(g) * Scalar(Rational(0), Rational(1, 2));

  if (!delta.is_real()) throw Error("internal: delta is not real");
  for (const auto& [ab, piece] : s.pieces)
    if (!s.lower(ab.first, ab.second).contains(piece.mapped(delta)))
      throw Error("internal: delta does not lower I^" + bideg(ab.first, ab.second));
  HodgeFiltration moved = f.mapped(exp_nilpotent(delta * Scalar(Rational(0), Rational(-1))));
  if (!is_r_split(deligne_splitting(w, moved))) throw Error("internal: exp(-i delta) F is not R-split");
  return delta;
}

Scalar i_power(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return Scalar(1);
    case 1: return Scalar::i();
    case 2: return Scalar(-1);
    default: return -Scalar::i();
  }
}

PmhsVerdict validate_pmhs(const BilinearForm& s, const NilpotentOperator& n, const WeightFiltration& w,
                          const HodgeFiltration& f) {
  PmhsVerdict out;
  auto fail = [&](int cond, const std::string& msg) {
    out.conditions[static_cast<std::size_t>(cond - 1)] = false;
    out.verdict.fail("(" + std::to_string(cond) + ") " + msg);
  };
  const int m = w.center();
  if (s.dim() != n.dim() || n.dim() != w.ambient() || w.ambient() != f.ambient())
    throw DimensionError("validate_pmhs: dimension mismatch");
  const Symmetry expected = m % 2 == 0 ? Symmetry::kSymmetric : Symmetry::kAntisymmetric;
  if (s.symmetry() != expected) throw PreconditionError("polarization symmetry does not match (-1)^m");

  if (n.index() > m) fail(1, "N^" + std::to_string(m + 1) + " != 0");
  else if (!(monodromy_weight_filtration(n, m) == w)) fail(2, "W is not the weight filtration of N");
  if (!out.conditions[0]) fail(2, "W(N) undefined because N^{m+1} != 0");

  for (int p = f.p_min(); p <= f.p_max() + 1; ++p)
    if (!f[p - 1].contains(f[p].mapped(n.matrix())))
      fail(3, "N F^" + std::to_string(p) + " is not contained in F^" + std::to_string(p - 1));

  for (int p = f.p_min() - 1; p <= f.p_max() + 1; ++p) {
    const Subspace& a = f[p];
    const Subspace& b = f[m - p + 1];
    if (a.is_zero() || b.is_zero()) continue;
    if (!pairing(s, a.basis(), b.basis()).is_zero())
      fail(4, "S(F^" + std::to_string(p) + ", F^" + std::to_string(m - p + 1) + ") != 0");
  }

  MhsVerdict mv = validate_mhs(w, f);
  if (!mv.verdict.ok || !out.conditions[0] || !out.conditions[1]) {
    fail(5, "positivity not evaluated: (W, F) is not a mixed Hodge structure for W(N)");
    if (!mv.verdict.ok) out.verdict.absorb(mv.verdict, "(5) ");
    return out;
  }
  BigradedSplitting split = deligne_splitting(w, f);
  for (const auto& [ab, piece] : split.pieces) {
    const auto [p, q] = ab;
    const int l = p + q - m;
    if (l < 0) continue;
    Subspace prim = intersect(piece, kernel(n.power(l + 1)));
    if (prim.is_zero()) continue;
    out.primitive[m + l].weight = m + l;
    out.primitive[m + l].h[p] = prim.dim();
    Matrix v = prim.basis();
    Matrix h = pairing(s, v, v.conj() * n.power(l).transpose()) * i_power(p - q);
    if (!is_positive_definite(h))
      fail(5, "Hodge-Riemann form is not positive definite on the primitive part of I^" + bideg(p, q));
  }
  return out;
}

}  // namespace hodge

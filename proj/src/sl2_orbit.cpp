#include "hodge/sl2_orbit.hpp"

#include "hodge/errors.hpp"

namespace hodge {

namespace {

Vector vec(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

Matrix unvec(const Vector& v, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
  return m;
}

// Matrix of X -> NX - XN on row-major vectorizations.
Matrix ad_matrix(const Matrix& n) {
  const std::size_t d = n.rows();
  Matrix a(d * d, d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t k = 0; k < d; ++k) {
        if (!n(r, k).is_zero()) a(r * d + c, k * d + c) += n(r, k);
        if (!n(k, c).is_zero()) a(r * d + c, r * d + k) -= n(k, c);
      }
  return a;
}

std::map<int, Matrix> projectors(const std::map<int, Subspace>& spaces, std::size_t n) {
  std::vector<Vector> cols;
  std::vector<int> labels;
  for (const auto& [l, s] : spaces)
    for (const auto& v : s.vectors()) {
      cols.push_back(v);
      labels.push_back(l);
    }
  Matrix b = Matrix::from_columns(cols, n);
  Matrix b_inv = inverse(b);
  std::map<int, Matrix> out;
  for (const auto& [l, s] : spaces) {
    Matrix d(n, n);
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == l) d(k, k) = 1;
    out[l] = b * d * b_inv;
  }
  return out;
}

}  // namespace

std::map<int, Subspace> integer_eigenspaces(const Matrix& y) {
  if (!y.is_square()) throw DimensionError("eigenspaces of a non-square matrix");
  const std::size_t n = y.rows();
  Rational bound = 0;
  for (std::size_t r = 0; r < n; ++r) {
    Rational row = 0;
    for (std::size_t c = 0; c < n; ++c) row += abs(y(r, c).re()) + abs(y(r, c).im());
    if (row > bound) bound = row;
  }
  const Integer whole = bound.get_num() / bound.get_den();
  const long b = whole.get_si();
  std::map<int, Subspace> out;
  std::size_t total = 0;
  for (long l = -b; l <= b && total < n; ++l) {
    Subspace e = kernel(y - Matrix::identity(n) * Scalar(l));
    if (e.is_zero()) continue;
    total += e.dim();
    out.emplace(static_cast<int>(l), std::move(e));
  }
  if (total != n) throw PreconditionError("matrix is not diagonalizable with integer eigenvalues");
  return out;
}

GradingElement canonical_grading(const BigradedSplitting& s, int k) {
  if (!is_r_split(s)) throw PreconditionError("canonical grading needs an R-split structure");
  const std::size_t n = s.ambient;
  Matrix b = s.basis_columns();
  Matrix d(n, n);
  std::size_t col = 0;
  for (const auto& [ab, piece] : s.pieces)
    for (std::size_t r = 0; r < piece.dim(); ++r, ++col) d(col, col) = ab.first + ab.second - k;
  GradingElement g;
  g.y = n ? b * d * inverse(b) : Matrix();
  if (!g.y.is_real()) throw Error("internal: canonical grading is not real");
  for (const auto& [ab, piece] : s.pieces) {
    const int l = ab.first + ab.second - k;
    auto it = g.eigenspaces.find(l);
    if (it == g.eigenspaces.end()) g.eigenspaces.emplace(l, piece);
    else it->second = sum(it->second, piece);
  }
  return g;
}

Sl2Triple complete_sl2_triple(const NilpotentOperator& n, const Matrix& y) {
  const std::size_t d = n.dim();
  const Matrix& nm = n.matrix();
  if (y.rows() != d || y.cols() != d) throw DimensionError("Y and N differ in size");
  if (commutator(y, nm) != nm * Scalar(-2)) throw PreconditionError("[Y, N] != -2N");
  auto spaces = integer_eigenspaces(y);
  std::vector<Vector> sources, targets;
  for (const auto& [l, h] : spaces) {
    if (l < 0) continue;
    Subspace prim = intersect(h, kernel(n.power(l + 1)));
    for (const auto& v : prim.vectors()) {
      // v, Nv, ..., N^l v with N+ N^j v = j (l - j + 1) N^{j-1} v.
      std::vector<Vector> string{v};
      for (int j = 1; j <= l; ++j) string.push_back(nm * string.back());
      for (int j = 0; j <= l; ++j) {
        sources.push_back(string[static_cast<std::size_t>(j)]);
        if (j == 0) {
          targets.push_back(Vector(d));
        } else {
          Vector t = string[static_cast<std::size_t>(j - 1)];
          Scalar c(static_cast<long>(j) * (l - j + 1));
          for (auto& x : t) x *= c;
          targets.push_back(std::move(t));
        }
      }
    }
  }
  if (sources.size() != d || rank(Matrix::from_rows(sources, d)) != d)
    throw PreconditionError("(N, Y) does not extend to an sl2-triple: strings do not span");
  Sl2Triple t{nm, y, d ? Matrix::from_columns(targets, d) * inverse(Matrix::from_columns(sources, d)) : Matrix()};
  Verdict v = check_sl2_relations(t);
  if (!v.ok) throw PreconditionError("(N, Y) does not extend to an sl2-triple: " + v.failures.front());
  return t;
}

Verdict check_sl2_relations(const Sl2Triple& t) {
  Verdict v;
  if (commutator(t.y, t.n_minus) != t.n_minus * Scalar(-2)) v.fail("[Y, N] != -2N");
  if (commutator(t.y, t.n_plus) != t.n_plus * Scalar(2)) v.fail("[Y, N+] != 2N+");
  if (commutator(t.n_plus, t.n_minus) != t.y) v.fail("[N+, N] != Y");
  return v;
}

std::vector<Matrix> compute_c_space(const NilpotentOperator& n) {
  Matrix a = ad_matrix(n.matrix());
  Subspace c = intersect(kernel(a), image(a));
  std::vector<Matrix> out;
  for (const auto& v : c.vectors()) out.push_back(unvec(v, n.dim()));
  return out;
}

std::vector<Matrix> grading_directions(const NilpotentOperator& n, const WeightFiltration& w) {
  const std::size_t d = n.dim();
  Matrix conditions = ad_matrix(n.matrix());
  for (int l = 0; l <= 2 * w.center() + 1; ++l) {
    Subspace below = dot_complement(w[l - 1]);
    for (const auto& c : below.vectors())
      for (const auto& x : w[l].vectors()) {
        Matrix row(1, d * d);
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b)
            if (!c[a].is_zero() && !x[b].is_zero()) row(0, a * d + b) = c[a] * x[b];
        conditions = conditions.stacked(row);
      }
  }
  std::vector<Matrix> out;
  for (const auto& v : kernel(conditions).vectors()) out.push_back(unvec(v, d));
  return out;
}

bool grading_orbit_witness(const Matrix& y0, const Matrix& y, const std::vector<Matrix>& c_space, Matrix& x) {
  const std::size_t n = y0.rows();
  auto proj = projectors(integer_eigenspaces(y0), n);
  x = Matrix(n, n);
  for (std::size_t iter = 0; iter <= 4 * n + 4; ++iter) {
    Matrix g = exp_nilpotent(x);
    Matrix residual = y - g * y0 * inverse(g);
    if (residual.is_zero()) {
      if (x.is_zero()) return true;
      if (c_space.empty()) return false;
      std::vector<Vector> rows;
      for (const auto& c : c_space) rows.push_back(vec(c));
      return Subspace::span(rows, n * n).contains(vec(x));
    }
    // Graded pieces of the residual for ad(y0); take the one of largest degree.
    std::map<int, Matrix> graded;
    for (const auto& [a, pa] : proj)
      for (const auto& [b, pb] : proj) {
        Matrix piece = pa * residual * pb;
        if (piece.is_zero()) continue;
        auto it = graded.find(a - b);
        if (it == graded.end()) graded.emplace(a - b, piece);
        else it->second += piece;
      }
    const int top = graded.rbegin()->first;
    if (top >= 0) return false;
    x += graded.rbegin()->second * Scalar(Rational(1, -top));
    if (nilpotency_index(x) < 0) return false;
  }
  return false;
}

HodgeFiltration nilpotent_orbit_eval(const NilpotentOperator& n, const HodgeFiltration& f, const Scalar& z) {
  return f.mapped(exp_nilpotent(n.matrix() * z));
}

OrbitVerdict check_orbit_correspondence(const BilinearForm& s, const NilpotentOperator& n, const HodgeFiltration& f,
                                        int m) {
  OrbitVerdict out;
  WeightFiltration w = monodromy_weight_filtration(n, m);
  PmhsVerdict pv = validate_pmhs(s, n, w, f);
  if (!pv.verdict.ok) {
    out.verdict.absorb(pv.verdict, "limit is not a PMHS: ");
    return out;
  }
  BigradedSplitting split = deligne_splitting(w, f);
  if (!is_r_split(split)) {
    out.verdict.fail("limit is not R-split");
    return out;
  }
  HodgeFiltration moved = nilpotent_orbit_eval(n, f, Scalar::i());
  out.moved = validate_pure(moved, m);
  out.verdict.absorb(out.moved.verdict, "exp(iN)F: ");

  NilpotentOperator zero(Matrix::zero(n.dim(), n.dim()));
  PmhsVerdict polarized = validate_pmhs(s, zero, monodromy_weight_filtration(zero, m), moved);
  out.verdict.absorb(polarized.verdict, "exp(iN)F polarization: ");

  Sl2Triple t = complete_sl2_triple(n, canonical_grading(split, m).y);
  out.verdict.absorb(check_sl2_relations(t), "sl2: ");
  Matrix x_minus = t.n_plus + t.n_minus + t.y * Scalar::i();
  HodgeFiltration moved_conj = moved.conj();
  for (int p = moved.p_min() - 1; p <= moved.p_max(); ++p) {
    Subspace here = intersect(moved[p], moved_conj[m - p]);
    if (here.is_zero()) continue;
    Subspace next = intersect(moved[p - 1], moved_conj[m - p + 1]);
    if (!next.contains(here.mapped(x_minus)))
      out.verdict.fail("N+ + N + iY does not map H^{" + std::to_string(p) + "," + std::to_string(m - p) +
                       "} into H^{" + std::to_string(p - 1) + "," + std::to_string(m - p + 1) + "}");
  }
  return out;
}

}  // namespace hodge

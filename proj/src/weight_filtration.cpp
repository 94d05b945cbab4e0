#include "hodge/weight_filtration.hpp"

#include <algorithm>

#include "hodge/errors.hpp"

namespace hodge {

NilpotentOperator::NilpotentOperator(Matrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) throw DimensionError("nilpotent operator must be square");
  if (!matrix_.is_real()) throw PreconditionError("nilpotent operator must have rational entries");
  powers_.push_back(Matrix::identity(matrix_.rows()));
  while (!powers_.back().is_zero()) {
    if (powers_.size() > matrix_.rows() + 1)
      throw PreconditionError("operator is not nilpotent: N^" + std::to_string(powers_.size() - 1) + " != 0");
    powers_.push_back(powers_.back() * matrix_);
  }
  index_ = static_cast<int>(powers_.size()) - 2;
  if (index_ < 0) index_ = 0;  // the empty space
}

const Matrix& NilpotentOperator::power(int k) const {
  if (k < 0) throw PreconditionError("negative power of a nilpotent operator");
  if (static_cast<std::size_t>(k) >= powers_.size()) return powers_.back();
  return powers_[static_cast<std::size_t>(k)];
}

UnipotentOperator::UnipotentOperator(Matrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) throw DimensionError("unipotent operator must be square");
  if (!matrix_.is_real()) throw PreconditionError("unipotent operator must have rational entries");
  const std::size_t n = matrix_.rows();
  Matrix e = matrix_ - Matrix::identity(n);
  Matrix p = e;
  int k = 0;
  while (!p.is_zero()) {
    ++k;
    if (static_cast<std::size_t>(k) > n)
      throw PreconditionError("operator is not unipotent: (T-I)^" + std::to_string(k) + " != 0");
    p = p * e;
  }
  index_ = k;
}

NilpotentOperator log_unipotent(const UnipotentOperator& t) {
  const std::size_t n = t.matrix().rows();
  Matrix a = Matrix::identity(n) - t.matrix();
  Matrix term = a;
  Matrix sum(n, n);
  for (int k = 1; !term.is_zero(); ++k) {
    sum -= term * Scalar(Rational(1, k));
    term = term * a;
  }
  return NilpotentOperator(sum);
}

WeightFiltration::WeightFiltration(int center, std::vector<Subspace> steps)
    : center_(center), steps_(std::move(steps)) {
  if (center_ < 0) throw PreconditionError("weight filtration center must be non-negative");
  if (steps_.size() != static_cast<std::size_t>(2 * center_ + 1))
    throw PreconditionError("weight filtration needs exactly 2m+1 steps");
  ambient_ = steps_.front().ambient();
  for (std::size_t l = 0; l < steps_.size(); ++l) {
    if (steps_[l].ambient() != ambient_) throw DimensionError("weight filtration steps differ in ambient dimension");
    if (l > 0 && !steps_[l].contains(steps_[l - 1]))
      throw PreconditionError("weight filtration is not increasing at W_" + std::to_string(l));
  }
  if (!steps_.back().is_full()) throw PreconditionError("top weight step is not the full space");
  zero_ = Subspace::zero(ambient_);
  full_ = Subspace::full(ambient_);
}

const Subspace& WeightFiltration::operator[](int l) const {
  if (l < 0) return zero_;
  if (l > 2 * center_) return full_;
  return steps_[static_cast<std::size_t>(l)];
}

std::size_t WeightFiltration::gr_dim(int l) const { return (*this)[l].dim() - (*this)[l - 1].dim(); }

std::vector<std::size_t> WeightFiltration::step_dims() const {
  std::vector<std::size_t> out;
  for (const auto& s : steps_) out.push_back(s.dim());
  return out;
}

WeightFiltration monodromy_weight_filtration(const NilpotentOperator& n, int center) {
  if (center < 0) throw PreconditionError("center must be non-negative");
  if (n.index() > center)
    throw PreconditionError("nilpotency index " + std::to_string(n.index()) + " exceeds center " +
                            std::to_string(center));
  const std::size_t dim = n.dim();
  const int top = n.index() + 1;
  std::vector<Subspace> kernels, images;
  for (int k = 0; k <= 2 * top + 1; ++k) {
    kernels.push_back(kernel(n.power(k)));
    images.push_back(image(n.power(k)));
  }
  auto ker = [&](int k) -> const Subspace& { return kernels[static_cast<std::size_t>(std::min(k, 2 * top + 1))]; };
  auto im = [&](int k) -> const Subspace& { return images[static_cast<std::size_t>(std::min(k, 2 * top + 1))]; };

  std::vector<Subspace> steps;
  for (int l = 0; l <= 2 * center; ++l) {
    const int j = l - center;
    Subspace w = Subspace::zero(dim);
    for (int b = std::max(0, -j); b <= top; ++b) {
      if (j + b + 1 <= 0) continue;
      w = sum(w, intersect(ker(j + b + 1), im(b)));
    }
    steps.push_back(std::move(w));
  }
  WeightFiltration w(center, std::move(steps));
  Verdict v = verify_weight_filtration(n, w);
  if (!v.ok) throw Error("internal: constructed weight filtration failed verification: " + v.failures.front());
  return w;
}

std::size_t induced_rank(const NilpotentOperator& n, const WeightFiltration& w, int from, int power) {
  const int to = from - 2 * power;
  const Subspace& floor = w[to - 1];
  Subspace img = sum(w[from].mapped(n.power(power)), floor);
  return img.dim() - floor.dim();
}

Verdict verify_weight_filtration(const NilpotentOperator& n, const WeightFiltration& w) {
  Verdict v;
  if (w.ambient() != n.dim()) {
    v.fail("dimension mismatch between operator and filtration");
    return v;
  }
  const int m = w.center();
  for (int l = 0; l <= 2 * m; ++l)
    if (!w[l - 2].contains(w[l].mapped(n.matrix())))
      v.fail("N(W_" + std::to_string(l) + ") is not contained in W_" + std::to_string(l - 2));
  for (int l = 0; l <= m; ++l) {
    const std::size_t up = w.gr_dim(m + l), down = w.gr_dim(m - l);
    const std::size_t r = induced_rank(n, w, m + l, l);
    if (up != down || r != up)
      v.fail("N^" + std::to_string(l) + " : Gr_" + std::to_string(m + l) + " -> Gr_" + std::to_string(m - l) +
             " is not an isomorphism (dims " + std::to_string(up) + ", " + std::to_string(down) + ", rank " +
             std::to_string(r) + ")");
  }
  return v;
}

PrimitiveDecomposition primitive_decomposition(const NilpotentOperator& n, const WeightFiltration& w) {
  if (!verify_weight_filtration(n, w).ok) throw PreconditionError("filtration is not W(N) for this operator");
  const int m = w.center();
  PrimitiveDecomposition out;
  for (int l = 0; l <= m; ++l) {
    const int k = m + l;
    Subspace lift = preimage(n.power(l + 1), w[m - l - 3], w[k]);
    out.parts[k] = {lift, w[k - 1]};
  }
  for (int k = 0; k <= 2 * m; ++k) {
    auto& row = out.summands[k];
    for (int i = 0; k + 2 * i <= 2 * m; ++i) {
      if (k + 2 * i < m) continue;
      const QuotientSubspace& p = out.parts.at(k + 2 * i);
      row[i] = {sum(p.lift.mapped(n.power(i)), w[k - 1]), w[k - 1]};
    }
  }
  return out;
}

KernelGradedDecomposition kernel_graded_decomposition(const NilpotentOperator& n, const WeightFiltration& w,
                                                      int k) {
  if (k > w.center()) throw PreconditionError("kernel decomposition requires k <= m");
  Subspace ker_n = kernel(n.matrix());
  KernelGradedDecomposition out;
  out.gr_dim = w.gr_dim(k);
  for (int a = 0; k - 2 * a >= 0; ++a) {
    const int l = k - 2 * a;
    out.kernel_gr.push_back(intersect(w[l], ker_n).dim() - intersect(w[l - 1], ker_n).dim());
  }
  return out;
}

GradedForm graded_form(const NilpotentOperator& n, const BilinearForm& s, const WeightFiltration& w, int l) {
  const int m = w.center();
  Matrix q = quotient_basis(w[m + l - 1], w[m + l]);
  return {q, pairing(s, q, q * n.power(l).transpose())};
}

GradedForm transported_form(const NilpotentOperator& n, const BilinearForm& s, const WeightFiltration& w, int l) {
  GradedForm up = graded_form(n, s, w, l);
  return {up.basis * n.power(l).transpose(), up.gram};
}

Verdict check_polarization_compat(const NilpotentOperator& n, const BilinearForm& s, const WeightFiltration& w) {
  Verdict v;
  const Matrix& g = s.gram();
  Matrix defect = n.matrix().transpose() * g + g * n.matrix();
  for (std::size_t r = 0; r < defect.rows() && v.ok; ++r)
    for (std::size_t c = 0; c < defect.cols(); ++c)
      if (!defect(r, c).is_zero()) {
        v.fail("N is not an infinitesimal isometry: S(N e_" + std::to_string(r) + ", e_" + std::to_string(c) +
               ") + S(e_" + std::to_string(r) + ", N e_" + std::to_string(c) + ") = " + defect(r, c).to_string());
        break;
      }
  if (!v.ok) return v;
  if (!s.is_nondegenerate()) {
    v.fail("polarization is degenerate");
    return v;
  }
  const int m = w.center();
  for (int l = -1; l <= 2 * m; ++l)
    if (annihilator(s, w[l]) != w[2 * m - l - 1])
      v.fail("W_" + std::to_string(l) + "^perp != W_" + std::to_string(2 * m - l - 1));
  for (int l = 0; l <= m; ++l)
    if (!is_invertible(graded_form(n, s, w, l).gram))
      v.fail("S(., N^" + std::to_string(l) + " .) is degenerate on Gr_" + std::to_string(m + l));
  return v;
}

}  // namespace hodge

#include "hodge/models.hpp"

#include "hodge/errors.hpp"

namespace hodge {

PmhsModel weight_one_model() {
  NilpotentOperator n(Matrix{{0, 1}, {0, 0}});
  BilinearForm s(Matrix{{0, -1}, {1, 0}}, Symmetry::kAntisymmetric);
  WeightFiltration w = monodromy_weight_filtration(n, 1);
  HodgeFiltration f(1, {Subspace::coordinate(2, {1})});
  return {s, n, w, f, 1};
}

PmhsModel index_one_model(int k, const std::map<int, std::size_t>& middle) {
  if (k < 1 || k % 2 == 0) throw PreconditionError("index-one model needs an odd positive weight");
  for (const auto& [p, h] : middle)
    if (h != (middle.count(k - p) ? middle.at(k - p) : 0))
      throw PreconditionError("middle Hodge numbers are not symmetric");

  std::vector<std::pair<int, std::size_t>> upper;  // (p, multiplicity) with p > k - p
  std::size_t pairs = 0;
  for (const auto& [p, h] : middle)
    if (2 * p > k && h > 0) {
      upper.emplace_back(p, h);
      pairs += h;
    }
  const std::size_t dim = 2 * pairs + 2;
  const std::size_t bot = 0, top = dim - 1;

  Matrix g(dim, dim);
  g(top, bot) = 1;
  g(bot, top) = -1;
  Matrix nm(dim, dim);
  nm(bot, top) = 1;

  const int lo_tate = (k - 1) / 2, hi_tate = (k + 1) / 2;
  int p_min = lo_tate, p_max = hi_tate;
  for (const auto& [p, h] : upper) {
    p_min = std::min(p_min, k - p);
    p_max = std::max(p_max, p);
  }
  // Vectors spanning each Hodge type, with their first index p.
  std::vector<std::pair<int, Vector>> typed;
  Vector e_bot(dim), e_top(dim);
  e_bot[bot] = 1;
  e_top[top] = 1;
  typed.emplace_back(lo_tate, e_bot);
  typed.emplace_back(hi_tate, e_top);
  std::size_t next = 1;
  for (const auto& [p, h] : upper) {
    const int q = k - p;
    // i^{p-q} S(v, conj v) > 0 for v = x + i y forces S(x, y) = -(-1)^{(p-q+1)/2}.
    const long sxy = ((p - q + 1) / 2) % 2 == 0 ? -1 : 1;
    for (std::size_t r = 0; r < h; ++r) {
      const std::size_t x = next++, y = next++;
      g(x, y) = sxy;
      g(y, x) = -sxy;
      Vector v(dim), vbar(dim);
      v[x] = 1;
      v[y] = Scalar::i();
      vbar[x] = 1;
      vbar[y] = -Scalar::i();
      typed.emplace_back(p, v);
      typed.emplace_back(q, vbar);
    }
  }
  std::vector<Subspace> steps;
  for (int p = p_min; p <= p_max; ++p) {
    std::vector<Vector> gens;
    for (const auto& [a, v] : typed)
      if (a >= p) gens.push_back(v);
    steps.push_back(Subspace::span(gens, dim));
  }
  NilpotentOperator n(nm);
  return {BilinearForm(g, Symmetry::kAntisymmetric), n, monodromy_weight_filtration(n, k),
          HodgeFiltration(p_min, std::move(steps)), k};
}

MixedHodgeStructure tate_extension(const Scalar& c) {
  Vector v{c, Scalar(1)};
  WeightFiltration w(1, {Subspace::coordinate(2, {0}), Subspace::coordinate(2, {0}), Subspace::full(2)});
  HodgeFiltration f(0, {Subspace::full(2), Subspace::span(std::vector<Vector>{v}, 2)});
  return {w, f};
}

}  // namespace hodge

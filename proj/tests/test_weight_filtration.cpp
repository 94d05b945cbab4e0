#include <doctest.h>

#include <random>

#include "hodge/errors.hpp"
#include "hodge/weight_filtration.hpp"
#include "flag_search.hpp"
#include "jordan.hpp"
#include "random_matrices.hpp"

using namespace hodge;
using hodge::testing::FlagSearch;
using hodge::testing::jordan_nilpotent;

namespace {

std::vector<std::size_t> gr_dims(const WeightFiltration& w) {
  std::vector<std::size_t> out;
  for (int l = 0; l <= 2 * w.center(); ++l) out.push_back(w.gr_dim(l));
  return out;
}

}  // namespace

TEST_CASE("log of unipotent operators") {
  CHECK(log_unipotent(UnipotentOperator(Matrix::identity(3))).matrix().is_zero());
  Matrix t{{1, 1}, {0, 1}};
  NilpotentOperator n = log_unipotent(UnipotentOperator(t));
  CHECK(n.matrix() == Matrix{{0, 1}, {0, 0}});
  CHECK(n.index() == 1);
  CHECK_THROWS_AS(UnipotentOperator(Matrix{{2, 0}, {0, 1}}), PreconditionError);
  CHECK_THROWS_AS(NilpotentOperator(Matrix::identity(2)), PreconditionError);

  std::mt19937 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    auto parts = testing::partitions(1 + static_cast<int>(rng() % 6));
    const auto& blocks = parts[rng() % parts.size()];
    Matrix j = jordan_nilpotent(blocks);
    Matrix p = testing::random_invertible(rng, j.rows());
    Matrix u = p * exp_nilpotent(j * Scalar(Rational(static_cast<long>(1 + rng() % 3), 2))) * inverse(p);
    UnipotentOperator tu(u);
    NilpotentOperator l = log_unipotent(tu);
    CHECK(exp_nilpotent(l.matrix()) == u);
    CHECK(l.index() == tu.index());
  }
}

TEST_CASE("weight filtration examples") {
  NilpotentOperator zero(Matrix::zero(3, 3));
  WeightFiltration w0 = monodromy_weight_filtration(zero, 1);
  CHECK(w0[0].is_zero());
  CHECK(w0[1].is_full());
  CHECK(w0[2].is_full());

  NilpotentOperator block(jordan_nilpotent({2}));
  WeightFiltration w1 = monodromy_weight_filtration(block, 1);
  CHECK(w1.step_dims() == std::vector<std::size_t>{1, 1, 2});
  CHECK(w1[0] == image(block.matrix()));

  NilpotentOperator t211(jordan_nilpotent({2, 1, 1}));
  CHECK(monodromy_weight_filtration(t211, 1).step_dims() == std::vector<std::size_t>{1, 3, 4});

  CHECK_THROWS_AS(monodromy_weight_filtration(NilpotentOperator(jordan_nilpotent({3})), 1), PreconditionError);
}

TEST_CASE("weight filtration matches the exhaustive flag search") {
  std::mt19937 rng(2024);
  int instances = 0;
  for (int dim = 1; dim <= 5; ++dim) {
    for (const auto& blocks : testing::partitions(dim)) {
      const int index = blocks.front() - 1;
      for (int rep = 0; rep < 12; ++rep) {
        Matrix j = jordan_nilpotent(blocks);
        Matrix p = testing::random_invertible(rng, j.rows());
        Matrix n = p * j * inverse(p);
        const int center = index + static_cast<int>(rep % 2);
        NilpotentOperator op(n);
        WeightFiltration w = monodromy_weight_filtration(op, center);
        CHECK(verify_weight_filtration(op, w).ok);
        FlagSearch search(n, center);
        auto sols = search.solutions();
        REQUIRE(sols.size() == 1);
        CHECK(WeightFiltration(center, sols.front()) == w);
        ++instances;
      }
    }
  }
  CHECK(instances >= 200);
}

TEST_CASE("Gr dimensions depend only on the Jordan type") {
  std::mt19937 rng(77);
  for (int dim = 1; dim <= 6; ++dim)
    for (const auto& blocks : testing::partitions(dim)) {
      const int center = blocks.front() - 1;
      Matrix j = jordan_nilpotent(blocks);
      auto base = gr_dims(monodromy_weight_filtration(NilpotentOperator(j), center));
      for (int l = 0; l <= center; ++l) CHECK(base[static_cast<std::size_t>(center + l)] == base[static_cast<std::size_t>(center - l)]);
      // A block of size s contributes one dimension to Gr_{m+s-1}, Gr_{m+s-3}, ..., Gr_{m-s+1}.
      std::vector<std::size_t> expected(static_cast<std::size_t>(2 * center + 1), 0);
      for (int s : blocks)
        for (int t = s - 1; t >= -(s - 1); t -= 2) ++expected[static_cast<std::size_t>(center + t)];
      CHECK(base == expected);
      for (int rep = 0; rep < 3; ++rep) {
        Matrix p = testing::random_invertible(rng, j.rows());
        CHECK(gr_dims(monodromy_weight_filtration(NilpotentOperator(p * j * inverse(p)), center)) == base);
      }
    }
}

TEST_CASE("index-one shape") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    std::vector<int> blocks{2};
    for (std::size_t k = 2; k < n; ++k) blocks.push_back(1);
    Matrix j = jordan_nilpotent(blocks);
    Matrix p = testing::random_invertible(rng, n);
    NilpotentOperator op(p * j * inverse(p));
    REQUIRE(rank(op.matrix()) == 1);
    const int m = 1 + static_cast<int>(rng() % 7);
    WeightFiltration w = monodromy_weight_filtration(op, m);
    for (int l = 0; l < m - 1; ++l) CHECK(w[l].is_zero());
    CHECK(w[m - 1].dim() == 1);
    CHECK(w[m].dim() == n - 1);
    CHECK(w[m + 1].is_full());
  }
}

TEST_CASE("primitive decomposition") {
  NilpotentOperator zero(Matrix::zero(3, 3));
  auto pd0 = primitive_decomposition(zero, monodromy_weight_filtration(zero, 2));
  CHECK(pd0.parts.at(2).dim() == 3);
  CHECK(pd0.parts.at(3).dim() == 0);

  NilpotentOperator block(jordan_nilpotent({2}));
  auto pd1 = primitive_decomposition(block, monodromy_weight_filtration(block, 1));
  CHECK(pd1.parts.at(2).dim() == 1);
  CHECK(pd1.summands.at(0).at(1).dim() == 1);

  NilpotentOperator t31(jordan_nilpotent({3, 1}));
  WeightFiltration w31 = monodromy_weight_filtration(t31, 2);
  auto pd2 = primitive_decomposition(t31, w31);
  CHECK(pd2.parts.at(4).dim() == 1);
  CHECK(pd2.parts.at(2).dim() == 1);
  CHECK(pd2.parts.at(3).dim() == 0);
  CHECK(pd2.summands.at(2).at(0).dim() + pd2.summands.at(2).at(1).dim() == w31.gr_dim(2));

  std::mt19937 rng(8);
  for (int dim = 1; dim <= 6; ++dim)
    for (const auto& blocks : testing::partitions(dim)) {
      Matrix j = jordan_nilpotent(blocks);
      Matrix p = testing::random_invertible(rng, j.rows());
      NilpotentOperator op(p * j * inverse(p));
      WeightFiltration w = monodromy_weight_filtration(op, blocks.front());
      auto pd = primitive_decomposition(op, w);
      for (const auto& [k, row] : pd.summands) {
        std::size_t total = 0;
        Subspace span = w[k - 1];
        for (const auto& [i, piece] : row) {
          total += piece.dim();
          span = sum(span, piece.lift);
        }
        CHECK(total == w.gr_dim(k));
        CHECK(span == w[k]);
      }
    }
  CHECK_THROWS_AS(primitive_decomposition(block, monodromy_weight_filtration(NilpotentOperator(Matrix::zero(2, 2)), 1)),
                  PreconditionError);
}

TEST_CASE("kernel graded decomposition") {
  NilpotentOperator zero(Matrix::zero(2, 2));
  auto d0 = kernel_graded_decomposition(zero, monodromy_weight_filtration(zero, 1), 1);
  CHECK(d0.gr_dim == 2);
  CHECK(d0.kernel_gr.front() == 2);

  // Jordan block of size 2 at m = 1: Gr_1 H = 0, and ker N = W_0 so Gr_1 K = 0 as well.
  NilpotentOperator block(jordan_nilpotent({2}));
  WeightFiltration wb = monodromy_weight_filtration(block, 1);
  auto d1 = kernel_graded_decomposition(block, wb, 1);
  CHECK(d1.gr_dim == 0);
  CHECK(d1.kernel_gr == std::vector<std::size_t>{0});
  auto d0b = kernel_graded_decomposition(block, wb, 0);
  CHECK(d0b.gr_dim == 1);
  CHECK(d0b.kernel_gr == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(kernel_graded_decomposition(block, wb, 2), PreconditionError);

  std::mt19937 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    auto parts = testing::partitions(1 + static_cast<int>(rng() % 8));
    const auto& blocks = parts[rng() % parts.size()];
    Matrix j = jordan_nilpotent(blocks);
    Matrix p = testing::random_invertible(rng, j.rows());
    NilpotentOperator op(p * j * inverse(p));
    const int m = blocks.front() - 1 + static_cast<int>(rng() % 2);
    WeightFiltration w = monodromy_weight_filtration(op, m);
    for (int k = 0; k <= m; ++k) {
      auto d = kernel_graded_decomposition(op, w, k);
      std::size_t total = 0;
      for (auto x : d.kernel_gr) total += x;
      CHECK(total == d.gr_dim);
    }
  }
}

TEST_CASE("polarization compatibility") {
  Matrix j{{0, -1}, {1, 0}};
  NilpotentOperator zero(Matrix::zero(2, 2));
  CHECK(check_polarization_compat(zero, BilinearForm(j, Symmetry::kAntisymmetric),
                                  monodromy_weight_filtration(zero, 1))
            .ok);

  NilpotentOperator block(jordan_nilpotent({2}));
  BilinearForm s(j, Symmetry::kAntisymmetric);
  WeightFiltration w = monodromy_weight_filtration(block, 1);
  CHECK(check_polarization_compat(block, s, w).ok);
  GradedForm g = graded_form(block, s, w, 1);
  CHECK(g.gram.rows() == 1);
  CHECK(!g.gram(0, 0).is_zero());
  GradedForm t = transported_form(block, s, w, 1);
  CHECK(w[0].contains(t.basis.row(0)));

  BilinearForm broken(Matrix{{1, 0}, {0, 1}}, Symmetry::kSymmetric);
  Verdict v = check_polarization_compat(block, broken, w);
  CHECK_FALSE(v.ok);
  REQUIRE(!v.failures.empty());
  CHECK(v.failures.front().find("infinitesimal isometry") != std::string::npos);
}

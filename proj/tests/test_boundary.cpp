#include <doctest.h>

#include "hodge/boundary.hpp"
#include "hodge/errors.hpp"
#include "hodge/models.hpp"
#include "hodge/severi.hpp"

using namespace hodge;

namespace {

HodgeNumbers total_numbers(const PmhsModel& model) {
  HodgeNumbers h;
  h.weight = model.weight;
  for (int p = model.f.p_min(); p <= model.f.p_max(); ++p) {
    std::size_t d = model.f[p].dim() - model.f[p + 1].dim();
    if (d) h.h[p] = d;
  }
  return h;
}

}  // namespace

TEST_CASE("primitive numbers of index-one limits") {
  PrimitiveTable t7 = primitive_numbers(cubic_hodge_numbers(7));
  CHECK(t7.by_weight[7].h == std::map<int, std::size_t>{{5, 1}, {4, 83}, {3, 83}, {2, 1}});
  CHECK(t7.by_weight[6].h == std::map<int, std::size_t>{{3, 1}});
  CHECK(t7.by_weight[8].h == std::map<int, std::size_t>{{4, 1}});
  CHECK(check_primitive_sums(t7, cubic_hodge_numbers(7)).ok);

  PrimitiveTable t1 = primitive_numbers(HodgeNumbers{1, {{0, 1}, {1, 1}}});
  CHECK(t1.by_weight[1].total() == 0);
  CHECK(t1.by_weight[0].at(0) == 1);
  CHECK(t1.by_weight[2].at(1) == 1);

  HodgeNumbers h13 = cubic_hodge_numbers(13);
  PrimitiveTable t13 = primitive_numbers(h13);
  CHECK(t13.by_weight[13].at(9) == 1);
  CHECK(t13.by_weight[13].at(8) == binomial(15, 3));
  CHECK(t13.by_weight[13].at(7) == binomial(15, 6) - 1);
  CHECK(t13.by_weight[13].at(6) == binomial(15, 6) - 1);
  for (int a = 0; a <= 13; ++a) CHECK(t13.by_weight[13].at(a) == t13.by_weight[13].at(13 - a));
  CHECK(check_primitive_sums(t13, h13).ok);

  CHECK_THROWS_AS(primitive_numbers(HodgeNumbers{2, {{1, 3}}}), PreconditionError);
  CHECK_THROWS_AS(primitive_numbers(HodgeNumbers{3, {{3, 1}, {0, 1}}}), PreconditionError);
}

TEST_CASE("boundary point of the minimal symplectic model") {
  PmhsModel model = index_one_model(1, {{1, 1}, {0, 1}});
  REQUIRE(model.s.dim() == 4);
  BoundaryResult r = boundary_point(model.s, model.n, model.f, 1);
  CHECK(r.verdict.ok);
  CHECK(r.datum.w_minus1.dim() == 1);
  CHECK(r.datum.psi_sign == 1);
  CHECK(r.point.basis.rows() == 2);
  CHECK(r.point.numbers.h == std::map<int, std::size_t>{{1, 1}, {0, 1}});
  CHECK(r.datum.p == primitive_numbers(total_numbers(model)));

  // The datum is unchanged when S is rescaled by a positive rational.
  BoundaryResult scaled = boundary_point(model.s.scaled(Scalar(Rational(7, 3))), model.n, model.f, 1);
  CHECK(scaled.datum == r.datum);
  CHECK(scaled.datum.psi_value == r.datum.psi_value * Rational(7, 3));
}

TEST_CASE("boundary point of a weight-seven index-one model") {
  PmhsModel model = index_one_model(7, {{5, 1}, {4, 83}, {3, 83}, {2, 1}});
  BoundaryResult r = boundary_point(model.s, model.n, model.f, 7);
  CHECK(r.verdict.ok);
  CHECK(r.point.numbers.h == std::map<int, std::size_t>{{5, 1}, {4, 83}, {3, 83}, {2, 1}});
  CHECK(r.datum.p == primitive_numbers(cubic_hodge_numbers(7)));
  CHECK(r.datum.psi_sign == 1);
  CHECK(to_json(r).at("graded_point").at("weight") == 7);
}

TEST_CASE("condition on N is enforced") {
  PmhsModel model = index_one_model(3, {{2, 2}, {1, 2}});
  Matrix doubled = model.n.matrix();
  // Add a second rank-one piece: N e_top also hits another vector.
  Matrix two(doubled.rows(), doubled.cols());
  two(0, doubled.cols() - 1) = 1;
  two(1, 2) = 1;
  CHECK_THROWS_AS(boundary_point(model.s, NilpotentOperator(two), model.f, 3), PreconditionError);
  CHECK_THROWS_AS(boundary_point(model.s, NilpotentOperator(Matrix(doubled.rows(), doubled.cols())), model.f, 3),
                  PreconditionError);
  // A negative multiple of S breaks positivity.
  CHECK_THROWS_AS(boundary_point(model.s.scaled(Scalar(-1)), model.n, model.f, 3), PreconditionError);
  CHECK_THROWS_AS(boundary_point(model.s, model.n, model.f, 2),
                  PreconditionError);
}

TEST_CASE("graded limit is insensitive to exp(zN)") {
  PmhsModel model = index_one_model(3, {{2, 1}, {1, 1}});
  CHECK(reference_vs_limit_graded(model.f, model.f, model.w).ok);
  for (const Scalar& z : {Scalar(Rational(-1)), Scalar(Rational(0), Rational(1)), Scalar(Rational(3, 2), Rational(-2, 5))}) {
    HodgeFiltration moved = model.f.mapped(exp_nilpotent(model.n.matrix() * z));
    CHECK(reference_vs_limit_graded(model.f, moved, model.w).ok);
  }
  // A real rotation mixing the middle with the upper Tate vector does not respect W.
  const std::size_t n = model.s.dim();
  Matrix g = Matrix::identity(n);
  g(1, n - 1) = 1;
  g(n - 1, 1) = 1;
  g(n - 1, n - 1) = 0;
  g(1, 1) = 0;
  CHECK_FALSE(reference_vs_limit_graded(model.f, model.f.mapped(g), model.w).ok);
}

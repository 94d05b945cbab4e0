#include <doctest.h>

#include <fstream>
#include <random>

#include "hodge/errors.hpp"
#include "hodge/graded_ring.hpp"
#include "hodge/severi.hpp"
#include "hodge/weyl.hpp"

using namespace hodge;

namespace {

// Hook-content formula for the GL(n+1) representation with highest weight
// sum a_i w_i, whose partition has lambda_j = a_j + ... + a_n.
Integer hook_content(const std::vector<int>& a) {
  const int N = static_cast<int>(a.size()) + 1;
  std::vector<int> lambda(a.size());
  int acc = 0;
  for (int j = static_cast<int>(a.size()) - 1; j >= 0; --j) lambda[j] = acc += a[j];
  std::vector<int> conj(lambda.empty() ? 0 : lambda[0], 0);
  for (int row : lambda)
    for (int c = 0; c < row; ++c) ++conj[c];
  Rational out(1);
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      int hook = lambda[i] - j + conj[j] - static_cast<int>(i) - 1;
      out *= Rational(N + j - static_cast<int>(i));
      out /= Rational(hook);
    }
  out.canonicalize();
  return out.get_num();
}

// Polynomial helpers over Z for Poincare series in q = t^2.
using Poly = std::vector<long>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly one_minus_q_power(int e) {
  Poly p(e + 1, 0);
  p[0] = 1;
  p[e] = -1;
  return p;
}

Poly divide_exact(Poly num, const Poly& den) {
  Poly q(num.size() - den.size() + 1, 0);
  for (std::size_t k = 0; k < q.size(); ++k) {
    q[k] = num[k] / den[0];
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= q[k] * den[j];
  }
  for (long r : num) REQUIRE(r == 0);
  return q;
}

// Poincare polynomial of G/P from the degrees of the invariants of G and of
// the semisimple part of the Levi factor, with one extra factor for its center.
Poly flag_poincare(const std::vector<int>& g_degrees, const std::vector<int>& levi_degrees) {
  Poly num{1}, den{1, -1};
  for (int e : g_degrees) num = multiply(num, one_minus_q_power(e));
  for (int e : levi_degrees) den = multiply(den, one_minus_q_power(e));
  return divide_exact(num, den);
}

}  // namespace

TEST_CASE("root systems have the expected sizes") {
  CHECK(RootSystem::parse("A2").positive_roots().size() == 3);
  CHECK(RootSystem::parse("A5").lie_algebra_dim() == 35);
  CHECK(RootSystem::parse("A2xA2").lie_algebra_dim() == 16);
  CHECK(RootSystem::parse("D5").positive_roots().size() == 20);
  CHECK(RootSystem::parse("E6").lie_algebra_dim() == 78);
  CHECK(RootSystem::parse("E7").lie_algebra_dim() == 133);
  CHECK(RootSystem::parse("E8").lie_algebra_dim() == 248);
  CHECK_THROWS_AS(RootSystem::parse("B3"), ParseError);
  CHECK_THROWS_AS(RootSystem::parse("E9"), ParseError);
  CHECK_THROWS_AS(RootSystem::parse("A"), ParseError);
}

TEST_CASE("Weyl dimension formula") {
  CHECK(rep_dimension("A2", "3w1") == binomial(5, 2));
  CHECK(rep_dimension("A2xA2", "3w1+3w3") == 100);
  CHECK(rep_dimension("A5", "3w2") == 490);
  CHECK(rep_dimension("E6", "3w1") == 3003);
  CHECK(rep_dimension("E6", "w1") == 27);
  CHECK(rep_dimension("E6", "w6") == 27);
  CHECK(rep_dimension("E6", "w2") == 78);
  CHECK(rep_dimension("E8", "w8") == 248);
  CHECK(rep_dimension("D5", "w1") == 10);
  CHECK(rep_dimension("D5", "w5") == 16);
  CHECK(rep_dimension("A5", "0,3,0,0,0") == 490);
  CHECK(rep_dimension("A3", "0,0,0") == 1);
  CHECK_THROWS_AS(rep_dimension("A2", "-1w1"), PreconditionError);
  CHECK_THROWS_AS(rep_dimension("A2", "3w4"), ParseError);
  CHECK_THROWS_AS(rep_dimension("A2", "1,2,3"), ParseError);
  CHECK_THROWS_AS(rep_dimension(RootSystem::parse("A2"), {1, -1}), PreconditionError);

  std::mt19937 rng(7);
  for (int n = 1; n <= 5; ++n) {
    RootSystem rs = RootSystem::parse("A" + std::to_string(n));
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> a(n);
      for (int& x : a) x = static_cast<int>(rng() % 4);
      CAPTURE(n);
      CHECK(rep_dimension(rs, a) == hook_content(a));
    }
  }
}

TEST_CASE("cubic hypersurface Hodge numbers") {
  HodgeNumbers h7 = cubic_hodge_numbers(7);
  CHECK(h7.at(5) == 1);
  CHECK(h7.at(4) == 84);
  CHECK(h7.at(3) == 84);
  CHECK(h7.at(2) == 1);
  CHECK(h7.at(6) == 0);
  CHECK(h7.at(7) == 0);

  HodgeNumbers h13 = cubic_hodge_numbers(13);
  CHECK(h13.at(9) == 1);
  CHECK(h13.at(8) == binomial(15, 3));
  CHECK(h13.at(7) == binomial(15, 6));

  HodgeNumbers h25 = cubic_hodge_numbers(25);
  CHECK(h25.at(17) == 1);
  CHECK(h25.at(13) == binomial(27, 12));

  // Primitive middle Betti number of a cubic of odd dimension m: (2^{m+2} - 2) / 3.
  for (int m = 3; m <= 31; m += 2) {
    HodgeNumbers h = cubic_hodge_numbers(m);
    CHECK(h.total() == ((std::size_t{1} << (m + 2)) - 2) / 3);
    for (int p = 0; p <= m; ++p) CHECK(h.at(p) == h.at(m - p));
  }
  CHECK_THROWS_AS(cubic_hodge_numbers(4), PreconditionError);
  CHECK_THROWS_AS(cubic_hodge_numbers(1), PreconditionError);
}

TEST_CASE("limit mixed Hodge structures of the secant degenerations") {
  SeveriCatalogue cat = SeveriCatalogue::load_default();
  auto vec = [](std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs) out.push_back(x);
    return out;
  };
  CHECK(limit_mhs_summary(cat.at("Segre")).v_hodge_vector() == vec({1, 83}));
  CHECK(limit_mhs_summary(cat.at("Gr26")).v_hodge_vector() == vec({0, 1, 455, 5004}));
  CHECK(limit_mhs_summary(cat.at("OP2")).v_hodge_vector() ==
        vec({0, 0, 0, 1, 2925, 296010, 4686825, 17383859}));
  CHECK(Integer(83) == binomial(9, 3) - 1);

  for (const char* name : {"Segre", "Gr26", "OP2"}) {
    const SeveriDatum& s = cat.at(name);
    LimitMhsSummary l = limit_mhs_summary(s);
    CAPTURE(name);
    CHECK(l.gr_low.total() == 1);
    CHECK(l.gr_high.total() == 1);
    CHECK(l.gr_low.at((s.m - 1) / 2) == 1);
    CHECK(l.gr_high.at((s.m + 1) / 2) == 1);
    CHECK(l.gr_mid.total() + 2 == cubic_hodge_numbers(s.m).total());
    CHECK(l.w_dims[0] == 1);
    CHECK(l.w_dims[2] - l.w_dims[1] == 1);
    CHECK(l.twist == (s.m - s.d + 1) / 2);
    CHECK(l.v_hodge.weight == s.d - 1);
    CHECK(l.v_hodge.total() == l.gr_mid.total());
    CHECK(l.polarization_sign == (l.twist % 2 ? -1 : 1));
  }
  LimitMhsSummary segre = limit_mhs_summary(cat.at("Segre"));
  CHECK(segre.tate_low == "Q(-3)");
  CHECK(segre.tate_high == "Q(-4)");
  CHECK(segre.twist == 2);
  CHECK_THROWS_AS(limit_mhs_summary(cat.at("Veronese")), PreconditionError);
}

TEST_CASE("Segre Calabi-Yau cross-check") {
  SegreCrosscheck c = segre_cy_crosscheck(SeveriCatalogue::load_default());
  CHECK(c.verdict.ok);
  CHECK(c.euler == -162);
  CHECK(c.h21 == 83);
}

TEST_CASE("Luna slice dimension identities") {
  SeveriCatalogue cat = SeveriCatalogue::load_default();
  struct Row {
    const char* name;
    long sym3, orbit, sections;
  };
  for (Row r : {Row{"Segre", 165, 64, 100}, Row{"Gr26", 680, 189, 490}, Row{"OP2", 3654, 650, 3003}}) {
    LunaCheck l = luna_slice_check(cat.at(r.name));
    CAPTURE(r.name);
    CHECK(l.verdict.ok);
    CHECK(l.sym3 == r.sym3);
    CHECK(l.orbit_dim == r.orbit);
    CHECK(l.sections == r.sections);
    CHECK(l.sym3 - 1 - l.orbit_dim == l.sections);
  }
  CHECK_THROWS_AS(luna_slice_check(cat.at("Veronese")), PreconditionError);
}

TEST_CASE("catalogue self-validation") {
  SeveriCatalogue cat = SeveriCatalogue::load_default();
  CHECK(cat.entries().size() == 4);
  for (const auto& s : cat.entries()) CHECK(validate_datum(s).ok);
  CHECK_THROWS_AS(cat.at("Plucker"), MissingDataError);

  std::ifstream in(default_catalogue_path());
  Json j = Json::parse(in);
  Json tampered = j;
  tampered["entries"][1]["sections_dim"] = 101;
  CHECK_THROWS_AS(SeveriCatalogue::from_json(tampered), ParseError);
  tampered = j;
  tampered["entries"][3]["V_hodge_expected"][4] = 2926;
  CHECK_THROWS_AS(SeveriCatalogue::from_json(tampered), ParseError);
  tampered = j;
  tampered["schema"] = "hodge-limits/severi/0";
  CHECK_THROWS_AS(SeveriCatalogue::from_json(tampered), ParseError);
  CHECK_THROWS_AS(SeveriCatalogue::from_file("/nonexistent/severi.json"), MissingDataError);
}

TEST_CASE("Betti numbers of the homogeneous bases") {
  // Gr(2,6) = A5 / P2 with Levi A1 x A3; OP2 = E6 / P1 with Levi D5.
  Poly gr = flag_poincare({2, 3, 4, 5, 6}, {2, 2, 3, 4});
  Poly op2 = flag_poincare({2, 5, 6, 8, 9, 12}, {2, 4, 5, 6, 8});
  GradedRing g = load_ring("Gr26");
  REQUIRE(gr.size() == 9);
  for (int k = 0; k < 9; ++k) CHECK(g.betti(2 * k) == static_cast<std::size_t>(gr[k]));
  GradedRing shell = load_ring("OP2-shell");
  REQUIRE(op2.size() == 17);
  for (int k = 0; k < 17; ++k) CHECK(shell.betti(2 * k) == static_cast<std::size_t>(op2[k]));
}

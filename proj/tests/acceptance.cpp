#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "delta_search.hpp"
#include "flag_search.hpp"
#include "hodge/cli.hpp"
#include "hodge/degeneration.hpp"
#include "hodge/graded_ring.hpp"
#include "hodge/json_io.hpp"
#include "hodge/models.hpp"
#include "hodge/severi.hpp"
#include "hodge/sl2_orbit.hpp"
#include "hodge/weyl.hpp"
#include "jordan.hpp"
#include "quadric_oracle.hpp"
#include "random_matrices.hpp"
#include "random_mhs.hpp"
#include "sl2_oracle.hpp"

using namespace hodge;

namespace {

// Collects the first few failure messages of one criterion.
class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failures_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (failures_) os << ", " << failures_ << " failed: " << notes_;
    return os.str();
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::string notes_;
};

Json cli_json(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return code == cli::kOk ? Json::parse(out.str()) : Json();
}

void hodge_numbers_of_v(Checker& c) {
  const std::vector<std::pair<std::string, Json>> expected{
      {"Segre", Json::array({"1", "83"})},
      {"Gr26", Json::array({"0", "1", "455", "5004"})},
      {"OP2", Json::array({"0", "0", "0", "1", "2925", "296010", "4686825", "17383859"})}};
  for (const auto& [name, vec] : expected) {
    int code = 0;
    Json r = cli_json({"severi", "limit-mhs", name, "--json"}, code);
    c.expect(code == 0, "severi limit-mhs " + name + " exited " + std::to_string(code));
    if (code == 0) c.expect(r["result"]["V_hodge"] == vec, name + " Hodge vector " + r["result"]["V_hodge"].dump());
  }
}

void luna_slice(Checker& c) {
  SeveriCatalogue cat = SeveriCatalogue::load_default();
  struct Row {
    const char* name;
    long sym3, orbit, sections;
  };
  for (const Row& row : {Row{"Segre", 165, 64, 100}, Row{"Gr26", 680, 189, 490}, Row{"OP2", 3654, 650, 3003}}) {
    const SeveriDatum& d = cat.at(row.name);
    LunaCheck l = luna_slice_check(d);
    c.expect(l.verdict.ok, std::string(row.name) + " slice verdict");
    c.expect(binomial(d.m + 4, 3) == row.sym3, std::string(row.name) + " Sym^3 binomial");
    c.expect(l.sym3 == row.sym3, std::string(row.name) + " Sym^3");
    Integer dim_g = Integer((d.m + 2) * (d.m + 2) - 1);
    c.expect(dim_g - l.lie_dim_H == row.orbit, std::string(row.name) + " orbit dimension from root systems");
    c.expect(l.orbit_dim == row.orbit, std::string(row.name) + " orbit dimension");
    c.expect(rep_dimension(d.stabilizer_group, d.section_weight) == row.sections,
             std::string(row.name) + " Weyl dimension of the sections");
    c.expect(Integer(row.sym3 - 1 - row.orbit) == row.sections, std::string(row.name) + " identity");
  }
}

void segre_crosscheck(Checker& c) {
  SeveriCatalogue cat = SeveriCatalogue::load_default();
  SegreCrosscheck s = segre_cy_crosscheck(cat);
  c.expect(s.verdict.ok, "crosscheck verdict");
  c.expect(s.euler == -162, "euler characteristic " + s.euler.get_str());
  c.expect(s.h21 == 83, "h21 " + s.h21.get_str());
  LimitMhsSummary lim = limit_mhs_summary(cat.at("Segre"));
  c.expect(lim.v_hodge_vector().at(1) == s.h21, "h21 disagrees with the limit summary");

  GradedRing ring = load_ring("P2xP2");
  ChernResult chern = chern_hypersurface(ring, ring.tangent_total_chern(), ring.parse("3*H1+3*H2"));
  c.expect(chern.euler == -162, "direct Chern pipeline");
}

void schubert_products(Checker& c) {
  GradedRing gr = load_ring("Gr26");
  c.expect(gr.audit().ok, "Gr26 audit");
  c.expect(gr.parse("s3") * gr.parse("s1") == gr.parse("s4+s3,1"), "s3*s1");
  c.expect(gr.parse("s2,1") * gr.parse("s1") == gr.parse("s3,1+s2,2"), "s2,1*s1");
  GradedRing pp = load_ring("P2xP2");
  c.expect(coker_rho_rank(pp, pp.parse("3*H1+3*H2")).coker_rank == 1, "P2xP2 coker rank");
  c.expect(coker_rho_rank(gr, gr.parse("3*s1")).coker_rank == 1, "Gr26 coker rank");
}

void weight_filtration_oracle(Checker& c) {
  std::mt19937 rng(2024);
  int instances = 0;
  for (int dim = 1; dim <= 5; ++dim)
    for (const auto& blocks : testing::partitions(dim))
      for (int rep = 0; rep < 12; ++rep) {
        Matrix j = testing::jordan_nilpotent(blocks);
        Matrix p = testing::random_invertible(rng, j.rows());
        Matrix n = p * j * inverse(p);
        const int center = blocks.front() - 1 + rep % 2;
        NilpotentOperator op(n);
        WeightFiltration w = monodromy_weight_filtration(op, center);
        c.expect(verify_weight_filtration(op, w).ok, "defining conditions");
        auto sols = testing::FlagSearch(n, center).solutions();
        c.expect(sols.size() == 1 && WeightFiltration(center, sols.front()) == w, "flag search disagrees");
        ++instances;
      }
  c.expect(instances >= 200, "only " + std::to_string(instances) + " instances");
}

void index_one_shape(Checker& c) {
  std::mt19937 rng(6);
  for (std::size_t n = 2; n <= 7; ++n)
    for (int m = 1; m <= 8; ++m)
      for (int rep = 0; rep < 3; ++rep) {
        std::vector<int> blocks{2};
        blocks.resize(n - 1, 1);
        Matrix p = testing::random_invertible(rng, n);
        NilpotentOperator op(p * testing::jordan_nilpotent(blocks) * inverse(p));
        WeightFiltration w = monodromy_weight_filtration(op, m);
        bool shape = w[m - 1].dim() == 1 && w[m].dim() == n - 1 && w[m + 1].is_full();
        for (int l = 0; l < m - 1; ++l) shape = shape && w[l].is_zero();
        c.expect(shape, "shape for dim " + std::to_string(n) + ", m " + std::to_string(m));
      }
  SeveriCatalogue cat = SeveriCatalogue::load_default();
  CentralFiberAssembly a = assemble_segre_central_fiber(cat);
  CsReport r = clemens_schmid_check(a.instance);
  c.expect(r.ok(), "Segre Clemens-Schmid check, first failure " + r.first_failure());
  c.expect(r.forced_rank_n && *r.forced_rank_n == 1, "forced rank N");
  auto it = a.instance.limit_graded.find(a.m - 1);
  c.expect(it != a.instance.limit_graded.end() && it->second == 1, "dim W_(m-1) of the limit");
}

void deligne_suite(Checker& c) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const bool split = trial % 5 == 0;
    auto pieces = testing::random_bigrading(rng, 2 + rng() % 5, split);
    MixedHodgeStructure mhs = mhs_from_bigrading(pieces);
    c.expect(mhs.w.ambient() <= 6, "dimension above 6");
    BigradedSplitting s = deligne_splitting(mhs.w, mhs.f);
    c.expect(verify_splitting(s, mhs.w, mhs.f).ok, "splitting verification");
    bool same = s.pieces.size() == pieces.size();
    for (const auto& [ab, m] : pieces) same = same && s.piece(ab.first, ab.second) == Subspace::span(m);
    c.expect(same, "pieces differ from the construction");
    Matrix delta = r_split_delta(mhs.w, mhs.f);
    if (split) c.expect(delta.is_zero(), "delta nonzero on an R-split input");
    HodgeFiltration moved = mhs.f.mapped(exp_nilpotent(delta * Scalar(Rational(0), Rational(-1))));
    c.expect(is_r_split(deligne_splitting(mhs.w, moved)), "exp(-i delta) F not R-split");
  }
  for (long re = -2; re <= 2; ++re)
    for (long im = -3; im <= 3; ++im) {
      MixedHodgeStructure mhs = tate_extension(Scalar(Rational(re), Rational(im)));
      Matrix delta = r_split_delta(mhs.w, mhs.f);
      HodgeFiltration moved = mhs.f.mapped(exp_nilpotent(delta * Scalar(Rational(0), Rational(-1))));
      c.expect(is_r_split(deligne_splitting(mhs.w, moved)), "Tate family not split by delta");
      auto hits = testing::delta_grid_search(mhs);
      c.expect(hits.size() == 1 && delta == Matrix{{0, Scalar(hits.front())}, {0, 0}}, "grid search disagrees");
    }
}

void sl2_correspondence(Checker& c) {
  std::vector<std::pair<std::string, PmhsModel>> models{
      {"weight one", weight_one_model()},
      {"index one, weight 3", index_one_model(3, {{2, 1}, {1, 1}})},
      {"index one, weight 7", index_one_model(7, {{5, 1}, {4, 2}, {3, 2}, {2, 1}})}};
  for (const auto& [name, model] : models) {
    OrbitVerdict v = check_orbit_correspondence(model.s, model.n, model.f, model.weight);
    c.expect(v.moved.verdict.ok, name + ": exp(iN)F not pure");
    c.expect(v.verdict.ok, name + ": orbit correspondence");
    GradingElement y = canonical_grading(deligne_splitting(model.w, model.f), model.weight);
    Sl2Triple t = complete_sl2_triple(model.n, y.y);
    c.expect(commutator(t.y, t.n_minus) == t.n_minus * Scalar(-2), name + ": [Y, N] = -2N");
    c.expect(commutator(t.y, t.n_plus) == t.n_plus * Scalar(2), name + ": [Y, N+] = 2N+");
    c.expect(commutator(t.n_plus, t.n_minus) == t.y, name + ": [N+, N] = Y");
    Matrix oracle;
    c.expect(testing::solve_n_plus(model.n.matrix(), y.y, oracle) && oracle == t.n_plus, name + ": N+ oracle");
  }
}

void degeneration_shells(Checker& c) {
  for (int dim = 1; dim <= 15; dim += 2)
    for (int s : {0, 1}) {
      QuadricCohomologyTable t = quadric_table(dim, s);
      c.expect(t.values.size() == static_cast<std::size_t>(2 * dim + 1), "table size");
      for (int q = 0; q <= 2 * dim && q < static_cast<int>(t.values.size()); ++q) {
        StalkValue want = q % 2 ? StalkValue::kZero : testing::quotient_of(testing::hyperplane_power(dim, s, q));
        c.expect(t.values[static_cast<std::size_t>(q)] == want,
                 "stalk (" + std::to_string(dim) + ", " + std::to_string(s) + ", " + std::to_string(q) + ")");
      }
    }
  std::mt19937 rng(3);
  int forms = 0;
  for (int dim = 1; dim <= 6; ++dim)
    for (int trial = 0; trial < 8; ++trial) {
      Matrix a = testing::random_matrix(rng, static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
      bool symmetric = trial % 2 == 0 || dim % 2 == 1;
      Matrix g = symmetric ? a + a.transpose() : a - a.transpose();
      if (!is_invertible(g)) continue;
      BilinearForm form(g, symmetric ? Symmetry::kSymmetric : Symmetry::kAntisymmetric);
      for (int n = 0; n < 4; ++n) {
        InvolutionModel model = involution_pairing_model(form, n);
        c.expect(model.verdict.ok, "involution model verdict");
        c.expect(model.induced_gram == g * Scalar(n % 2 ? -1 : 1), "sign rule");
      }
      ++forms;
    }
  c.expect(forms >= 20, "too few nondegenerate forms");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria{
      {"Hodge numbers of V from severi limit-mhs", hodge_numbers_of_v},
      {"Luna slice identities", luna_slice},
      {"Segre Chern class crosscheck", segre_crosscheck},
      {"Schubert products and coker rho", schubert_products},
      {"weight filtration against the flag search", weight_filtration_oracle},
      {"index-one shape and Segre Clemens-Schmid", index_one_shape},
      {"Deligne splitting and delta", deligne_suite},
      {"SL(2)-orbit correspondence", sl2_correspondence},
      {"quadric stalks and involution sign", degeneration_shells}};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Checker c;
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    if (!c.ok()) ++failed;
    std::cout << "criterion " << k + 1 << ": " << (c.ok() ? "PASS" : "FAIL") << "  " << criteria[k].first << " ("
              << c.summary() << ")\n";
  }
  return failed == 0 ? 0 : 1;
}

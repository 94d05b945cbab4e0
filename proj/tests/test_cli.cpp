#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hodge/cli.hpp"
#include "hodge/json_io.hpp"

using namespace hodge;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string test_data(const std::string& name) { return std::string(HODGE_TEST_DATA) + "/" + name; }

struct ScopedEnv {
  explicit ScopedEnv(const std::string& value) { setenv("HODGE_LIMITS_CATALOGUE", value.c_str(), 1); }
  ~ScopedEnv() { unsetenv("HODGE_LIMITS_CATALOGUE"); }
};

}  // namespace

TEST_CASE("repdim prints the Weyl dimension") {
  Outcome o = call({"repdim", "A5", "3w2", "--json"});
  REQUIRE(o.code == 0);
  Json r = Json::parse(o.out);
  CHECK(r["result"]["dimension"] == "490");
  CHECK(call({"repdim", "E6", "3w1"}).out.find("3003") != std::string::npos);
  CHECK(call({"repdim", "A2xA2", "3w1+3w3"}).out.find("100") != std::string::npos);
}

TEST_CASE("mwf on the zero operator gives the trivial filtration") {
  Outcome o = call({"mwf", test_data("zero_n.json"), "--verify", "--json"});
  REQUIRE(o.code == 0);
  Json r = Json::parse(o.out);
  CHECK(r["result"]["step_dims"] == Json::array({0, 3, 3}));
  CHECK(r["result"]["gr_dims"] == Json{{"1", 3}});
  CHECK(r["verdicts"][0]["ok"] == true);
  CHECK(r["exit_status"] == 0);

  Outcome inline_input = call({"mwf", R"({"N": [[0, 1], [0, 0]]})", "--verify", "--json"});
  REQUIRE(inline_input.code == 0);
  CHECK(Json::parse(inline_input.out)["result"]["step_dims"] == Json::array({1, 1, 2}));
}

TEST_CASE("severi verify-all passes every golden number") {
  Outcome o = call({"severi", "verify-all", "--json"});
  INFO(o.out);
  INFO(o.err);
  REQUIRE(o.code == 0);
  Json r = Json::parse(o.out);
  CHECK(r["golden"].size() >= 10);
  for (const auto& g : r["golden"]) CHECK(g["ok"] == true);
  CHECK(r["result"]["limit_mhs"]["Segre"]["V_hodge"] == Json::array({"1", "83"}));
  CHECK(r["result"]["limit_mhs"]["Gr26"]["V_hodge"] == Json::array({"0", "1", "455", "5004"}));
}

TEST_CASE("json output is byte-identical across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"severi", "verify-all", "--json"},
           {"severi", "assemble", "Segre", "--json"},
           {"ring", "chern", "P2xP2", "3*H1+3*H2", "--json"},
           {"mwf", test_data("zero_n.json"), "--json"}}) {
    Outcome a = call(args);
    Outcome b = call(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("subcommands over small inputs") {
  SUBCASE("ring") {
    Outcome o = call({"ring", "mult", "Gr26", "s3", "s1", "--json"});
    REQUIRE(o.code == 0);
    CHECK(Json::parse(o.out)["result"]["product"] == "s4+s3,1");
    Outcome c = call({"ring", "chern", "P2xP2", "3*H1+3*H2", "--json"});
    REQUIRE(c.code == 0);
    CHECK(Json::parse(c.out)["result"]["euler"] == "-162");
    Outcome k = call({"ring", "coker-rho", "Gr26", "3*s1", "--json"});
    REQUIRE(k.code == 0);
    CHECK(Json::parse(k.out)["result"]["coker_rank"] == 1);
  }
  SUBCASE("severi limit-mhs") {
    Outcome o = call({"severi", "limit-mhs", "OP2", "--json"});
    REQUIRE(o.code == 0);
    CHECK(Json::parse(o.out)["result"]["V_hodge"] ==
          Json::array({"0", "0", "0", "1", "2925", "296010", "4686825", "17383859"}));
    CHECK(call({"severi", "limit-mhs", "Veronese"}).code == cli::kInvalidInput);
  }
  SUBCASE("mhs and sl2 on the weight-one model") {
    std::string model =
        R"({"N": [[0, 1], [0, 0]], "center": 1, "F": {"p_min": 1, "steps": [[[0, 1]]]},)"
        R"( "S": {"gram": [[0, -1], [1, 0]], "symmetry": "antisymmetric"}})";
    CHECK(call({"mhs", "validate", model}).code == 0);
    Outcome split = call({"mhs", "split", model, "--json"});
    REQUIRE(split.code == 0);
    CHECK(Json::parse(split.out)["result"]["r_split"] == true);
    Outcome delta = call({"mhs", "delta", model, "--json"});
    REQUIRE(delta.code == 0);
    CHECK(Json::parse(delta.out)["result"]["delta_zero"] == true);
    CHECK(call({"sl2", "complete", model}).code == 0);
    CHECK(call({"sl2", "verify", model}).code == 0);
    Outcome moved = call({"sl2", "orbit-eval", model, "--z", "2", "--json"});
    REQUIRE(moved.code == 0);
    CHECK(Json::parse(moved.out)["result"]["F"]["steps"][0] == Json::array({Json::array({"1", "1/2"})}));
    Outcome b = call({"boundary", "from-limit", model, "--json"});
    REQUIRE(b.code == 0);
    CHECK(Json::parse(b.out)["result"]["psi_sign"] == 1);
  }
  SUBCASE("bookkeeping") {
    Outcome assembled = call({"severi", "assemble", "Segre", "--json"});
    REQUIRE(assembled.code == 0);
    Json r = Json::parse(assembled.out)["result"];
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "hodge_cli_test";
    std::filesystem::create_directories(dir);
    {
      std::ofstream(dir / "cs.json") << r["instance"].dump();
      Json fiber = r["fiber"];
      fiber["m"] = r["m"];
      std::ofstream(dir / "snc.json") << fiber.dump();
    }
    CHECK(call({"cs-check", (dir / "cs.json").string()}).code == 0);
    Outcome e2 = call({"snc-e2", (dir / "snc.json").string(), "--json"});
    REQUIRE(e2.code == 0);
    CHECK(Json::parse(e2.out)["result"] == r["e2"]);
  }
}

TEST_CASE("errors map to distinct exit codes") {
  CHECK(call({}).code == cli::kUsage);
  CHECK(call({"frobnicate"}).code == cli::kUsage);
  CHECK(call({"repdim", "A5"}).code == cli::kUsage);
  CHECK(call({"--help"}).code == cli::kOk);
  CHECK(call({"mwf", "/nonexistent/input.json"}).code == cli::kFileError);
  CHECK(call({"mwf", "{not json"}).code == cli::kInvalidInput);
  CHECK(call({"mwf", R"({"N": [[1, 0], [0, 1]]})"}).code == cli::kInvalidInput);
  CHECK(call({"repdim", "G2", "w1"}).code == cli::kInvalidInput);
  CHECK(call({"ring", "mult", "OP2-shell", "a", "b"}).code == cli::kInvalidInput);
  // W(N) centered at 0 for a nonzero N violates the defining conditions.
  Outcome bad = call({"mwf", R"({"N": [[0, 1], [0, 0]], "W": [[[1, 0], [0, 1]]]})", "--verify"});
  CHECK(bad.code == cli::kVerdictFailed);
}

TEST_CASE("schemas are printed on request") {
  Outcome names = call({"--schema"});
  REQUIRE(names.code == 0);
  CHECK(names.out.find("hodge-limits/severi/1") != std::string::npos);
  Outcome one = call({"--schema", "hodge-limits/report/1"});
  REQUIRE(one.code == 0);
  CHECK(Json::parse(one.out)["$id"] == "hodge-limits/report/1");
  CHECK(call({"--schema", "nope"}).code == cli::kUsage);
  for (const auto& [name, text] : cli::schemas()) CHECK(Json::parse(text).is_object());
}

TEST_CASE("the catalogue location can be overridden") {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "hodge_cli_catalogue";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::filesystem::copy(std::string(HODGE_DATA) + "/rings", dir / "rings");
  std::ifstream src(std::string(HODGE_DATA) + "/severi.json");
  Json cat = Json::parse(src);
  {
    std::ofstream(dir / "severi.json") << cat.dump(2);
  }
  ScopedEnv env((dir / "severi.json").string());
  Outcome ok = call({"severi", "verify-all", "--json"});
  CHECK(ok.code == 0);
  Outcome baseline_digest = call({"severi", "limit-mhs", "Segre", "--json"});

  cat["golden"]["segre_h21"] = 84;
  {
    std::ofstream(dir / "severi.json") << cat.dump(2);
  }
  Outcome tampered = call({"severi", "verify-all"});
  CHECK(tampered.code == cli::kVerdictFailed);
  CHECK(tampered.out.find("[FAIL] Segre h^{2,1}") != std::string::npos);
  Outcome changed_digest = call({"severi", "limit-mhs", "Segre", "--json"});
  CHECK(Json::parse(baseline_digest.out)["inputs_digest"] != Json::parse(changed_digest.out)["inputs_digest"]);

  ScopedEnv missing((dir / "absent.json").string());
  CHECK(call({"severi", "verify-all"}).code == cli::kFileError);
  std::filesystem::remove_all(dir);
}

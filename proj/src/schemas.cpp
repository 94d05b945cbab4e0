#include "hodge/cli.hpp"
#include "hodge/json_io.hpp"

namespace hodge::cli {

namespace {

Json scalar_schema() {
  return {{"description", "exact number: integer, or string such as \"3/4\", \"1/2+3/5i\", \"-i\""},
          {"type", Json::array({"integer", "string"})}};
}

Json matrix_schema() {
  return {{"type", "array"}, {"description", "list of rows"}, {"items", {{"type", "array"}, {"items", scalar_schema()}}}};
}

Json subspace_schema() {
  return {{"type", "array"}, {"description", "spanning rows; [] is the zero subspace"}, {"items", {{"type", "array"}}}};
}

Json graded_schema() {
  return {{"type", "object"},
          {"description", "weight (decimal string) -> dimension"},
          {"additionalProperties", {{"type", "integer"}}}};
}

Json axioms_schema() {
  return {{"type", "array"},
          {"items",
           {{"type", "object"},
            {"required", {"statement"}},
            {"properties", {{"statement", {{"type", "string"}}}, {"value", {{"type", "string"}}}}}}}};
}

std::map<std::string, std::string> build() {
  std::map<std::string, Json> s;
  s["hodge-limits/severi/1"] = {
      {"title", "Severi variety catalogue"},
      {"type", "object"},
      {"required", {"schema", "entries"}},
      {"properties",
       {{"schema", {{"const", "hodge-limits/severi/1"}}},
        {"entries",
         {{"type", "array"},
          {"items",
           {{"type", "object"},
            {"required",
             {"name", "d", "m", "ambient_proj_dim", "dim_G", "dim_H", "stabilizer_group", "section_weight",
              "rep_dim_sym3", "sections_dim", "ring"}},
            {"properties",
             {{"name", {{"type", "string"}}},
              {"d", {{"type", "integer"}, {"description", "dimension of S"}}},
              {"m", {{"type", "integer"}, {"description", "dimension of the cubic, (3d+2)/2"}}},
              {"ambient_proj_dim", {{"type", "integer"}}},
              {"dim_G", {{"type", "integer"}, {"description", "(m+2)^2 - 1"}}},
              {"dim_H", {{"type", "integer"}, {"description", "dimension of the stabilizer of S"}}},
              {"stabilizer_group", {{"type", "string"}, {"description", "root system, e.g. A2xA2, E6"}}},
              {"section_weight", {{"type", "string"}, {"description", "highest weight of the sections of O_S(3)"}}},
              {"rep_dim_sym3", {{"type", "integer"}, {"description", "C(m+4, 3)"}}},
              {"sections_dim", {{"type", "integer"}}},
              {"ring", {{"type", "string"}, {"description", "file name under rings/ without .json"}}},
              {"V_hodge_expected",
               {{"type", Json::array({"array", "null"})},
                {"description", "(h^{d-1,0}, h^{d-2,1}, ...) down to the middle"}}}}}}}}},
        {"golden", {{"type", "object"}, {"description", "further reference values for severi verify-all"}}}}}};
  s["hodge-limits/ring/1"] = {
      {"title", "graded cohomology ring"},
      {"type", "object"},
      {"required", {"schema", "name", "top_degree", "full"}},
      {"properties",
       {{"schema", {{"const", "hodge-limits/ring/1"}}},
        {"name", {{"type", "string"}}},
        {"top_degree", {{"type", "integer"}, {"description", "real dimension"}}},
        {"full", {{"type", "boolean"}, {"description", "false for rings that only record Betti numbers"}}},
        {"basis",
         {{"type", "array"},
          {"items",
           {{"type", "object"},
            {"properties", {{"symbol", {{"type", "string"}}}, {"degree", {{"type", "integer"}}}}}}}}},
        {"products",
         {{"type", "array"},
          {"description", "[a, b, {symbol: coefficient}] for every ordered pair of basis symbols"}}},
        {"integration", {{"type", "object"}, {"description", "coefficients of the point class"}}},
        {"tangent_total_chern", {{"type", "object"}}},
        {"betti", graded_schema()},
        {"annotations", {{"type", "array"}, {"items", {{"type", "string"}}}}}}}};
  s["hodge-limits/mhs/1"] = {
      {"title", "filtered vector space input for mwf, mhs, sl2 and boundary"},
      {"type", "object"},
      {"properties",
       {{"schema", {{"const", "hodge-limits/mhs/1"}}},
        {"N", matrix_schema()},
        {"center", {{"type", "integer"}}},
        {"W", {{"type", "array"}, {"description", "steps W_0 .. W_{2 center}"}, {"items", subspace_schema()}}},
        {"F",
         {{"type", "object"},
          {"required", {"p_min", "steps"}},
          {"properties",
           {{"p_min", {{"type", "integer"}}},
            {"steps", {{"type", "array"}, {"description", "F^{p_min} >= F^{p_min+1} >= ..."}, {"items", subspace_schema()}}}}}}},
        {"S",
         {{"type", "object"},
          {"required", {"gram"}},
          {"properties",
           {{"gram", matrix_schema()},
            {"symmetry", {{"enum", {"symmetric", "antisymmetric"}}}}}}}},
        {"Y", matrix_schema()}}}};
  s["hodge-limits/snc-fiber/1"] = {
      {"title", "two-component normal crossing central fiber"},
      {"type", "object"},
      {"required", {"b_x", "b_e", "b_e0"}},
      {"properties",
       {{"schema", {{"const", "hodge-limits/snc-fiber/1"}}},
        {"label", {{"type", "string"}}},
        {"m", {{"type", "integer"}, {"description", "degree for snc-e2"}}},
        {"b_x", {{"type", "array"}, {"items", {{"type", "integer"}}}}},
        {"b_e", {{"type", "array"}, {"items", {{"type", "integer"}}}}},
        {"b_e0", {{"type", "array"}, {"items", {{"type", "integer"}}}}},
        {"d1",
         {{"type", "object"},
          {"description", "degree -> {\"rank\": r} or {\"matrix\": rows}"}}},
        {"axioms", axioms_schema()}}}};
  s["hodge-limits/clemens-schmid/1"] = {
      {"title", "Clemens-Schmid bookkeeping instance"},
      {"type", "object"},
      {"required", {"n", "m", "central_graded", "ranks"}},
      {"properties",
       {{"schema", {{"const", "hodge-limits/clemens-schmid/1"}}},
        {"n", {{"type", "integer"}, {"description", "relative dimension"}}},
        {"m", {{"type", "integer"}}},
        {"homology_source_dim", {{"type", "integer"}}},
        {"homology_target_dim", {{"type", "integer"}}},
        {"central_graded", graded_schema()},
        {"limit_graded", graded_schema()},
        {"limit_N", matrix_schema()},
        {"ranks",
         {{"type", "object"},
          {"required", {"alpha", "i_star", "N", "beta"}}}},
        {"shifts", {{"type", "object"}, {"description", "map name -> [a, b] Hodge type"}}},
        {"axioms", axioms_schema()}}}};
  s["hodge-limits/boundary/1"] = {
      {"title", "boundary datum and graded limit point (output)"},
      {"type", "object"},
      {"properties",
       {{"W_minus1", subspace_schema()},
        {"psi_sign", {{"enum", {-1, 1}}}},
        {"psi_value", {{"type", "string"}}},
        {"primitive_numbers", {{"type", "object"}}},
        {"graded_point", {{"type", "object"}}}}}};
  s["hodge-limits/report/1"] = {
      {"title", "command report (output of --json)"},
      {"type", "object"},
      {"required", {"schema", "command", "inputs_digest", "verdicts", "golden", "result", "exit_status"}},
      {"properties",
       {{"schema", {{"const", "hodge-limits/report/1"}}},
        {"command", {{"type", "string"}}},
        {"inputs_digest", {{"type", "string"}, {"description", "FNV-1a 64 over the arguments and every file read"}}},
        {"verdicts",
         {{"type", "array"},
          {"items", {{"type", "object"}, {"required", {"name", "ok", "failures"}}}}}},
        {"golden",
         {{"type", "array"},
          {"items", {{"type", "object"}, {"required", {"name", "expected", "actual", "ok"}}}}}},
        {"result", {{"type", "object"}}},
        {"exit_status", {{"type", "integer"}}}}}};
  std::map<std::string, std::string> out;
  for (auto& [name, schema] : s) {
    schema["$id"] = name;
    out[name] = schema.dump(2);
  }
  return out;
}

}  // namespace

const std::map<std::string, std::string>& schemas() {
  static const std::map<std::string, std::string> all = build();
  return all;
}

}  // namespace hodge::cli

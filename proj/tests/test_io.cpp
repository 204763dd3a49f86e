#include <doctest.h>

#include <fstream>

#include "origami/commands.hpp"
#include "origami/fixtures.hpp"

using namespace origami;

namespace {
Json load(const std::string& name) {
  std::ifstream in(std::string(ORIGAMI_DATA_DIR) + "/inputs/" + name);
  REQUIRE(in);
  return Json::parse(in);
}
Origami load_origami(const std::string& name) { return to_origami(parse_origami_input(load(name))); }
}  // namespace

TEST_CASE("integer and rational encoding") {
  CHECK(encode(Integer(-7)) == Json(-7));
  Integer big("123456789012345678901234567890");
  CHECK(encode(big) == Json("123456789012345678901234567890"));
  CHECK(decode_integer(encode(big)) == big);
  CHECK(encode(Rational(3, 4)) == Json("3/4"));
  CHECK(encode(Rational(8, 4)) == Json(2));
  IntMatrix m{{1, -2}, {3, 4}};
  CHECK(decode_int_matrix(encode(m)) == m);
  IntPolynomial f{1, -3, -91};
  CHECK(decode_polynomial(encode(f)) == f);
}

TEST_CASE("origami input files") {
  Origami o = load_origami("O.json");
  CHECK(is_flagship(o));
  CHECK(o.size() == 16);
  CHECK(load_origami("torus.json").size() == 1);
  CHECK_FALSE(is_flagship(load_origami("L3.json")));
  try {
    parse_origami_input(Json{{"name", "x"}, {"h", "(1,2)"}});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidInput);
    CHECK(exit_code_for(e.code()) == ExitCode::ParseFailure);
  }
  try {
    to_origami(parse_origami_input(Json{{"name", "x"}, {"h", "(1,2)"}, {"v", "(3,4)"}}));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(exit_code_for(e.code()) == ExitCode::NotTransitive);
  }
  try {
    to_origami(parse_origami_input(Json{{"name", "x"}, {"h", "(1,2"}, {"v", "()"}}));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(exit_code_for(e.code()) == ExitCode::ParseFailure);
  }
}

TEST_CASE("analyze command") {
  CommandResult o = cmd_analyze(load_origami("O.json"));
  CHECK(o.exit_code == ExitCode::Ok);
  CHECK(o.output["genus"] == 4);
  CHECK(o.output["stratum"] == Json::array({2, 2, 2}));
  CHECK(o.output["veech_full"] == true);
  CHECK(o.output["orbit_size"] == 1);
  CHECK(o.output["horizontal_rows"] == Json::array({6, 6, 2, 2}));
  for (const auto& d : o.output["directions"]) CHECK(d["homological_dimension"] == 2);
  CHECK(o.output["conjugators"]["T"] == format_cycles(reference_fixtures().psi));
  CHECK(o.output["conjugators"]["S"] == format_cycles(reference_fixtures().phi));

  CommandResult t = cmd_analyze(load_origami("torus.json"));
  CHECK(t.output["genus"] == 1);
  CHECK(t.output["veech_full"] == true);

  CommandResult l = cmd_analyze(load_origami("L3.json"));
  CHECK(l.output["genus"] == 2);
  CHECK(l.output["veech_full"] == false);
  CHECK(l.output["orbit_size"] == 3);
}

TEST_CASE("monodromy command") {
  CommandResult o = cmd_monodromy(load_origami("O.json"));
  const Json& r = o.output["restricted"];
  CHECK(r["rank_T6_minus_I"] == 1);
  CHECK(r["TsT_fourth_power_is_identity"] == true);
  CHECK(o.output["fixture_match"]["charpoly_T"] == true);
  CHECK(o.output["fixture_match"]["charpoly_S"] == true);
  for (const char* k : {"symplectic_residual_T", "symplectic_residual_S"}) {
    CAPTURE(k);
    for (const auto& row : r[k])
      for (const auto& x : row) CHECK(x == 0);
  }

  CommandResult t = cmd_monodromy(load_origami("torus.json"));
  CHECK(t.output["zero_holonomy_rank"] == 0);
  CHECK(t.output["restricted"].is_null());
  CHECK(t.output.contains("note"));

  for (const char* bad : {"L3.json", "eierlegende_wollmilchsau.json"}) {
    CAPTURE(bad);
    try {
      cmd_monodromy(load_origami(bad));
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(exit_code_for(e.code()) == ExitCode::NotVeechFull);
    }
  }
}

TEST_CASE("certify command") {
  CommandResult o = cmd_certify(load_origami("O.json"));
  CHECK(o.exit_code == ExitCode::Ok);
  CHECK(o.output["all_verdicts_true"] == true);
  CHECK(o.output["density"]["verdict"] == true);
  CHECK(o.output["arithmeticity"]["verdict"] == true);
  CHECK(o.output["congruence_mod2"]["lagrange_identity"] == true);

  Json g = load("identity_generators.json");
  CommandResult id = cmd_certify_generators(decode_int_matrix(g["generators"]["T"]),
                                            decode_int_matrix(g["generators"]["S"]), decode_int_matrix(g["form"]));
  CHECK(id.output["density"]["verdict"] == false);
  CHECK(id.exit_code == ExitCode::Undecided);
  CHECK(id.output["congruence_mod2"]["image_order"] == 1);
}

TEST_CASE("census command") {
  CommandResult r = cmd_census(6);
  CHECK(r.output["census"]["hits"].size() == 1);
  CHECK(r.output["census"]["count"] == 1);
  try {
    cmd_census(10);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainError);
  }
}

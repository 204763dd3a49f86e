#include <doctest.h>

#include "origami/fixtures.hpp"
#include "origami/linalg.hpp"
#include "origami/monodromy.hpp"
#include "origami/polynomial.hpp"
#include "origami/words.hpp"
#include "properties.hpp"

using namespace origami;
using origami::testing::flagship_monodromy;

TEST_CASE("pushforwards on the flagship are chain maps") {
  Origami o = reference_fixtures().origami;
  ChainComplex cc = build_chain_complex(o);
  HomologyBasis hb = h1_basis(cc);
  for (VeechGenerator g : {VeechGenerator::T, VeechGenerator::S}) {
    EdgeSubstitution f = pushforward_edge_paths(o, g);
    CHECK(is_chain_map(f, cc));
    for (const auto& z : hb.classes) CHECK(cc.is_cycle(f.edge_map * z));
  }
  CHECK_THROWS_AS(pushforward_edge_paths(o, VeechGenerator::TInverse), Error);
}

TEST_CASE("torus shear") {
  MonodromyPair mp = induced_matrices(Origami::torus());
  CHECK(mp.tautological_T == IntMatrix{{1, 1}, {0, 1}});
  CHECK(mp.tautological_S == IntMatrix{{1, 0}, {1, 1}});
  ChainComplex cc = mp.complex;
  EdgeSubstitution f = pushforward_edge_paths(Origami::torus(), VeechGenerator::T);
  // b -> b, l -> l + b
  CHECK(f.edge_map * CycleVector{1, 0} == CycleVector{1, 0});
  CHECK(f.edge_map * CycleVector{0, 1} == CycleVector{1, 1});
  CHECK(mp.restricted_T.rows() == 0);
  CHECK(monodromy_of_word(mp, "TS").rows() == 0);
}

TEST_CASE("flagship monodromy matches the reference generators up to conjugacy") {
  const MonodromyPair& mp = flagship_monodromy();
  const auto& f = reference_fixtures();
  CHECK(char_poly(mp.restricted_T) == char_poly(f.alpha_T));
  CHECK(char_poly(mp.restricted_S) == char_poly(f.alpha_S));
  CHECK(char_poly(mp.restricted_T) == IntPolynomial{1, 1, -1, -2, -1, 1, 1});
  CHECK(rank(power(mp.restricted_T, 6) - IntMatrix::identity(6)) == 1);
  CHECK(power(monodromy_of_word(mp, "TsT"), 4) == IntMatrix::identity(6));
  CHECK(mp.tautological_T == IntMatrix{{1, 1}, {0, 1}});
  CHECK(mp.tautological_S == IntMatrix{{1, 0}, {1, 1}});
  CHECK(preserves_form(mp.full_T, mp.basis.gram));
  CHECK(preserves_form(mp.full_S, mp.basis.gram));
  CHECK(preserves_form(mp.restricted_T, mp.restricted_gram()));
  CHECK(preserves_form(mp.restricted_S, mp.restricted_gram()));
}

TEST_CASE("reference generators preserve the reference form") {
  const auto& f = reference_fixtures();
  CHECK(preserves_form(f.alpha_T, f.omega0));
  CHECK(preserves_form(f.alpha_S, f.omega0));
}

TEST_CASE("words") {
  const MonodromyPair& mp = flagship_monodromy();
  CHECK(monodromy_of_word(mp, "") == IntMatrix::identity(6));
  CHECK(monodromy_of_word(mp, "Tt") == IntMatrix::identity(6));
  CHECK(monodromy_of_word(mp, "sS") == IntMatrix::identity(6));
  CHECK(monodromy_of_word(mp, "T^3") == power(mp.restricted_T, 3));
  CHECK(monodromy_of_word(mp, "T^-2") == power(mp.restricted_T, -2));
  CHECK(monodromy_of_word(mp, "ST") == mp.restricted_S * mp.restricted_T);
  CHECK(char_poly(monodromy_of_word(mp, "STST^20")) == IntPolynomial{1, -3, -91, -262, -91, -3, 1});
  const auto& f = reference_fixtures();
  CHECK(char_poly(evaluate_word("STST^20", "TS", {f.alpha_T, f.alpha_S})) == f.f_A);
  for (const char* bad : {"X", "T^", "^2", "T^a"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(monodromy_of_word(mp, bad), Error);
  }
  std::string round = format_word(parse_word("TTTs^2T^-1", "TS"), "TS");
  CHECK(monodromy_of_word(mp, round) == monodromy_of_word(mp, "TTTs^2T^-1"));
}

TEST_CASE("surfaces with a proper Veech group or automorphisms are rejected") {
  Origami l(parse_cycles("(1,2,3)"), parse_cycles("(1,2)", 3));
  try {
    induced_matrices(l);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInVeechGroup);
  }
  Origami ew(parse_cycles("(1,2,3,4)(5,6,7,8)"), parse_cycles("(1,5,3,7)(2,8,4,6)"));
  CHECK_THROWS_AS(induced_matrices(ew), Error);
}

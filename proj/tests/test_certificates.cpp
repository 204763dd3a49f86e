#include <doctest.h>

#include "origami/certificates.hpp"
#include "origami/fixtures.hpp"
#include "origami/linalg.hpp"
#include "properties.hpp"

using namespace origami;
using origami::testing::flagship_monodromy;

TEST_CASE("density certificate on the flagship") {
  const auto& f = reference_fixtures();
  DensityCertificate c = density_certificate(flagship_monodromy(), f.pinching_word, f.unipotent_word);
  CHECK(c.verdict);
  CHECK(c.pinching_report.verdict);
  REQUIRE(c.pinching_report.galois);
  CHECK(c.pinching_report.galois->order == 48);
  CHECK(c.unipotent);
  CHECK(c.unipotent_rank == 1);
  CHECK(c.unipotent_rank == f.unipotent_image_dimension);
  CHECK(c.lagrangian_image == false);

  DensityCertificate pub = density_certificate({f.alpha_T, f.alpha_S}, f.omega0, f.pinching_word, f.unipotent_word);
  CHECK(pub.verdict);
  CHECK(pub.pinching_report.charpoly == f.f_A);
}

TEST_CASE("density certificate failures") {
  IntMatrix form = standard_symplectic_form({1, 1, 1});
  IntMatrix id = IntMatrix::identity(6);
  DensityCertificate both = density_certificate({id, id}, form, "T", "S");
  CHECK_FALSE(both.pinching_report.verdict);
  CHECK_FALSE(both.unipotent);
  CHECK_FALSE(both.verdict);

  IntMatrix a = monodromy_of_word(flagship_monodromy(), "STST^20");
  IntMatrix g = flagship_monodromy().restricted_gram();
  DensityCertificate b_trivial = density_certificate({a, IntMatrix::identity(6)}, g, "T", "S");
  CHECK(b_trivial.pinching_report.verdict);
  CHECK_FALSE(b_trivial.unipotent);
  CHECK_FALSE(b_trivial.verdict);
}

TEST_CASE("horizontal multitwist is the inverse sixth power of T") {
  const MonodromyPair& mp = flagship_monodromy();
  DirectionData d = direction_data(reference_fixtures().origami, mp, 1, 0);
  CHECK(d.class_twists[0] == 2);
  CHECK(d.class_twists[1] == 6);
  IntMatrix c = multitwist_operator({{d.class_cycles[0], d.class_twists[0]}, {d.class_cycles[1], d.class_twists[1]}},
                                    mp.basis.gram);
  CHECK(c == power(mp.full_T, -6));
  CHECK(inverse_unimodular(c) == power(mp.full_T, 6));
  CHECK(multitwist_operator({}, mp.basis.gram) == IntMatrix::identity(8));
  IntMatrix nil = c - IntMatrix::identity(8);
  CHECK((nil * nil).is_zero());
}

TEST_CASE("non-parallel waists are rejected") {
  IntMatrix j = standard_symplectic_form({1});
  try {
    multitwist_operator({{{1, 0}, 1}, {{0, 1}, 1}}, j);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotParallel);
  }
}

TEST_CASE("annihilator of the reference w vectors") {
  const auto& f = reference_fixtures();
  RatVector e = annihilator(f.w[0], f.w[1], f.w[2], f.omega0);
  RatVector expected(6);
  for (std::size_t i = 0; i < 6; ++i) expected[i] = -f.w[0][i] + 2 * f.w[1][i] + f.w[2][i];
  CHECK(e == expected);
  CHECK(f.e_in_w == IntVector{-1, 2, 1});
  for (int k = 0; k < 2; ++k) CHECK(pairing(e, to_rational(f.w[k]), f.omega0) == 0);

  // w3 inside span{w1, w2}
  IntVector w3(6);
  for (std::size_t i = 0; i < 6; ++i) w3[i] = 3 * f.w[0][i] - f.w[1][i];
  RatVector e2 = annihilator(f.w[0], f.w[1], w3, f.omega0);
  CHECK(pairing(e2, to_rational(f.w[0]), f.omega0) == 0);
  CHECK(pairing(e2, to_rational(f.w[1]), f.omega0) == 0);
}

TEST_CASE("reference transvection word") {
  const auto& f = reference_fixtures();
  std::vector<IntMatrix> gens(f.transvections.begin(), f.transvections.end());
  IntMatrix w = evaluate_word(f.transvection_word, "ABC", gens);
  CHECK(w == IntMatrix{{1, 0, 0}, {0, 1, 0}, {12, 144, 1}});
  CHECK(w == f.transvection_word_matrix);
  // independent left-to-right product of A B a b C C C a
  const IntMatrix &a = gens[0], &b = gens[1], &c = gens[2];
  IntMatrix ai = inverse_unimodular(a), bi = inverse_unimodular(b);
  IntMatrix manual = IntMatrix::identity(3);
  for (const IntMatrix* m : std::vector<const IntMatrix*>{&a, &b, &ai, &bi, &c, &c, &c, &ai}) manual = manual * *m;
  CHECK(manual == w);
  CHECK(is_e_row_unipotent(to_rational(w)));
  CHECK_FALSE(is_e_row_unipotent(RatMatrix::identity(3)));
}

TEST_CASE("arithmeticity certificate from cylinder data") {
  const auto& f = reference_fixtures();
  ArithmeticityCertificate c = arithmeticity_certificate(f.origami, flagship_monodromy(), f.directions);
  CHECK(c.verdict);
  CHECK(c.status == "Certified");
  REQUIRE(c.e_in_w);
  CHECK((*c.e_in_w)[0] == -1);
  CHECK((*c.e_in_w)[1] == 2);
  CHECK((*c.e_in_w)[2] == 1);
  // C_w2 and C_w3 agree with the reference matrices; C_w1 has -4 where -12 is printed
  CHECK(c.transvections[0] == to_rational(IntMatrix{{1, -4, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(c.transvections[1] == to_rational(f.transvections[1]));
  CHECK(c.transvections[2] == to_rational(f.transvections[2]));
  CHECK_FALSE(c.reference_word_is_witness);
  CHECK(c.search_used);
  CHECK(is_e_row_unipotent(c.witness_matrix));
  std::vector<RatMatrix> gens(c.transvections.begin(), c.transvections.end());
  RatMatrix check = RatMatrix::identity(3);
  for (const auto& l : parse_word(c.witness_word, "ABC")) {
    RatMatrix g = l.exponent < 0 ? inverse(gens[l.generator]) : gens[l.generator];
    for (long k = 0; k < std::labs(l.exponent); ++k) check = check * g;
  }
  CHECK(check == c.witness_matrix);
}

TEST_CASE("arithmeticity certificate from the reference vectors") {
  const auto& f = reference_fixtures();
  std::array<Rational, 3> coef{Rational(1, 8), Rational(1, 8), Rational(1, 8)};
  ArithmeticityCertificate c = arithmeticity_certificate(f.w, coef, f.omega0);
  CHECK(c.transvections[1] == to_rational(f.transvections[1]));
  CHECK(c.transvections[2] == to_rational(f.transvections[2]));
  CHECK(c.verdict);
}

TEST_CASE("mod-2 image") {
  CHECK(symplectic_group_order(3, 2) == 1451520);
  CHECK(symplectic_group_order(1, 3) == 24);
  IntMatrix form = standard_symplectic_form({1, 1, 1});
  CongruenceImageReport id = congruence_image_mod2({IntMatrix::identity(6)}, form);
  CHECK(id.image_order == 1);
  CHECK(id.index == 1451520);

  const MonodromyPair& mp = flagship_monodromy();
  CongruenceImageReport r = congruence_image_mod2({mp.restricted_T, mp.restricted_S}, mp.restricted_gram());
  CHECK(r.ambient_order == 1451520);
  CHECK(r.image_order * r.index == r.ambient_order);
  CHECK(r.used_overlattice);
  // regression values from the closure
  CHECK(r.image_order == 72);
  CHECK(r.index == 20160);
}

TEST_CASE("finite group detection") {
  FiniteGroupResult one = detect_finite_group({IntMatrix::identity(3)}, 10);
  CHECK(one.finite);
  CHECK(one.order == 1);
  FiniteGroupResult rot = detect_finite_group({IntMatrix{{0, -1}, {1, 0}}}, 100);
  CHECK(rot.finite);
  CHECK(rot.order == 4);
  const MonodromyPair& mp = flagship_monodromy();
  FiniteGroupResult big = detect_finite_group({mp.restricted_T, mp.restricted_S}, 100000);
  CHECK_FALSE(big.finite);
}

#include <doctest.h>

#include <random>

#include "origami/cylinders.hpp"
#include "origami/fixtures.hpp"
#include "origami/linalg.hpp"

using namespace origami;

TEST_CASE("chain complex counts") {
  ChainComplex o = build_chain_complex(reference_fixtures().origami);
  CHECK(o.vertex_count == 10);
  CHECK(o.edge_count == 32);
  CHECK(o.face_count == 16);
  CHECK(o.euler_characteristic() == -6);
  CHECK(o.genus() == 4);
  CHECK((o.boundary1 * o.boundary2).is_zero());

  ChainComplex t = build_chain_complex(Origami::torus());
  CHECK(t.vertex_count == 1);
  CHECK(t.edge_count == 2);
  CHECK(t.face_count == 1);
  CHECK(t.euler_characteristic() == 0);

  ChainComplex l = build_chain_complex(Origami(parse_cycles("(1,2,3)"), parse_cycles("(1,2)", 3)));
  CHECK(l.euler_characteristic() == -2);
  CHECK(l.genus() == 2);
}

TEST_CASE("torus intersection convention") {
  ChainComplex t = build_chain_complex(Origami::torus());
  CycleVector b{1, 0}, l{0, 1};
  CHECK(intersection_number(b, l, t) == 1);
  CHECK(intersection_number(l, b, t) == -1);
  CHECK(intersection_number(b, b, t) == 0);
  HomologyBasis hb = h1_basis(t);
  REQUIRE(hb.rank() == 2);
  CHECK(abs(hb.gram(0, 1)) == 1);
}

TEST_CASE("flagship homology basis") {
  ChainComplex cc = build_chain_complex(reference_fixtures().origami);
  HomologyBasis hb = h1_basis(cc);
  CHECK(hb.rank() == 8);
  CHECK(is_skew_symmetric(hb.gram));
  CHECK(determinant(hb.gram) == 1);
  for (const auto& z : hb.classes) {
    CHECK(cc.is_cycle(z));
    CHECK(intersection_number(z, z, cc) == 0);
  }
  // coordinates of a basis class are a unit vector
  IntVector c = homology_coordinates(hb.classes[3], hb, cc);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i] == (i == 3 ? 1 : 0));
}

TEST_CASE("reference omega fixture") {
  const auto& f = reference_fixtures();
  CHECK(is_skew_symmetric(f.omega));
  // the printed 8x8 matrix has determinant 1; 16 is the determinant of its zero-holonomy block
  CHECK(determinant(f.omega) == 1);
  CHECK(f.omega_determinant_claim == 16);
  CHECK(determinant(f.omega0) == 16);
}

TEST_CASE("horizontal waist classes pair to zero") {
  Origami o = reference_fixtures().origami;
  ChainComplex cc = build_chain_complex(o);
  CylinderDecomposition d = horizontal_cylinders(o);
  for (const auto& a : d.cylinders)
    for (const auto& b : d.cylinders) CHECK(intersection_number(a.waist, b.waist, cc) == 0);
}

TEST_CASE("zero-holonomy split") {
  HomologyBasis hb = h1_basis(build_chain_complex(reference_fixtures().origami));
  SplitBasis s = split_zero_holonomy(hb);
  CHECK(s.zero_holonomy.cols() == 6);
  CHECK(s.tautological.cols() == 2);
  CHECK((hb.holonomy_matrix() * s.zero_holonomy).is_zero());
  CHECK(s.restricted_gram == s.zero_holonomy.transpose() * hb.gram * s.zero_holonomy);
  CHECK((s.zero_holonomy.transpose() * hb.gram * s.tautological).is_zero());

  SplitBasis t = split_zero_holonomy(h1_basis(build_chain_complex(Origami::torus())));
  CHECK(t.zero_holonomy.cols() == 0);
}

TEST_CASE("reference theta normal form") {
  const auto& f = reference_fixtures();
  CHECK(f.theta.transpose() * f.omega0 * f.theta == f.theta_form);
  CHECK(f.theta_form == standard_symplectic_form({1, 4, 1}));
}

TEST_CASE("symplectic normalization") {
  IntMatrix j2 = standard_symplectic_form({1});
  SymplecticNormalForm n2 = symplectic_normalize(j2);
  CHECK(n2.change == IntMatrix::identity(2));
  CHECK(n2.divisors == std::vector<Integer>{1});

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coin(0, 3), amount(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = IntMatrix::identity(4);
    for (int k = 0; k < 12; ++k) {
      std::size_t i = static_cast<std::size_t>(coin(rng)), j = static_cast<std::size_t>(coin(rng));
      if (i == j) continue;
      long a = amount(rng);
      for (std::size_t r = 0; r < 4; ++r) m(r, j) += a * m(r, i);
    }
    IntMatrix g = m.transpose() * standard_symplectic_form({1, 1}) * m;
    SymplecticNormalForm nf = symplectic_normalize(g);
    CHECK(abs(determinant(nf.change)) == 1);
    CHECK(nf.change.transpose() * g * nf.change == nf.form);
    CHECK(nf.form == standard_symplectic_form({1, 1}));
  }

  SymplecticNormalForm z = symplectic_normalize(reference_fixtures().omega0);
  CHECK(z.divisors == std::vector<Integer>{1, 1, 4});
  CHECK(z.change.transpose() * reference_fixtures().omega0 * z.change == z.form);
}

TEST_CASE("pairing is unchanged by boundaries") {
  Origami o = reference_fixtures().origami;
  ChainComplex cc = build_chain_complex(o);
  HomologyBasis hb = h1_basis(cc);
  for (std::size_t f = 0; f < cc.face_count; ++f) {
    CycleVector a = hb.classes[f % 8];
    IntVector bd = cc.boundary2.column(f);
    CycleVector a2 = a;
    for (std::size_t e = 0; e < a2.size(); ++e) a2[e] += bd[e];
    for (const auto& b : hb.classes) CHECK(intersection_number(a2, b, cc) == intersection_number(a, b, cc));
  }
}

#include <doctest.h>

#include "origami/cylinders.hpp"
#include "origami/error.hpp"
#include "origami/fixtures.hpp"

using namespace origami;

namespace {
Origami flagship() { return reference_fixtures().origami; }
Origami l_shape() { return Origami(parse_cycles("(1,2,3)"), parse_cycles("(1,2)", 3), "L3"); }
}  // namespace

TEST_CASE("origami construction validates its input") {
  CHECK_THROWS_AS(Origami(parse_cycles("(1,2)", 4), parse_cycles("(3,4)", 4)), Error);
  try {
    Origami(parse_cycles("(1,2)", 3), parse_cycles("(1,2)", 4));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeMismatch);
  }
}

TEST_CASE("strata") {
  Stratum s = stratum(flagship());
  CHECK(s.zero_orders == std::vector<std::size_t>{2, 2, 2});
  CHECK(s.genus == 4);
  CHECK(s.label() == "H(2,2,2)");
  Stratum t = stratum(Origami::torus());
  CHECK(t.zero_orders.empty());
  CHECK(t.genus == 1);
  Stratum l = stratum(l_shape());
  CHECK(l.zero_orders == std::vector<std::size_t>{2});
  CHECK(l.genus == 2);
}

TEST_CASE("T and S act on the flagship through the reference conjugators") {
  const auto& f = reference_fixtures();
  Origami o = flagship();
  Origami t = apply_veech_generator(VeechGenerator::T, o);
  CHECK(conjugate(t.h(), f.psi) == o.h());
  CHECK(conjugate(t.v(), f.psi) == o.v());
  Origami s = apply_veech_generator(VeechGenerator::S, o);
  CHECK(conjugate(s.h(), f.phi) == o.h());
  CHECK(conjugate(s.v(), f.phi) == o.v());
  Origami back = apply_veech_generator(VeechGenerator::TInverse, t);
  CHECK(back.h() == o.h());
  CHECK(back.v() == o.v());
}

TEST_CASE("Veech-full detection") {
  CHECK(is_veech_full(flagship()));
  CHECK(is_veech_full(Origami::torus()));
  CHECK_FALSE(is_veech_full(l_shape()));
  CHECK(automorphism_count(flagship()) == 1);
  CHECK(automorphism_count(Origami::torus()) == 1);
  Origami ew(parse_cycles("(1,2,3,4)(5,6,7,8)"), parse_cycles("(1,5,3,7)(2,8,4,6)"));
  CHECK(is_veech_full(ew));
  CHECK(automorphism_count(ew) == 8);
}

TEST_CASE("SL(2,Z) orbits") {
  CHECK(sl2z_orbit(flagship(), 100).nodes.size() == 1);
  CHECK(sl2z_orbit(Origami::torus(), 100).nodes.size() == 1);
  OrbitGraph g = sl2z_orbit(l_shape(), 100);
  CHECK_FALSE(g.truncated);
  CHECK(g.nodes.size() == 3);
  // closure: every edge lands on a node whose form matches the generator image
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    Origami x = to_origami(g.nodes[i]);
    REQUIRE(g.edges[i][0] >= 0);
    REQUIRE(g.edges[i][1] >= 0);
    CHECK(canonical_form(apply_veech_generator(VeechGenerator::T, x)) == g.nodes[g.edges[i][0]]);
    CHECK(canonical_form(apply_veech_generator(VeechGenerator::S, x)) == g.nodes[g.edges[i][1]]);
  }
  OrbitGraph cut = sl2z_orbit(l_shape(), 1);
  CHECK(cut.truncated);
  CHECK_THROWS_AS(sl2z_orbit(l_shape(), 0), Error);
}

TEST_CASE("horizontal cylinders") {
  // rows {6,6,2,2}; the two 2-square rows form a single 2x2 cylinder
  CylinderDecomposition d = horizontal_cylinders(flagship());
  CHECK(d.circumferences() == std::vector<std::size_t>{6, 6, 2});
  CHECK(d.area() == 16);
  for (const auto& c : d.cylinders) CHECK(c.height == (c.circumference == 2 ? 2u : 1u));
  CylinderDecomposition t = horizontal_cylinders(Origami::torus());
  REQUIRE(t.cylinders.size() == 1);
  CHECK(t.cylinders[0].circumference == 1);
  CHECK(t.cylinders[0].height == 1);
}

TEST_CASE("cylinders in rational directions") {
  Origami o = flagship();
  CHECK(cylinders_in_direction(o, 1, 0).circumferences() == horizontal_cylinders(o).circumferences());
  CHECK(cylinders_in_direction(o, 0, 1).circumferences() == horizontal_cylinders(o).circumferences());
  CHECK(cylinders_in_direction(o, 1, 2).area() == 16);
  CHECK_THROWS_AS(cylinders_in_direction(o, 2, 4), Error);
}

TEST_CASE("homological dimension") {
  Origami o = flagship();
  CHECK(homological_dimension(o, 1, 0) == 2);
  CHECK(homological_dimension(o, 0, 1) == 2);
  CHECK(homological_dimension(o, 1, 2) == 2);
  CHECK(homological_dimension(o, 3, -5) == 2);
  CHECK(homological_dimension(Origami::torus(), 1, 0) == 1);
}

TEST_CASE("word to horizontal moves the direction to (1,0)") {
  for (auto [p, q] : {std::pair{0L, 1L}, {1L, 2L}, {-3L, 5L}, {-1L, 0L}, {7L, -2L}}) {
    long x = p, y = q;
    for (VeechGenerator g : word_to_horizontal(p, q)) {
      auto m = generator_matrix(g);
      long nx = m[0][0] * x + m[0][1] * y, ny = m[1][0] * x + m[1][1] * y;
      x = nx;
      y = ny;
    }
    CHECK(x == 1);
    CHECK(y == 0);
  }
}

TEST_CASE("reducedness") {
  CHECK(is_reduced(flagship()));
  CHECK(is_reduced(Origami::torus()));
  // two squares side by side: a double cover of the torus with lattice 2Z x Z
  CHECK_FALSE(is_reduced(Origami(parse_cycles("(1,2)"), Permutation::identity(2))));
}

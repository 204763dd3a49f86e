#include <doctest.h>

#include "origami/error.hpp"
#include "origami/permutation.hpp"

using namespace origami;

TEST_CASE("cycle notation parses and round-trips") {
  Permutation p = parse_cycles("(1,2,3)(4,5)");
  CHECK(p.degree() == 5);
  CHECK(p(0) == 1);
  CHECK(p(2) == 0);
  CHECK(p(3) == 4);
  CHECK(format_cycles(p) == "(1,2,3)(4,5)");
  CHECK(format_cycles(parse_cycles(" ( 3 ,1, 2 )")) == "(1,2,3)");
  CHECK(format_cycles(parse_cycles("()", 4)) == "()");
  CHECK(parse_cycles("(1,2)", 6).degree() == 6);
  CHECK(parse_cycles("(7)").degree() == 7);
}

TEST_CASE("malformed cycles are rejected") {
  for (const char* bad : {"(1,2", "(1,1)", "(0,1)", "(1,a)", "1,2", "(1,2)(2,3)"}) {
    CAPTURE(bad);
    try {
      parse_cycles(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MalformedCycles);
    }
  }
  CHECK_THROWS_AS(parse_cycles("(1,5)", 3), Error);
}

TEST_CASE("composition is right to left") {
  Permutation a = parse_cycles("(1,2)", 3), b = parse_cycles("(2,3)", 3);
  // a(b(1)) = 2, a(b(2)) = 3, a(b(3)) = 1
  CHECK(format_cycles(compose(a, b)) == "(1,2,3)");
  CHECK(format_cycles(compose(b, a)) == "(1,3,2)");
}

TEST_CASE("commutator of the flagship pair") {
  Permutation h = parse_cycles("(1,2,3,4,5,6)(12,11,10,9,8,7)(13,14)(15,16)");
  Permutation v = parse_cycles("(12,2,16,14,10,6)(11,5,15,13,7,1)(3,9)(4,8)");
  Permutation c = commutator(h, v);
  CHECK(format_cycles(c) == "(1,3,5)(7,15,9)(10,16,12)");
  CHECK(c.cycle_type() == std::vector<std::size_t>{3, 3, 3, 1, 1, 1, 1, 1, 1, 1});
  CHECK(c.cycle_count() == 10);
}

TEST_CASE("commuting permutations have trivial commutator") {
  Permutation h = parse_cycles("(1,2,3,4)");
  CHECK(commutator(h, compose(h, h)).is_identity());
}

TEST_CASE("transitivity") {
  CHECK(is_transitive(parse_cycles("(1,2)", 3), parse_cycles("(2,3)", 3)));
  CHECK_FALSE(is_transitive(parse_cycles("(1,2)", 4), parse_cycles("(3,4)", 4)));
  CHECK(is_transitive(Permutation::identity(1), Permutation::identity(1)));
}

TEST_CASE("simultaneous conjugator") {
  Permutation h = parse_cycles("(1,2,3)"), v = parse_cycles("(1,2)", 3);
  Permutation psi = parse_cycles("(1,3)");
  Permutation h2 = conjugate(h, psi), v2 = conjugate(v, psi);
  auto found = simultaneous_conjugator(h, v, h2, v2);
  REQUIRE(found);
  CHECK(conjugate(h, *found) == h2);
  CHECK(conjugate(v, *found) == v2);
  // different cycle structure: no conjugator
  CHECK_FALSE(simultaneous_conjugator(h, v, h, parse_cycles("(1,2,3)")));
}

TEST_CASE("spec-style parsing examples") {
  Permutation h = parse_cycles("(1,2,3,4,5,6)(12,11,10,9,8,7)(13,14)(15,16)", 16);
  CHECK(h(0) == 1);
  CHECK(h(11) == 10);
  CHECK(parse_cycles("", 5) == Permutation::identity(5));
  Permutation p = parse_cycles("(1,3)(2)");
  CHECK(p.degree() == 3);
  CHECK(format_cycles(p).find("(1,3)") != std::string::npos);
}

TEST_CASE("commutator with the identity is trivial") {
  Permutation a = parse_cycles("(1,4,2)(3,5)");
  CHECK(commutator(a, Permutation::identity(5)).is_identity());
}

TEST_CASE("a single cycle with the identity is transitive") {
  CHECK(is_transitive(parse_cycles("(1,2,3,4,5)"), Permutation::identity(5)));
  CHECK_FALSE(is_transitive(parse_cycles("(1,2)", 4), parse_cycles("(1,2)", 4)));
}

TEST_CASE("conjugator of a pair with itself and with the swapped pair") {
  Permutation h = parse_cycles("(1,2,3,4,5,6)(12,11,10,9,8,7)(13,14)(15,16)");
  Permutation v = parse_cycles("(12,2,16,14,10,6)(11,5,15,13,7,1)(3,9)(4,8)");
  auto self = simultaneous_conjugator(h, v, h, v);
  REQUIRE(self);
  CHECK(conjugate(h, *self) == h);
  CHECK(conjugate(v, *self) == v);
  auto swapped = simultaneous_conjugator(h, v, v, h);
  if (swapped) {
    CHECK(conjugate(h, *swapped) == v);
    CHECK(conjugate(v, *swapped) == h);
  }
}

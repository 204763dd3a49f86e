#include <doctest.h>

#include <random>

#include "origami/fixtures.hpp"
#include "origami/galois.hpp"
#include "origami/polynomial.hpp"

using namespace origami;

namespace {

// det(xI - M) by cofactor expansion along the first row, entries as polynomials
IntPolynomial cofactor_charpoly(const std::vector<std::vector<IntPolynomial>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  IntPolynomial total;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<IntPolynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<IntPolynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    IntPolynomial term = a[0][j] * cofactor_charpoly(minor);
    total = j % 2 == 0 ? total + term : total - term;
  }
  return total;
}

const IntPolynomial kCyclotomic7{1, 1, 1, 1, 1, 1, 1};

}  // namespace

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly(IntMatrix::identity(6)) == IntPolynomial{1, -6, 15, -20, 15, -6, 1});
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m(4, 4);
    std::vector<std::vector<IntPolynomial>> xm(4, std::vector<IntPolynomial>(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        m(i, j) = d(rng);
        xm[i][j] = IntPolynomial(std::vector<Integer>{-m(i, j), i == j ? 1 : 0});
      }
    CHECK(char_poly(m) == cofactor_charpoly(xm));
  }
}

TEST_CASE("reciprocity") {
  const auto& fa = reference_fixtures().f_A;
  CHECK(is_reciprocal(fa));
  CHECK_FALSE(is_reciprocal(IntPolynomial{-2, 1}));
  CHECK(is_reciprocal(IntPolynomial{1, -3, 1} * IntPolynomial{1, 5, 1}));
  CHECK(is_reciprocal_up_to_sign(IntPolynomial{-1, 0, 1}));
}

TEST_CASE("irreducibility") {
  IrreducibilityReport r = is_irreducible_over_Z(reference_fixtures().f_A);
  CHECK(r.irreducible);
  CHECK(r.certifying_prime.has_value());

  IrreducibilityReport s = is_irreducible_over_Z(IntPolynomial{-1, 0, 1});
  CHECK_FALSE(s.irreducible);
  REQUIRE(s.factor.has_value());
  CHECK((*s.factor == IntPolynomial{-1, 1} || *s.factor == IntPolynomial{1, 1}));

  IrreducibilityReport c = is_irreducible_over_Z(kCyclotomic7);
  CHECK(c.irreducible);
  // x^6 + ... + 1 mod 13: 13 has order 2 mod 7, so three quadratic factors
  auto pattern = factor_degrees_mod_p(kCyclotomic7, 13);
  REQUIRE(pattern);
  CHECK(*pattern == std::vector<std::size_t>{2, 2, 2});

  CHECK_FALSE(is_irreducible_over_Z(IntPolynomial{1, -3, 1} * IntPolynomial{1, 5, 1}).irreducible);
  CHECK_FALSE(is_irreducible_over_Z(IntPolynomial{1, -6, 15, -20, 15, -6, 1}).irreducible);
}

TEST_CASE("real roots by Sturm sequences") {
  CHECK(count_real_roots(reference_fixtures().f_A).real_roots == 6);
  CHECK(count_real_roots(IntPolynomial{1, 0, 1}).real_roots == 0);
  CHECK(count_real_roots(IntPolynomial{-2, 0, 1}).real_roots == 2);
  CHECK(count_real_roots(kCyclotomic7).real_roots == 0);
}

TEST_CASE("Galois groups of reciprocal sextics") {
  GaloisReport fa = galois_order_reciprocal(reference_fixtures().f_A, 100);
  CHECK(fa.order == 48);
  CHECK(fa.certified());
  CHECK(fa.order % 6 == 0);

  GaloisReport cyc = galois_order_reciprocal(kCyclotomic7, 100);
  CHECK(cyc.order != 48);
  CHECK(cyc.order == 6);
  CHECK(cyc.order % 6 == 0);
}

TEST_CASE("hyperoctahedral group") {
  const auto& b3 = HyperoctahedralGroup::cached(3);
  CHECK(b3.order() == 48);
  std::size_t transitive = 0;
  for (const auto& s : b3.subgroups())
    if (s.transitive) ++transitive;
  CHECK(transitive > 0);
  CHECK(HyperoctahedralGroup::cached(2).order() == 8);
}

TEST_CASE("polynomial arithmetic") {
  IntPolynomial a{1, 1}, b{-1, 1};
  CHECK(a * b == IntPolynomial{-1, 0, 1});
  CHECK(divide_exact(IntPolynomial{-1, 0, 1}, a) == b);
  CHECK_FALSE(divide_exact(IntPolynomial{1, 0, 1}, a).has_value());
  CHECK(resultant(a, b) != 0);
  CHECK(discriminant(IntPolynomial{-2, 0, 1}) == 8);
  CHECK(IntPolynomial{}.degree() == -1);
}

#pragma once

// Univariate integer polynomials: characteristic polynomials, Sturm sequences,
// factorization degree patterns modulo primes, irreducibility over Z.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "origami/matrix.hpp"

namespace origami {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  /// coefficients low degree first; trailing zeros are dropped
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);
  static IntPolynomial monomial(std::size_t degree, const Integer& c = 1);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Integer>& coefficients() const noexcept { return c_; }
  Integer coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
  const Integer& leading() const;

  Integer operator()(const Integer& x) const;
  IntPolynomial derivative() const;
  Integer content() const;
  IntPolynomial primitive_part() const;

  bool operator==(const IntPolynomial&) const = default;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  /// e.g. "x^6 - 3*x^5 - 91*x^4 + 1"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// Exact division over Z; nullopt if b does not divide a.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// det(xI - M), by the Faddeev-LeVerrier recursion with exact integer division.
IntPolynomial char_poly(const IntMatrix& m);

/// Coefficient list is a palindrome.
bool is_reciprocal(const IntPolynomial& f);
/// Palindrome or anti-palindrome.
bool is_reciprocal_up_to_sign(const IntPolynomial& f);

Integer resultant(const IntPolynomial& f, const IntPolynomial& g);
Integer discriminant(const IntPolynomial& f);

struct SturmReport {
  /// primitive integer multiples of the Sturm chain of the squarefree part
  std::vector<IntPolynomial> chain;
  int sign_changes_at_minus_infinity = 0;
  int sign_changes_at_plus_infinity = 0;
  int real_roots = 0;  // distinct
  bool squarefree = true;
};

/// Number of distinct real roots. Throws DomainError on the zero polynomial.
SturmReport count_real_roots(const IntPolynomial& f);

/// Degrees of the irreducible factors of f mod p (sorted descending), from a
/// distinct-degree factorization. Requires p prime, p not dividing lc(f), and f
/// squarefree mod p; returns nullopt otherwise.
std::optional<std::vector<std::size_t>> factor_degrees_mod_p(const IntPolynomial& f, std::uint64_t p);

bool is_probable_prime_small(std::uint64_t n);

/// Primes p (ascending, starting at 2) with p not dividing lc(f)·disc(f).
std::vector<std::uint64_t> good_primes(const IntPolynomial& f, std::size_t count);

struct IrreducibilityReport {
  bool irreducible = false;
  /// "prime" (irreducible mod a prime), "degree-patterns" (no factor degree is
  /// compatible with the patterns seen mod several primes), "factor" (explicit
  /// factor found), "search" (exhaustive Kronecker search found nothing)
  std::string method;
  std::optional<std::uint64_t> certifying_prime;
  std::vector<std::pair<std::uint64_t, std::vector<std::size_t>>> patterns;
  std::optional<IntPolynomial> factor;
};

/// prime_budget primes not dividing lc·disc are scanned before the factor search.
IrreducibilityReport is_irreducible_over_Z(const IntPolynomial& f, std::size_t prime_budget = 25);

}  // namespace origami

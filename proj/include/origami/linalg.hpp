#pragma once

// Exact linear algebra over Z and Q.

#include <optional>

#include "origami/matrix.hpp"

namespace origami {

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Unique solution X of A X = B for square nonsingular A; throws Singular otherwise.
RatMatrix solve(const RatMatrix& a, const RatMatrix& b);
RatMatrix inverse(const RatMatrix& a);
/// Inverse of a unimodular integer matrix (throws NotIntegral if det != ±1).
IntMatrix inverse_unimodular(const IntMatrix& a);

/// Coordinates of each column of `target` in the (full column rank) basis `basis`;
/// nullopt when some column is outside the rational span.
std::optional<RatMatrix> coordinates_in(const RatMatrix& basis, const RatMatrix& target);

/// Columns form a Z-basis of {x in Z^n : A x = 0}. The result is saturated by
/// construction (it comes from a unimodular column transform).
IntMatrix integer_kernel(const IntMatrix& a);

/// Z-basis (columns) of (span_Q of the columns) ∩ Z^n.
IntMatrix saturate(const IntMatrix& columns);

/// Column-style Hermite reduction: returns a unimodular U with A·U = [H | 0],
/// H lower echelon, and the number of nonzero columns of H.
struct ColumnEchelon {
  IntMatrix reduced;
  IntMatrix transform;
  std::size_t rank = 0;
};
ColumnEchelon column_echelon(const IntMatrix& a);

Integer content(const IntVector& v);

}  // namespace origami

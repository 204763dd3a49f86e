#include "origami/linalg.hpp"

#include <sstream>
#include <utility>

namespace origami {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      require(m(i, j).get_den() == 1, ErrorCode::NotIntegral,
              "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + m(i, j).get_str());
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

RatVector to_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

IntVector to_integer(const RatVector& v) {
  IntVector r;
  r.reserve(v.size());
  for (const auto& x : v) {
    require(x.get_den() == 1, ErrorCode::NotIntegral, "vector entry " + x.get_str());
    r.push_back(x.get_num());
  }
  return r;
}

IntMatrix power(const IntMatrix& m, long exponent) {
  require(m.is_square(), ErrorCode::ShapeMismatch, "power of non-square matrix");
  IntMatrix base = exponent < 0 ? inverse_unimodular(m) : m;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  IntMatrix result = IntMatrix::identity(m.rows());
  while (e) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

namespace {
template <class T>
std::string matrix_string(const Matrix<T>& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}
}  // namespace

std::string to_string(const IntMatrix& m) { return matrix_string(m); }
std::string to_string(const RatMatrix& m) { return matrix_string(m); }

Integer determinant(const IntMatrix& m) {
  require(m.is_square(), ErrorCode::ShapeMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Gauss-Jordan to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational determinant(const RatMatrix& m) {
  require(m.is_square(), ErrorCode::ShapeMismatch, "determinant of non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return rref(a).size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

RatMatrix solve(const RatMatrix& a, const RatMatrix& b) {
  require(a.is_square() && a.rows() == b.rows(), ErrorCode::ShapeMismatch, "solve");
  const std::size_t n = a.rows();
  RatMatrix aug(n, n + b.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  auto piv = rref(aug);
  require(piv.size() == n && (n == 0 || piv.back() == n - 1), ErrorCode::Singular, "singular system");
  RatMatrix x(n, b.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = aug(i, n + j);
  return x;
}

RatMatrix inverse(const RatMatrix& a) { return solve(a, RatMatrix::identity(a.rows())); }

IntMatrix inverse_unimodular(const IntMatrix& a) { return to_integer(inverse(to_rational(a))); }

std::optional<RatMatrix> coordinates_in(const RatMatrix& basis, const RatMatrix& target) {
  require(basis.rows() == target.rows(), ErrorCode::ShapeMismatch, "coordinates_in");
  const std::size_t n = basis.rows(), k = basis.cols();
  RatMatrix aug(n, k + target.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = basis(i, j);
    for (std::size_t j = 0; j < target.cols(); ++j) aug(i, k + j) = target(i, j);
  }
  auto piv = rref(aug);
  for (std::size_t c : piv)
    if (c >= k) return std::nullopt;
  require(piv.size() == k, ErrorCode::Singular, "basis columns are dependent");
  RatMatrix x(k, target.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < target.cols(); ++j) x(i, j) = aug(i, k + j);
  return x;
}

ColumnEchelon column_echelon(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix u = IntMatrix::identity(n);

  // col_j <- p*col_j + q*col_k ; col_k <- r*col_j + s*col_k  (applied to both a and u)
  auto combine = [&](std::size_t j, std::size_t k, const Integer& p, const Integer& q, const Integer& r,
                     const Integer& s) {
    for (IntMatrix* mat : {&a, &u}) {
      for (std::size_t i = 0; i < mat->rows(); ++i) {
        Integer x = (*mat)(i, j), y = (*mat)(i, k);
        (*mat)(i, j) = p * x + q * y;
        (*mat)(i, k) = r * x + s * y;
      }
    }
  };

  std::size_t piv = 0;
  for (std::size_t i = 0; i < m && piv < n; ++i) {
    for (std::size_t k = piv + 1; k < n; ++k) {
      if (a(i, k) == 0) continue;
      Integer g, s, t;
      Integer x = a(i, piv), y = a(i, k);
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      // [s -y/g; t x/g] has determinant 1
      Integer yg = y / g, xg = x / g;
      combine(piv, k, s, t, -yg, xg);
    }
    if (a(i, piv) != 0) {
      if (a(i, piv) < 0)
        for (IntMatrix* mat : {&a, &u})
          for (std::size_t r = 0; r < mat->rows(); ++r) (*mat)(r, piv) = -(*mat)(r, piv);
      ++piv;
    }
  }
  return {std::move(a), std::move(u), piv};
}

IntMatrix integer_kernel(const IntMatrix& a) {
  auto ech = column_echelon(a);
  const std::size_t n = a.cols();
  IntMatrix k(n, n - ech.rank);
  for (std::size_t j = ech.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k(i, j - ech.rank) = ech.transform(i, j);
  return k;
}

IntMatrix saturate(const IntMatrix& columns) {
  // The annihilator rows N satisfy N x = 0 exactly on the rational span.
  IntMatrix annihilator = integer_kernel(columns.transpose()).transpose();
  if (annihilator.rows() == 0) return IntMatrix::identity(columns.rows());
  return integer_kernel(annihilator);
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

}  // namespace origami

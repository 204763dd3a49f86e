#include "origami/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "origami/error.hpp"
#include "origami/linalg.hpp"

namespace origami {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : c_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long x : coefficients) c_.emplace_back(x);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, const Integer& c) {
  std::vector<Integer> v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& IntPolynomial::leading() const {
  require(!c_.empty(), ErrorCode::DomainError, "zero polynomial has no leading coefficient");
  return c_.back();
}

Integer IntPolynomial::operator()(const Integer& x) const {
  Integer acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<Integer> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<unsigned long>(k));
  return IntPolynomial(std::move(d));
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> out(c_);
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Integer& a = c_[k];
    if (a == 0) continue;
    Integer mag = abs(a);
    if (s.empty())
      s += a < 0 ? "-" : "";
    else
      s += a < 0 ? " - " : " + ";
    bool unit = mag == 1;
    if (!unit || k == 0) s += mag.get_str();
    if (k > 0) {
      if (!unit) s += "*";
      s += "x";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// rational helpers (low degree first)

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPolynomial& f) { return RatPoly(f.coefficients().begin(), f.coefficients().end()); }

IntPolynomial primitive_from_rat(const RatPoly& p) {
  Integer den = 1;
  for (const auto& x : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> c;
  for (const auto& x : p) c.push_back(Integer(x * den));
  IntPolynomial out(std::move(c));
  if (out.is_zero()) return out;
  Integer g = out.content();  // positive: the sign is kept
  std::vector<Integer> d(out.coefficients());
  for (auto& x : d) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(d));
}

RatPoly rat_rem(RatPoly a, const RatPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = rat_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int sign_of(const Integer& x) { return sgn(x); }

}  // namespace

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  require(!b.is_zero(), ErrorCode::DomainError, "division by the zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> r(a.coefficients());
  const auto& bc = b.coefficients();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer& top = r[k + bc.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), bc.back().get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), bc.back().get_mpz_t());
    q[k] = c;
    for (std::size_t j = 0; j < bc.size(); ++j) r[k + j] -= c * bc[j];
  }
  for (const auto& x : r)
    if (x != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

IntPolynomial char_poly(const IntMatrix& a) {
  require(a.is_square(), ErrorCode::ShapeMismatch, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Integer> c(n + 1, 0);
  c[n] = 1;
  IntMatrix m(n, n);
  IntMatrix am(n, n);  // a * m
  for (std::size_t k = 1; k <= n; ++k) {
    m = am;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    am = a * m;
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    require(mpz_divisible_ui_p(tr.get_mpz_t(), k) != 0, ErrorCode::InternalInvariantViolation,
            "Faddeev-LeVerrier trace not divisible");
    mpz_divexact_ui(tr.get_mpz_t(), tr.get_mpz_t(), k);
    c[n - k] = -tr;
  }
  return IntPolynomial(std::move(c));
}

bool is_reciprocal(const IntPolynomial& f) {
  const auto& c = f.coefficients();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

bool is_reciprocal_up_to_sign(const IntPolynomial& f) {
  if (is_reciprocal(f)) return true;
  const auto& c = f.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != -c[c.size() - 1 - k]) return false;
  return true;
}

Integer resultant(const IntPolynomial& f, const IntPolynomial& g) {
  require(!f.is_zero() && !g.is_zero(), ErrorCode::DomainError, "resultant with the zero polynomial");
  const auto m = static_cast<std::size_t>(f.degree()), n = static_cast<std::size_t>(g.degree());
  if (m == 0 && n == 0) return 1;
  IntMatrix s(m + n, m + n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = f.coefficient(m - k);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = g.coefficient(n - k);
  return determinant(s);
}

Integer discriminant(const IntPolynomial& f) {
  require(f.degree() >= 1, ErrorCode::DomainError, "discriminant needs degree >= 1");
  const long n = f.degree();
  if (n == 1) return 1;
  Integer r = resultant(f, f.derivative());
  Integer d;
  mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  if ((n * (n - 1) / 2) % 2) d = -d;
  return d;
}

SturmReport count_real_roots(const IntPolynomial& f) {
  require(!f.is_zero(), ErrorCode::DomainError, "real roots of the zero polynomial");
  SturmReport rep;
  RatPoly p = to_rat(f);
  RatPoly g = rat_gcd(p, to_rat(f.derivative()));
  RatPoly sq = p;
  if (g.size() > 1) {
    rep.squarefree = false;
    // exact quotient p / g
    RatPoly q(p.size() - g.size() + 1, 0);
    RatPoly r = p;
    for (std::size_t k = q.size(); k-- > 0;) {
      q[k] = r[k + g.size() - 1] / g.back();
      for (std::size_t j = 0; j < g.size(); ++j) r[k + j] -= q[k] * g[j];
    }
    sq = q;
  }
  IntPolynomial p0 = primitive_from_rat(sq);
  rep.chain.push_back(p0);
  if (p0.degree() >= 1) rep.chain.push_back(primitive_from_rat(to_rat(p0.derivative())));
  while (rep.chain.back().degree() >= 1) {
    RatPoly r = rat_rem(to_rat(rep.chain[rep.chain.size() - 2]), to_rat(rep.chain.back()));
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    rep.chain.push_back(primitive_from_rat(r));
  }
  auto changes = [](const std::vector<int>& s) {
    int count = 0, last = 0;
    for (int x : s) {
      if (x == 0) continue;
      if (last != 0 && x != last) ++count;
      last = x;
    }
    return count;
  };
  std::vector<int> at_minus, at_plus;
  for (const auto& q : rep.chain) {
    int s = sign_of(q.leading());
    at_plus.push_back(s);
    at_minus.push_back(q.degree() % 2 ? -s : s);
  }
  rep.sign_changes_at_minus_infinity = changes(at_minus);
  rep.sign_changes_at_plus_infinity = changes(at_plus);
  rep.real_roots = rep.sign_changes_at_minus_infinity - rep.sign_changes_at_plus_infinity;
  return rep;
}

// ---------------------------------------------------------------------------
// arithmetic in F_p[x], p < 2^32, low degree first, trimmed

namespace {

using ModPoly = std::vector<std::uint64_t>;

void mtrim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

ModPoly reduce(const IntPolynomial& f, std::uint64_t p) {
  ModPoly out;
  Integer r;
  for (const auto& c : f.coefficients()) {
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
    out.push_back(r.get_ui());
  }
  mtrim(out);
  return out;
}

ModPoly mrem(ModPoly a, const ModPoly& b, std::uint64_t p) {
  mtrim(a);
  const std::uint64_t inv = invmod(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    std::uint64_t q = a.back() * inv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = (a[shift + k] + p - q * b[k] % p) % p;
    a.pop_back();
    mtrim(a);
  }
  return a;
}

ModPoly mdiv(ModPoly a, const ModPoly& b, std::uint64_t p) {
  const std::uint64_t inv = invmod(b.back(), p);
  ModPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    std::uint64_t c = a[k + b.size() - 1] * inv % p;
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = (a[k + j] + p - c * b[j] % p) % p;
  }
  mtrim(q);
  return q;
}

ModPoly mmul(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  mtrim(c);
  return c;
}

ModPoly mgcd(ModPoly a, ModPoly b, std::uint64_t p) {
  mtrim(a);
  mtrim(b);
  while (!b.empty()) {
    ModPoly r = mrem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t inv = invmod(a.back(), p);
    for (auto& x : a) x = x * inv % p;
  }
  return a;
}

ModPoly mpow_x(std::uint64_t e, const ModPoly& m, std::uint64_t p, ModPoly base) {
  ModPoly r{1};
  base = mrem(base, m, p);
  while (e) {
    if (e & 1) r = mrem(mmul(r, base, p), m, p);
    base = mrem(mmul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_probable_prime_small(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::vector<std::size_t>> factor_degrees_mod_p(const IntPolynomial& f, std::uint64_t p) {
  require(f.degree() >= 1, ErrorCode::DomainError, "factor degrees need degree >= 1");
  require(p >= 2 && p < (1ULL << 31) && is_probable_prime_small(p), ErrorCode::DomainError, "modulus must be a prime below 2^31");
  ModPoly a = reduce(f, p);
  if (static_cast<long>(a.size()) - 1 != f.degree()) return std::nullopt;  // p | lc
  ModPoly da;
  for (std::size_t k = 1; k < a.size(); ++k) da.push_back(a[k] * (k % p) % p);
  mtrim(da);
  if (mgcd(a, da, p).size() != 1) return std::nullopt;  // not squarefree mod p
  std::uint64_t inv = invmod(a.back(), p);
  for (auto& x : a) x = x * inv % p;

  std::vector<std::size_t> degrees;
  ModPoly xpow{0, 1};  // x^(p^d) mod a
  for (std::size_t d = 1; 2 * d <= a.size() - 1; ++d) {
    xpow = mpow_x(p, a, p, xpow);
    ModPoly diff = xpow;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    mtrim(diff);
    ModPoly g = mgcd(a, diff, p);
    if (g.size() > 1) {
      std::size_t gd = g.size() - 1;
      for (std::size_t k = 0; k < gd / d; ++k) degrees.push_back(d);
      a = mdiv(a, g, p);
      xpow = mrem(xpow, a, p);
    }
  }
  if (a.size() > 1) degrees.push_back(a.size() - 1);
  std::sort(degrees.rbegin(), degrees.rend());
  return degrees;
}

std::vector<std::uint64_t> good_primes(const IntPolynomial& f, std::size_t count) {
  Integer bad = f.leading() * discriminant(f);
  require(bad != 0, ErrorCode::DomainError, "polynomial is not squarefree; no good primes");
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; out.size() < count; ++p) {
    if (!is_probable_prime_small(p)) continue;
    if (mpz_divisible_ui_p(bad.get_mpz_t(), p)) continue;
    out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// irreducibility

namespace {

std::vector<Integer> divisors_of(Integer n) {
  n = abs(n);
  std::vector<std::pair<Integer, unsigned>> fac;
  for (Integer d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      ++e;
    }
    if (e) fac.push_back({d, e});
  }
  if (n > 1) fac.push_back({n, 1});
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : fac) {
    std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Integer polynomial of degree <= k through (xs[i], ys[i]), if integral.
std::optional<IntPolynomial> interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  const std::size_t m = xs.size();
  RatMatrix a(m, m), b(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    Rational pw = 1;
    for (std::size_t j = 0; j < m; ++j) {
      a(i, j) = pw;
      pw *= Rational(xs[i]);
    }
    b(i, 0) = Rational(ys[i]);
  }
  RatMatrix sol = solve(a, b);
  std::vector<Integer> c;
  for (std::size_t j = 0; j < m; ++j) {
    if (sol(j, 0).get_den() != 1) return std::nullopt;
    c.push_back(sol(j, 0).get_num());
  }
  return IntPolynomial(std::move(c));
}

std::optional<IntPolynomial> kronecker_factor(const IntPolynomial& f, std::size_t k) {
  // Mignotte: any factor g of f has |g_i| <= C(k, i) * ||f||_2.
  Integer norm2 = 0;
  for (const auto& c : f.coefficients()) norm2 += c * c;
  Integer bound = sqrt(norm2) + 1;

  struct Point {
    Integer x, y;
    std::vector<Integer> divs;
  };
  std::vector<Point> pts;
  for (long t = 0; t <= 60; ++t) {
    for (int side = 0; side < (t == 0 ? 1 : 2); ++side) {
      long x = side == 0 ? t : -t;
      Integer y = f(Integer(x));
      if (y == 0 || abs(y) > Integer(1000000000L)) continue;
      pts.push_back({Integer(x), y, divisors_of(y)});
    }
  }
  require(pts.size() >= k + 1, ErrorCode::InternalInvariantViolation, "not enough evaluation points for factor search");
  std::stable_sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.divs.size() < b.divs.size(); });
  pts.resize(k + 1);

  std::vector<Integer> xs, ys(k + 1);
  for (const auto& p : pts) xs.push_back(p.x);
  std::vector<std::size_t> idx(k + 1, 0);
  std::vector<int> sgn(k + 1, 1);
  // odometer over divisor choices; the sign of the first value is fixed to +.
  while (true) {
    for (std::size_t i = 0; i <= k; ++i) ys[i] = sgn[i] * pts[i].divs[idx[i]];
    if (auto g = interpolate(xs, ys); g && g->degree() == static_cast<long>(k)) {
      bool ok = mpz_divisible_p(f.leading().get_mpz_t(), g->leading().get_mpz_t()) != 0;
      for (std::size_t i = 0; ok && i <= k; ++i)
        ok = abs(g->coefficient(i)) <= binomial(static_cast<unsigned>(k), static_cast<unsigned>(i)) * bound;
      if (ok && divide_exact(f, *g)) return g->primitive_part();
    }
    std::size_t pos = 0;
    while (pos <= k) {
      if (pos > 0 && sgn[pos] == 1) {
        sgn[pos] = -1;
        break;
      }
      sgn[pos] = 1;
      if (++idx[pos] < pts[pos].divs.size()) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos > k) return std::nullopt;
  }
}

}  // namespace

IrreducibilityReport is_irreducible_over_Z(const IntPolynomial& f, std::size_t prime_budget) {
  require(f.degree() >= 1, ErrorCode::DomainError, "irreducibility needs degree >= 1");
  require(f.content() == 1, ErrorCode::DomainError, "polynomial is not primitive");
  IrreducibilityReport rep;
  const auto n = static_cast<std::size_t>(f.degree());
  if (n == 1) {
    rep.irreducible = true;
    rep.method = "degree";
    return rep;
  }
  RatPoly g = rat_gcd(to_rat(f), to_rat(f.derivative()));
  if (g.size() > 1) {
    rep.irreducible = false;
    rep.method = "factor";
    rep.factor = primitive_from_rat(g).primitive_part();
    return rep;
  }

  // factor degrees still possible over Z: subset sums of every mod-p pattern
  std::set<std::size_t> possible;
  for (std::size_t k = 1; 2 * k <= n; ++k) possible.insert(k);
  for (std::uint64_t p : good_primes(f, prime_budget)) {
    auto pat = factor_degrees_mod_p(f, p);
    if (!pat) continue;
    rep.patterns.push_back({p, *pat});
    if (pat->size() == 1) {
      rep.irreducible = true;
      rep.method = "prime";
      rep.certifying_prime = p;
      return rep;
    }
    std::vector<bool> reach(n + 1, false);
    reach[0] = true;
    for (std::size_t d : *pat)
      for (std::size_t s = n; s >= d; --s)
        if (reach[s - d]) reach[s] = true;
    for (auto it = possible.begin(); it != possible.end();) it = reach[*it] ? std::next(it) : possible.erase(it);
  }
  if (possible.empty()) {
    rep.irreducible = true;
    rep.method = "degree-patterns";
    return rep;
  }

  if (possible.count(1)) {
    // rational roots r/s: r | f(0), s | lc; smallest |r/s| first, positive first
    if (f.coefficient(0) == 0) {
      rep.irreducible = false;
      rep.method = "factor";
      rep.factor = IntPolynomial{0, 1};
      return rep;
    }
    std::vector<Rational> cands;
    for (const auto& r : divisors_of(f.coefficient(0)))
      for (const auto& s : divisors_of(f.leading())) {
        cands.push_back(Rational(r, s));
        cands.push_back(Rational(-r, s));
      }
    for (auto& c : cands) c.canonicalize();
    std::stable_sort(cands.begin(), cands.end(), [](const Rational& a, const Rational& b) {
      if (abs(a) != abs(b)) return abs(a) < abs(b);
      return a > b;
    });
    for (const auto& c : cands) {
      IntPolynomial lin(std::vector<Integer>{-c.get_num(), c.get_den()});
      if (divide_exact(f, lin)) {
        rep.irreducible = false;
        rep.method = "factor";
        rep.factor = lin;
        return rep;
      }
    }
  }
  for (std::size_t k : possible) {
    if (k == 1) continue;
    if (auto fac = kronecker_factor(f, k)) {
      rep.irreducible = false;
      rep.method = "factor";
      rep.factor = *fac;
      return rep;
    }
  }
  rep.irreducible = true;
  rep.method = "search";
  return rep;
}

}  // namespace origami

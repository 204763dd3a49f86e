#include "origami/homology.hpp"

#include <algorithm>

#include "origami/error.hpp"
#include "origami/linalg.hpp"

namespace origami {

using Point = Permutation::Point;

bool ChainComplex::is_cycle(const CycleVector& z) const {
  if (z.size() != edge_count) return false;
  for (std::size_t r = 0; r < boundary1.rows(); ++r) {
    Integer s = 0;
    for (std::size_t e = 0; e < edge_count; ++e)
      if (z[e] != 0) s += boundary1(r, e) * z[e];
    if (s != 0) return false;
  }
  return true;
}

ChainComplex build_chain_complex(const Origami& o) {
  ChainComplex cc;
  cc.h = o.h();
  cc.v = o.v();
  const std::size_t n = o.size();
  Permutation c = commutator(o.h(), o.v());
  cc.corner_vertex.assign(n, n);
  std::size_t next = 0;
  for (Point i = 0; i < n; ++i) {
    if (cc.corner_vertex[i] != n) continue;
    for (Point j = i; cc.corner_vertex[j] == n; j = c(j)) cc.corner_vertex[j] = next;
    ++next;
  }
  cc.vertex_count = next;
  cc.edge_count = 2 * n;
  cc.face_count = n;
  cc.boundary1 = IntMatrix(cc.vertex_count, cc.edge_count);
  cc.boundary2 = IntMatrix(cc.edge_count, cc.face_count);
  const auto& vx = cc.corner_vertex;
  for (Point i = 0; i < n; ++i) {
    cc.boundary1(vx[o.h()(i)], i) += 1;
    cc.boundary1(vx[i], i) -= 1;
    cc.boundary1(vx[o.v()(i)], n + i) += 1;
    cc.boundary1(vx[i], n + i) -= 1;
    // face i: b_i + l_{h(i)} - b_{v(i)} - l_i
    cc.boundary2(i, i) += 1;
    cc.boundary2(n + o.h()(i), i) += 1;
    cc.boundary2(o.v()(i), i) -= 1;
    cc.boundary2(n + i, i) -= 1;
  }
  // d1 d2 = 0 is what makes this a chain complex at all
  require((cc.boundary1 * cc.boundary2).is_zero(), ErrorCode::InternalInvariantViolation, "d1 d2 != 0");
  return cc;
}

Holonomy holonomy(const CycleVector& z, std::size_t n) {
  Holonomy hol{0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    hol[0] += z[i];
    hol[1] += z[n + i];
  }
  return hol;
}

Integer intersection_number(const CycleVector& a, const CycleVector& b, const ChainComplex& cc) {
  require(cc.is_cycle(a) && cc.is_cycle(b), ErrorCode::NotACycle, "intersection_number needs two cycles");
  const std::size_t n = cc.squares();
  const auto& h = cc.h;
  const auto& v = cc.v;
  const Permutation hi = inverse(h), vi = inverse(v);
  const Permutation c = commutator(h, v);

  // Dual chain: dh[i] runs centre(i) -> centre(h(i)) crossing l_{h(i)};
  // dv[i] runs centre(i) -> centre(v(i)) crossing b_{v(i)}.
  std::vector<Integer> dh(n), dv(n), charge(n);
  for (Point i = 0; i < n; ++i) {
    if (b[i] != 0) {
      dh[i] += b[i];
      charge[h(i)] += b[i];
      charge[i] -= b[i];
    }
    if (b[n + i] != 0) {
      dv[i] += b[n + i];
      charge[v(i)] += b[n + i];
      charge[i] -= b[n + i];
    }
  }
  // Cancel the boundary of the shifted chain vertex by vertex: carry the charge
  // around the vertex from square y to c(y) along left, down, right, up.
  std::vector<bool> done(n, false);
  for (Point base = 0; base < n; ++base) {
    if (done[base]) continue;
    std::vector<Point> orbit;
    for (Point j = base; !done[j]; j = c(j)) {
      done[j] = true;
      orbit.push_back(j);
    }
    Integer carried = 0;
    for (std::size_t t = 0; t < orbit.size(); ++t) {
      Point y = orbit[t];
      carried += charge[y];
      if (t + 1 == orbit.size()) break;
      if (carried == 0) continue;
      Point left = hi(y);
      Point down = vi(left);
      dh[left] -= carried;
      dv[down] -= carried;
      dh[down] += carried;
      dv[h(down)] += carried;
    }
    require(carried == 0, ErrorCode::InternalInvariantViolation, "dual chain is not closed");
  }

  Integer total = 0;
  for (Point i = 0; i < n; ++i) {
    // upward crossing of b_{v(i)}: (right, up) is positively oriented
    if (dv[i] != 0 && a[v(i)] != 0) total += a[v(i)] * dv[i];
    // rightward crossing of l_{h(i)}: (up, right) is negative
    if (dh[i] != 0 && a[n + h(i)] != 0) total -= a[n + h(i)] * dh[i];
  }
  return total;
}

IntMatrix HomologyBasis::holonomy_matrix() const {
  IntMatrix m(2, classes.size());
  for (std::size_t j = 0; j < classes.size(); ++j) {
    m(0, j) = holonomies[j][0];
    m(1, j) = holonomies[j][1];
  }
  return m;
}

IntMatrix HomologyBasis::as_edge_matrix(std::size_t edges) const { return IntMatrix::from_columns(classes, edges); }

HomologyBasis h1_basis(const ChainComplex& cc) {
  const std::size_t n = cc.squares();
  const std::size_t nv = cc.vertex_count;
  const auto& h = cc.h;
  const auto& v = cc.v;
  const auto& vx = cc.corner_vertex;
  auto tail = [&](std::size_t e) { return e < n ? vx[e] : vx[e - n]; };
  auto head = [&](std::size_t e) { return e < n ? vx[h(static_cast<Point>(e))] : vx[v(static_cast<Point>(e - n))]; };

  // Spanning tree of the 1-skeleton.
  struct Link {
    std::size_t edge;
    int sign;  // +1 when the edge runs parent -> child
    std::size_t parent;
  };
  std::vector<std::vector<std::pair<std::size_t, int>>> incident(nv);
  for (std::size_t e = 0; e < 2 * n; ++e) {
    incident[tail(e)].push_back({e, +1});
    incident[head(e)].push_back({e, -1});
  }
  std::vector<bool> in_tree(2 * n, false), seen(nv, false);
  std::vector<Link> up(nv, Link{0, 0, nv});
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::size_t x = queue[q];
    for (auto [e, s] : incident[x]) {
      std::size_t y = s > 0 ? head(e) : tail(e);
      if (seen[y]) continue;
      seen[y] = true;
      in_tree[e] = true;
      up[y] = Link{e, s, x};
      queue.push_back(y);
    }
  }
  require(queue.size() == nv, ErrorCode::DegenerateSurface, "1-skeleton is disconnected");

  // Spanning tree of the dual graph using only non-tree edges.
  const Permutation hi = inverse(h), vi = inverse(v);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> dual(n);
  for (Point i = 0; i < n; ++i) {
    if (!in_tree[i]) {  // b_i separates faces i and v^-1(i)
      dual[i].push_back({i, vi(i)});
      dual[vi(i)].push_back({i, i});
    }
    if (!in_tree[n + i]) {  // l_i separates faces i and h^-1(i)
      dual[i].push_back({n + i, hi(i)});
      dual[hi(i)].push_back({n + i, i});
    }
  }
  std::vector<bool> in_cotree(2 * n, false), face_seen(n, false);
  std::vector<std::size_t> fq{0};
  face_seen[0] = true;
  for (std::size_t q = 0; q < fq.size(); ++q) {
    for (auto [e, g] : dual[fq[q]]) {
      if (face_seen[g]) continue;
      face_seen[g] = true;
      in_cotree[e] = true;
      fq.push_back(g);
    }
  }
  require(fq.size() == n, ErrorCode::DegenerateSurface, "dual graph is disconnected");

  auto path_from_root = [&](std::size_t x) {
    CycleVector z(2 * n, 0);
    while (up[x].parent != nv) {
      z[up[x].edge] += up[x].sign;
      x = up[x].parent;
    }
    return z;
  };

  HomologyBasis basis;
  for (std::size_t e = 0; e < 2 * n; ++e) {
    if (in_tree[e] || in_cotree[e]) continue;
    CycleVector z = path_from_root(tail(e));
    CycleVector back = path_from_root(head(e));
    z[e] += 1;
    for (std::size_t k = 0; k < 2 * n; ++k) z[k] -= back[k];
    basis.classes.push_back(std::move(z));
  }
  require(basis.classes.size() == 2 * cc.genus(), ErrorCode::InternalInvariantViolation,
          "tree-cotree leftover count != 2g");

  const std::size_t r = basis.classes.size();
  basis.gram = IntMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      Integer x = intersection_number(basis.classes[i], basis.classes[j], cc);
      basis.gram(i, j) = x;
      basis.gram(j, i) = -x;
    }
  for (const auto& z : basis.classes) basis.holonomies.push_back(holonomy(z, n));
  require(abs(determinant(basis.gram)) == 1, ErrorCode::InternalInvariantViolation,
          "intersection matrix of the computed basis is not unimodular");
  return basis;
}

IntVector homology_coordinates(const CycleVector& z, const HomologyBasis& basis, const ChainComplex& cc) {
  const std::size_t r = basis.rank();
  RatMatrix pairing(r, 1);
  for (std::size_t j = 0; j < r; ++j) pairing(j, 0) = Rational(intersection_number(z, basis.classes[j], cc));
  RatMatrix x = solve(to_rational(basis.gram.transpose()), pairing);
  return to_integer(x.column(0));
}

SplitBasis split_zero_holonomy(const HomologyBasis& basis) {
  IntMatrix hol = basis.holonomy_matrix();
  require(rank(hol) == 2, ErrorCode::DegenerateSurface, "holonomy map has rank < 2");
  SplitBasis split;
  split.zero_holonomy = integer_kernel(hol);
  split.restricted_gram = split.zero_holonomy.transpose() * basis.gram * split.zero_holonomy;
  split.tautological = integer_kernel((basis.gram * split.zero_holonomy).transpose());
  require(split.tautological.cols() == 2, ErrorCode::InternalInvariantViolation, "tautological plane is not 2-dimensional");
  if (split.restricted_gram.rows() > 0)
    require(determinant(split.restricted_gram) != 0, ErrorCode::InternalInvariantViolation,
            "zero-holonomy pairing is degenerate");
  return split;
}

bool is_skew_symmetric(const IntMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

IntMatrix standard_symplectic_form(const std::vector<Integer>& divisors) {
  const std::size_t m = divisors.size();
  IntMatrix j(2 * m, 2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    j(k, m + k) = divisors[k];
    j(m + k, k) = -divisors[k];
  }
  return j;
}

SymplecticNormalForm symplectic_normalize(const IntMatrix& gram) {
  require(is_skew_symmetric(gram), ErrorCode::DegenerateForm, "form is not skew-symmetric");
  require(gram.rows() % 2 == 0 && determinant(gram) != 0, ErrorCode::DegenerateForm, "form is degenerate");
  const std::size_t n = gram.rows(), m = n / 2;
  IntMatrix g = gram;
  IntMatrix u = IntMatrix::identity(n);

  // basis[dst] += c * basis[src]
  auto add = [&](std::size_t dst, std::size_t src, const Integer& c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < n; ++i) u(i, dst) += c * u(i, src);
    for (std::size_t j = 0; j < n; ++j) g(dst, j) += c * g(src, j);
    for (std::size_t i = 0; i < n; ++i) g(i, dst) += c * g(i, src);
  };
  auto swap_vectors = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < n; ++i) std::swap(u(i, a), u(i, b));
    for (std::size_t j = 0; j < n; ++j) std::swap(g(a, j), g(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(g(i, a), g(i, b));
  };
  auto negate = [&](std::size_t a) {
    for (std::size_t i = 0; i < n; ++i) u(i, a) = -u(i, a);
    for (std::size_t j = 0; j < n; ++j) g(a, j) = -g(a, j);
    for (std::size_t i = 0; i < n; ++i) g(i, a) = -g(i, a);
  };

  std::vector<Integer> divisors;
  for (std::size_t s = 0; s < m; ++s) {
    const std::size_t a = 2 * s, b = a + 1;
    while (true) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = a; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (g(i, j) != 0 && (bi == n || abs(g(i, j)) < abs(g(bi, bj)))) {
            bi = i;
            bj = j;
          }
      require(bi != n, ErrorCode::DegenerateForm, "form is degenerate");
      swap_vectors(a, bi);
      if (bj == a) bj = bi;
      swap_vectors(b, bj);
      if (g(a, b) < 0) negate(b);
      const Integer d = g(a, b);

      bool clean = true;
      for (std::size_t r = a + 2; r < n; ++r) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), g(a, r).get_mpz_t(), d.get_mpz_t());
        add(r, b, -q);  // <a, r - q b> = g(a,r) - q d
        mpz_fdiv_q(q.get_mpz_t(), g(b, r).get_mpz_t(), d.get_mpz_t());
        add(r, a, q);  // <b, r + q a> = g(b,r) - q d
        if (g(a, r) != 0 || g(b, r) != 0) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t r = a + 2; r < n && divisible; ++r)
        for (std::size_t t = r + 1; t < n; ++t)
          if (g(r, t) % d != 0) {
            add(a, r, Integer(1));
            divisible = false;
            break;
          }
      if (divisible) {
        divisors.push_back(d);
        break;
      }
    }
  }

  // reorder (e_1, f_1, e_2, f_2, ...) into (e_1..e_m, f_1..f_m)
  IntMatrix change(n, n);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      change(i, k) = u(i, 2 * k);
      change(i, m + k) = u(i, 2 * k + 1);
    }
  SymplecticNormalForm out{change, change.transpose() * gram * change, divisors};
  require(out.form == standard_symplectic_form(divisors), ErrorCode::InternalInvariantViolation,
          "normal form reduction did not reach the standard form");
  require(abs(determinant(change)) == 1, ErrorCode::InternalInvariantViolation, "change of basis is not unimodular");
  return out;
}

}  // namespace origami

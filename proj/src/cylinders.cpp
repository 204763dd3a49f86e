#include "origami/cylinders.hpp"

#include <algorithm>
#include <numeric>

#include "origami/error.hpp"
#include "origami/linalg.hpp"

namespace origami {

using Point = Permutation::Point;

std::size_t CylinderDecomposition::area() const {
  std::size_t a = 0;
  for (const auto& c : cylinders) a += c.circumference * c.height;
  return a;
}

std::vector<std::size_t> CylinderDecomposition::circumferences() const {
  std::vector<std::size_t> out;
  for (const auto& c : cylinders) out.push_back(c.circumference);
  std::sort(out.rbegin(), out.rend());
  return out;
}

CylinderDecomposition horizontal_cylinders(const Origami& o) {
  const std::size_t n = o.size();
  const auto& h = o.h();
  const auto& v = o.v();
  Permutation c = commutator(h, v);
  auto rows = h.cycles(true);
  std::vector<std::size_t> row_of(n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t x : rows[r]) row_of[x - 1] = r;

  std::vector<std::size_t> parent(rows.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t r = 0; r < rows.size(); ++r) {
    bool regular = true;
    for (std::size_t x : rows[r]) {
      Point up = v(static_cast<Point>(x - 1));
      if (c(up) != up) {
        regular = false;
        break;
      }
    }
    if (!regular) continue;
    std::size_t above = row_of[v(static_cast<Point>(rows[r][0] - 1))];
    // a regular top boundary forces v(row) to be a whole row of the same length
    require(rows[above].size() == rows[r].size(), ErrorCode::InternalInvariantViolation,
            "row above a regular boundary has a different length");
    parent[find(r)] = find(above);
  }

  CylinderDecomposition d;
  std::vector<long> slot(rows.size(), -1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::size_t root = find(r);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(d.cylinders.size());
      Cylinder cyl;
      cyl.circumference = rows[r].size();
      cyl.waist.assign(2 * n, 0);
      for (std::size_t x : rows[r]) cyl.waist[x - 1] = 1;
      cyl.bottom_row = rows[r];
      d.cylinders.push_back(std::move(cyl));
    }
    d.cylinders[static_cast<std::size_t>(slot[root])].height += 1;
  }
  require(d.area() == n, ErrorCode::InternalInvariantViolation, "cylinder areas do not add up to n");
  return d;
}

IntMatrix pullback_edge_map(VeechGenerator g, const Origami& o) {
  const std::size_t n = o.size();
  const auto& h = o.h();
  const auto& v = o.v();
  const Permutation hi = inverse(h), vi = inverse(v);
  IntMatrix m(2 * n, 2 * n);  // column = image of an edge of g(o)
  for (Point j = 0; j < n; ++j) {
    switch (g) {
      case VeechGenerator::T:  // l'_j: left then up
        m(j, j) = 1;
        m(n + hi(j), n + j) += 1;
        m(hi(j), n + j) -= 1;
        break;
      case VeechGenerator::TInverse:  // l'_j: right then up
        m(j, j) = 1;
        m(j, n + j) += 1;
        m(n + h(j), n + j) += 1;
        break;
      case VeechGenerator::S:  // b'_j: down then right
        m(n + j, n + j) = 1;
        m(vi(j), j) += 1;
        m(n + vi(j), j) -= 1;
        break;
      case VeechGenerator::SInverse:  // b'_j: up then right
        m(n + j, n + j) = 1;
        m(n + j, j) += 1;
        m(v(j), j) += 1;
        break;
    }
  }
  return m;
}

CylinderDecomposition cylinders_in_direction(const Origami& o, long p, long q) {
  auto word = word_to_horizontal(p, q);
  std::vector<Origami> chain{o};
  for (VeechGenerator g : word) chain.push_back(apply_veech_generator(g, chain.back()));
  CylinderDecomposition d = horizontal_cylinders(chain.back());
  d.direction = {p, q};
  IntMatrix back = IntMatrix::identity(2 * o.size());
  for (std::size_t k = word.size(); k-- > 0;) back = pullback_edge_map(word[k], chain[k]) * back;
  ChainComplex cc = build_chain_complex(o);
  for (auto& cyl : d.cylinders) {
    cyl.waist = back * cyl.waist;
    require(cc.is_cycle(cyl.waist), ErrorCode::InternalInvariantViolation, "transported waist is not a cycle");
    Holonomy hol = holonomy(cyl.waist, o.size());
    require(hol[0] == Integer(p) * static_cast<long>(cyl.circumference) &&
                hol[1] == Integer(q) * static_cast<long>(cyl.circumference),
            ErrorCode::InternalInvariantViolation, "transported waist has the wrong holonomy");
  }
  return d;
}

std::size_t homological_dimension(const Origami& o, const CylinderDecomposition& d) {
  ChainComplex cc = build_chain_complex(o);
  std::vector<IntVector> cols;
  for (const auto& c : d.cylinders) cols.push_back(c.waist);
  for (std::size_t f = 0; f < cc.face_count; ++f) cols.push_back(cc.boundary2.column(f));
  return rank(IntMatrix::from_columns(cols, cc.edge_count)) - rank(cc.boundary2);
}

std::size_t homological_dimension(const Origami& o, long p, long q) {
  return homological_dimension(o, cylinders_in_direction(o, p, q));
}

}  // namespace origami

#include "origami/monodromy.hpp"

#include "origami/error.hpp"
#include "origami/linalg.hpp"
#include "origami/words.hpp"

namespace origami {

using Point = Permutation::Point;

EdgeSubstitution pushforward_edge_paths(const Origami& o, VeechGenerator g) {
  require(g == VeechGenerator::T || g == VeechGenerator::S, ErrorCode::InvalidInput,
          "pushforward is built for T and S only");
  Origami image = apply_veech_generator(g, o);
  auto psi = simultaneous_conjugator(image.h(), image.v(), o.h(), o.v());
  require(psi.has_value(), ErrorCode::NotInVeechGroup, to_string(g) + "(o) is not conjugate to o");

  const std::size_t n = o.size();
  const auto& h = o.h();
  const auto& v = o.v();
  const auto& p = *psi;
  EdgeSubstitution f;
  f.generator = g;
  f.conjugator = p;
  f.edge_map = IntMatrix(2 * n, 2 * n);
  f.face_map.resize(n);
  for (Point i = 0; i < n; ++i) {
    if (g == VeechGenerator::T) {
      // b_i stays horizontal; l_i becomes the diagonal b'_i + l'_{h(i)}
      f.edge_map(p(i), i) += 1;
      f.edge_map(p(i), n + i) += 1;
      f.edge_map(n + p(h(i)), n + i) += 1;
      f.face_map[i] = p(h(i));
    } else {
      f.edge_map(n + p(i), n + i) += 1;
      f.edge_map(n + p(i), i) += 1;
      f.edge_map(p(v(i)), i) += 1;
      f.face_map[i] = p(v(i));
    }
  }
  ChainComplex cc = build_chain_complex(o);
  f.vertex_map.assign(cc.vertex_count, cc.vertex_count);
  for (Point i = 0; i < n; ++i) {
    std::size_t from = cc.corner_vertex[i], to = cc.corner_vertex[p(i)];
    require(f.vertex_map[from] == cc.vertex_count || f.vertex_map[from] == to, ErrorCode::InternalInvariantViolation,
            "vertex map is not well defined");
    f.vertex_map[from] = to;
  }
  require(is_chain_map(f, cc), ErrorCode::InternalInvariantViolation, "pushforward is not a chain map");
  return f;
}

bool is_chain_map(const EdgeSubstitution& f, const ChainComplex& cc) {
  const std::size_t nv = cc.vertex_count, ne = cc.edge_count, nf = cc.face_count;
  IntMatrix f0(nv, nv), f2(nf, nf);
  for (std::size_t x = 0; x < nv; ++x) f0(f.vertex_map[x], x) = 1;
  for (std::size_t x = 0; x < nf; ++x) f2(f.face_map[x], x) = 1;
  if (f.edge_map.rows() != ne || f.edge_map.cols() != ne) return false;
  return cc.boundary1 * f.edge_map == f0 * cc.boundary1 && cc.boundary2 * f2 == f.edge_map * cc.boundary2;
}

IntMatrix homology_action(const IntMatrix& edge_map, const HomologyBasis& basis, const ChainComplex& cc) {
  const std::size_t r = basis.rank();
  IntMatrix m(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    CycleVector img = edge_map * basis.classes[j];
    require(cc.is_cycle(img), ErrorCode::InternalInvariantViolation, "image of a cycle is not a cycle");
    m.set_column(j, homology_coordinates(img, basis, cc));
  }
  return m;
}

bool preserves_form(const IntMatrix& m, const IntMatrix& gram) { return m.transpose() * gram * m == gram; }

namespace {

IntMatrix restrict_to(const IntMatrix& full, const IntMatrix& sub) {
  if (sub.cols() == 0) return IntMatrix(0, 0);
  auto coords = coordinates_in(to_rational(sub), to_rational(full * sub));
  require(coords.has_value(), ErrorCode::InternalInvariantViolation, "zero-holonomy lattice is not invariant");
  return to_integer(*coords);
}

IntMatrix tautological_block(const IntMatrix& full, const HomologyBasis& basis) {
  IntMatrix hol = basis.holonomy_matrix();
  RatMatrix hh = to_rational(hol * hol.transpose());
  RatMatrix a = to_rational(hol * full * hol.transpose());
  return to_integer(a * inverse(hh));
}

}  // namespace

MonodromyPair induced_matrices(const Origami& o) {
  require(is_veech_full(o), ErrorCode::NotInVeechGroup, "Veech group is not SL(2,Z); affine action not identified");
  // with automorphisms the affine group is a proper extension of the Veech group
  const std::size_t aut = automorphism_count(o);
  require(aut == 1, ErrorCode::NotInVeechGroup,
          "origami has " + std::to_string(aut) + " automorphisms; affine group not identified with SL(2,Z)");
  MonodromyPair mp;
  mp.complex = build_chain_complex(o);
  mp.basis = h1_basis(mp.complex);
  mp.split = split_zero_holonomy(mp.basis);
  auto ft = pushforward_edge_paths(o, VeechGenerator::T);
  auto fs = pushforward_edge_paths(o, VeechGenerator::S);
  mp.full_T = homology_action(ft.edge_map, mp.basis, mp.complex);
  mp.full_S = homology_action(fs.edge_map, mp.basis, mp.complex);
  require(preserves_form(mp.full_T, mp.basis.gram) && preserves_form(mp.full_S, mp.basis.gram),
          ErrorCode::InternalInvariantViolation, "monodromy does not preserve the intersection form");
  mp.restricted_T = restrict_to(mp.full_T, mp.split.zero_holonomy);
  mp.restricted_S = restrict_to(mp.full_S, mp.split.zero_holonomy);
  mp.tautological_T = tautological_block(mp.full_T, mp.basis);
  mp.tautological_S = tautological_block(mp.full_S, mp.basis);
  return mp;
}

IntMatrix monodromy_of_word(const MonodromyPair& mp, std::string_view word) {
  auto letters = parse_word(word, "TS");
  if (mp.restricted_T.rows() == 0) return IntMatrix(0, 0);
  return evaluate_word(letters, {mp.restricted_T, mp.restricted_S});
}

IntMatrix full_monodromy_of_word(const MonodromyPair& mp, std::string_view word) {
  return evaluate_word(word, "TS", {mp.full_T, mp.full_S});
}

}  // namespace origami

#pragma once

// Action of the affine maps realising T and S on homology.

#include <string_view>

#include "origami/homology.hpp"
#include "origami/origami.hpp"

namespace origami {

/// Cellular map o -> o induced by the affine map with derivative g, composed with
/// the relabelling that identifies g(o) with o.
struct EdgeSubstitution {
  VeechGenerator generator = VeechGenerator::T;
  /// psi with psi h' psi^-1 = h, psi v' psi^-1 = v where (h', v') = g(o)
  Permutation conjugator;
  IntMatrix edge_map;                      // 2n x 2n, column e = image chain of edge e
  std::vector<std::size_t> vertex_map;     // vertex id -> vertex id
  std::vector<std::size_t> face_map;       // square -> square (0-based)
};

/// g must be T or S; throws NotInVeechGroup if g(o) is not conjugate to o.
EdgeSubstitution pushforward_edge_paths(const Origami& o, VeechGenerator g);

/// d1 F1 = F0 d1 and d2 F2 = F1 d2.
bool is_chain_map(const EdgeSubstitution& f, const ChainComplex& cc);

struct MonodromyPair {
  ChainComplex complex;
  HomologyBasis basis;
  SplitBasis split;
  IntMatrix full_T, full_S;
  IntMatrix restricted_T, restricted_S;
  /// action on holonomy coordinates (should be the SL(2,Z) generator itself)
  IntMatrix tautological_T, tautological_S;

  std::size_t genus() const { return complex.genus(); }
  const IntMatrix& restricted_gram() const { return split.restricted_gram; }
};

/// Matrix (columns = images of basis classes) of an edge-level chain map on H_1.
IntMatrix homology_action(const IntMatrix& edge_map, const HomologyBasis& basis, const ChainComplex& cc);

/// Requires is_veech_full(o).
MonodromyPair induced_matrices(const Origami& o);

/// Product of restricted matrices over the alphabet "TS" (lowercase = inverse).
IntMatrix monodromy_of_word(const MonodromyPair& mp, std::string_view word);
IntMatrix full_monodromy_of_word(const MonodromyPair& mp, std::string_view word);

/// M^T G M == G
bool preserves_form(const IntMatrix& m, const IntMatrix& gram);

}  // namespace origami

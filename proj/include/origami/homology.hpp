#pragma once

// Integral first homology of a square-tiled surface.
//
// Cell structure: vertex k = orbit of [h,v] (the lower-left corners of the
// squares in that orbit); square i carries its bottom edge b_i (oriented
// left to right, index i) and its left edge l_i (oriented bottom to top,
// index n + i). The top edge of square i is b_{v(i)}, its right edge l_{h(i)}.
// Intersection convention: <b, l> = +1 on the one-square torus.

#include <array>
#include <vector>

#include "origami/matrix.hpp"
#include "origami/origami.hpp"

namespace origami {

/// Integer vector over the 2n edges.
using CycleVector = IntVector;
using Holonomy = std::array<Integer, 2>;

struct ChainComplex {
  Permutation h;
  Permutation v;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t face_count = 0;
  /// vertex id of the lower-left corner of each square
  std::vector<std::size_t> corner_vertex;
  IntMatrix boundary1;  // vertices x edges
  IntMatrix boundary2;  // edges x faces

  std::size_t squares() const { return face_count; }
  long euler_characteristic() const {
    return static_cast<long>(vertex_count) - static_cast<long>(edge_count) + static_cast<long>(face_count);
  }
  std::size_t genus() const { return static_cast<std::size_t>((2 - euler_characteristic()) / 2); }
  bool is_cycle(const CycleVector& z) const;
};

ChainComplex build_chain_complex(const Origami& o);

Holonomy holonomy(const CycleVector& z, std::size_t squares);

/// Algebraic intersection number of two edge cycles. The second cycle is pushed
/// off the 1-skeleton into the dual graph (shift by (1/2,1/2) plus connectors
/// circling each vertex), then transverse crossings are counted with sign.
Integer intersection_number(const CycleVector& a, const CycleVector& b, const ChainComplex& cc);

struct HomologyBasis {
  std::vector<CycleVector> classes;  // 2g edge cycles
  IntMatrix gram;                    // gram(i,j) = <classes[i], classes[j]>
  std::vector<Holonomy> holonomies;

  std::size_t rank() const { return classes.size(); }
  /// 2 x 2g holonomy matrix in basis coordinates.
  IntMatrix holonomy_matrix() const;
  /// Edge-space matrix whose columns are the classes.
  IntMatrix as_edge_matrix(std::size_t edges) const;
};

/// Z-basis of H_1 from a spanning tree / dual spanning cotree decomposition.
HomologyBasis h1_basis(const ChainComplex& cc);

/// Coordinates of an edge cycle in the basis, by pairing against every basis
/// class and solving with the (unimodular) gram matrix.
IntVector homology_coordinates(const CycleVector& z, const HomologyBasis& basis, const ChainComplex& cc);

struct SplitBasis {
  /// columns: Z-basis of ker(holonomy), in H_1 basis coordinates (2g x (2g-2))
  IntMatrix zero_holonomy;
  /// columns: Z-basis of the symplectic complement of the zero-holonomy lattice (2g x 2)
  IntMatrix tautological;
  IntMatrix restricted_gram;
};

SplitBasis split_zero_holonomy(const HomologyBasis& basis);

struct SymplecticNormalForm {
  /// Unimodular change of basis U; the new basis vectors are its columns.
  IntMatrix change;
  /// U^T G U = [[0, D], [-D, 0]] with D = diag(divisors)
  IntMatrix form;
  std::vector<Integer> divisors;  // d_1 | d_2 | ... , all positive
};

SymplecticNormalForm symplectic_normalize(const IntMatrix& gram);

/// The standard form [[0, D], [-D, 0]].
IntMatrix standard_symplectic_form(const std::vector<Integer>& divisors);

bool is_skew_symmetric(const IntMatrix& m);

}  // namespace origami

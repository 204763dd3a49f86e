#pragma once

// Cylinder decompositions of origamis in rational directions.

#include <array>
#include <vector>

#include "origami/homology.hpp"
#include "origami/origami.hpp"

namespace origami {

struct Cylinder {
  std::size_t circumference = 0;
  std::size_t height = 0;
  /// core curve as an edge cycle on the original surface
  CycleVector waist;
  /// 1-based squares of the bottom row (on the surface where the direction is horizontal)
  std::vector<std::size_t> bottom_row;
};

struct CylinderDecomposition {
  std::array<long, 2> direction{1, 0};
  std::vector<Cylinder> cylinders;

  std::size_t area() const;
  /// circumferences sorted descending
  std::vector<std::size_t> circumferences() const;
};

/// Rows are the cycles of h. A row merges with the row above when every vertex
/// on their common boundary (lower-left corners of the upper row) is regular.
CylinderDecomposition horizontal_cylinders(const Origami& o);

/// Moves (p, q) to (1, 0) with a word in T, S, computes horizontal cylinders on
/// the image surface and pulls the waist curves back to o.
CylinderDecomposition cylinders_in_direction(const Origami& o, long p, long q);

/// Chain map on edges from g(o) back to o (matrix acting on edge columns),
/// induced by the inverse of the affine map o -> g(o) that fixes square labels.
IntMatrix pullback_edge_map(VeechGenerator g, const Origami& o);

/// Rank of the span of the waist classes in H_1(o; Q).
std::size_t homological_dimension(const Origami& o, const CylinderDecomposition& d);
std::size_t homological_dimension(const Origami& o, long p, long q);

}  // namespace origami

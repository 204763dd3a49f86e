#pragma once

// Square-tiled surfaces: a transitive pair (h, v) of permutations of the squares,
// h = right neighbour, v = top neighbour.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "origami/permutation.hpp"

namespace origami {

class Origami {
 public:
  /// Throws DegreeMismatch / RequiresTransitive for invalid pairs.
  Origami(Permutation h, Permutation v, std::string name = {});

  const Permutation& h() const noexcept { return h_; }
  const Permutation& v() const noexcept { return v_; }
  std::size_t size() const noexcept { return h_.degree(); }
  const std::string& name() const noexcept { return name_; }

  /// Labeled equality (same permutations, name ignored).
  bool operator==(const Origami& o) const { return h_ == o.h_ && v_ == o.v_; }

  static Origami torus() { return Origami(Permutation::identity(1), Permutation::identity(1), "torus"); }

 private:
  Permutation h_;
  Permutation v_;
  std::string name_;
};

struct Stratum {
  std::vector<std::size_t> zero_orders;  // sorted descending
  std::size_t genus = 0;
  std::string label() const;  // e.g. "H(2,2,2)", "H(0)" for the torus
};

/// Vertices are cycles of [h,v]; a cycle of length l contributes a zero of order l-1.
Stratum stratum(const Origami& o);

enum class VeechGenerator { T, S, TInverse, SInverse };

std::string to_string(VeechGenerator g);
/// T ↦ (h, v h^-1), S ↦ (h v^-1, v) and the inverse rules.
Origami apply_veech_generator(VeechGenerator g, const Origami& o);
Origami apply_veech_word(const std::vector<VeechGenerator>& word_applied_first_to_last, const Origami& o);

bool is_veech_full(const Origami& o);

/// Number of translation automorphisms: permutations commuting with h and v.
std::size_t automorphism_count(const Origami& o);

/// Canonical representative of the simultaneous-conjugacy class: the
/// lexicographically smallest (h, v) image pair over the n relabelings
/// obtained by breadth-first numbering from each square.
struct CanonicalForm {
  std::vector<std::uint32_t> h;
  std::vector<std::uint32_t> v;
  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Origami& o);
Origami to_origami(const CanonicalForm& c, std::string name = {});

struct OrbitGraph {
  std::vector<CanonicalForm> nodes;
  /// edges[i] = {index of T-image, index of S-image}; -1 when outside a truncated graph.
  std::vector<std::array<long, 2>> edges;
  bool truncated = false;
};

/// Breadth-first closure under T and S up to simultaneous conjugacy.
/// The node count is the index of the Veech group in SL(2,Z) when not truncated.
OrbitGraph sl2z_orbit(const Origami& o, std::size_t max_size);

/// True when the holonomy vectors of relative periods (paths between cone
/// points, plus closed cycles) generate all of Z^2. A torus without cone points
/// is treated with the corner of square 1 marked.
bool is_reduced(const Origami& o);

/// A word in T^{±1}, S^{±1} (listed in application order) whose matrix product
/// sends the primitive vector (p, q) to (1, 0).
std::vector<VeechGenerator> word_to_horizontal(long p, long q);

/// Matrix of a generator acting on holonomy column vectors.
std::array<std::array<long, 2>, 2> generator_matrix(VeechGenerator g);

}  // namespace origami

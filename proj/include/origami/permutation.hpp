#pragma once

// Permutations of {1..n} with cycle-notation I/O.
//
// Composition follows function notation: compose(a, b) is "apply b, then a",
// so the commutator [h,v] = v h v^-1 h^-1 maps i to v(h(v^-1(h^-1(i)))).
// Other sources (GAP in particular) compose left-to-right; results here will
// differ from theirs by that convention.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace origami {

class Permutation {
 public:
  using Point = std::uint32_t;  // 0-based internally

  Permutation() = default;
  static Permutation identity(std::size_t degree);
  /// images[i] is the 0-based image of 0-based point i; throws MalformedCycles if not a bijection.
  static Permutation from_images(std::vector<Point> images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const;
  /// Cycles with 1-based points, each starting at its smallest element, sorted by that element.
  std::vector<std::vector<std::size_t>> cycles(bool include_fixed = false) const;
  std::size_t cycle_count() const;
  /// Multiset of cycle lengths (fixed points included), sorted descending.
  std::vector<std::size_t> cycle_type() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}
  std::vector<Point> images_;
};

/// Parses "(1,2,3)(4,5)"; whitespace allowed, singleton cycles allowed, missing points fixed.
Permutation parse_cycles(std::string_view text, std::optional<std::size_t> degree = std::nullopt);
/// Cycles sorted by smallest element, fixed points omitted, identity as "()".
std::string format_cycles(const Permutation& p);

/// a∘b : i ↦ a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
/// [h,v] = v h v^-1 h^-1.
Permutation commutator(const Permutation& h, const Permutation& v);
/// psi a psi^-1.
Permutation conjugate(const Permutation& a, const Permutation& psi);

bool is_transitive(const Permutation& h, const Permutation& v);

/// psi with psi h psi^-1 = h2 and psi v psi^-1 = v2, or nullopt. Among all
/// conjugators the lexicographically smallest image vector is returned.
/// Requires <h, v> transitive.
std::optional<Permutation> simultaneous_conjugator(const Permutation& h, const Permutation& v,
                                                   const Permutation& h2, const Permutation& v2);

}  // namespace origami

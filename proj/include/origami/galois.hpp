#pragma once

// Galois groups of reciprocal polynomials of degree 2k (k <= 3) inside the
// hyperoctahedral group B_k, detected from Frobenius cycle types.

#include <cstdint>
#include <string>
#include <vector>

#include "origami/polynomial.hpp"

namespace origami {

using CycleType = std::vector<std::size_t>;  // sorted descending

struct HyperoctahedralSubgroup {
  std::uint64_t elements = 0;  // bitset over the element list of the group
  std::size_t order = 0;
  bool transitive = false;
  std::vector<CycleType> cycle_types;  // distinct, sorted
};

/// B_k acting on 2k points; point 2i+s is the s-th root of the i-th reciprocal pair.
class HyperoctahedralGroup {
 public:
  explicit HyperoctahedralGroup(std::size_t k);
  std::size_t rank() const { return k_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<std::vector<std::uint8_t>>& elements() const { return elements_; }
  /// every subgroup, found as the closure of the cyclic subgroups under joins
  const std::vector<HyperoctahedralSubgroup>& subgroups() const { return subgroups_; }

  static const HyperoctahedralGroup& cached(std::size_t k);

 private:
  std::size_t k_;
  std::vector<std::vector<std::uint8_t>> elements_;
  std::vector<HyperoctahedralSubgroup> subgroups_;
};

CycleType cycle_type_of(const std::vector<std::uint8_t>& perm);

struct GaloisReport {
  std::size_t order = 0;  // smallest compatible subgroup order
  /// "Certified" when only the full group is compatible, otherwise "Undecided"
  std::string status;
  std::vector<std::size_t> candidate_orders;
  std::vector<std::pair<std::uint64_t, CycleType>> witnesses;  // first prime for each observed type
  std::vector<CycleType> observed_types;
  std::size_t primes_used = 0;
  std::size_t maximal_order = 0;
  bool certified() const { return status == "Certified"; }
};

/// f must be irreducible, reciprocal, of even degree 2k with 1 <= k <= 3.
GaloisReport galois_order_reciprocal(const IntPolynomial& f, std::size_t prime_budget = 100);

}  // namespace origami

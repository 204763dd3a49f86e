#pragma once

// Census of reduced origamis whose Veech group is all of SL(2,Z), up to
// simultaneous conjugacy, for small square counts.

#include <string>
#include <vector>

#include "origami/origami.hpp"

namespace origami {

inline constexpr std::size_t kCensusMaxSquares = 9;

struct CensusHit {
  CanonicalForm form;
  Origami origami;  // built from the canonical form
  Stratum stratum;
};

struct CensusResult {
  std::size_t max_squares = 0;
  std::vector<CensusHit> hits;  // sorted by (squares, canonical form)
  std::size_t candidates = 0;   // (h, v) pairs examined
  std::size_t veech_full_unreduced = 0;  // classes rejected only by the reducedness filter
};

/// One h per cycle type times every v, for 1..max_squares squares; keeps
/// transitive, Veech-full, reduced pairs. Throws DomainError above kCensusMaxSquares.
CensusResult veech_full_census(std::size_t max_squares, unsigned threads = 0);

/// Partitions of n in descending order, largest parts first.
std::vector<std::vector<std::size_t>> partitions(std::size_t n);

}  // namespace origami

#pragma once

// Words in matrix generators: "STST^20", "ABabC^3a". An uppercase letter is a
// generator, the matching lowercase letter its inverse, "^k" repeats.
// Products are taken in written order (leftmost factor applied last).

#include <string>
#include <string_view>
#include <vector>

#include "origami/matrix.hpp"

namespace origami {

struct WordLetter {
  std::size_t generator = 0;
  long exponent = 1;  // negative for inverses
  bool operator==(const WordLetter&) const = default;
};

/// Throws MalformedWord on unknown letters, dangling '^' or a zero exponent.
std::vector<WordLetter> parse_word(std::string_view word, std::string_view alphabet);
std::string format_word(const std::vector<WordLetter>& letters, std::string_view alphabet);
/// Total number of generator occurrences (|exponent| summed).
std::size_t word_length(const std::vector<WordLetter>& letters);

/// `generators` must be square, equal-sized and unimodular when inverses occur.
IntMatrix evaluate_word(std::string_view word, std::string_view alphabet, const std::vector<IntMatrix>& generators);
IntMatrix evaluate_word(const std::vector<WordLetter>& letters, const std::vector<IntMatrix>& generators);

}  // namespace origami

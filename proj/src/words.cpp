#include "origami/words.hpp"

#include <cctype>
#include <charconv>

#include "origami/error.hpp"

namespace origami {

std::vector<WordLetter> parse_word(std::string_view word, std::string_view alphabet) {
  std::vector<WordLetter> out;
  std::size_t pos = 0;
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::MalformedWord, why + " at offset " + std::to_string(pos) + " in \"" + std::string(word) + "\"");
  };
  while (pos < word.size()) {
    char ch = word[pos];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*' || ch == '.') {
      ++pos;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(ch))) bad("unexpected character");
    auto upper = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    std::size_t g = alphabet.find(upper);
    if (g == std::string_view::npos) bad(std::string("unknown generator '") + ch + "'");
    long sign = std::isupper(static_cast<unsigned char>(ch)) ? 1 : -1;
    ++pos;
    long k = 1;
    if (pos < word.size() && word[pos] == '^') {
      ++pos;
      bool neg = false;
      if (pos < word.size() && (word[pos] == '-' || word[pos] == '+')) neg = word[pos++] == '-';
      auto [ptr, ec] = std::from_chars(word.data() + pos, word.data() + word.size(), k);
      if (ec != std::errc{}) bad("expected an exponent after '^'");
      pos = static_cast<std::size_t>(ptr - word.data());
      if (neg) k = -k;
      if (k == 0) bad("zero exponent");
    }
    out.push_back({g, sign * k});
  }
  return out;
}

std::string format_word(const std::vector<WordLetter>& letters, std::string_view alphabet) {
  std::string s;
  for (const auto& l : letters) {
    char c = alphabet.at(l.generator);
    s += l.exponent < 0 ? static_cast<char>(std::tolower(static_cast<unsigned char>(c))) : c;
    long k = l.exponent < 0 ? -l.exponent : l.exponent;
    if (k != 1) s += "^" + std::to_string(k);
  }
  return s;
}

std::size_t word_length(const std::vector<WordLetter>& letters) {
  std::size_t n = 0;
  for (const auto& l : letters) n += static_cast<std::size_t>(l.exponent < 0 ? -l.exponent : l.exponent);
  return n;
}

IntMatrix evaluate_word(const std::vector<WordLetter>& letters, const std::vector<IntMatrix>& generators) {
  require(!generators.empty(), ErrorCode::ShapeMismatch, "no generators");
  const std::size_t d = generators.front().rows();
  for (const auto& g : generators)
    require(g.rows() == d && g.cols() == d, ErrorCode::ShapeMismatch, "generators must be square of equal size");
  IntMatrix acc = IntMatrix::identity(d);
  for (const auto& l : letters) {
    require(l.generator < generators.size(), ErrorCode::MalformedWord, "generator index out of range");
    acc = acc * power(generators[l.generator], l.exponent);
  }
  return acc;
}

IntMatrix evaluate_word(std::string_view word, std::string_view alphabet, const std::vector<IntMatrix>& generators) {
  return evaluate_word(parse_word(word, alphabet), generators);
}

}  // namespace origami

#include "origami/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "origami/error.hpp"

namespace origami {

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  return Permutation(std::move(im));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> hit(images.size(), false);
  for (Point x : images) {
    require(x < images.size() && !hit[x], ErrorCode::MalformedCycles, "image list is not a bijection");
    hit[x] = true;
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::vector<std::size_t>> Permutation::cycles(bool include_fixed) const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(degree(), false);
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> c;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      c.push_back(j + 1);
    }
    if (c.size() > 1 || include_fixed) out.push_back(std::move(c));
  }
  return out;
}

std::size_t Permutation::cycle_count() const { return cycles(true).size(); }

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> t;
  for (const auto& c : cycles(true)) t.push_back(c.size());
  std::sort(t.rbegin(), t.rend());
  return t;
}

Permutation parse_cycles(std::string_view text, std::optional<std::size_t> degree) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::MalformedCycles, why + " at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') bad("expected '('");
    ++pos;
    std::vector<std::size_t> cyc;
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;  // "()" is the identity
      skip_ws();
      continue;
    }
    while (true) {
      skip_ws();
      bool negative = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
      }
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc{}) bad("expected a point label");
      pos = static_cast<std::size_t>(ptr - text.data());
      if (negative || value == 0) bad("point labels must be positive");
      cyc.push_back(value);
      skip_ws();
      if (pos >= text.size()) bad("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      bad("expected ',' or ')'");
    }
    cycles.push_back(std::move(cyc));
    skip_ws();
  }

  std::size_t max_point = 0;
  for (const auto& c : cycles)
    for (std::size_t x : c) max_point = std::max(max_point, x);
  std::size_t n = degree.value_or(max_point);
  require(n >= max_point, ErrorCode::MalformedCycles, "degree " + std::to_string(n) + " below largest point");

  std::vector<Permutation::Point> im(n);
  std::iota(im.begin(), im.end(), Permutation::Point{0});
  std::vector<bool> used(n, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      std::size_t a = c[k] - 1;
      require(!used[a], ErrorCode::MalformedCycles, "point " + std::to_string(c[k]) + " repeated");
      used[a] = true;
      im[a] = static_cast<Permutation::Point>(c[(k + 1) % c.size()] - 1);
    }
  }
  return Permutation::from_images(std::move(im));
}

std::string format_cycles(const Permutation& p) {
  auto cyc = p.cycles(false);
  if (cyc.empty()) return "()";
  std::string out;
  for (const auto& c : cyc) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(c[k]);
    }
    out += ')';
  }
  return out;
}

namespace {
void check_degrees(const Permutation& a, const Permutation& b) {
  require(a.degree() == b.degree(), ErrorCode::DegreeMismatch,
          "degrees " + std::to_string(a.degree()) + " and " + std::to_string(b.degree()));
}
}  // namespace

Permutation compose(const Permutation& a, const Permutation& b) {
  check_degrees(a, b);
  std::vector<Permutation::Point> im(a.degree());
  for (Permutation::Point i = 0; i < im.size(); ++i) im[i] = a(b(i));
  return Permutation::from_images(std::move(im));
}

Permutation inverse(const Permutation& a) {
  std::vector<Permutation::Point> im(a.degree());
  for (Permutation::Point i = 0; i < im.size(); ++i) im[a(i)] = i;
  return Permutation::from_images(std::move(im));
}

Permutation commutator(const Permutation& h, const Permutation& v) {
  return compose(v, compose(h, compose(inverse(v), inverse(h))));
}

Permutation conjugate(const Permutation& a, const Permutation& psi) {
  return compose(psi, compose(a, inverse(psi)));
}

bool is_transitive(const Permutation& h, const Permutation& v) {
  check_degrees(h, v);
  const std::size_t n = h.degree();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<Permutation::Point> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Permutation::Point x = queue[head];
    for (Permutation::Point y : {h(x), v(x)}) {
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return queue.size() == n;
}

std::optional<Permutation> simultaneous_conjugator(const Permutation& h, const Permutation& v,
                                                   const Permutation& h2, const Permutation& v2) {
  check_degrees(h, v);
  check_degrees(h, h2);
  check_degrees(h, v2);
  require(is_transitive(h, v), ErrorCode::RequiresTransitive, "conjugator search needs a transitive pair");
  const std::size_t n = h.degree();
  constexpr auto unset = static_cast<Permutation::Point>(-1);
  std::vector<Permutation::Point> psi(n), stack;
  std::vector<bool> taken(n);
  // psi(1) determines psi along the words in h, v; smallest psi(1) first gives the
  // lexicographically smallest conjugator.
  for (Permutation::Point c = 0; c < n; ++c) {
    std::fill(psi.begin(), psi.end(), unset);
    std::fill(taken.begin(), taken.end(), false);
    psi[0] = c;
    taken[c] = true;
    stack.assign(1, 0);
    bool ok = true;
    while (ok && !stack.empty()) {
      Permutation::Point x = stack.back();
      stack.pop_back();
      for (int g = 0; g < 2 && ok; ++g) {
        Permutation::Point y = g ? v(x) : h(x);
        Permutation::Point target = g ? v2(psi[x]) : h2(psi[x]);
        if (psi[y] == unset) {
          if (taken[target]) {
            ok = false;
            break;
          }
          psi[y] = target;
          taken[target] = true;
          stack.push_back(y);
        } else if (psi[y] != target) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    // Full verification of both identities at every point.
    bool verified = true;
    for (Permutation::Point x = 0; x < n && verified; ++x)
      verified = psi[h(x)] == h2(psi[x]) && psi[v(x)] == v2(psi[x]);
    if (verified) return Permutation::from_images(psi);
  }
  return std::nullopt;
}

}  // namespace origami

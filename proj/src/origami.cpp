#include "origami/origami.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "origami/error.hpp"
#include "origami/linalg.hpp"

namespace origami {

Origami::Origami(Permutation h, Permutation v, std::string name)
    : h_(std::move(h)), v_(std::move(v)), name_(std::move(name)) {
  require(h_.degree() == v_.degree(), ErrorCode::DegreeMismatch, "h and v have different degrees");
  require(h_.degree() > 0, ErrorCode::InvalidInput, "an origami needs at least one square");
  require(is_transitive(h_, v_), ErrorCode::RequiresTransitive, "<h, v> is not transitive (disconnected surface)");
}

std::string Stratum::label() const {
  if (zero_orders.empty()) return "H(0)";
  std::string s = "H(";
  for (std::size_t i = 0; i < zero_orders.size(); ++i) s += (i ? "," : "") + std::to_string(zero_orders[i]);
  return s + ")";
}

Stratum stratum(const Origami& o) {
  Permutation c = commutator(o.h(), o.v());
  auto cyc = c.cycles(true);
  Stratum s;
  for (const auto& cy : cyc)
    if (cy.size() > 1) s.zero_orders.push_back(cy.size() - 1);
  std::sort(s.zero_orders.rbegin(), s.zero_orders.rend());
  const std::size_t n = o.size(), vertices = cyc.size();
  // chi = V - E + F = c - 2n + n = 2 - 2g
  require(n + 2 >= vertices && (n + 2 - vertices) % 2 == 0, ErrorCode::InternalInvariantViolation,
          "genus parity violated");
  s.genus = 1 + (n - vertices) / 2;
  std::size_t total = std::accumulate(s.zero_orders.begin(), s.zero_orders.end(), std::size_t{0});
  require(total == 2 * s.genus - 2, ErrorCode::InternalInvariantViolation, "sum of zero orders != 2g-2");
  return s;
}

std::string to_string(VeechGenerator g) {
  switch (g) {
    case VeechGenerator::T: return "T";
    case VeechGenerator::S: return "S";
    case VeechGenerator::TInverse: return "t";
    case VeechGenerator::SInverse: return "s";
  }
  return "?";
}

Origami apply_veech_generator(VeechGenerator g, const Origami& o) {
  const auto& h = o.h();
  const auto& v = o.v();
  switch (g) {
    case VeechGenerator::T: return Origami(h, compose(v, inverse(h)), o.name());
    case VeechGenerator::TInverse: return Origami(h, compose(v, h), o.name());
    case VeechGenerator::S: return Origami(compose(h, inverse(v)), v, o.name());
    case VeechGenerator::SInverse: return Origami(compose(h, v), v, o.name());
  }
  fail(ErrorCode::InvalidInput, "unknown generator");
}

Origami apply_veech_word(const std::vector<VeechGenerator>& word, const Origami& o) {
  Origami cur = o;
  for (VeechGenerator g : word) cur = apply_veech_generator(g, cur);
  return cur;
}

bool is_veech_full(const Origami& o) {
  for (VeechGenerator g : {VeechGenerator::T, VeechGenerator::S}) {
    Origami img = apply_veech_generator(g, o);
    if (!simultaneous_conjugator(img.h(), img.v(), o.h(), o.v())) return false;
  }
  return true;
}

std::size_t automorphism_count(const Origami& o) {
  // a commuting permutation is fixed by its image of square 1 (transitivity)
  const std::size_t n = o.size();
  const auto& h = o.h().images();
  const auto& v = o.v().images();
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::size_t count = 0;
  std::vector<std::uint32_t> psi(n), queue;
  for (std::uint32_t target = 0; target < n; ++target) {
    std::fill(psi.begin(), psi.end(), unset);
    psi[0] = target;
    queue.assign(1, 0);
    bool ok = true;
    for (std::size_t head = 0; head < queue.size() && ok; ++head) {
      std::uint32_t x = queue[head];
      for (const auto* g : {&h, &v}) {
        std::uint32_t y = (*g)[x], img = (*g)[psi[x]];
        if (psi[y] == unset) {
          psi[y] = img;
          queue.push_back(y);
        } else if (psi[y] != img) {
          ok = false;
          break;
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

CanonicalForm canonical_form(const Origami& o) {
  const std::size_t n = o.size();
  const auto& h = o.h().images();
  const auto& v = o.v().images();
  CanonicalForm best;
  std::vector<std::uint32_t> label(n), order;
  order.reserve(n);
  CanonicalForm cand{std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(n)};
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  for (std::uint32_t start = 0; start < n; ++start) {
    std::fill(label.begin(), label.end(), unset);
    order.assign(1, start);
    label[start] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      std::uint32_t x = order[head];
      for (std::uint32_t y : {h[x], v[x]}) {
        if (label[y] == unset) {
          label[y] = static_cast<std::uint32_t>(order.size());
          order.push_back(y);
        }
      }
    }
    for (std::uint32_t x = 0; x < n; ++x) {
      cand.h[label[x]] = label[h[x]];
      cand.v[label[x]] = label[v[x]];
    }
    if (start == 0 || cand < best) best = cand;
  }
  return best;
}

Origami to_origami(const CanonicalForm& c, std::string name) {
  return Origami(Permutation::from_images(c.h), Permutation::from_images(c.v), std::move(name));
}

OrbitGraph sl2z_orbit(const Origami& o, std::size_t max_size) {
  require(max_size > 0, ErrorCode::DomainError, "max_size must be positive");
  OrbitGraph g;
  std::map<CanonicalForm, long> index;
  std::vector<Origami> reps;
  auto add = [&](const Origami& x) -> long {
    CanonicalForm cf = canonical_form(x);
    auto it = index.find(cf);
    if (it != index.end()) return it->second;
    if (g.nodes.size() >= max_size) {
      g.truncated = true;
      return -1;
    }
    long id = static_cast<long>(g.nodes.size());
    index.emplace(cf, id);
    g.nodes.push_back(cf);
    g.edges.push_back({-1, -1});
    reps.push_back(to_origami(cf));
    return id;
  };
  add(o);
  for (std::size_t head = 0; head < g.nodes.size(); ++head) {
    Origami cur = reps[head];
    g.edges[head][0] = add(apply_veech_generator(VeechGenerator::T, cur));
    g.edges[head][1] = add(apply_veech_generator(VeechGenerator::S, cur));
  }
  return g;
}

bool is_reduced(const Origami& o) {
  const std::size_t n = o.size();
  Permutation c = commutator(o.h(), o.v());
  std::vector<std::size_t> vertex(n, n);
  std::vector<std::size_t> orbit_len;
  for (std::size_t i = 0; i < n; ++i) {
    if (vertex[i] != n) continue;
    std::size_t id = orbit_len.size(), len = 0;
    for (auto j = static_cast<Permutation::Point>(i); vertex[j] == n; j = c(j)) {
      vertex[j] = id;
      ++len;
    }
    orbit_len.push_back(len);
  }
  const std::size_t nv = orbit_len.size();
  std::vector<std::size_t> marked;
  for (std::size_t k = 0; k < nv; ++k)
    if (orbit_len[k] > 1) marked.push_back(k);
  if (marked.empty()) marked.push_back(vertex[0]);

  // edges: (tail vertex, head vertex, holonomy)
  struct Edge {
    std::size_t tail, head;
    long dx, dy;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> incident(nv);
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({vertex[i], vertex[o.h()(static_cast<Permutation::Point>(i))], 1, 0});
    edges.push_back({vertex[i], vertex[o.v()(static_cast<Permutation::Point>(i))], 0, 1});
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].tail].push_back(e);
    incident[edges[e].head].push_back(e);
  }
  std::vector<std::array<long, 2>> pos(nv);
  std::vector<bool> seen(nv, false), tree(edges.size(), false);
  std::vector<std::size_t> queue{marked.front()};
  seen[marked.front()] = true;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::size_t x = queue[q];
    for (std::size_t e : incident[x]) {
      const Edge& ed = edges[e];
      std::size_t y = ed.tail == x ? ed.head : ed.tail;
      if (seen[y]) continue;
      long sgn = ed.tail == x ? 1 : -1;
      pos[y] = {pos[x][0] + sgn * ed.dx, pos[x][1] + sgn * ed.dy};
      seen[y] = true;
      tree[e] = true;
      queue.push_back(y);
    }
  }
  std::vector<std::vector<Integer>> gens;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (tree[e]) continue;
    const Edge& ed = edges[e];
    gens.push_back({pos[ed.tail][0] + ed.dx - pos[ed.head][0], pos[ed.tail][1] + ed.dy - pos[ed.head][1]});
  }
  for (std::size_t m : marked) gens.push_back({pos[m][0] - pos[marked.front()][0], pos[m][1] - pos[marked.front()][1]});
  IntMatrix lattice = IntMatrix::from_columns(gens, 2);
  auto ech = column_echelon(lattice);
  if (ech.rank < 2) return false;
  Integer index = ech.reduced(0, 0) * ech.reduced(1, 1);
  return abs(index) == 1;
}

std::array<std::array<long, 2>, 2> generator_matrix(VeechGenerator g) {
  switch (g) {
    case VeechGenerator::T: return {{{1, 1}, {0, 1}}};
    case VeechGenerator::TInverse: return {{{1, -1}, {0, 1}}};
    case VeechGenerator::S: return {{{1, 0}, {1, 1}}};
    case VeechGenerator::SInverse: return {{{1, 0}, {-1, 1}}};
  }
  fail(ErrorCode::InvalidInput, "unknown generator");
}

std::vector<VeechGenerator> word_to_horizontal(long p, long q) {
  require(std::gcd(p, q) == 1, ErrorCode::DomainError,
          "direction (" + std::to_string(p) + "," + std::to_string(q) + ") is not primitive");
  std::vector<VeechGenerator> word;
  long x = p, y = q;
  auto apply = [&](VeechGenerator g, long times) {
    auto m = generator_matrix(g);
    for (long t = 0; t < times; ++t) {
      word.push_back(g);
      long nx = m[0][0] * x + m[0][1] * y, ny = m[1][0] * x + m[1][1] * y;
      x = nx;
      y = ny;
    }
  };
  while (!(x == 1 && y == 0)) {
    if (y == 0) {
      // x == -1: apply -I = (T s T)^2
      for (int rep = 0; rep < 2; ++rep) {
        apply(VeechGenerator::T, 1);
        apply(VeechGenerator::SInverse, 1);
        apply(VeechGenerator::T, 1);
      }
    } else if (x == 0) {
      apply(VeechGenerator::T, 1);
    } else if (std::labs(y) >= std::labs(x)) {
      long k = y / x;
      apply(k > 0 ? VeechGenerator::SInverse : VeechGenerator::S, std::labs(k));
    } else {
      long k = x / y;
      apply(k > 0 ? VeechGenerator::TInverse : VeechGenerator::T, std::labs(k));
    }
  }
  return word;
}

}  // namespace origami

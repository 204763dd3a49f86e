#include "origami/galois.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "origami/error.hpp"

namespace origami {

CycleType cycle_type_of(const std::vector<std::uint8_t>& perm) {
  CycleType t;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

HyperoctahedralGroup::HyperoctahedralGroup(std::size_t k) : k_(k) {
  require(k >= 1 && k <= 3, ErrorCode::DomainError, "hyperoctahedral group supported for k <= 3");
  std::vector<std::size_t> sigma(k);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  do {
    for (std::size_t eps = 0; eps < (1u << k); ++eps) {
      std::vector<std::uint8_t> p(2 * k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t s = 0; s < 2; ++s)
          p[2 * i + s] = static_cast<std::uint8_t>(2 * sigma[i] + (s ^ ((eps >> i) & 1u)));
      elements_.push_back(std::move(p));
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  std::sort(elements_.begin(), elements_.end());

  const std::size_t n = elements_.size();
  std::map<std::vector<std::uint8_t>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[elements_[i]] = i;
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::uint8_t> c(2 * k);
      for (std::size_t x = 0; x < 2 * k; ++x) c[x] = elements_[a][elements_[b][x]];
      mul[a][b] = index.at(c);
    }
  auto closure = [&](std::uint64_t gens) {
    std::uint64_t set = gens;
    std::size_t identity = 0;  // sorted order puts the identity first
    set |= 1ULL << identity;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t a = 0; a < n; ++a) {
        if (!(set >> a & 1ULL)) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (!(gens >> b & 1ULL)) continue;
          std::size_t c = mul[a][b];
          if (!(set >> c & 1ULL)) {
            set |= 1ULL << c;
            grew = true;
          }
        }
      }
    }
    return set;
  };

  std::set<std::uint64_t> found;
  std::vector<std::uint64_t> frontier;
  for (std::size_t g = 0; g < n; ++g) {
    std::uint64_t s = closure(1ULL << g);
    if (found.insert(s).second) frontier.push_back(s);
  }
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t h : frontier)
      for (std::size_t g = 0; g < n; ++g) {
        if (h >> g & 1ULL) continue;
        std::uint64_t s = closure(h | (1ULL << g));
        if (found.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }

  for (std::uint64_t s : found) {
    HyperoctahedralSubgroup sub;
    sub.elements = s;
    std::set<CycleType> types;
    std::vector<bool> reach(2 * k, false);
    for (std::size_t g = 0; g < n; ++g) {
      if (!(s >> g & 1ULL)) continue;
      ++sub.order;
      types.insert(cycle_type_of(elements_[g]));
      reach[elements_[g][0]] = true;
    }
    sub.transitive = std::all_of(reach.begin(), reach.end(), [](bool b) { return b; });
    sub.cycle_types.assign(types.begin(), types.end());
    require(n % sub.order == 0, ErrorCode::InternalInvariantViolation, "subgroup order does not divide group order");
    subgroups_.push_back(std::move(sub));
  }
  std::sort(subgroups_.begin(), subgroups_.end(), [](const auto& a, const auto& b) {
    return a.order != b.order ? a.order < b.order : a.elements < b.elements;
  });
}

const HyperoctahedralGroup& HyperoctahedralGroup::cached(std::size_t k) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<HyperoctahedralGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[k];
  if (!slot) slot = std::make_unique<HyperoctahedralGroup>(k);
  return *slot;
}

GaloisReport galois_order_reciprocal(const IntPolynomial& f, std::size_t prime_budget) {
  require(f.degree() >= 2 && f.degree() % 2 == 0 && f.degree() <= 6, ErrorCode::DomainError,
          "expected a reciprocal polynomial of degree 2, 4 or 6");
  require(is_reciprocal(f), ErrorCode::DomainError, "polynomial is not reciprocal");
  require(is_irreducible_over_Z(f).irreducible, ErrorCode::DomainError, "polynomial is reducible");
  const auto& group = HyperoctahedralGroup::cached(static_cast<std::size_t>(f.degree() / 2));

  GaloisReport rep;
  rep.maximal_order = group.order();
  std::set<CycleType> observed;
  for (std::uint64_t p : good_primes(f, prime_budget)) {
    auto degs = factor_degrees_mod_p(f, p);
    if (!degs) continue;
    ++rep.primes_used;
    if (observed.insert(*degs).second) rep.witnesses.push_back({p, *degs});
  }
  rep.observed_types.assign(observed.begin(), observed.end());

  std::set<std::size_t> orders;
  for (const auto& sub : group.subgroups()) {
    if (!sub.transitive) continue;
    bool ok = std::all_of(observed.begin(), observed.end(), [&](const CycleType& t) {
      return std::binary_search(sub.cycle_types.begin(), sub.cycle_types.end(), t);
    });
    if (ok) orders.insert(sub.order);
  }
  require(!orders.empty(), ErrorCode::InternalInvariantViolation, "no subgroup of B_k explains the Frobenius data");
  rep.candidate_orders.assign(orders.begin(), orders.end());
  rep.order = rep.candidate_orders.front();
  rep.status = (orders.size() == 1 && rep.order == group.order()) ? "Certified" : "Undecided";
  return rep;
}

}  // namespace origami

#include "origami/census.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "origami/error.hpp"

namespace origami {

namespace {

using Images = std::vector<std::uint32_t>;

void partitions_rec(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

Images representative(const std::vector<std::size_t>& type) {
  Images h;
  std::uint32_t start = 0;
  for (std::size_t len : type) {
    for (std::size_t k = 0; k < len; ++k) h.push_back(start + static_cast<std::uint32_t>((k + 1) % len));
    start += static_cast<std::uint32_t>(len);
  }
  return h;
}

Images invert(const Images& p) {
  Images r(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) r[p[i]] = i;
  return r;
}

// cycle lengths as a sorted signature
std::vector<std::uint8_t> signature(const Images& p) {
  std::vector<std::uint8_t> out;
  std::uint32_t seen = 0;
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (seen >> i & 1u) continue;
    std::uint8_t len = 0;
    for (std::uint32_t j = i; !(seen >> j & 1u); j = p[j]) {
      seen |= 1u << j;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool transitive(const Images& h, const Images& v) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t i = 0; i < h.size(); ++i)
      if (frontier >> i & 1u) next |= (1u << h[i]) | (1u << v[i]);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << h.size()) - 1u;
}

struct Shared {
  std::mutex mutex;
  std::map<CanonicalForm, bool> classes;  // form -> reduced
  std::atomic<std::size_t> candidates{0};
};

void scan(const Images& h, std::uint32_t first, Shared& shared) {
  const std::size_t n = h.size();
  const Images hinv = invert(h);
  const auto hsig = signature(h);
  Images rest;
  for (std::uint32_t i = 0; i < n; ++i)
    if (i != first) rest.push_back(i);
  Images v(n), tv(n), sh(n);
  std::map<CanonicalForm, bool> local;
  std::size_t count = 0;
  do {
    ++count;
    v[0] = first;
    std::copy(rest.begin(), rest.end(), v.begin() + 1);
    if (!transitive(h, v)) continue;
    // T(h,v) = (h, v h^-1), S(h,v) = (h v^-1, v): cycle types must match first
    for (std::size_t i = 0; i < n; ++i) tv[i] = v[hinv[i]];
    const auto vsig = signature(v);
    if (signature(tv) != vsig) continue;
    const Images vinv = invert(v);
    for (std::size_t i = 0; i < n; ++i) sh[i] = h[vinv[i]];
    if (signature(sh) != hsig) continue;
    Origami o(Permutation::from_images(h), Permutation::from_images(v));
    CanonicalForm cf = canonical_form(o);
    if (local.count(cf)) continue;
    if (!is_veech_full(o)) continue;
    local.emplace(std::move(cf), is_reduced(o));
  } while (std::next_permutation(rest.begin(), rest.end()));
  shared.candidates += count;
  std::lock_guard lock(shared.mutex);
  shared.classes.merge(local);
}

}  // namespace

std::vector<std::vector<std::size_t>> partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

CensusResult veech_full_census(std::size_t max_squares, unsigned threads) {
  require(max_squares >= 1 && max_squares <= kCensusMaxSquares, ErrorCode::DomainError,
          "census is limited to 1.." + std::to_string(kCensusMaxSquares) + " squares");
  struct Job {
    Images h;
    std::uint32_t first;
  };
  std::vector<Job> jobs;
  for (std::size_t n = 1; n <= max_squares; ++n)
    for (const auto& type : partitions(n))
      for (std::uint32_t first = 0; first < n; ++first) jobs.push_back({representative(type), first});

  Shared shared;
  std::atomic<std::size_t> next{0};
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t j; (j = next++) < jobs.size();) scan(jobs[j].h, jobs[j].first, shared);
      });
  }

  CensusResult result;
  result.max_squares = max_squares;
  result.candidates = shared.candidates;
  for (auto& [form, reduced] : shared.classes) {
    if (!reduced) {
      ++result.veech_full_unreduced;
      continue;
    }
    Origami o = to_origami(form);
    result.hits.push_back({form, o, stratum(o)});
  }
  std::sort(result.hits.begin(), result.hits.end(), [](const CensusHit& a, const CensusHit& b) {
    if (a.form.h.size() != b.form.h.size()) return a.form.h.size() < b.form.h.size();
    return a.form < b.form;
  });
  return result;
}

}  // namespace origami

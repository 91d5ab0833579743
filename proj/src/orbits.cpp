#include "permgen/orbits.hpp"

#include <cmath>
#include <stdexcept>

namespace permgen {

namespace {

// Array union-find with path halving and union by size.
struct UnionFind {
  std::vector<uint32_t> parent;
  std::vector<uint32_t> size;

  explicit UnionFind(uint32_t n) : parent(n), size(n, 1) {
    for (uint32_t i = 0; i < n; ++i) parent[i] = i;
  }

  uint32_t find(uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    return true;
  }
};

}  // namespace

uint64_t OrbitCensus::orbit_count() const {
  uint64_t total = 0;
  for (const auto& [k, nk] : counts) total += nk;
  return total;
}

std::vector<uint32_t> OrbitCensus::orbit_sizes() const {
  std::vector<uint32_t> out;
  for (const auto& [k, nk] : counts)
    for (uint32_t i = 0; i < nk; ++i) out.push_back(k);
  return out;
}

OrbitCensus orbit_census(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("orbit_census: degree mismatch");
  const uint32_t n = p.degree();
  const uint32_t* pi = p.raw().data();
  const uint32_t* qi = q.raw().data();

  UnionFind uf(n);
  for (uint32_t x = 0; x < n; ++x) {
    uf.unite(x, pi[x]);
    uf.unite(x, qi[x]);
  }

  OrbitCensus census;
  census.n = n;
  const double cutoff = std::cbrt(static_cast<double>(n));
  std::vector<uint8_t> two_cycle_ok(n, 1);
  for (uint32_t x = 0; x < n; ++x) {
    uint32_t r = uf.find(x);
    if (static_cast<double>(uf.size[r]) < cutoff) {
      bool ok = pi[x] != x && pi[pi[x]] == x && qi[x] != x && qi[qi[x]] == x;
      if (!ok) two_cycle_ok[r] = 0;
    }
  }
  for (uint32_t x = 0; x < n; ++x) {
    if (uf.find(x) != x) continue;
    uint32_t sz = uf.size[x];
    ++census.counts[sz];
    if (sz <= n / 2) ++census.small_orbit_total;
    if (static_cast<double>(sz) < cutoff && two_cycle_ok[x])
      ++census.two_cycle_orbit_count;
  }
  return census;
}

bool is_transitive(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("is_transitive: degree mismatch");
  const uint32_t n = p.degree();
  if (n == 1) return true;
  const uint32_t* pi = p.raw().data();
  const uint32_t* qi = q.raw().data();
  UnionFind uf(n);
  uint32_t components = n;
  for (uint32_t x = 0; x < n; ++x) {
    if (uf.unite(x, pi[x])) --components;
    if (uf.unite(x, qi[x])) --components;
  }
  return components == 1;
}

}  // namespace permgen

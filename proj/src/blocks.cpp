#include "permgen/blocks.hpp"

#include <algorithm>
#include <utility>

#include "permgen/orbits.hpp"

namespace permgen {

namespace {

struct BlockRefiner {
  const uint32_t* gens[2];
  uint32_t n;
  std::vector<uint32_t> parent;

  BlockRefiner(const Permutation& p, const Permutation& q)
      : n(p.degree()), parent(p.degree()) {
    gens[0] = p.raw().data();
    gens[1] = q.raw().data();
  }

  uint32_t find(uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Minimal congruence identifying a and b (0-based); returns the class map.
  void run(uint32_t a, uint32_t b) {
    for (uint32_t i = 0; i < n; ++i) parent[i] = i;
    std::vector<std::pair<uint32_t, uint32_t>> queue;
    parent[find(b)] = find(a);
    queue.emplace_back(a, b);
    while (!queue.empty()) {
      auto [x, y] = queue.back();
      queue.pop_back();
      for (const uint32_t* g : gens) {
        uint32_t gx = find(g[x]);
        uint32_t gy = find(g[y]);
        if (gx != gy) {
          parent[gy] = gx;
          queue.emplace_back(gx, gy);
        }
      }
    }
  }

  std::vector<uint32_t> block_of(uint32_t a) {
    uint32_t root = find(a);
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < n; ++i)
      if (find(i) == root) out.push_back(i + 1);
    return out;
  }

  std::vector<std::vector<uint32_t>> all_blocks() {
    std::vector<int64_t> index(n, -1);
    std::vector<std::vector<uint32_t>> out;
    for (uint32_t i = 0; i < n; ++i) {
      uint32_t r = find(i);
      if (index[r] < 0) {
        index[r] = static_cast<int64_t>(out.size());
        out.emplace_back();
      }
      out[static_cast<size_t>(index[r])].push_back(i + 1);
    }
    return out;
  }

  // Size of the class containing a without materializing it.
  uint32_t class_count() {
    uint32_t roots = 0;
    for (uint32_t i = 0; i < n; ++i)
      if (find(i) == i) ++roots;
    return roots;
  }
};

void require_transitive(const Permutation& p, const Permutation& q) {
  if (!is_transitive(p, q))
    throw NotTransitiveError("block operations require a transitive group");
}

}  // namespace

std::vector<uint32_t> minimal_block_containing(const Permutation& p,
                                               const Permutation& q,
                                               uint32_t a, uint32_t b) {
  if (a == b || a < 1 || b < 1 || a > p.degree() || b > p.degree())
    throw std::invalid_argument("minimal_block_containing: bad point pair");
  require_transitive(p, q);
  BlockRefiner refiner(p, q);
  refiner.run(a - 1, b - 1);
  return refiner.block_of(a - 1);
}

std::optional<std::vector<std::vector<uint32_t>>> find_block_system(
    const Permutation& p, const Permutation& q) {
  require_transitive(p, q);
  const uint32_t n = p.degree();
  BlockRefiner refiner(p, q);
  for (uint32_t x = 1; x < n; ++x) {
    refiner.run(0, x);
    uint32_t classes = refiner.class_count();
    if (classes > 1) {
      auto blocks = refiner.all_blocks();
      std::sort(blocks.begin(), blocks.end());
      return blocks;
    }
  }
  return std::nullopt;
}

bool is_primitive(const Permutation& p, const Permutation& q) {
  return !find_block_system(p, q).has_value();
}

}  // namespace permgen

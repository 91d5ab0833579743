#include "permgen/samplers.hpp"

#include <algorithm>
#include <numeric>

namespace permgen {

namespace {

std::vector<uint32_t> shuffled_points(uint32_t n, RandomSource& rng) {
  std::vector<uint32_t> pts(n);
  std::iota(pts.begin(), pts.end(), 0u);
  for (uint32_t i = n - 1; i > 0; --i) {
    uint32_t j = static_cast<uint32_t>(rng.uniform_below(i + 1));
    std::swap(pts[i], pts[j]);
  }
  return pts;
}

}  // namespace

Permutation sample_uniform(uint32_t n, RandomSource& rng) {
  if (n == 0) throw std::invalid_argument("sample_uniform: n must be positive");
  auto pts = shuffled_points(n, rng);
  std::vector<uint32_t> images(n);
  for (uint32_t i = 0; i < n; ++i) images[i] = pts[i] + 1;
  return Permutation::from_images(images);
}

Permutation sample_class(const CycleType& t, RandomSource& rng) {
  const uint32_t n = t.n();
  auto pts = shuffled_points(n, rng);
  std::vector<uint32_t> images(n);
  std::iota(images.begin(), images.end(), 1u);
  uint32_t offset = 0;
  for (const auto& [len, cnt] : t.counts()) {
    for (uint32_t c = 0; c < cnt; ++c) {
      for (uint32_t i = 0; i < len; ++i) {
        uint32_t x = pts[offset + i];
        uint32_t y = pts[offset + (i + 1) % len];
        images[x] = y + 1;
      }
      offset += len;
    }
  }
  return Permutation::from_images(images);
}

Permutation sample_conjugate(const Permutation& p, RandomSource& rng) {
  Permutation s = sample_uniform(p.degree(), rng);
  return conjugate(p, s);
}

OrderMClassTable enumerate_types_of_order(uint32_t n, uint64_t m) {
  OrderMClassTable table;
  table.n = n;
  table.m = m;
  if (n == 0 || m == 0) throw std::invalid_argument("n and m must be positive");

  // Cycle lengths of an order-m element are divisors of m; descend over
  // the divisors > 1, pruning branches whose joint lcm cannot reach m.
  std::vector<uint64_t> divisors;
  for (uint64_t d = 2; d <= m && d <= n; ++d)
    if (m % d == 0) divisors.push_back(d);
  std::sort(divisors.rbegin(), divisors.rend());

  std::vector<uint64_t> suffix_lcm(divisors.size() + 1, 1);
  for (size_t i = divisors.size(); i-- > 0;)
    suffix_lcm[i] = std::lcm(suffix_lcm[i + 1], divisors[i]);

  std::map<uint32_t, uint32_t> counts;
  std::vector<CycleType> found;

  auto walk = [&](auto&& self, size_t idx, uint32_t remaining, uint64_t cur_lcm) -> void {
    if (std::lcm(cur_lcm, idx < divisors.size() ? suffix_lcm[idx] : 1) != m) return;
    if (idx == divisors.size()) {
      if (cur_lcm != m) return;  // unreachable given the prune, kept for clarity
      if (remaining > 0) counts[1] = remaining;
      found.push_back(CycleType(n, counts));
      counts.erase(1);
      return;
    }
    const auto d = static_cast<uint32_t>(divisors[idx]);
    const uint32_t max_count = remaining / d;
    for (uint32_t c = max_count + 1; c-- > 0;) {
      if (c > 0) counts[d] = c;
      self(self, idx + 1, remaining - c * d, c > 0 ? std::lcm(cur_lcm, divisors[idx]) : cur_lcm);
      counts.erase(d);
    }
  };

  if (m == 1) {
    found.push_back(CycleType::identity(n));
  } else {
    walk(walk, 0, n, 1);
  }

  std::sort(found.begin(), found.end());
  for (auto& t : found) {
    BigInt w = class_size(t);
    table.total += w;
    table.entries.push_back({std::move(t), std::move(w)});
  }
  return table;
}

Permutation sample_from_table(const OrderMClassTable& table, RandomSource& rng) {
  if (table.empty())
    throw EmptyOrderError("no element of the requested order exists");
  BigInt pick = rng.uniform_bigint_below(table.total);
  for (const auto& entry : table.entries) {
    if (pick < entry.weight) return sample_class(entry.type, rng);
    pick -= entry.weight;
  }
  throw std::logic_error("weight table inconsistent");
}

Permutation sample_order_m(uint32_t n, uint64_t m, RandomSource& rng) {
  return sample_from_table(enumerate_types_of_order(n, m), rng);
}

}  // namespace permgen

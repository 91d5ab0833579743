#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "permgen/permutation.hpp"

namespace permgen {

/// Orbit structure of the group generated by two permutations: counts[k]
/// is the number of orbits of size k (all sizes), small_orbit_total sums
/// counts over 1 <= k <= n/2 (zero iff transitive), and
/// two_cycle_orbit_count counts orbits of size < n^(1/3) on which both
/// generators restrict to fixed-point-free involutions.
struct OrbitCensus {
  uint32_t n = 0;
  std::map<uint32_t, uint32_t> counts;
  uint64_t small_orbit_total = 0;
  uint32_t two_cycle_orbit_count = 0;

  uint64_t orbit_count() const;
  std::vector<uint32_t> orbit_sizes() const;  // ascending, with multiplicity
};

OrbitCensus orbit_census(const Permutation& p, const Permutation& q);

/// Single pass over both image arrays with union-find.
bool is_transitive(const Permutation& p, const Permutation& q);

}  // namespace permgen

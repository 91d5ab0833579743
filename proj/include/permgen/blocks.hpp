#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "permgen/permutation.hpp"

namespace permgen {

struct NotTransitiveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Smallest block of the group generated by p and q that contains both
/// points (classic union-find refinement). Requires transitivity.
/// Returns the full point set when no proper block contains the pair.
std::vector<uint32_t> minimal_block_containing(const Permutation& p,
                                               const Permutation& q,
                                               uint32_t a, uint32_t b);

/// First proper block system found by refining from pairs (1, x),
/// x = 2..n; nullopt when primitive. Requires transitivity.
std::optional<std::vector<std::vector<uint32_t>>> find_block_system(
    const Permutation& p, const Permutation& q);

bool is_primitive(const Permutation& p, const Permutation& q);

}  // namespace permgen

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "permgen/bigint.hpp"
#include "permgen/permutation.hpp"

namespace permgen {

struct OracleLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Deterministic Schreier-Sims stabilizer chain. Intended for small
/// degrees where it serves as the exact ground truth.
class StabilizerChain {
 public:
  StabilizerChain(const std::vector<Permutation>& generators, uint32_t n);

  BigInt order() const;
  bool contains(const Permutation& g) const;

 private:
  struct Level {
    uint32_t base = 0;
    std::vector<Permutation> gens;
    std::vector<uint32_t> orbit;
    std::vector<int64_t> transversal_at;   // point -> index into transversal, -1 if absent
    std::vector<Permutation> transversal;  // u with base^u = point
  };

  void rebuild_orbit(size_t level);
  // Returns the level the residue stopped at and the residue itself.
  std::pair<Permutation, size_t> sift(const Permutation& g, size_t from) const;
  void build();

  uint32_t n_;
  std::vector<Level> levels_;
};

/// Exact |<p, q>| for degrees up to `limit`; throws OracleLimitError above it.
BigInt exact_order_oracle(const Permutation& p, const Permutation& q,
                          uint32_t limit = 12);

}  // namespace permgen

#pragma once

#include <cstdint>
#include <random>

#include "permgen/bigint.hpp"

namespace permgen {

/// Seeded random source with independent substreams. Identical
/// (seed, stream) reproduces the identical draw sequence on every
/// platform: mt19937_64 output is fixed by the standard and bounded
/// draws below use mask rejection instead of std::uniform_int_distribution,
/// whose mapping is implementation-defined.
class RandomSource {
 public:
  explicit RandomSource(uint64_t seed, uint64_t stream = 0);

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }

  uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, bound), bound >= 1.
  uint64_t uniform_below(uint64_t bound);

  /// Uniform in [0, bound), bound >= 1, by chunked mask rejection.
  BigInt uniform_bigint_below(const BigInt& bound);

  double next_unit();  // [0, 1)

 private:
  uint64_t seed_;
  uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace permgen

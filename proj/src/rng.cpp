#include "permgen/rng.hpp"

#include <stdexcept>
#include <vector>

namespace permgen {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RandomSource::RandomSource(uint64_t seed, uint64_t stream)
    : seed_(seed),
      stream_(stream),
      engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

uint64_t RandomSource::uniform_below(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  if (bound == 1) return 0;
  uint64_t mask = ~0ULL >> __builtin_clzll(bound - 1 | 1);
  uint64_t v;
  do {
    v = engine_() & mask;
  } while (v >= bound);
  return v;
}

BigInt RandomSource::uniform_bigint_below(const BigInt& bound) {
  if (bound <= 0) throw std::invalid_argument("uniform_bigint_below: bound must be positive");
  if (bound == 1) return 0;
  const uint64_t bits = boost::multiprecision::msb(bound - 1) + 1;
  const uint64_t words = (bits + 63) / 64;
  const uint64_t top_bits = bits - (words - 1) * 64;
  const uint64_t top_mask = (top_bits == 64) ? ~0ULL : ((1ULL << top_bits) - 1);
  std::vector<uint64_t> chunk(words);
  while (true) {
    for (uint64_t i = 0; i < words; ++i) chunk[i] = engine_();
    chunk[words - 1] &= top_mask;
    BigInt v;
    boost::multiprecision::import_bits(v, chunk.begin(), chunk.end(), 64, false);
    if (v < bound) return v;
  }
}

double RandomSource::next_unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace permgen

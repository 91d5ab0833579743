#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permgen/bigint.hpp"
#include "permgen/orbits.hpp"
#include "permgen/permutation.hpp"
#include "permgen/rng.hpp"

namespace permgen {

enum class Verdict {
  Intransitive,
  TransitiveImprimitive,
  PrimitiveProper,
  Alternating,
  Symmetric,
  UnknownPrimitive,
};

std::string verdict_name(Verdict v);

enum class ClassifyMode { Exact, Certificate };

struct ClassifyOptions {
  ClassifyMode mode = ClassifyMode::Certificate;
  uint32_t budget = 200;          // random words per classification
  uint32_t oracle_limit = 12;     // exact mode degree cap
  uint32_t block_check_limit = 512;
  uint32_t word_min = 20;
  uint32_t word_max = 80;
};

/// Witness for a >= A_n verdict: word number `word_index` (of the given
/// length) has a single cycle of prime length `prime` dividing no other
/// cycle length, so the word raised to the lcm of its other cycle
/// lengths is a `prime`-cycle.
struct CertificateInfo {
  uint32_t word_index = 0;
  uint32_t word_length = 0;
  uint32_t prime = 0;
};

struct GroupClassification {
  Verdict verdict = Verdict::UnknownPrimitive;
  std::vector<uint32_t> orbit_sizes;
  std::optional<std::vector<std::vector<uint32_t>>> block_system;
  std::optional<CertificateInfo> certificate;
  std::optional<BigInt> exact_order;
  uint32_t words_tried = 0;
};

/// Decide what <p, q> is. Exact mode (degree <= oracle_limit) compares
/// the stabilizer-chain order against n! and n!/2. Certificate mode
/// searches random words for a prime-cycle witness; above
/// block_check_limit the block-system sweep is skipped and the witness
/// prime must exceed n/2, which forces primitivity on its own.
GroupClassification classify(const Permutation& p, const Permutation& q,
                             const ClassifyOptions& opt, RandomSource& rng);

}  // namespace permgen

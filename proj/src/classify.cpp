#include "permgen/classify.hpp"

#include <algorithm>
#include <numeric>

#include "permgen/blocks.hpp"
#include "permgen/cycle_type.hpp"
#include "permgen/stab_chain.hpp"

namespace permgen {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Intransitive: return "Intransitive";
    case Verdict::TransitiveImprimitive: return "TransitiveImprimitive";
    case Verdict::PrimitiveProper: return "PrimitiveProper";
    case Verdict::Alternating: return "Alternating";
    case Verdict::Symmetric: return "Symmetric";
    case Verdict::UnknownPrimitive: return "UnknownPrimitive";
  }
  return "?";
}

namespace {

bool is_prime(uint64_t v) {
  if (v < 2) return false;
  for (uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// A transitive group with a single cycle of prime length rho <= n - 3
// dividing no other cycle length contains a rho-cycle (power the word by
// the lcm of the other lengths) and hence, when primitive, at least A_n.
// With primitivity unverified the witness must satisfy rho > n/2, which
// rules out any block system directly.
struct WitnessScanner {
  uint32_t n;
  bool primitivity_verified;
  std::vector<uint8_t> seen;

  WitnessScanner(uint32_t n_, bool verified)
      : n(n_), primitivity_verified(verified), seen(n_, 0) {}

  // Returns the witness prime, or 0.
  uint32_t scan(const std::vector<uint32_t>& word) {
    if (primitivity_verified) return scan_full(word);
    return scan_large(word);
  }

 private:
  uint32_t scan_full(const std::vector<uint32_t>& word) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<uint32_t> lengths;
    for (uint32_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      uint32_t len = 0, x = s;
      do {
        seen[x] = 1;
        ++len;
        x = word[x];
      } while (x != s);
      lengths.push_back(len);
    }
    for (size_t i = 0; i < lengths.size(); ++i) {
      uint64_t rho = lengths[i];
      if (rho + 3 > n || !is_prime(rho)) continue;
      bool divides_other = false;
      for (size_t j = 0; j < lengths.size(); ++j) {
        if (j == i) continue;
        if (lengths[j] % rho == 0) {
          divides_other = true;
          break;
        }
      }
      if (!divides_other) return static_cast<uint32_t>(rho);
    }
    return 0;
  }

  uint32_t scan_large(const std::vector<uint32_t>& word) {
    std::fill(seen.begin(), seen.end(), 0);
    uint32_t visited = 0;
    for (uint32_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      uint32_t len = 0, x = s;
      do {
        seen[x] = 1;
        ++len;
        x = word[x];
      } while (x != s);
      visited += len;
      if (static_cast<uint64_t>(len) * 2 > n) {
        // Shorter cycles cannot be multiples of this length.
        if (len + 3 <= n && is_prime(len)) return len;
        return 0;
      }
      if (n - visited <= n / 2) return 0;  // no room left for a long cycle
    }
    return 0;
  }
};

GroupClassification certificate_search(const Permutation& p, const Permutation& q,
                                       const ClassifyOptions& opt,
                                       bool primitivity_verified,
                                       RandomSource& rng,
                                       GroupClassification result) {
  const uint32_t n = p.degree();
  const Permutation gens[4] = {p, inverse(p), q, inverse(q)};
  const uint32_t* tables[4] = {gens[0].raw().data(), gens[1].raw().data(),
                               gens[2].raw().data(), gens[3].raw().data()};

  WitnessScanner scanner(n, primitivity_verified);
  std::vector<uint32_t> word(n), next(n);

  const bool p_even = parity(p) == Parity::Even;
  const bool q_even = parity(q) == Parity::Even;

  for (uint32_t attempt = 0; attempt < opt.budget; ++attempt) {
    const uint32_t length =
        opt.word_min + static_cast<uint32_t>(rng.uniform_below(opt.word_max - opt.word_min + 1));
    std::iota(word.begin(), word.end(), 0u);
    for (uint32_t step = 1; step <= length; ++step) {
      const uint32_t* g = tables[rng.uniform_below(4)];
      for (uint32_t x = 0; x < n; ++x) next[x] = g[word[x]];
      word.swap(next);
      if (step < opt.word_min) continue;
      uint32_t prime = scanner.scan(word);
      if (prime != 0) {
        result.verdict = (p_even && q_even) ? Verdict::Alternating : Verdict::Symmetric;
        result.certificate = CertificateInfo{attempt, step, prime};
        result.words_tried = attempt + 1;
        return result;
      }
    }
  }
  result.verdict = Verdict::UnknownPrimitive;
  result.words_tried = opt.budget;
  return result;
}

}  // namespace

GroupClassification classify(const Permutation& p, const Permutation& q,
                             const ClassifyOptions& opt, RandomSource& rng) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("classify: degree mismatch");
  const uint32_t n = p.degree();
  if (opt.mode == ClassifyMode::Exact && n > opt.oracle_limit)
    throw OracleLimitError("degree exceeds the exact oracle limit");

  GroupClassification result;
  OrbitCensus census = orbit_census(p, q);
  result.orbit_sizes = census.orbit_sizes();
  if (census.orbit_count() > 1) {
    result.verdict = Verdict::Intransitive;
    return result;
  }

  const bool check_blocks =
      n <= opt.block_check_limit || opt.mode == ClassifyMode::Exact;
  if (check_blocks) {
    if (auto blocks = find_block_system(p, q)) {
      result.verdict = Verdict::TransitiveImprimitive;
      result.block_system = std::move(*blocks);
      return result;
    }
  }

  if (opt.mode == ClassifyMode::Exact) {
    BigInt order = exact_order_oracle(p, q, opt.oracle_limit);
    BigInt full = factorial(n);
    result.exact_order = order;
    if (order == full) {
      // S_1 = A_1; keep the order-based name.
      result.verdict = Verdict::Symmetric;
    } else if (order * 2 == full) {
      result.verdict = Verdict::Alternating;
    } else {
      result.verdict = Verdict::PrimitiveProper;
    }
    return result;
  }

  return certificate_search(p, q, opt, check_blocks, rng, std::move(result));
}

}  // namespace permgen

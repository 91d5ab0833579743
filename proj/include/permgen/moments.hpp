#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permgen/bigint.hpp"
#include "permgen/cycle_type.hpp"
#include "permgen/permutation.hpp"

namespace permgen {

struct ExactLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Coefficients of prod_j (1 + x^j)^{c_j}: entry k is the number of
/// k-sets invariant under a permutation of the given type.
struct FixedSetPolynomial {
  uint32_t n = 0;
  std::vector<BigInt> coefficients;  // size n + 1

  const BigInt& at(uint32_t k) const { return coefficients.at(k); }
};

FixedSetPolynomial fixed_set_polynomial(const CycleType& t);

/// Probability that two uniformly random fixed-point-free involutions of
/// S_{2k} generate a transitive group: 4^k k!^2 / (2k (2k)!).
Rational p_two_regular(uint64_t k);

/// Pairing bijection: two perfect matchings on 2k points correspond to a
/// permutation with only even cycles. The pair is transitive iff the
/// image is a single 2k-cycle.
Permutation matchings_to_even(const Permutation& s, const Permutation& s2);
std::pair<Permutation, Permutation> even_to_matchings(const Permutation& t);

/// Number of ordered pairs (tau, tau') with the given cycle types whose
/// generated group is transitive on the l common points.
BigInt transitive_pair_count(const CycleType& d, const CycleType& d2);

/// Probability that random permutations with the given types generate a
/// transitive group.
Rational transitive_pair_probability(const CycleType& d, const CycleType& d2);

/// Exact expected number of common orbits of size k for uniform
/// representatives of the two classes. k capped by exact_limit.
Rational expected_Nk_exact(const CycleType& t, const CycleType& t2, uint32_t k,
                           uint32_t exact_limit = 10);

struct MomentReport {
  uint32_t n = 0;
  CycleType type1, type2;
  uint32_t k_max = 0;
  std::vector<std::pair<uint32_t, Rational>> terms;  // (k, E N_k)
  Rational sum = 0;
  bool truncated = false;  // k_max < n/2

  MomentReport(CycleType a, CycleType b) : type1(std::move(a)), type2(std::move(b)) {}
};

MomentReport expected_N(const CycleType& t, const CycleType& t2, uint32_t k_max,
                        uint32_t exact_limit = 10);

/// Probability that two uniformly random subsets of sizes c1 and c1p of
/// {1..n} are disjoint; always <= exp(-c1*c1p/n).
Rational common_fixed_point_disjoint_prob(uint64_t c1, uint64_t c1p, uint64_t n);

/// min over x > 0 of x^-k prod_j (1+x^j)^{c_j}, minimized in the log
/// domain by golden-section search; an upper bound for the invariant
/// k-set count.
double fk_upper_bound(const CycleType& t, uint32_t k);
double fk_upper_bound_log(const CycleType& t, uint32_t k);

/// Binary entropy in nats.
double entropy_h(double x);
/// (k^{-1/2} e^{h(k/n)n}, e^{h(k/n)n}); the upper end dominates C(n,k)
/// exactly, the lower end is a guide with an unspecified constant.
std::pair<double, double> binom_entropy_bounds(uint32_t n, uint32_t k);

/// Number of partitions of {1..n} into k cells of size n/k preserved by
/// p, by enumeration. Requires k | n and n <= limit.
BigInt count_invariant_equipartitions(const Permutation& p, uint32_t k,
                                      uint32_t limit = 12);

/// Total number of k-cell equipartitions: n! / (k! (n/k)!^k).
BigInt equipartition_count(uint32_t n, uint32_t k);

}  // namespace permgen

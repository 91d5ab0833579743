// Brute-force oracles used to derive and freeze expected values. These
// deliberately avoid the library's own algorithms: transitivity is a BFS,
// group order is a multiplication closure, invariant sets and partitions
// are enumerated directly.
#pragma once

#include <cstdint>
#include <vector>

#include "permgen/bigint.hpp"
#include "permgen/cycle_type.hpp"
#include "permgen/permutation.hpp"

namespace oracle {

std::vector<permgen::Permutation> all_permutations(uint32_t n);
std::vector<permgen::Permutation> elements_of_type(const permgen::CycleType& t);

bool transitive_bfs(const permgen::Permutation& p, const permgen::Permutation& q);

// |<p, q>| by breadth-first multiplication closure.
uint64_t closure_order(const permgen::Permutation& p, const permgen::Permutation& q);

// Number of k-subsets S with S^p = S.
uint64_t invariant_ksets(const permgen::Permutation& p, uint32_t k);

// Number of ordered transitive pairs over two full conjugacy classes.
uint64_t transitive_pairs_brute(const permgen::CycleType& a, const permgen::CycleType& b);

// Invariant equipartitions counted by full enumeration.
uint64_t invariant_equipartitions_brute(const permgen::Permutation& p, uint32_t k);

// P(no common 2-cycle) for two uniform fixed-point-free involutions of
// S_{2m}, by inclusion-exclusion over shared 2-cycles.
permgen::Rational matching_no_collision_prob(uint32_t m);

// Upper tail survival Q(a, x) of the regularized incomplete gamma,
// giving chi-square p-values via Q(df/2, chi2/2).
double gamma_q(double a, double x);
double chi_square_pvalue(double chi2, uint64_t df);

// Parity by counting inversions.
bool even_by_inversions(const permgen::Permutation& p);

}  // namespace oracle

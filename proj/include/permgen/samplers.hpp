#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "permgen/cycle_type.hpp"
#include "permgen/permutation.hpp"
#include "permgen/rng.hpp"

namespace permgen {

struct EmptyOrderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Fisher-Yates; each of the n! outcomes equally likely.
Permutation sample_uniform(uint32_t n, RandomSource& rng);

/// Uniform over the conjugacy class of type t: a uniformly shuffled
/// point sequence is filled into the cycle slots of the canonical
/// representative.
Permutation sample_class(const CycleType& t, RandomSource& rng);

/// conjugate(p, s) with s uniform over S_n; same distribution as
/// sample_class(cycle_type_of(p)).
Permutation sample_conjugate(const Permutation& p, RandomSource& rng);

/// Conjugacy classes of S_n whose elements have order exactly m,
/// weighted by class size. Empty iff no element of S_n has order m.
struct OrderMClassTable {
  struct Entry {
    CycleType type;
    BigInt weight;
  };

  uint32_t n = 0;
  uint64_t m = 0;
  std::vector<Entry> entries;  // ascending-parts lexicographic order
  BigInt total = 0;

  bool empty() const { return entries.empty(); }
};

OrderMClassTable enumerate_types_of_order(uint32_t n, uint64_t m);

/// Two-stage draw: class with probability weight/total via exact
/// big-integer inversion, then sample_class. Throws EmptyOrderError.
Permutation sample_order_m(uint32_t n, uint64_t m, RandomSource& rng);
Permutation sample_from_table(const OrderMClassTable& table, RandomSource& rng);

}  // namespace permgen

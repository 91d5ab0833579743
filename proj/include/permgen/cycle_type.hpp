#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "permgen/bigint.hpp"
#include "permgen/permutation.hpp"

namespace permgen {

/// Cycle type of a permutation of S_n: counts[j] = number of j-cycles,
/// zero counts omitted, sum j*counts[j] = n. Identifies a conjugacy class.
class CycleType {
 public:
  CycleType(uint32_t n, std::map<uint32_t, uint32_t> counts);

  static CycleType identity(uint32_t n);
  static CycleType single_cycle(uint32_t n);
  static CycleType from_parts(const std::vector<uint32_t>& parts);

  uint32_t n() const { return n_; }
  uint32_t count(uint32_t j) const;
  const std::map<uint32_t, uint32_t>& counts() const { return counts_; }

  /// Total number of cycles c = sum of counts.
  uint64_t cycle_count() const;
  /// Ascending list of cycle lengths with multiplicity.
  std::vector<uint32_t> parts() const;

  BigInt order() const;  // lcm of present lengths
  Parity parity() const;

  /// Canonical class representative: cycles laid out over 1..n in
  /// ascending length order.
  Permutation representative() const;

  bool operator==(const CycleType&) const = default;
  bool operator<(const CycleType& other) const;

 private:
  uint32_t n_ = 0;
  std::map<uint32_t, uint32_t> counts_;
};

CycleType cycle_type_of(const Permutation& p);

/// n! / prod_j j^{c_j} c_j!
BigInt class_size(const CycleType& t);

/// Comma-separated j^c tokens, exponent 1 omitted: "1^3,2^2,5".
std::string format_cycle_type(const CycleType& t);
CycleType parse_cycle_type(const std::string& text);

/// All cycle types of S_n in deterministic order (ascending parts,
/// lexicographic). Visitor returns false to stop early.
void for_each_cycle_type(uint32_t n, const std::function<bool(const CycleType&)>& visit);

}  // namespace permgen

#pragma once

#include <cstdint>
#include <vector>

#include "permgen/bigint.hpp"
#include "permgen/cycle_type.hpp"

namespace permgen {

/// Exact joint distribution of (fixed points, 2-cycles) over all
/// order-m elements of S_n, aggregated over classes.
struct OrderMProfile {
  struct Row {
    uint32_t fixed_points = 0;
    uint32_t two_cycles = 0;
    BigInt weight = 0;
  };

  uint32_t n = 0;
  uint64_t m = 0;
  std::vector<Row> rows;  // unique (fixed_points, two_cycles) keys, sorted
  BigInt total = 0;

  Rational mean_fixed_points() const;
  Rational mean_two_cycles() const;
  /// Probability mass of rows with fixed_points > bound (resp. two_cycles).
  Rational mass_fixed_points_above(uint64_t bound) const;
  Rational mass_two_cycles_above(uint64_t bound) const;
};

OrderMProfile order_m_profile(uint32_t n, uint64_t m);  // throws EmptyOrderError

/// |C| / |C'| where C' replaces k*d fixed points of C by k d-cycles.
/// Requires c_1 >= 2kd, 2 <= d <= n, k >= 1.
Rational class_ratio(const CycleType& t, uint32_t d, uint32_t k);

struct GenerationHypothesesReport {
  uint32_t n = 0;
  uint64_t m = 0;
  double fix_coeff = 1.0;
  double twocycle_frac = 0.25;

  // Divisor d of m with 3 <= d <= fix_coeff * sqrt(n), if any.
  bool has_small_divisor = false;
  uint64_t small_divisor = 0;

  // Some order-m class with few fixed points and few 2-cycles.
  bool good_type_exists = false;
  std::string good_type;

  // Exact mass of order-m elements beyond each threshold.
  Rational mass_fixed_points_violating = 0;
  Rational mass_two_cycles_violating = 0;

  uint64_t fixed_point_threshold = 0;
  uint64_t two_cycle_threshold = 0;

  bool m_is_two = false;     // the dihedral-only special case
  bool m_even = false;
  bool almost_sure_condition = false;       // small divisor or (even + good type)
  bool positive_prob_condition = false;     // odd + good fixed points, or even and not 2
};

struct HypothesisThresholds {
  double fix_coeff = 1.0;
  double twocycle_frac = 0.25;
};

GenerationHypothesesReport check_generation_hypotheses(
    uint32_t n, uint64_t m, const HypothesisThresholds& thresholds = {});

}  // namespace permgen

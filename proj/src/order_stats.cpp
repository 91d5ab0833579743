#include "permgen/order_stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "permgen/samplers.hpp"

namespace permgen {

Rational OrderMProfile::mean_fixed_points() const {
  BigInt weighted = 0;
  for (const auto& row : rows) weighted += BigInt(row.fixed_points) * row.weight;
  return Rational(weighted, total);
}

Rational OrderMProfile::mean_two_cycles() const {
  BigInt weighted = 0;
  for (const auto& row : rows) weighted += BigInt(row.two_cycles) * row.weight;
  return Rational(weighted, total);
}

Rational OrderMProfile::mass_fixed_points_above(uint64_t bound) const {
  BigInt mass = 0;
  for (const auto& row : rows)
    if (row.fixed_points > bound) mass += row.weight;
  return Rational(mass, total);
}

Rational OrderMProfile::mass_two_cycles_above(uint64_t bound) const {
  BigInt mass = 0;
  for (const auto& row : rows)
    if (row.two_cycles > bound) mass += row.weight;
  return Rational(mass, total);
}

OrderMProfile order_m_profile(uint32_t n, uint64_t m) {
  OrderMClassTable table = enumerate_types_of_order(n, m);
  if (table.empty())
    throw EmptyOrderError("no element of the requested order exists");
  OrderMProfile profile;
  profile.n = n;
  profile.m = m;
  profile.total = table.total;
  std::map<std::pair<uint32_t, uint32_t>, BigInt> buckets;
  for (const auto& entry : table.entries)
    buckets[{entry.type.count(1), entry.type.count(2)}] += entry.weight;
  for (auto& [key, weight] : buckets)
    profile.rows.push_back({key.first, key.second, std::move(weight)});
  return profile;
}

Rational class_ratio(const CycleType& t, uint32_t d, uint32_t k) {
  if (d < 2 || d > t.n()) throw std::invalid_argument("class_ratio: need 2 <= d <= n");
  if (k < 1) throw std::invalid_argument("class_ratio: need k >= 1");
  const uint64_t kd = static_cast<uint64_t>(k) * d;
  if (t.count(1) < 2 * kd)
    throw std::invalid_argument("class_ratio: need c_1 >= 2kd");
  std::map<uint32_t, uint32_t> counts = t.counts();
  counts[1] -= static_cast<uint32_t>(kd);
  counts[d] += k;
  CycleType replaced(t.n(), std::move(counts));
  return Rational(class_size(t), class_size(replaced));
}

GenerationHypothesesReport check_generation_hypotheses(
    uint32_t n, uint64_t m, const HypothesisThresholds& thresholds) {
  GenerationHypothesesReport report;
  report.n = n;
  report.m = m;
  report.fix_coeff = thresholds.fix_coeff;
  report.twocycle_frac = thresholds.twocycle_frac;
  report.m_is_two = (m == 2);
  report.m_even = (m % 2 == 0);

  const double sqrt_n = std::sqrt(static_cast<double>(n));
  report.fixed_point_threshold =
      static_cast<uint64_t>(std::floor(thresholds.fix_coeff * sqrt_n));
  report.two_cycle_threshold =
      static_cast<uint64_t>(std::floor(thresholds.twocycle_frac * n));

  for (uint64_t d = 3; d <= m; ++d) {
    if (m % d != 0) continue;
    if (static_cast<double>(d) <= thresholds.fix_coeff * sqrt_n) {
      report.has_small_divisor = true;
      report.small_divisor = d;
    }
    break;  // only the smallest divisor >= 3 matters
  }

  OrderMProfile profile = order_m_profile(n, m);
  report.mass_fixed_points_violating =
      profile.mass_fixed_points_above(report.fixed_point_threshold);
  report.mass_two_cycles_violating =
      profile.mass_two_cycles_above(report.two_cycle_threshold);

  OrderMClassTable table = enumerate_types_of_order(n, m);
  for (const auto& entry : table.entries) {
    if (entry.type.count(1) <= report.fixed_point_threshold &&
        entry.type.count(2) <= report.two_cycle_threshold) {
      report.good_type_exists = true;
      report.good_type = format_cycle_type(entry.type);
      break;
    }
  }

  report.almost_sure_condition =
      report.has_small_divisor || (report.m_even && report.good_type_exists);
  bool odd_good = !report.m_even && report.good_type_exists;
  report.positive_prob_condition = odd_good || (report.m_even && !report.m_is_two);
  return report;
}

}  // namespace permgen

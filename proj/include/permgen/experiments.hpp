#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "permgen/classify.hpp"
#include "permgen/cycle_type.hpp"
#include "permgen/moments.hpp"
#include "permgen/samplers.hpp"

namespace permgen {

using Json = nlohmann::json;

/// How one generator of a trial pair is drawn: "uniform", "order:m",
/// or a cycle-type string.
struct ClassSpec {
  enum class Kind { Uniform, OrderM, Type };

  Kind kind = Kind::Uniform;
  uint64_t m = 0;
  std::optional<CycleType> type;

  static ClassSpec parse(const std::string& text, uint32_t n);
  std::string str() const;
};

enum class ConjugateMode { InClass, RandomConjugate };

struct ExperimentConfig {
  uint32_t n = 0;
  ClassSpec spec1, spec2;
  uint64_t trials = 10000;
  uint64_t seed = 0;
  uint64_t stream_offset = 0;
  ClassifyMode mode = ClassifyMode::Certificate;
  uint32_t budget = 200;
  uint32_t oracle_limit = 12;
  uint32_t block_check_limit = 512;
  uint32_t workers = 0;  // 0 = hardware concurrency
  ConjugateMode conjugate_mode = ConjugateMode::InClass;
  uint32_t census_k_max = 6;

  Json to_json() const;
};

struct WilsonInterval {
  double point = 0, lo = 0, hi = 0;
};

/// 95% Wilson score interval.
WilsonInterval wilson_interval(uint64_t successes, uint64_t trials);

struct ExperimentResult {
  ExperimentConfig config;
  std::map<std::string, uint64_t> verdict_counts;
  uint64_t trials = 0;
  WilsonInterval ge_alternating;  // Alternating + Symmetric
  WilsonInterval transitive;      // 1 - Intransitive share
  double unknown_rate = 0;
  std::map<uint64_t, uint64_t> small_orbit_histogram;          // N -> freq
  std::map<uint32_t, std::map<uint64_t, uint64_t>> orbit_k_histogram;  // k -> (N_k -> freq)
  double wall_seconds = 0;

  Json to_json() const;
};

ExperimentResult run_generation_experiment(const ExperimentConfig& cfg);

struct PoissonCheckReport {
  ExperimentConfig config;
  uint32_t k_max = 0;
  Rational lambda_exact = 0;
  double lambda = 0;
  double predicted_p0 = 0;      // e^{-lambda}
  double empirical_p0 = 0;
  double p0_abs_deviation = 0;
  double p0_standard_error = 0;
  // Factorial moments of the small-orbit count truncated at k_max,
  // orders 1..3, against lambda^m; standard errors under the Poisson model.
  struct Moment {
    uint32_t order = 0;
    double empirical = 0;
    double target = 0;
    double model_se = 0;
  };
  std::vector<Moment> moments;
  double wall_seconds = 0;

  Json to_json() const;
};

PoissonCheckReport poisson_check(const ExperimentConfig& cfg, uint32_t k_max);

struct NCycleTranspositionReport {
  uint32_t n = 0;
  Rational exact_probability = 0;  // phi(n) / (n - 1)
  // Exhaustive sweep over the essentially distinct transpositions
  // (degree-capped); agrees with the totient value when run.
  bool exhaustive_ran = false;
  Rational exhaustive_probability = 0;
  uint64_t trials = 0;
  std::optional<WilsonInterval> estimate;
  double wall_seconds = 0;

  Json to_json() const;
};

NCycleTranspositionReport ncycle_transposition(uint32_t n, uint64_t trials,
                                               uint64_t seed,
                                               uint32_t exhaustive_limit = 20);

struct TwoCycleCollisionReport {
  ExperimentConfig config;
  uint64_t trials = 0;
  WilsonInterval collision_probability;
  // 1 - exp(-c2 c2' / n^2): the shape of the lower bound, no constant claimed.
  double reference_shape = 0;
  double wall_seconds = 0;

  Json to_json() const;
};

TwoCycleCollisionReport two_cycle_collision(const ExperimentConfig& cfg);

uint64_t euler_totient(uint64_t n);

Json classification_json(const GroupClassification& cl);
Json moment_report_json(const MomentReport& report);

}  // namespace permgen

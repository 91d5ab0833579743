#include "permgen/experiments.hpp"

#include <chrono>
#include <cmath>
#include <thread>

#include "permgen/blocks.hpp"
#include "permgen/stab_chain.hpp"
#include "permgen/version.hpp"

namespace permgen {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Json rational_json(const Rational& r) {
  return Json{{"numerator", boost::multiprecision::numerator(r).str()},
              {"denominator", boost::multiprecision::denominator(r).str()},
              {"value", to_double(r)}};
}

// Static partition of [0, trials) among workers; per-trial substreams make
// the result independent of the worker count.
template <typename Acc, typename Body>
void run_trials(uint64_t trials, uint32_t workers, const Body& body,
                std::vector<Acc>& accumulators) {
  if (workers == 0) {
    workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
  }
  workers = static_cast<uint32_t>(
      std::min<uint64_t>(workers, std::max<uint64_t>(trials, 1)));
  accumulators.assign(workers, Acc{});
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (uint32_t w = 0; w < workers; ++w) {
    uint64_t lo = trials * w / workers;
    uint64_t hi = trials * (w + 1) / workers;
    pool.emplace_back([&, w, lo, hi]() {
      for (uint64_t t = lo; t < hi; ++t) body(t, accumulators[w]);
    });
  }
  for (auto& th : pool) th.join();
}

struct PairSampler {
  const ExperimentConfig& cfg;
  std::optional<OrderMClassTable> table1, table2;
  std::optional<Permutation> fixed_rep2;

  explicit PairSampler(const ExperimentConfig& config) : cfg(config) {
    // Contract violations must surface here, before the worker fan-out.
    if (cfg.spec1.kind == ClassSpec::Kind::OrderM) {
      table1 = enumerate_types_of_order(cfg.n, cfg.spec1.m);
      if (table1->empty())
        throw EmptyOrderError("no element of order " + std::to_string(cfg.spec1.m));
    }
    if (cfg.spec2.kind == ClassSpec::Kind::OrderM) {
      table2 = enumerate_types_of_order(cfg.n, cfg.spec2.m);
      if (table2->empty())
        throw EmptyOrderError("no element of order " + std::to_string(cfg.spec2.m));
    }
    if ((cfg.spec1.kind == ClassSpec::Kind::Type && cfg.spec1.type->n() != cfg.n) ||
        (cfg.spec2.kind == ClassSpec::Kind::Type && cfg.spec2.type->n() != cfg.n))
      throw std::invalid_argument("class spec does not partition n");
    if (cfg.spec2.kind == ClassSpec::Kind::Type &&
        cfg.conjugate_mode == ConjugateMode::RandomConjugate)
      fixed_rep2 = cfg.spec2.type->representative();
  }

  Permutation draw_first(RandomSource& rng) const {
    return draw(cfg.spec1, table1, rng);
  }

  Permutation draw_second(RandomSource& rng) const {
    if (fixed_rep2) return sample_conjugate(*fixed_rep2, rng);
    return draw(cfg.spec2, table2, rng);
  }

 private:
  Permutation draw(const ClassSpec& spec,
                   const std::optional<OrderMClassTable>& table,
                   RandomSource& rng) const {
    switch (spec.kind) {
      case ClassSpec::Kind::Uniform:
        return sample_uniform(cfg.n, rng);
      case ClassSpec::Kind::OrderM:
        return sample_from_table(*table, rng);
      case ClassSpec::Kind::Type:
        return sample_class(*spec.type, rng);
    }
    throw std::logic_error("unreachable");
  }
};

}  // namespace

uint64_t euler_totient(uint64_t n) {
  uint64_t result = n;
  uint64_t v = n;
  for (uint64_t p = 2; p * p <= v; ++p) {
    if (v % p != 0) continue;
    while (v % p == 0) v /= p;
    result -= result / p;
  }
  if (v > 1) result -= result / v;
  return result;
}

ClassSpec ClassSpec::parse(const std::string& text, uint32_t n) {
  ClassSpec spec;
  if (text == "uniform") {
    spec.kind = Kind::Uniform;
    return spec;
  }
  if (text.rfind("order:", 0) == 0) {
    spec.kind = Kind::OrderM;
    try {
      spec.m = std::stoull(text.substr(6));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad order spec: " + text);
    }
    if (spec.m == 0) throw std::invalid_argument("order must be positive");
    return spec;
  }
  spec.kind = Kind::Type;
  spec.type = parse_cycle_type(text);
  if (spec.type->n() != n)
    throw std::invalid_argument("cycle type " + text + " is not a type of S_" +
                                std::to_string(n));
  return spec;
}

std::string ClassSpec::str() const {
  switch (kind) {
    case Kind::Uniform: return "uniform";
    case Kind::OrderM: return "order:" + std::to_string(m);
    case Kind::Type: return format_cycle_type(*type);
  }
  return "?";
}

Json ExperimentConfig::to_json() const {
  return Json{{"n", n},
              {"spec1", spec1.str()},
              {"spec2", spec2.str()},
              {"trials", trials},
              {"seed", seed},
              {"stream_offset", stream_offset},
              {"mode", mode == ClassifyMode::Exact ? "exact" : "certificate"},
              {"budget", budget},
              {"oracle_limit", oracle_limit},
              {"block_check_limit", block_check_limit},
              {"conjugate_mode",
               conjugate_mode == ConjugateMode::InClass ? "class" : "conjugate"},
              {"census_k_max", census_k_max},
              {"code_version", kVersion}};
}

WilsonInterval wilson_interval(uint64_t successes, uint64_t trials) {
  WilsonInterval w;
  if (trials == 0) return w;
  const double z = 1.959963984540054;
  const double nt = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / nt;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nt;
  const double center = (phat + z2 / (2.0 * nt)) / denom;
  const double half =
      z * std::sqrt(phat * (1.0 - phat) / nt + z2 / (4.0 * nt * nt)) / denom;
  w.point = phat;
  w.lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
  w.hi = successes == trials ? 1.0 : std::min(1.0, center + half);
  return w;
}

namespace {

struct GenerationAccumulator {
  std::array<uint64_t, 6> verdicts{};
  std::map<uint64_t, uint64_t> small_orbit_histogram;
  std::map<uint32_t, std::map<uint64_t, uint64_t>> orbit_k_histogram;

  void merge(const GenerationAccumulator& other) {
    for (size_t i = 0; i < verdicts.size(); ++i) verdicts[i] += other.verdicts[i];
    for (const auto& [key, cnt] : other.small_orbit_histogram)
      small_orbit_histogram[key] += cnt;
    for (const auto& [k, hist] : other.orbit_k_histogram)
      for (const auto& [val, cnt] : hist) orbit_k_histogram[k][val] += cnt;
  }
};

}  // namespace

ExperimentResult run_generation_experiment(const ExperimentConfig& cfg) {
  const auto start = Clock::now();
  if (cfg.trials == 0) throw std::invalid_argument("trials must be positive");
  if (cfg.mode == ClassifyMode::Exact && cfg.n > cfg.oracle_limit)
    throw OracleLimitError("exact mode degree exceeds the oracle limit");
  PairSampler sampler(cfg);

  ClassifyOptions copt;
  copt.mode = cfg.mode;
  copt.budget = cfg.budget;
  copt.oracle_limit = cfg.oracle_limit;
  copt.block_check_limit = cfg.block_check_limit;

  std::vector<GenerationAccumulator> accs;
  run_trials<GenerationAccumulator>(
      cfg.trials, cfg.workers,
      [&](uint64_t trial, GenerationAccumulator& acc) {
        RandomSource rng(cfg.seed, cfg.stream_offset + trial);
        Permutation p = sampler.draw_first(rng);
        Permutation q = sampler.draw_second(rng);
        GroupClassification cl = classify(p, q, copt, rng);
        acc.verdicts[static_cast<size_t>(cl.verdict)] += 1;
        uint64_t small_total = 0;
        std::map<uint32_t, uint64_t> per_k;
        for (uint32_t size : cl.orbit_sizes) {
          if (size <= cfg.n / 2) ++small_total;
          if (size <= cfg.census_k_max) ++per_k[size];
        }
        acc.small_orbit_histogram[small_total] += 1;
        for (uint32_t k = 1; k <= cfg.census_k_max && k <= cfg.n; ++k) {
          auto it = per_k.find(k);
          acc.orbit_k_histogram[k][it == per_k.end() ? 0 : it->second] += 1;
        }
      },
      accs);

  GenerationAccumulator total;
  for (const auto& acc : accs) total.merge(acc);

  ExperimentResult result;
  result.config = cfg;
  result.trials = cfg.trials;
  for (size_t i = 0; i < total.verdicts.size(); ++i)
    result.verdict_counts[verdict_name(static_cast<Verdict>(i))] = total.verdicts[i];
  uint64_t ge_alt = total.verdicts[static_cast<size_t>(Verdict::Alternating)] +
                    total.verdicts[static_cast<size_t>(Verdict::Symmetric)];
  uint64_t intransitive = total.verdicts[static_cast<size_t>(Verdict::Intransitive)];
  uint64_t unknown = total.verdicts[static_cast<size_t>(Verdict::UnknownPrimitive)];
  result.ge_alternating = wilson_interval(ge_alt, cfg.trials);
  result.transitive = wilson_interval(cfg.trials - intransitive, cfg.trials);
  result.unknown_rate = static_cast<double>(unknown) / static_cast<double>(cfg.trials);
  result.small_orbit_histogram = std::move(total.small_orbit_histogram);
  result.orbit_k_histogram = std::move(total.orbit_k_histogram);
  result.wall_seconds = seconds_since(start);
  return result;
}

Json ExperimentResult::to_json() const {
  Json verdicts = Json::object();
  for (const auto& [name, count] : verdict_counts) verdicts[name] = count;
  Json small_hist = Json::object();
  for (const auto& [value, count] : small_orbit_histogram)
    small_hist[std::to_string(value)] = count;
  Json per_k = Json::object();
  for (const auto& [k, hist] : orbit_k_histogram) {
    Json h = Json::object();
    for (const auto& [value, count] : hist) h[std::to_string(value)] = count;
    per_k[std::to_string(k)] = std::move(h);
  }
  auto interval_json = [](const WilsonInterval& w) {
    return Json{{"point", w.point}, {"lo", w.lo}, {"hi", w.hi}};
  };
  return Json{{"config", config.to_json()},
              {"trials", trials},
              {"verdict_counts", verdicts},
              {"estimates",
               Json{{"ge_alternating", interval_json(ge_alternating)},
                    {"transitive", interval_json(transitive)},
                    {"unknown_rate", unknown_rate}}},
              {"small_orbit_histogram", small_hist},
              {"orbit_size_histograms", per_k},
              {"wall_seconds", wall_seconds}};
}

namespace {

struct PoissonAccumulator {
  uint64_t zero_count = 0;
  uint64_t sum_m1 = 0;
  uint64_t sum_m2 = 0;
  uint64_t sum_m3 = 0;

  void merge(const PoissonAccumulator& o) {
    zero_count += o.zero_count;
    sum_m1 += o.sum_m1;
    sum_m2 += o.sum_m2;
    sum_m3 += o.sum_m3;
  }
};

}  // namespace

PoissonCheckReport poisson_check(const ExperimentConfig& cfg, uint32_t k_max) {
  const auto start = Clock::now();
  if (cfg.spec1.kind != ClassSpec::Kind::Type ||
      cfg.spec2.kind != ClassSpec::Kind::Type)
    throw std::invalid_argument("poisson_check requires explicit cycle types");

  PoissonCheckReport report;
  report.config = cfg;
  report.k_max = k_max;
  report.lambda_exact = expected_N(*cfg.spec1.type, *cfg.spec2.type, k_max).sum;
  report.lambda = to_double(report.lambda_exact);

  PairSampler sampler(cfg);
  std::vector<PoissonAccumulator> accs;
  run_trials<PoissonAccumulator>(
      cfg.trials, cfg.workers,
      [&](uint64_t trial, PoissonAccumulator& acc) {
        RandomSource rng(cfg.seed, cfg.stream_offset + trial);
        Permutation p = sampler.draw_first(rng);
        Permutation q = sampler.draw_second(rng);
        OrbitCensus census = orbit_census(p, q);
        if (census.small_orbit_total == 0) ++acc.zero_count;
        uint64_t truncated = 0;
        for (const auto& [size, count] : census.counts) {
          if (size > k_max) break;
          truncated += count;
        }
        acc.sum_m1 += truncated;
        if (truncated >= 2) acc.sum_m2 += truncated * (truncated - 1);
        if (truncated >= 3) acc.sum_m3 += truncated * (truncated - 1) * (truncated - 2);
      },
      accs);

  PoissonAccumulator total;
  for (const auto& acc : accs) total.merge(acc);

  const double nt = static_cast<double>(cfg.trials);
  const double lambda = report.lambda;
  report.predicted_p0 = std::exp(-lambda);
  report.empirical_p0 = static_cast<double>(total.zero_count) / nt;
  report.p0_abs_deviation = std::abs(report.empirical_p0 - report.predicted_p0);
  report.p0_standard_error =
      std::sqrt(report.predicted_p0 * (1.0 - report.predicted_p0) / nt);

  // Variances of the falling factorials under Poisson(lambda).
  const double l2 = lambda * lambda, l3 = l2 * lambda, l4 = l3 * lambda,
               l5 = l4 * lambda;
  const double vars[3] = {lambda, 4 * l3 + 2 * l2, 9 * l5 + 18 * l4 + 6 * l3};
  const double sums[3] = {static_cast<double>(total.sum_m1),
                          static_cast<double>(total.sum_m2),
                          static_cast<double>(total.sum_m3)};
  const double targets[3] = {lambda, l2, l3};
  for (uint32_t m = 1; m <= 3; ++m) {
    PoissonCheckReport::Moment moment;
    moment.order = m;
    moment.empirical = sums[m - 1] / nt;
    moment.target = targets[m - 1];
    moment.model_se = std::sqrt(vars[m - 1] / nt);
    report.moments.push_back(moment);
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

Json PoissonCheckReport::to_json() const {
  Json moments_json = Json::array();
  for (const auto& m : moments)
    moments_json.push_back(Json{{"order", m.order},
                                {"empirical", m.empirical},
                                {"target", m.target},
                                {"model_se", m.model_se}});
  return Json{{"config", config.to_json()},
              {"k_max", k_max},
              {"lambda", rational_json(lambda_exact)},
              {"predicted_p0", predicted_p0},
              {"empirical_p0", empirical_p0},
              {"p0_abs_deviation", p0_abs_deviation},
              {"p0_standard_error", p0_standard_error},
              {"factorial_moments", moments_json},
              {"wall_seconds", wall_seconds}};
}

NCycleTranspositionReport ncycle_transposition(uint32_t n, uint64_t trials,
                                               uint64_t seed,
                                               uint32_t exhaustive_limit) {
  const auto start = Clock::now();
  if (n < 3) throw std::invalid_argument("ncycle_transposition: need n >= 3");
  NCycleTranspositionReport report;
  report.n = n;
  report.exact_probability = Rational(euler_totient(n), n - 1);

  std::vector<uint32_t> full(n);
  for (uint32_t i = 0; i < n; ++i) full[i] = (i + 1) % n + 1;
  Permutation ncycle = Permutation::from_images(full);

  if (n <= exhaustive_limit) {
    // Up to conjugacy fixing the n-cycle, the transposition is (x, n)
    // with x in 1..n-1; a primitive group containing a transposition is
    // the full symmetric group, so block absence decides.
    uint64_t generate = 0;
    for (uint32_t x = 1; x < n; ++x) {
      Permutation transposition = Permutation::from_cycles(n, {{x, n}});
      if (!find_block_system(ncycle, transposition).has_value()) ++generate;
    }
    report.exhaustive_ran = true;
    report.exhaustive_probability = Rational(generate, n - 1);
  }

  if (trials > 0) {
    Permutation base = Permutation::from_cycles(n, {{1, 2}});
    ClassifyOptions copt;
    // Imprimitive outcomes are common here and the sweep exits early on
    // them, so the block check pays for itself well past the default cap.
    copt.block_check_limit = std::max(copt.block_check_limit, n);
    struct Acc {
      uint64_t ge_alt = 0;
      void merge(const Acc& o) { ge_alt += o.ge_alt; }
    };
    std::vector<Acc> accs;
    run_trials<Acc>(
        trials, 0,
        [&](uint64_t trial, Acc& acc) {
          RandomSource rng(seed, trial);
          Permutation transposition = sample_conjugate(base, rng);
          GroupClassification cl = classify(ncycle, transposition, copt, rng);
          if (cl.verdict == Verdict::Alternating || cl.verdict == Verdict::Symmetric)
            ++acc.ge_alt;
        },
        accs);
    Acc total;
    for (const auto& acc : accs) total.merge(acc);
    report.trials = trials;
    report.estimate = wilson_interval(total.ge_alt, trials);
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

Json NCycleTranspositionReport::to_json() const {
  Json j{{"n", n},
         {"exact_probability", rational_json(exact_probability)},
         {"exhaustive_ran", exhaustive_ran},
         {"trials", trials},
         {"wall_seconds", wall_seconds}};
  if (exhaustive_ran)
    j["exhaustive_probability"] = rational_json(exhaustive_probability);
  if (estimate)
    j["estimate"] = Json{{"point", estimate->point}, {"lo", estimate->lo},
                         {"hi", estimate->hi}};
  return j;
}

TwoCycleCollisionReport two_cycle_collision(const ExperimentConfig& cfg) {
  const auto start = Clock::now();
  if (cfg.spec1.kind != ClassSpec::Kind::Type ||
      cfg.spec2.kind != ClassSpec::Kind::Type)
    throw std::invalid_argument("two_cycle_collision requires explicit cycle types");

  TwoCycleCollisionReport report;
  report.config = cfg;
  report.trials = cfg.trials;
  const double c2 = cfg.spec1.type->count(2);
  const double c2p = cfg.spec2.type->count(2);
  const double nn = static_cast<double>(cfg.n) * cfg.n;
  report.reference_shape = 1.0 - std::exp(-c2 * c2p / nn);

  PairSampler sampler(cfg);
  struct Acc {
    uint64_t collisions = 0;
    void merge(const Acc& o) { collisions += o.collisions; }
  };
  std::vector<Acc> accs;
  run_trials<Acc>(
      cfg.trials, cfg.workers,
      [&](uint64_t trial, Acc& acc) {
        RandomSource rng(cfg.seed, cfg.stream_offset + trial);
        Permutation p = sampler.draw_first(rng);
        Permutation q = sampler.draw_second(rng);
        const uint32_t* pi = p.raw().data();
        const uint32_t* qi = q.raw().data();
        for (uint32_t x = 0; x < cfg.n; ++x) {
          if (pi[x] != x && pi[x] == qi[x] && pi[pi[x]] == x && qi[qi[x]] == x) {
            ++acc.collisions;
            break;
          }
        }
      },
      accs);
  Acc total;
  for (const auto& acc : accs) total.merge(acc);
  report.collision_probability = wilson_interval(total.collisions, cfg.trials);
  report.wall_seconds = seconds_since(start);
  return report;
}

Json TwoCycleCollisionReport::to_json() const {
  return Json{{"config", config.to_json()},
              {"trials", trials},
              {"collision_probability",
               Json{{"point", collision_probability.point},
                    {"lo", collision_probability.lo},
                    {"hi", collision_probability.hi}}},
              {"reference_shape", reference_shape},
              {"wall_seconds", wall_seconds}};
}

Json classification_json(const GroupClassification& cl) {
  Json j{{"verdict", verdict_name(cl.verdict)},
         {"orbit_sizes", cl.orbit_sizes},
         {"words_tried", cl.words_tried}};
  if (cl.block_system) j["block_system"] = *cl.block_system;
  if (cl.certificate)
    j["certificate"] = Json{{"word_index", cl.certificate->word_index},
                            {"word_length", cl.certificate->word_length},
                            {"prime", cl.certificate->prime}};
  if (cl.exact_order) j["exact_order"] = cl.exact_order->str();
  return j;
}

Json moment_report_json(const MomentReport& report) {
  Json terms = Json::array();
  for (const auto& [k, value] : report.terms)
    terms.push_back(
        Json{{"k", k},
             {"numerator", boost::multiprecision::numerator(value).str()},
             {"denominator", boost::multiprecision::denominator(value).str()}});
  return Json{{"n", report.n},
              {"class", format_cycle_type(report.type1)},
              {"class2", format_cycle_type(report.type2)},
              {"terms", terms},
              {"sum", rational_json(report.sum)},
              {"truncated_at", report.k_max},
              {"truncated", report.truncated}};
}

}  // namespace permgen

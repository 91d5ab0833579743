// Command line surface for sampling, classification, exact moments and
// the Monte Carlo experiments. Results are JSON records on stdout (or a
// file); tables are CSV. Exit codes: 0 success, 2 configuration error,
// 3 exact/oracle limit exceeded.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "permgen/experiments.hpp"
#include "permgen/order_stats.hpp"
#include "permgen/stab_chain.hpp"
#include "permgen/version.hpp"

namespace {

using permgen::Json;

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << j.dump(2) << "\n";
}

std::ostream& open_csv(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot open CSV file: " + path);
  return file;
}

struct SampleArgs {
  uint32_t n = 0;
  std::string spec = "uniform";
  uint64_t count = 1;
  uint64_t seed = 0;
  uint64_t stream = 0;
  std::string format = "images";
};

int run_sample(const SampleArgs& args) {
  auto spec = permgen::ClassSpec::parse(args.spec, args.n);
  std::optional<permgen::OrderMClassTable> table;
  if (spec.kind == permgen::ClassSpec::Kind::OrderM) {
    table = permgen::enumerate_types_of_order(args.n, spec.m);
    if (table->empty())
      throw permgen::EmptyOrderError("no element of order " +
                                     std::to_string(spec.m) + " in S_" +
                                     std::to_string(args.n));
  }
  for (uint64_t i = 0; i < args.count; ++i) {
    permgen::RandomSource rng(args.seed, args.stream + i);
    permgen::Permutation p =
        spec.kind == permgen::ClassSpec::Kind::Uniform
            ? permgen::sample_uniform(args.n, rng)
            : (spec.kind == permgen::ClassSpec::Kind::OrderM
                   ? permgen::sample_from_table(*table, rng)
                   : permgen::sample_class(*spec.type, rng));
    std::cout << (args.format == "cycles" ? permgen::format_cycles(p)
                                          : permgen::format_images(p))
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random generation in the symmetric group under cycle type restrictions"};
  app.require_subcommand(1);
  // Key=value configuration file; keys are subcommand-scoped, either
  // dotted ("estimate.trials=10000") or in an INI section.
  app.set_config("--config", "", "key=value configuration file");
  app.set_version_flag("--version", permgen::kVersion);

  // sample
  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Draw permutations");
  sample->add_option("--n", sample_args.n, "degree")->required();
  sample->add_option("--spec", sample_args.spec,
                     "uniform, order:m, or a cycle type like 1^3,2^2");
  sample->add_option("--count", sample_args.count, "number of draws");
  sample->add_option("--seed", sample_args.seed, "seed");
  sample->add_option("--stream", sample_args.stream, "stream offset");
  sample->add_option("--format", sample_args.format, "images|cycles")
      ->check(CLI::IsMember({"images", "cycles"}));

  // classify
  struct {
    std::string p, q;
    uint32_t n = 0;
    std::string mode = "certificate";
    uint32_t budget = 200;
    uint32_t oracle_limit = 12;
    uint32_t block_limit = 512;
    uint64_t seed = 0;
    std::string out;
  } cl_args;
  auto* cl = app.add_subcommand("classify", "Classify the group generated by two permutations");
  cl->add_option("--p", cl_args.p, "first permutation")->required();
  cl->add_option("--q", cl_args.q, "second permutation")->required();
  cl->add_option("--n", cl_args.n, "degree (optional with cycle notation)");
  cl->add_option("--mode", cl_args.mode)->check(CLI::IsMember({"exact", "certificate"}));
  cl->add_option("--budget", cl_args.budget, "certificate word budget");
  cl->add_option("--oracle-limit", cl_args.oracle_limit);
  cl->add_option("--block-limit", cl_args.block_limit);
  cl->add_option("--seed", cl_args.seed);
  cl->add_option("--out", cl_args.out, "write JSON here instead of stdout");

  // estimate
  permgen::ExperimentConfig est_cfg;
  std::string est_spec1 = "uniform", est_spec2 = "uniform";
  std::string est_mode = "certificate", est_conj = "class", est_out, est_csv;
  bool est_ab = false;
  auto* est = app.add_subcommand("estimate", "Monte Carlo generation-probability experiment");
  est->add_option("--n", est_cfg.n, "degree")->required();
  est->add_option("--spec1", est_spec1, "first class spec");
  est->add_option("--spec2", est_spec2, "second class spec");
  est->add_option("--trials", est_cfg.trials);
  est->add_option("--seed", est_cfg.seed);
  est->add_option("--stream-offset", est_cfg.stream_offset);
  est->add_option("--mode", est_mode)->check(CLI::IsMember({"exact", "certificate"}));
  est->add_option("--budget", est_cfg.budget);
  est->add_option("--oracle-limit", est_cfg.oracle_limit);
  est->add_option("--block-limit", est_cfg.block_check_limit);
  est->add_option("--workers", est_cfg.workers, "0 = hardware concurrency");
  est->add_option("--conjugate-mode", est_conj)->check(CLI::IsMember({"class", "conjugate"}));
  est->add_flag("--ab", est_ab, "run both conjugate modes and compare");
  est->add_option("--census-kmax", est_cfg.census_k_max);
  est->add_option("--out", est_out, "write JSON here instead of stdout");
  est->add_option("--csv", est_csv, "write per-k orbit statistics CSV here");

  // exact-en
  struct {
    uint32_t n = 0;
    std::string class1, class2;
    uint32_t k_max = 3;
    uint32_t exact_limit = 10;
    std::string out, csv;
  } en_args;
  auto* en = app.add_subcommand("exact-en", "Exact expected small-orbit counts");
  en->add_option("--n", en_args.n, "degree")->required();
  en->add_option("--class1", en_args.class1, "cycle type")->required();
  en->add_option("--class2", en_args.class2, "cycle type")->required();
  en->add_option("--kmax", en_args.k_max);
  en->add_option("--exact-limit", en_args.exact_limit);
  en->add_option("--out", en_args.out);
  en->add_option("--csv", en_args.csv, "CSV of per-k terms");

  // order-stats
  struct {
    uint32_t n = 0;
    uint64_t m = 0;
    double fix_coeff = 1.0;
    double twocycle_frac = 0.25;
    std::string out, csv;
  } os_args;
  auto* os = app.add_subcommand("order-stats", "Fixed-point/2-cycle profile of order-m elements");
  os->add_option("--n", os_args.n, "degree")->required();
  os->add_option("--m", os_args.m, "order")->required();
  os->add_option("--fix-coeff", os_args.fix_coeff, "fixed-point threshold coefficient");
  os->add_option("--twocycle-frac", os_args.twocycle_frac, "2-cycle threshold fraction");
  os->add_option("--out", os_args.out);
  os->add_option("--csv", os_args.csv, "profile CSV (c1,c2,weight,probability)");

  // poisson-check
  permgen::ExperimentConfig pc_cfg;
  std::string pc_class1, pc_class2, pc_out;
  uint32_t pc_kmax = 3;
  auto* pc = app.add_subcommand("poisson-check", "Empirical small-orbit law against the exact mean");
  pc->add_option("--n", pc_cfg.n, "degree")->required();
  pc->add_option("--class1", pc_class1)->required();
  pc->add_option("--class2", pc_class2)->required();
  pc->add_option("--trials", pc_cfg.trials);
  pc->add_option("--seed", pc_cfg.seed);
  pc->add_option("--kmax", pc_kmax);
  pc->add_option("--workers", pc_cfg.workers);
  pc->add_option("--out", pc_out);

  // ncycle-transposition
  struct {
    uint32_t n = 0;
    uint64_t trials = 10000;
    uint64_t seed = 0;
    uint32_t exhaustive_limit = 20;
    std::string out;
  } nt_args;
  auto* nt = app.add_subcommand("ncycle-transposition",
                                "n-cycle plus random transposition experiment");
  nt->add_option("--n", nt_args.n, "degree")->required();
  nt->add_option("--trials", nt_args.trials);
  nt->add_option("--seed", nt_args.seed);
  nt->add_option("--exhaustive-limit", nt_args.exhaustive_limit);
  nt->add_option("--out", nt_args.out);

  // partitions
  struct {
    uint32_t n = 0;
    uint64_t order = 0;
    std::string csv;
  } pa_args;
  auto* pa = app.add_subcommand("partitions", "Cycle types of S_n with class sizes (CSV)");
  pa->add_option("--n", pa_args.n, "degree")->required();
  pa->add_option("--order", pa_args.order, "restrict to types of this order");
  pa->add_option("--csv", pa_args.csv, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sample->parsed()) return run_sample(sample_args);

    if (cl->parsed()) {
      permgen::Permutation p = permgen::parse_permutation(cl_args.p, cl_args.n);
      permgen::Permutation q = permgen::parse_permutation(
          cl_args.q, cl_args.n ? cl_args.n : p.degree());
      if (p.degree() != q.degree() && cl_args.n == 0) {
        uint32_t n = std::max(p.degree(), q.degree());
        p = permgen::parse_permutation(cl_args.p, n);
        q = permgen::parse_permutation(cl_args.q, n);
      }
      permgen::ClassifyOptions opt;
      opt.mode = cl_args.mode == "exact" ? permgen::ClassifyMode::Exact
                                         : permgen::ClassifyMode::Certificate;
      opt.budget = cl_args.budget;
      opt.oracle_limit = cl_args.oracle_limit;
      opt.block_check_limit = cl_args.block_limit;
      permgen::RandomSource rng(cl_args.seed);
      auto result = permgen::classify(p, q, opt, rng);
      emit(permgen::classification_json(result), cl_args.out);
      return 0;
    }

    if (est->parsed()) {
      est_cfg.spec1 = permgen::ClassSpec::parse(est_spec1, est_cfg.n);
      est_cfg.spec2 = permgen::ClassSpec::parse(est_spec2, est_cfg.n);
      est_cfg.mode = est_mode == "exact" ? permgen::ClassifyMode::Exact
                                         : permgen::ClassifyMode::Certificate;
      est_cfg.conjugate_mode = est_conj == "conjugate"
                                   ? permgen::ConjugateMode::RandomConjugate
                                   : permgen::ConjugateMode::InClass;
      if (est_ab) {
        auto cfg_a = est_cfg, cfg_b = est_cfg;
        cfg_a.conjugate_mode = permgen::ConjugateMode::InClass;
        cfg_b.conjugate_mode = permgen::ConjugateMode::RandomConjugate;
        auto ra = permgen::run_generation_experiment(cfg_a);
        auto rb = permgen::run_generation_experiment(cfg_b);
        double pa_hat = ra.ge_alternating.point, pb_hat = rb.ge_alternating.point;
        double nt_d = static_cast<double>(est_cfg.trials);
        double se = std::sqrt(pa_hat * (1 - pa_hat) / nt_d + pb_hat * (1 - pb_hat) / nt_d);
        Json j{{"class_mode", ra.to_json()},
               {"conjugate_mode", rb.to_json()},
               {"difference", pa_hat - pb_hat},
               {"difference_z", se > 0 ? (pa_hat - pb_hat) / se : 0.0}};
        emit(j, est_out);
        return 0;
      }
      auto result = permgen::run_generation_experiment(est_cfg);
      if (!est_csv.empty()) {
        std::ofstream file;
        auto& out = open_csv(file, est_csv);
        out << "k,count_value,frequency\n";
        for (const auto& [k, hist] : result.orbit_k_histogram)
          for (const auto& [value, freq] : hist)
            out << k << ',' << value << ',' << freq << '\n';
      }
      emit(result.to_json(), est_out);
      return 0;
    }

    if (en->parsed()) {
      auto t1 = permgen::parse_cycle_type(en_args.class1);
      auto t2 = permgen::parse_cycle_type(en_args.class2);
      if (t1.n() != en_args.n || t2.n() != en_args.n)
        throw std::invalid_argument("cycle types must partition n");
      auto report = permgen::expected_N(t1, t2, en_args.k_max, en_args.exact_limit);
      if (!en_args.csv.empty()) {
        std::ofstream file;
        auto& out = open_csv(file, en_args.csv);
        out << "k,numerator,denominator\n";
        for (const auto& [k, value] : report.terms)
          out << k << ',' << boost::multiprecision::numerator(value).str() << ','
              << boost::multiprecision::denominator(value).str() << '\n';
      }
      emit(permgen::moment_report_json(report), en_args.out);
      return 0;
    }

    if (os->parsed()) {
      auto profile = permgen::order_m_profile(os_args.n, os_args.m);
      if (!os_args.csv.empty()) {
        std::ofstream file;
        auto& out = open_csv(file, os_args.csv);
        out << "c1,c2,weight,probability_numerator,probability_denominator\n";
        for (const auto& row : profile.rows) {
          permgen::Rational prob(row.weight, profile.total);
          out << row.fixed_points << ',' << row.two_cycles << ',' << row.weight.str()
              << ',' << boost::multiprecision::numerator(prob).str() << ','
              << boost::multiprecision::denominator(prob).str() << '\n';
        }
      }
      auto report = permgen::check_generation_hypotheses(
          os_args.n, os_args.m, {os_args.fix_coeff, os_args.twocycle_frac});
      Json j{{"n", report.n},
             {"m", report.m},
             {"rows", profile.rows.size()},
             {"total_elements", profile.total.str()},
             {"mean_fixed_points", permgen::to_double(profile.mean_fixed_points())},
             {"mean_two_cycles", permgen::to_double(profile.mean_two_cycles())},
             {"fix_coeff", report.fix_coeff},
             {"twocycle_frac", report.twocycle_frac},
             {"fixed_point_threshold", report.fixed_point_threshold},
             {"two_cycle_threshold", report.two_cycle_threshold},
             {"has_small_divisor", report.has_small_divisor},
             {"small_divisor", report.small_divisor},
             {"good_type_exists", report.good_type_exists},
             {"good_type", report.good_type},
             {"mass_fixed_points_violating",
              permgen::to_double(report.mass_fixed_points_violating)},
             {"mass_two_cycles_violating",
              permgen::to_double(report.mass_two_cycles_violating)},
             {"m_is_two", report.m_is_two},
             {"m_even", report.m_even},
             {"almost_sure_condition", report.almost_sure_condition},
             {"positive_prob_condition", report.positive_prob_condition}};
      emit(j, os_args.out);
      return 0;
    }

    if (pc->parsed()) {
      pc_cfg.spec1 = permgen::ClassSpec::parse(pc_class1, pc_cfg.n);
      pc_cfg.spec2 = permgen::ClassSpec::parse(pc_class2, pc_cfg.n);
      auto report = permgen::poisson_check(pc_cfg, pc_kmax);
      emit(report.to_json(), pc_out);
      return 0;
    }

    if (nt->parsed()) {
      auto report = permgen::ncycle_transposition(nt_args.n, nt_args.trials,
                                                  nt_args.seed,
                                                  nt_args.exhaustive_limit);
      emit(report.to_json(), nt_args.out);
      return 0;
    }

    if (pa->parsed()) {
      std::ofstream file;
      auto& out = open_csv(file, pa_args.csv);
      out << "type,weight\n";
      if (pa_args.order > 0) {
        auto table = permgen::enumerate_types_of_order(pa_args.n, pa_args.order);
        for (const auto& entry : table.entries)
          out << permgen::format_cycle_type(entry.type) << ',' << entry.weight.str()
              << '\n';
      } else {
        permgen::for_each_cycle_type(pa_args.n, [&](const permgen::CycleType& t) {
          out << permgen::format_cycle_type(t) << ',' << permgen::class_size(t).str()
              << '\n';
          return true;
        });
      }
      return 0;
    }
  } catch (const permgen::OracleLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const permgen::ExactLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

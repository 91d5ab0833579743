// Python bindings for the core operations: permutation arithmetic,
// samplers, classification, exact moments and the experiment harness.
// Big integers map to Python ints, exact rationals to fractions.Fraction,
// reports to plain dicts mirroring the JSON records.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permgen/blocks.hpp"
#include "permgen/classify.hpp"
#include "permgen/experiments.hpp"
#include "permgen/moments.hpp"
#include "permgen/order_stats.hpp"
#include "permgen/samplers.hpp"
#include "permgen/stab_chain.hpp"
#include "permgen/version.hpp"

namespace py = pybind11;
using namespace permgen;

namespace {

py::int_ to_py_int(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object to_py_fraction(const Rational& r) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py_int(boost::multiprecision::numerator(r)),
                  to_py_int(boost::multiprecision::denominator(r)));
}

py::object json_to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

ClassifyMode parse_mode(const std::string& mode) {
  if (mode == "exact") return ClassifyMode::Exact;
  if (mode == "certificate") return ClassifyMode::Certificate;
  throw std::invalid_argument("mode must be 'exact' or 'certificate'");
}

ExperimentConfig build_config(uint32_t n, const std::string& spec1,
                              const std::string& spec2, uint64_t trials,
                              uint64_t seed, const std::string& mode,
                              uint32_t budget, uint32_t workers,
                              const std::string& conjugate_mode) {
  ExperimentConfig cfg;
  cfg.n = n;
  cfg.spec1 = ClassSpec::parse(spec1, n);
  cfg.spec2 = ClassSpec::parse(spec2, n);
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.mode = parse_mode(mode);
  cfg.budget = budget;
  cfg.workers = workers;
  if (conjugate_mode == "conjugate")
    cfg.conjugate_mode = ConjugateMode::RandomConjugate;
  else if (conjugate_mode != "class")
    throw std::invalid_argument("conjugate_mode must be 'class' or 'conjugate'");
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Random generation in the symmetric group under cycle type restrictions";
  m.attr("__version__") = kVersion;

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<uint32_t>(), py::arg("n"))
      .def_static("from_images", &Permutation::from_images, py::arg("images"))
      .def_static("from_cycles", &Permutation::from_cycles, py::arg("n"),
                  py::arg("cycles"))
      .def_static(
          "parse",
          [](const std::string& text, uint32_t n) {
            return parse_permutation(text, n);
          },
          py::arg("text"), py::arg("n") = 0)
      .def_property_readonly("degree", &Permutation::degree)
      .def("image", &Permutation::image, py::arg("x"))
      .def("images",
           [](const Permutation& p) {
             std::vector<uint32_t> out;
             out.reserve(p.degree());
             for (uint32_t x = 1; x <= p.degree(); ++x) out.push_back(p.image(x));
             return out;
           })
      .def("cycles", &Permutation::cycles)
      .def("is_identity", &Permutation::is_identity)
      .def("__eq__",
           [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__hash__",
           [](const Permutation& p) {
             size_t h = p.degree();
             for (uint32_t v : p.raw()) h = h * 1000003 + v;
             return h;
           })
      .def("__str__", &format_cycles)
      .def("__repr__", [](const Permutation& p) {
        return "Permutation.parse('" + format_cycles(p) + "', n=" +
               std::to_string(p.degree()) + ")";
      });

  m.def("compose", &compose);
  m.def("inverse", &inverse);
  m.def("conjugate", &conjugate);
  m.def("parity", [](const Permutation& p) {
    return parity(p) == Parity::Even ? "even" : "odd";
  });
  m.def("order_of", [](const Permutation& p) { return to_py_int(order_of(p)); });
  m.def("format_images", &format_images);
  m.def("format_cycles", &format_cycles);

  py::class_<CycleType>(m, "CycleType")
      .def(py::init<uint32_t, std::map<uint32_t, uint32_t>>(), py::arg("n"),
           py::arg("counts"))
      .def_static("parse", &parse_cycle_type, py::arg("text"))
      .def_static("identity", &CycleType::identity, py::arg("n"))
      .def_static("single_cycle", &CycleType::single_cycle, py::arg("n"))
      .def_static("from_parts", &CycleType::from_parts, py::arg("parts"))
      .def_property_readonly("n", &CycleType::n)
      .def("count", &CycleType::count, py::arg("j"))
      .def("counts", [](const CycleType& t) { return t.counts(); })
      .def("parts", &CycleType::parts)
      .def("cycle_count", &CycleType::cycle_count)
      .def("order", [](const CycleType& t) { return to_py_int(t.order()); })
      .def("representative", &CycleType::representative)
      .def("__eq__", [](const CycleType& a, const CycleType& b) { return a == b; })
      .def("__str__", &format_cycle_type)
      .def("__repr__", [](const CycleType& t) {
        return "CycleType.parse('" + format_cycle_type(t) + "')";
      });

  m.def("cycle_type_of", &cycle_type_of);
  m.def("class_size", [](const CycleType& t) { return to_py_int(class_size(t)); });

  py::class_<RandomSource>(m, "RandomSource")
      .def(py::init<uint64_t, uint64_t>(), py::arg("seed"), py::arg("stream") = 0)
      .def("next_u64", &RandomSource::next_u64)
      .def("uniform_below", &RandomSource::uniform_below, py::arg("bound"));

  m.def("sample_uniform", &sample_uniform, py::arg("n"), py::arg("rng"));
  m.def("sample_class", &sample_class, py::arg("type"), py::arg("rng"));
  m.def("sample_conjugate", &sample_conjugate, py::arg("p"), py::arg("rng"));
  m.def("sample_order_m", &sample_order_m, py::arg("n"), py::arg("m"),
        py::arg("rng"));
  m.def(
      "enumerate_types_of_order",
      [](uint32_t n, uint64_t m) {
        auto table = enumerate_types_of_order(n, m);
        py::list out;
        for (const auto& entry : table.entries)
          out.append(py::make_tuple(entry.type, to_py_int(entry.weight)));
        return out;
      },
      py::arg("n"), py::arg("m"));

  m.def(
      "orbit_census",
      [](const Permutation& p, const Permutation& q) {
        auto census = orbit_census(p, q);
        py::dict counts;
        for (const auto& [k, nk] : census.counts) counts[py::int_(k)] = nk;
        py::dict out;
        out["n"] = census.n;
        out["counts"] = counts;
        out["small_orbit_total"] = census.small_orbit_total;
        out["two_cycle_orbit_count"] = census.two_cycle_orbit_count;
        return out;
      },
      py::arg("p"), py::arg("q"));
  m.def("is_transitive", &is_transitive);
  m.def("is_primitive", &is_primitive);
  m.def("minimal_block_containing", &minimal_block_containing, py::arg("p"),
        py::arg("q"), py::arg("a"), py::arg("b"));

  m.def(
      "exact_order_oracle",
      [](const Permutation& p, const Permutation& q, uint32_t limit) {
        return to_py_int(exact_order_oracle(p, q, limit));
      },
      py::arg("p"), py::arg("q"), py::arg("limit") = 12);

  m.def(
      "classify",
      [](const Permutation& p, const Permutation& q, const std::string& mode,
         uint32_t budget, uint64_t seed, uint32_t oracle_limit,
         uint32_t block_check_limit) {
        ClassifyOptions opt;
        opt.mode = parse_mode(mode);
        opt.budget = budget;
        opt.oracle_limit = oracle_limit;
        opt.block_check_limit = block_check_limit;
        RandomSource rng(seed);
        return json_to_py(classification_json(classify(p, q, opt, rng)));
      },
      py::arg("p"), py::arg("q"), py::arg("mode") = "certificate",
      py::arg("budget") = 200, py::arg("seed") = 0, py::arg("oracle_limit") = 12,
      py::arg("block_check_limit") = 512);

  m.def("fixed_set_polynomial", [](const CycleType& t) {
    py::list out;
    for (const auto& c : fixed_set_polynomial(t).coefficients)
      out.append(to_py_int(c));
    return out;
  });
  m.def("p_two_regular",
        [](uint64_t k) { return to_py_fraction(p_two_regular(k)); });
  m.def("matchings_to_even", &matchings_to_even);
  m.def("even_to_matchings", &even_to_matchings);
  m.def("transitive_pair_count", [](const CycleType& a, const CycleType& b) {
    return to_py_int(transitive_pair_count(a, b));
  });
  m.def(
      "expected_Nk_exact",
      [](const CycleType& a, const CycleType& b, uint32_t k, uint32_t limit) {
        return to_py_fraction(expected_Nk_exact(a, b, k, limit));
      },
      py::arg("t"), py::arg("t2"), py::arg("k"), py::arg("exact_limit") = 10);
  m.def(
      "expected_N",
      [](const CycleType& a, const CycleType& b, uint32_t k_max, uint32_t limit) {
        return json_to_py(moment_report_json(expected_N(a, b, k_max, limit)));
      },
      py::arg("t"), py::arg("t2"), py::arg("k_max"), py::arg("exact_limit") = 10);
  m.def("common_fixed_point_disjoint_prob",
        [](uint64_t c1, uint64_t c1p, uint64_t n) {
          return to_py_fraction(common_fixed_point_disjoint_prob(c1, c1p, n));
        });
  m.def("fk_upper_bound", &fk_upper_bound);
  m.def("entropy_h", &entropy_h);
  m.def("binom_entropy_bounds", &binom_entropy_bounds);
  m.def(
      "count_invariant_equipartitions",
      [](const Permutation& p, uint32_t k, uint32_t limit) {
        return to_py_int(count_invariant_equipartitions(p, k, limit));
      },
      py::arg("p"), py::arg("k"), py::arg("limit") = 12);

  m.def(
      "order_m_profile",
      [](uint32_t n, uint64_t m) {
        auto profile = order_m_profile(n, m);
        py::list rows;
        for (const auto& row : profile.rows)
          rows.append(py::make_tuple(row.fixed_points, row.two_cycles,
                                     to_py_int(row.weight)));
        py::dict out;
        out["n"] = profile.n;
        out["m"] = profile.m;
        out["rows"] = rows;
        out["total"] = to_py_int(profile.total);
        out["mean_fixed_points"] = to_py_fraction(profile.mean_fixed_points());
        out["mean_two_cycles"] = to_py_fraction(profile.mean_two_cycles());
        return out;
      },
      py::arg("n"), py::arg("m"));
  m.def(
      "class_ratio",
      [](const CycleType& t, uint32_t d, uint32_t k) {
        return to_py_fraction(class_ratio(t, d, k));
      },
      py::arg("t"), py::arg("d"), py::arg("k"));

  m.def(
      "run_generation_experiment",
      [](uint32_t n, const std::string& spec1, const std::string& spec2,
         uint64_t trials, uint64_t seed, const std::string& mode,
         uint32_t budget, uint32_t workers, const std::string& conjugate_mode) {
        auto cfg = build_config(n, spec1, spec2, trials, seed, mode, budget,
                                workers, conjugate_mode);
        return json_to_py(run_generation_experiment(cfg).to_json());
      },
      py::arg("n"), py::arg("spec1") = "uniform", py::arg("spec2") = "uniform",
      py::arg("trials") = 10000, py::arg("seed") = 0,
      py::arg("mode") = "certificate", py::arg("budget") = 200,
      py::arg("workers") = 0, py::arg("conjugate_mode") = "class");
  m.def(
      "poisson_check",
      [](uint32_t n, const std::string& spec1, const std::string& spec2,
         uint64_t trials, uint64_t seed, uint32_t k_max, uint32_t workers) {
        auto cfg = build_config(n, spec1, spec2, trials, seed, "certificate",
                                200, workers, "class");
        return json_to_py(poisson_check(cfg, k_max).to_json());
      },
      py::arg("n"), py::arg("spec1"), py::arg("spec2"),
      py::arg("trials") = 10000, py::arg("seed") = 0, py::arg("k_max") = 3,
      py::arg("workers") = 0);
  m.def(
      "ncycle_transposition",
      [](uint32_t n, uint64_t trials, uint64_t seed, uint32_t exhaustive_limit) {
        return json_to_py(
            ncycle_transposition(n, trials, seed, exhaustive_limit).to_json());
      },
      py::arg("n"), py::arg("trials") = 10000, py::arg("seed") = 0,
      py::arg("exhaustive_limit") = 20);
  m.def(
      "two_cycle_collision",
      [](uint32_t n, const std::string& spec1, const std::string& spec2,
         uint64_t trials, uint64_t seed, uint32_t workers) {
        auto cfg = build_config(n, spec1, spec2, trials, seed, "certificate",
                                200, workers, "class");
        return json_to_py(two_cycle_collision(cfg).to_json());
      },
      py::arg("n"), py::arg("spec1"), py::arg("spec2"),
      py::arg("trials") = 10000, py::arg("seed") = 0, py::arg("workers") = 0);

  m.def("euler_totient", &euler_totient);

  py::register_exception<EmptyOrderError>(m, "EmptyOrderError", PyExc_ValueError);
  py::register_exception<OracleLimitError>(m, "OracleLimitError", PyExc_ValueError);
  py::register_exception<ExactLimitError>(m, "ExactLimitError", PyExc_ValueError);
  py::register_exception<NotTransitiveError>(m, "NotTransitiveError",
                                             PyExc_ValueError);
}

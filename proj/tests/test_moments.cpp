#include <doctest.h>

#include <cmath>
#include <set>

#include "oracle_helpers.hpp"
#include "permgen/moments.hpp"
#include "permgen/orbits.hpp"
#include "permgen/samplers.hpp"

using namespace permgen;

namespace {

CycleType random_type(uint32_t n, RandomSource& rng) {
  std::vector<uint32_t> parts;
  uint32_t remaining = n;
  while (remaining > 0) {
    auto part = static_cast<uint32_t>(1 + rng.uniform_below(remaining));
    parts.push_back(part);
    remaining -= part;
  }
  return CycleType::from_parts(parts);
}

}  // namespace

TEST_CASE("fixed set polynomial on the worked examples") {
  auto ident = fixed_set_polynomial(CycleType::identity(8));
  for (uint32_t k = 0; k <= 8; ++k) CHECK(ident.at(k) == binomial(8, k));

  auto ncyc = fixed_set_polynomial(CycleType::single_cycle(9));
  CHECK(ncyc.at(0) == 1);
  CHECK(ncyc.at(9) == 1);
  for (uint32_t k = 1; k < 9; ++k) CHECK(ncyc.at(k) == 0);

  auto mixed = fixed_set_polynomial(CycleType(4, {{1, 2}, {2, 1}}));
  CHECK(mixed.at(2) == 2);
}

TEST_CASE("fixed set polynomial matches brute enumeration for n <= 10") {
  for (uint32_t n = 1; n <= 10; ++n) {
    for_each_cycle_type(n, [&](const CycleType& t) {
      Permutation rep = t.representative();
      auto poly = fixed_set_polynomial(t);
      for (uint32_t k = 0; k <= n; ++k)
        CHECK(poly.at(k) == oracle::invariant_ksets(rep, k));
      return true;
    });
  }
}

TEST_CASE("fixed set polynomial sums to 2^c") {
  RandomSource rng(64);
  for (int i = 0; i < 60; ++i) {
    uint32_t n = 5 + static_cast<uint32_t>(rng.uniform_below(196));
    CycleType t = random_type(n, rng);
    auto poly = fixed_set_polynomial(t);
    BigInt sum = 0;
    for (const auto& c : poly.coefficients) sum += c;
    CHECK(sum == ipow(BigInt(2), t.cycle_count()));
  }
}

TEST_CASE("transitive matching probability closed form") {
  CHECK(p_two_regular(1) == Rational(1));
  CHECK(p_two_regular(2) == Rational(2, 3));
  CHECK(p_two_regular(3) == Rational(8, 15));

  // Brute force over full type-(2^k) classes, k <= 4.
  for (uint64_t k = 1; k <= 4; ++k) {
    CycleType t(static_cast<uint32_t>(2 * k), {{2, static_cast<uint32_t>(k)}});
    BigInt pairs = class_size(t) * class_size(t);
    uint64_t transitive = oracle::transitive_pairs_brute(t, t);
    CHECK(Rational(transitive, pairs) == p_two_regular(k));
  }
}

TEST_CASE("matchings bijection on the worked examples") {
  Permutation s1 = Permutation::from_cycles(2, {{1, 2}});
  CHECK(matchings_to_even(s1, s1) == s1);

  Permutation a = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
  Permutation b = Permutation::from_cycles(4, {{1, 3}, {2, 4}});
  CHECK(matchings_to_even(a, b) == Permutation::from_cycles(4, {{1, 2, 4, 3}}));

  CHECK_THROWS_AS(matchings_to_even(Permutation(4), Permutation(4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(even_to_matchings(Permutation::from_cycles(3, {{1, 2, 3}})),
                  std::invalid_argument);
}

TEST_CASE("matchings bijection round trip and transitivity, 2k in {2, 4, 6}") {
  for (uint32_t k = 1; k <= 3; ++k) {
    CycleType t(2 * k, {{2, k}});
    auto matchings = oracle::elements_of_type(t);
    std::set<std::vector<uint32_t>> images;
    for (const auto& s : matchings) {
      for (const auto& s2 : matchings) {
        Permutation tau = matchings_to_even(s, s2);
        for (const auto& cycle : tau.cycles()) CHECK(cycle.size() % 2 == 0);
        auto [back1, back2] = even_to_matchings(tau);
        CHECK(back1 == s);
        CHECK(back2 == s2);
        images.insert(tau.raw());
        if (k >= 2)
          CHECK(oracle::transitive_bfs(s, s2) ==
                (cycle_type_of(tau).count(2 * k) == 1));
      }
    }
    // Distinct pairs map to distinct permutations with only even cycles.
    CHECK(images.size() == matchings.size() * matchings.size());
  }
}

TEST_CASE("transitive pair count recursion against brute force, l <= 6") {
  CHECK(transitive_pair_count(CycleType::identity(1), CycleType::identity(1)) == 1);
  CHECK(transitive_pair_count(CycleType(2, {{2, 1}}), CycleType(2, {{2, 1}})) == 1);
  CHECK(transitive_pair_count(CycleType(4, {{2, 2}}), CycleType(4, {{2, 2}})) == 6);

  for (uint32_t l = 1; l <= 6; ++l) {
    std::vector<CycleType> types;
    for_each_cycle_type(l, [&](const CycleType& t) {
      types.push_back(t);
      return true;
    });
    for (const auto& a : types)
      for (const auto& b : types)
        CHECK(transitive_pair_count(a, b) == oracle::transitive_pairs_brute(a, b));
  }
}

TEST_CASE("expected orbit counts on the worked examples") {
  CycleType two_two(4, {{2, 2}});
  CHECK(expected_Nk_exact(two_two, two_two, 2) == Rational(2, 3));

  // Identity against anything: every fixed point of the second class is
  // a shared singleton orbit.
  CycleType ident6 = CycleType::identity(6);
  CycleType other(6, {{1, 2}, {4, 1}});
  CHECK(expected_Nk_exact(ident6, other, 1) == Rational(2));

  CycleType ncyc = CycleType::single_cycle(10);
  for (uint32_t k = 1; k <= 5; ++k)
    CHECK(expected_Nk_exact(ncyc, ncyc, k) == 0);

  CHECK_THROWS_AS(expected_Nk_exact(ident6, ident6, 3, 2), ExactLimitError);
}

TEST_CASE("expected N report") {
  CycleType ident4 = CycleType::identity(4);
  auto report = expected_N(ident4, ident4, 2);
  REQUIRE(report.terms.size() == 2);
  CHECK(report.terms[0].second == Rational(4));
  CHECK(report.terms[1].second == Rational(0));
  CHECK(report.sum == Rational(4));
  CHECK_FALSE(report.truncated);

  auto truncated = expected_N(CycleType::identity(10), CycleType::identity(10), 2);
  CHECK(truncated.truncated);

  CycleType ncyc = CycleType::single_cycle(12);
  CHECK(expected_N(ncyc, ncyc, 6).sum == 0);

  // c_1 = c_1' = 100 against a long cycle at n = 10^4: the k = 1 term
  // dominates and the sum is exactly 1, inside the documented [0.9, 1.2].
  CycleType big(10000, {{1, 100}, {9900, 1}});
  auto big_report = expected_N(big, big, 3);
  CHECK(big_report.sum == Rational(1));
}

TEST_CASE("exact expected counts equal enumeration means, n <= 5 exhaustive") {
  for (uint32_t n = 2; n <= 5; ++n) {
    std::vector<CycleType> types;
    for_each_cycle_type(n, [&](const CycleType& t) {
      types.push_back(t);
      return true;
    });
    for (const auto& a : types) {
      auto first = oracle::elements_of_type(a);
      for (const auto& b : types) {
        auto second = oracle::elements_of_type(b);
        for (uint32_t k = 1; k <= n / 2; ++k) {
          uint64_t total = 0;
          for (const auto& p : first)
            for (const auto& q : second) {
              auto census = orbit_census(p, q);
              auto it = census.counts.find(k);
              total += it == census.counts.end() ? 0 : it->second;
            }
          Rational mean(total, uint64_t(first.size()) * second.size());
          CHECK(expected_Nk_exact(a, b, k) == mean);
        }
      }
    }
  }
}

TEST_CASE("sampled orbit counts track the exact expectation at n = 30") {
  CycleType t(30, {{1, 5}, {5, 5}});
  const uint64_t trials = 100000;
  std::vector<uint64_t> sums(6, 0);
  for (uint64_t i = 0; i < trials; ++i) {
    RandomSource rng(7100, i);
    Permutation p = sample_class(t, rng);
    Permutation q = sample_class(t, rng);
    auto census = orbit_census(p, q);
    for (uint32_t k = 1; k <= 5; ++k) {
      auto it = census.counts.find(k);
      if (it != census.counts.end()) sums[k] += it->second;
    }
  }
  for (uint32_t k = 1; k <= 5; ++k) {
    double exact = to_double(expected_Nk_exact(t, t, k));
    double mean = static_cast<double>(sums[k]) / trials;
    // The counts are near-Poisson; their variance is close to the mean.
    double se = std::sqrt(std::max(exact, 1e-8) / trials);
    CHECK(std::abs(mean - exact) <= 4 * se + 1e-9);
  }
}

TEST_CASE("disjointness probability of random fixed point sets") {
  CHECK(common_fixed_point_disjoint_prob(0, 5, 10) == Rational(1));
  CHECK(common_fixed_point_disjoint_prob(1, 1, 3) == Rational(2, 3));

  RandomSource rng(13);
  for (int i = 0; i < 1000; ++i) {
    uint64_t n = 2 + rng.uniform_below(400);
    uint64_t c1 = rng.uniform_below(n + 1);
    uint64_t c1p = rng.uniform_below(n + 1);
    Rational p = common_fixed_point_disjoint_prob(c1, c1p, n);
    double bound = std::exp(-static_cast<double>(c1) * c1p / n);
    CHECK(to_double(p) <= bound * (1 + 1e-12));
  }
}

TEST_CASE("fixed point trick: conjugated fixed sets rarely meet") {
  // P(fix(p) meets fix(q^s)) <= c1 c1' / n for uniform s.
  CycleType t(100, {{1, 5}, {95, 1}});
  CycleType t2(100, {{1, 5}, {19, 5}});
  Permutation p = t.representative();
  Permutation q = t2.representative();
  const uint64_t trials = 20000;
  uint64_t hits = 0;
  for (uint64_t i = 0; i < trials; ++i) {
    RandomSource rng(88, i);
    Permutation qc = sample_conjugate(q, rng);
    bool meet = false;
    for (uint32_t x = 1; x <= 100 && !meet; ++x)
      meet = p.image(x) == x && qc.image(x) == x;
    if (meet) ++hits;
  }
  double bound = 5.0 * 5.0 / 100.0;
  double se = std::sqrt(bound * (1 - bound) / trials);
  CHECK(static_cast<double>(hits) / trials <= bound + 4 * se);
}

TEST_CASE("generating function upper bound for invariant k-sets") {
  auto ident20 = CycleType::identity(20);
  double bound = fk_upper_bound(ident20, 10);
  CHECK(bound == doctest::Approx(std::pow(2.0, 20)).epsilon(1e-6));
  CHECK(bound >= to_double(binomial(20, 10)));

  CHECK(fk_upper_bound(CycleType::single_cycle(9), 9) >= 1.0 - 1e-9);

  RandomSource rng(21);
  for (int i = 0; i < 200; ++i) {
    uint32_t n = 2 + static_cast<uint32_t>(rng.uniform_below(59));
    CycleType t = random_type(n, rng);
    auto k = static_cast<uint32_t>(1 + rng.uniform_below(n));
    auto poly = fixed_set_polynomial(t);
    double fk = to_double(poly.at(k));
    CHECK(fk <= fk_upper_bound(t, k) * (1 + 1e-9));
  }
}

TEST_CASE("entropy bound on binomial coefficients") {
  CHECK(entropy_h(0.5) == doctest::Approx(std::log(2.0)));
  CHECK_THROWS_AS(entropy_h(0.0), std::domain_error);
  CHECK_THROWS_AS(entropy_h(1.0), std::domain_error);

  auto bounds_10_5 = binom_entropy_bounds(10, 5);
  CHECK(bounds_10_5.second == doctest::Approx(1024.0));
  CHECK(to_double(binomial(10, 5)) <= bounds_10_5.second);

  for (uint32_t n = 2; n <= 60; ++n) {
    for (uint32_t k = 1; 2 * k <= n; ++k) {
      auto [lo, hi] = binom_entropy_bounds(n, k);
      CHECK(to_double(binomial(n, k)) <= hi * (1 + 1e-12));
      CHECK(lo <= hi);
    }
  }
}

TEST_CASE("invariant equipartition counts") {
  CHECK(count_invariant_equipartitions(Permutation(4), 2) == 3);
  CHECK(count_invariant_equipartitions(
            Permutation::from_cycles(4, {{1, 2, 3, 4}}), 2) == 1);
  CHECK(equipartition_count(4, 2) == 3);
  CHECK(equipartition_count(12, 2) == 462);

  CHECK_THROWS_AS(count_invariant_equipartitions(Permutation(4), 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(count_invariant_equipartitions(Permutation(14), 2),
                  ExactLimitError);

  // Against the plain enumerator for every p in S_n, n <= 6, every k | n;
  // identity counts recover the full partition census.
  for (uint32_t n = 2; n <= 6; ++n) {
    auto everyone = oracle::all_permutations(n);
    for (uint32_t k = 1; k <= n; ++k) {
      if (n % k != 0) continue;
      CHECK(count_invariant_equipartitions(Permutation(n), k) ==
            equipartition_count(n, k));
      for (const auto& p : everyone)
        CHECK(count_invariant_equipartitions(p, k) ==
              oracle::invariant_equipartitions_brute(p, k));
    }
  }
}

#include "permgen/moments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace permgen {

FixedSetPolynomial fixed_set_polynomial(const CycleType& t) {
  const uint32_t n = t.n();
  FixedSetPolynomial poly;
  poly.n = n;
  poly.coefficients.assign(n + 1, BigInt(0));
  poly.coefficients[0] = 1;
  for (const auto& [j, cj] : t.counts()) {
    for (uint32_t rep = 0; rep < cj; ++rep) {
      for (uint32_t k = n; k >= j; --k)
        poly.coefficients[k] += poly.coefficients[k - j];
    }
  }
  return poly;
}

Rational p_two_regular(uint64_t k) {
  if (k == 0) throw std::invalid_argument("p_two_regular: k must be positive");
  BigInt num = ipow(BigInt(4), k) * factorial(k) * factorial(k);
  BigInt den = BigInt(2) * k * factorial(2 * k);
  return Rational(num, den);
}

namespace {

void require_perfect_matching(const Permutation& s) {
  const uint32_t n = s.degree();
  if (n == 0 || n % 2 != 0)
    throw std::invalid_argument("matching must act on an even number of points");
  for (uint32_t x = 0; x < n; ++x) {
    uint32_t y = s.raw()[x];
    if (y == x || s.raw()[y] != x)
      throw std::invalid_argument("permutation is not a fixed-point-free involution");
  }
}

}  // namespace

Permutation matchings_to_even(const Permutation& s, const Permutation& s2) {
  require_perfect_matching(s);
  require_perfect_matching(s2);
  if (s.degree() != s2.degree())
    throw std::invalid_argument("matchings_to_even: degree mismatch");
  const uint32_t n = s.degree();
  std::vector<uint32_t> image(n, n);  // n = undefined marker
  for (uint32_t start = 0; start < n; ++start) {
    if (image[start] != n) continue;
    // Alternate s, s2, s, s2, ... until the walk closes.
    uint32_t x = start;
    bool use_first = true;
    do {
      uint32_t y = use_first ? s.raw()[x] : s2.raw()[x];
      image[x] = y;
      x = y;
      use_first = !use_first;
    } while (x != start);
  }
  std::vector<uint32_t> one_based(n);
  for (uint32_t i = 0; i < n; ++i) one_based[i] = image[i] + 1;
  return Permutation::from_images(one_based);
}

std::pair<Permutation, Permutation> even_to_matchings(const Permutation& t) {
  const uint32_t n = t.degree();
  std::vector<uint32_t> first(n, 0), second(n, 0);
  for (const auto& cycle : t.cycles()) {
    if (cycle.size() % 2 != 0)
      throw std::invalid_argument("even_to_matchings: odd cycle present");
    // cycles() starts each cycle at its least point.
    for (size_t i = 0; i < cycle.size(); i += 2) {
      uint32_t a = cycle[i] - 1, b = cycle[i + 1] - 1;
      first[a] = b + 1;
      first[b] = a + 1;
    }
    for (size_t i = 1; i < cycle.size(); i += 2) {
      uint32_t a = cycle[i] - 1, b = cycle[(i + 1) % cycle.size()] - 1;
      second[a] = b + 1;
      second[b] = a + 1;
    }
  }
  return {Permutation::from_images(first), Permutation::from_images(second)};
}

namespace {

using TypeKey = std::vector<uint32_t>;  // ascending parts

TypeKey key_of(const CycleType& t) { return t.parts(); }

BigInt class_size_of_parts(const TypeKey& parts) {
  if (parts.empty()) return 1;
  return class_size(CycleType::from_parts(parts));
}

// Sub-types D <= C with |D| = s, as count maps over C's distinct lengths.
void enumerate_subtypes(const std::vector<std::pair<uint32_t, uint32_t>>& lengths,
                        size_t idx, uint32_t remaining,
                        std::vector<uint32_t>& chosen,
                        std::vector<std::vector<uint32_t>>& out) {
  if (remaining == 0) {
    out.push_back(chosen);
    return;
  }
  if (idx == lengths.size()) return;
  const auto [len, avail] = lengths[idx];
  const uint32_t max_take = std::min<uint32_t>(avail, remaining / len);
  for (uint32_t take = 0; take <= max_take; ++take) {
    chosen[idx] = take;
    enumerate_subtypes(lengths, idx + 1, remaining - take * len, chosen, out);
  }
  chosen[idx] = 0;
}

struct SubtypeSplit {
  TypeKey sub;        // the chosen parts, ascending
  TypeKey rest;       // what stays behind
  BigInt choose_ways; // prod_j C(c_j, d_j)
};

std::vector<SubtypeSplit> splits_of_size(const CycleType& type, uint32_t s) {
  std::vector<std::pair<uint32_t, uint32_t>> lengths(type.counts().begin(),
                                                     type.counts().end());
  std::vector<uint32_t> chosen(lengths.size(), 0);
  std::vector<std::vector<uint32_t>> raw;
  enumerate_subtypes(lengths, 0, s, chosen, raw);
  std::vector<SubtypeSplit> out;
  out.reserve(raw.size());
  for (const auto& take : raw) {
    SubtypeSplit split;
    split.choose_ways = 1;
    for (size_t i = 0; i < lengths.size(); ++i) {
      const auto [len, avail] = lengths[i];
      for (uint32_t r = 0; r < take[i]; ++r) split.sub.push_back(len);
      for (uint32_t r = 0; r < avail - take[i]; ++r) split.rest.push_back(len);
      if (take[i] > 0) split.choose_ways *= binomial(avail, take[i]);
    }
    out.push_back(std::move(split));
  }
  return out;
}

uint32_t sum_of(const TypeKey& parts) {
  uint32_t s = 0;
  for (uint32_t p : parts) s += p;
  return s;
}

// Ordered pairs with the given types generating a transitive group,
// via the marked-point orbit recursion; memo lives for one top-level call.
class TransitivePairCounter {
 public:
  BigInt count(const TypeKey& d, const TypeKey& d2) {
    uint32_t l = sum_of(d);
    if (l != sum_of(d2))
      throw std::invalid_argument("transitive_pair_count: sizes differ");
    if (l == 0) return 0;
    auto memo_key = std::make_pair(d, d2);
    if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;

    // Every ordered pair decomposes uniquely by the orbit of the marked
    // point: pick the orbit's other points, a transitive pair on them,
    // and an arbitrary pair on the rest. Subtracting the proper-orbit
    // terms from the total pair count leaves the transitive ones.
    BigInt total = class_size_of_parts(d) * class_size_of_parts(d2);
    CycleType type1 = CycleType::from_parts(d);
    CycleType type2 = CycleType::from_parts(d2);
    for (uint32_t s = 1; s < l; ++s) {
      auto splits1 = splits_of_size(type1, s);
      auto splits2 = splits_of_size(type2, s);
      if (splits1.empty() || splits2.empty()) continue;
      BigInt point_choices = binomial(l - 1, s - 1);
      for (const auto& a : splits1) {
        for (const auto& b : splits2) {
          BigInt inner = count(a.sub, b.sub);
          if (inner == 0) continue;
          BigInt rest = class_size_of_parts(a.rest) * class_size_of_parts(b.rest);
          total -= point_choices * inner * rest;
        }
      }
    }
    auto [it, inserted] = memo_.emplace(std::move(memo_key), std::move(total));
    return it->second;
  }

 private:
  std::map<std::pair<TypeKey, TypeKey>, BigInt> memo_;
};

}  // namespace

BigInt transitive_pair_count(const CycleType& d, const CycleType& d2) {
  if (d.n() != d2.n())
    throw std::invalid_argument("transitive_pair_count: sizes differ");
  TransitivePairCounter counter;
  return counter.count(key_of(d), key_of(d2));
}

Rational transitive_pair_probability(const CycleType& d, const CycleType& d2) {
  return Rational(transitive_pair_count(d, d2), class_size(d) * class_size(d2));
}

Rational expected_Nk_exact(const CycleType& t, const CycleType& t2, uint32_t k,
                           uint32_t exact_limit) {
  if (t.n() != t2.n()) throw std::invalid_argument("expected_Nk_exact: n mismatch");
  if (k > t.n()) throw std::invalid_argument("expected_Nk_exact: k exceeds n");
  if (k > exact_limit)
    throw ExactLimitError("k exceeds the exact evaluation limit");
  if (k == 0) return 0;

  TransitivePairCounter counter;
  auto splits1 = splits_of_size(t, k);
  auto splits2 = splits_of_size(t2, k);
  Rational total = 0;
  for (const auto& a : splits1) {
    for (const auto& b : splits2) {
      BigInt trans = counter.count(a.sub, b.sub);
      if (trans == 0) continue;
      BigInt pair_classes = class_size_of_parts(a.sub) * class_size_of_parts(b.sub);
      total += Rational(a.choose_ways * b.choose_ways * trans, pair_classes);
    }
  }
  total /= Rational(binomial(t.n(), k));
  return total;
}

MomentReport expected_N(const CycleType& t, const CycleType& t2, uint32_t k_max,
                        uint32_t exact_limit) {
  MomentReport report(t, t2);
  report.n = t.n();
  report.k_max = k_max;
  for (uint32_t k = 1; k <= k_max; ++k) {
    Rational v = expected_Nk_exact(t, t2, k, exact_limit);
    report.sum += v;
    report.terms.emplace_back(k, std::move(v));
  }
  report.truncated = k_max < t.n() / 2;
  return report;
}

Rational common_fixed_point_disjoint_prob(uint64_t c1, uint64_t c1p, uint64_t n) {
  if (c1 > n || c1p > n)
    throw std::invalid_argument("set sizes exceed the ground set");
  if (c1 + c1p > n) return 0;
  Rational prob = 1;
  for (uint64_t i = 0; i < c1p; ++i)
    prob *= Rational(n - c1 - i, n - i);
  return prob;
}

namespace {

double softplus(double u) {
  if (u > 40) return u;
  if (u < -40) return std::exp(u);
  return std::log1p(std::exp(u));
}

}  // namespace

double fk_upper_bound_log(const CycleType& t, uint32_t k) {
  if (k < 1 || k > t.n())
    throw std::invalid_argument("fk_upper_bound: k out of range");
  // Objective in u = log x: -k u + sum_j c_j softplus(j u); convex.
  auto objective = [&](double u) {
    double v = -static_cast<double>(k) * u;
    for (const auto& [j, cj] : t.counts())
      v += static_cast<double>(cj) * softplus(static_cast<double>(j) * u);
    return v;
  };
  double lo = -60.0, hi = 5.0;
  const double inv_phi = 0.6180339887498949;
  double a = hi - inv_phi * (hi - lo);
  double b = lo + inv_phi * (hi - lo);
  double fa = objective(a), fb = objective(b);
  while (hi - lo > 1e-10 * (1.0 + std::abs(lo) + std::abs(hi))) {
    if (fa < fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - inv_phi * (hi - lo);
      fa = objective(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + inv_phi * (hi - lo);
      fb = objective(b);
    }
  }
  return objective(0.5 * (lo + hi));
}

double fk_upper_bound(const CycleType& t, uint32_t k) {
  return std::exp(fk_upper_bound_log(t, k));
}

double entropy_h(double x) {
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("entropy_h: x must lie in (0, 1)");
  return x * std::log(1.0 / x) + (1.0 - x) * std::log(1.0 / (1.0 - x));
}

std::pair<double, double> binom_entropy_bounds(uint32_t n, uint32_t k) {
  if (k < 1 || 2 * k > n)
    throw std::domain_error("binom_entropy_bounds: need 1 <= k <= n/2");
  double upper = std::exp(entropy_h(static_cast<double>(k) / n) * n);
  double lower = upper / std::sqrt(static_cast<double>(k));
  return {lower, upper};
}

BigInt equipartition_count(uint32_t n, uint32_t k) {
  if (k == 0 || n % k != 0)
    throw std::invalid_argument("equipartition_count: k must divide n");
  return factorial(n) / (factorial(k) * ipow(factorial(n / k), k));
}

namespace {

struct EquipartitionCounter {
  const std::vector<uint32_t>& image;
  uint32_t n, k, cell_size;
  std::vector<int32_t> cell_of;
  std::vector<uint32_t> cell_fill;
  uint32_t cells_open = 0;
  uint64_t found = 0;

  EquipartitionCounter(const std::vector<uint32_t>& img, uint32_t k_)
      : image(img),
        n(static_cast<uint32_t>(img.size())),
        k(k_),
        cell_size(n / k_),
        cell_of(img.size(), -1),
        cell_fill(k_, 0) {}

  // Once a cell fills, its image must fit inside a single cell with
  // enough free room for the not-yet-assigned image points.
  bool image_consistent(uint32_t cell) {
    int32_t target = -1;
    uint32_t assigned = 0;
    for (uint32_t x = 0; x < n; ++x) {
      if (cell_of[x] != static_cast<int32_t>(cell)) continue;
      int32_t tc = cell_of[image[x]];
      if (tc < 0) continue;
      if (target < 0) target = tc;
      if (tc != target) return false;
      ++assigned;
    }
    if (target >= 0 &&
        cell_fill[static_cast<size_t>(target)] + (cell_size - assigned) > cell_size)
      return false;
    return true;
  }

  bool invariant_now() const {
    std::vector<int32_t> maps_to(k, -1);
    for (uint32_t x = 0; x < n; ++x) {
      auto from = static_cast<size_t>(cell_of[x]);
      int32_t to = cell_of[image[x]];
      if (maps_to[from] < 0)
        maps_to[from] = to;
      else if (maps_to[from] != to)
        return false;
    }
    return true;
  }

  void recurse(uint32_t x) {
    if (x == n) {
      if (invariant_now()) ++found;
      return;
    }
    for (uint32_t cell = 0; cell < cells_open; ++cell) {
      if (cell_fill[cell] == cell_size) continue;
      cell_of[x] = static_cast<int32_t>(cell);
      ++cell_fill[cell];
      bool ok = cell_fill[cell] < cell_size || image_consistent(cell);
      if (ok) recurse(x + 1);
      --cell_fill[cell];
      cell_of[x] = -1;
    }
    if (cells_open < k) {
      uint32_t cell = cells_open++;
      cell_of[x] = static_cast<int32_t>(cell);
      ++cell_fill[cell];
      recurse(x + 1);
      --cell_fill[cell];
      cell_of[x] = -1;
      --cells_open;
    }
  }
};

}  // namespace

BigInt count_invariant_equipartitions(const Permutation& p, uint32_t k,
                                      uint32_t limit) {
  const uint32_t n = p.degree();
  if (n > limit)
    throw ExactLimitError("degree exceeds the equipartition enumeration limit");
  if (k == 0 || n % k != 0)
    throw std::invalid_argument("count_invariant_equipartitions: k must divide n");
  EquipartitionCounter counter(p.raw(), k);
  counter.recurse(0);
  return BigInt(counter.found);
}

}  // namespace permgen

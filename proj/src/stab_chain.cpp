#include "permgen/stab_chain.hpp"

#include <utility>

namespace permgen {

namespace {

uint32_t first_moved_point(const Permutation& g) {
  const auto& img = g.raw();
  for (uint32_t x = 0; x < img.size(); ++x)
    if (img[x] != x) return x;
  return 0;
}

}  // namespace

StabilizerChain::StabilizerChain(const std::vector<Permutation>& generators,
                                 uint32_t n)
    : n_(n) {
  for (const auto& g : generators) {
    if (g.degree() != n_) throw std::invalid_argument("generator degree mismatch");
    if (g.is_identity()) continue;
    size_t j = 0;
    while (j < levels_.size() && g.raw()[levels_[j].base] == levels_[j].base) ++j;
    if (j == levels_.size()) {
      Level level;
      level.base = first_moved_point(g);
      levels_.push_back(std::move(level));
    }
    for (size_t l = 0; l <= j && l < levels_.size(); ++l)
      levels_[l].gens.push_back(g);
  }
  build();
}

void StabilizerChain::rebuild_orbit(size_t level) {
  Level& lv = levels_[level];
  lv.orbit.clear();
  lv.transversal.clear();
  lv.transversal_at.assign(n_, -1);
  lv.orbit.push_back(lv.base);
  lv.transversal_at[lv.base] = 0;
  lv.transversal.push_back(Permutation(n_));
  for (size_t i = 0; i < lv.orbit.size(); ++i) {
    uint32_t point = lv.orbit[i];
    for (const auto& g : lv.gens) {
      uint32_t image = g.raw()[point];
      if (lv.transversal_at[image] < 0) {
        lv.transversal_at[image] = static_cast<int64_t>(lv.orbit.size());
        lv.orbit.push_back(image);
        lv.transversal.push_back(compose(lv.transversal[i], g));
      }
    }
  }
}

std::pair<Permutation, size_t> StabilizerChain::sift(const Permutation& g,
                                                     size_t from) const {
  Permutation h = g;
  for (size_t l = from; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    uint32_t image = h.raw()[lv.base];
    if (image == lv.base) continue;
    int64_t at = lv.transversal_at[image];
    if (at < 0) return {std::move(h), l};
    h = compose(h, inverse(lv.transversal[static_cast<size_t>(at)]));
  }
  return {std::move(h), levels_.size()};
}

void StabilizerChain::build() {
  if (levels_.empty()) return;
  // levels_ may reallocate when a new level is appended, so index it
  // directly rather than holding references across the extension step.
  size_t i = levels_.size() - 1;
  while (true) {
    rebuild_orbit(i);
    bool extended = false;
    const size_t orbit_size = levels_[i].orbit.size();
    for (size_t oi = 0; !extended && oi < orbit_size; ++oi) {
      const size_t gen_count = levels_[i].gens.size();
      for (size_t si = 0; si < gen_count; ++si) {
        uint32_t delta = levels_[i].orbit[oi];
        uint32_t delta_s = levels_[i].gens[si].raw()[delta];
        Permutation schreier = compose(
            compose(levels_[i].transversal[oi], levels_[i].gens[si]),
            inverse(levels_[i].transversal[static_cast<size_t>(
                levels_[i].transversal_at[delta_s])]));
        auto [h, j] = sift(schreier, i + 1);
        if (h.is_identity()) continue;
        if (j == levels_.size()) {
          Level fresh;
          fresh.base = first_moved_point(h);
          levels_.push_back(std::move(fresh));
        }
        for (size_t l = i + 1; l <= j && l < levels_.size(); ++l)
          levels_[l].gens.push_back(h);
        i = j;
        extended = true;
        break;
      }
    }
    if (extended) continue;
    if (i == 0) break;
    --i;
  }
}

BigInt StabilizerChain::order() const {
  BigInt total = 1;
  for (const auto& lv : levels_) total *= static_cast<uint64_t>(lv.orbit.size());
  return total;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != n_) return false;
  auto [residue, level] = sift(g, 0);
  return residue.is_identity();
}

BigInt exact_order_oracle(const Permutation& p, const Permutation& q,
                          uint32_t limit) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("exact_order_oracle: degree mismatch");
  if (p.degree() > limit)
    throw OracleLimitError("degree exceeds the exact oracle limit");
  return StabilizerChain({p, q}, p.degree()).order();
}

}  // namespace permgen

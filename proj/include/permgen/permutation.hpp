#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permgen/bigint.hpp"

namespace permgen {

enum class Parity { Even, Odd };

/// A bijection on {1,...,n}. Points are 1-based at every interface;
/// storage is 0-based (raw()).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(uint32_t n);  // identity

  static Permutation from_images(const std::vector<uint32_t>& images_one_based);
  static Permutation from_cycles(uint32_t n,
                                 const std::vector<std::vector<uint32_t>>& cycles);

  uint32_t degree() const { return static_cast<uint32_t>(images_.size()); }
  uint32_t image(uint32_t x) const { return images_[x - 1] + 1; }

  const std::vector<uint32_t>& raw() const { return images_; }

  bool is_identity() const;

  /// Disjoint cycles, each rotated to start at its least point,
  /// sorted by that point. Fixed points included.
  std::vector<std::vector<uint32_t>> cycles() const;

  bool operator==(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<uint32_t> raw_images)
      : images_(std::move(raw_images)) {}

  std::vector<uint32_t> images_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation conjugate(const Permutation&, const Permutation&);
};

/// x^(pq) = (x^p)^q: apply p first, then q.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// s^-1 p s; has the same cycle type as p, and fix(p^s) = fix(p)^s.
Permutation conjugate(const Permutation& p, const Permutation& s);

Parity parity(const Permutation& p);
BigInt order_of(const Permutation& p);

std::string format_images(const Permutation& p);
std::string format_cycles(const Permutation& p);
/// Accepts either a one-line image list ("2 1 4 3") or cycle notation
/// ("(1 2)(3 4)"). For cycle notation n defaults to the largest point
/// mentioned unless given explicitly.
Permutation parse_permutation(const std::string& text, uint32_t n = 0);

}  // namespace permgen

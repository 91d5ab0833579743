#include "permgen/cycle_type.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permgen {

CycleType::CycleType(uint32_t n, std::map<uint32_t, uint32_t> counts)
    : n_(n), counts_(std::move(counts)) {
  uint64_t total = 0;
  for (auto it = counts_.begin(); it != counts_.end();) {
    if (it->second == 0) {
      it = counts_.erase(it);
      continue;
    }
    if (it->first == 0) throw std::invalid_argument("cycle length must be positive");
    total += static_cast<uint64_t>(it->first) * it->second;
    ++it;
  }
  if (total != n_) throw std::invalid_argument("cycle lengths do not sum to n");
  if (n_ == 0) throw std::invalid_argument("n must be positive");
}

CycleType CycleType::identity(uint32_t n) { return CycleType(n, {{1, n}}); }

CycleType CycleType::single_cycle(uint32_t n) { return CycleType(n, {{n, 1}}); }

CycleType CycleType::from_parts(const std::vector<uint32_t>& parts) {
  std::map<uint32_t, uint32_t> counts;
  uint32_t n = 0;
  for (uint32_t part : parts) {
    ++counts[part];
    n += part;
  }
  return CycleType(n, std::move(counts));
}

uint32_t CycleType::count(uint32_t j) const {
  auto it = counts_.find(j);
  return it == counts_.end() ? 0 : it->second;
}

uint64_t CycleType::cycle_count() const {
  uint64_t c = 0;
  for (const auto& [j, cj] : counts_) c += cj;
  return c;
}

std::vector<uint32_t> CycleType::parts() const {
  std::vector<uint32_t> out;
  for (const auto& [j, cj] : counts_)
    for (uint32_t i = 0; i < cj; ++i) out.push_back(j);
  return out;
}

BigInt CycleType::order() const {
  BigInt m = 1;
  for (const auto& [j, cj] : counts_) m = boost::multiprecision::lcm(m, BigInt(j));
  return m;
}

Parity CycleType::parity() const {
  return ((n_ - cycle_count()) % 2 == 0) ? Parity::Even : Parity::Odd;
}

Permutation CycleType::representative() const {
  std::vector<std::vector<uint32_t>> cycles;
  uint32_t next = 1;
  for (const auto& [j, cj] : counts_) {
    for (uint32_t i = 0; i < cj; ++i) {
      std::vector<uint32_t> cyc(j);
      std::iota(cyc.begin(), cyc.end(), next);
      next += j;
      cycles.push_back(std::move(cyc));
    }
  }
  return Permutation::from_cycles(n_, cycles);
}

bool CycleType::operator<(const CycleType& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  return parts() < other.parts();
}

CycleType cycle_type_of(const Permutation& p) {
  const uint32_t n = p.degree();
  std::map<uint32_t, uint32_t> counts;
  std::vector<uint8_t> seen(n, 0);
  const uint32_t* img = p.raw().data();
  for (uint32_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    uint32_t len = 0;
    uint32_t x = s;
    do {
      seen[x] = 1;
      ++len;
      x = img[x];
    } while (x != s);
    ++counts[len];
  }
  return CycleType(n, std::move(counts));
}

BigInt class_size(const CycleType& t) {
  BigInt denom = 1;
  for (const auto& [j, cj] : t.counts()) {
    denom *= ipow(BigInt(j), cj);
    denom *= factorial(cj);
  }
  return factorial(t.n()) / denom;
}

std::string format_cycle_type(const CycleType& t) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, cj] : t.counts()) {
    if (!first) os << ',';
    first = false;
    os << j;
    if (cj != 1) os << '^' << cj;
  }
  return os.str();
}

CycleType parse_cycle_type(const std::string& text) {
  std::map<uint32_t, uint32_t> counts;
  std::istringstream is(text);
  std::string token;
  while (std::getline(is, token, ',')) {
    size_t a = token.find_first_not_of(" \t");
    size_t b = token.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    token = token.substr(a, b - a + 1);
    size_t caret = token.find('^');
    uint32_t j = 0, c = 1;
    try {
      if (caret == std::string::npos) {
        j = static_cast<uint32_t>(std::stoul(token));
      } else {
        j = static_cast<uint32_t>(std::stoul(token.substr(0, caret)));
        c = static_cast<uint32_t>(std::stoul(token.substr(caret + 1)));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad cycle type token: " + token);
    }
    if (j == 0) throw std::invalid_argument("cycle length must be positive");
    counts[j] += c;
  }
  if (counts.empty()) throw std::invalid_argument("empty cycle type");
  uint64_t n = 0;
  for (const auto& [j, cj] : counts) n += static_cast<uint64_t>(j) * cj;
  return CycleType(static_cast<uint32_t>(n), std::move(counts));
}

namespace {

bool walk_partitions(uint32_t remaining, uint32_t max_part,
                     std::vector<uint32_t>& parts,
                     const std::function<bool(const CycleType&)>& visit) {
  if (remaining == 0) {
    std::vector<uint32_t> ascending(parts.rbegin(), parts.rend());
    return visit(CycleType::from_parts(ascending));
  }
  for (uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
    parts.push_back(part);
    bool keep_going = walk_partitions(remaining - part, part, parts, visit);
    parts.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

void for_each_cycle_type(uint32_t n,
                         const std::function<bool(const CycleType&)>& visit) {
  std::vector<uint32_t> parts;
  walk_partitions(n, n, parts, visit);
}

}  // namespace permgen

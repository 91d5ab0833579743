#include "permgen/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "permgen/cycle_type.hpp"

namespace permgen {

Permutation::Permutation(uint32_t n) : images_(n) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation Permutation::from_images(const std::vector<uint32_t>& images_one_based) {
  const auto n = static_cast<uint32_t>(images_one_based.size());
  std::vector<uint32_t> raw(n);
  std::vector<uint8_t> seen(n, 0);
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t y = images_one_based[i];
    if (y < 1 || y > n || seen[y - 1])
      throw std::invalid_argument("image list is not a bijection on 1..n");
    seen[y - 1] = 1;
    raw[i] = y - 1;
  }
  return Permutation(std::move(raw));
}

Permutation Permutation::from_cycles(uint32_t n,
                                     const std::vector<std::vector<uint32_t>>& cycles) {
  Permutation p(n);
  std::vector<uint8_t> seen(n, 0);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      uint32_t x = cyc[i];
      uint32_t y = cyc[(i + 1) % cyc.size()];
      if (x < 1 || x > n) throw std::invalid_argument("cycle point out of range");
      if (seen[x - 1]) throw std::invalid_argument("point repeated across cycles");
      seen[x - 1] = 1;
      p.images_[x - 1] = y - 1;
    }
  }
  return p;
}

bool Permutation::is_identity() const {
  for (uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::vector<uint32_t>> Permutation::cycles() const {
  const uint32_t n = degree();
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint8_t> seen(n, 0);
  for (uint32_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<uint32_t> cyc;
    uint32_t x = s;
    do {
      seen[x] = 1;
      cyc.push_back(x + 1);
      x = images_[x];
    } while (x != s);
    out.push_back(std::move(cyc));
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  const uint32_t n = p.degree();
  std::vector<uint32_t> r(n);
  const uint32_t* pp = p.images_.data();
  const uint32_t* qq = q.images_.data();
  for (uint32_t i = 0; i < n; ++i) r[i] = qq[pp[i]];
  return Permutation(std::move(r));
}

Permutation inverse(const Permutation& p) {
  const uint32_t n = p.degree();
  std::vector<uint32_t> r(n);
  for (uint32_t i = 0; i < n; ++i) r[p.images_[i]] = i;
  return Permutation(std::move(r));
}

Permutation conjugate(const Permutation& p, const Permutation& s) {
  if (p.degree() != s.degree())
    throw std::invalid_argument("conjugate: degree mismatch");
  const uint32_t n = p.degree();
  std::vector<uint32_t> r(n);
  const uint32_t* pp = p.images_.data();
  const uint32_t* ss = s.images_.data();
  for (uint32_t i = 0; i < n; ++i) r[ss[i]] = ss[pp[i]];
  return Permutation(std::move(r));
}

Parity parity(const Permutation& p) {
  const uint32_t n = p.degree();
  std::vector<uint8_t> seen(n, 0);
  uint64_t cycles = 0;
  const uint32_t* img = p.raw().data();
  for (uint32_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++cycles;
    uint32_t x = s;
    do {
      seen[x] = 1;
      x = img[x];
    } while (x != s);
  }
  return ((n - cycles) % 2 == 0) ? Parity::Even : Parity::Odd;
}

BigInt order_of(const Permutation& p) { return cycle_type_of(p).order(); }

std::string format_images(const Permutation& p) {
  std::ostringstream os;
  for (uint32_t x = 1; x <= p.degree(); ++x) {
    if (x > 1) os << ' ';
    os << p.image(x);
  }
  return os.str();
}

std::string format_cycles(const Permutation& p) {
  std::ostringstream os;
  bool any = false;
  for (const auto& cyc : p.cycles()) {
    if (cyc.size() == 1) continue;
    any = true;
    os << '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ' ';
      os << cyc[i];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

namespace {

Permutation parse_cycle_notation(const std::string& text, uint32_t n) {
  std::vector<std::vector<uint32_t>> cycles;
  uint32_t max_point = 0;
  size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
      continue;
    }
    if (ch != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<uint32_t> cyc;
    while (i < text.size() && text[i] != ')') {
      while (i < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
        ++i;
      if (i >= text.size() || text[i] == ')') break;
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected point in cycle notation");
      uint32_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v == 0) throw std::invalid_argument("points are 1-based");
      cyc.push_back(v);
      max_point = std::max(max_point, v);
    }
    if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
    ++i;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  if (n == 0) n = max_point;
  if (max_point > n) throw std::invalid_argument("cycle point exceeds n");
  return Permutation::from_cycles(n, cycles);
}

}  // namespace

Permutation parse_permutation(const std::string& text, uint32_t n) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw std::invalid_argument("empty permutation text");
  if (text[first] == '(') return parse_cycle_notation(text, n);

  std::istringstream is(text);
  std::vector<uint32_t> images;
  uint32_t v;
  while (is >> v) images.push_back(v);
  if (!is.eof()) throw std::invalid_argument("bad token in image list");
  if (n != 0 && images.size() != n)
    throw std::invalid_argument("image list length differs from n");
  return Permutation::from_images(images);
}

}  // namespace permgen

#pragma once
// Binary-to-quaternary lifting and GC-balanced DNA markers.
//
// k binary codewords of equal length lift to one Q-ary string, Q = 2^k:
// symbol j has binary expansion (c^1_j, ..., c^k_j) with c^1 the most
// significant bit. Deletions act on whole symbols, so splitting a Q-ary
// trace componentwise yields k binary deletion-channel traces.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dsc/strings.hpp"

namespace dsc {

inline QaryString lift_to_quaternary(const std::vector<std::vector<std::uint8_t>>& components) {
  if (components.empty()) throw std::invalid_argument("no components");
  const std::size_t k = components.size();
  const std::size_t len = components[0].size();
  for (const auto& c : components)
    if (c.size() != len) throw std::invalid_argument("component length mismatch");
  QaryString out{static_cast<std::uint32_t>(1u << k), {}};
  out.sym.reserve(len);
  for (std::size_t j = 0; j < len; ++j) {
    std::uint8_t sym = 0;
    for (std::size_t i = 0; i < k; ++i)
      sym = static_cast<std::uint8_t>((sym << 1) | (components[i][j] & 1u));
    out.sym.push_back(sym);
  }
  return out;
}

inline std::vector<std::vector<std::uint8_t>> split_from_quaternary(const QaryString& x,
                                                                    std::size_t k) {
  std::vector<std::vector<std::uint8_t>> components(
      k, std::vector<std::uint8_t>(x.size()));
  for (std::size_t j = 0; j < x.size(); ++j)
    for (std::size_t i = 0; i < k; ++i)
      components[i][j] = (x.sym[j] >> (k - 1 - i)) & 1u;
  return components;
}

// (AC)^L (TG)^L with L = ceil(25 log2 n): exactly half the symbols are G/C
// and no two adjacent symbols are equal.
inline QaryString gc_balanced_markers(std::size_t n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  const std::size_t L = static_cast<std::size_t>(
      std::ceil(25.0 * std::log2(static_cast<double>(n))));
  QaryString out{4, {}};
  out.sym.reserve(4 * L);
  for (std::size_t i = 0; i < L; ++i) {
    out.sym.push_back(0);  // A
    out.sym.push_back(1);  // C
  }
  for (std::size_t i = 0; i < L; ++i) {
    out.sym.push_back(3);  // T
    out.sym.push_back(2);  // G
  }
  return out;
}

}  // namespace dsc

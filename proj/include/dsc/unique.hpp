#pragma once
// Reconstructing a string of known length from the SET of its length-L
// substrings: the distinct-(L-1)-substrings sufficiency test, the period
// obstruction, and an exact assembly oracle.
//
// Assembly walks the de Bruijn-style graph whose arcs are the spectrum
// members; arcs may be reused because the spectrum carries no
// multiplicities. A completed walk of n - L + 1 arcs is a candidate, and it
// is kept only when its own spectrum equals the input set (every member
// covered, which construction alone does not guarantee).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "dsc/debruijn.hpp"
#include "dsc/strings.hpp"

namespace dsc {

// Sufficient condition: all (L-1)-substrings of x distinct.
inline bool ukkonen_sufficient(const QaryString& x, std::size_t L) {
  if (L < 2 || L > x.size()) throw std::invalid_argument("need 2 <= L <= n");
  auto m = substring_spectrum(x, L - 1, true);
  for (std::size_t i = 1; i < m.entries.size(); ++i)
    if (m.entries[i] == m.entries[i - 1]) return false;
  return true;
}

// Impossibility regime marker: the period of x is at most L.
inline bool period_obstructed(const QaryString& x, std::size_t L) {
  if (L < 1 || L > x.size()) throw std::invalid_argument("need 1 <= L <= n");
  return period(x) <= L;
}

// Exactly the length-n strings whose L-spectrum (as a set) equals the given
// one, in lexicographic order. Dead-end states (current (L-1)-mer, remaining
// steps) are memoized; coverage is re-checked per emitted candidate because
// arc reuse makes it independent of the walk structure.
inline std::vector<QaryString> assemble(const SubstringSpectrum& spectrum, std::uint64_t n) {
  const std::size_t L = spectrum.L;
  if (L < 1 || n < L) throw std::invalid_argument("inconsistent target length");
  if (spectrum.entries.empty()) return {};
  const std::uint64_t q = spectrum.q;
  const std::uint64_t suffix_mod = pow_u64(q, L - 1);
  const std::size_t steps = static_cast<std::size_t>(n - L + 1);

  // Arcs grouped by (L-1)-prefix, ascending by final symbol.
  std::map<std::uint64_t, std::vector<std::uint64_t>> arcs_from;
  for (std::uint64_t w : spectrum.entries) arcs_from[w / q].push_back(w);

  std::map<std::pair<std::uint64_t, std::size_t>, bool> viable;
  auto can_extend = [&](auto&& self, std::uint64_t vertex, std::size_t left) -> bool {
    if (left == 0) return true;
    auto key = std::make_pair(vertex, left);
    if (auto it = viable.find(key); it != viable.end()) return it->second;
    bool ok = false;
    if (auto it = arcs_from.find(vertex); it != arcs_from.end())
      for (std::uint64_t w : it->second)
        if (self(self, w % suffix_mod, left - 1)) { ok = true; break; }
    return viable[key] = ok;
  };

  std::vector<QaryString> out;
  std::vector<std::uint64_t> walk;  // arc codes of the current path
  auto emit = [&](std::uint64_t start_vertex) {
    QaryString x{static_cast<std::uint32_t>(q), {}};
    x.sym = kmer_from_code(static_cast<std::uint32_t>(q), L - 1, start_vertex).sym;
    for (std::uint64_t w : walk) x.sym.push_back(static_cast<std::uint8_t>(w % q));
    auto sp = substring_spectrum(x, L, false);
    if (sp.entries == spectrum.entries) out.push_back(std::move(x));
  };
  auto dfs = [&](auto&& self, std::uint64_t start, std::uint64_t vertex,
                 std::size_t left) -> void {
    if (left == 0) {
      emit(start);
      return;
    }
    auto it = arcs_from.find(vertex);
    if (it == arcs_from.end()) return;
    for (std::uint64_t w : it->second) {
      if (!can_extend(can_extend, w % suffix_mod, left - 1)) continue;
      walk.push_back(w);
      self(self, start, w % suffix_mod, left - 1);
      walk.pop_back();
    }
  };

  std::vector<std::uint64_t> starts;
  for (const auto& [v, _] : arcs_from) starts.push_back(v);
  for (std::uint64_t v : starts) dfs(dfs, v, v, steps);
  std::sort(out.begin(), out.end());
  return out;
}

// Oracle: x is uniquely L-reconstructable iff assembly of its own spectrum
// returns exactly {x}. Guarded by the enumeration budget q^n <= 2^20.
inline bool is_uniquely_reconstructable(const QaryString& x, std::size_t L) {
  long double states = 1;
  for (std::size_t i = 0; i < x.size(); ++i) states *= x.q;
  if (states > (1 << 20)) throw ResourceError("uniqueness oracle budget is q^n <= 2^20");
  auto candidates = assemble(substring_spectrum(x, L, false), x.size());
  return candidates.size() == 1 && candidates[0] == x;
}

}  // namespace dsc

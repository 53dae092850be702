#pragma once
// Deletion-channel traces and Bitwise Majority Alignment.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dsc/rng.hpp"
#include "dsc/strings.hpp"

namespace dsc {

// Each symbol survives independently with probability 1 - q_del; traces are
// drawn sequentially from the given stream, so a fixed seed fixes them all.
inline std::vector<QaryString> generate_traces(const QaryString& x, double q_del,
                                               std::size_t t, SplitMix64& rng) {
  if (q_del < 0.0 || q_del >= 1.0) throw std::invalid_argument("q_del must be in [0,1)");
  if (t < 1) throw std::invalid_argument("need at least one trace");
  std::vector<QaryString> traces(t, QaryString{x.q, {}});
  for (auto& tr : traces) {
    tr.sym.reserve(x.size());
    for (std::uint8_t s : x.sym)
      if (!rng.bernoulli(q_del)) tr.sym.push_back(s);
  }
  return traces;
}

// Greedy matcher: every deletion-channel output must pass this.
inline bool is_subsequence(const QaryString& candidate, const QaryString& source) {
  if (candidate.q != source.q) return false;
  std::size_t i = 0;
  for (std::size_t j = 0; j < source.size() && i < candidate.size(); ++j)
    if (candidate.sym[i] == source.sym[j]) ++i;
  return i == candidate.size();
}

// BMA consensus of target length n. One cursor per trace; each position
// takes the majority symbol over active cursors (ties to the smallest
// symbol), and only cursors that agreed advance. Cursors past their trace
// end go inactive; with no active cursor the output pads with symbol 0.
inline QaryString bma_reconstruct(const std::vector<QaryString>& traces, std::size_t n,
                                  std::uint32_t q) {
  if (traces.empty()) throw std::invalid_argument("need at least one trace");
  std::vector<std::size_t> cursor(traces.size(), 0);
  QaryString out{q, {}};
  out.sym.reserve(n);
  std::vector<std::size_t> votes(q);
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::fill(votes.begin(), votes.end(), 0);
    bool any = false;
    for (std::size_t i = 0; i < traces.size(); ++i)
      if (cursor[i] < traces[i].size()) {
        ++votes[traces[i].sym[cursor[i]]];
        any = true;
      }
    std::uint8_t winner = 0;
    if (any) {
      for (std::uint32_t s = 1; s < q; ++s)
        if (votes[s] > votes[winner]) winner = static_cast<std::uint8_t>(s);
    }
    out.sym.push_back(winner);
    if (!any) continue;
    for (std::size_t i = 0; i < traces.size(); ++i)
      if (cursor[i] < traces[i].size() && traces[i].sym[cursor[i]] == winner) ++cursor[i];
  }
  return out;
}

}  // namespace dsc

#pragma once
// De Bruijn graphs on l-mers: profile validity, canonical string recovery,
// profile equivalence classes, and exhaustive profile counting.
//
// Vertices are the (l-1)-mers occurring as prefixes or suffixes of an
// allowed l-mer set S; the arc for an l-mer w runs from its prefix (tail)
// to its suffix (head). A profile vector assigns each arc a weight; the
// profile is realizable by a string of length n exactly when the weights
// sum to n-l+1, the flow at every vertex balances (up to one unit of
// surplus at a walk's endpoints for open strings), and the support of the
// weights is weakly connected.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "dsc/profile.hpp"
#include "dsc/strings.hpp"

namespace dsc {

struct InvalidProfileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AllowedKmerSet {
  std::uint32_t q = 2;
  std::uint32_t ell = 1;
  std::vector<std::uint64_t> kmers;  // window codes, sorted ascending

  static AllowedKmerSet full(std::uint32_t q, std::uint32_t ell) {
    AllowedKmerSet s{q, ell, {}};
    s.kmers.resize(pow_u64(q, ell));
    for (std::size_t i = 0; i < s.kmers.size(); ++i) s.kmers[i] = i;
    return s;
  }
};

struct DeBruijnGraph {
  std::uint32_t q = 2;
  std::uint32_t ell = 1;
  std::vector<std::uint64_t> vertices;  // (l-1)-mer codes, sorted
  struct Arc {
    std::uint64_t kmer;  // l-mer code; also the column label
    std::size_t tail;    // vertex index of the (l-1)-prefix
    std::size_t head;    // vertex index of the (l-1)-suffix
  };
  std::vector<Arc> arcs;  // sorted by kmer code

  std::size_t vertex_index(std::uint64_t code) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), code);
    return static_cast<std::size_t>(it - vertices.begin());
  }

  // Incidence matrix B: rows are vertices, columns arcs; +1 at the head,
  // -1 at the tail, all zero for a loop.
  std::vector<std::vector<int>> incidence() const {
    std::vector<std::vector<int>> B(vertices.size(), std::vector<int>(arcs.size(), 0));
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      if (arcs[a].head == arcs[a].tail) continue;
      B[arcs[a].head][a] = 1;
      B[arcs[a].tail][a] = -1;
    }
    return B;
  }
};

inline DeBruijnGraph build_debruijn(const AllowedKmerSet& S) {
  if (S.kmers.empty()) throw std::invalid_argument("empty l-mer set");
  DeBruijnGraph g{S.q, S.ell, {}, {}};
  const std::uint64_t suffix_mod = pow_u64(S.q, S.ell - 1);
  for (std::uint64_t w : S.kmers) {
    g.vertices.push_back(w / S.q);       // prefix: drop last symbol
    g.vertices.push_back(w % suffix_mod);  // suffix: drop first symbol
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
  g.arcs.reserve(S.kmers.size());
  for (std::uint64_t w : S.kmers)
    g.arcs.push_back({w, g.vertex_index(w / S.q), g.vertex_index(w % suffix_mod)});
  return g;
}

namespace detail {

// Net out-flow per vertex and weak connectivity of the positive support.
struct FlowSummary {
  std::vector<std::int64_t> excess;  // out - in per vertex
  bool support_connected = true;
  std::size_t arcs_used = 0;
};

inline FlowSummary flow_summary(const DeBruijnGraph& g,
                                const std::vector<std::int64_t>& weights) {
  FlowSummary f;
  f.excess.assign(g.vertices.size(), 0);
  std::vector<std::vector<std::size_t>> adj(g.vertices.size());
  std::vector<char> touched(g.vertices.size(), 0);
  for (std::size_t a = 0; a < g.arcs.size(); ++a) {
    if (weights[a] == 0) continue;
    ++f.arcs_used;
    f.excess[g.arcs[a].tail] += weights[a];
    f.excess[g.arcs[a].head] -= weights[a];
    adj[g.arcs[a].tail].push_back(g.arcs[a].head);
    adj[g.arcs[a].head].push_back(g.arcs[a].tail);
    touched[g.arcs[a].tail] = touched[g.arcs[a].head] = 1;
  }
  std::size_t start = touched.size();
  for (std::size_t v = 0; v < touched.size(); ++v)
    if (touched[v]) { start = v; break; }
  if (start < touched.size()) {
    std::vector<char> seen(g.vertices.size(), 0);
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[v])
        if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
    }
    for (std::size_t v = 0; v < touched.size(); ++v)
      if (touched[v] && !seen[v]) { f.support_connected = false; break; }
  }
  return f;
}

}  // namespace detail

// True iff some string of length n realizes the weights as its l-mer profile
// restricted to S. With closed set, the string's first and last (l-1)-mers
// must coincide (a closed walk), so every vertex must balance exactly.
inline bool is_valid_profile(const DeBruijnGraph& g, const std::vector<std::int64_t>& weights,
                             std::uint64_t n, bool closed = false) {
  if (weights.size() != g.arcs.size()) return false;
  std::int64_t sum = 0;
  for (std::int64_t w : weights) {
    if (w < 0) return false;
    sum += w;
  }
  if (n + 1 < g.ell || sum != static_cast<std::int64_t>(n - g.ell + 1)) return false;
  auto f = detail::flow_summary(g, weights);
  if (!f.support_connected) return false;
  std::size_t plus = 0, minus = 0;
  for (std::int64_t e : f.excess) {
    if (e == 0) continue;
    if (e == 1) ++plus;
    else if (e == -1) ++minus;
    else return false;
  }
  if (closed) return plus == 0 && minus == 0;
  return plus <= 1 && minus <= 1 && plus == minus;
}

// Convenience overload against the full l-mer set, taking a ProfileVector.
inline bool is_valid_profile(const ProfileVector& u, std::uint64_t n, bool closed = false) {
  auto g = build_debruijn(AllowedKmerSet::full(u.q, u.ell));
  return is_valid_profile(g, u.counts, n, closed);
}

// Canonical string for a valid profile: a Hierholzer walk that always leaves
// along the lexicographically smallest arc with remaining weight. Starts at
// the unique surplus vertex when the walk is open, otherwise at the smallest
// vertex with positive out-degree.
inline QaryString profile_to_string(const DeBruijnGraph& g,
                                    const std::vector<std::int64_t>& weights,
                                    std::uint64_t n) {
  if (!is_valid_profile(g, weights, n, false))
    throw InvalidProfileError("profile is not realizable for this length");
  // Arcs are sorted by kmer code, so per-tail arc lists are already in
  // lexicographic order of the written symbol.
  std::vector<std::vector<std::size_t>> out(g.vertices.size());
  for (std::size_t a = 0; a < g.arcs.size(); ++a)
    if (weights[a] > 0) out[g.arcs[a].tail].push_back(a);
  auto f = detail::flow_summary(g, weights);
  std::size_t start = g.vertices.size();
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (f.excess[v] == 1) { start = v; break; }
  if (start == g.vertices.size()) {
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
      if (!out[v].empty()) { start = v; break; }
  }
  QaryString result{g.q, {}};
  if (start == g.vertices.size()) {
    // No arcs at all (n = l-1): the all-zero string is the canonical choice.
    result.sym.assign(g.ell - 1, 0);
    return result;
  }

  std::vector<std::int64_t> left(weights);
  std::vector<std::size_t> cursor(g.vertices.size(), 0);
  std::vector<std::size_t> walk, stack{start};
  while (!stack.empty()) {
    std::size_t v = stack.back();
    auto& cur = cursor[v];
    while (cur < out[v].size() && left[out[v][cur]] == 0) ++cur;
    if (cur < out[v].size()) {
      std::size_t a = out[v][cur];
      --left[a];
      stack.push_back(g.arcs[a].head);
    } else {
      walk.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(walk.begin(), walk.end());
  // A (tail, head) pair determines its l-mer, so the vertex sequence alone
  // fixes the string: the start vertex's symbols, then one symbol per step.
  QaryString head = kmer_from_code(g.q, g.ell - 1, g.vertices[walk.front()]);
  result.sym = head.sym;
  for (std::size_t i = 1; i < walk.size(); ++i)
    result.sym.push_back(static_cast<std::uint8_t>(g.vertices[walk[i]] % g.q));
  return result;
}

inline QaryString profile_to_string(const ProfileVector& u, std::uint64_t n) {
  auto g = build_debruijn(AllowedKmerSet::full(u.q, u.ell));
  return profile_to_string(g, u.counts, n);
}

// Partition indices of the input strings by profile equality; classes and
// their members are ordered by first appearance.
inline std::vector<std::vector<std::size_t>> equivalence_classes(
    const std::vector<QaryString>& strings, std::uint32_t ell) {
  std::vector<std::vector<std::size_t>> classes;
  std::map<std::vector<std::int64_t>, std::size_t> by_profile;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    if (strings[i].q != strings[0].q || strings[i].size() != strings[0].size())
      throw std::invalid_argument("equivalence_classes: mixed lengths or alphabets");
    auto p = profile(strings[i], ell);
    auto [it, fresh] = by_profile.try_emplace(std::move(p.counts), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(i);
  }
  return classes;
}

// Exact number of distinct l-profiles over all q-ary strings of length n,
// by exhaustion over the q^n strings. Guarded by a hard enumeration budget.
inline std::uint64_t count_distinct_profiles(std::uint32_t q, std::uint32_t ell,
                                             std::uint32_t n) {
  if (ell > n) throw std::invalid_argument("window length out of range");
  long double states = 1;
  for (std::uint32_t i = 0; i < n; ++i) states *= q;
  if (states > (1 << 20))
    throw ResourceError("profile enumeration budget is q^n <= 2^20");
  const std::uint64_t total = pow_u64(q, n);
  const std::size_t dim = pow_u64(q, ell);
  std::unordered_set<std::string> seen;
  std::vector<std::int64_t> counts(dim);
  QaryString x{q, std::vector<std::uint8_t>(n, 0)};
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = n; i-- > 0;) {
      x.sym[i] = static_cast<std::uint8_t>(c % q);
      c /= q;
    }
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i + ell <= n; ++i) ++counts[window_code(x, i, ell)];
    std::string key(reinterpret_cast<const char*>(counts.data()),
                    counts.size() * sizeof(std::int64_t));
    seen.insert(std::move(key));
  }
  return seen.size();
}

}  // namespace dsc

#pragma once
// Deterministic 64-bit randomness for experiments.
//
// Every randomized routine in this library takes a SplitMix64 by reference.
// Parallel work derives one independent stream per task via
// derive_stream(master_seed, index); identical (seed, index) pairs always
// yield identical streams, so results never depend on thread scheduling.
// No <random> distributions are used anywhere: their outputs are not
// portable across standard library implementations.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace dsc {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform on [0,1) with 53 random bits; bit-exact on any IEEE-754 platform.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on [0, bound) without modulo bias.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  bool bernoulli(double p) { return next_unit() < p; }

 private:
  std::uint64_t state_;
};

// Stream i of a master seed. One scrambling step decorrelates the seeds of
// neighboring indices; the constant is an arbitrary odd multiplier.
inline std::uint64_t derive_stream(std::uint64_t master_seed, std::uint64_t index) {
  SplitMix64 g(master_seed ^ (0xA24BAED4963EE407ull * (index + 1)));
  return g.next();
}

inline SplitMix64 stream_rng(std::uint64_t master_seed, std::uint64_t index) {
  return SplitMix64(derive_stream(master_seed, index));
}

// k distinct values from [0, n), Floyd's algorithm; output sorted.
inline std::vector<std::uint64_t> sample_distinct(SplitMix64& rng, std::uint64_t n,
                                                  std::uint64_t k) {
  std::vector<std::uint64_t> out;
  out.reserve(k);
  for (std::uint64_t j = n - k; j < n; ++j) {
    std::uint64_t v = rng.next_below(j + 1);
    bool dup = false;
    for (std::uint64_t x : out) dup = dup || (x == v);
    out.push_back(dup ? j : v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dsc

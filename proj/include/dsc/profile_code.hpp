#pragma once
// Varshamov codebooks over l-mer profiles, the substitution/coverage
// channel, and minimum asymmetric-distance decoding.
//
// C(H, beta) = { u >= 0 : H u = beta (mod p) } with H_{j,i} = alpha_i^j,
// alpha_i = i for i = 1..N, j = 1..rows. A code with `rows` congruence rows
// has designed minimum asymmetric distance rows + 1; build_profile_codebook
// takes that designed distance d and uses d - 1 rows. The codebook keeps the
// enumerated vectors that are realizable profiles, pairs each with its
// canonical string, and records the exact minimum pairwise distance.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsc/debruijn.hpp"
#include "dsc/profile.hpp"
#include "dsc/rng.hpp"
#include "dsc/strings.hpp"

namespace dsc {

inline bool is_prime_u64(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t f = 2; f * f <= x; ++f)
    if (x % f == 0) return false;
  return true;
}

struct VarshamovCode {
  std::size_t N = 0;      // code length
  std::size_t rows = 0;   // congruence rows; designed distance rows + 1
  std::uint64_t p = 2;    // prime modulus
  std::vector<std::uint64_t> alpha;            // alpha_i = i, size N
  std::vector<std::uint64_t> beta;             // size rows
  std::vector<std::vector<std::uint64_t>> H;   // rows x N, H[j][i] = alpha_i^(j+1) mod p
};

inline VarshamovCode make_varshamov(std::size_t N, std::size_t rows, std::uint64_t p,
                                    std::vector<std::uint64_t> beta) {
  if (!is_prime_u64(p)) throw std::invalid_argument("modulus must be prime");
  if (p <= N || p <= rows) throw std::invalid_argument("modulus too small for code length");
  if (beta.size() != rows) throw std::invalid_argument("syndrome size must equal row count");
  VarshamovCode c{N, rows, p, {}, std::move(beta), {}};
  for (std::size_t i = 1; i <= N; ++i) c.alpha.push_back(i);
  c.H.assign(rows, std::vector<std::uint64_t>(N));
  for (std::size_t i = 0; i < N; ++i) {
    std::uint64_t v = 1;
    for (std::size_t j = 0; j < rows; ++j) {
      v = v * c.alpha[i] % p;
      c.H[j][i] = v;
    }
  }
  return c;
}

// All nonnegative integer vectors of length N with entry sum total_weight
// and H u = beta (mod p), by depth-first search with remaining-weight
// pruning. Output in lexicographic order.
inline std::vector<std::vector<std::int64_t>> varshamov_enumerate(
    const VarshamovCode& code, std::int64_t total_weight) {
  if (total_weight < 0) throw std::invalid_argument("negative weight");
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> u(code.N, 0);
  std::vector<std::uint64_t> syndrome(code.rows, 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t remaining) -> void {
    if (i == code.N) {
      if (remaining == 0 && syndrome == code.beta) out.push_back(u);
      return;
    }
    for (std::int64_t w = 0; w <= remaining; ++w) {
      u[i] = w;
      if (w > 0)
        for (std::size_t j = 0; j < code.rows; ++j)
          syndrome[j] = (syndrome[j] + code.H[j][i]) % code.p;
      self(self, i + 1, remaining - w);
    }
    for (std::size_t j = 0; j < code.rows; ++j)
      syndrome[j] = (syndrome[j] + code.p * u[i] - code.H[j][i] * u[i] % code.p) % code.p;
    u[i] = 0;
  };
  rec(rec, 0, total_weight);
  return out;
}

struct ProfileCodebook {
  std::uint32_t q = 2;
  std::uint64_t n = 0;
  std::uint32_t ell = 1;
  std::size_t d = 0;  // designed minimum asymmetric distance
  std::uint64_t p = 2;
  std::vector<std::uint64_t> beta;
  AllowedKmerSet S;
  struct Entry {
    ProfileVector profile;
    QaryString codestring;
  };
  std::vector<Entry> entries;
  std::optional<std::int64_t> d_min;  // empty when fewer than 2 entries
};

// Enumerate C(H, beta) at weight n - l + 1 and keep the realizable profiles.
// Soundness: every surviving pair must be at designed distance d or more.
inline ProfileCodebook build_profile_codebook(std::uint32_t q, std::uint64_t n,
                                              std::uint32_t ell, std::size_t d,
                                              std::uint64_t p,
                                              std::vector<std::uint64_t> beta,
                                              const AllowedKmerSet& S) {
  if (d < 1) throw std::invalid_argument("designed distance must be >= 1");
  if (n < ell) throw std::invalid_argument("length below window");
  ProfileCodebook cb{q, n, ell, d, p, beta, S, {}, {}};
  auto code = make_varshamov(S.kmers.size(), d - 1, p, std::move(beta));
  auto g = build_debruijn(S);
  const std::int64_t weight = static_cast<std::int64_t>(n - ell + 1);
  for (auto& u : varshamov_enumerate(code, weight)) {
    if (!is_valid_profile(g, u, n, false)) continue;
    // Entries live in the full q^ell index space so they compare directly
    // against empirical profiles; coordinates outside S stay zero.
    ProfileVector pv{q, ell, n, std::vector<std::int64_t>(pow_u64(q, ell), 0)};
    for (std::size_t i = 0; i < u.size(); ++i) pv.counts[S.kmers[i]] = u[i];
    cb.entries.push_back({std::move(pv), profile_to_string(g, u, n)});
  }
  for (std::size_t a = 0; a < cb.entries.size(); ++a)
    for (std::size_t b = a + 1; b < cb.entries.size(); ++b) {
      std::int64_t dist =
          asymmetric_distance(cb.entries[a].profile, cb.entries[b].profile);
      if (!cb.d_min || dist < *cb.d_min) cb.d_min = dist;
    }
  if (cb.d_min && *cb.d_min < static_cast<std::int64_t>(d))
    throw std::logic_error("codebook violates its designed distance");
  return cb;
}

// Readout of the storage channel: the surviving l-mer reads of a string
// after s synthesis substitutions, c coverage drops, and o per-read
// sequencing substitutions.
struct ChannelReadout {
  std::uint32_t q = 2;
  std::uint32_t ell = 1;
  std::uint64_t n = 0;
  std::vector<std::uint64_t> reads;  // window codes, sorted (a multiset)
  std::size_t s_applied = 0, c_applied = 0, o_applied = 0;

  ProfileVector empirical_profile() const {
    ProfileVector pv{q, ell, n, std::vector<std::int64_t>(pow_u64(q, ell), 0)};
    for (std::uint64_t r : reads) ++pv.counts[r];
    return pv;
  }
};

inline ChannelReadout channel_simulate(const QaryString& x, std::uint32_t ell,
                                       std::size_t s, std::size_t c, std::size_t o,
                                       SplitMix64& rng) {
  const std::size_t n = x.size();
  if (ell < 1 || ell > n) throw std::invalid_argument("window length out of range");
  const std::size_t reads_total = n - ell + 1;
  if (s > n || c > reads_total || o + c > reads_total)
    throw std::invalid_argument("infeasible channel error counts");

  QaryString y = x;  // synthesis substitutions act on the stored string
  if (s > 0) {
    for (std::uint64_t pos : sample_distinct(rng, n, s)) {
      std::uint8_t repl = static_cast<std::uint8_t>(rng.next_below(x.q - 1));
      if (repl >= y.sym[pos]) ++repl;
      y.sym[static_cast<std::size_t>(pos)] = repl;
    }
  }

  std::vector<std::uint64_t> reads;
  reads.reserve(reads_total);
  for (std::size_t i = 0; i + ell <= n; ++i) reads.push_back(window_code(y, i, ell));
  if (c > 0) {
    auto dropped = sample_distinct(rng, reads_total, c);
    for (std::size_t k = dropped.size(); k-- > 0;)
      reads.erase(reads.begin() + static_cast<std::ptrdiff_t>(dropped[k]));
  }
  if (o > 0) {  // one substituted symbol in each of o distinct surviving reads
    for (std::uint64_t idx : sample_distinct(rng, reads.size(), o)) {
      std::size_t pos = rng.next_below(ell);
      std::uint64_t place = pow_u64(x.q, ell - 1 - static_cast<std::uint32_t>(pos));
      std::uint64_t old_sym = reads[idx] / place % x.q;
      std::uint64_t repl = rng.next_below(x.q - 1);
      if (repl >= old_sym) ++repl;
      reads[idx] = reads[idx] - old_sym * place + repl * place;
    }
  }
  std::sort(reads.begin(), reads.end());
  return ChannelReadout{x.q, ell, n, std::move(reads), s, c, o};
}

struct DecodeResult {
  QaryString codestring;
  std::int64_t distance = 0;
};

// Nearest codebook entry under the asymmetric profile distance; ties go to
// the lexicographically smallest codestring (entries scanned in order, which
// build_profile_codebook emits lexicographically by profile).
inline DecodeResult decode_profile(const ChannelReadout& readout,
                                   const ProfileCodebook& cb) {
  if (cb.entries.empty()) throw std::invalid_argument("empty codebook");
  auto observed = readout.empirical_profile();
  const ProfileCodebook::Entry* best = nullptr;
  std::int64_t best_dist = std::numeric_limits<std::int64_t>::max();
  for (const auto& e : cb.entries) {
    std::int64_t dist = asymmetric_distance(observed, e.profile);
    if (dist < best_dist ||
        (dist == best_dist && e.codestring.sym < best->codestring.sym)) {
      best = &e;
      best_dist = dist;
    }
  }
  return DecodeResult{best->codestring, best_dist};
}

}  // namespace dsc

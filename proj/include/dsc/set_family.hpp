#pragma once
// Bounded-intersection set families with low discrepancy.
//
// The polynomial construction: fix a prime q, the smallest primitive root
// xi of F_q, and the evaluation set A = {0, 1, xi, ..., xi^(k-2)} of size k.
// Every polynomial f of degree < t contributes the k-set
// A_f = {(a, f(a)) : a in A}, giving q^t sets of size k whose pairwise
// intersections have at most t - 1 points. Points embed into [0, kq) by
// sigma(a, b) = q M(a) + M(b) where M(0) = 0 and M(xi^j) = j + 1; the
// labeling that signs point sigma by comparing it against a fixed threshold
// balances every set exactly (even k) or up to one unit (odd k).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dsc/profile_code.hpp"

namespace dsc {

struct PrimeField {
  std::uint64_t p = 2;
  std::uint64_t xi = 1;                 // smallest primitive root
  std::vector<std::uint64_t> dlog;      // dlog[x] = m with xi^m = x, for x >= 1

  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (!is_prime_u64(p)) throw std::invalid_argument("field order must be prime");
    if (p == 2) {
      xi = 1;
      dlog = {0, 0};
      return;
    }
    for (std::uint64_t g = 2; g < p; ++g) {
      std::uint64_t x = g;
      std::uint64_t order = 1;
      while (x != 1) {
        x = x * g % p;
        ++order;
      }
      if (order == p - 1) {
        xi = g;
        break;
      }
    }
    dlog.assign(p, 0);
    std::uint64_t x = 1;
    for (std::uint64_t m = 0; m + 1 < p; ++m) {
      dlog[x] = m;
      x = x * xi % p;
    }
  }

  std::uint64_t pow_xi(std::uint64_t e) const {
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < e; ++i) x = x * xi % p;
    return x;
  }
};

// M(0) = 0, M(xi^m) = m + 1.
inline std::uint64_t field_index(const PrimeField& F, std::uint64_t a) {
  return a == 0 ? 0 : F.dlog[a] + 1;
}

struct SetFamily {
  std::size_t ground = 0;                       // points are 0 .. ground-1
  std::size_t k = 0;                            // set size (regular families)
  std::vector<std::vector<std::size_t>> sets;   // each sorted ascending
};

inline std::vector<std::uint64_t> eval_set(const PrimeField& F, std::size_t k) {
  std::vector<std::uint64_t> A{0};
  for (std::size_t j = 0; j + 1 < k; ++j) A.push_back(F.pow_xi(j));
  return A;
}

// sigma(a, b) = q M(a) + M(b); bijective from A x F_q into [0, kq).
inline std::size_t point_index(const PrimeField& F, std::size_t k, std::uint64_t a,
                               std::uint64_t b) {
  const std::uint64_t ma = field_index(F, a);
  if (ma >= k) throw std::invalid_argument("point not in the evaluation set");
  return static_cast<std::size_t>(F.p * ma + field_index(F, b));
}

inline SetFamily babai_frankl_family(std::size_t k, std::uint64_t q, std::size_t t) {
  if (t < 1 || t > k) throw std::invalid_argument("need 1 <= t <= k");
  PrimeField F(q);
  if (k > q) throw std::invalid_argument("need k <= q");
  const auto A = eval_set(F, k);
  SetFamily fam{static_cast<std::size_t>(k * q), k, {}};
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < t; ++i) count *= q;
  fam.sets.reserve(count);
  // Coefficient vectors in base-q counting order, low degree first.
  std::vector<std::uint64_t> coeff(t, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rem = idx;
    for (std::size_t i = 0; i < t; ++i) {
      coeff[i] = rem % q;
      rem /= q;
    }
    std::vector<std::size_t> s;
    s.reserve(k);
    for (std::uint64_t a : A) {
      std::uint64_t val = 0;
      for (std::size_t i = t; i-- > 0;) val = (val * a + coeff[i]) % q;
      s.push_back(point_index(F, k, a, val));
    }
    std::sort(s.begin(), s.end());
    fam.sets.push_back(std::move(s));
  }
  return fam;
}

using Labeling = std::vector<int>;  // one of {-1, +1} per ground point

// Threshold labeling: -1 below kq/2 (even k) or q ceil(k/2) (odd k).
// Each set has one point per evaluation column, so the split is exact for
// even k and off by one for odd k.
inline Labeling balanced_labeling(std::size_t k, std::uint64_t q) {
  const std::size_t ground = static_cast<std::size_t>(k * q);
  const std::size_t threshold =
      (k % 2 == 0) ? ground / 2 : static_cast<std::size_t>(q * ((k + 1) / 2));
  Labeling L(ground);
  for (std::size_t i = 0; i < ground; ++i) L[i] = i < threshold ? -1 : 1;
  return L;
}

struct DiscrepancyReport {
  std::int64_t max_abs = 0;
  std::vector<std::int64_t> per_set;
};

inline DiscrepancyReport discrepancy(const SetFamily& fam, const Labeling& L) {
  if (L.size() != fam.ground) throw std::invalid_argument("labeling size mismatch");
  DiscrepancyReport rep;
  rep.per_set.reserve(fam.sets.size());
  for (const auto& s : fam.sets) {
    std::int64_t sum = 0;
    for (std::size_t pt : s) sum += L[pt];
    rep.per_set.push_back(sum);
    rep.max_abs = std::max(rep.max_abs, sum < 0 ? -sum : sum);
  }
  return rep;
}

// Exact minimum over all 2^ground labelings of the max per-set discrepancy.
// The global sign flip halves the search; the scan stops early once the
// parity floor (0 for even set sizes, 1 when any odd set exists) is hit.
inline std::int64_t min_discrepancy_bruteforce(const SetFamily& fam) {
  if (fam.ground > 24) throw ResourceError("brute force limited to ground sets <= 24");
  if (fam.sets.empty()) return 0;
  std::vector<std::uint32_t> masks;
  bool any_odd = false;
  for (const auto& s : fam.sets) {
    std::uint32_t m = 0;
    for (std::size_t pt : s) m |= 1u << pt;
    masks.push_back(m);
    any_odd = any_odd || (s.size() % 2 != 0);
  }
  const std::int64_t floor_val = any_odd ? 1 : 0;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  const std::uint64_t half = 1ull << (fam.ground - 1);  // fix point 0 at -1
  for (std::uint64_t lab = 0; lab < half; ++lab) {
    std::int64_t worst = 0;
    for (std::size_t j = 0; j < masks.size(); ++j) {
      const std::uint32_t pos = static_cast<std::uint32_t>(lab << 1) & masks[j];
      const std::int64_t sum =
          2 * std::popcount(pos) - static_cast<std::int64_t>(fam.sets[j].size());
      worst = std::max(worst, sum < 0 ? -sum : sum);
      if (worst >= best) break;
    }
    best = std::min(best, worst);
    if (best <= floor_val) return best;
  }
  return best;
}

struct IntersectionWitness {
  std::size_t i = 0, j = 0;
  std::size_t size = 0;
};

// True iff all pairwise intersections have fewer than t points.
inline std::optional<IntersectionWitness> verify_t_bounded(const SetFamily& fam,
                                                           std::size_t t) {
  for (std::size_t i = 0; i < fam.sets.size(); ++i)
    for (std::size_t j = i + 1; j < fam.sets.size(); ++j) {
      std::size_t common = 0, a = 0, b = 0;
      const auto &si = fam.sets[i], &sj = fam.sets[j];
      while (a < si.size() && b < sj.size()) {
        if (si[a] == sj[b]) { ++common; ++a; ++b; }
        else if (si[a] < sj[b]) ++a;
        else ++b;
      }
      if (common >= t) return IntersectionWitness{i, j, common};
    }
  return std::nullopt;
}

struct TransversalDesign {
  std::size_t t = 2, k = 0, v = 0;               // kv points
  std::vector<std::vector<std::size_t>> groups;  // partition of [0, kv)
  std::vector<std::vector<std::size_t>> blocks;  // k-subsets, sorted
};

// The polynomial family as a transversal design: groups are the columns
// {a} x F_q of the evaluation grid, blocks are the sets A_f.
inline TransversalDesign family_as_design(const SetFamily& fam, std::size_t t,
                                          std::uint64_t q) {
  TransversalDesign td{t, fam.k, static_cast<std::size_t>(q), {}, fam.sets};
  for (std::size_t g = 0; g < fam.k; ++g) {
    std::vector<std::size_t> col;
    for (std::size_t b = 0; b < q; ++b) col.push_back(g * q + b);
    td.groups.push_back(std::move(col));
  }
  return td;
}

struct DesignViolation {
  std::vector<std::size_t> subset;
  std::size_t in_blocks = 0, in_groups = 0;
};

// Exhaustive defining-property check: every t-subset of the points lies in
// exactly one block or exactly one group, never both.
inline std::optional<DesignViolation> verify_transversal_design(const TransversalDesign& td) {
  const std::size_t npts = td.k * td.v;
  long double subsets = 1;
  for (std::size_t i = 0; i < td.t; ++i) subsets = subsets * (npts - i) / (i + 1);
  if (subsets * static_cast<long double>(td.blocks.size() + td.groups.size()) > 5e8L)
    throw ResourceError("t-subset enumeration over this design is too large");
  std::vector<std::size_t> sub(td.t);
  std::vector<char> in_set(npts);
  auto contained_in = [&](const std::vector<std::size_t>& s) {
    std::size_t hits = 0;
    for (std::size_t pt : s) hits += in_set[pt] ? 1 : 0;
    return hits == td.t;
  };
  auto rec = [&](auto&& self, std::size_t depth, std::size_t from) -> std::optional<DesignViolation> {
    if (depth == td.t) {
      std::size_t nb = 0, ng = 0;
      for (const auto& blk : td.blocks) nb += contained_in(blk) ? 1 : 0;
      for (const auto& grp : td.groups) ng += contained_in(grp) ? 1 : 0;
      const bool ok = (nb == 1 && ng == 0) || (nb == 0 && ng == 1);
      if (!ok) return DesignViolation{sub, nb, ng};
      return std::nullopt;
    }
    for (std::size_t pt = from; pt < npts; ++pt) {
      sub[depth] = pt;
      in_set[pt] = 1;
      if (auto bad = self(self, depth + 1, pt + 1)) return bad;
      in_set[pt] = 0;
    }
    return std::nullopt;
  };
  return rec(rec, 0, 0);
}

// Augmentation: for each (all-positive group, all-negative group) pair take
// the k/2 smallest-index points of each; the resulting k-set is balanced
// and, whenever t > max{k/2, 2}, keeps the family t-bounded.
inline std::vector<std::vector<std::size_t>> augment_td(const TransversalDesign& td,
                                                        const Labeling& L) {
  if (td.k % 2 != 0) throw std::invalid_argument("augmentation needs even k");
  if (td.t <= std::max(td.k / 2, std::size_t{2}))
    throw std::invalid_argument("augmentation needs t > max{k/2, 2}");
  std::vector<std::size_t> pos_groups, neg_groups;
  for (std::size_t g = 0; g < td.groups.size(); ++g) {
    bool all_pos = true, all_neg = true;
    for (std::size_t pt : td.groups[g]) {
      all_pos = all_pos && L[pt] > 0;
      all_neg = all_neg && L[pt] < 0;
    }
    if (all_pos) pos_groups.push_back(g);
    if (all_neg) neg_groups.push_back(g);
  }
  if (pos_groups.empty() || neg_groups.empty())
    throw std::invalid_argument("labeling has no single-sign group pair");
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t gp : pos_groups)
    for (std::size_t gn : neg_groups) {
      std::vector<std::size_t> blk;
      for (std::size_t i = 0; i < td.k / 2; ++i) blk.push_back(td.groups[gp][i]);
      for (std::size_t i = 0; i < td.k / 2; ++i) blk.push_back(td.groups[gn][i]);
      std::sort(blk.begin(), blk.end());
      blocks.push_back(std::move(blk));
    }
  return blocks;
}

}  // namespace dsc

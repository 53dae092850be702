#pragma once
// l-mer profile vectors and the asymmetric profile distance.
//
// The profile of x under window l is the length-q^l vector whose i-th entry
// counts occurrences in x of the i-th l-mer in lexicographic order (base-q
// value order). The source length n is stored explicitly: profiles observed
// through a coverage-lossy channel have entry sum below n-l+1 and must stay
// representable.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dsc/strings.hpp"

namespace dsc {

struct ProfileVector {
  std::uint32_t q = 2;
  std::uint32_t ell = 1;
  std::uint64_t n = 0;              // implied source length
  std::vector<std::int64_t> counts; // size q^ell

  bool same_shape(const ProfileVector& o) const { return q == o.q && ell == o.ell; }
  bool operator==(const ProfileVector& o) const {
    return same_shape(o) && counts == o.counts;
  }
};

inline std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

inline ProfileVector profile(const QaryString& x, std::uint32_t ell) {
  if (ell < 1 || ell > x.size()) throw std::invalid_argument("window length out of range");
  ProfileVector p{x.q, ell, x.size(),
                  std::vector<std::int64_t>(pow_u64(x.q, ell), 0)};
  for (std::size_t i = 0; i + ell <= x.size(); ++i) ++p.counts[window_code(x, i, ell)];
  return p;
}

// One-sided deviation: sum over i of max{u_i - v_i, 0}.
inline std::int64_t partial_deviation(const ProfileVector& u, const ProfileVector& v) {
  if (!u.same_shape(v)) throw std::invalid_argument("profile shape mismatch");
  std::int64_t d = 0;
  for (std::size_t i = 0; i < u.counts.size(); ++i)
    if (u.counts[i] > v.counts[i]) d += u.counts[i] - v.counts[i];
  return d;
}

// Delta(u,v) = max of the two one-sided deviations.
inline std::int64_t asymmetric_distance(const ProfileVector& u, const ProfileVector& v) {
  return std::max(partial_deviation(u, v), partial_deviation(v, u));
}

}  // namespace dsc

#pragma once
// Strings over the alphabet {0, ..., q-1}, their substring spectra, and the
// period. Binary strings print as 0/1, DNA strings (q = 4) as A/C/G/T with
// the fixed order A=0 < C=1 < G=2 < T=3. All operations are pure; a
// QaryString is immutable by convention once built.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsc {

struct QaryString {
  std::uint32_t q = 2;
  std::vector<std::uint8_t> sym;

  std::size_t size() const { return sym.size(); }
  bool operator==(const QaryString& o) const { return q == o.q && sym == o.sym; }
  auto operator<=>(const QaryString& o) const = default;
};

inline constexpr char kDnaLetters[4] = {'A', 'C', 'G', 'T'};

inline int dna_value(char c) {
  switch (c) {
    case 'A': return 0;
    case 'C': return 1;
    case 'G': return 2;
    case 'T': return 3;
    default: return -1;
  }
}

inline QaryString make_string(std::uint32_t q, std::initializer_list<int> syms) {
  QaryString x{q, {}};
  x.sym.reserve(syms.size());
  for (int s : syms) x.sym.push_back(static_cast<std::uint8_t>(s));
  return x;
}

// Parses one line of text: 0/1 characters give q=2, A/C/G/T give q=4.
// Mixing the two alphabets in one token is rejected.
inline QaryString parse_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty string");
  bool binary = text[0] == '0' || text[0] == '1';
  QaryString x{binary ? 2u : 4u, {}};
  x.sym.reserve(text.size());
  for (char c : text) {
    if (binary) {
      if (c != '0' && c != '1') throw std::invalid_argument("mixed alphabets in string");
      x.sym.push_back(static_cast<std::uint8_t>(c - '0'));
    } else {
      int v = dna_value(c);
      if (v < 0) throw std::invalid_argument("mixed alphabets in string");
      x.sym.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return x;
}

inline std::string format_string(const QaryString& x) {
  std::string out;
  out.reserve(x.size());
  for (std::uint8_t s : x.sym)
    out.push_back(x.q == 4 ? kDnaLetters[s] : static_cast<char>('0' + s));
  return out;
}

// Integer code of the length-len window starting at pos: base-q value with
// the leftmost symbol most significant. This is the lexicographic index of
// the window among all q^len words.
inline std::uint64_t window_code(const QaryString& x, std::size_t pos, std::size_t len) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < len; ++i) code = code * x.q + x.sym[pos + i];
  return code;
}

inline QaryString kmer_from_code(std::uint32_t q, std::size_t len, std::uint64_t code) {
  QaryString x{q, std::vector<std::uint8_t>(len, 0)};
  for (std::size_t i = len; i-- > 0;) {
    x.sym[i] = static_cast<std::uint8_t>(code % q);
    code /= q;
  }
  return x;
}

struct SubstringSpectrum {
  std::uint32_t q = 2;
  std::size_t L = 0;
  std::vector<std::uint64_t> entries;  // window codes; sorted; set variant deduplicated
  bool with_multiplicity = false;
};

inline SubstringSpectrum substring_spectrum(const QaryString& x, std::size_t L,
                                            bool with_multiplicity = false) {
  if (L < 1 || L > x.size()) throw std::invalid_argument("window length out of range");
  SubstringSpectrum s{x.q, L, {}, with_multiplicity};
  s.entries.reserve(x.size() - L + 1);
  for (std::size_t i = 0; i + L <= x.size(); ++i) s.entries.push_back(window_code(x, i, L));
  std::sort(s.entries.begin(), s.entries.end());
  if (!with_multiplicity)
    s.entries.erase(std::unique(s.entries.begin(), s.entries.end()), s.entries.end());
  return s;
}

// Smallest rho >= 1 with x_i = x_{i+rho} for all 1 <= i <= n-rho.
// Every string has period n, so the result is always in [1, n].
inline std::size_t period(const QaryString& x) {
  const std::size_t n = x.size();
  if (n == 0) throw std::invalid_argument("empty string has no period");
  for (std::size_t rho = 1; rho < n; ++rho) {
    bool ok = true;
    for (std::size_t i = 0; i + rho < n && ok; ++i) ok = x.sym[i] == x.sym[i + rho];
    if (ok) return rho;
  }
  return n;
}

}  // namespace dsc

#pragma once
// Marker-based coded trace reconstruction.
//
// Codeword layout: inner-encoded blocks separated by markers 0^m 1^m with
// m = ceil(c log2 n). Each block is framed as '0' + stuffed payload + '1';
// the stuffing inserts the complement after r - 1 consecutive equal bits
// (counting from the leading frame bit), so no run inside a block reaches
// r = ceil(m/2) - 1, the frame bits stop block content from merging into
// marker runs, and the marker halves are the unique runs of length >= m.
//
// Decoding segments each trace at surviving markers (a 0-run of length
// >= tau followed by a 1-run >= tau, tau = ceil((1-q_del) m/2)), discards
// traces whose marker count is wrong, reconstructs each block column with
// BMA, and destuffs. Level 2 appends an 8-bit CRC to every block payload
// and groups data blocks under XOR parity blocks, so a block whose CRC
// fails becomes an erasure that one parity per group can repair.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsc/rng.hpp"
#include "dsc/strings.hpp"
#include "dsc/trace.hpp"

namespace dsc {

using Bits = std::vector<std::uint8_t>;

struct MarkerCodeParams {
  std::size_t n = 0;        // message length in bits
  double c = 2.0;           // marker constant
  int level = 1;            // 1: plain blocks; 2: CRC + parity groups
  std::size_t parity_group = 8;  // data blocks per parity block (level 2)

  std::size_t m = 0;          // marker half-length
  std::size_t block_len = 0;  // bits of block content before stuffing
  std::size_t r = 0;          // runlength limit inside blocks

  static MarkerCodeParams make(std::size_t n, double c = 2.0, int level = 1,
                               std::size_t parity_group = 8) {
    if (n < 2) throw std::invalid_argument("message too short");
    if (level != 1 && level != 2) throw std::invalid_argument("level must be 1 or 2");
    MarkerCodeParams p{n, c, level, parity_group};
    const double lg = std::log2(static_cast<double>(n));
    p.m = static_cast<std::size_t>(std::ceil(c * lg));
    p.block_len = static_cast<std::size_t>(std::ceil(lg * lg));
    p.r = (p.m + 1) / 2 - 1;
    if (p.r < 2 || p.r >= p.m || p.block_len < 2 * p.r)
      throw std::invalid_argument("inconsistent marker parameters");
    if (level == 2 && p.block_len <= 8)
      throw std::invalid_argument("block too short for a checksum");
    return p;
  }

  std::size_t payload_len() const { return level == 2 ? block_len - 8 : block_len; }
  std::size_t data_blocks() const { return (n + payload_len() - 1) / payload_len(); }
  std::size_t parity_blocks() const {
    return level == 2 ? (data_blocks() + parity_group - 1) / parity_group : 0;
  }
  std::size_t total_blocks() const { return data_blocks() + parity_blocks(); }
  // Payload bits of data block j (the last one may be short).
  std::size_t payload_of(std::size_t j) const {
    return j + 1 < data_blocks() ? payload_len() : n - (data_blocks() - 1) * payload_len();
  }
  // Content bits (payload + checksum) of block j over all blocks.
  std::size_t content_of(std::size_t j) const {
    if (level == 1) return payload_of(j);
    return (j < data_blocks() ? payload_of(j) : payload_len()) + 8;
  }
  std::size_t detection_threshold(double q_del) const {
    return static_cast<std::size_t>(
        std::ceil((1.0 - q_del) * static_cast<double>(m) / 2.0));
  }
};

// CRC-8, polynomial x^8 + x^2 + x + 1 (0x07), bitwise over the message.
inline std::uint8_t crc8(const Bits& bits) {
  std::uint8_t reg = 0;
  for (std::uint8_t b : bits) {
    std::uint8_t msb = static_cast<std::uint8_t>((reg >> 7) & 1u);
    reg = static_cast<std::uint8_t>(reg << 1);
    if (msb ^ b) reg ^= 0x07;
  }
  return reg;
}

namespace detail {

// Frame + runlength-limited stuffing. The leading frame '0' seeds the run
// state; after r - 1 consecutive equal bits the complement is inserted.
// The stream can never end on an (r-1)-run, so the trailing frame '1'
// keeps every in-block run at r - 1 or less.
inline Bits inner_encode(const Bits& content, std::size_t r) {
  Bits out{0};
  std::uint8_t prev = 0;
  std::size_t run = 1;
  for (std::uint8_t b : content) {
    run = (b == prev) ? run + 1 : 1;
    out.push_back(b);
    prev = b;
    if (run == r - 1) {
      std::uint8_t ins = static_cast<std::uint8_t>(1 - b);
      out.push_back(ins);
      prev = ins;
      run = 1;
    }
  }
  out.push_back(1);
  return out;
}

// Exact mirror of inner_encode: run state tracks the stuffed stream
// (inserted bits included), not just the recovered content.
inline Bits inner_decode(const Bits& framed, std::size_t r, std::size_t want) {
  Bits out;
  out.reserve(want);
  if (framed.empty()) {
    out.assign(want, 0);
    return out;
  }
  std::uint8_t prev = framed[0];  // the leading frame bit
  std::size_t run = 1, i = 1;
  while (i < framed.size() && out.size() < want) {
    std::uint8_t b = framed[i];
    run = (b == prev) ? run + 1 : 1;
    out.push_back(b);
    prev = b;
    ++i;
    if (run == r - 1 && i < framed.size()) {
      prev = framed[i];  // skip the inserted complement, keep its run state
      run = 1;
      ++i;
    }
  }
  out.resize(want, 0);
  return out;
}

inline void append_marker(Bits& cw, std::size_t m) {
  cw.insert(cw.end(), m, 0);
  cw.insert(cw.end(), m, 1);
}

// Content bits of every block in codeword order (data blocks, then at
// level 2 the parity blocks, each with its CRC appended).
inline std::vector<Bits> block_contents(const Bits& message, const MarkerCodeParams& p) {
  std::vector<Bits> blocks;
  for (std::size_t j = 0; j < p.data_blocks(); ++j) {
    std::size_t off = j * p.payload_len();
    Bits payload(message.begin() + off, message.begin() + off + p.payload_of(j));
    if (p.level == 2) {
      std::uint8_t crc = crc8(payload);
      for (int bit = 7; bit >= 0; --bit) payload.push_back((crc >> bit) & 1u);
    }
    blocks.push_back(std::move(payload));
  }
  if (p.level == 2) {
    for (std::size_t gstart = 0; gstart < p.data_blocks(); gstart += p.parity_group) {
      Bits parity(p.payload_len(), 0);  // XOR of zero-padded group payloads
      std::size_t gend = std::min(gstart + p.parity_group, p.data_blocks());
      for (std::size_t j = gstart; j < gend; ++j)
        for (std::size_t i = 0; i < p.payload_of(j); ++i)
          parity[i] ^= message[j * p.payload_len() + i];
      std::uint8_t crc = crc8(parity);
      for (int bit = 7; bit >= 0; --bit) parity.push_back((crc >> bit) & 1u);
      blocks.push_back(std::move(parity));
    }
  }
  return blocks;
}

}  // namespace detail

inline Bits encode_marker_code(const Bits& message, const MarkerCodeParams& p) {
  if (message.size() != p.n) throw std::invalid_argument("message length mismatch");
  Bits cw;
  bool first = true;
  for (const Bits& content : detail::block_contents(message, p)) {
    if (!first) detail::append_marker(cw, p.m);
    first = false;
    const Bits framed = detail::inner_encode(content, p.r);
    cw.insert(cw.end(), framed.begin(), framed.end());
  }
  return cw;
}

struct MarkerDecodeResult {
  bool ok = false;
  Bits message;
  std::size_t traces_used = 0;
  std::size_t traces_discarded = 0;
  std::vector<std::size_t> erasures;  // block indices that failed their CRC
  std::size_t repaired = 0;
  std::string error;
};

namespace detail {

// Longest possible framed block for `want` content bits: constant content
// maximizes stuffing inserts, and the frame seed makes all-zero the worst.
inline std::size_t framed_upper_bound(std::size_t want, std::size_t r) {
  return inner_encode(Bits(want, 0), r).size();
}

// Cut one trace at its surviving markers. Returns the per-block pieces, or
// nothing when the number of detected markers is not total_blocks - 1.
inline std::optional<std::vector<Bits>> segment_trace(const Bits& trace,
                                                      const MarkerCodeParams& p,
                                                      std::size_t tau) {
  struct Run {
    std::uint8_t bit;
    std::size_t start, len;
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (!runs.empty() && runs.back().bit == trace[i]) ++runs.back().len;
    else runs.push_back({trace[i], i, 1});
  }
  std::vector<std::pair<std::size_t, std::size_t>> markers;  // [start, end)
  for (std::size_t k = 0; k + 1 < runs.size(); ++k)
    if (runs[k].bit == 0 && runs[k].len >= tau && runs[k + 1].bit == 1 &&
        runs[k + 1].len >= tau)
      markers.push_back({runs[k].start, runs[k + 1].start + runs[k + 1].len});
  if (markers.size() + 1 != p.total_blocks()) return std::nullopt;
  std::vector<Bits> pieces;
  std::size_t from = 0;
  for (auto [s, e] : markers) {
    pieces.emplace_back(trace.begin() + from, trace.begin() + s);
    from = e;
  }
  pieces.emplace_back(trace.begin() + from, trace.end());
  return pieces;
}

}  // namespace detail

inline MarkerDecodeResult decode_marker_code(const std::vector<Bits>& traces,
                                             const MarkerCodeParams& p, double q_del) {
  MarkerDecodeResult res;
  const std::size_t tau = p.detection_threshold(q_del);
  std::vector<std::vector<Bits>> segmented;
  for (const Bits& tr : traces) {
    auto pieces = detail::segment_trace(tr, p, tau);
    if (pieces) segmented.push_back(std::move(*pieces));
    else ++res.traces_discarded;
  }
  res.traces_used = segmented.size();
  if (segmented.empty()) {
    res.error = "all traces discarded";
    return res;
  }

  std::vector<Bits> contents(p.total_blocks());
  for (std::size_t j = 0; j < p.total_blocks(); ++j) {
    const std::size_t want = p.content_of(j);
    // BMA overshoot past the true block end is harmless because destuffing
    // stops after `want` content bits.
    const std::size_t framed_max = detail::framed_upper_bound(want, p.r);
    std::vector<QaryString> column;
    column.reserve(segmented.size());
    for (auto& s : segmented) column.push_back(QaryString{2, s[j]});
    QaryString consensus = bma_reconstruct(column, framed_max, 2);
    contents[j] = detail::inner_decode(consensus.sym, p.r, want);
  }

  if (p.level == 1) {
    res.message.reserve(p.n);
    for (std::size_t j = 0; j < p.data_blocks(); ++j)
      res.message.insert(res.message.end(), contents[j].begin(), contents[j].end());
    res.ok = true;
    return res;
  }

  // Level 2: CRC-failed blocks become erasures; one erased data block per
  // parity group is recoverable by XOR as long as its group's parity holds.
  std::vector<Bits> payloads(p.total_blocks());
  std::vector<bool> erased(p.total_blocks(), false);
  for (std::size_t j = 0; j < p.total_blocks(); ++j) {
    Bits payload(contents[j].begin(), contents[j].end() - 8);
    std::uint8_t crc = 0;
    for (std::size_t i = contents[j].size() - 8; i < contents[j].size(); ++i)
      crc = static_cast<std::uint8_t>((crc << 1) | contents[j][i]);
    if (crc8(payload) != crc) {
      erased[j] = true;
      res.erasures.push_back(j);
    }
    payloads[j] = std::move(payload);
  }
  for (std::size_t group = 0; group < p.parity_blocks(); ++group) {
    std::size_t gstart = group * p.parity_group;
    std::size_t gend = std::min(gstart + p.parity_group, p.data_blocks());
    std::size_t parity_idx = p.data_blocks() + group;
    std::vector<std::size_t> missing;
    for (std::size_t j = gstart; j < gend; ++j)
      if (erased[j]) missing.push_back(j);
    if (missing.empty()) continue;
    if (missing.size() > 1 || erased[parity_idx]) {
      res.error = "unrepairable erasures";
      return res;
    }
    Bits fix = payloads[parity_idx];  // parity payload is zero-padded width
    for (std::size_t j = gstart; j < gend; ++j)
      if (j != missing[0])
        for (std::size_t i = 0; i < p.payload_of(j); ++i) fix[i] ^= payloads[j][i];
    fix.resize(p.payload_of(missing[0]));
    payloads[missing[0]] = std::move(fix);
    erased[missing[0]] = false;
    ++res.repaired;
  }
  res.message.reserve(p.n);
  for (std::size_t j = 0; j < p.data_blocks(); ++j)
    res.message.insert(res.message.end(), payloads[j].begin(), payloads[j].end());
  res.ok = true;
  return res;
}

// Convenience wrappers for bit vectors as binary QaryStrings.
inline QaryString bits_to_string(const Bits& b) { return QaryString{2, b}; }
inline Bits random_message(std::size_t n, SplitMix64& rng) {
  Bits m(n);
  for (auto& b : m) b = static_cast<std::uint8_t>(rng.next() & 1u);
  return m;
}

}  // namespace dsc

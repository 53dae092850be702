#pragma once
// Stable JSON file formats. Field order is fixed (ordered_json) and every
// document carries schema_version, so identical inputs serialize to
// identical bytes.

#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

#include "dsc/profile_code.hpp"
#include "dsc/set_family.hpp"
#include "dsc/version.hpp"

namespace dsc {

using ojson = nlohmann::ordered_json;

inline ojson codebook_to_json(const ProfileCodebook& cb) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["parameters"] = {{"q", cb.q},   {"n", cb.n},      {"ell", cb.ell}, {"d", cb.d},
                     {"p", cb.p},   {"beta", cb.beta}};
  j["parameters"]["kmers"] = cb.S.kmers;
  j["entries"] = ojson::array();
  for (const auto& e : cb.entries) {
    ojson entry;
    entry["profile"] = e.profile.counts;
    entry["string"] = format_string(e.codestring);
    j["entries"].push_back(std::move(entry));
  }
  if (cb.d_min) j["d_min"] = *cb.d_min;
  else j["d_min"] = nullptr;
  return j;
}

inline ProfileCodebook codebook_from_json(const ojson& j) {
  if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
    throw std::invalid_argument("unsupported codebook schema");
  const auto& prm = j.at("parameters");
  ProfileCodebook cb;
  cb.q = prm.at("q").get<std::uint32_t>();
  cb.n = prm.at("n").get<std::uint64_t>();
  cb.ell = prm.at("ell").get<std::uint32_t>();
  cb.d = prm.at("d").get<std::size_t>();
  cb.p = prm.at("p").get<std::uint64_t>();
  cb.beta = prm.at("beta").get<std::vector<std::uint64_t>>();
  cb.S = AllowedKmerSet{cb.q, cb.ell, prm.at("kmers").get<std::vector<std::uint64_t>>()};
  for (const auto& e : j.at("entries")) {
    ProfileCodebook::Entry entry;
    entry.profile = ProfileVector{cb.q, cb.ell, cb.n,
                                  e.at("profile").get<std::vector<std::int64_t>>()};
    entry.codestring = parse_string(e.at("string").get<std::string>());
    cb.entries.push_back(std::move(entry));
  }
  if (j.contains("d_min") && !j.at("d_min").is_null())
    cb.d_min = j.at("d_min").get<std::int64_t>();
  return cb;
}

inline ojson family_to_json(const SetFamily& fam, std::uint64_t q, std::size_t t,
                            const Labeling& labeling) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = fam.ground;
  j["k"] = fam.k;
  j["q"] = q;
  j["t"] = t;
  j["sets"] = fam.sets;
  j["labeling"] = labeling;
  return j;
}

inline std::pair<SetFamily, Labeling> family_from_json(const ojson& j, std::uint64_t& q,
                                                       std::size_t& t) {
  if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
    throw std::invalid_argument("unsupported family schema");
  SetFamily fam;
  fam.ground = j.at("n").get<std::size_t>();
  fam.k = j.at("k").get<std::size_t>();
  q = j.at("q").get<std::uint64_t>();
  t = j.at("t").get<std::size_t>();
  fam.sets = j.at("sets").get<std::vector<std::vector<std::size_t>>>();
  Labeling lab = j.at("labeling").get<Labeling>();
  return {std::move(fam), std::move(lab)};
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace dsc

// dsc: experiment driver for the profile-code, trace-reconstruction,
// set-discrepancy, and unique-reconstruction modules. Every command is
// deterministic: the same flags and seed produce byte-identical files.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dsc/json_io.hpp"
#include "dsc/lift.hpp"
#include "dsc/marker.hpp"
#include "dsc/parallel.hpp"
#include "dsc/profile_code.hpp"
#include "dsc/rng.hpp"
#include "dsc/set_family.hpp"
#include "dsc/trace.hpp"
#include "dsc/unique.hpp"
#include "dsc/version.hpp"

namespace {

using dsc::ojson;

// Thrown by command bodies for domain-level failures (exit code 1, e.g. a
// decoder giving up or a verifier finding a violation).
struct CommandFailure {
  std::string message;
};

// JSON flavor of a CLI11 config file: nested objects select subcommands,
// scalar or array values feed the options of the innermost level.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override {
    return "{}\n";
  }
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    auto j = nlohmann::json::parse(input);
    std::vector<CLI::ConfigItem> out;
    collect(j, {}, out);
    return out;
  }

 private:
  static std::string scalar(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }
  static void collect(const nlohmann::json& j, std::vector<std::string> parents,
                      std::vector<CLI::ConfigItem>& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object()) {
        auto deeper = parents;
        deeper.push_back(it.key());
        collect(it.value(), deeper, out);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = it.key();
      if (it.value().is_array())
        for (const auto& v : it.value()) item.inputs.push_back(scalar(v));
      else
        item.inputs.push_back(scalar(it.value()));
      out.push_back(std::move(item));
    }
  }
};

std::string format_qdel(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void emit(const ojson& j) { std::cout << j.dump() << "\n"; }

void write_lines(const std::string& path, const std::string& content) {
  dsc::write_text_file(path, content);
}

std::vector<std::string> read_lines(const std::string& path) {
  std::istringstream in(dsc::read_text_file(path));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

// ---------------------------------------------------------------- profile

struct ProfileBuildArgs {
  std::uint32_t q = 2;
  std::uint32_t ell = 3;
  std::uint64_t n = 8;
  std::size_t d = 3;
  std::uint64_t p = 7;
  std::vector<std::uint64_t> beta;
  std::vector<std::string> kmers;
  std::string out;
  std::string vectors_out;
};

dsc::AllowedKmerSet kmer_set_from_args(std::uint32_t q, std::uint32_t ell,
                                       const std::vector<std::string>& kmers) {
  if (kmers.empty()) return dsc::AllowedKmerSet::full(q, ell);
  dsc::AllowedKmerSet S{q, ell, {}};
  for (const auto& text : kmers) {
    auto w = dsc::parse_string(text);
    if (w.q != q || w.size() != ell)
      throw std::invalid_argument("window " + text + " does not match q/ell");
    S.kmers.push_back(dsc::window_code(w, 0, ell));
  }
  std::sort(S.kmers.begin(), S.kmers.end());
  S.kmers.erase(std::unique(S.kmers.begin(), S.kmers.end()), S.kmers.end());
  return S;
}

void run_profile_build(const ProfileBuildArgs& a) {
  auto beta = a.beta;
  if (beta.empty()) beta.assign(a.d > 1 ? a.d - 1 : 0, 0);
  auto S = kmer_set_from_args(a.q, a.ell, a.kmers);
  auto cb = dsc::build_profile_codebook(a.q, a.n, a.ell, a.d, a.p, beta, S);
  dsc::write_text_file(a.out, dsc::codebook_to_json(cb).dump(2) + "\n");
  if (!a.vectors_out.empty()) {
    auto code = dsc::make_varshamov(S.kmers.size(), a.d - 1, a.p, beta);
    ojson v;
    v["schema_version"] = dsc::kSchemaVersion;
    v["vectors"] = dsc::varshamov_enumerate(
        code, static_cast<std::int64_t>(a.n - a.ell + 1));
    dsc::write_text_file(a.vectors_out, v.dump(2) + "\n");
  }
  ojson rep;
  rep["command"] = "profile build";
  rep["entries"] = cb.entries.size();
  if (cb.d_min) rep["d_min"] = *cb.d_min;
  else rep["d_min"] = nullptr;
  rep["out"] = a.out;
  emit(rep);
}

struct ProfileEncodeArgs {
  std::string codebook;
  std::string string;
  std::size_t s = 0, c = 0, o = 0;
  std::uint64_t seed = 0;
  std::string out;
};

void run_profile_encode(const ProfileEncodeArgs& a) {
  auto cb = dsc::codebook_from_json(ojson::parse(dsc::read_text_file(a.codebook)));
  auto x = dsc::parse_string(a.string);
  if (x.q != cb.q || x.size() != cb.n)
    throw std::invalid_argument("string does not match the codebook parameters");
  dsc::SplitMix64 rng(a.seed);
  auto ro = dsc::channel_simulate(x, cb.ell, a.s, a.c, a.o, rng);
  ojson j;
  j["schema_version"] = dsc::kSchemaVersion;
  j["q"] = ro.q;
  j["ell"] = ro.ell;
  j["n"] = ro.n;
  j["s"] = ro.s_applied;
  j["c"] = ro.c_applied;
  j["o"] = ro.o_applied;
  j["seed"] = a.seed;
  j["transmitted"] = dsc::format_string(x);
  j["reads"] = ro.reads;
  dsc::write_text_file(a.out, j.dump(2) + "\n");
  ojson rep;
  rep["command"] = "profile encode";
  rep["reads"] = ro.reads.size();
  rep["out"] = a.out;
  emit(rep);
}

void run_profile_decode(const std::string& codebook_path, const std::string& readout_path) {
  auto cb = dsc::codebook_from_json(ojson::parse(dsc::read_text_file(codebook_path)));
  auto j = ojson::parse(dsc::read_text_file(readout_path));
  dsc::ChannelReadout ro;
  ro.q = j.at("q").get<std::uint32_t>();
  ro.ell = j.at("ell").get<std::uint32_t>();
  ro.n = j.at("n").get<std::uint64_t>();
  ro.reads = j.at("reads").get<std::vector<std::uint64_t>>();
  if (ro.q != cb.q || ro.ell != cb.ell || ro.n != cb.n)
    throw std::invalid_argument("readout does not match the codebook parameters");
  auto dec = dsc::decode_profile(ro, cb);
  ojson rep;
  rep["command"] = "profile decode";
  rep["decoded"] = dsc::format_string(dec.codestring);
  rep["distance"] = dec.distance;
  emit(rep);
}

void run_profile_count(std::uint32_t q, std::uint32_t ell, std::uint64_t n) {
  ojson rep;
  rep["command"] = "profile count";
  rep["q"] = q;
  rep["ell"] = ell;
  rep["n"] = n;
  rep["count"] = dsc::count_distinct_profiles(q, ell, n);
  emit(rep);
}

struct ProfileVectorArgs {
  std::string string;
  std::string other;
  std::uint32_t ell = 2;
};

void run_profile_vector(const ProfileVectorArgs& a) {
  auto x = dsc::parse_string(a.string);
  auto px = dsc::profile(x, a.ell);
  ojson rep;
  rep["command"] = "profile vector";
  rep["string"] = a.string;
  rep["ell"] = a.ell;
  rep["profile"] = px.counts;
  if (!a.other.empty()) {
    auto y = dsc::parse_string(a.other);
    auto py = dsc::profile(y, a.ell);
    rep["other"] = a.other;
    rep["other_profile"] = py.counts;
    rep["distance"] = dsc::asymmetric_distance(px, py);
  }
  emit(rep);
}

// ------------------------------------------------------------------ trace

struct TraceSimulateArgs {
  std::string string;
  double qdel = 0.05;
  std::size_t traces = 5;
  std::uint64_t seed = 0;
  std::string out;
};

void run_trace_simulate(const TraceSimulateArgs& a) {
  auto x = dsc::parse_string(a.string);
  dsc::SplitMix64 rng(a.seed);
  auto traces = dsc::generate_traces(x, a.qdel, a.traces, rng);
  std::string dump;
  for (std::size_t i = 0; i < traces.size(); ++i)
    dump += std::to_string(i) + "\t" + dsc::format_string(traces[i]) + "\n";
  write_lines(a.out, dump);
  ojson rep;
  rep["command"] = "trace simulate";
  rep["traces"] = traces.size();
  rep["out"] = a.out;
  emit(rep);
}

struct TraceEncodeArgs {
  std::size_t n = 64;
  std::string message;
  int level = 1;
  double c = 2.0;
  std::uint64_t seed = 0;
  std::string out;
};

void run_trace_encode(const TraceEncodeArgs& a) {
  auto p = dsc::MarkerCodeParams::make(a.n, a.c, a.level);
  dsc::Bits msg;
  if (!a.message.empty()) {
    auto parsed = dsc::parse_string(a.message);
    if (parsed.q != 2 || parsed.size() != a.n)
      throw std::invalid_argument("message must be n binary symbols");
    msg = parsed.sym;
  } else {
    dsc::SplitMix64 rng(a.seed);
    msg = dsc::random_message(a.n, rng);
  }
  auto cw = dsc::encode_marker_code(msg, p);
  ojson j;
  j["schema_version"] = dsc::kSchemaVersion;
  j["n"] = a.n;
  j["level"] = a.level;
  j["c"] = a.c;
  j["seed"] = a.seed;
  j["message"] = dsc::format_string(dsc::bits_to_string(msg));
  j["codeword"] = dsc::format_string(dsc::bits_to_string(cw));
  if (a.out.empty()) emit(j);
  else {
    dsc::write_text_file(a.out, j.dump(2) + "\n");
    ojson rep;
    rep["command"] = "trace encode";
    rep["codeword_bits"] = cw.size();
    rep["out"] = a.out;
    emit(rep);
  }
}

struct TraceDecodeArgs {
  std::string file;
  std::size_t n = 64;
  int level = 1;
  double c = 2.0;
  double qdel = 0.05;
};

void run_trace_decode(const TraceDecodeArgs& a) {
  auto p = dsc::MarkerCodeParams::make(a.n, a.c, a.level);
  std::vector<dsc::Bits> traces;
  for (const auto& line : read_lines(a.file)) {
    auto tab = line.find('\t');
    auto body = tab == std::string::npos ? line : line.substr(tab + 1);
    auto parsed = dsc::parse_string(body);
    if (parsed.q != 2) throw std::invalid_argument("traces must be binary");
    traces.push_back(parsed.sym);
  }
  auto dec = dsc::decode_marker_code(traces, p, a.qdel);
  if (!dec.ok) throw CommandFailure{"decode failed: " + dec.error};
  ojson rep;
  rep["command"] = "trace decode";
  rep["message"] = dsc::format_string(dsc::bits_to_string(dec.message));
  rep["traces_used"] = dec.traces_used;
  rep["traces_discarded"] = dec.traces_discarded;
  rep["repaired"] = dec.repaired;
  emit(rep);
}

struct TraceSweepArgs {
  std::size_t n = 1024;
  std::vector<double> qdel{0.02, 0.05, 0.1};
  std::vector<std::size_t> traces{5, 20, 80};
  std::size_t trials = 100;
  int level = 1;
  double c = 2.0;
  std::uint64_t seed = 0;
  std::string csv;
};

void run_trace_sweep(const TraceSweepArgs& a) {
  auto started = std::chrono::steady_clock::now();
  auto p = dsc::MarkerCodeParams::make(a.n, a.c, a.level);
  std::string csv = "n,q_del,t,level,trials,successes,seed\n";
  ojson cells = ojson::array();
  std::size_t cell = 0;
  for (double qd : a.qdel)
    for (std::size_t t : a.traces) {
      std::vector<std::uint8_t> ok(a.trials, 0);
      dsc::parallel_for(a.trials, [&](std::size_t trial) {
        auto rng = dsc::stream_rng(a.seed, cell * a.trials + trial);
        auto msg = dsc::random_message(a.n, rng);
        auto cw = dsc::encode_marker_code(msg, p);
        auto traces = dsc::generate_traces(dsc::bits_to_string(cw), qd, t, rng);
        std::vector<dsc::Bits> raw;
        raw.reserve(traces.size());
        for (auto& tr : traces) raw.push_back(std::move(tr.sym));
        auto dec = dsc::decode_marker_code(raw, p, qd);
        ok[trial] = dec.ok && dec.message == msg ? 1 : 0;
      });
      std::size_t successes = 0;
      for (auto v : ok) successes += v;
      csv += std::to_string(a.n) + "," + format_qdel(qd) + "," + std::to_string(t) +
             "," + std::to_string(a.level) + "," + std::to_string(a.trials) + "," +
             std::to_string(successes) + "," + std::to_string(a.seed) + "\n";
      ojson c;
      c["q_del"] = qd;
      c["t"] = t;
      c["successes"] = successes;
      cells.push_back(c);
      ++cell;
    }
  write_lines(a.csv, csv);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  ojson rep;
  rep["command"] = "trace sweep";
  rep["version"] = dsc::kVersion;
  rep["n"] = a.n;
  rep["level"] = a.level;
  rep["trials"] = a.trials;
  rep["seed"] = a.seed;
  rep["cells"] = cells;
  rep["csv"] = a.csv;
  rep["wall_ms"] = elapsed;
  emit(rep);
}

struct TraceBmaArgs {
  std::string file;
  std::size_t n = 0;
};

void run_trace_bma(const TraceBmaArgs& a) {
  std::vector<dsc::QaryString> traces;
  for (const auto& line : read_lines(a.file)) {
    auto tab = line.find('\t');
    traces.push_back(dsc::parse_string(tab == std::string::npos ? line : line.substr(tab + 1)));
  }
  if (traces.empty()) throw std::invalid_argument("no traces in file");
  for (const auto& t : traces)
    if (t.q != traces[0].q) throw std::invalid_argument("traces mix alphabets");
  auto consensus = dsc::bma_reconstruct(traces, a.n, traces[0].q);
  ojson rep;
  rep["command"] = "trace bma";
  rep["consensus"] = dsc::format_string(consensus);
  emit(rep);
}

// ------------------------------------------------------------ discrepancy

struct DiscrepancyBuildArgs {
  std::size_t k = 2;
  std::uint64_t q = 3;
  std::size_t t = 1;
  bool augment = false;
  std::string out;
};

void run_discrepancy_build(const DiscrepancyBuildArgs& a) {
  auto fam = dsc::babai_frankl_family(a.k, a.q, a.t);
  auto lab = dsc::balanced_labeling(a.k, a.q);
  std::size_t added = 0;
  if (a.augment) {
    auto td = dsc::family_as_design(fam, a.t, a.q);
    for (auto& blk : dsc::augment_td(td, lab)) {
      fam.sets.push_back(std::move(blk));
      ++added;
    }
  }
  dsc::write_text_file(a.out, dsc::family_to_json(fam, a.q, a.t, lab).dump(2) + "\n");
  ojson rep;
  rep["command"] = "discrepancy build";
  rep["sets"] = fam.sets.size();
  rep["augmented"] = added;
  rep["out"] = a.out;
  emit(rep);
}

void run_discrepancy_verify(const std::string& path) {
  std::uint64_t q = 0;
  std::size_t t = 0;
  auto [fam, lab] = dsc::family_from_json(ojson::parse(dsc::read_text_file(path)), q, t);
  if (lab.size() != fam.ground)
    throw std::invalid_argument("labeling does not cover the ground set");
  for (int v : lab)
    if (v != 1 && v != -1) throw std::invalid_argument("labeling must be +-1");
  for (const auto& s : fam.sets) {
    if (s.size() != fam.k) throw CommandFailure{"set of size != k found"};
    if (!std::is_sorted(s.begin(), s.end())) throw std::invalid_argument("unsorted set");
    for (auto pt : s)
      if (pt >= fam.ground) throw std::invalid_argument("point outside ground set");
  }
  if (auto w = dsc::verify_t_bounded(fam, t)) {
    ojson bad;
    bad["violation"] = "intersection";
    bad["set_i"] = w->i;
    bad["set_j"] = w->j;
    bad["size"] = w->size;
    emit(bad);
    throw CommandFailure{"family is not t-bounded"};
  }
  auto rep = dsc::discrepancy(fam, lab);
  if (rep.max_abs > 1) {
    ojson bad;
    bad["violation"] = "discrepancy";
    bad["max_abs"] = rep.max_abs;
    emit(bad);
    throw CommandFailure{"labeling is not balanced"};
  }
  ojson okrep;
  okrep["command"] = "discrepancy verify";
  okrep["sets"] = fam.sets.size();
  okrep["t"] = t;
  okrep["max_discrepancy"] = rep.max_abs;
  emit(okrep);
}

// ------------------------------------------------------------------ unique

struct UniqueArgs {
  std::string string;
  std::string file;
  std::size_t L = 2;
  std::uint64_t n = 0;  // assemble target; 0 = string length
  std::string out;
};

std::vector<std::string> unique_inputs(const UniqueArgs& a) {
  if (!a.string.empty() && !a.file.empty())
    throw std::invalid_argument("give either --string or --file, not both");
  if (!a.string.empty()) return {a.string};
  if (!a.file.empty()) return read_lines(a.file);
  throw std::invalid_argument("one of --string or --file is required");
}

void run_unique_check(const UniqueArgs& a) {
  std::string body;
  for (const auto& text : unique_inputs(a)) {
    auto x = dsc::parse_string(text);
    ojson line;
    line["string"] = text;
    line["L"] = a.L;
    line["ukkonen"] = dsc::ukkonen_sufficient(x, a.L);
    line["period"] = dsc::period(x);
    auto candidates = dsc::assemble(dsc::substring_spectrum(x, a.L, false), x.size());
    line["unique"] = candidates.size() == 1;
    line["candidates_count"] = candidates.size();
    body += line.dump() + "\n";
  }
  if (!a.out.empty()) write_lines(a.out, body);
  std::cout << body;
}

void run_unique_assemble(const UniqueArgs& a) {
  std::string body;
  for (const auto& text : unique_inputs(a)) {
    auto x = dsc::parse_string(text);
    std::uint64_t n = a.n ? a.n : x.size();
    auto candidates = dsc::assemble(dsc::substring_spectrum(x, a.L, false), n);
    ojson line;
    line["string"] = text;
    line["L"] = a.L;
    line["n"] = n;
    ojson arr = ojson::array();
    for (const auto& c : candidates) arr.push_back(dsc::format_string(c));
    line["candidates"] = arr;
    body += line.dump() + "\n";
  }
  if (!a.out.empty()) write_lines(a.out, body);
  std::cout << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coding-theoretic toolkit for DNA data storage experiments"};
  app.set_version_flag("--version", std::string(dsc::kVersion));
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON config file mirroring the flag names");
  app.require_subcommand(1);

  // profile
  auto* profile = app.add_subcommand("profile", "l-mer profile codes and the storage channel");
  profile->require_subcommand(1);

  ProfileBuildArgs pb;
  auto* pbuild = profile->add_subcommand("build", "enumerate a codebook and write it as JSON");
  pbuild->add_option("--q", pb.q, "alphabet size");
  pbuild->add_option("--ell", pb.ell, "window length");
  pbuild->add_option("--n", pb.n, "string length");
  pbuild->add_option("--d", pb.d, "designed minimum asymmetric distance");
  pbuild->add_option("--p", pb.p, "prime modulus");
  pbuild->add_option("--beta", pb.beta, "syndrome target, one residue per parity row")
      ->delimiter(',');
  pbuild->add_option("--kmers", pb.kmers, "allowed windows (default: all)")->delimiter(',');
  pbuild->add_option("--out", pb.out, "codebook JSON path")->required();
  pbuild->add_option("--vectors-out", pb.vectors_out, "also dump the enumerated lattice vectors");
  pbuild->callback([&pb] { run_profile_build(pb); });

  ProfileEncodeArgs pe;
  auto* pencode = profile->add_subcommand("encode", "push a codestring through the channel");
  pencode->add_option("--codebook", pe.codebook, "codebook JSON path")->required();
  pencode->add_option("--string", pe.string, "stored string")->required();
  pencode->add_option("--s", pe.s, "synthesis substitutions");
  pencode->add_option("--c", pe.c, "coverage drops");
  pencode->add_option("--o", pe.o, "read substitutions");
  pencode->add_option("--seed", pe.seed, "channel seed");
  pencode->add_option("--out", pe.out, "readout JSON path")->required();
  pencode->callback([&pe] { run_profile_encode(pe); });

  std::string pd_codebook, pd_readout;
  auto* pdecode = profile->add_subcommand("decode", "decode a readout dump");
  pdecode->add_option("--codebook", pd_codebook, "codebook JSON path")->required();
  pdecode->add_option("--readout", pd_readout, "readout JSON path")->required();
  pdecode->callback([&pd_codebook, &pd_readout] { run_profile_decode(pd_codebook, pd_readout); });

  std::uint32_t pc_q = 2, pc_ell = 2;
  std::uint64_t pc_n = 8;
  auto* pcount = profile->add_subcommand("count", "count distinct profiles of length-n strings");
  pcount->add_option("--q", pc_q, "alphabet size");
  pcount->add_option("--ell", pc_ell, "window length");
  pcount->add_option("--n", pc_n, "string length");
  pcount->callback([&pc_q, &pc_ell, &pc_n] { run_profile_count(pc_q, pc_ell, pc_n); });

  ProfileVectorArgs pv;
  auto* pvector = profile->add_subcommand("vector", "print the profile of a string");
  pvector->add_option("--string", pv.string, "input string")->required();
  pvector->add_option("--other", pv.other, "second string: also print the distance");
  pvector->add_option("--ell", pv.ell, "window length");
  pvector->callback([&pv] { run_profile_vector(pv); });

  // trace
  auto* trace = app.add_subcommand("trace", "deletion channel and coded trace reconstruction");
  trace->require_subcommand(1);

  TraceSimulateArgs ts;
  auto* tsim = trace->add_subcommand("simulate", "sample deletion-channel traces");
  tsim->add_option("--string", ts.string, "source string")->required();
  tsim->add_option("--qdel", ts.qdel, "deletion probability");
  tsim->add_option("--traces", ts.traces, "number of traces");
  tsim->add_option("--seed", ts.seed, "channel seed");
  tsim->add_option("--out", ts.out, "trace dump path")->required();
  tsim->callback([&ts] { run_trace_simulate(ts); });

  TraceEncodeArgs te;
  auto* tencode = trace->add_subcommand("encode", "marker-encode a message");
  tencode->add_option("--n", te.n, "message length in bits");
  tencode->add_option("--message", te.message, "explicit message bits (default: random)");
  tencode->add_option("--level", te.level, "1 plain, 2 checksum + parity");
  tencode->add_option("--c", te.c, "marker constant");
  tencode->add_option("--seed", te.seed, "message seed");
  tencode->add_option("--out", te.out, "write the encode record here instead of stdout");
  tencode->callback([&te] { run_trace_encode(te); });

  TraceDecodeArgs td;
  auto* tdecode = trace->add_subcommand("decode", "decode a trace dump");
  tdecode->add_option("--file", td.file, "trace dump path")->required();
  tdecode->add_option("--n", td.n, "message length in bits");
  tdecode->add_option("--level", td.level, "1 plain, 2 checksum + parity");
  tdecode->add_option("--c", td.c, "marker constant");
  tdecode->add_option("--qdel", td.qdel, "deletion probability used for detection");
  tdecode->callback([&td] { run_trace_decode(td); });

  TraceSweepArgs tw;
  auto* tsweep = trace->add_subcommand("sweep", "Monte-Carlo success grid, CSV output");
  tsweep->add_option("--n", tw.n, "message length in bits");
  tsweep->add_option("--qdel", tw.qdel, "deletion probabilities")->delimiter(',');
  tsweep->add_option("--traces", tw.traces, "trace counts")->delimiter(',');
  tsweep->add_option("--trials", tw.trials, "trials per cell");
  tsweep->add_option("--level", tw.level, "1 plain, 2 checksum + parity");
  tsweep->add_option("--c", tw.c, "marker constant");
  tsweep->add_option("--seed", tw.seed, "master seed");
  tsweep->add_option("--csv", tw.csv, "CSV output path")->required();
  tsweep->callback([&tw] { run_trace_sweep(tw); });

  TraceBmaArgs tb;
  auto* tbma = trace->add_subcommand("bma", "majority-alignment consensus of a trace dump");
  tbma->add_option("--file", tb.file, "trace dump path")->required();
  tbma->add_option("--n", tb.n, "target length")->required();
  tbma->callback([&tb] { run_trace_bma(tb); });

  // discrepancy
  auto* disc = app.add_subcommand("discrepancy", "bounded-intersection balanced set families");
  disc->require_subcommand(1);

  DiscrepancyBuildArgs db;
  auto* dbuild = disc->add_subcommand("build", "construct a family and labeling, write JSON");
  dbuild->add_option("--k", db.k, "set size");
  dbuild->add_option("--q", db.q, "prime field order");
  dbuild->add_option("--t", db.t, "intersection bound");
  dbuild->add_flag("--augment", db.augment, "append the two-group augmentation blocks");
  dbuild->add_option("--out", db.out, "family JSON path")->required();
  dbuild->callback([&db] { run_discrepancy_build(db); });

  std::string dv_file;
  auto* dverify = disc->add_subcommand("verify", "check a family file's invariants");
  dverify->add_option("--file", dv_file, "family JSON path")->required();
  dverify->callback([&dv_file] { run_discrepancy_verify(dv_file); });

  // unique
  auto* unique = app.add_subcommand("unique", "substring-spectrum reconstructability");
  unique->require_subcommand(1);

  UniqueArgs uc;
  auto* ucheck = unique->add_subcommand("check", "per-string reconstructability report");
  ucheck->add_option("--string", uc.string, "single input string");
  ucheck->add_option("--file", uc.file, "strings file, one per line");
  ucheck->add_option("--L", uc.L, "substring length")->required();
  ucheck->add_option("--out", uc.out, "also write the JSON lines here");
  ucheck->callback([&uc] { run_unique_check(uc); });

  UniqueArgs ua;
  auto* uassemble = unique->add_subcommand("assemble", "enumerate spectrum preimages");
  uassemble->add_option("--string", ua.string, "single input string");
  uassemble->add_option("--file", ua.file, "strings file, one per line");
  uassemble->add_option("--L", ua.L, "substring length")->required();
  uassemble->add_option("--n", ua.n, "target length (default: input length)");
  uassemble->add_option("--out", ua.out, "also write the JSON lines here");
  uassemble->callback([&ua] { run_unique_assemble(ua); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CommandFailure& e) {
    std::cerr << "error: " << e.message << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

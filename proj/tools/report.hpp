#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rees/corpus.hpp"

namespace rees::cli {

using nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "rees-report/1";
inline constexpr const char* kManifestSchema = "rees-corpus/1";

inline std::string fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

inline json gens_json(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

/// Generators for display: the reduced basis in the requested order,
/// thinned to a minimal generating set when it is homogeneous.
inline std::vector<Polynomial> display_gens(const IdealHandle& I, const MonomialOrder& order) {
  std::vector<Polynomial> out;
  IdealHandle q(RingDescriptor{I.ring(), {}}, I.base().quotient);
  for (const auto& p : I.gb(order).elements())
    if (!I.has_quotient() || !q.contains(p)) out.push_back(p);
  if (I.has_quotient() || I.is_unit()) return out;
  for (const auto& p : out)
    if (!p.is_homogeneous()) return out;
  return minimal_generators(out);
}

inline json ideal_json(const std::optional<IdealHandle>& I, const MonomialOrder& order) {
  if (!I) return nullptr;
  return gens_json(display_gens(*I, order));
}

inline json verdict_json(const Verdict& v, bool quiet, const MonomialOrder& order) {
  json j;
  j["property"] = v.property;
  j["result"] = v.result;
  j["message"] = v.message;
  j["fail_index"] = v.fail_index ? json(*v.fail_index) : json(nullptr);
  if (quiet) {
    j["witnesses"] = nullptr;
  } else {
    j["witnesses"] = {{"colon", ideal_json(v.witnesses.colon, order)},
                      {"intersection", ideal_json(v.witnesses.intersection, order)},
                      {"expected", ideal_json(v.witnesses.expected, order)}};
    j["details"] = v.details;
  }
  j["notes"] = v.notes;
  return j;
}

inline json betti_json(const BettiTable& b) {
  json a = json::array();
  for (const auto& [key, mult] : b.entries())
    a.push_back({{"i", key.first}, {"dx", key.second.x}, {"dy", key.second.y}, {"mult", mult}});
  return a;
}

inline json reg_json(const std::optional<int>& r) { return r ? json(*r) : json("-inf"); }

inline json outcome_json(const EntryOutcome& o) {
  json j;
  j["id"] = o.id;
  j["status"] = o.skipped() ? "skip" : o.pass() ? "pass" : "fail";
  if (o.skipped()) j["skip"] = o.skip;
  if (!o.error.empty()) j["error"] = o.error;
  json checks = json::array();
  for (const auto& c : o.checks)
    checks.push_back({{"key", c.key}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  j["checks"] = checks;
  return j;
}

// ---- manifest ----

inline json entry_json(const CorpusEntry& e) {
  json j;
  j["id"] = e.id;
  j["source"] = e.source;
  if (!e.skip.empty()) {
    j["skip"] = e.skip;
    return j;
  }
  j["file"] = e.id + ".txt";
  json ex = json::object();
  for (const auto& [k, v] : e.expect) {
    if (const bool* b = std::get_if<bool>(&v)) ex[k] = *b;
    else ex[k] = std::get<int>(v);
  }
  j["expect"] = ex;
  json ws = json::array();
  for (const auto& w : e.witnesses)
    ws.push_back({{"property", w.property}, {"fail_index", w.fail_index}, {"kind", w.kind}, {"gens", w.gens}});
  j["witnesses"] = ws;
  j["slow"] = e.slow;
  if (!e.remark.empty()) j["remark"] = e.remark;
  return j;
}

inline json manifest_json(const std::vector<CorpusEntry>& entries) {
  json j;
  j["schema"] = kManifestSchema;
  j["entries"] = json::array();
  for (const auto& e : entries) j["entries"].push_back(entry_json(e));
  return j;
}

/// Writes <dir>/<id>.txt for every runnable entry and <dir>/manifest.json.
inline void emit_corpus(const std::vector<CorpusEntry>& entries, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& e : entries) {
    if (!e.skip.empty()) continue;
    std::ofstream f(dir / (e.id + ".txt"), std::ios::binary);
    f << e.text;
    if (!f) throw std::runtime_error("cannot write " + (dir / (e.id + ".txt")).string());
  }
  std::ofstream m(dir / "manifest.json", std::ios::binary);
  m << manifest_json(entries).dump(2) << "\n";
  if (!m) throw std::runtime_error("cannot write " + (dir / "manifest.json").string());
}

class ManifestError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::vector<CorpusEntry> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ManifestError("cannot open manifest " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ManifestError("malformed manifest: " + std::string(e.what()));
  }
  if (j.value("schema", "") != kManifestSchema) throw ManifestError("manifest schema is not " + std::string(kManifestSchema));
  std::vector<CorpusEntry> out;
  try {
    for (const auto& je : j.at("entries")) {
      CorpusEntry e;
      e.id = je.at("id").get<std::string>();
      e.source = je.value("source", "");
      e.skip = je.value("skip", "");
      e.remark = je.value("remark", "");
      e.slow = je.value("slow", false);
      if (e.skip.empty()) {
        auto file = path.parent_path() / je.at("file").get<std::string>();
        std::ifstream f(file, std::ios::binary);
        if (!f) throw ManifestError("cannot open corpus file " + file.string());
        std::stringstream ss;
        ss << f.rdbuf();
        e.text = ss.str();
        for (const auto& [k, v] : je.at("expect").items()) {
          bool known = check_properties().count(k) || integer_keys().count(k);
          if (!known) throw ManifestError("entry " + e.id + ": unknown expectation key '" + k + "'");
          if (v.is_boolean() && !integer_keys().count(k)) e.expect[k] = v.get<bool>();
          else if (v.is_number_integer() && integer_keys().count(k)) e.expect[k] = v.get<int>();
          else throw ManifestError("entry " + e.id + ": bad value for '" + k + "'");
        }
        for (const auto& jw : je.value("witnesses", json::array())) {
          WitnessExpectation w;
          w.property = jw.at("property").get<std::string>();
          w.fail_index = jw.at("fail_index").get<std::size_t>();
          w.kind = jw.at("kind").get<std::string>();
          w.gens = jw.at("gens").get<std::vector<std::string>>();
          if (!check_properties().count(w.property) || (w.kind != "colon" && w.kind != "intersection"))
            throw ManifestError("entry " + e.id + ": malformed witness");
          e.witnesses.push_back(w);
        }
      }
      out.push_back(std::move(e));
    }
  } catch (const json::exception& ex) {
    throw ManifestError("malformed manifest: " + std::string(ex.what()));
  }
  return out;
}

}  // namespace rees::cli

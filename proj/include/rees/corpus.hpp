#pragma once

#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "rees/families.hpp"
#include "rees/resolve.hpp"
#include "rees/sequences.hpp"

namespace rees {

struct CheckOptions {
  SaturationBlock block = SaturationBlock::all;
  /// Positive: decide c-seq by the definition for k up to this bound.
  int c_direct = 0;
};

inline const std::set<std::string>& check_properties() {
  static const std::set<std::string> p{"d-seq",    "c-seq", "wrr",          "almost-reg", "s-seq",
                                       "s-seq-strong", "m-seq", "interval", "seq-lt",     "regular",
                                       "uncond-d", "m-c-criterion", "linear-type"};
  return p;
}

/// Runs one decider by its command-line name.
inline Verdict run_check(const std::string& property, const std::vector<Polynomial>& seq, const RingDescriptor& base,
                         const CheckOptions& opt = {}) {
  if (property == "d-seq") return is_d_sequence(seq, base);
  if (property == "c-seq") return opt.c_direct > 0 ? is_c_sequence_direct(seq, base, opt.c_direct) : is_c_sequence(seq, base);
  if (property == "wrr") return is_weak_rel_reg(seq, base);
  if (property == "almost-reg") return is_almost_regular(seq, base, opt.block);
  if (property == "s-seq") return is_s_sequence(seq, base, false);
  if (property == "s-seq-strong") return is_s_sequence(seq, base, true);
  if (property == "m-seq") return is_m_sequence(seq);
  if (property == "interval") return is_interval_type(seq);
  if (property == "m-c-criterion") return msequence_c_criterion(seq);
  if (property == "seq-lt") return is_seq_linear_type(seq, base);
  if (property == "regular") return is_regular_sequence(seq, base);
  if (property == "uncond-d") return is_unconditioned_d(seq, base);
  if (property == "linear-type") {
    detail::require_polynomial_base(base, "linear-type");
    Verdict v{"linear-type"};
    if (!base.ring->field().is_rational())
      v.notes.push_back("valid in characteristic " + std::to_string(base.ring->field().characteristic()));
    std::vector<Polynomial> nz;
    for (const auto& p : seq)
      if (!p.is_zero()) nz.push_back(p);
    if (nz.empty()) v.notes.push_back("vacuous: zero ideal");
    else v.result = is_linear_type(nz);
    v.message = v.result ? "It is an ideal of linear type" : "Not an ideal of linear type";
    return v;
  }
  throw std::invalid_argument("unknown property '" + property + "'");
}

struct CheckOutcome {
  std::string key;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct EntryOutcome {
  std::string id;
  std::string skip;
  std::vector<CheckOutcome> checks;
  std::string error;
  double seconds = 0;

  bool skipped() const { return !skip.empty(); }
  bool pass() const {
    if (skipped()) return true;
    if (!error.empty()) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline std::string value_string(const ExpectedValue& v) {
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::to_string(std::get<int>(v));
}

inline const std::set<std::string>& integer_keys() {
  static const std::set<std::string> k{"height", "mingens", "reg-y", "reg-x", "reg-y-min"};
  return k;
}

/// Resolution of the Rees algebra of an ideal with structural checks.
struct ReesResolution {
  ResolutionData data;
  Regularity reg;
  bool compose_ok = false;
  bool shifts_ok = false;
  std::optional<bool> exact_ok;  // skipped above kExactnessLimit generators
};

inline constexpr std::size_t kExactnessLimit = 60;

inline ReesResolution resolve_rees(const std::vector<Polynomial>& gens) {
  ReesResolution out;
  out.data = free_resolution(rees_ideal(gens));
  out.reg = reg_xy(out.data);
  out.compose_ok = compose_to_zero(out.data);
  out.shifts_ok = shifts_consistent(out.data);
  std::size_t total = 0;
  for (const auto& s : out.data.shifts) total += s.size();
  if (total <= kExactnessLimit) out.exact_ok = exactness_rank_check(out.data);
  return out;
}

inline Document parse_entry(const CorpusEntry& e) { return parse_document(e.text); }

/// Evaluates every expectation and witness of an entry.
inline EntryOutcome run_entry(const CorpusEntry& e) {
  EntryOutcome out;
  out.id = e.id;
  if (!e.skip.empty()) {
    out.skip = e.skip;
    return out;
  }
  auto t0 = std::chrono::steady_clock::now();
  try {
    Document doc = parse_entry(e);
    const auto& seq = doc.find().polys;
    const RingDescriptor& base = doc.ring;
    std::map<std::string, Verdict> verdicts;
    auto verdict = [&](const std::string& p) -> const Verdict& {
      auto it = verdicts.find(p);
      if (it == verdicts.end()) it = verdicts.emplace(p, run_check(p, seq, base)).first;
      return it->second;
    };
    std::optional<ReesResolution> rees;
    auto rees_res = [&]() -> const ReesResolution& {
      if (!rees) rees = resolve_rees(seq);
      return *rees;
    };
    for (const auto& [key, want] : e.expect) {
      CheckOutcome c{key, value_string(want)};
      if (integer_keys().count(key)) {
        if (!std::holds_alternative<int>(want)) throw std::invalid_argument("expectation '" + key + "' needs an integer");
        int w = std::get<int>(want);
        if (key == "height" || key == "mingens") {
          int got = key == "height" ? height(IdealHandle(base, seq)) : static_cast<int>(minimal_generators(seq).size());
          c.actual = std::to_string(got);
          c.pass = got == w;
        } else {
          const auto& r = rees_res();
          auto got = key == "reg-x" ? r.reg.x : r.reg.y;
          c.actual = reg_string(got);
          c.pass = key == "reg-y-min" ? (got && *got >= w) : (got && *got == w);
          if (key == "reg-y-min") c.expected = ">= " + c.expected;
        }
      } else {
        if (!check_properties().count(key)) throw std::invalid_argument("unknown expectation key '" + key + "'");
        if (!std::holds_alternative<bool>(want)) throw std::invalid_argument("expectation '" + key + "' needs a boolean");
        bool got = verdict(key).result;
        c.actual = got ? "true" : "false";
        c.pass = got == std::get<bool>(want);
      }
      out.checks.push_back(c);
    }
    for (const auto& w : e.witnesses) {
      CheckOutcome c{"witness:" + w.property};
      c.expected = w.kind + "@" + std::to_string(w.fail_index) + " <";
      for (std::size_t k = 0; k < w.gens.size(); ++k) c.expected += (k ? ", " : "") + w.gens[k];
      c.expected += ">";
      const Verdict& v = verdict(w.property);
      const auto& ideal = w.kind == "colon" ? v.witnesses.colon : v.witnesses.intersection;
      if (w.kind != "colon" && w.kind != "intersection") throw std::invalid_argument("unknown witness kind '" + w.kind + "'");
      if (v.result || !v.fail_index || !ideal) {
        c.actual = "no witness";
      } else {
        c.actual = w.kind + "@" + std::to_string(*v.fail_index) + " " + ideal->to_string();
        IdealHandle expect(ideal->base(), parse_polynomials(w.gens, base.ring));
        c.pass = *v.fail_index == w.fail_index && ideal_equal(*ideal, expect);
      }
      out.checks.push_back(c);
    }
    if (rees) {
      CheckOutcome c{"resolution-invariants", "ok"};
      c.pass = rees->compose_ok && rees->shifts_ok && rees->exact_ok.value_or(true);
      c.actual = c.pass ? "ok" : "violated";
      out.checks.push_back(c);
    }
  } catch (const std::exception& ex) {
    out.error = ex.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

/// Runs entries on up to `jobs` worker threads; results keep input order.
inline std::vector<EntryOutcome> run_corpus(const std::vector<CorpusEntry>& entries, unsigned jobs = 1) {
  std::vector<EntryOutcome> out(entries.size());
  if (jobs < 1) jobs = 1;
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(entries.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) out[i] = run_entry(entries[i]);
  };
  if (jobs == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace rees

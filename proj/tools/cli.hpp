#pragma once

#include <chrono>
#include <iostream>
#include <iterator>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "report.hpp"

namespace rees::cli {

enum ExitCode { kTrue = 0, kFalse = 1, kUsage = 2, kInternal = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  bool json = false;
  bool quiet = false;
  std::string order = "grevlex";
  std::uint32_t characteristic = 0;
  std::string seed_family;
  std::string file;
  std::string name;
};

struct Input {
  std::string text;
  Document doc;
  std::size_t index = 0;

  const NamedList& list() const { return doc.lists.at(index); }
  const std::vector<Polynomial>& polys() const { return list().polys; }
};

/// Document text for a family given as "cycle-path N LEN" or "pfaffian R"
/// (commas or colons also separate).
inline std::string family_text(const std::string& spec) {
  std::string s = std::regex_replace(spec, std::regex("[,:]"), " ");
  std::istringstream is(s);
  std::string kind;
  is >> kind;
  std::vector<int> args;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      args.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw UsageError("bad family argument '" + tok + "'");
    } catch (const std::logic_error&) {
      throw UsageError("bad family argument '" + tok + "'");
    }
  }
  std::vector<Polynomial> gens;
  if (kind == "cycle-path") {
    if (args.size() != 2) throw UsageError("cycle-path needs N and LEN");
    gens = cycle_path_ideal(args[0], args[1]);
  } else if (kind == "pfaffian") {
    if (args.size() != 1) throw UsageError("pfaffian needs R");
    gens = pfaffian_sequence(args[0]);
  } else {
    throw UsageError("unknown family '" + kind + "' (expected cycle-path or pfaffian)");
  }
  return ring_statement(RingDescriptor{gens.front().ring(), {}}) + "\n" + list_statement("seq", "a", gens) + "\n";
}

inline Input read_input(const Options& o, std::istream& in) {
  Input r;
  if (!o.seed_family.empty()) {
    if (!o.file.empty()) throw UsageError("give either an input file or --seed-family, not both");
    r.text = family_text(o.seed_family);
  } else if (o.file.empty() || o.file == "-") {
    r.text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(o.file, std::ios::binary);
    if (!f) throw UsageError("cannot open " + o.file);
    r.text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  if (r.text.find_first_not_of(" \t\r\n") == std::string::npos) throw UsageError("empty input");
  std::optional<Field> field;
  if (o.characteristic) field = Field::prime(o.characteristic);
  r.doc = parse_document(r.text, field);
  const NamedList& chosen = r.doc.find(o.name);
  r.index = static_cast<std::size_t>(&chosen - r.doc.lists.data());
  return r;
}

inline std::string canonical_input(const Input& in) {
  return ring_statement(in.doc.ring) + "\n" + list_statement(in.list().kind, in.list().name, in.polys()) + "\n";
}

struct Emitter {
  std::vector<std::string> argv;
  std::ostream& out;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  /// One JSON document per command, keys sorted.
  void report(const Input* in, const json& result, int code) const {
    json j;
    j["schema"] = kReportSchema;
    j["tool"] = {{"name", "rees"}, {"version", kVersion}};
    j["command"] = argv;
    if (in) {
      j["input"] = {{"digest", fnv1a64(canonical_input(*in))},
                    {"field", in->doc.ring.ring->field().to_string()},
                    {"list", in->list().name}};
    } else {
      j["input"] = nullptr;
    }
    j["result"] = result;
    j["exit_code"] = code;
    j["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    out << j.dump(2) << "\n";
  }
};

inline void print_verdict(std::ostream& out, const Verdict& v, bool quiet, const MonomialOrder& order) {
  out << v.message << "\n";
  if (!quiet) {
    for (const auto& d : v.details) out << d << "\n";
    auto show = [&](const char* label, const std::optional<IdealHandle>& I) {
      if (!I) return;
      auto g = display_gens(*I, order);
      out << label << ": <" << (g.empty() ? std::string("0") : to_string(g)) << ">\n";
    };
    show("colon", v.witnesses.colon);
    show("intersection", v.witnesses.intersection);
    show("expected", v.witnesses.expected);
  }
  for (const auto& n : v.notes) out << "note: " << n << "\n";
}

/// Presentation for the resolution commands. `auto` reads a bigraded input
/// as the defining ideal itself and a standard graded one as B/I.
inline BigradedPresentation presentation(const Input& in, const std::string& of) {
  const RingDescriptor& d = in.doc.ring;
  bool bigraded = false;
  for (const auto& b : d.ring->bidegrees()) bigraded = bigraded || b.y > 0;
  std::string mode = of;
  if (mode == "auto") mode = bigraded ? "given" : "quotient";
  if (d.has_quotient()) throw UsageError("resolution commands need a polynomial ring without 'mod'");
  if (mode == "given") {
    std::size_t nx = 0, ny = 0;
    for (const auto& b : d.ring->bidegrees()) (b.y > 0 ? ny : nx)++;
    for (std::size_t i = 0; i < d.ring->nvars(); ++i)
      if ((d.ring->bidegree(i).y > 0) != (i >= nx))
        throw UsageError("x variables must precede y variables in a bigraded ring");
    return BigradedPresentation{d, IdealHandle(d, in.polys()), "custom", nx, ny};
  }
  if (mode == "quotient") return quotient_presentation(in.polys(), d.ring);
  std::vector<Polynomial> nz;
  for (const auto& p : in.polys())
    if (!p.is_zero()) nz.push_back(p);
  if (mode == "rees") return rees_ideal(nz);
  if (mode == "sym") return sym_ideal(nz);
  throw UsageError("unknown --of value '" + of + "'");
}

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Sequence properties, Rees algebras and bigraded resolutions", "rees"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  app.add_flag("--json", opt.json, "Print a JSON report instead of text");
  app.add_flag("--quiet", opt.quiet, "Omit witnesses and details");
  app.add_option("--order", opt.order, "Term order for printed ideals")->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_option("--char", opt.characteristic, "Work over GF(p)");
  app.add_option("--seed-family", opt.seed_family, "Use a generated family as input, e.g. \"cycle-path 5 3\"");
  app.add_option("--name", opt.name, "Which ideal or seq of the input to use");

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", opt.file, "Input file (default: standard input)"); };

  std::string property;
  std::string block = "all";
  int c_direct = 0;
  auto* check = app.add_subcommand("check", "Decide a sequence property");
  check->add_option("property", property, "Property")->required()->check(CLI::IsMember(check_properties()));
  add_file(check);
  check->add_option("--block", block, "Saturating block for almost-reg")->check(CLI::IsMember({"all", "x", "y"}));
  check->add_option("--c-direct", c_direct, "Decide c-seq by definition for k up to this bound");

  auto* lt = app.add_subcommand("linear-type", "Is the ideal of linear type");
  add_file(lt);
  auto* rees_cmd = app.add_subcommand("rees-ideal", "Defining ideal of the Rees algebra");
  add_file(rees_cmd);
  auto* sym_cmd = app.add_subcommand("sym-ideal", "Defining ideal of the symmetric algebra");
  add_file(sym_cmd);

  std::string of = "auto";
  bool want_x = false, want_y = false, matrices = false;
  auto add_of = [&](CLI::App* sub) {
    sub->add_option("--of", of, "auto, given, quotient, rees or sym")
        ->check(CLI::IsMember({"auto", "given", "quotient", "rees", "sym"}));
  };
  auto* resolve_cmd = app.add_subcommand("resolve", "Minimal bigraded free resolution");
  add_file(resolve_cmd);
  add_of(resolve_cmd);
  resolve_cmd->add_flag("--matrices", matrices, "Print the differentials");
  auto* betti_cmd = app.add_subcommand("betti", "Bigraded Betti table");
  add_file(betti_cmd);
  add_of(betti_cmd);
  auto* reg_cmd = app.add_subcommand("reg", "x- and y-regularity");
  add_file(reg_cmd);
  add_of(reg_cmd);
  reg_cmd->add_flag("--x", want_x, "x-regularity");
  reg_cmd->add_flag("--y", want_y, "y-regularity");

  std::string family_kind;
  std::vector<int> family_args;
  auto* family_cmd = app.add_subcommand("family", "Print a generated family");
  family_cmd->add_option("kind", family_kind, "cycle-path or pfaffian")->required()->check(CLI::IsMember({"cycle-path", "pfaffian"}));
  family_cmd->add_option("args", family_args, "N LEN for cycle-path, R for pfaffian")->required();

  std::string manifest, emit;
  std::vector<std::string> only;
  unsigned jobs = 1;
  bool slow = false;
  auto* corpus_cmd = app.add_subcommand("corpus", "Run the regression corpus");
  corpus_cmd->add_option("--manifest", manifest, "manifest.json (default: built-in corpus)");
  corpus_cmd->add_option("--only", only, "Run only these entry ids");
  corpus_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 64u));
  corpus_cmd->add_flag("--slow", slow, "Include entries tagged slow");
  corpus_cmd->add_option("--emit", emit, "Write the built-in corpus to this directory and exit");

  std::vector<std::string> argv_store{"rees"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << "rees: " << e.what() << "\n";
    return kUsage;
  }

  Emitter em{args, out};
  try {
    MonomialOrder order = MonomialOrder::from_tag(opt.order);
    if (check->parsed()) {
      Input input = read_input(opt, in);
      CheckOptions co;
      co.block = block == "x" ? SaturationBlock::x : block == "y" ? SaturationBlock::y : SaturationBlock::all;
      co.c_direct = c_direct;
      Verdict v = run_check(property, input.polys(), input.doc.ring, co);
      int code = v.result ? kTrue : kFalse;
      if (opt.json) em.report(&input, verdict_json(v, opt.quiet, order), code);
      else print_verdict(out, v, opt.quiet, order);
      return code;
    }
    if (lt->parsed()) {
      Input input = read_input(opt, in);
      Verdict v = run_check("linear-type", input.polys(), input.doc.ring);
      int code = v.result ? kTrue : kFalse;
      if (opt.json) em.report(&input, verdict_json(v, opt.quiet, order), code);
      else print_verdict(out, v, opt.quiet, order);
      return code;
    }
    if (rees_cmd->parsed() || sym_cmd->parsed()) {
      Input input = read_input(opt, in);
      if (input.doc.ring.has_quotient()) throw UsageError("Rees and symmetric algebras need a polynomial ring");
      std::vector<Polynomial> nz;
      for (const auto& p : input.polys())
        if (!p.is_zero()) nz.push_back(p);
      BigradedPresentation P = rees_cmd->parsed() ? rees_ideal(nz) : sym_ideal(nz);
      auto gens = display_gens(P.J, order);
      std::string text = ring_statement(P.ambient) + "\n" + list_statement("ideal", "J", gens) + "\n";
      if (opt.json) {
        json r = {{"kind", P.provenance}, {"ring", ring_statement(P.ambient)}, {"gens", gens_json(gens)},
                  {"equigenerated", P.equigenerated}};
        em.report(&input, r, kTrue);
      } else {
        out << text;
      }
      return kTrue;
    }
    if (resolve_cmd->parsed() || betti_cmd->parsed() || reg_cmd->parsed()) {
      Input input = read_input(opt, in);
      BigradedPresentation P = presentation(input, of);
      ResolutionData R = free_resolution(P);
      if (reg_cmd->parsed()) {
        Regularity reg = reg_xy(R);
        bool both = !want_x && !want_y;
        if (opt.json) {
          json r = json::object();
          if (want_x || both) r["reg_x"] = reg_json(reg.x);
          if (want_y || both) r["reg_y"] = reg_json(reg.y);
          em.report(&input, r, kTrue);
        } else {
          if (want_x || both) out << "reg_x = " << reg_string(reg.x) << "\n";
          if (want_y || both) out << "reg_y = " << reg_string(reg.y) << "\n";
        }
        return kTrue;
      }
      BettiTable b = betti(R);
      if (betti_cmd->parsed()) {
        if (opt.json) em.report(&input, {{"betti", betti_json(b)}}, kTrue);
        else out << b.to_grid();
        return kTrue;
      }
      if (opt.json) {
        json steps = json::array();
        for (std::size_t i = 0; i < R.shifts.size(); ++i) {
          json s;
          s["rank"] = R.shifts[i].size();
          json sh = json::array();
          for (const auto& d : R.shifts[i]) sh.push_back({d.x, d.y});
          s["shifts"] = sh;
          if (matrices && i >= 1) {
            json m = json::array();
            for (const auto& row : R.diffs[i - 1]) m.push_back(gens_json(row));
            s["differential"] = m;
          }
          steps.push_back(s);
        }
        em.report(&input, {{"length", R.length()}, {"steps", steps}, {"betti", betti_json(b)}}, kTrue);
      } else {
        out << "length " << R.length() << "\n";
        for (std::size_t i = 0; i < R.shifts.size(); ++i) {
          out << "F" << i << ": rank " << R.shifts[i].size();
          for (const auto& d : R.shifts[i]) out << " " << d.to_string();
          out << "\n";
          if (matrices && i >= 1)
            for (const auto& row : R.diffs[i - 1]) out << "  [" << to_string(row) << "]\n";
        }
        out << b.to_grid();
      }
      return kTrue;
    }
    if (family_cmd->parsed()) {
      std::string spec = family_kind;
      for (int a : family_args) spec += " " + std::to_string(a);
      std::string text = family_text(spec);
      if (opt.json) {
        Document d = parse_document(text);
        json r = {{"ring", ring_statement(d.ring)}, {"seq", gens_json(d.find().polys)}};
        em.report(nullptr, r, kTrue);
      } else {
        out << text;
      }
      return kTrue;
    }
    if (corpus_cmd->parsed()) {
      if (!emit.empty()) {
        emit_corpus(corpus(), emit);
        if (!opt.json) out << "wrote corpus to " << emit << "\n";
        else em.report(nullptr, {{"emitted", emit}}, kTrue);
        return kTrue;
      }
      std::vector<CorpusEntry> entries = manifest.empty() ? corpus() : load_manifest(manifest);
      std::vector<CorpusEntry> chosen;
      for (const auto& id : only) {
        bool found = false;
        for (const auto& e : entries) found = found || e.id == id;
        if (!found) throw UsageError("no corpus entry '" + id + "'");
      }
      for (const auto& e : entries) {
        bool selected = only.empty() || std::find(only.begin(), only.end(), e.id) != only.end();
        if (selected && (slow || !e.slow || !only.empty())) chosen.push_back(e);
      }
      auto results = run_corpus(chosen, jobs);
      int passed = 0, failed = 0, skipped = 0;
      for (const auto& r : results) (r.skipped() ? skipped : r.pass() ? passed : failed)++;
      int code = failed ? kFalse : kTrue;
      if (opt.json) {
        json rs = json::array();
        for (const auto& r : results) rs.push_back(outcome_json(r));
        em.report(nullptr, {{"entries", rs}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}}, code);
      } else {
        for (const auto& r : results) {
          out << (r.skipped() ? "SKIP " : r.pass() ? "PASS " : "FAIL ") << r.id;
          if (r.skipped()) out << " (" << r.skip << ")";
          out << "\n";
          if (!r.error.empty()) out << "  error: " << r.error << "\n";
          for (const auto& c : r.checks)
            out << "  " << (c.pass ? "ok   " : "FAIL ") << c.key << ": expected " << c.expected << ", got " << c.actual
                << "\n";
        }
        out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
      }
      return code;
    }
  } catch (const ParseError& e) {
    err << "rees: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "rees: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "rees: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "rees: internal error: " << e.what() << "\n";
    return kInternal;
  }
  err << "rees: no command\n";
  return kUsage;
}

}  // namespace rees::cli

// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance                  exit 0 iff every criterion passes
//   acceptance --expect-fail N  exit 0 iff exactly the listed criteria fail

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracle.hpp"
#include "rees/corpus.hpp"

using namespace rees;

namespace {

// Tolerances: all comparisons are exact; only instance counts and time budgets are pinned.
constexpr int kOracleInstances = 200;
constexpr std::uint64_t kOracleSeed = 20240611;
constexpr std::uint64_t kPermutationSeed = 7;
constexpr double kCorpusBudgetSeconds = 120;
constexpr std::size_t kPfaffianPermutations = 120;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Every resolution computed by criteria 1-6, for criterion 8.
std::vector<std::pair<std::string, ResolutionData>> g_resolutions;

void keep(const std::string& what, const ResolutionData& R) { g_resolutions.emplace_back(what, R); }

std::vector<Polynomial> seq_of(const CorpusEntry& e) { return parse_entry(e).find().polys; }

Outcome corpus_regression() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto entries = corpus();
  auto results = run_corpus(entries, 1);
  int passed = 0, skipped = 0;
  std::ostringstream failures;
  for (const auto& r : results) {
    if (r.skipped()) {
      ++skipped;
      continue;
    }
    if (r.pass()) {
      ++passed;
      continue;
    }
    o.pass = false;
    failures << " " << r.id << "[";
    if (!r.error.empty()) failures << "error: " << r.error;
    for (const auto& c : r.checks)
      if (!c.pass) failures << c.key << " expected " << c.expected << " got " << c.actual;
    failures << "]";
  }
  for (const auto& e : entries)
    if (e.skip.empty() && (e.expect.count("reg-y") || e.expect.count("reg-x") || e.expect.count("reg-y-min")))
      keep("corpus " + e.id, free_resolution(rees_ideal(seq_of(e))));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > kCorpusBudgetSeconds) o.pass = false;
  std::ostringstream d;
  d << passed << " passed, " << skipped << " out of scope, " << secs << " s;" << failures.str();
  if (o.pass) d << " all reproduce";
  o.detail = d.str();
  return o;
}

Outcome cycle_paths() {
  Outcome o;
  auto c5 = cycle_path_ideal(5, 3);
  bool lt = is_linear_type(c5);
  auto r5 = free_resolution(rees_ideal(c5));
  auto r7 = free_resolution(rees_ideal(cycle_path_ideal(7, 5)));
  keep("rees P3(C5)", r5);
  keep("rees P5(C7)", r7);
  auto y5 = reg_xy(r5).y, y7 = reg_xy(r7).y;
  o.pass = lt && y5 && *y5 >= 1 && y7 && *y7 >= 2;
  o.detail = std::string("P3(C5) linear type ") + (lt ? "yes" : "no") + ", reg_y " + reg_string(y5) +
             "; P5(C7) reg_y " + reg_string(y7);
  return o;
}

Outcome equigenerated_implication() {
  Outcome o;
  std::ostringstream d;
  int used = 0;
  for (const auto& e : corpus()) {
    if (!e.skip.empty()) continue;
    Document doc = parse_entry(e);
    if (doc.ring.has_quotient()) continue;
    const auto& seq = doc.find().polys;
    bool same_degree = std::all_of(seq.begin(), seq.end(), [&](const Polynomial& p) {
      return p.is_homogeneous() && p.total_degree() == seq.front().total_degree();
    });
    if (seq.empty() || !same_degree || minimal_generators(seq).size() != seq.size()) continue;
    if (!is_d_sequence(seq, doc.ring).result && !is_c_sequence(seq, doc.ring).result) continue;
    ++used;
    auto R = free_resolution(rees_ideal(seq));
    keep("rees " + e.id, R);
    auto y = reg_xy(R).y;
    d << " " << e.id << ":" << reg_string(y);
    if (!y || *y != 0) o.pass = false;
  }
  if (used == 0) o.pass = false;
  o.detail = std::to_string(used) + " sequences, reg_y(Rees) =" + d.str();
  return o;
}

Outcome pfaffian_unconditioned() {
  Outcome o;
  auto pf = pfaffian_sequence(2);
  RingDescriptor base{pf.front().ring(), {}};
  bool natural = is_d_sequence(pf, base).result;
  Verdict u = is_unconditioned_d(pf, base);
  std::size_t checked = 0;
  for (const auto& s : u.details)
    if (s.rfind("permutations checked: ", 0) == 0) checked = std::stoul(s.substr(22));
  o.pass = natural && u.result && checked == kPfaffianPermutations;
  o.detail = std::string("natural order ") + (natural ? "d-sequence" : "not a d-sequence") + "; " + u.message + " (" +
             std::to_string(checked) + " orders)";
  return o;
}

Outcome m_criterion() {
  Outcome o;
  int used = 0;
  std::ostringstream d;
  for (const auto& e : corpus()) {
    if (!e.skip.empty()) continue;
    Document doc = parse_entry(e);
    const auto& seq = doc.find().polys;
    if (doc.ring.has_quotient()) continue;
    if (!std::all_of(seq.begin(), seq.end(), [](const Polynomial& p) { return p.is_monomial(); })) continue;
    if (!is_m_sequence(seq).result) continue;
    ++used;
    bool a = msequence_c_criterion(seq).result, b = is_c_sequence(seq, doc.ring).result;
    d << " " << e.id << ":" << (a ? "c" : "not c");
    if (a != b) {
      o.pass = false;
      d << "(disagree)";
    }
  }
  if (used == 0) o.pass = false;
  o.detail = std::to_string(used) + " M-sequences;" + d.str();
  return o;
}

Outcome resolution_shape() {
  Outcome o;
  auto r = make_ring({"x1", "x2", "x3", "x4", "x5"});
  auto I = cycle_path_ideal(5, 3, r);
  auto Rq = free_resolution(quotient_presentation(I, r));
  keep("quotient P3(C5)", Rq);
  auto b = betti(Rq);
  bool shape = b.at(1, {3, 0}) == 5 && b.at(2, {4, 0}) == 5 && b.at(3, {5, 0}) == 1 && b.entries().size() == 4;
  auto P = rees_ideal(I);
  const RingPtr& S = P.ring();
  auto x = [&](int k) { return Polynomial::variable(S, static_cast<std::size_t>((k + 9) % 5)); };
  auto y = [&](int k) { return Polynomial::variable(S, 5 + static_cast<std::size_t>((k + 9) % 5)); };
  std::vector<Polynomial> rel;
  for (int i = 1; i <= 5; ++i) rel.push_back(x(i - 2) * y(i) - x(i) * y(i + 1));
  bool same = ideal_equal(P.J, IdealHandle(P.ambient, rel));
  o.pass = shape && same;
  o.detail = std::string("Betti (") + std::to_string(b.total(1)) + ", " + std::to_string(b.total(2)) + ", " +
             std::to_string(b.total(3)) + ")" + (shape ? " at x-degrees (3, 4, 5)" : " with wrong degrees") +
             "; Rees ideal " + (same ? "equals" : "differs from") + " <x_{i-2}y_i - x_iy_{i+1}>";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(kOracleSeed);
  int instances = 0, mismatches = 0, divisions = 0;
  while (instances < kOracleInstances) {
    std::uniform_int_distribution<int> nv(2, 4), cnt(1, 4), gdeg(1, 3), fdeg(1, 4), hdeg(1, 2);
    std::vector<std::string> names;
    int n = nv(rng);
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    auto r = make_ring(names);
    auto draw = [&] {
      std::vector<Polynomial> g;
      int k = cnt(rng);
      for (int i = 0; i < k; ++i)
        if (auto f = oracle::random_form(r, gdeg(rng), rng); !f.is_zero()) g.push_back(f);
      return g;
    };
    auto ga = draw(), gb = draw();
    if (ga.empty() || gb.empty()) continue;
    ++instances;
    IdealHandle A(r, ga), B(r, gb);
    auto f = oracle::random_form(r, fdeg(rng), rng);
    if (!f.is_zero() && A.contains(f) != oracle::member(f, ga)) ++mismatches;
    if (!f.is_zero()) {
      auto dv = divide(f, ga);
      Polynomial back = dv.remainder;
      for (std::size_t i = 0; i < ga.size(); ++i) back += dv.quotients[i] * ga[i];
      ++divisions;
      if (!(back == f)) ++mismatches;
    }
    auto h = oracle::random_form(r, hdeg(rng), rng);
    if (!h.is_zero()) {
      auto C = colon(A, h);
      for (int d = 0; d <= 4; ++d)
        if (oracle::ideal_dim(C.gens(), r, d) != oracle::colon_dim(ga, h, d)) ++mismatches;
    }
    auto X = intersect(A, B);
    for (int d = 0; d <= 4; ++d)
      if (oracle::ideal_dim(X.gens(), r, d) != oracle::intersection_dim(ga, gb, r, d)) ++mismatches;
  }
  o.pass = mismatches == 0;
  o.detail = std::to_string(instances) + " instances, " + std::to_string(divisions) + " explicit divisions, " +
             std::to_string(mismatches) + " mismatches";
  return o;
}

Outcome structural() {
  Outcome o;
  int resolutions = 0, bad = 0, ideals = 0, noncanonical = 0;
  std::ostringstream d;
  for (const auto& [what, R] : g_resolutions) {
    ++resolutions;
    if (!compose_to_zero(R) || !shifts_consistent(R) || !exactness_rank_check(R)) {
      ++bad;
      d << " " << what;
    }
  }
  std::mt19937_64 rng(kPermutationSeed);
  for (const auto& e : corpus()) {
    if (!e.skip.empty()) continue;
    Document doc = parse_entry(e);
    auto gens = doc.find().polys;
    gens.insert(gens.end(), doc.ring.quotient.begin(), doc.ring.quotient.end());
    auto ref = buchberger(gens, doc.ring.ring).elements();
    for (int t = 0; t < 3; ++t) {
      std::shuffle(gens.begin(), gens.end(), rng);
      if (buchberger(gens, doc.ring.ring).elements() != ref) {
        ++noncanonical;
        d << " gb:" << e.id;
        break;
      }
    }
    ++ideals;
  }
  o.pass = bad == 0 && noncanonical == 0 && resolutions > 0;
  o.detail = std::to_string(resolutions) + " resolutions (d*d = 0, exact), " + std::to_string(ideals) +
             " corpus ideals canonical under permutation" + (o.pass ? "" : "; violations:" + d.str());
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_fail;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--expect-fail" && i + 1 < argc) {
      expect_fail.insert(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--expect-fail N]...\n";
      return 2;
    }
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"corpus regression", corpus_regression},
      {"cycle-path regularity", cycle_paths},
      {"equigenerated d/c-sequences have reg_y 0", equigenerated_implication},
      {"Pfaffian unconditioned d-sequence", pfaffian_unconditioned},
      {"M-sequence c-criterion", m_criterion},
      {"resolution shape of P3(C5)", resolution_shape},
      {"oracle equivalence", oracle_equivalence},
      {"structural invariants", structural},
  };
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int id = static_cast<int>(i + 1);
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    if (!o.pass) failed.insert(id);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first << ": " << o.detail << std::endl;
  }
  if (failed == expect_fail) return 0;
  if (!expect_fail.empty()) std::cout << "failing set differs from the expected one\n";
  return 1;
}

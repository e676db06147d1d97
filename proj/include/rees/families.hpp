#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rees/parser.hpp"

namespace rees {

/// Paths of `len` consecutive vertices on the n-cycle: x_i x_{i+1} ... x_{i+len-1}, indices mod n.
inline std::vector<Polynomial> cycle_path_ideal(int n, int len, RingPtr ring = nullptr) {
  if (n < 3) throw std::invalid_argument("cycle_path_ideal: need n >= 3");
  if (len < 1 || len > n - 1) throw std::invalid_argument("cycle_path_ideal: need 1 <= len <= n-1");
  if (!ring) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    ring = make_ring(v);
  }
  if (ring->nvars() != static_cast<std::size_t>(n)) throw std::invalid_argument("cycle_path_ideal: ring needs n variables");
  auto one = FieldElem::one(ring->field());
  std::vector<Polynomial> out;
  for (int i = 0; i < n; ++i) {
    Monomial m(static_cast<std::size_t>(n));
    for (int k = 0; k < len; ++k) m.set(static_cast<std::size_t>((i + k) % n), 1);
    out.push_back(Polynomial::term(ring, one, m));
  }
  return out;
}

namespace detail {

inline std::string pf_var(int i, int j) {
  return i < 10 && j < 10 ? "u" + std::to_string(i) + std::to_string(j)
                          : "u" + std::to_string(i) + "_" + std::to_string(j);
}

/// Pfaffian of the generic skew matrix restricted to `idx` (1-based
/// indices), by expansion along the first row.
inline Polynomial pfaffian(const RingPtr& r, const std::vector<int>& idx) {
  if (idx.empty()) return Polynomial::constant(r, 1);
  Polynomial out(r);
  for (std::size_t j = 1; j < idx.size(); ++j) {
    std::vector<int> rest;
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    Polynomial a = Polynomial::variable(r, *r->index_of(pf_var(idx[0], idx[j])));
    Polynomial term = a * pfaffian(r, rest);
    // 1-based column position j+1: sign (-1)^(j+1)
    if (j % 2 == 1) out += term;
    else out -= term;
  }
  return out;
}

}  // namespace detail

/// Ring with variables u_ij (i < j) for the generic skew-symmetric matrix of order n.
inline RingPtr skew_ring(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) v.push_back(detail::pf_var(i, j));
  return make_ring(v);
}

/// The n = 2r+1 maximal Pfaffians P_k (row and column k deleted).
inline std::vector<Polynomial> pfaffian_sequence(int r) {
  if (r < 2) throw std::invalid_argument("pfaffian_sequence: need r >= 2");
  if (r > 3) throw std::invalid_argument("pfaffian_sequence: r > 3 is out of range");
  const int n = 2 * r + 1;
  RingPtr ring = skew_ring(n);
  std::vector<Polynomial> out;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> idx;
    for (int i = 1; i <= n; ++i)
      if (i != k) idx.push_back(i);
    out.push_back(detail::pfaffian(ring, idx));
  }
  return out;
}

using ExpectedValue = std::variant<bool, int>;

/// Expected failure witness of one property.
struct WitnessExpectation {
  std::string property;
  std::size_t fail_index = 0;
  std::string kind;  // "colon" or "intersection"
  std::vector<std::string> gens;
};

struct CorpusEntry {
  std::string id;
  std::string source;  // what the entry exhibits
  std::string text;    // ring statement plus one seq statement
  std::map<std::string, ExpectedValue> expect;
  std::vector<WitnessExpectation> witnesses;
  std::string skip;  // non-empty: not run, with this reason
  bool slow = false;
  std::string remark;
};

namespace detail {

inline std::string seq_text(const std::string& ring, const std::string& seq) {
  return ring + "\nseq a = " + seq + ";\n";
}

}  // namespace detail

/// Regression corpus of worked examples with their expected verdicts.
inline std::vector<CorpusEntry> corpus() {
  using detail::seq_text;
  std::vector<CorpusEntry> c;
  {
    auto pf = pfaffian_sequence(2);
    RingDescriptor d{pf.front().ring(), {}};
    CorpusEntry e;
    e.id = "pfaffian-5x5";
    e.source = "maximal Pfaffians of the generic 5x5 skew-symmetric matrix: a d-sequence that is not an almost complete intersection";
    e.text = ring_statement(d) + "\n" + list_statement("seq", "a", pf) + "\n";
    e.expect = {{"height", 2}, {"mingens", 5}, {"d-seq", true}};
    e.remark = "expected height as recorded; the computed height is 3";
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.id = "c-not-d";
    e.source = "a c-sequence that is not a d-sequence";
    e.text = seq_text("ring QQ[x1..x3];", "x2*x3, x1*x3 + x1*x2, x1*x2");
    e.expect = {{"c-seq", true}, {"d-seq", false}, {"wrr", true}, {"linear-type", true}};
    e.witnesses = {{"d-seq", 3, "intersection", {"x2*x3", "x1*x3", "x1*x2"}}};
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.id = "linear-type-seq-not-c";
    e.source = "a sequence of linear type that is not a c-sequence";
    e.text = seq_text("ring QQ[x1..x3];", "x1*x2, x2*x3, x1*x3");
    e.expect = {{"seq-lt", true}, {"c-seq", false}};
    e.witnesses = {{"c-seq", 2, "intersection", {"x1*x2", "x1^2*x3"}}};
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.id = "almost-regular-not-regular";
    e.source = "an almost regular sequence that is not regular, over QQ[x1]/<x1^2>";
    e.text = seq_text("ring QQ[x1] mod x1^2;", "x1");
    e.expect = {{"almost-reg", true}, {"regular", false}};
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.id = "linear-type-not-seq-power-series";
    e.source = "an ideal of linear type not generated by a sequence of linear type, over a power series quotient";
    e.skip = "base ring out of scope";
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.id = "linear-type-not-d-c5";
    e.source = "paths of length 3 on the 5-cycle: of linear type with reg_y of the Rees algebra equal to 1";
    e.text = seq_text("ring QQ[x1..x5];", "x1*x2*x3, x2*x3*x4, x3*x4*x5, x1*x4*x5, x1*x2*x5");
    e.expect = {{"linear-type", true}, {"reg-y", 1}, {"d-seq", false}};
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.id = "strong-s-not-wrr";
    e.source = "a strong s-sequence that is not weak relative regular and not of linear type";
    e.text = seq_text("ring QQ[x1, x2];", "x1^2, x2^2, x1*x2");
    e.expect = {{"s-seq-strong", true}, {"wrr", false}, {"linear-type", false}, {"seq-lt", false}};
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.id = "d-not-almost-regular";
    e.source = "a d-sequence that is not almost regular";
    e.text = seq_text("ring QQ[x1..x3];", "x1*x2, x2*x3");
    e.expect = {{"d-seq", true}, {"almost-reg", false}, {"regular", false}};
    e.witnesses = {{"almost-reg", 2, "colon", {"x1"}}};
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.id = "m-not-strong-s";
    e.source = "an M-sequence that is not a strong s-sequence";
    e.text = seq_text("ring QQ[x1..x9];", "x1*x2*x3, x4*x5*x6, x2*x3*x7, x7*x8*x9");
    e.expect = {{"m-seq", true}, {"s-seq-strong", false}};
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.id = "m-not-interval";
    e.source = "an M-sequence that is not of interval type";
    e.text = seq_text("ring QQ[x1..x9];", "x1*x2*x3, x4*x5*x6, x2*x3*x7, x7*x8*x9");
    e.expect = {{"m-seq", true}, {"interval", false}};
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.id = "interval-not-d";
    e.source = "a sequence of interval type that is not a d-sequence";
    e.text = seq_text("ring QQ[x1..x4];", "x2*x4, x1*x4, x1*x3");
    e.expect = {{"interval", true}, {"m-seq", true}, {"d-seq", false}};
    e.witnesses = {{"d-seq", 2, "intersection", {"x2*x4", "x1*x2*x3"}}};
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.id = "d-not-interval";
    e.source = "a monomial d-sequence that is not of interval type";
    e.text = seq_text("ring QQ[x1..x5];", "x1*x2, x3*x4, x1*x5");
    e.expect = {{"d-seq", true}, {"interval", false}};
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.id = "cycle-path-c5";
    e.source = "P_3(C_5): linear type, reg_y of the Rees algebra at least 1";
    e.text = seq_text("ring QQ[x1..x5];", to_string(cycle_path_ideal(5, 3)));
    e.expect = {{"linear-type", true}, {"reg-y-min", 1}};
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.id = "cycle-path-c7";
    e.source = "P_5(C_7): reg_y of the Rees algebra at least 2";
    e.text = seq_text("ring QQ[x1..x7];", to_string(cycle_path_ideal(7, 5)));
    e.expect = {{"reg-y-min", 2}};
    e.slow = true;
    c.push_back(e);
  }
  return c;
}

}  // namespace rees

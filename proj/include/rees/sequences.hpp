#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rees/algebras.hpp"
#include "rees/ideal.hpp"

namespace rees {

struct Witnesses {
  std::optional<IdealHandle> colon;
  std::optional<IdealHandle> intersection;
  std::optional<IdealHandle> expected;
};

/// Outcome of a sequence check. fail_index is 1-based.
struct Verdict {
  std::string property;
  bool result = true;
  std::optional<std::size_t> fail_index;
  Witnesses witnesses;
  std::vector<std::string> notes;
  /// Extra witness lines (term orders, failing permutation, ...).
  std::vector<std::string> details;
  std::string message;
};

enum class SaturationBlock { all, x, y };

namespace detail {

inline const char* noun(const std::string& property) {
  static const std::map<std::string, const char*> names{
      {"regular", "a regular sequence"},
      {"d-seq", "a d-sequence"},
      {"wrr", "a weak relative regular seq"},
      {"c-seq", "a c-seq"},
      {"seq-lt", "a sequence of linear type"},
      {"almost-reg", "an almost regular sequence"},
      {"s-seq", "an s-sequence"},
      {"s-seq-strong", "a strong s-sequence"},
      {"m-seq", "an M-sequence"},
      {"interval", "a sequence of interval type"},
      {"m-c-criterion", "a c-sequence by the M-sequence criterion"},
      {"uncond-d", "an unconditioned d-sequence"},
  };
  auto it = names.find(property);
  return it == names.end() ? "a sequence with this property" : it->second;
}

inline void finish(Verdict& v) { v.message = std::string(v.result ? "It is " : "Not ") + noun(v.property); }

inline std::string index_list(std::size_t count) {
  std::string s = "{";
  for (std::size_t k = 1; k <= count; ++k) s += (k > 1 ? ", a" : "a") + std::to_string(k);
  return s + "}";
}

/// Prefix ideals I_0 = 0, I_1, ..., I_n of a sequence, sharing GB caches.
class SeqContext {
 public:
  SeqContext(std::vector<Polynomial> seq, RingDescriptor base) : seq_(std::move(seq)), base_(std::move(base)) {
    if (!base_.ring) throw std::invalid_argument("sequence without a ring");
    for (auto& a : seq_) {
      if (!a.ring()->compatible(*base_.ring)) throw std::invalid_argument("sequence element not in " + base_.ring->to_string());
      a = a.in_ring(base_.ring);
    }
    std::vector<Polynomial> acc;
    prefixes_.push_back(IdealHandle(base_, {}));
    for (const auto& a : seq_) {
      acc.push_back(a);
      prefixes_.push_back(IdealHandle(base_, acc));
    }
  }

  std::size_t size() const { return seq_.size(); }
  const Polynomial& at(std::size_t i) const { return seq_.at(i - 1); }
  const IdealHandle& prefix(std::size_t i) const { return prefixes_.at(i); }
  const IdealHandle& whole() const { return prefixes_.back(); }
  const RingDescriptor& base() const { return base_; }
  const std::vector<Polynomial>& seq() const { return seq_; }

  bool element_is_zero(std::size_t i) const { return IdealHandle(base_, {at(i)}).is_zero(); }

  /// (J : a_i), the unit ideal when a_i vanishes in A.
  IdealHandle colon_by(const IdealHandle& J, std::size_t i) const {
    if (at(i).is_zero()) return J.with_gens({Polynomial::constant(base_.ring, 1)});
    return colon(J, at(i));
  }

 private:
  std::vector<Polynomial> seq_;
  RingDescriptor base_;
  std::vector<IdealHandle> prefixes_;
};

/// Common preamble. Returns false when the verdict is already decided.
inline bool open(Verdict& v, const SeqContext& c) {
  const auto& f = c.base().ring->field();
  if (!f.is_rational()) v.notes.push_back("valid in characteristic " + std::to_string(f.characteristic()));
  for (std::size_t i = 1; i <= c.size(); ++i)
    if (c.element_is_zero(i)) v.notes.push_back("element a" + std::to_string(i) + " is zero");
  if (c.size() == 0) {
    v.result = true;
    v.notes.push_back("vacuous: empty sequence");
    finish(v);
    return false;
  }
  return true;
}

inline void zero_divisor_note(Verdict& v, const SeqContext& c) {
  if (!c.colon_by(c.prefix(0), 1).is_zero()) v.notes.push_back("(0 : a1) is nonzero: a1 is a zero divisor");
}

inline void fail(Verdict& v, std::size_t i, IdealHandle colon, std::optional<IdealHandle> inter, IdealHandle expected) {
  v.result = false;
  v.fail_index = i;
  v.witnesses.colon = std::move(colon);
  v.witnesses.intersection = std::move(inter);
  v.witnesses.expected = std::move(expected);
}

inline void require_polynomial_base(const RingDescriptor& base, const char* what) {
  if (base.has_quotient()) throw std::invalid_argument(std::string(what) + " needs a polynomial base ring");
}

inline void require_monomials(const std::vector<Polynomial>& ms) {
  for (const auto& m : ms)
    if (!m.is_monomial()) throw std::invalid_argument("expected monomials, got " + m.to_string());
}

/// (I_{i-1} · extra : a_i) ∩ I == I_{i-1} for all i; shared by d-seq and wrr.
inline Verdict colon_cap_check(const std::string& property, const SeqContext& c, bool times_ideal) {
  Verdict v{property};
  if (!open(v, c)) return v;
  zero_divisor_note(v, c);
  const IdealHandle& I = c.whole();
  for (std::size_t i = 1; i <= c.size(); ++i) {
    const IdealHandle& prev = c.prefix(i - 1);
    IdealHandle lhs = times_ideal ? ideal_product(prev, I) : prev;
    IdealHandle col = c.colon_by(lhs, i);
    IdealHandle cap = intersect(col, I);
    if (!ideal_subset(cap, prev)) {
      fail(v, i, col, cap, prev);
      v.details.push_back("Fails at colon of " + index_list(i - 1) + " with a" + std::to_string(i));
      break;
    }
  }
  finish(v);
  return v;
}

}  // namespace detail

/// (I_{i-1} : a_i) = I_{i-1} for all i, and the ideal is proper.
inline Verdict is_regular_sequence(const std::vector<Polynomial>& seq, const RingDescriptor& base) {
  detail::SeqContext c(seq, base);
  Verdict v{"regular"};
  if (!detail::open(v, c)) return v;
  for (std::size_t i = 1; i <= c.size(); ++i) {
    const IdealHandle& prev = c.prefix(i - 1);
    IdealHandle col = c.colon_by(prev, i);
    if (!ideal_subset(col, prev)) {
      detail::fail(v, i, col, std::nullopt, prev);
      break;
    }
  }
  if (v.result && c.whole().is_unit()) {
    v.result = false;
    v.notes.push_back("the sequence generates the unit ideal");
  }
  detail::finish(v);
  return v;
}

/// (I_{i-1} : a_i) ∩ I = I_{i-1} for i = 1..n, with I_0 = 0.
inline Verdict is_d_sequence(const std::vector<Polynomial>& seq, const RingDescriptor& base) {
  return detail::colon_cap_check("d-seq", detail::SeqContext(seq, base), false);
}

/// (I_{i-1} I : a_i) ∩ I = I_{i-1} for i = 1..n.
inline Verdict is_weak_rel_reg(const std::vector<Polynomial>& seq, const RingDescriptor& base) {
  return detail::colon_cap_check("wrr", detail::SeqContext(seq, base), true);
}

/// Every prefix ideal I_1, ..., I_n is of linear type.
inline Verdict is_seq_linear_type(const std::vector<Polynomial>& seq, const RingDescriptor& base) {
  detail::require_polynomial_base(base, "seq-lt");
  detail::SeqContext c(seq, base);
  Verdict v{"seq-lt"};
  if (!detail::open(v, c)) return v;
  for (std::size_t i = 1; i <= c.size(); ++i) {
    std::vector<Polynomial> pre(c.seq().begin(), c.seq().begin() + static_cast<std::ptrdiff_t>(i));
    std::vector<Polynomial> nz;
    for (const auto& p : pre)
      if (!p.is_zero()) nz.push_back(p);
    if (nz.empty()) continue;
    if (!is_linear_type(nz)) {
      v.result = false;
      v.fail_index = i;
      v.witnesses.expected = c.prefix(i);
      v.details.push_back("I" + std::to_string(i) + " is not of linear type");
      break;
    }
  }
  detail::finish(v);
  return v;
}

/// Linear type together with the weak relative regular condition.
inline Verdict is_c_sequence(const std::vector<Polynomial>& seq, const RingDescriptor& base) {
  detail::require_polynomial_base(base, "c-seq");
  detail::SeqContext c(seq, base);
  Verdict v{"c-seq"};
  if (!detail::open(v, c)) return v;
  std::vector<Polynomial> nz;
  for (const auto& p : c.seq())
    if (!p.is_zero()) nz.push_back(p);
  if (!nz.empty() && !is_linear_type(nz)) {
    v.result = false;
    v.notes.push_back("not linear type");
    detail::finish(v);
    return v;
  }
  Verdict w = detail::colon_cap_check("c-seq", c, true);
  for (auto& n : v.notes)
    if (std::find(w.notes.begin(), w.notes.end(), n) == w.notes.end()) w.notes.push_back(n);
  return w;
}

/// Definition-level check (I_{i-1} I^k : a_i) ∩ I^k = I_{i-1} I^{k-1} for k = 1..kmax.
inline Verdict is_c_sequence_direct(const std::vector<Polynomial>& seq, const RingDescriptor& base, int kmax = 3) {
  if (kmax < 1) throw std::invalid_argument("kmax must be positive");
  detail::SeqContext c(seq, base);
  Verdict v{"c-seq"};
  if (!detail::open(v, c)) return v;
  v.notes.push_back("direct check for k <= " + std::to_string(kmax));
  const IdealHandle& I = c.whole();
  std::vector<IdealHandle> powers{I.with_gens({Polynomial::constant(base.ring, 1)}), I};
  for (int k = 2; k <= kmax; ++k) powers.push_back(ideal_product(powers.back(), I));
  for (std::size_t i = 1; i <= c.size() && v.result; ++i) {
    const IdealHandle& prev = c.prefix(i - 1);
    for (int k = 1; k <= kmax; ++k) {
      IdealHandle col = c.colon_by(ideal_product(prev, powers[k]), i);
      IdealHandle cap = intersect(col, powers[k]);
      IdealHandle expect = ideal_product(prev, powers[k - 1]);
      if (!ideal_subset(cap, expect)) {
        detail::fail(v, i, col, cap, expect);
        v.details.push_back("fails for k = " + std::to_string(k));
        break;
      }
    }
  }
  detail::finish(v);
  return v;
}

/// (I_{i-1} : a_i) ⊆ (I_{i-1} : B^∞) with B the ideal of the chosen variable block.
inline Verdict is_almost_regular(const std::vector<Polynomial>& seq, const RingDescriptor& base,
                                 SaturationBlock block = SaturationBlock::all) {
  detail::SeqContext c(seq, base);
  Verdict v{"almost-reg"};
  if (!detail::open(v, c)) return v;
  const RingPtr& r = base.ring;
  std::vector<Polynomial> bvars;
  for (std::size_t k = 0; k < r->nvars(); ++k) {
    bool is_y = r->bidegree(k).y > 0;
    if (block == SaturationBlock::all || (block == SaturationBlock::y) == is_y)
      bvars.push_back(Polynomial::variable(r, k));
  }
  IdealHandle B(base, bvars);
  for (std::size_t i = 1; i <= c.size(); ++i) {
    const IdealHandle& prev = c.prefix(i - 1);
    IdealHandle col = c.colon_by(prev, i);
    IdealHandle sat = saturate(prev, B).ideal;
    if (!ideal_subset(col, sat)) {
      detail::fail(v, i, col, std::nullopt, sat);
      break;
    }
  }
  detail::finish(v);
  return v;
}

/// in(J_sym) = <L_1 y_1, ..., L_n y_n> for L_i = (I_{i-1} : a_i), in the
/// y-dominant revlex order with y_1 < ... < y_n; strong adds L_1 ⊆ ... ⊆ L_n.
inline Verdict is_s_sequence(const std::vector<Polynomial>& seq, const RingDescriptor& base, bool strong) {
  detail::require_polynomial_base(base, "s-seq");
  detail::SeqContext c(seq, base);
  Verdict v{strong ? "s-seq-strong" : "s-seq"};
  if (!detail::open(v, c)) return v;
  for (std::size_t i = 1; i <= c.size(); ++i)
    if (c.at(i).is_zero()) throw std::invalid_argument("s-seq: zero element a" + std::to_string(i));
  std::vector<IdealHandle> L;
  for (std::size_t i = 1; i <= c.size(); ++i) L.push_back(c.colon_by(c.prefix(i - 1), i));

  BigradedPresentation P = sym_ideal(c.seq());
  const RingPtr& S = P.ring();
  MonomialOrder tau = MonomialOrder::y_revlex(P.y_mask());
  std::vector<Polynomial> expected;
  for (std::size_t i = 0; i < L.size(); ++i) {
    Polynomial y = Polynomial::variable(S, P.nx + i);
    for (const auto& g : L[i].gens()) expected.push_back(g.in_ring(S) * y);
  }
  IdealHandle N(S, expected);
  auto lm_J = P.J.gb(tau).leading_monomials();
  auto lm_N = N.gb(tau).leading_monomials();
  auto covered = [](const Monomial& m, const std::vector<Monomial>& by) {
    for (const auto& b : by)
      if (b.divides(m)) return true;
    return false;
  };
  RingPtr St = S->with_order(tau);
  auto show = [&](const Monomial& m) { return Polynomial::term(St, FieldElem::one(St->field()), m).to_string(); };
  for (const auto& m : lm_J)
    if (!covered(m, lm_N)) {
      v.result = false;
      v.details.push_back("in(J) has the extra generator " + show(m));
      break;
    }
  if (v.result)
    for (const auto& m : lm_N)
      if (!covered(m, lm_J)) {
        v.result = false;
        v.details.push_back("in(J) misses " + show(m));
        break;
      }
  if (!v.result) v.witnesses.expected = N;
  if (v.result && strong) {
    for (std::size_t i = 1; i < L.size(); ++i)
      if (!ideal_subset(L[i - 1], L[i])) {
        v.result = false;
        v.fail_index = i + 1;
        v.witnesses.colon = L[i - 1];
        v.witnesses.expected = L[i];
        v.details.push_back("L" + std::to_string(i) + " is not contained in L" + std::to_string(i + 1));
        break;
      }
  }
  detail::finish(v);
  return v;
}

namespace detail {

/// Orders of supp(m_i), listed smallest first, satisfying the M-sequence
/// suffix condition against every later m_j; empty if none exists.
inline std::optional<std::vector<std::size_t>> m_order(const std::vector<Monomial>& ms, std::size_t i) {
  const Monomial& mi = ms[i];
  std::vector<std::size_t> supp;
  for (std::size_t k = 0; k < mi.size(); ++k)
    if (mi[k]) supp.push_back(k);
  if (supp.size() > 20) throw std::invalid_argument("M-sequence support too large");
  // Build the order from the top: the placed variables form the suffix.
  std::vector<std::size_t> top;  // largest first
  std::vector<bool> dead(std::size_t{1} << supp.size(), false);
  Monomial suffix(mi.size());
  std::function<bool(std::uint32_t)> place = [&](std::uint32_t used) -> bool {
    if (top.size() == supp.size()) return true;
    if (dead[used]) return false;
    for (std::size_t s = 0; s < supp.size(); ++s) {
      if (used >> s & 1u) continue;
      std::size_t x = supp[s];
      Monomial next = suffix;
      next.set(x, mi[x]);
      bool ok = true;
      for (std::size_t j = i + 1; j < ms.size() && ok; ++j)
        if (ms[j][x] && !next.divides(ms[j])) ok = false;
      if (!ok) continue;
      Monomial saved = suffix;
      suffix = next;
      top.push_back(x);
      if (place(used | (1u << s))) return true;
      top.pop_back();
      suffix = saved;
    }
    dead[used] = true;
    return false;
  };
  if (!place(0)) return std::nullopt;
  return std::vector<std::size_t>(top.rbegin(), top.rend());
}

inline std::vector<Monomial> monomials_of(const std::vector<Polynomial>& ms) {
  require_monomials(ms);
  std::vector<Monomial> out;
  for (const auto& m : ms) out.push_back(m.leading_monomial());
  return out;
}

inline void monomial_preamble(Verdict& v, const std::vector<Polynomial>& ms) {
  if (!ms.empty() && !ms.front().ring()->field().is_rational())
    v.notes.push_back("valid in characteristic " + std::to_string(ms.front().ring()->field().characteristic()));
}

}  // namespace detail

/// Each m_i admits an order of its support with the suffix divisibility
/// property against all later m_j. Details list one order per i.
inline Verdict is_m_sequence(const std::vector<Polynomial>& monomials) {
  Verdict v{"m-seq"};
  auto ms = detail::monomials_of(monomials);
  detail::monomial_preamble(v, monomials);
  if (ms.empty()) v.notes.push_back("vacuous: empty sequence");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    auto ord = detail::m_order(ms, i);
    if (!ord) {
      v.result = false;
      v.fail_index = i + 1;
      v.details.push_back("no admissible order for m" + std::to_string(i + 1));
      break;
    }
    std::string s = "m" + std::to_string(i + 1) + ":";
    for (std::size_t k = 0; k < ord->size(); ++k)
      s += (k ? " < " : " ") + monomials[i].ring()->variable((*ord)[k]);
    v.details.push_back(s);
  }
  detail::finish(v);
  return v;
}

/// For i < j and x | gcd(m_i, m_j): O_x(m_i) <= O_x(m_k) for i <= k <= j.
inline Verdict is_interval_type(const std::vector<Polynomial>& monomials) {
  Verdict v{"interval"};
  auto ms = detail::monomials_of(monomials);
  detail::monomial_preamble(v, monomials);
  if (ms.empty()) v.notes.push_back("vacuous: empty sequence");
  for (std::size_t j = 1; j < ms.size() && v.result; ++j)
    for (std::size_t i = 0; i < j && v.result; ++i)
      for (std::size_t x = 0; x < ms[i].size() && v.result; ++x) {
        if (!ms[i][x] || !ms[j][x]) continue;
        for (std::size_t k = i; k <= j; ++k)
          if (ms[i][x] > ms[k][x]) {
            v.result = false;
            v.fail_index = j + 1;
            v.details.push_back("variable " + monomials[0].ring()->variable(x) + " divides m" + std::to_string(i + 1) +
                                " and m" + std::to_string(j + 1) + " but has lower order in m" + std::to_string(k + 1));
            break;
          }
      }
  detail::finish(v);
  return v;
}

/// For an M-sequence: for 1 <= j <= s-1 and k < j some l <= j has
/// m_l gcd(m_k, m_j) | m_k gcd(m_l, m_{j+1}).
inline Verdict msequence_c_criterion(const std::vector<Polynomial>& monomials) {
  auto m = is_m_sequence(monomials);
  if (!m.result) throw std::domain_error("msequence_c_criterion: input is not an M-sequence");
  Verdict v{"m-c-criterion"};
  auto ms = detail::monomials_of(monomials);
  detail::monomial_preamble(v, monomials);
  if (ms.empty()) v.notes.push_back("vacuous: empty sequence");
  const std::size_t s = ms.size();
  for (std::size_t j = 1; j + 1 <= s && v.result; ++j)
    for (std::size_t k = 1; k < j && v.result; ++k) {
      bool found = false;
      for (std::size_t l = 1; l <= j && !found; ++l) {
        Monomial lhs = ms[l - 1] * gcd(ms[k - 1], ms[j - 1]);
        Monomial rhs = ms[k - 1] * gcd(ms[l - 1], ms[j]);
        found = lhs.divides(rhs);
      }
      if (!found) {
        v.result = false;
        v.fail_index = j + 1;
        v.details.push_back("no l works for j = " + std::to_string(j) + ", k = " + std::to_string(k));
      }
    }
  detail::finish(v);
  return v;
}

inline constexpr std::size_t kUnconditionedLimit = 7;

/// d-sequence in every order. The step check at position i only depends on
/// the set of earlier elements and a_i, so it is memoized on that pair.
inline Verdict is_unconditioned_d(const std::vector<Polynomial>& seq, const RingDescriptor& base) {
  if (seq.size() > kUnconditionedLimit)
    throw std::invalid_argument("uncond-d: at most " + std::to_string(kUnconditionedLimit) + " elements");
  detail::SeqContext c(seq, base);
  Verdict v{"uncond-d"};
  if (!detail::open(v, c)) return v;
  const std::size_t n = c.size();
  const IdealHandle& I = c.whole();
  std::map<std::uint32_t, IdealHandle> subsets;
  auto ideal_of = [&](std::uint32_t mask) -> const IdealHandle& {
    auto it = subsets.find(mask);
    if (it != subsets.end()) return it->second;
    std::vector<Polynomial> g;
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1u) g.push_back(c.seq()[k]);
    return subsets.emplace(mask, IdealHandle(base, g)).first->second;
  };
  struct Step {
    bool ok;
    IdealHandle colon, cap, expected;
  };
  std::map<std::pair<std::uint32_t, std::size_t>, Step> memo;
  auto step = [&](std::uint32_t mask, std::size_t idx) -> const Step& {
    auto key = std::make_pair(mask, idx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const IdealHandle& prev = ideal_of(mask);
    IdealHandle col = c.colon_by(prev, idx + 1);
    IdealHandle cap = intersect(col, I);
    bool ok = ideal_subset(cap, prev);
    return memo.emplace(key, Step{ok, col, cap, prev}).first->second;
  };
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t checked = 0;
  do {
    ++checked;
    std::uint32_t mask = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
      const Step& s = step(mask, perm[pos]);
      if (!s.ok) {
        detail::fail(v, pos + 1, s.colon, s.cap, s.expected);
        std::string order = "fails in the order (";
        for (std::size_t k = 0; k < n; ++k) order += (k ? ", a" : "a") + std::to_string(perm[k] + 1);
        v.details.push_back(order + ")");
        break;
      }
      mask |= 1u << perm[pos];
    }
  } while (v.result && std::next_permutation(perm.begin(), perm.end()));
  v.details.push_back("permutations checked: " + std::to_string(checked));
  v.details.push_back("distinct colon steps: " + std::to_string(memo.size()));
  detail::finish(v);
  return v;
}

}  // namespace rees

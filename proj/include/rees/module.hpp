#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rees/groebner.hpp"

namespace rees {

struct ModTerm {
  FieldElem coef;
  Monomial mono;
  std::uint32_t comp;
};

/// Element of a free module; terms strictly descending in the module order.
using ModVec = std::vector<ModTerm>;

/// Free module S^r with integer weights on the basis vectors. The order is
/// term-over-position: weighted degree (when enabled), the ring order on the
/// monomial, then the lower component index first.
class FreeModule {
 public:
  FreeModule(RingPtr ring, std::vector<int> weights, bool weighted = true)
      : ring_(std::move(ring)), weights_(std::move(weights)), weighted_(weighted) {}

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return weights_.size(); }
  int weight(std::size_t c) const { return weights_.at(c); }
  const std::vector<int>& weights() const { return weights_; }

  int degree(const Monomial& m, std::uint32_t c) const { return static_cast<int>(m.degree()) + weights_[c]; }

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    if (weighted_) {
      int da = degree(a, ca), db = degree(b, cb);
      if (da != db) return da < db ? -1 : 1;
    }
    if (int c = ring_->order().compare(a, b)) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }

  ModVec canonical(std::vector<ModTerm> ts) const {
    std::sort(ts.begin(), ts.end(),
              [&](const ModTerm& a, const ModTerm& b) { return compare(a.mono, a.comp, b.mono, b.comp) > 0; });
    ModVec out;
    for (auto& t : ts) {
      if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
        out.back().coef += t.coef;
        if (out.back().coef.is_zero()) out.pop_back();
      } else if (!t.coef.is_zero()) {
        out.push_back(std::move(t));
      }
    }
    return out;
  }

  /// a + c * m * b
  ModVec combine(const ModVec& a, const FieldElem& c, const Monomial& m, const ModVec& b) const {
    ModVec r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        r.push_back(a[i++]);
        continue;
      }
      Monomial bm = b[j].mono * m;
      int cmp = i == a.size() ? -1 : compare(a[i].mono, a[i].comp, bm, b[j].comp);
      if (cmp > 0) {
        r.push_back(a[i++]);
      } else if (cmp < 0) {
        r.push_back({b[j].coef * c, std::move(bm), b[j].comp});
        ++j;
      } else {
        FieldElem s = a[i].coef + b[j].coef * c;
        if (!s.is_zero()) r.push_back({std::move(s), std::move(bm), a[i].comp});
        ++i, ++j;
      }
    }
    return r;
  }

  ModVec scale(const ModVec& a, const FieldElem& c) const {
    ModVec r = a;
    for (auto& t : r) t.coef *= c;
    return r;
  }

  /// p * v for a polynomial p.
  ModVec multiply(const Polynomial& p, const ModVec& v) const {
    ModVec r;
    for (const auto& t : p.terms()) r = combine(r, t.coef, t.mono, v);
    return r;
  }

  ModVec add(const ModVec& a, const ModVec& b) const {
    return combine(a, FieldElem::one(ring_->field()), Monomial(ring_->nvars()), b);
  }

  ModVec sub(const ModVec& a, const ModVec& b) const {
    return combine(a, -FieldElem::one(ring_->field()), Monomial(ring_->nvars()), b);
  }

  ModVec unit(std::uint32_t c) const {
    return {{FieldElem::one(ring_->field()), Monomial(ring_->nvars()), c}};
  }

  /// Largest weighted degree of a term; -1 for zero.
  int sugar(const ModVec& v) const {
    int s = -1;
    for (const auto& t : v) s = std::max(s, degree(t.mono, t.comp));
    return s;
  }

  bool is_homogeneous(const ModVec& v) const {
    for (const auto& t : v)
      if (degree(t.mono, t.comp) != degree(v.front().mono, v.front().comp)) return false;
    return true;
  }

  ModVec from_columns(const std::vector<Polynomial>& column) const {
    std::vector<ModTerm> ts;
    for (std::uint32_t k = 0; k < column.size(); ++k)
      for (const auto& t : column[k].terms()) ts.push_back({t.coef, t.mono, k});
    return canonical(std::move(ts));
  }

  std::vector<Polynomial> to_columns(const ModVec& v) const {
    std::vector<std::vector<Term>> parts(rank());
    for (const auto& t : v) parts.at(t.comp).push_back({t.coef, t.mono});
    std::vector<Polynomial> out;
    for (auto& p : parts) out.push_back(Polynomial::from_terms(ring_, std::move(p)));
    return out;
  }

 private:
  RingPtr ring_;
  std::vector<int> weights_;
  bool weighted_;
};

struct ModuleGBOptions {
  /// Homogeneous inputs only: process degree by degree and drop inputs that
  /// already lie in the submodule generated by earlier ones.
  bool prune = false;
  bool track = true;
};

struct ModuleGBResult {
  /// Input indices that were inserted (the minimal generators when pruning).
  std::vector<std::size_t> kept;
  /// Syzygies among the kept inputs, in S^{kept.size()}.
  std::vector<ModVec> syzygies;
  /// Gröbner basis of the submodule.
  std::vector<ModVec> basis;
};

namespace detail {

class ModuleBuchberger {
 public:
  ModuleBuchberger(const FreeModule& F, const std::vector<ModVec>& inputs, ModuleGBOptions opt)
      : F_(F), inputs_(inputs), opt_(opt), by_comp_(F.rank()) {
    std::vector<int> w;
    for (const auto& v : inputs_) w.push_back(std::max(0, F_.sugar(v)));
    A_.emplace(F_.ring(), w, false);
    for (std::size_t k = 0; k < inputs_.size(); ++k) {
      const auto& v = inputs_[k];
      if (v.empty()) {
        if (!opt_.prune && opt_.track) syz_.push_back(A_->unit(static_cast<std::uint32_t>(k)));
        continue;
      }
      if (opt_.prune && !F_.is_homogeneous(v)) throw std::invalid_argument("pruned module basis needs homogeneous inputs");
      pairs_.push_back({kInput, k, v.front().mono, v.front().comp, F_.sugar(v), seq_++});
    }
  }

  ModuleGBResult run() {
    while (!pairs_.empty()) {
      std::size_t k = select();
      Pair p = std::move(pairs_[k]);
      pairs_[k] = std::move(pairs_.back());
      pairs_.pop_back();
      process(p);
    }
    ModuleGBResult res;
    std::vector<long> remap(inputs_.size(), -1);
    if (!opt_.prune) {
      kept_.clear();
      for (std::size_t k = 0; k < inputs_.size(); ++k) kept_.push_back(k);
    }
    std::sort(kept_.begin(), kept_.end());
    for (std::size_t i = 0; i < kept_.size(); ++i) remap[kept_[i]] = static_cast<long>(i);
    res.kept = kept_;
    std::vector<int> w;
    for (auto k : kept_) w.push_back(A_->weight(k));
    FreeModule K(F_.ring(), w, false);
    for (auto& s : syz_) {
      std::vector<ModTerm> ts;
      for (auto& t : s) {
        if (remap[t.comp] < 0) throw std::logic_error("syzygy involves a discarded input");
        ts.push_back({t.coef, t.mono, static_cast<std::uint32_t>(remap[t.comp])});
      }
      auto v = K.canonical(std::move(ts));
      if (!v.empty()) res.syzygies.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (elems_[i].active) res.basis.push_back(elems_[i].f);
    return res;
  }

 private:
  static constexpr std::size_t kInput = std::numeric_limits<std::size_t>::max();

  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::uint32_t comp;
    int sugar;
    std::uint64_t seq;
  };

  struct Elem {
    ModVec f;
    ModVec a;
    int sugar;
    bool active;
  };

  // pairs before inputs of the same degree; then by lcm; then creation order
  bool before(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    bool ia = a.i == kInput, ib = b.i == kInput;
    if (ia != ib) return !ia;
    if (ia) return a.j < b.j;
    int c = F_.compare(a.lcm, a.comp, b.lcm, b.comp);
    if (c) return c < 0;
    return a.seq < b.seq;
  }

  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k)
      if (before(pairs_[k], pairs_[best])) best = k;
    return best;
  }

  const Elem* divisor(const Monomial& m, std::uint32_t comp) const {
    for (std::size_t i : by_comp_[comp])
      if (elems_[i].active && elems_[i].f.front().mono.divides(m)) return &elems_[i];
    return nullptr;
  }

  /// Full reduction of (f, a) by the active elements; returns the remainder.
  void reduce(ModVec& f, ModVec& a) const {
    ModVec rem;
    std::size_t start = 0;
    while (start < f.size()) {
      const ModTerm& lt = f[start];
      const Elem* g = divisor(lt.mono, lt.comp);
      if (!g) {
        rem.push_back(lt);
        ++start;
        continue;
      }
      FieldElem c = -(lt.coef / g->f.front().coef);
      Monomial m = lt.mono / g->f.front().mono;
      ModVec tail(f.begin() + static_cast<std::ptrdiff_t>(start) + 1, f.end());
      ModVec gtail(g->f.begin() + 1, g->f.end());
      f = F_.combine(tail, c, m, gtail);
      start = 0;
      if (opt_.track) a = A_->combine(a, c, m, g->a);
    }
    f = std::move(rem);
  }

  void process(const Pair& p) {
    ModVec f, a;
    if (p.i == kInput) {
      f = inputs_[p.j];
      if (opt_.track) a = A_->unit(static_cast<std::uint32_t>(p.j));
    } else {
      const Elem& gi = elems_[p.i];
      const Elem& gj = elems_[p.j];
      Monomial mi = p.lcm / gi.f.front().mono, mj = p.lcm / gj.f.front().mono;
      FieldElem ci = gi.f.front().coef.inverse(), cj = -gj.f.front().coef.inverse();
      f = F_.combine(F_.combine({}, ci, mi, gi.f), cj, mj, gj.f);
      if (opt_.track) a = A_->combine(A_->combine({}, ci, mi, gi.a), cj, mj, gj.a);
    }
    reduce(f, a);
    if (f.empty()) {
      if (p.i == kInput) {
        if (opt_.prune) return;  // redundant generator
        if (opt_.track) syz_.push_back(std::move(a));
      } else if (opt_.track) {
        syz_.push_back(std::move(a));
      }
      return;
    }
    if (p.i == kInput) kept_.push_back(p.j);
    FieldElem inv = f.front().coef.inverse();
    if (!inv.is_one()) {
      f = F_.scale(f, inv);
      if (opt_.track) a = F_scale_a(a, inv);
    }
    install(std::move(f), std::move(a), p.sugar);
  }

  ModVec F_scale_a(const ModVec& a, const FieldElem& c) const { return A_->scale(a, c); }

  void install(ModVec f, ModVec a, int sugar) {
    const std::size_t hi = elems_.size();
    const Monomial lh = f.front().mono;
    const std::uint32_t comp = f.front().comp;
    const bool rank_one = F_.rank() == 1;
    int hs = std::max(sugar, F_.sugar(f));

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool keep;
    };
    std::vector<Cand> c;
    for (std::size_t g : by_comp_[comp]) {
      if (!elems_[g].active) continue;
      const Monomial& lg = elems_[g].f.front().mono;
      c.push_back({g, lcm(lh, lg), rank_one && coprime(lh, lg), true});
    }
    for (std::size_t x = 0; x < c.size(); ++x) {
      if (c[x].coprime) continue;
      for (std::size_t y = 0; y < c.size(); ++y) {
        if (x == y || !c[y].keep) continue;
        if (c[y].lcm.divides(c[x].lcm)) {
          bool equal = c[y].lcm == c[x].lcm;
          if (!equal || c[y].coprime || y < x) {
            c[x].keep = false;
            break;
          }
        }
      }
    }
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (p.i != kInput && p.comp == comp && lh.divides(p.lcm)) {
        Monomial l1 = lcm(elems_[p.i].f.front().mono, lh);
        Monomial l2 = lcm(elems_[p.j].f.front().mono, lh);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);

    elems_.push_back({std::move(f), std::move(a), hs, true});
    by_comp_[comp].push_back(hi);
    const Elem& h = elems_[hi];
    for (const auto& cd : c) {
      if (!cd.keep) continue;
      const Elem& g = elems_[cd.g];
      if (cd.coprime) {
        if (opt_.track) {
          // Koszul relation g*h - h*g, which the product criterion skips
          Polynomial pg = poly_of(g.f), ph = poly_of(h.f);
          syz_.push_back(A_->sub(A_->multiply(pg, h.a), A_->multiply(ph, g.a)));
        }
        continue;
      }
      int s = std::max(g.sugar + static_cast<int>(cd.lcm.degree() - g.f.front().mono.degree()),
                       hs + static_cast<int>(cd.lcm.degree() - lh.degree()));
      pairs_.push_back({cd.g, hi, cd.lcm, comp, s, seq_++});
    }
    for (std::size_t g : by_comp_[comp])
      if (g != hi && elems_[g].active && lh.divides(elems_[g].f.front().mono)) elems_[g].active = false;
  }

  Polynomial poly_of(const ModVec& v) const {
    std::vector<Term> ts;
    for (const auto& t : v) ts.push_back({t.coef, t.mono});
    return Polynomial::from_terms(F_.ring(), std::move(ts));
  }

  const FreeModule& F_;
  const std::vector<ModVec>& inputs_;
  ModuleGBOptions opt_;
  std::optional<FreeModule> A_;
  std::vector<Elem> elems_;
  std::vector<std::vector<std::size_t>> by_comp_;
  std::vector<Pair> pairs_;
  std::vector<std::size_t> kept_;
  std::vector<ModVec> syz_;
  std::uint64_t seq_ = 0;
};

}  // namespace detail

/// Gröbner basis of the submodule generated by `inputs`, with the syzygies
/// of the (kept) inputs.
inline ModuleGBResult module_groebner(const FreeModule& F, const std::vector<ModVec>& inputs,
                                      ModuleGBOptions opt = {}) {
  return detail::ModuleBuchberger(F, inputs, opt).run();
}

/// Remainder of v modulo a module Gröbner basis.
inline ModVec module_normal_form(const FreeModule& F, const std::vector<ModVec>& basis, ModVec v) {
  ModVec rem;
  while (!v.empty()) {
    const ModTerm lt = v.front();
    const ModVec* g = nullptr;
    for (const auto& b : basis)
      if (b.front().comp == lt.comp && b.front().mono.divides(lt.mono)) {
        g = &b;
        break;
      }
    if (!g) {
      rem.push_back(lt);
      v.erase(v.begin());
      continue;
    }
    v = F.combine(v, -(lt.coef / g->front().coef), lt.mono / g->front().mono, *g);
  }
  return rem;
}

/// Generators of the first syzygy module of a list of polynomials.
struct SyzygyModule {
  RingPtr ring;
  std::size_t rank = 0;
  /// Each generator has one entry per input polynomial.
  std::vector<std::vector<Polynomial>> gens;
};

/// Syzygies of `gens` computed in `order`. Homogeneous input gets a minimal
/// generating set of the syzygy module.
inline SyzygyModule syzygies(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  if (gens.empty()) throw std::invalid_argument("syzygies of an empty list");
  RingPtr base = gens.front().ring();
  RingPtr r = base->order() == order ? base : base->with_order(order);
  std::vector<ModVec> in;
  bool homogeneous = true;
  std::vector<int> w;
  FreeModule R1(r, {0}, false);
  for (const auto& g : gens) {
    if (!g.ring()->compatible(*base)) throw std::invalid_argument("ring mismatch in syzygies");
    if (g.is_zero()) throw std::invalid_argument("syzygies of a zero polynomial");
    in.push_back(R1.from_columns({g.in_ring(r)}));
    homogeneous = homogeneous && g.is_homogeneous();
    w.push_back(g.total_degree());
  }
  auto res = module_groebner(R1, in, {false, true});
  FreeModule A(r, w, homogeneous);
  std::vector<ModVec> syz;
  for (auto& s : res.syzygies) syz.push_back(A.canonical(s));
  if (homogeneous && !syz.empty()) {
    auto min = module_groebner(A, syz, {true, false});
    std::vector<ModVec> pick;
    for (auto k : min.kept) pick.push_back(syz[k]);
    syz = std::move(pick);
  }
  SyzygyModule out{base, gens.size(), {}};
  for (const auto& s : syz) {
    auto cols = A.to_columns(s);
    for (auto& c : cols) c = c.in_ring(base);
    out.gens.push_back(std::move(cols));
  }
  return out;
}

}  // namespace rees

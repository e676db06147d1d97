#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "rees/groebner.hpp"
#include "rees/module.hpp"

namespace rees {

/// Ideal of A = S/Q given by generators in S. Gröbner bases of the lifted
/// ideal <gens> + Q are cached per term order; copies share the cache.
class IdealHandle {
 public:
  IdealHandle() = default;

  IdealHandle(RingDescriptor base, std::vector<Polynomial> gens) : base_(std::move(base)) {
    if (!base_.ring) throw std::invalid_argument("ideal without a ring");
    for (auto& g : gens) {
      if (!g.ring()->compatible(*base_.ring)) throw std::invalid_argument("ring mismatch: generator not in " + base_.ring->to_string());
      Polynomial p = g.in_ring(base_.ring);
      if (!p.is_zero()) gens_.push_back(std::move(p));
    }
    for (auto& q : base_.quotient) q = q.in_ring(base_.ring);
  }

  IdealHandle(RingPtr ring, std::vector<Polynomial> gens) : IdealHandle(RingDescriptor{std::move(ring), {}}, std::move(gens)) {}

  const RingDescriptor& base() const { return base_; }
  const RingPtr& ring() const { return base_.ring; }
  bool has_quotient() const { return base_.has_quotient(); }
  const std::vector<Polynomial>& gens() const { return gens_; }

  /// Generators of the preimage <gens> + Q in S.
  std::vector<Polynomial> lifted_gens() const {
    auto out = gens_;
    out.insert(out.end(), base_.quotient.begin(), base_.quotient.end());
    return out;
  }

  const GroebnerBasis& gb(const MonomialOrder& order = MonomialOrder::grevlex()) const {
    const std::string key = order.tag();
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->gbs.find(key);
    if (it != cache_->gbs.end()) return *it->second;
    RingPtr r = base_.ring->order() == order ? base_.ring : base_.ring->with_order(order);
    auto gb = std::make_shared<const GroebnerBasis>(buchberger(lifted_gens(), r));
    return *cache_->gbs.emplace(key, std::move(gb)).first->second;
  }

  bool contains(const Polynomial& f) const {
    if (!f.ring()->compatible(*base_.ring)) throw std::invalid_argument("ring mismatch in membership");
    return gb().contains(f);
  }

  /// The ideal is all of A.
  bool is_unit() const { return gb().is_unit_ideal(); }

  /// The ideal is zero in A, i.e. contained in Q.
  bool is_zero() const {
    if (gens_.empty()) return true;
    IdealHandle q(RingDescriptor{base_.ring, {}}, base_.quotient);
    for (const auto& g : gens_)
      if (!q.contains(g)) return false;
    return true;
  }

  /// Canonical generators for display: the reduced grevlex basis of the
  /// lifted ideal, without the elements already in Q.
  std::vector<Polynomial> canonical_gens() const {
    const auto& g = gb().elements();
    if (!has_quotient()) return g;
    IdealHandle q(RingDescriptor{base_.ring, {}}, base_.quotient);
    std::vector<Polynomial> out;
    for (const auto& p : g)
      if (!q.contains(p)) out.push_back(p);
    return out;
  }

  std::string to_string() const {
    auto g = canonical_gens();
    return "<" + (g.empty() ? std::string("0") : rees::to_string(g)) + ">";
  }

  IdealHandle with_gens(std::vector<Polynomial> gens) const { return IdealHandle(base_, std::move(gens)); }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const GroebnerBasis>> gbs;
  };

  RingDescriptor base_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

namespace detail {

inline void check_same_context(const IdealHandle& a, const IdealHandle& b) {
  if (!a.ring()->compatible(*b.ring())) throw std::invalid_argument("ring mismatch between ideals");
  if (a.base().quotient.size() != b.base().quotient.size() ||
      !ideal_equal(a.base().quotient, b.base().quotient, MonomialOrder::grevlex(), a.ring()))
    throw std::invalid_argument("ideals live in different quotient rings");
}

/// Elements of the reduced basis of <gens> (in S extended by the flagged
/// trailing variables) that involve none of them, mapped back into S.
inline std::vector<Polynomial> eliminate_trailing(const RingPtr& S, const RingPtr& ext,
                                                  const std::vector<Polynomial>& gens) {
  std::vector<bool> mask(ext->nvars(), false);
  for (std::size_t i = S->nvars(); i < ext->nvars(); ++i) mask[i] = true;
  RingPtr T = ext->with_order(MonomialOrder::block(mask));
  auto gb = buchberger(gens, T);
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements())
    if (!g.involves_from(S->nvars())) out.push_back(g.restricted_to(S));
  return out;
}

}  // namespace detail

inline IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
  detail::check_same_context(a, b);
  auto g = a.gens();
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return a.with_gens(std::move(g));
}

inline IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
  detail::check_same_context(a, b);
  std::vector<Polynomial> g;
  for (const auto& f : a.gens())
    for (const auto& h : b.gens()) g.push_back(f * h);
  return a.with_gens(std::move(g));
}

/// I ∩ J via elim_t(t·I + (1−t)·J), computed on the lifted ideals.
inline IdealHandle intersect(const IdealHandle& a, const IdealHandle& b) {
  detail::check_same_context(a, b);
  if (a.is_zero() || b.is_zero()) return a.with_gens({});
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  const RingPtr& S = a.ring();
  RingPtr ext = S->extended({S->fresh_aux_name()}, {Bidegree{0, 0}});
  Polynomial t = Polynomial::variable(ext, S->nvars());
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.lifted_gens()) gens.push_back(t * f.in_ring(ext));
  for (const auto& g : b.lifted_gens()) gens.push_back(one_minus_t * g.in_ring(ext));
  return a.with_gens(detail::eliminate_trailing(S, ext, gens));
}

/// (I : f) = (I ∩ <f>) / f, computed on the lifted ideal.
inline IdealHandle colon(const IdealHandle& I, const Polynomial& f0) {
  if (f0.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  Polynomial f = f0.in_ring(I.ring());
  if (f.is_unit()) return I;
  IdealHandle q(RingDescriptor{I.ring(), {}}, I.base().quotient);
  if (I.has_quotient() && q.contains(f)) return I.with_gens({Polynomial::constant(I.ring(), 1)});
  if (I.contains(f)) return I.with_gens({Polynomial::constant(I.ring(), 1)});
  IdealHandle lifted(RingDescriptor{I.ring(), {}}, I.lifted_gens());
  IdealHandle F(RingDescriptor{I.ring(), {}}, {f});
  IdealHandle cap = intersect(lifted, F);
  std::vector<Polynomial> out;
  for (const auto& h : cap.gens()) {
    auto d = divide(h, {f});
    if (!d.remainder.is_zero()) throw std::logic_error("colon: intersection element not divisible by f");
    out.push_back(d.quotients[0]);
  }
  IdealHandle res = I.with_gens(std::move(out));
#ifdef REES_CHECK_INVARIANTS
  for (const auto& g : res.gens())
    if (!I.contains(g * f)) throw std::logic_error("colon invariant (I:f)f ⊆ I violated");
  for (const auto& g : I.gens())
    if (!res.contains(g)) throw std::logic_error("colon invariant I ⊆ (I:f) violated");
#endif
  return res;
}

/// (I : J) = ∩_{g ∈ gens J} (I : g).
inline IdealHandle colon_ideal(const IdealHandle& I, const IdealHandle& J) {
  detail::check_same_context(I, J);
  if (J.is_zero()) return I.with_gens({Polynomial::constant(I.ring(), 1)});
  IdealHandle acc;
  bool first = true;
  for (const auto& g : J.gens()) {
    IdealHandle c = colon(I, g);
    acc = first ? c : intersect(acc, c);
    first = false;
  }
  return acc;
}

inline bool ideal_equal(const IdealHandle& a, const IdealHandle& b) {
  detail::check_same_context(a, b);
  return a.gb().elements() == b.gb().elements();
}

/// a ⊆ b
inline bool ideal_subset(const IdealHandle& a, const IdealHandle& b) {
  for (const auto& g : a.gens())
    if (!b.contains(g)) return false;
  return true;
}

struct Saturation {
  IdealHandle ideal;
  /// Number of colon steps until the chain became stationary.
  int steps = 0;
};

inline constexpr int kSaturationCap = 64;

/// (I : J^∞) by iterating I ← (I : J) to a fixpoint.
inline Saturation saturate(const IdealHandle& I, const IdealHandle& J) {
  IdealHandle cur = I;
  for (int k = 0; k < kSaturationCap; ++k) {
    IdealHandle next = colon_ideal(cur, J);
    if (ideal_subset(next, cur)) return {cur, k};
    cur = next;
  }
  throw std::runtime_error("saturation did not stabilize within " + std::to_string(kSaturationCap) + " steps");
}

/// I ∩ K[remaining variables], expressed in the full ring.
inline IdealHandle eliminate(const IdealHandle& I, const std::vector<bool>& vars) {
  if (I.has_quotient()) throw std::invalid_argument("eliminate: lift out of the quotient ring first");
  bool any = false;
  for (bool b : vars) any = any || b;
  if (!any) return I;
  std::vector<bool> mask(I.ring()->nvars(), false);
  for (std::size_t i = 0; i < vars.size() && i < mask.size(); ++i) mask[i] = vars[i];
  auto gb = buchberger(I.gens(), I.ring()->with_order(MonomialOrder::block(mask)));
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements())
    if (!g.involves_any(mask)) out.push_back(g.in_ring(I.ring()));
  return I.with_gens(std::move(out));
}

/// A minimal homogeneous generating set (in the polynomial ring) chosen
/// among the given generators, lowest degree first.
inline std::vector<Polynomial> minimal_generators(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> nz;
  for (const auto& g : gens)
    if (!g.is_zero()) nz.push_back(g);
  if (nz.empty()) return {};
  for (const auto& g : nz)
    if (!g.is_homogeneous()) throw std::invalid_argument("minimal generators need homogeneous input");
  FreeModule R1(nz.front().ring(), {0});
  std::vector<ModVec> in;
  for (const auto& g : nz) in.push_back(R1.from_columns({g}));
  auto res = module_groebner(R1, in, {true, false});
  std::vector<Polynomial> out;
  for (auto k : res.kept) out.push_back(nz[k]);
  return out;
}

/// Krull dimension of S/I, read off the initial ideal: the largest set of
/// variables containing the support of no leading monomial.
inline int krull_dimension(const IdealHandle& I) {
  const auto& gb = I.gb();
  const std::size_t n = I.ring()->nvars();
  if (gb.is_unit_ideal()) return -1;
  std::vector<std::uint64_t> supports;
  for (const auto& m : gb.leading_monomials()) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) s |= std::uint64_t{1} << i;
    supports.push_back(s);
  }
  int best = 0;
  // depth-first over include/exclude decisions with a size bound
  std::vector<std::pair<std::size_t, std::uint64_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [i, set] = stack.back();
    stack.pop_back();
    int size = __builtin_popcountll(set);
    if (size + static_cast<int>(n - i) <= best) continue;
    if (i == n) {
      best = size;
      continue;
    }
    stack.push_back({i + 1, set});
    std::uint64_t with = set | (std::uint64_t{1} << i);
    bool ok = true;
    for (auto s : supports)
      if ((s & with) == s) {
        ok = false;
        break;
      }
    if (ok) stack.push_back({i + 1, with});
  }
  return best;
}

/// Codimension of I in the polynomial ring S.
inline int height(const IdealHandle& I) {
  if (I.is_unit()) throw std::domain_error("height of the unit ideal");
  return static_cast<int>(I.ring()->nvars()) - krull_dimension(I);
}

}  // namespace rees

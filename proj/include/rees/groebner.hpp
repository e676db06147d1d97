#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rees/polynomial.hpp"

namespace rees {

namespace detail {

/// Index of the first element of `gens` whose leading monomial divides `m`.
inline std::optional<std::size_t> find_divisor(const Monomial& m, const std::vector<Polynomial>& gens,
                                               const std::vector<bool>* active = nullptr) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (active && !(*active)[i]) continue;
    if (gens[i].leading_monomial().divides(m)) return i;
  }
  return std::nullopt;
}

/// Full reduction of `f` by `gens` (leading and tail terms). Quotients are
/// accumulated in `quotients` when non-null.
inline Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& gens,
                              const std::vector<bool>* active, std::vector<std::vector<Term>>* quotients) {
  std::vector<Term> rem;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    auto div = find_divisor(lt.mono, gens, active);
    if (!div) {
      rem.push_back(lt);
      p = p.tail();
      continue;
    }
    const Polynomial& g = gens[*div];
    FieldElem c = lt.coef / g.leading_coeff();
    Monomial m = lt.mono / g.leading_monomial();
    if (quotients) (*quotients)[*div].push_back({c, m});
    p = p.tail().combine(-c, m, g.tail());
  }
  return Polynomial::from_terms(f.ring(), std::move(rem));
}

}  // namespace detail

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division in the order of f's ring: f = sum q_i g_i + r with no
/// term of r divisible by any leading monomial; the first divisor in list
/// order wins.
inline DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  for (const auto& g : divisors) {
    f.check_ring(g);
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  }
  std::vector<std::vector<Term>> qs(divisors.size());
  DivisionResult res;
  res.remainder = detail::reduce_full(f, divisors, nullptr, &qs);
  for (auto& q : qs) res.quotients.push_back(Polynomial::from_terms(f.ring(), std::move(q)));
#ifdef REES_CHECK_INVARIANTS
  Polynomial check = res.remainder;
  for (std::size_t i = 0; i < divisors.size(); ++i) check += res.quotients[i] * divisors[i];
  if (!(check == f)) throw std::logic_error("division identity violated");
#endif
  return res;
}

/// Division with respect to an explicit order; inputs are re-sorted.
inline DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                             const MonomialOrder& order) {
  RingPtr r = f.ring()->order() == order ? f.ring() : f.ring()->with_order(order);
  std::vector<Polynomial> ds;
  for (const auto& g : divisors) {
    if (!g.ring()->compatible(*f.ring())) throw std::invalid_argument("ring mismatch in divide");
    ds.push_back(g.in_ring(r));
  }
  return divide(f.in_ring(r), ds);
}

/// Reduced or plain Gröbner basis of an ideal for one term order.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elems, bool reduced)
      : ring_(std::move(ring)), elems_(std::move(elems)), reduced_(reduced) {}

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool reduced() const { return reduced_; }
  bool is_zero_ideal() const { return elems_.empty(); }
  bool is_unit_ideal() const { return elems_.size() == 1 && elems_[0].is_unit(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : elems_) out.push_back(g.leading_monomial());
    return out;
  }

  Polynomial normal_form(const Polynomial& f) const {
    return detail::reduce_full(f.in_ring(ring_), elems_, nullptr, nullptr);
  }

  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.ring_->compatible(*b.ring_) && a.order() == b.order() && a.elems_ == b.elems_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> elems_;
  bool reduced_ = false;
};

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f * (l / f.leading_monomial()) * f.leading_coeff().inverse();
  return a.combine(-g.leading_coeff().inverse(), l / g.leading_monomial(), g);
}

namespace detail {

struct CriticalPair {
  std::size_t i;  // npos for an input generator waiting to be inserted
  std::size_t j;
  Monomial lcm;
  std::uint32_t sugar;
};

inline constexpr std::size_t kInput = std::numeric_limits<std::size_t>::max();

/// Buchberger with the normal/sugar selection strategy and the
/// Gebauer–Möller installation of new pairs.
class Buchberger {
 public:
  Buchberger(RingPtr ring, const std::vector<Polynomial>& gens) : ring_(std::move(ring)) {
    for (const auto& g : gens) {
      Polynomial p = g.in_ring(ring_);
      if (p.is_zero()) continue;
      inputs_.push_back(p.monic());
      pairs_.push_back({kInput, inputs_.size() - 1, p.leading_monomial(), static_cast<std::uint32_t>(p.total_degree())});
    }
  }

  GroebnerBasis run() {
    while (!pairs_.empty()) {
      std::size_t k = select();
      CriticalPair cp = std::move(pairs_[k]);
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(k));
      Polynomial h = cp.i == kInput ? inputs_[cp.j] : s_polynomial(basis_[cp.i], basis_[cp.j]);
      h = reduce_full(h, basis_, &active_, nullptr);
      if (h.is_zero()) continue;
      if (h.is_unit()) {
        // whole ring
        return GroebnerBasis(ring_, {Polynomial::constant(ring_, 1)}, true);
      }
      install(h.monic(), cp.sugar);
    }
    return finish();
  }

 private:
  std::size_t select() const {
    std::size_t best = 0;
    const auto& ord = ring_->order();
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      if (ord.compare(a.lcm, b.lcm) < 0) best = k;
    }
    return best;
  }

  void install(Polynomial h, std::uint32_t sugar) {
    const std::size_t hi = basis_.size();
    const Monomial& lh = h.leading_monomial();
    std::uint32_t hs = std::max<std::uint32_t>(sugar, static_cast<std::uint32_t>(h.total_degree()));

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> c;
    for (std::size_t g = 0; g < basis_.size(); ++g)
      if (active_[g]) {
        const Monomial& lg = basis_[g].leading_monomial();
        c.push_back({g, lcm(lh, lg), coprime(lh, lg)});
      }
    // chain criterion among the new pairs: drop (h,g1) when another new pair's
    // lcm properly divides it; among equal lcms keep the first (or a coprime one)
    std::vector<bool> done(c.size(), false);
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (c[a].coprime) continue;
      for (std::size_t b = 0; b < c.size(); ++b) {
        if (a == b || !c[b].keep) continue;
        if (c[b].lcm.divides(c[a].lcm)) {
          bool equal = c[b].lcm == c[a].lcm;
          if (!equal || c[b].coprime || b < a) {
            c[a].keep = false;
            break;
          }
        }
      }
    }
    // old pairs made redundant by h
    std::vector<CriticalPair> kept;
    kept.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (p.i != kInput && lh.divides(p.lcm)) {
        Monomial l1 = lcm(basis_[p.i].leading_monomial(), lh);
        Monomial l2 = lcm(basis_[p.j].leading_monomial(), lh);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);

    basis_.push_back(std::move(h));
    sugar_.push_back(hs);
    active_.push_back(true);
    for (const auto& cd : c) {
      if (!cd.keep || cd.coprime) continue;
      const Monomial& lg = basis_[cd.g].leading_monomial();
      std::uint32_t s = std::max(sugar_[cd.g] + (cd.lcm.degree() - lg.degree()), hs + (cd.lcm.degree() - lh.degree()));
      pairs_.push_back({cd.g, hi, cd.lcm, s});
    }
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(basis_[g].leading_monomial())) active_[g] = false;
  }

  GroebnerBasis finish() {
    std::vector<Polynomial> min;
    for (std::size_t g = 0; g < basis_.size(); ++g)
      if (active_[g]) min.push_back(basis_[g]);
    std::vector<Polynomial> red;
    red.reserve(min.size());
    for (std::size_t g = 0; g < min.size(); ++g) {
      std::vector<bool> others(min.size(), true);
      others[g] = false;
      const Term& lt = min[g].leading_term();
      Polynomial tail = reduce_full(min[g].tail(), min, &others, nullptr);
      red.push_back((Polynomial::term(ring_, lt.coef, lt.mono) + tail).monic());
    }
    const auto& ord = ring_->order();
    std::sort(red.begin(), red.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ord.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return GroebnerBasis(ring_, std::move(red), true);
  }

  RingPtr ring_;
  std::vector<Polynomial> inputs_;
  std::vector<Polynomial> basis_;
  std::vector<std::uint32_t> sugar_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;
};

}  // namespace detail

/// Reduced Gröbner basis of <gens> for `order`: monic, inter-reduced, sorted
/// by leading monomial descending. Unique for the ideal and order.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  if (gens.empty()) throw std::invalid_argument("buchberger needs a ring; pass at least one generator");
  RingPtr base = gens.front().ring();
  for (const auto& g : gens)
    if (!g.ring()->compatible(*base)) throw std::invalid_argument("ring mismatch among generators");
  RingPtr r = base->order() == order ? base : base->with_order(order);
  return detail::Buchberger(r, gens).run();
}

inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  RingPtr r = ring;
  std::vector<Polynomial> gs;
  for (const auto& g : gens) gs.push_back(g.in_ring(r));
  return detail::Buchberger(r, gs).run();
}

inline bool membership(const Polynomial& f, const GroebnerBasis& gb) {
  if (!f.ring()->compatible(*gb.ring())) throw std::invalid_argument("ring mismatch in membership");
  return gb.contains(f);
}

/// Every S-polynomial of `elems` reduces to zero modulo `elems`.
inline bool is_groebner_basis(const std::vector<Polynomial>& elems) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!detail::reduce_full(s_polynomial(elems[i], elems[j]), elems, nullptr, nullptr).is_zero()) return false;
  return true;
}

/// Same ideal iff the reduced bases coincide. The empty list is the zero ideal.
inline bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                        const MonomialOrder& order, const RingPtr& ring) {
  auto ga = buchberger(a, ring->with_order(order));
  auto gb = buchberger(b, ring->with_order(order));
  return ga.elements() == gb.elements();
}

}  // namespace rees

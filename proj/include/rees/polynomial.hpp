#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rees/ring.hpp"

namespace rees {

struct Term {
  FieldElem coef;
  Monomial mono;
};

/// Sparse polynomial: non-zero terms strictly descending in the ring's term
/// order. The empty term list is the zero polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const FieldElem& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({c, Monomial(p.ring_->nvars())});
    return p;
  }

  static Polynomial constant(RingPtr ring, long c) {
    auto f = ring->field();
    return constant(std::move(ring), FieldElem::from_int(c, f));
  }

  static Polynomial variable(RingPtr ring, std::size_t index) {
    Polynomial p(ring);
    p.terms_.push_back({FieldElem::one(ring->field()), Monomial::variable(ring->nvars(), index)});
    return p;
  }

  static Polynomial term(RingPtr ring, const FieldElem& c, const Monomial& m) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({c, m});
    return p;
  }

  /// Canonicalizes an arbitrary term list: sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    const auto& ord = p.ring_->order();
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coef += t.coef;
        if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
      } else if (!t.coef.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_unit() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const FieldElem& leading_coeff() const { return leading_term().coef; }

  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max<int>(d, static_cast<int>(t.mono.degree()));
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }

  bool is_bihomogeneous() const {
    if (terms_.empty()) return true;
    Bidegree d = ring_->bidegree(terms_.front().mono);
    for (const auto& t : terms_)
      if (ring_->bidegree(t.mono) != d) return false;
    return true;
  }

  /// Common bidegree of all terms.
  Bidegree bidegree() const {
    if (terms_.empty()) throw std::domain_error("bidegree of the zero polynomial");
    Bidegree d = ring_->bidegree(terms_.front().mono);
    for (const auto& t : terms_) {
      Bidegree e = ring_->bidegree(t.mono);
      if (e != d)
        throw std::domain_error("polynomial is not bihomogeneous: terms of bidegree " + d.to_string() + " and " +
                                e.to_string());
    }
    return d;
  }

  /// All terms but the leading one.
  Polynomial tail() const {
    Polynomial p(ring_);
    if (terms_.size() > 1) p.terms_.assign(terms_.begin() + 1, terms_.end());
    return p;
  }

  Polynomial monic() const {
    if (is_zero() || leading_coeff().is_one()) return *this;
    return *this * leading_coeff().inverse();
  }

  /// Re-expresses this polynomial in `target`: same variables with another
  /// order, or a ring extending this one by trailing variables.
  Polynomial in_ring(const RingPtr& target) const {
    if (target.get() == ring_.get()) return *this;
    if (target->nvars() < ring_->nvars()) throw std::invalid_argument("cannot map into a smaller ring");
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
      if (target->variable(i) != ring_->variable(i) || !(target->field() == ring_->field()))
        throw std::invalid_argument("ring mismatch: " + ring_->to_string() + " vs " + target->to_string());
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back({t.coef, t.mono.extended(target->nvars())});
    if (target->nvars() == ring_->nvars() && target->order() == ring_->order()) {
      Polynomial p(target);
      p.terms_ = std::move(ts);
      return p;
    }
    return from_terms(target, std::move(ts));
  }

  /// Inverse of `in_ring` for extensions: drops trailing variables, which
  /// must not occur.
  Polynomial restricted_to(const RingPtr& target) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back({t.coef, t.mono.truncated(target->nvars())});
    return from_terms(target, std::move(ts));
  }

  /// True iff some term involves a variable with index >= first.
  bool involves_from(std::size_t first) const {
    for (const auto& t : terms_)
      for (std::size_t i = first; i < t.mono.size(); ++i)
        if (t.mono[i]) return true;
    return false;
  }

  bool involves_any(const std::vector<bool>& vars) const {
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < vars.size() && i < t.mono.size(); ++i)
        if (vars[i] && t.mono[i]) return true;
    return false;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    return a.combine(FieldElem::one(a.ring_->field()), Monomial(a.ring_->nvars()), b);
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    return a.combine(-FieldElem::one(a.ring_->field()), Monomial(a.ring_->nvars()), b);
  }

  friend Polynomial operator*(const Polynomial& a, const FieldElem& c) {
    if (c.is_zero()) return Polynomial(a.ring_);
    Polynomial r = a;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Monomial& m) {
    Polynomial r = a;
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    const Polynomial& big = a.size() >= b.size() ? a : b;
    const Polynomial& small = a.size() >= b.size() ? b : a;
    Polynomial r(a.ring_);
    for (const auto& t : small.terms_) r = r.combine(t.coef, t.mono, big);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(ring_, 1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  /// this + c * m * g, merged in one pass.
  Polynomial combine(const FieldElem& c, const Monomial& m, const Polynomial& g) const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    const auto& ord = ring_->order();
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      Monomial gm = g.terms_[j].mono * m;
      int cmp = i == terms_.size() ? -1 : ord.compare(terms_[i].mono, gm);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back({g.terms_[j++].coef * c, std::move(gm)});
      } else {
        FieldElem s = terms_[i++].coef + g.terms_[j++].coef * c;
        if (!s.is_zero()) r.terms_.push_back({std::move(s), std::move(gm)});
      }
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.ring_ && b.ring_ && !a.ring_->compatible(*b.ring_)) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
    return true;
  }

  /// Canonical text: descending terms, `p/q` coefficients, `^` exponents,
  /// explicit `*`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const auto& t = terms_[k];
      FieldElem c = t.coef;
      bool negative = c.sign() < 0;
      if (negative) c = -c;
      if (k == 0)
        s += negative ? "-" : "";
      else
        s += negative ? " - " : " + ";
      std::string mono = monomial_string(t.mono);
      if (mono.empty())
        s += c.to_string();
      else if (c.is_one())
        s += mono;
      else
        s += c.to_string() + "*" + mono;
    }
    return s;
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!s.empty()) s += "*";
      s += ring_->variable(i);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  void check_ring(const Polynomial& o) const {
    if (ring_.get() == o.ring_.get()) return;
    if (!ring_ || !o.ring_ || !ring_->same(*o.ring_))
      throw std::invalid_argument("ring mismatch in polynomial arithmetic");
  }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Free function form of `Polynomial::bidegree`.
inline Bidegree bidegree_of(const Polynomial& f) { return f.bidegree(); }

/// Base ring A = K[vars] / Q. An empty quotient list means a polynomial ring.
struct RingDescriptor {
  RingPtr ring;
  std::vector<Polynomial> quotient;

  bool has_quotient() const { return !quotient.empty(); }
};

inline std::string to_string(const std::vector<Polynomial>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string();
  return s;
}

}  // namespace rees

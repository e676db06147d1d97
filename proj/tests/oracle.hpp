#pragma once

// Brute-force linear algebra on homogeneous components. Used only to
// cross-check the Gröbner machinery; shares nothing with it beyond the
// Polynomial value type.

#include <map>
#include <random>
#include <vector>

#include "rees/polynomial.hpp"

namespace oracle {

using rees::FieldElem;
using rees::Monomial;
using rees::Polynomial;
using rees::RingPtr;

inline void monomials_rec(std::size_t n, std::size_t i, int left, Monomial& cur, std::vector<Monomial>& out) {
  if (i + 1 == n) {
    cur.set(i, left);
    out.push_back(cur);
    cur.set(i, 0);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur.set(i, e);
    monomials_rec(n, i + 1, left - e, cur, out);
  }
  cur.set(i, 0);
}

inline std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur(n);
  if (n == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  monomials_rec(n, 0, d, cur, out);
  return out;
}

/// Row-echelon span of vectors indexed by monomials.
class Span {
 public:
  explicit Span(rees::Field f) : field_(f) {}

  using Vec = std::map<std::vector<int>, FieldElem>;

  static std::vector<int> key(const Monomial& m) {
    std::vector<int> k(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) k[i] = m[i];
    return k;
  }

  static Vec vec(const Polynomial& p) {
    Vec v;
    for (const auto& t : p.terms()) v.emplace(key(t.mono), t.coef);
    return v;
  }

  /// Reduces v against the pivots; returns the residue.
  Vec reduce(Vec v) const {
    for (const auto& [piv, row] : rows_) {
      auto it = v.find(piv);
      if (it == v.end()) continue;
      FieldElem c = it->second;
      for (const auto& [k, a] : row) {
        FieldElem s = (v.count(k) ? v[k] : FieldElem::zero(field_)) - c * a;
        if (s.is_zero())
          v.erase(k);
        else
          v[k] = s;
      }
    }
    return v;
  }

  bool add(const Vec& v0) {
    Vec v = reduce(v0);
    if (v.empty()) return false;
    auto piv = v.begin()->first;
    FieldElem inv = v.begin()->second.inverse();
    for (auto& [k, a] : v) a = a * inv;
    // keep rows fully reduced against the new pivot
    for (auto& [p, row] : rows_) {
      auto it = row.find(piv);
      if (it == row.end()) continue;
      FieldElem c = it->second;
      for (const auto& [k, a] : v) {
        FieldElem s = (row.count(k) ? row[k] : FieldElem::zero(field_)) - c * a;
        if (s.is_zero())
          row.erase(k);
        else
          row[k] = s;
      }
    }
    rows_.emplace(piv, std::move(v));
    return true;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  rees::Field field_;
  std::map<std::vector<int>, Vec> rows_;
};

/// Degree-d component of the ideal generated by homogeneous `gens`.
inline Span component(const std::vector<Polynomial>& gens, const RingPtr& ring, int d) {
  Span s(ring->field());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int e = d - g.total_degree();
    for (const auto& m : monomials_of_degree(ring->nvars(), e)) s.add(Span::vec(g * m));
  }
  return s;
}

/// f homogeneous: f ∈ <gens> decided in degree deg f.
inline bool member(const Polynomial& f, const std::vector<Polynomial>& gens) {
  if (f.is_zero()) return true;
  return component(gens, f.ring(), f.total_degree()).contains(Span::vec(f));
}

/// dim_K (I : f)_d for homogeneous I, f.
inline std::size_t colon_dim(const std::vector<Polynomial>& gens, const Polynomial& f, int d) {
  const RingPtr& r = f.ring();
  Span target = component(gens, r, d + f.total_degree());
  // kernel dimension of S_d -> S_{d+e} / I_{d+e}
  auto mons = monomials_of_degree(r->nvars(), d);
  Span image = target;
  std::size_t rank_before = image.rank();
  for (const auto& m : mons) image.add(Span::vec(f * m));
  return mons.size() - (image.rank() - rank_before);
}

/// dim_K (I ∩ J)_d for homogeneous generator lists.
inline std::size_t intersection_dim(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                    const RingPtr& ring, int d) {
  Span sa = component(a, ring, d), sb = component(b, ring, d);
  std::vector<Polynomial> both = a;
  both.insert(both.end(), b.begin(), b.end());
  Span sum = component(both, ring, d);
  return sa.rank() + sb.rank() - sum.rank();
}

inline std::size_t ideal_dim(const std::vector<Polynomial>& gens, const RingPtr& ring, int d) {
  return component(gens, ring, d).rank();
}

/// Random homogeneous polynomial of degree d with small integer coefficients.
inline Polynomial random_form(const RingPtr& r, int d, std::mt19937_64& rng, int max_terms = 3) {
  auto mons = monomials_of_degree(r->nvars(), d);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3), nterms(1, max_terms);
  std::vector<rees::Term> ts;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    int c = coef(rng);
    if (c == 0) c = 1;
    ts.push_back({FieldElem::from_int(c, r->field()), mons[pick(rng)]});
  }
  return Polynomial::from_terms(r, std::move(ts));
}

}  // namespace oracle

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rees/algebras.hpp"

namespace rees {

/// Row-major polynomial matrix.
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Free resolution 0 ← F_0 ← F_1 ← ... of S/J. diffs[i-1] is d_i : F_i → F_{i-1}
/// with rank F_{i-1} rows and rank F_i columns.
struct ResolutionData {
  RingPtr ring;
  std::vector<PolyMatrix> diffs;
  std::vector<std::vector<Bidegree>> shifts;
  bool minimal = false;

  std::size_t length() const { return diffs.size(); }
  std::size_t rank(std::size_t i) const { return i < shifts.size() ? shifts[i].size() : 0; }
};

struct ResolveOptions {
  /// Select minimal generators at every step (yields a minimal resolution).
  bool prune = true;
};

namespace detail {

inline Bidegree bidegree_of_vec(const Ring& r, const ModTerm& t, const std::vector<Bidegree>& shifts) {
  return r.bidegree(t.mono) + shifts[t.comp];
}

}  // namespace detail

/// Cancels unit entries until none is left.
inline ResolutionData minimalize(ResolutionData R) {
  for (;;) {
    bool changed = false;
    for (std::size_t i = 1; i <= R.diffs.size() && !changed; ++i) {
      PolyMatrix& d = R.diffs[i - 1];
      for (std::size_t k = 0; k < d.size() && !changed; ++k)
        for (std::size_t l = 0; l < d[k].size() && !changed; ++l) {
          if (!d[k][l].is_unit()) continue;
          const FieldElem a = d[k][l].leading_coeff();
          const FieldElem ainv = a.inverse();
          PolyMatrix nd;
          for (std::size_t r = 0; r < d.size(); ++r) {
            if (r == k) continue;
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < d[r].size(); ++c) {
              if (c == l) continue;
              Polynomial e = d[r][c];
              if (!d[r][l].is_zero() && !d[k][c].is_zero()) e -= d[r][l] * d[k][c] * ainv;
              row.push_back(std::move(e));
            }
            nd.push_back(std::move(row));
          }
          d = std::move(nd);
          if (i < R.diffs.size()) R.diffs[i].erase(R.diffs[i].begin() + static_cast<std::ptrdiff_t>(l));
          if (i >= 2)
            for (auto& row : R.diffs[i - 2]) row.erase(row.begin() + static_cast<std::ptrdiff_t>(k));
          R.shifts[i].erase(R.shifts[i].begin() + static_cast<std::ptrdiff_t>(l));
          R.shifts[i - 1].erase(R.shifts[i - 1].begin() + static_cast<std::ptrdiff_t>(k));
          changed = true;
        }
    }
    if (!changed) break;
  }
  // drop trailing zero modules
  while (!R.shifts.empty() && R.shifts.back().empty() && R.shifts.size() > 1) {
    R.shifts.pop_back();
    R.diffs.pop_back();
  }
  R.minimal = true;
  return R;
}

inline ResolutionData free_resolution(const BigradedPresentation& P, ResolveOptions opt = {}) {
  const RingPtr& S = P.ring();
  ResolutionData R;
  R.ring = S;
  R.shifts.push_back({Bidegree{0, 0}});
  std::vector<ModVec> inputs;
  FreeModule F0(S, {0});
  for (const auto& g : P.J.gens()) {
    if (!g.is_bihomogeneous())
      throw std::domain_error("free_resolution: generator " + g.to_string() + " is not bihomogeneous");
    inputs.push_back(F0.from_columns({g}));
  }
  if (P.J.has_quotient()) throw std::invalid_argument("free_resolution: polynomial ambient ring expected");

  std::vector<int> weights{0};
  const std::size_t cap = opt.prune ? S->nvars() : S->nvars() + 2;
  while (!inputs.empty()) {
    if (R.diffs.size() >= cap) throw std::logic_error("resolution longer than the number of variables");
    FreeModule F(S, weights);
    const auto& prev = R.shifts.back();
    auto res = module_groebner(F, inputs, {opt.prune, true});
    std::vector<Bidegree> shifts;
    PolyMatrix d(prev.size(), std::vector<Polynomial>());
    for (auto k : res.kept) {
      const ModVec& col = inputs[k];
      shifts.push_back(detail::bidegree_of_vec(*S, col.front(), prev));
      auto entries = F.to_columns(col);
      for (std::size_t row = 0; row < prev.size(); ++row) d[row].push_back(entries[row]);
    }
    if (shifts.empty()) break;
    R.diffs.push_back(std::move(d));
    R.shifts.push_back(shifts);
    weights.clear();
    for (const auto& b : shifts) weights.push_back(b.total());
    FreeModule next(S, weights);
    inputs.clear();
    for (auto& s : res.syzygies) inputs.push_back(next.canonical(s));
  }
  R.minimal = false;
  // a unit generator of J still leaves a cancellable entry
  return opt.prune ? minimalize(std::move(R)) : R;
}

/// Multiplicities of the shifts per homological degree.
class BettiTable {
 public:
  using Key = std::pair<int, Bidegree>;

  void add(int i, Bidegree b, int mult = 1) {
    auto& v = entries_[{i, b}];
    v += mult;
    if (v == 0) entries_.erase({i, b});
  }

  int at(int i, Bidegree b) const {
    auto it = entries_.find({i, b});
    return it == entries_.end() ? 0 : it->second;
  }

  const std::map<Key, int>& entries() const { return entries_; }

  /// Total rank of F_i.
  int total(int i) const {
    int s = 0;
    for (const auto& [k, v] : entries_)
      if (k.first == i) s += v;
    return s;
  }

  int max_index() const {
    int m = -1;
    for (const auto& [k, v] : entries_) m = std::max(m, k.first);
    return m;
  }

  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries_ == b.entries_; }

  /// Homological degree across, bidegree shift down.
  std::string to_grid() const {
    std::set<Bidegree> rows;
    for (const auto& [k, v] : entries_) rows.insert(k.second);
    const int n = max_index();
    std::size_t w = 6;
    for (const auto& b : rows) w = std::max(w, b.to_string().size() + 1);
    std::string s(w, ' ');
    for (int i = 0; i <= n; ++i) s += pad(std::to_string(i), 5);
    s += "\n";
    for (const auto& b : rows) {
      std::string label = b.to_string() + ":";
      s += label + std::string(w - label.size(), ' ');
      for (int i = 0; i <= n; ++i) {
        int v = at(i, b);
        s += pad(v ? std::to_string(v) : std::string("."), 5);
      }
      s += "\n";
    }
    return s;
  }

 private:
  static std::string pad(const std::string& t, std::size_t w) {
    return t.size() >= w ? t : std::string(w - t.size(), ' ') + t;
  }

  std::map<Key, int> entries_;
};

inline BettiTable betti(const ResolutionData& R) {
  if (!R.minimal) throw std::invalid_argument("betti: resolution is not minimal");
  BettiTable t;
  for (std::size_t i = 0; i < R.shifts.size(); ++i)
    for (const auto& b : R.shifts[i]) t.add(static_cast<int>(i), b);
  return t;
}

/// x- and y-regularity; nullopt stands for −∞ (the zero module).
struct Regularity {
  std::optional<int> x;
  std::optional<int> y;
};

inline Regularity reg_xy(const ResolutionData& R) {
  if (!R.minimal) throw std::invalid_argument("reg_xy: resolution is not minimal");
  Regularity reg;
  for (std::size_t i = 0; i < R.shifts.size(); ++i)
    for (const auto& b : R.shifts[i]) {
      int rx = b.x - static_cast<int>(i), ry = b.y - static_cast<int>(i);
      reg.x = reg.x ? std::max(*reg.x, rx) : rx;
      reg.y = reg.y ? std::max(*reg.y, ry) : ry;
    }
  return reg;
}

inline std::string reg_string(const std::optional<int>& r) { return r ? std::to_string(*r) : std::string("-inf"); }

/// d_i ∘ d_{i+1} = 0 for every i.
inline bool compose_to_zero(const ResolutionData& R) {
  for (std::size_t i = 1; i < R.diffs.size(); ++i) {
    const PolyMatrix& a = R.diffs[i - 1];
    const PolyMatrix& b = R.diffs[i];
    const std::size_t mid = R.rank(i), cols = R.rank(i + 1);
    for (std::size_t r = 0; r < a.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        Polynomial s(R.ring);
        for (std::size_t k = 0; k < mid; ++k)
          if (!a[r][k].is_zero() && !b[k][c].is_zero()) s += a[r][k] * b[k][c];
        if (!s.is_zero()) return false;
      }
  }
  return true;
}

/// Entry (k,l) of d_i is zero or bihomogeneous of bidegree shift_i[l] − shift_{i−1}[k].
inline bool shifts_consistent(const ResolutionData& R) {
  for (std::size_t i = 1; i <= R.diffs.size(); ++i) {
    const PolyMatrix& d = R.diffs[i - 1];
    if (d.size() != R.rank(i - 1)) return false;
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d[k].size() != R.rank(i)) return false;
      for (std::size_t l = 0; l < d[k].size(); ++l) {
        const Polynomial& e = d[k][l];
        if (e.is_zero()) continue;
        if (!e.is_bihomogeneous() || e.bidegree() != R.shifts[i][l] - R.shifts[i - 1][k]) return false;
      }
    }
  }
  return true;
}

namespace detail {

/// Rank of a matrix over the field by exact Gaussian elimination.
inline std::size_t field_rank(std::vector<std::vector<FieldElem>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    FieldElem inv = m[rank][c].inverse();
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      FieldElem f = m[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] - f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline FieldElem evaluate(const Polynomial& p, const std::vector<FieldElem>& point) {
  FieldElem s = FieldElem::zero(p.ring()->field());
  for (const auto& t : p.terms()) {
    FieldElem v = t.coef;
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      for (int e = 0; e < t.mono[i]; ++e) v = v * point[i];
    s = s + v;
  }
  return s;
}

}  // namespace detail

/// Ranks over the fraction field, estimated by evaluating at seeded random
/// points (the maximum over `trials` points). Checks
/// rank d_i + rank d_{i+1} = rank F_i for 1 ≤ i ≤ length.
inline bool exactness_rank_check(const ResolutionData& R, std::uint64_t seed = 1, int trials = 2) {
  const std::size_t L = R.diffs.size();
  std::vector<std::size_t> rk(L + 2, 0);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-1000003, 1000003);
  const Field& f = R.ring->field();
  for (int t = 0; t < trials; ++t) {
    std::vector<FieldElem> point;
    for (std::size_t i = 0; i < R.ring->nvars(); ++i) point.push_back(FieldElem::from_int(dist(rng), f));
    for (std::size_t i = 1; i <= L; ++i) {
      std::vector<std::vector<FieldElem>> m;
      for (const auto& row : R.diffs[i - 1]) {
        std::vector<FieldElem> v;
        for (const auto& e : row) v.push_back(detail::evaluate(e, point));
        m.push_back(std::move(v));
      }
      rk[i] = std::max(rk[i], detail::field_rank(std::move(m)));
    }
  }
  for (std::size_t i = 1; i <= L; ++i)
    if (rk[i] + rk[i + 1] != R.rank(i)) return false;
  return true;
}

}  // namespace rees

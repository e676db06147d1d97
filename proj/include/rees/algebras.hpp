#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rees/ideal.hpp"

namespace rees {

/// Bigraded quotient S/J with S = K[x-block, y-block].
struct BigradedPresentation {
  RingDescriptor ambient;
  IdealHandle J;
  std::string provenance;  // "symmetric", "rees" or "custom"
  std::size_t nx = 0;
  std::size_t ny = 0;
  /// False for Rees presentations of ideals that are not equigenerated.
  bool equigenerated = true;

  const RingPtr& ring() const { return ambient.ring; }

  std::vector<bool> y_mask() const {
    std::vector<bool> m(nx + ny, false);
    for (std::size_t i = nx; i < nx + ny; ++i) m[i] = true;
    return m;
  }
};

namespace detail {

inline void check_generators(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  for (const auto& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    if (!g.ring()->compatible(*gens.front().ring())) throw std::invalid_argument("generators in different rings");
  }
}

/// K[x, y_1..y_n] with x ↦ (1,0), y ↦ (0,1); y names avoid the x names.
inline RingPtr bigraded_ambient(const RingPtr& base, std::size_t n) {
  std::vector<std::string> xs = base->variables();
  auto clash = [&](const std::string& prefix) {
    for (std::size_t j = 1; j <= n; ++j)
      if (base->index_of(prefix + std::to_string(j))) return true;
    return false;
  };
  std::string prefix;
  for (const char* p : {"y", "Y", "w", "T", "yy", "Y_"}) {
    if (!clash(p)) {
      prefix = p;
      break;
    }
  }
  if (prefix.empty()) throw std::invalid_argument("cannot find names for the y variables");
  std::vector<std::string> vars = xs;
  std::vector<Bidegree> deg(xs.size(), Bidegree{1, 0});
  for (std::size_t j = 1; j <= n; ++j) {
    vars.push_back(prefix + std::to_string(j));
    deg.push_back({0, 1});
  }
  return make_ring(vars, base->field(), deg);
}

inline bool equigenerated(const std::vector<Polynomial>& gens) {
  for (const auto& g : gens)
    if (!g.is_homogeneous() || g.total_degree() != gens.front().total_degree()) return false;
  return true;
}

}  // namespace detail

/// Symmetric algebra: J generated by Σ s_j y_j over the syzygies s.
inline BigradedPresentation sym_ideal(const std::vector<Polynomial>& gens) {
  detail::check_generators(gens);
  RingPtr base = gens.front().ring();
  const std::size_t n = gens.size(), nx = base->nvars();
  RingPtr S = detail::bigraded_ambient(base, n);
  std::vector<Polynomial> rel;
  if (n > 1) {
    auto syz = syzygies(gens, MonomialOrder::grevlex());
    for (const auto& s : syz.gens) {
      Polynomial f(S);
      for (std::size_t j = 0; j < n; ++j) f += s[j].in_ring(S) * Polynomial::variable(S, nx + j);
      if (!f.is_zero()) rel.push_back(std::move(f));
    }
  }
  BigradedPresentation P{RingDescriptor{S, {}}, IdealHandle(S, rel), "symmetric", nx, n, detail::equigenerated(gens)};
  return P;
}

/// Rees algebra: J = ker(K[x,y] → S[t], y_j ↦ a_j t), by eliminating t.
inline BigradedPresentation rees_ideal(const std::vector<Polynomial>& gens) {
  detail::check_generators(gens);
  RingPtr base = gens.front().ring();
  const std::size_t n = gens.size(), nx = base->nvars();
  RingPtr S = detail::bigraded_ambient(base, n);
  RingPtr ext = S->extended({S->fresh_aux_name()}, {Bidegree{0, 0}});
  Polynomial t = Polynomial::variable(ext, S->nvars());
  std::vector<Polynomial> g;
  for (std::size_t j = 0; j < n; ++j)
    g.push_back(Polynomial::variable(ext, nx + j) - t * gens[j].in_ring(S).in_ring(ext));
  auto J = detail::eliminate_trailing(S, ext, g);
  return BigradedPresentation{RingDescriptor{S, {}}, IdealHandle(S, J), "rees", nx, n, detail::equigenerated(gens)};
}

/// The presentation B/I of a quotient, single graded (all y-degrees zero).
inline BigradedPresentation quotient_presentation(const std::vector<Polynomial>& gens, const RingPtr& base) {
  std::vector<Bidegree> deg(base->nvars(), Bidegree{1, 0});
  RingPtr S = make_ring(base->variables(), base->field(), deg);
  std::vector<Polynomial> g;
  for (const auto& p : gens) g.push_back(p.in_ring(base).restricted_to(S));
  return BigradedPresentation{RingDescriptor{S, {}}, IdealHandle(S, g), "custom", base->nvars(), 0,
                              g.empty() || detail::equigenerated(g)};
}

/// Rees and symmetric ideals coincide.
inline bool is_linear_type(const std::vector<Polynomial>& gens) {
  auto R = rees_ideal(gens);
  auto Sy = sym_ideal(gens);
  return ideal_subset(R.J, Sy.J);
}

/// Image of f ∈ K[x,y] under y_j ↦ t·a_j, in K[x,t].
inline Polynomial substitute_rees(const Polynomial& f, const BigradedPresentation& P,
                                  const std::vector<Polynomial>& gens) {
  RingPtr base = gens.front().ring();
  RingPtr xt = base->extended({base->fresh_aux_name()}, {Bidegree{0, 0}});
  Polynomial t = Polynomial::variable(xt, base->nvars());
  std::vector<Polynomial> image;
  for (const auto& a : gens) image.push_back(t * a.in_ring(base->with_order(MonomialOrder::grevlex())).in_ring(xt));
  Polynomial out(xt);
  for (const auto& term : f.terms()) {
    Monomial mx(xt->nvars());
    for (std::size_t i = 0; i < P.nx; ++i) mx.set(i, term.mono[i]);
    Polynomial acc = Polynomial::term(xt, term.coef, mx);
    for (std::size_t j = 0; j < P.ny; ++j)
      if (term.mono[P.nx + j]) acc *= image[j].pow(term.mono[P.nx + j]);
    out += acc;
  }
  return out;
}

}  // namespace rees

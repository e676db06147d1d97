#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rees/field.hpp"
#include "rees/monomial.hpp"
#include "rees/order.hpp"

namespace rees {

/// Pair of non-negative integers; additive under multiplication.
struct Bidegree {
  int x = 0;
  int y = 0;

  friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.x + b.x, a.y + b.y}; }
  friend Bidegree operator-(Bidegree a, Bidegree b) { return {a.x - b.x, a.y - b.y}; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;

  int total() const { return x + y; }
  std::string to_string() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

/// Polynomial ring K[vars] together with its bigrading and term order.
/// Immutable; shared through RingPtr.
class Ring {
 public:
  Ring(std::vector<std::string> vars, Field field, std::vector<Bidegree> bidegrees,
       MonomialOrder order = MonomialOrder::grevlex())
      : vars_(std::move(vars)), field_(field), bidegrees_(std::move(bidegrees)), order_(std::move(order)) {
    if (vars_.size() > kMaxVars)
      throw std::length_error("at most " + std::to_string(kMaxVars) + " variables are supported");
    if (bidegrees_.empty()) bidegrees_.assign(vars_.size(), Bidegree{1, 0});
    if (bidegrees_.size() != vars_.size()) throw std::invalid_argument("one bidegree per variable required");
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (std::size_t j = i + 1; j < vars_.size(); ++j)
        if (vars_[i] == vars_[j]) throw std::invalid_argument("duplicate variable '" + vars_[i] + "'");
  }

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::string& variable(std::size_t i) const { return vars_.at(i); }
  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  Bidegree bidegree(std::size_t i) const { return bidegrees_.at(i); }
  const std::vector<Bidegree>& bidegrees() const { return bidegrees_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    return std::nullopt;
  }

  Bidegree bidegree(const Monomial& m) const {
    Bidegree d;
    for (std::size_t i = 0; i < m.size(); ++i) {
      d.x += m[i] * bidegrees_[i].x;
      d.y += m[i] * bidegrees_[i].y;
    }
    return d;
  }

  /// Same variables, field and grading; the term order may differ.
  bool compatible(const Ring& o) const {
    return vars_ == o.vars_ && field_ == o.field_ && bidegrees_ == o.bidegrees_;
  }

  bool same(const Ring& o) const { return compatible(o) && order_ == o.order_; }

  std::shared_ptr<const Ring> with_order(MonomialOrder order) const {
    return std::make_shared<const Ring>(vars_, field_, bidegrees_, std::move(order));
  }

  std::shared_ptr<const Ring> with_field(Field f) const {
    return std::make_shared<const Ring>(vars_, f, bidegrees_, order_);
  }

  /// Appends variables after the existing ones. The term order is kept
  /// (its mask, if any, is padded with `false`).
  std::shared_ptr<const Ring> extended(const std::vector<std::string>& names,
                                       const std::vector<Bidegree>& degs) const {
    auto vars = vars_;
    auto bideg = bidegrees_;
    vars.insert(vars.end(), names.begin(), names.end());
    bideg.insert(bideg.end(), degs.begin(), degs.end());
    return std::make_shared<const Ring>(std::move(vars), field_, std::move(bideg), MonomialOrder::grevlex());
  }

  /// A name of the form `#t<k>` not used in this ring; the parser never
  /// produces `#`, so these cannot clash with user variables.
  std::string fresh_aux_name() const {
    for (int k = 0;; ++k) {
      std::string n = "#t" + std::to_string(k);
      if (!index_of(n)) return n;
    }
  }

  std::string to_string() const {
    std::string s = field_.to_string() + "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
    return s + "]";
  }

 private:
  std::vector<std::string> vars_;
  Field field_;
  std::vector<Bidegree> bidegrees_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, Field field = Field::rationals(),
                         std::vector<Bidegree> bidegrees = {}, MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const Ring>(std::move(vars), field, std::move(bidegrees), std::move(order));
}

}  // namespace rees

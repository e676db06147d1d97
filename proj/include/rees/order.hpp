#pragma once

#include <string>
#include <vector>

#include "rees/monomial.hpp"

namespace rees {

/// Term orders. Every variant is a multiplicative total well-order.
///
///  - grevlex: degree, then the smaller exponent in the last differing
///    variable wins.
///  - lex: the larger exponent in the first differing variable wins.
///  - block: grevlex on the tagged variables first, then the inner order
///    (grevlex or lex) on the rest. Eliminates the tagged variables.
///  - y_revlex: grevlex on the tagged (y) variables with the first declared
///    y smallest (y_1 < ... < y_n), ties broken by grevlex on the rest.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block, y_revlex };

  MonomialOrder() = default;

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex); }

  static MonomialOrder block(std::vector<bool> eliminated, Kind inner = Kind::grevlex) {
    MonomialOrder o(Kind::block);
    o.mask_ = std::move(eliminated);
    o.inner_ = inner;
    return o;
  }

  static MonomialOrder y_revlex(std::vector<bool> y_vars) {
    MonomialOrder o(Kind::y_revlex);
    o.mask_ = std::move(y_vars);
    return o;
  }

  /// Parses `grevlex` or `lex`; the masked kinds are built programmatically.
  static MonomialOrder from_tag(const std::string& tag) {
    if (tag == "grevlex") return grevlex();
    if (tag == "lex") return lex();
    throw std::invalid_argument("unknown monomial order '" + tag + "' (expected grevlex or lex)");
  }

  Kind kind() const { return kind_; }
  const std::vector<bool>& mask() const { return mask_; }

  bool in_block(std::size_t var) const { return var < mask_.size() && mask_[var]; }

  std::string tag() const {
    switch (kind_) {
      case Kind::grevlex: return "grevlex";
      case Kind::lex: return "lex";
      case Kind::block: return "block(" + mask_string() + "," + (inner_ == Kind::lex ? "lex" : "grevlex") + ")";
      case Kind::y_revlex: return "y-dominant-revlex(" + mask_string() + ")";
    }
    return "?";
  }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::grevlex: return grevlex_cmp(a, b, nullptr, false);
      case Kind::lex: return lex_cmp(a, b, nullptr, false);
      case Kind::block: {
        if (int c = grevlex_cmp(a, b, &mask_, true)) return c;
        return inner_ == Kind::lex ? lex_cmp(a, b, &mask_, false) : grevlex_cmp(a, b, &mask_, false);
      }
      case Kind::y_revlex: {
        if (int c = y_cmp(a, b)) return c;
        return grevlex_cmp(a, b, &mask_, false);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.inner_ == b.inner_ && a.mask_ == b.mask_;
  }

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  std::string mask_string() const {
    std::string s;
    for (bool b : mask_) s += b ? '1' : '0';
    return s;
  }

  static bool selected(const std::vector<bool>* mask, bool want, std::size_t i) {
    if (!mask) return true;
    bool in = i < mask->size() && (*mask)[i];
    return in == want;
  }

  static int grevlex_cmp(const Monomial& a, const Monomial& b, const std::vector<bool>* mask, bool want) {
    long da = 0, db = 0;
    if (!mask) {
      da = a.degree();
      db = b.degree();
    } else {
      for (std::size_t i = 0; i < a.size(); ++i)
        if (selected(mask, want, i)) {
          da += a[i];
          db += b[i];
        }
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (!selected(mask, want, i)) continue;
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }

  static int lex_cmp(const Monomial& a, const Monomial& b, const std::vector<bool>* mask, bool want) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!selected(mask, want, i)) continue;
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  // y_1 is the smallest y variable, so the reverse scan starts at y_1.
  int y_cmp(const Monomial& a, const Monomial& b) const {
    long da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (in_block(i)) {
        da += a[i];
        db += b[i];
      }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!in_block(i)) continue;
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }

  Kind kind_ = Kind::grevlex;
  Kind inner_ = Kind::grevlex;
  std::vector<bool> mask_;
};

}  // namespace rees

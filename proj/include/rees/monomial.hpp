#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace rees {

/// Upper bound on ring variables, auxiliary elimination variables included.
inline constexpr std::size_t kMaxVars = 40;

/// Exponent vector with one 16-bit slot per ring variable. Unused slots stay
/// zero so equality and hashing can look at the whole buffer.
class Monomial {
 public:
  using Exp = std::uint16_t;

  Monomial() = default;

  explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint16_t>(nvars)) {
    if (nvars > kMaxVars)
      throw std::length_error("ring has " + std::to_string(nvars) + " variables; at most " +
                              std::to_string(kMaxVars) + " are supported");
  }

  Monomial(std::size_t nvars, std::span<const int> exps) : Monomial(nvars) {
    if (exps.size() != nvars) throw std::invalid_argument("exponent vector length mismatch");
    for (std::size_t i = 0; i < nvars; ++i) set(i, exps[i]);
  }

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1) {
    Monomial m(nvars);
    m.set(index, power);
    return m;
  }

  std::size_t size() const { return n_; }
  Exp operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t degree() const { return deg_; }
  std::uint64_t support_mask() const { return mask_; }
  bool is_one() const { return deg_ == 0; }

  void set(std::size_t i, int value) {
    if (value < 0 || value > std::numeric_limits<Exp>::max())
      throw std::overflow_error("exponent " + std::to_string(value) + " out of range");
    deg_ = deg_ - e_[i] + static_cast<std::uint32_t>(value);
    e_[i] = static_cast<Exp>(value);
    refresh_mask(i);
  }

  /// Product with overflow checking; exponents never wrap.
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      std::uint32_t s = std::uint32_t{a.e_[i]} + b.e_[i];
      if (s > std::numeric_limits<Exp>::max()) throw std::overflow_error("exponent overflow in monomial product");
      r.e_[i] = static_cast<Exp>(s);
    }
    r.deg_ = a.deg_ + b.deg_;
    r.mask_ = a.mask_ | b.mask_;
    return r;
  }

  bool divides(const Monomial& m) const {
    if ((mask_ & ~m.mask_) != 0 || deg_ > m.deg_) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  /// m / d, requires d | m.
  friend Monomial operator/(const Monomial& m, const Monomial& d) {
    Monomial r(m.n_);
    for (std::size_t i = 0; i < m.n_; ++i) {
      if (d.e_[i] > m.e_[i]) throw std::domain_error("monomial division is not exact");
      r.e_[i] = static_cast<Exp>(m.e_[i] - d.e_[i]);
      if (r.e_[i]) r.mask_ |= bit(i);
    }
    r.deg_ = m.deg_ - d.deg_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    r.recompute();
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    r.recompute();
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.e_[i] && b.e_[i]) return false;
    return true;
  }

  /// Copy into a ring with `nvars` >= size() variables; new slots are zero.
  Monomial extended(std::size_t nvars) const {
    Monomial r(nvars);
    std::copy_n(e_.begin(), n_, r.e_.begin());
    r.deg_ = deg_;
    r.mask_ = mask_;
    return r;
  }

  /// Drop trailing slots, which must be zero.
  Monomial truncated(std::size_t nvars) const {
    Monomial r(nvars);
    for (std::size_t i = nvars; i < n_; ++i)
      if (e_[i]) throw std::domain_error("monomial involves an eliminated variable");
    std::copy_n(e_.begin(), nvars, r.e_.begin());
    r.recompute();
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.deg_ == b.deg_ && std::memcmp(a.e_.data(), b.e_.data(), sizeof(Exp) * a.n_) == 0;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < n_; ++i) h = (h ^ e_[i]) * 1099511628211ull;
    return h;
  }

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i % 64); }

  void refresh_mask(std::size_t i) {
    // bit i%64 may be shared with another slot when more than 64 variables exist
    if (e_[i]) {
      mask_ |= bit(i);
    } else {
      mask_ &= ~bit(i);
      for (std::size_t j = i % 64; j < n_; j += 64)
        if (e_[j]) mask_ |= bit(j);
    }
  }

  void recompute() {
    deg_ = 0;
    mask_ = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      deg_ += e_[i];
      if (e_[i]) mask_ |= bit(i);
    }
  }

  std::array<Exp, kMaxVars> e_{};
  std::uint16_t n_ = 0;
  std::uint32_t deg_ = 0;
  std::uint64_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace rees

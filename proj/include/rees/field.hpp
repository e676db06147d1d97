#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace rees {

/// Coefficient field: the rationals, or GF(p) for a prime p < 2^31.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }

  static Field prime(std::uint32_t p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p))
      throw std::invalid_argument("GF(" + std::to_string(p) + "): modulus is not a prime below 2^31");
    Field f;
    f.p_ = p;
    return f;
  }

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  std::string to_string() const { return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

  friend bool operator==(const Field&, const Field&) = default;

  static bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_ = 0;
};

/// An element of a Field. Rationals are kept canonical by GMP (gcd 1,
/// positive denominator); residues live in [0, p).
class FieldElem {
 public:
  FieldElem() = default;

  static FieldElem from_int(long v, const Field& f) { return from_rational(mpq_class(v), f); }

  static FieldElem from_rational(mpq_class q, const Field& f) {
    FieldElem e;
    e.p_ = f.characteristic();
    if (e.p_ == 0) {
      q.canonicalize();
      e.q_ = std::move(q);
    } else {
      mpz_class den = q.get_den() % e.p_;
      if (den == 0)
        throw std::domain_error("characteristic " + std::to_string(e.p_) + " divides a denominator");
      mpz_class num = q.get_num() % e.p_;
      if (num < 0) num += e.p_;
      e.r_ = mul_mod(static_cast<std::uint32_t>(num.get_ui()),
                     inv_mod(static_cast<std::uint32_t>(den.get_ui()), e.p_), e.p_);
    }
    return e;
  }

  static FieldElem zero(const Field& f) { return from_int(0, f); }
  static FieldElem one(const Field& f) { return from_int(1, f); }

  Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }
  std::uint32_t characteristic() const { return p_; }

  bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }
  bool is_minus_one() const { return p_ == 0 ? q_ == -1 : r_ == p_ - 1; }
  /// Sign used for printing: residues are always non-negative.
  int sign() const { return p_ == 0 ? sgn(q_) : (r_ == 0 ? 0 : 1); }

  const mpq_class& rational() const { return q_; }
  std::uint32_t residue() const { return r_; }

  FieldElem operator-() const {
    FieldElem e = *this;
    if (p_ == 0)
      e.q_ = -q_;
    else if (r_ != 0)
      e.r_ = p_ - r_;
    return e;
  }

  FieldElem& operator+=(const FieldElem& o) {
    check(o);
    if (p_ == 0)
      q_ += o.q_;
    else
      r_ = static_cast<std::uint32_t>((std::uint64_t{r_} + o.r_) % p_);
    return *this;
  }
  FieldElem& operator-=(const FieldElem& o) { return *this += -o; }
  FieldElem& operator*=(const FieldElem& o) {
    check(o);
    if (p_ == 0)
      q_ *= o.q_;
    else
      r_ = mul_mod(r_, o.r_, p_);
    return *this;
  }
  FieldElem& operator/=(const FieldElem& o) { return *this *= o.inverse(); }

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

  FieldElem inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    FieldElem e = *this;
    if (p_ == 0)
      e.q_ = 1 / q_;
    else
      e.r_ = inv_mod(r_, p_);
    return e;
  }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.p_ == b.p_ && (a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_);
  }

  /// `p/q` or an integer; residues print as their representative in [0, p).
  std::string to_string() const { return p_ == 0 ? q_.get_str() : std::to_string(r_); }

 private:
  void check(const FieldElem& o) const {
    if (p_ != o.p_) throw std::invalid_argument("field mismatch in coefficient arithmetic");
  }

  static std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
  }

  static std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::domain_error("element not invertible");
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
  }

  mpq_class q_;
  std::uint32_t r_ = 0;
  std::uint32_t p_ = 0;
};

}  // namespace rees

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "blowup/errors.hpp"

namespace blowup {

/// Ground field of a computation: the rationals, or a prime field F_p.
/// Every Scalar carries its context; mixing contexts is an error, never a coercion.
class FieldContext {
 public:
  static FieldContext rationals() { return FieldContext(0); }
  static FieldContext prime(uint32_t p);

  bool is_rational() const { return p_ == 0; }
  uint32_t modulus() const { return p_; }

  bool operator==(const FieldContext& o) const = default;

  std::string str() const { return is_rational() ? "Q" : "F " + std::to_string(p_); }
  static FieldContext parse(const std::string& s);

 private:
  explicit FieldContext(uint32_t p) : p_(p) {}
  uint32_t p_;  // 0 means rationals
};

/// Exact field element. Rationals are kept normalized (gcd(|num|,den)=1, den>0,
/// which mpq_class canonicalization guarantees); prime-field residues satisfy
/// 0 <= r < p.
class Scalar {
 public:
  Scalar() : ctx_(FieldContext::rationals()) {}

  static Scalar zero(FieldContext c) { return Scalar(c); }
  static Scalar one(FieldContext c);
  static Scalar from_long(long v, FieldContext c);
  static Scalar rational(mpq_class q);
  static Scalar residue(uint64_t r, uint32_t p);

  const FieldContext& context() const { return ctx_; }
  bool is_zero() const { return ctx_.is_rational() ? q_ == 0 : r_ == 0; }
  bool is_one() const { return ctx_.is_rational() ? q_ == 1 : r_ == 1; }

  /// Sign used only for printing (prime-field residues never print signed).
  bool is_negative() const { return ctx_.is_rational() && sgn(q_) < 0; }

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  const mpq_class& rat() const;
  uint32_t res() const;

  std::string str() const;
  static Scalar parse(const std::string& s, FieldContext c);

 private:
  explicit Scalar(FieldContext c) : ctx_(c) {}
  static void check_same(const Scalar& a, const Scalar& b);

  FieldContext ctx_;
  mpq_class q_;
  uint32_t r_ = 0;
};

}  // namespace blowup

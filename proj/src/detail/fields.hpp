#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "blowup/scalar.hpp"

namespace blowup::detail {

// Arithmetic plugs for the templated kernels; keeps prime-field inner loops on
// machine words and rational ones on mpq.

struct QOps {
  using elem = mpq_class;
  static bool is_zero(const elem& a) { return a == 0; }
  static elem zero() { return elem(0); }
  static elem one() { return elem(1); }
  static elem add(const elem& a, const elem& b) { return a + b; }
  static elem sub(const elem& a, const elem& b) { return a - b; }
  static elem mul(const elem& a, const elem& b) { return a * b; }
  static elem neg(const elem& a) { return -a; }
  static elem inv(const elem& a) {
    if (a == 0) throw DivisionByZero();
    return 1 / a;
  }
  static elem from_scalar(const Scalar& s) { return s.rat(); }
  static Scalar to_scalar(const elem& a) { return Scalar::rational(a); }
  FieldContext context() const { return FieldContext::rationals(); }
};

struct ZpOps {
  uint32_t p;
  using elem = uint32_t;
  static bool is_zero(elem a) { return a == 0; }
  static elem zero() { return 0; }
  static elem one() { return 1; }
  elem add(elem a, elem b) const {
    uint64_t r = static_cast<uint64_t>(a) + b;
    if (r >= p) r -= p;
    return static_cast<elem>(r);
  }
  elem sub(elem a, elem b) const { return add(a, neg(b)); }
  elem mul(elem a, elem b) const {
    return static_cast<elem>(static_cast<uint64_t>(a) * b % p);
  }
  elem neg(elem a) const { return a == 0 ? 0 : p - a; }
  elem inv(elem a) const {
    if (a == 0) throw DivisionByZero();
    int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
      int64_t q = r / newr;
      int64_t tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<elem>(t);
  }
  elem from_scalar(const Scalar& s) const { return s.res(); }
  Scalar to_scalar(elem a) const { return Scalar::residue(a, p); }
  FieldContext context() const { return FieldContext::prime(p); }
};

/// Run fn with the arithmetic matching the field context.
template <class Fn>
auto with_field(const FieldContext& c, Fn&& fn) {
  if (c.is_rational()) return fn(QOps{});
  return fn(ZpOps{c.modulus()});
}

}  // namespace blowup::detail

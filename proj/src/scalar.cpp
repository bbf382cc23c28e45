#include "blowup/scalar.hpp"

namespace blowup {

namespace {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint32_t mod_inverse(uint32_t a, uint32_t p) {
  if (a == 0) throw DivisionByZero();
  // extended Euclid on (a, p)
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
  return static_cast<uint32_t>(t);
}

}  // namespace

FieldContext FieldContext::prime(uint32_t p) {
  if (!is_prime_u32(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
  return FieldContext(p);
}

FieldContext FieldContext::parse(const std::string& s) {
  if (s == "Q") return rationals();
  if (s.size() > 2 && s[0] == 'F' && s[1] == ' ')
    return prime(static_cast<uint32_t>(std::stoul(s.substr(2))));
  throw ParseError("bad field spec '" + s + "' (expected 'Q' or 'F p')");
}

Scalar Scalar::one(FieldContext c) { return from_long(1, c); }

Scalar Scalar::from_long(long v, FieldContext c) {
  Scalar s(c);
  if (c.is_rational()) {
    s.q_ = v;
  } else {
    int64_t r = v % static_cast<int64_t>(c.modulus());
    if (r < 0) r += c.modulus();
    s.r_ = static_cast<uint32_t>(r);
  }
  return s;
}

Scalar Scalar::rational(mpq_class q) {
  Scalar s(FieldContext::rationals());
  q.canonicalize();
  s.q_ = std::move(q);
  return s;
}

Scalar Scalar::residue(uint64_t r, uint32_t p) {
  FieldContext c = FieldContext::prime(p);
  Scalar s(c);
  s.r_ = static_cast<uint32_t>(r % p);
  return s;
}

void Scalar::check_same(const Scalar& a, const Scalar& b) {
  if (!(a.ctx_ == b.ctx_))
    throw ContextMismatch("field " + a.ctx_.str() + " vs " + b.ctx_.str());
}

Scalar Scalar::operator-() const {
  Scalar s(ctx_);
  if (ctx_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : ctx_.modulus() - r_;
  return s;
}

Scalar Scalar::inverse() const {
  Scalar s(ctx_);
  if (ctx_.is_rational()) {
    if (q_ == 0) throw DivisionByZero();
    s.q_ = 1 / q_;
  } else {
    s.r_ = mod_inverse(r_, ctx_.modulus());
  }
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::check_same(a, b);
  Scalar s(a.ctx_);
  if (a.ctx_.is_rational()) {
    s.q_ = a.q_ + b.q_;
  } else {
    uint64_t r = static_cast<uint64_t>(a.r_) + b.r_;
    if (r >= a.ctx_.modulus()) r -= a.ctx_.modulus();
    s.r_ = static_cast<uint32_t>(r);
  }
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::check_same(a, b);
  Scalar s(a.ctx_);
  if (a.ctx_.is_rational())
    s.q_ = a.q_ * b.q_;
  else
    s.r_ = static_cast<uint32_t>(static_cast<uint64_t>(a.r_) * b.r_ % a.ctx_.modulus());
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  Scalar::check_same(a, b);
  return a * b.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(ctx_ == o.ctx_)) return false;
  return ctx_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

const mpq_class& Scalar::rat() const {
  if (!ctx_.is_rational()) throw ContextMismatch("rat() on prime-field scalar");
  return q_;
}

uint32_t Scalar::res() const {
  if (ctx_.is_rational()) throw ContextMismatch("res() on rational scalar");
  return r_;
}

std::string Scalar::str() const {
  return ctx_.is_rational() ? q_.get_str() : std::to_string(r_);
}

Scalar Scalar::parse(const std::string& s, FieldContext c) {
  if (s.empty()) throw ParseError("empty scalar");
  if (c.is_rational()) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
    q.canonicalize();
    return rational(q);
  }
  // integers (possibly negative) reduced mod p; fractions a/b mean a * b^{-1}
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Scalar num = parse(s.substr(0, slash), c);
    Scalar den = parse(s.substr(slash + 1), c);
    return num / den;
  }
  try {
    long v = std::stol(s);
    return from_long(v, c);
  } catch (const std::exception&) {
    throw ParseError("bad residue '" + s + "'");
  }
}

}  // namespace blowup

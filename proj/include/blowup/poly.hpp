#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "blowup/ring.hpp"

namespace blowup {

/// Sparse multivariate polynomial. Terms are kept sorted descending under the
/// canonical (whole-ring grevlex) order with no zero coefficients, so equal
/// polynomials compare equal term-by-term and printing is reproducible.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial term(RingPtr ring, const Monomial& m, const Scalar& c);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  int nterms() const { return static_cast<int>(terms_.size()); }
  const std::vector<std::pair<Monomial, Scalar>>& terms() const { return terms_; }

  /// Leading data under the canonical order.
  const Monomial& lead_monomial() const { return terms_.front().first; }
  const Scalar& lead_coeff() const { return terms_.front().second; }

  int degree() const;  // total degree, -1 for zero
  /// Bidegree (w-degree, x/y-degree); throws NotBihomogeneous with two witness
  /// terms when the terms disagree, and Error on zero input.
  std::pair<int, int> bidegree() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Ring map: replace every variable by images[i] (a polynomial over the
  /// target ring); used for graph substitutions and minor checks.
  Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;

  /// Map into a ring with identical variable layout prefix (adds variables).
  Polynomial lift(const RingPtr& bigger) const;
  /// Drop trailing variables that do not occur (e.g. after elimination).
  Polynomial project(const RingPtr& smaller) const;

  Scalar evaluate(const std::vector<Scalar>& point) const;

  std::string str() const;
  static Polynomial parse(const RingPtr& ring, const std::string& text);

  /// Build from unsorted terms, combining duplicates and dropping zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<std::pair<Monomial, Scalar>> ts);

  friend std::vector<Monomial> degree_monomials(const RingPtr& ring, int t);

 private:
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<std::pair<Monomial, Scalar>> terms_;
};

/// Degree-t monomials in the canonical descending order; fixes column orders
/// of evaluation matrices and degree-slice bases.
std::vector<Monomial> degree_monomials(const RingPtr& ring, int t);

}  // namespace blowup

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "blowup/poly.hpp"

namespace blowup {

/// Buchberger runs abort with BudgetExceeded once either limit is hit; an
/// exceeded budget is a distinct error, never a wrong answer.
struct GroebnerBudget {
  uint64_t max_steps = UINT64_MAX;  // S-pair reductions
  int64_t time_limit_ms = -1;       // wall clock; -1 disables
};

/// Finite generator list plus a cache of reduced Groebner bases keyed by
/// monomial order. Value semantics; copies share the cache.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero_ideal() const;

  /// Reduced Groebner basis: monic, auto-reduced, sorted ascending by leading
  /// monomial. Cached per order.
  const std::vector<Polynomial>& groebner_basis(const MonomialOrder& order,
                                                const GroebnerBudget& budget = {}) const;

  /// Membership via normal form against the cached basis.
  bool contains(const Polynomial& f, const MonomialOrder& order,
                const GroebnerBudget& budget = {}) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::shared_ptr<std::map<std::string, std::vector<Polynomial>>> cache_;
};

/// Reduced Groebner basis of the generator list (standalone entry point).
std::vector<Polynomial> buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                   const MonomialOrder& order, const GroebnerBudget& budget = {});

/// Remainder of f on division by basis: no term of the result is divisible by
/// any leading term of the basis, and f - result lies in the span.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

/// S-polynomial (both inputs made monic), exposed for the basis-criterion checks.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Leading monomial of f under the given order.
Monomial lead_monomial(const Polynomial& f, const MonomialOrder& order);

/// Intersection with the subring of the variables before index `lo`: the
/// eliminated block [lo, nvars) must be a trailing range (t lives last).
Ideal eliminate_suffix(const Ideal& ideal, int lo, const GroebnerBudget& budget = {});

/// Kernel of the ring map sending the i-th non-w variable of `ambient` to
/// t * targets[i]; all targets must be nonzero w-forms of one common degree.
/// Computed as <x_i - t*F_i> intersected with the ambient ring.
Ideal kernel_of_map(const std::vector<Polynomial>& targets, const RingPtr& ambient,
                    const GroebnerBudget& budget = {});

/// True iff the reduced Groebner bases under `order` coincide.
bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& order,
                 const GroebnerBudget& budget = {});

}  // namespace blowup

#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "blowup/groebner.hpp"

namespace blowup {

/// Hilbert series of S/I as numerator over (1-z)^nvars, with the reduced form
/// (all 1-z factors cancelled) giving dimension, codimension and multiplicity.
struct HilbertSeries {
  int nvars = 0;
  std::vector<mpz_class> num;      // numerator coefficients
  std::vector<mpz_class> reduced;  // num / (1-z)^codim, nonzero at z=1
  int dim = 0, codim = 0;

  long hf(int t) const;        // Hilbert function of the quotient
  mpz_class multiplicity() const;
  bool operator==(const HilbertSeries& o) const {
    return nvars == o.nvars && num == o.num;
  }
};

HilbertSeries hilbert_series(const Ideal& I, const GroebnerBudget& budget = {});

/// Numerator of the Hilbert series of S/(monomial ideal).
std::vector<mpz_class> monomial_ideal_numerator(std::vector<Monomial> gens, int nvars);

/// Graded Betti numbers of the quotient ring S/I, built degree by degree with
/// exact linear algebra. The table is certified against the Hilbert series
/// (alternating-sum identity); failure raises DegreeBoundExceeded.
struct BettiTable {
  std::map<std::pair<int, int>, long> beta;  // (homological i, internal j) -> rank

  long at(int i, int j) const;
  int pd() const;
  long total(int i) const;
  int max_internal_degree() const;
  std::string grid() const;
  bool operator==(const BettiTable& o) const { return beta == o.beta; }
};

struct ResolveOptions {
  int degree_cap = -1;  // default 2*(max generator degree) + nvars
  int window = 3;       // degrees scanned past the last syzygy found
  GroebnerBudget budget;
};

BettiTable betti_table(const Ideal& I, const ResolveOptions& opts = {});

/// Minimal homogeneous generators, degree by degree: in each degree a basis
/// complement of (lower generators)*(linear forms) inside the degree slice.
std::vector<std::pair<int, Polynomial>> minimal_generators(const Ideal& I,
                                                           int degree_bound = -1,
                                                           const GroebnerBudget& budget = {});

/// Minimal first syzygies among the given homogeneous generators: rows r with
/// sum_c r[c] * gens[c] = 0.
std::vector<std::vector<Polynomial>> first_syzygies(const RingPtr& ring,
                                                    const std::vector<Polynomial>& gens,
                                                    const ResolveOptions& opts = {});

/// Hilbert-Burch presentation: rows are the minimal first syzygies of the
/// minimal generators (columns), sorted by row degree.
struct PresentationMatrix {
  int rows = 0, cols = 0;
  std::vector<std::vector<Polynomial>> entry;  // [row][col]
  std::vector<int> row_degrees;                // syzygy degrees
  std::vector<int> col_degrees;                // generator degrees
  std::vector<Polynomial> gens;                // the column generators
};

/// Requires the rho x (rho+1) shape of a codimension-2 perfect ideal; throws
/// Error otherwise (use first_syzygies for arbitrary inputs).
PresentationMatrix presentation_matrix(const Ideal& I, const ResolveOptions& opts = {});

/// Signed maximal minor: (-1)^(c) * det(L with 0-based column c deleted).
Polynomial signed_maximal_minor(const std::vector<std::vector<Polynomial>>& entry, int col,
                                const RingPtr& ring);
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, const RingPtr& ring);

/// True iff the signed maximal minors of L generate exactly I.
bool hilbert_burch_check(const Ideal& I, const PresentationMatrix& L,
                         const GroebnerBudget& budget = {});

/// Quotient by a linear form: substitutes away the latest-indexed variable with
/// a nonzero coefficient and returns the image ideal in the smaller ring.
/// Polynomials in `carry` are pushed through the same substitution.
Ideal quotient_by_linear(const Ideal& I, const Polynomial& linear_form,
                         std::vector<Polynomial>* carry = nullptr);

enum class PerfectStrategy { Auto, Resolution, LinearSection };

struct PerfectReport {
  bool perfect = false;
  int dim = 0, codim = 0;
  int pd = -1;           // filled by the resolution route
  std::string route;     // "resolution" or "linear-section(tries=..)"
};

/// Perfection (Cohen-Macaulayness): projective dimension equals codimension.
/// The resolution route reads pd off the Betti table; the linear-section route
/// certifies depth = dim by cutting with dim-many linear forms and comparing
/// colength with multiplicity (exact both ways for a system of parameters).
PerfectReport is_perfect(const Ideal& I, PerfectStrategy strategy = PerfectStrategy::Auto,
                         uint64_t seed = 1, const ResolveOptions& opts = {});

}  // namespace blowup

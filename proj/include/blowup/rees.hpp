#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "blowup/points.hpp"
#include "blowup/resolution.hpp"

namespace blowup {

enum class CaseKind { Binomial, MixedColumns /* d < 2k */, MixedRows /* d >= 2k, k >= 1 */ };

std::string case_name(CaseKind k);

enum class GammaSplitting { Symmetric, Upper };

/// Exact coefficient tensors of the presentation matrix in its block layout:
/// linear entries L = sum_i lambda_i w_i and quadric entries
/// Q = sum_{i,h} gamma_{ih} w_i w_h (gamma symmetric under the default split).
struct CoefficientTensors {
  // [linear row][F column][i]; rows pairing linear forms with the F generators
  std::vector<std::vector<std::array<Scalar, 3>>> lin_rows;
  // [u][G column][i]; linear entries pairing with the G generators (d < 2k)
  std::vector<std::vector<std::array<Scalar, 3>>> lam_y;
  // [u][F column][i][h]; quadric coefficient tensors
  std::vector<std::vector<std::array<std::array<Scalar, 3>, 3>>> gam;
};

/// One verified instance of the degree-(d+1) construction: the presentation
/// matrix in its block layout, the generators as its signed maximal minors,
/// the coefficient tensors, and the ambient Rees ring k[w, x_{ij}(, y_l)].
struct CaseData {
  int s = 0, d = 0, k = 0;
  CaseKind kind = CaseKind::Binomial;
  PresentationMatrix L;  // block layout: G columns first when d < 2k; quadric rows first when d >= 2k
  std::vector<Polynomial> F;  // d-k+1 (or d+1) forms of degree d, signed minors of L
  std::vector<Polynomial> G;  // 2k-d forms of degree d+1 (MixedColumns only)
  CoefficientTensors tensors;
  RingPtr wring;
  RingPtr rees;   // no elimination variable
  int ncols = 0;  // number of F generators
};

/// Builds and validates the case data; throws InstanceRejected when the point
/// set fails the genericity expectations (Hilbert function, collinearity,
/// generator counts, presentation shape).
CaseData build_case(const PointSet& X, GammaSplitting split = GammaSplitting::Symmetric,
                    const GroebnerBudget& budget = {});

/// Tensor extraction alone (validates reconstruction; Symmetric requires odd
/// characteristic; entries must be homogeneous of the labelled degree 1 or 2).
CoefficientTensors coefficient_tensors(const PresentationMatrix& L, const RingPtr& wring,
                                       GammaSplitting split = GammaSplitting::Symmetric);

struct SymbolMatrix {
  int rows = 0, cols = 0;
  std::vector<std::vector<Polynomial>> e;
};

/// 3 x (d+2) matrix [w | x] of the binomial case.
SymbolMatrix build_M(const CaseData& cd);
/// 3 x (ncols+1) matrix [w | x] of the arbitrary case.
SymbolMatrix build_X(const CaseData& cd);
/// k x 3 matrix of bidegree-(0,1) forms.
SymbolMatrix build_B(const CaseData& cd);

std::vector<Polynomial> two_by_two_minors(const SymbolMatrix& m);
std::vector<Polynomial> three_by_three_minors(const SymbolMatrix& m);

/// The linear dependence relations among the w_i F_j (d of them in the
/// binomial case, d-2k when d >= 2k, none when d < 2k); each has bidegree (0,1).
std::vector<Polynomial> linear_relations(const CaseData& cd);

struct GeneratorSet {
  std::vector<Polynomial> all;
  std::map<std::string, int> provenance;  // minor-of-M, linear-relation, minor-of-B, minor-of-X, entry-of-BX
};

/// Entries of B.X, 2x2 minors of X and 3x3 minors of B (the ideal J).
GeneratorSet build_J(const CaseData& cd);

/// The predicted defining equations of the Rees algebra at t = d+1: minors of
/// M plus relations (binomial), J (d < 2k), or J plus relations (d >= 2k).
GeneratorSet determinantal_generators(const CaseData& cd);

/// Substitution x_{ij} -> w_i F_j, y_l -> G_l into the w-ring; every predicted
/// generator must map to zero.
Polynomial graph_substitution(const Polynomial& p, const CaseData& cd);

/// The paper-coordinate targets (w_i F_j column-major, then G_l).
std::vector<Polynomial> rees_targets(const CaseData& cd);

/// Rees ideal of the span of I_t via the elimination kernel. At t = d+1 on an
/// accepted instance the paper coordinates are used; otherwise the graded-piece
/// basis coordinates.
Ideal rees_via_elimination(const PointSet& X, int t, const GroebnerBudget& budget = {});
Ideal rees_via_elimination(const CaseData& cd, const GroebnerBudget& budget = {});

/// Minimal bihomogeneous generators (bidegree and count) of a bigraded ideal,
/// extracted from its reduced Groebner basis by degree-filtered reduction.
struct BigradedGenerators {
  std::vector<std::pair<std::pair<int, int>, Polynomial>> gens;
  std::map<std::pair<int, int>, int> counts;
  int max_total_degree = 0;
};
BigradedGenerators bigraded_minimal_generators(const Ideal& K, const GroebnerBudget& budget = {});

/// Checks that the x-linear slice of the Rees ideal matches the syzygies of
/// the targets in every w-degree up to the bound (symmetric-algebra degree-1
/// agreement).
bool syzygy_slice_agreement(const std::vector<Polynomial>& targets, const Ideal& K, int max_wdeg,
                            const GroebnerBudget& budget = {});

/// Betti comparison of the binomial case: the Rees ideal with its d linear
/// relations split off against the 2x2 minors of a generic 3x(d+2) matrix of
/// indeterminates, both resolved by the same routine.
struct BettiComparison {
  BettiTable rees_after_split;
  BettiTable generic_minors;
  bool match = false;
  int pd_full = -1;  // pd of the full Rees quotient: pd after split + d
};
BettiComparison binomial_betti_comparison(const CaseData& cd, const Ideal& K,
                                          const ResolveOptions& opts = {});

/// d0 = max(4, s+1): from this degree on the Rees algebra is expected to be
/// Cohen-Macaulay with quadratic defining equations.
int asymptotic_threshold(int s);

}  // namespace blowup

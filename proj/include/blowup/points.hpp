#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "blowup/groebner.hpp"
#include "blowup/matrix.hpp"
#include "blowup/poly.hpp"

namespace blowup {

/// Distinct points of the projective plane with exact coordinates, each
/// normalized so its first nonzero coordinate is 1.
class PointSet {
 public:
  struct Constraints {
    bool generic_hf = true;
    bool no_collinear = true;  // no d+1 points on a line, d from the (d,k) split of s
  };

  static PointSet from_coords(FieldContext field,
                              const std::vector<std::array<Scalar, 3>>& coords,
                              std::string provenance = "explicit");
  /// Built-in witness instances: coordinate-triangle, frame-4, collinear-4.
  static PointSet builtin(const std::string& name, FieldContext field);
  /// Deterministic for a fixed seed; retries until the constraints hold.
  static PointSet random(int s, uint64_t seed, uint32_t p, const Constraints& c,
                         int retry_budget = 200);

  int size() const { return static_cast<int>(pts_.size()); }
  const std::array<Scalar, 3>& point(int i) const { return pts_[i]; }
  const FieldContext& field() const { return field_; }
  const std::string& provenance() const { return provenance_; }
  uint64_t seed() const { return seed_; }
  int retries() const { return retries_; }

  std::string to_file() const;
  static PointSet from_file(const std::string& text);

 private:
  PointSet(FieldContext f) : field_(f) {}
  FieldContext field_;
  std::vector<std::array<Scalar, 3>> pts_;
  std::string provenance_;
  uint64_t seed_ = 0;
  int retries_ = 0;
};

/// s x C(t+2,2) matrix of the degree-t monomials evaluated at the points.
ExactMatrix evaluation_matrix(const PointSet& X, int t);

struct HilbertData {
  std::vector<long> hf;  // HF(0..), long enough to include sigma
  int alpha;             // least t with I_t != 0
  int sigma;             // least t with first difference zero
};
HilbertData hilbert_data(const PointSet& X);

struct GradedPiece {
  int t;
  std::vector<Polynomial> basis;  // in the w-ring, linearly independent
};
GradedPiece graded_piece(const PointSet& X, int t);

struct GenericityReport {
  bool generic_hf;    // HF(t) = min(C(t+2,2), s) for all t <= s
  int max_collinear;  // size of the largest collinear subset
  int d, k;           // s = C(d+1,2) + k with 0 <= k <= d
};
GenericityReport genericity_report(const PointSet& X);

/// (d, k) with s = C(d+1,2)+k, 0 <= k <= d.
std::pair<int, int> s_decomposition(int s);

/// Saturated ideal of the point set, generated by the graded pieces up to the
/// given degree (default sigma+1, enough for every reduced point set).
Ideal ideal_of_points(const PointSet& X, int up_to = -1);

long binom(long n, long k);

}  // namespace blowup

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "blowup/scalar.hpp"

namespace blowup {

/// Sparse exact matrix over one field context. Stored zeros are never kept.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols, FieldContext field)
      : rows_(rows), cols_(cols), field_(field) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldContext& field() const { return field_; }

  void set(int r, int c, const Scalar& v);
  Scalar at(int r, int c) const;
  const std::map<std::pair<int, int>, Scalar>& entries() const { return e_; }

  struct Rref {
    int rank = 0;
    std::vector<int> pivot_cols;
    std::vector<std::vector<Scalar>> rref_rows;   // dense, one per pivot
    std::vector<std::vector<Scalar>> nullspace;   // dense right-nullspace basis
  };

  /// Rank, pivot columns, canonical reduced rows and right nullspace basis.
  Rref rref(bool want_nullspace = true) const;

  /// Matrix * vector, for invariant checks.
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

 private:
  int rows_, cols_;
  FieldContext field_;
  std::map<std::pair<int, int>, Scalar> e_;
};

}  // namespace blowup

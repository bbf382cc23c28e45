#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "detail/fields.hpp"

namespace blowup::detail {

/// Sparse vector: (index, coefficient) pairs sorted by index, no zeros.
template <class F>
struct SpVec {
  std::vector<std::pair<int, typename F::elem>> t;
  bool empty() const { return t.empty(); }
  int lead() const { return t.front().first; }
  size_t nnz() const { return t.size(); }
};

/// r -= c * s  (sparse axpy, merge style)
template <class F>
SpVec<F> axpy(const F& f, const SpVec<F>& r, const typename F::elem& c, const SpVec<F>& s) {
  SpVec<F> out;
  out.t.reserve(r.t.size() + s.t.size());
  size_t i = 0, j = 0;
  while (i < r.t.size() && j < s.t.size()) {
    if (r.t[i].first < s.t[j].first) {
      out.t.push_back(r.t[i++]);
    } else if (r.t[i].first > s.t[j].first) {
      out.t.emplace_back(s.t[j].first, f.neg(f.mul(c, s.t[j].second)));
      ++j;
    } else {
      auto v = f.sub(r.t[i].second, f.mul(c, s.t[j].second));
      if (!F::is_zero(v)) out.t.emplace_back(r.t[i].first, v);
      ++i, ++j;
    }
  }
  for (; i < r.t.size(); ++i) out.t.push_back(r.t[i]);
  for (; j < s.t.size(); ++j) out.t.emplace_back(s.t[j].first, f.neg(f.mul(c, s.t[j].second)));
  return out;
}

template <class F>
SpVec<F> scale(const F& f, const SpVec<F>& v, const typename F::elem& c) {
  SpVec<F> out;
  out.t.reserve(v.t.size());
  for (const auto& [i, x] : v.t) out.t.emplace_back(i, f.mul(x, c));
  return out;
}

/// Incremental row echelon structure; rows are kept with pivot coefficient 1 and
/// reduced against earlier pivots only. Supports rank queries and span tests.
template <class F>
class Echelon {
 public:
  explicit Echelon(const F& f) : f_(f) {}

  /// Residual of v against the current rows (forward reduction).
  SpVec<F> reduce(SpVec<F> v) const {
    while (!v.empty()) {
      auto it = by_pivot_.find(v.lead());
      if (it == by_pivot_.end()) break;
      v = axpy(f_, v, v.t.front().second, rows_[it->second]);
    }
    return v;
  }

  /// Fully reduce v (also below pivots), used for canonical residues.
  SpVec<F> reduce_full(SpVec<F> v) const {
    SpVec<F> out;
    while (!v.empty()) {
      auto it = by_pivot_.find(v.lead());
      if (it == by_pivot_.end()) {
        out.t.push_back(v.t.front());
        v.t.erase(v.t.begin());
      } else {
        v = axpy(f_, v, v.t.front().second, rows_[it->second]);
      }
    }
    return out;
  }

  /// Insert v; returns true (and keeps the reduced row) if it enlarges the span.
  bool insert(SpVec<F> v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    auto c = v.t.front().second;
    if (!(c == F::one())) v = scale(f_, v, f_.inv(c));
    by_pivot_[v.lead()] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  bool contains(SpVec<F> v) const { return reduce(std::move(v)).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SpVec<F>>& rows() const { return rows_; }

 private:
  F f_;
  std::vector<SpVec<F>> rows_;
  std::map<int, int> by_pivot_;
};

template <class F>
struct RrefResultT {
  int rank = 0;
  std::vector<int> pivot_cols;
  std::vector<SpVec<F>> rref_rows;   // one per pivot, fully reduced, pivot coeff 1
  std::vector<SpVec<F>> nullspace;   // canonical basis, one per free column
};

/// Canonical reduced row echelon form of the row list. The output is the unique
/// rref, so internal pivot-row choices (made for sparsity) do not affect it.
template <class F>
RrefResultT<F> sparse_rref(const F& f, std::vector<SpVec<F>> rows, int ncols,
                           bool want_nullspace) {
  RrefResultT<F> out;
  // bucket rows by leading index
  std::vector<std::vector<SpVec<F>>> pending(ncols + 1);
  for (auto& r : rows)
    if (!r.empty()) pending[r.lead()].push_back(std::move(r));
  std::vector<SpVec<F>> piv_rows;
  std::vector<int> piv_cols;
  for (int c = 0; c < ncols; ++c) {
    auto& bucket = pending[c];
    if (bucket.empty()) continue;
    // sparsest candidate as pivot
    size_t best = 0;
    for (size_t k = 1; k < bucket.size(); ++k)
      if (bucket[k].nnz() < bucket[best].nnz()) best = k;
    SpVec<F> piv = std::move(bucket[best]);
    bucket.erase(bucket.begin() + best);
    piv = scale(f, piv, f.inv(piv.t.front().second));
    for (auto& r : bucket) {
      SpVec<F> red = axpy(f, r, r.t.front().second, piv);
      if (!red.empty()) pending[red.lead()].push_back(std::move(red));
    }
    bucket.clear();
    piv_cols.push_back(c);
    piv_rows.push_back(std::move(piv));
  }
  // back-substitute to full rref
  std::map<int, int> row_of_pivot;
  for (size_t r = 0; r < piv_cols.size(); ++r) row_of_pivot[piv_cols[r]] = static_cast<int>(r);
  for (int r = static_cast<int>(piv_rows.size()) - 1; r >= 0; --r) {
    SpVec<F> acc = std::move(piv_rows[r]);
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t k = 0; k < acc.t.size(); ++k) {
        int col = acc.t[k].first;
        if (col == piv_cols[r]) continue;
        auto it = row_of_pivot.find(col);
        if (it == row_of_pivot.end() || it->second <= r) continue;
        acc = axpy(f, acc, acc.t[k].second, piv_rows[it->second]);
        changed = true;
        break;
      }
    }
    piv_rows[r] = std::move(acc);
  }
  out.rank = static_cast<int>(piv_cols.size());
  out.pivot_cols = piv_cols;
  out.rref_rows = std::move(piv_rows);
  if (want_nullspace) {
    std::vector<bool> is_pivot(ncols, false);
    for (int c : piv_cols) is_pivot[c] = true;
    // column index of the rref entries at free columns
    std::map<int, std::vector<std::pair<int, typename F::elem>>> col_entries;
    for (size_t r = 0; r < out.rref_rows.size(); ++r)
      for (const auto& [col, val] : out.rref_rows[r].t)
        if (!is_pivot[col]) col_entries[col].emplace_back(out.pivot_cols[r], f.neg(val));
    for (int c = 0; c < ncols; ++c) {
      if (is_pivot[c]) continue;
      SpVec<F> v;
      auto it = col_entries.find(c);
      if (it != col_entries.end()) v.t = it->second;
      v.t.emplace_back(c, F::one());
      std::sort(v.t.begin(), v.t.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      out.nullspace.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace blowup::detail

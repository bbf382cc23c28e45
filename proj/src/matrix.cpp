#include "blowup/matrix.hpp"

#include "detail/linalg.hpp"

namespace blowup {

void ExactMatrix::set(int r, int c, const Scalar& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw Error("matrix index out of range");
  if (!(v.context() == field_)) throw ContextMismatch("matrix entry field");
  if (v.is_zero())
    e_.erase({r, c});
  else
    e_[{r, c}] = v;
}

Scalar ExactMatrix::at(int r, int c) const {
  auto it = e_.find({r, c});
  return it == e_.end() ? Scalar::zero(field_) : it->second;
}

std::vector<Scalar> ExactMatrix::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("apply: size mismatch");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (const auto& [rc, val] : e_) out[rc.first] = out[rc.first] + val * v[rc.second];
  return out;
}

ExactMatrix::Rref ExactMatrix::rref(bool want_nullspace) const {
  return detail::with_field(field_, [&](auto f) {
    using F = decltype(f);
    std::vector<detail::SpVec<F>> rows(rows_);
    for (const auto& [rc, val] : e_)
      rows[rc.first].t.emplace_back(rc.second, f.from_scalar(val));
    auto rr = detail::sparse_rref(f, std::move(rows), cols_, want_nullspace);
    Rref out;
    out.rank = rr.rank;
    out.pivot_cols = rr.pivot_cols;
    auto densify = [&](const detail::SpVec<F>& v) {
      std::vector<Scalar> d(cols_, Scalar::zero(field_));
      for (const auto& [i, x] : v.t) d[i] = f.to_scalar(x);
      return d;
    };
    for (const auto& r : rr.rref_rows) out.rref_rows.push_back(densify(r));
    for (const auto& v : rr.nullspace) out.nullspace.push_back(densify(v));
    return out;
  });
}

}  // namespace blowup

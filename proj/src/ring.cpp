#include "blowup/ring.hpp"

#include <algorithm>

namespace blowup {

RingContext::RingContext(FieldContext f, std::vector<VarInfo> vars)
    : field_(f), vars_(std::move(vars)) {
  if (static_cast<int>(vars_.size()) > kMaxVars)
    throw Error("too many ring variables (" + std::to_string(vars_.size()) + " > " +
                std::to_string(kMaxVars) + ")");
  for (int i = 0; i < static_cast<int>(vars_.size()); ++i) {
    if (!index_.emplace(vars_[i].name, i).second)
      throw Error("duplicate variable name " + vars_[i].name);
    if (vars_[i].block == VarBlock::T) t_index_ = i;
  }
}

static std::string x_name(int i, int j, int ncols) {
  if (ncols <= 9) return "x" + std::to_string(i) + std::to_string(j);
  return "x_" + std::to_string(i) + "_" + std::to_string(j);
}

RingPtr RingContext::w_ring(FieldContext field) {
  std::vector<VarInfo> v;
  for (int i = 1; i <= 3; ++i) v.push_back({"w" + std::to_string(i), VarBlock::W, 1, 0});
  return RingPtr(new RingContext(field, std::move(v)));
}

RingPtr RingContext::rees_ring(FieldContext field, int ncols, int nys, bool with_t) {
  std::vector<VarInfo> v;
  for (int i = 1; i <= 3; ++i) v.push_back({"w" + std::to_string(i), VarBlock::W, 1, 0});
  for (int j = 1; j <= ncols; ++j)
    for (int i = 1; i <= 3; ++i) v.push_back({x_name(i, j, ncols), VarBlock::X, 0, 1});
  for (int l = 1; l <= nys; ++l) v.push_back({"y" + std::to_string(l), VarBlock::Y, 0, 1});
  if (with_t) v.push_back({"t", VarBlock::T, 0, 0});
  return RingPtr(new RingContext(field, std::move(v)));
}

RingPtr RingContext::basis_ring(FieldContext field, int m, bool with_t) {
  std::vector<VarInfo> v;
  for (int i = 1; i <= 3; ++i) v.push_back({"w" + std::to_string(i), VarBlock::W, 1, 0});
  for (int j = 1; j <= m; ++j) v.push_back({x_name(1, j, m), VarBlock::X, 0, 1});
  if (with_t) v.push_back({"t", VarBlock::T, 0, 0});
  return RingPtr(new RingContext(field, std::move(v)));
}

RingPtr RingContext::generic_ring(FieldContext field, int nvars) {
  std::vector<VarInfo> v;
  for (int i = 1; i <= nvars; ++i)
    v.push_back({"z" + std::to_string(i), VarBlock::X, 0, 1});
  return RingPtr(new RingContext(field, std::move(v)));
}

RingPtr RingContext::with_elim_var(const RingPtr& r) {
  if (r->t_index() >= 0) return r;
  std::vector<VarInfo> v = r->vars();
  v.push_back({"t", VarBlock::T, 0, 0});
  return RingPtr(new RingContext(r->field(), std::move(v)));
}

RingPtr RingContext::without_elim_var(const RingPtr& r) {
  if (r->t_index() < 0) return r;
  if (r->t_index() != r->nvars() - 1) throw Error("elimination variable is not last");
  std::vector<VarInfo> v(r->vars().begin(), r->vars().end() - 1);
  return RingPtr(new RingContext(r->field(), std::move(v)));
}

RingPtr RingContext::custom(FieldContext field, std::vector<VarInfo> vars) {
  return RingPtr(new RingContext(field, std::move(vars)));
}

RingPtr RingContext::truncate(const RingPtr& r, int nkeep) {
  if (nkeep == r->nvars()) return r;
  if (nkeep < 0 || nkeep > r->nvars()) throw Error("truncate: bad variable count");
  std::vector<VarInfo> v(r->vars().begin(), r->vars().begin() + nkeep);
  return RingPtr(new RingContext(r->field(), std::move(v)));
}

int RingContext::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

bool RingContext::same_layout(const RingContext& o) const {
  if (!(field_ == o.field_) || vars_.size() != o.vars_.size()) return false;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name != o.vars_[i].name) return false;
  return true;
}

Monomial Monomial::variable(int nvars, int i, int exp) {
  Monomial m(nvars);
  m.set_exp(i, exp);
  return m;
}

void Monomial::set_exp(int i, int v) {
  deg_ = static_cast<uint16_t>(deg_ - e_[i] + v);
  e_[i] = static_cast<uint8_t>(v);
}

int Monomial::degree(int lo, int hi) const {
  int d = 0;
  for (int i = lo; i < hi; ++i) d += e_[i];
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(n_);
  for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<uint8_t>(e_[i] + o.e_[i]);
  r.deg_ = static_cast<uint16_t>(deg_ + o.deg_);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (int i = 0; i < n_; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::divide(const Monomial& o) const {
  Monomial r(n_);
  for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<uint8_t>(e_[i] - o.e_[i]);
  r.deg_ = static_cast<uint16_t>(deg_ - o.deg_);
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  int d = 0;
  for (int i = 0; i < a.n_; ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    d += r.e_[i];
  }
  r.deg_ = static_cast<uint16_t>(d);
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (int i = 0; i < n_; ++i)
    if (e_[i] && o.e_[i]) return false;
  return true;
}

bool Monomial::operator==(const Monomial& o) const {
  if (n_ != o.n_ || deg_ != o.deg_) return false;
  return std::equal(e_.begin(), e_.begin() + n_, o.e_.begin());
}

size_t Monomial::hash() const {
  size_t h = 1469598103934665603ull;
  for (int i = 0; i < n_; ++i) {
    h ^= e_[i];
    h *= 1099511628211ull;
  }
  return h;
}

int Monomial::canonical_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg_ != b.deg_) return a.deg_ < b.deg_ ? -1 : 1;
  for (int i = a.n_ - 1; i >= 0; --i)
    if (a.e_[i] != b.e_[i]) return a.e_[i] > b.e_[i] ? -1 : 1;
  return 0;
}

MonomialOrder MonomialOrder::lex(int nvars) {
  MonomialOrder o;
  o.blocks_.push_back({0, nvars, Inner::Lex});
  return o;
}

MonomialOrder MonomialOrder::grevlex(int nvars) {
  MonomialOrder o;
  o.blocks_.push_back({0, nvars, Inner::Grevlex});
  return o;
}

MonomialOrder MonomialOrder::elimination(int nvars, int lo, int hi) {
  MonomialOrder o;
  o.blocks_.push_back({lo, hi, Inner::Lex});
  if (lo > 0) o.blocks_.push_back({0, lo, Inner::Grevlex});
  if (hi < nvars) o.blocks_.push_back({hi, nvars, Inner::Grevlex});
  return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const Block& blk : blocks_) {
    if (blk.inner == Inner::Lex) {
      for (int i = blk.lo; i < blk.hi; ++i)
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
    } else {
      int da = a.degree(blk.lo, blk.hi), db = b.degree(blk.lo, blk.hi);
      if (da != db) return da > db ? 1 : -1;
      for (int i = blk.hi - 1; i >= blk.lo; --i)
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    }
  }
  return 0;
}

std::string MonomialOrder::key() const {
  std::string s;
  for (const Block& b : blocks_) {
    s += std::to_string(b.lo) + "-" + std::to_string(b.hi) +
         (b.inner == Inner::Lex ? "l" : "g") + ";";
  }
  return s;
}

}  // namespace blowup

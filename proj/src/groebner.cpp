#include "blowup/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "detail/fields.hpp"

namespace blowup {

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
struct EP {  // engine polynomial, terms sorted descending under the active order
  std::vector<Monomial> m;
  std::vector<typename F::elem> c;
  int sugar = 0;
  bool empty() const { return m.empty(); }
  size_t size() const { return m.size(); }
};

template <class F>
EP<F> to_engine(const F& f, const Polynomial& p, const MonomialOrder& ord) {
  EP<F> e;
  std::vector<int> idx(p.terms().size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return ord.compare(p.terms()[a].first, p.terms()[b].first) > 0;
  });
  e.m.reserve(idx.size());
  e.c.reserve(idx.size());
  for (int i : idx) {
    e.m.push_back(p.terms()[i].first);
    e.c.push_back(f.from_scalar(p.terms()[i].second));
  }
  e.sugar = p.degree();
  return e;
}

template <class F>
Polynomial from_engine(const F& f, const EP<F>& e, const RingPtr& ring) {
  std::vector<std::pair<Monomial, Scalar>> ts;
  ts.reserve(e.size());
  for (size_t i = 0; i < e.size(); ++i) ts.emplace_back(e.m[i], f.to_scalar(e.c[i]));
  return Polynomial::from_terms(ring, std::move(ts));
}

/// Merge two order-sorted term lists, combining equal monomials.
template <class F>
EP<F> merge(const F& f, const MonomialOrder& ord, const EP<F>& a, const EP<F>& b) {
  EP<F> r;
  r.m.reserve(a.size() + b.size());
  r.c.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int cmp = ord.compare(a.m[i], b.m[j]);
    if (cmp > 0) {
      r.m.push_back(a.m[i]);
      r.c.push_back(a.c[i]);
      ++i;
    } else if (cmp < 0) {
      r.m.push_back(b.m[j]);
      r.c.push_back(b.c[j]);
      ++j;
    } else {
      auto v = f.add(a.c[i], b.c[j]);
      if (!F::is_zero(v)) {
        r.m.push_back(a.m[i]);
        r.c.push_back(v);
      }
      ++i, ++j;
    }
  }
  for (; i < a.size(); ++i) {
    r.m.push_back(a.m[i]);
    r.c.push_back(a.c[i]);
  }
  for (; j < b.size(); ++j) {
    r.m.push_back(b.m[j]);
    r.c.push_back(b.c[j]);
  }
  return r;
}

/// Geobucket accumulator for long reductions.
template <class F>
class Geobucket {
 public:
  Geobucket(const F& f, const MonomialOrder& ord) : f_(f), ord_(ord) {}

  void add(EP<F> p) {
    if (p.empty()) return;
    size_t i = 0, cap = 16;
    while (cap < p.size()) cap *= 4, ++i;
    while (true) {
      if (i >= buckets_.size()) buckets_.resize(i + 1);
      if (buckets_[i].empty()) {
        buckets_[i] = std::move(p);
        return;
      }
      p = merge(f_, ord_, buckets_[i], p);
      buckets_[i] = EP<F>{};
      if (p.empty()) return;
      if (p.size() <= cap) {
        buckets_[i] = std::move(p);
        return;
      }
      cap *= 4, ++i;
    }
  }

  /// Extract the overall leading term (net of cancellations across buckets).
  bool pop_lead(Monomial& m, typename F::elem& c) {
    while (true) {
      int best = -1;
      for (size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].empty()) continue;
        if (best < 0 || ord_.compare(buckets_[i].m.front(), buckets_[best].m.front()) > 0)
          best = static_cast<int>(i);
      }
      if (best < 0) return false;
      m = buckets_[best].m.front();
      c = buckets_[best].c.front();
      pop_front(buckets_[best]);
      for (auto& b : buckets_) {
        if (b.empty() || !(b.m.front() == m)) continue;
        c = f_.add(c, b.c.front());
        pop_front(b);
      }
      if (!F::is_zero(c)) return true;
    }
  }

 private:
  static void pop_front(EP<F>& p) {
    p.m.erase(p.m.begin());
    p.c.erase(p.c.begin());
  }
  F f_;
  const MonomialOrder& ord_;
  std::vector<EP<F>> buckets_;
};

uint32_t var_mask(const Monomial& m) {
  uint32_t mask = 0;
  for (int i = 0; i < m.nvars(); ++i)
    if (m.exp(i)) mask |= 1u << i;
  return mask;
}

template <class F>
class Engine {
 public:
  Engine(const F& f, const MonomialOrder& ord, const GroebnerBudget& budget)
      : f_(f), ord_(ord), budget_(budget), start_(Clock::now()) {}

  std::vector<EP<F>> reduced_basis(std::vector<EP<F>> input) {
    // deterministic insertion order: by leading monomial, then size
    std::sort(input.begin(), input.end(), [&](const EP<F>& a, const EP<F>& b) {
      int c = ord_.compare(a.m.front(), b.m.front());
      if (c != 0) return c < 0;
      return a.size() < b.size();
    });
    for (auto& p : input) {
      EP<F> r = reduce(std::move(p));
      if (!r.empty()) update(make_monic(std::move(r)));
    }
    while (!pairs_.empty()) {
      std::pop_heap(pairs_.begin(), pairs_.end(), PairLater{this});
      Pair pr = std::move(pairs_.back());
      pairs_.pop_back();
      bump_budget();
      EP<F> s = spoly(pr);
      EP<F> r = reduce(std::move(s));
      if (!r.empty()) update(make_monic(std::move(r)));
    }
    return interreduce();
  }

  EP<F> reduce_against(EP<F> p, const std::vector<EP<F>>& basis) {
    // one-shot normal form against a fixed basis
    basis_.clear();
    for (const auto& g : basis)
      if (!g.empty()) basis_.push_back({g, var_mask(g.m.front()), false});
    return reduce(std::move(p));
  }

 private:
  struct Entry {
    EP<F> p;
    uint32_t mask;
    bool redundant;
  };
  struct Pair {
    int i, j;
    Monomial lcm;
    int sugar;
    bool coprime;
  };
  // heap comparator: true when a should pop AFTER b
  struct PairLater {
    Engine* e;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar > b.sugar;
      int c = e->ord_.compare(a.lcm, b.lcm);
      if (c != 0) return c > 0;
      if (a.i != b.i) return a.i > b.i;
      return a.j > b.j;
    }
  };

  void bump_budget() {
    if (++steps_ > budget_.max_steps)
      throw BudgetExceeded("groebner step limit (" + std::to_string(budget_.max_steps) + ")");
    if (budget_.time_limit_ms >= 0 && (steps_ & 0x3f) == 0) {
      auto ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
      if (ms > budget_.time_limit_ms)
        throw BudgetExceeded("groebner time limit (" + std::to_string(budget_.time_limit_ms) +
                             " ms)");
    }
  }

  EP<F> make_monic(EP<F> p) {
    if (p.empty() || p.c.front() == F::one()) return p;
    auto inv = f_.inv(p.c.front());
    for (auto& c : p.c) c = f_.mul(c, inv);
    return p;
  }

  EP<F> mult(const Monomial& u, const typename F::elem& c, const EP<F>& g, size_t from) {
    EP<F> r;
    r.m.reserve(g.size() - from);
    r.c.reserve(g.size() - from);
    for (size_t k = from; k < g.size(); ++k) {
      r.m.push_back(u * g.m[k]);
      r.c.push_back(f_.mul(c, g.c[k]));
    }
    return r;
  }

  EP<F> spoly(const Pair& pr) {
    const EP<F>& fi = basis_[pr.i].p;
    const EP<F>& fj = basis_[pr.j].p;
    Monomial ui = pr.lcm.divide(fi.m.front());
    Monomial uj = pr.lcm.divide(fj.m.front());
    // both monic: S = ui*fi - uj*fj
    EP<F> a = mult(ui, F::one(), fi, 0);
    EP<F> b = mult(uj, f_.neg(F::one()), fj, 0);
    EP<F> s = merge(f_, ord_, a, b);
    s.sugar = std::max(fi.sugar + ui.degree(), fj.sugar + uj.degree());
    return s;
  }

  int find_reducer(const Monomial& m, uint32_t mask) const {
    for (size_t k = 0; k < basis_.size(); ++k) {
      const Entry& e = basis_[k];
      if (e.redundant) continue;
      if ((e.mask & ~mask) != 0) continue;
      if (e.p.m.front().degree() > m.degree()) continue;
      if (e.p.m.front().divides(m)) return static_cast<int>(k);
    }
    return -1;
  }

  EP<F> reduce(EP<F> p) {
    if (p.empty()) return p;
    Geobucket<F> bucket(f_, ord_);
    int sugar = p.sugar;
    bucket.add(std::move(p));
    EP<F> out;
    Monomial m;
    typename F::elem c;
    while (bucket.pop_lead(m, c)) {
      int g = find_reducer(m, var_mask(m));
      if (g < 0) {
        out.m.push_back(m);
        out.c.push_back(c);
        continue;
      }
      const EP<F>& gp = basis_[g].p;
      Monomial u = m.divide(gp.m.front());
      sugar = std::max(sugar, gp.sugar + u.degree());
      bucket.add(mult(u, f_.neg(c), gp, 1));  // cancels the popped lead
    }
    out.sugar = sugar;
    return out;
  }

  /// Gebauer-Moeller pair update on appending h to the basis.
  void update(EP<F> h) {
    int hidx = static_cast<int>(basis_.size());
    Monomial lmh = h.m.front();
    struct Cand {
      int g;
      Monomial lcm;
      bool coprime;
      bool keep;
    };
    std::vector<Cand> cand;
    for (size_t g = 0; g < basis_.size(); ++g) {
      if (basis_[g].redundant) continue;
      Monomial l = Monomial::lcm(lmh, basis_[g].p.m.front());
      cand.push_back({static_cast<int>(g), l, lmh.coprime(basis_[g].p.m.front()), false});
    }
    std::vector<Cand> kept;
    for (size_t a = 0; a < cand.size(); ++a) {
      bool drop = false;
      if (!cand[a].coprime) {
        for (size_t b = a + 1; b < cand.size() && !drop; ++b)
          if (cand[b].lcm.divides(cand[a].lcm)) drop = true;
        for (const auto& k : kept)
          if (drop) break;
          else if (k.lcm.divides(cand[a].lcm))
            drop = true;
      }
      if (!drop) kept.push_back(cand[a]);
    }
    // drop old pairs superseded by h
    std::erase_if(pairs_, [&](const Pair& pr) {
      if (!lmh.divides(pr.lcm)) return false;
      Monomial li = Monomial::lcm(lmh, basis_[pr.i].p.m.front());
      Monomial lj = Monomial::lcm(lmh, basis_[pr.j].p.m.front());
      return !(li == pr.lcm) && !(lj == pr.lcm);
    });
    for (const auto& k : kept) {
      if (k.coprime) continue;  // product criterion
      const EP<F>& fg = basis_[k.g].p;
      int sug = std::max(fg.sugar + k.lcm.divide(fg.m.front()).degree(),
                         h.sugar + k.lcm.divide(lmh).degree());
      pairs_.push_back({k.g, hidx, k.lcm, sug, false});
    }
    std::make_heap(pairs_.begin(), pairs_.end(), PairLater{this});
    for (auto& e : basis_)
      if (!e.redundant && lmh.divides(e.p.m.front())) e.redundant = true;
    basis_.push_back({std::move(h), var_mask(lmh), false});
  }

  std::vector<EP<F>> interreduce() {
    std::vector<EP<F>> keep;
    for (auto& e : basis_)
      if (!e.redundant) keep.push_back(std::move(e.p));
    // leading monomials form an antichain; one tail-reduction pass each
    std::vector<EP<F>> out;
    for (size_t i = 0; i < keep.size(); ++i) {
      basis_.clear();
      for (size_t j = 0; j < keep.size(); ++j)
        if (j != i) basis_.push_back({keep[j], var_mask(keep[j].m.front()), false});
      out.push_back(make_monic(reduce(keep[i])));
    }
    std::sort(out.begin(), out.end(),
              [&](const EP<F>& a, const EP<F>& b) { return ord_.compare(a.m.front(), b.m.front()) < 0; });
    return out;
  }

  F f_;
  MonomialOrder ord_;
  GroebnerBudget budget_;
  Clock::time_point start_;
  uint64_t steps_ = 0;
  std::vector<Entry> basis_;
  std::vector<Pair> pairs_;
};

template <class F>
std::vector<Polynomial> run_buchberger(const F& f, const RingPtr& ring,
                                       const std::vector<Polynomial>& gens,
                                       const MonomialOrder& ord, const GroebnerBudget& budget) {
  Engine<F> eng(f, ord, budget);
  std::vector<EP<F>> input;
  for (const auto& g : gens)
    if (!g.is_zero()) input.push_back(to_engine(f, g, ord));
  if (input.empty()) return {};
  auto basis = eng.reduced_basis(std::move(input));
  std::vector<Polynomial> out;
  for (const auto& e : basis) out.push_back(from_engine(f, e, ring));
  return out;
}

}  // namespace

std::vector<Polynomial> buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                   const MonomialOrder& order, const GroebnerBudget& budget) {
  for (const auto& g : gens)
    if (!g.is_zero() && !g.ring()->same_layout(*ring))
      throw ContextMismatch("generator ring differs");
  return detail::with_field(ring->field(), [&](auto f) {
    return run_buchberger(f, ring, gens, order, budget);
  });
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  if (f.is_zero()) return f;
  const RingPtr& ring = f.ring();
  for (const auto& g : basis)
    if (!g.is_zero() && !g.ring()->same_layout(*ring))
      throw ContextMismatch("basis ring differs");
  return detail::with_field(ring->field(), [&](auto fld) {
    using F = decltype(fld);
    Engine<F> eng(fld, order, GroebnerBudget{});
    std::vector<EP<F>> b;
    for (const auto& g : basis)
      if (!g.is_zero()) b.push_back(to_engine(fld, g, order));
    EP<F> r = eng.reduce_against(to_engine(fld, f, order), b);
    return from_engine(fld, r, ring);
  });
}

Monomial lead_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error("leading monomial of zero");
  Monomial best = f.terms().front().first;
  for (const auto& [m, c] : f.terms())
    if (order.compare(m, best) > 0) best = m;
  return best;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw Error("s_polynomial of zero");
  Monomial lf = lead_monomial(f, order), lg = lead_monomial(g, order);
  Monomial l = Monomial::lcm(lf, lg);
  auto cf = Scalar::one(f.ring()->field());
  Polynomial uf = Polynomial::term(f.ring(), l.divide(lf), cf);
  Polynomial ug = Polynomial::term(f.ring(), l.divide(lg), cf);
  Polynomial fm = f, gm = g;
  // make monic w.r.t. the active order's leading coefficient
  for (const auto& [m, c] : f.terms())
    if (m == lf) fm = f.scaled(c.inverse());
  for (const auto& [m, c] : g.terms())
    if (m == lg) gm = g.scaled(c.inverse());
  return uf * fm - ug * gm;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)),
      gens_(std::move(gens)),
      cache_(std::make_shared<std::map<std::string, std::vector<Polynomial>>>()) {
  for (const auto& g : gens_)
    if (!g.is_zero() && !g.ring()->same_layout(*ring_))
      throw ContextMismatch("ideal generator ring differs");
}

bool Ideal::is_zero_ideal() const {
  for (const auto& g : gens_)
    if (!g.is_zero()) return false;
  return true;
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& order,
                                                     const GroebnerBudget& budget) const {
  if (!cache_) cache_ = std::make_shared<std::map<std::string, std::vector<Polynomial>>>();
  auto it = cache_->find(order.key());
  if (it != cache_->end()) return it->second;
  auto gb = buchberger(ring_, gens_, order, budget);
  return cache_->emplace(order.key(), std::move(gb)).first->second;
}

bool Ideal::contains(const Polynomial& f, const MonomialOrder& order,
                     const GroebnerBudget& budget) const {
  if (f.is_zero()) return true;
  return normal_form(f, groebner_basis(order, budget), order).is_zero();
}

Ideal eliminate_suffix(const Ideal& ideal, int lo, const GroebnerBudget& budget) {
  const RingPtr& ring = ideal.ring();
  int n = ring->nvars();
  if (lo <= 0 || lo > n) throw Error("eliminate_suffix: bad block start");
  MonomialOrder elim = MonomialOrder::elimination(n, lo, n);
  const auto& gb = ideal.groebner_basis(elim, budget);
  RingPtr target = RingContext::truncate(ring, lo);
  std::vector<Polynomial> kept;
  for (const auto& g : gb) {
    bool free_of_block = true;
    for (const auto& [m, c] : g.terms())
      for (int i = lo; i < n && free_of_block; ++i)
        if (m.exp(i)) free_of_block = false;
    if (free_of_block) kept.push_back(g.project(target));
  }
  return Ideal(target, std::move(kept));
}

Ideal kernel_of_map(const std::vector<Polynomial>& targets, const RingPtr& ambient,
                    const GroebnerBudget& budget) {
  if (targets.empty()) throw Error("kernel_of_map: no targets");
  int deg = -1;
  for (const auto& t : targets) {
    if (t.is_zero()) throw Error("kernel_of_map: zero target");
    if (!t.is_homogeneous()) throw Error("kernel_of_map: inhomogeneous target");
    if (deg < 0) deg = t.degree();
    if (t.degree() != deg) throw Error("kernel_of_map: targets of unequal degrees");
  }
  if (ambient->nvars() != 3 + static_cast<int>(targets.size()))
    throw Error("kernel_of_map: ambient ring has wrong variable count");
  RingPtr ext = RingContext::with_elim_var(ambient);
  int tvar = ext->t_index();
  Polynomial tpoly = Polynomial::variable(ext, tvar);
  std::vector<Polynomial> graph;
  for (size_t c = 0; c < targets.size(); ++c) {
    Polynomial xc = Polynomial::variable(ext, 3 + static_cast<int>(c));
    graph.push_back(xc - tpoly * targets[c].lift(ext));
  }
  Ideal g(ext, std::move(graph));
  return eliminate_suffix(g, tvar, budget);
}

bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& order,
                 const GroebnerBudget& budget) {
  if (!a.ring()->same_layout(*b.ring())) throw ContextMismatch("ideal_equal rings differ");
  const auto& ga = a.groebner_basis(order, budget);
  const auto& gb = b.groebner_basis(order, budget);
  if (ga.size() != gb.size()) return false;
  for (size_t i = 0; i < ga.size(); ++i)
    if (ga[i] != gb[i]) return false;
  return true;
}

}  // namespace blowup

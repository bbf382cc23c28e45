#include "blowup/resolution.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "detail/fields.hpp"
#include "detail/linalg.hpp"

namespace blowup {

namespace {

long dim_poly_ring(int nvars, int j) {
  if (j < 0) return 0;
  long r = 1;
  for (long i = 0; i < nvars - 1; ++i) r = r * (j + 1 + i) / (i + 1);
  return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return Monomial::canonical_cmp(a, b) > 0;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool divisible = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        divisible = true;
        break;
      }
    if (!divisible) out.push_back(g);
  }
  return out;
}

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<mpz_class> r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<mpz_class> poly_add(std::vector<mpz_class> a, const std::vector<mpz_class>& b,
                                int shift = 0) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, mpz_class(0));
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  return a;
}

void trim(std::vector<mpz_class>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

std::vector<mpz_class> monomial_ideal_numerator(std::vector<Monomial> gens, int nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {mpz_class(1)};
  // pull out pure variables: each contributes a (1-z) factor
  std::vector<mpz_class> factor = {mpz_class(1)};
  std::vector<Monomial> rest;
  for (const auto& g : gens) {
    if (g.degree() == 1)
      factor = poly_mul(factor, {mpz_class(1), mpz_class(-1)});
    else
      rest.push_back(g);
  }
  if (rest.empty()) return factor;
  // pairwise support-coprime generators: product formula
  bool coprime = true;
  for (size_t i = 0; i < rest.size() && coprime; ++i)
    for (size_t j = i + 1; j < rest.size() && coprime; ++j)
      if (!rest[i].coprime(rest[j])) coprime = false;
  if (coprime) {
    for (const auto& g : rest) {
      std::vector<mpz_class> f(g.degree() + 1, mpz_class(0));
      f[0] = 1;
      f[g.degree()] = -1;
      factor = poly_mul(factor, f);
    }
    return factor;
  }
  // split on the most frequent variable: num(I) = num(I + (v)) + z * num(I : v)
  std::vector<int> freq(nvars, 0);
  for (const auto& g : rest)
    for (int i = 0; i < nvars; ++i)
      if (g.exp(i)) ++freq[i];
  int v = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());
  std::vector<Monomial> plus = {Monomial::variable(rest[0].nvars(), v)};
  std::vector<Monomial> colon;
  for (const auto& g : rest) {
    if (!g.exp(v)) plus.push_back(g);
    Monomial h = g;
    if (h.exp(v)) h.set_exp(v, h.exp(v) - 1);
    colon.push_back(h);
  }
  auto a = monomial_ideal_numerator(std::move(plus), nvars);
  auto b = monomial_ideal_numerator(std::move(colon), nvars);
  auto sum = poly_add(std::move(a), b, 1);  // + z * b
  trim(sum);
  return poly_mul(factor, sum);
}

long HilbertSeries::hf(int t) const {
  mpz_class r = 0;
  for (size_t k = 0; k < num.size(); ++k) {
    long d = dim_poly_ring(nvars, t - static_cast<int>(k));
    if (d) r += num[k] * d;
  }
  return static_cast<long>(r.get_si());
}

mpz_class HilbertSeries::multiplicity() const {
  mpz_class e = 0;
  for (const auto& c : reduced) e += c;
  return e;
}

HilbertSeries hilbert_series(const Ideal& I, const GroebnerBudget& budget) {
  HilbertSeries hs;
  hs.nvars = I.ring()->nvars();
  auto ord = MonomialOrder::grevlex(hs.nvars);
  const auto& gb = I.groebner_basis(ord, budget);
  std::vector<Monomial> lms;
  for (const auto& g : gb) lms.push_back(lead_monomial(g, ord));
  hs.num = monomial_ideal_numerator(std::move(lms), hs.nvars);
  trim(hs.num);
  if (hs.num.empty()) hs.num = {mpz_class(0)};
  // reduce by (1-z) factors: count the codimension
  hs.reduced = hs.num;
  hs.codim = 0;
  auto value_at_one = [](const std::vector<mpz_class>& p) {
    mpz_class v = 0;
    for (const auto& c : p) v += c;
    return v;
  };
  while (!hs.reduced.empty() && value_at_one(hs.reduced) == 0 && hs.codim < hs.nvars) {
    // divide by (1-z): q_i = sum_{k<=i} p_k
    std::vector<mpz_class> q(hs.reduced.size() - 1, mpz_class(0));
    mpz_class acc = 0;
    for (size_t i = 0; i + 1 < hs.reduced.size(); ++i) {
      acc += hs.reduced[i];
      q[i] = acc;
    }
    hs.reduced = std::move(q);
    trim(hs.reduced);
    ++hs.codim;
  }
  hs.dim = hs.nvars - hs.codim;
  return hs;
}

// ---------------------------------------------------------------------------
// degree-slice machinery

namespace {

struct PairMonoLess {
  bool operator()(const std::pair<int, Monomial>& a, const std::pair<int, Monomial>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return Monomial::canonical_cmp(a.second, b.second) > 0;
  }
};

/// Basis of a graded free module slice: (summand, monomial) pairs.
struct FreeSlice {
  std::vector<std::pair<int, Monomial>> basis;
  std::map<std::pair<int, Monomial>, int, PairMonoLess> index;

  static FreeSlice build(const RingPtr& ring, const std::vector<int>& degs, int j) {
    FreeSlice s;
    for (int r = 0; r < static_cast<int>(degs.size()); ++r) {
      for (const auto& m : degree_monomials(ring, j - degs[r])) s.basis.emplace_back(r, m);
    }
    std::sort(s.basis.begin(), s.basis.end(), PairMonoLess{});
    for (int i = 0; i < static_cast<int>(s.basis.size()); ++i) s.index[s.basis[i]] = i;
    return s;
  }
  int dim() const { return static_cast<int>(basis.size()); }
};

using ModuleElem = std::vector<Polynomial>;  // one polynomial per target summand

template <class F>
detail::SpVec<F> slice_coords(const F& f, const FreeSlice& slice, const ModuleElem& v,
                              const Monomial& shift) {
  detail::SpVec<F> out;
  for (int r = 0; r < static_cast<int>(v.size()); ++r) {
    for (const auto& [m, c] : v[r].terms()) {
      auto it = slice.index.find({r, m * shift});
      if (it == slice.index.end()) throw Error("slice coordinate out of range");
      out.t.emplace_back(it->second, f.from_scalar(c));
    }
  }
  std::sort(out.t.begin(), out.t.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

template <class F>
ModuleElem from_slice_coords(const F& f, const RingPtr& ring, const FreeSlice& slice,
                             const detail::SpVec<F>& v, int nsummands) {
  std::vector<std::vector<std::pair<Monomial, Scalar>>> terms(nsummands);
  for (const auto& [i, c] : v.t) {
    const auto& [r, m] = slice.basis[i];
    terms[r].emplace_back(m, f.to_scalar(c));
  }
  ModuleElem out;
  for (int r = 0; r < nsummands; ++r)
    out.push_back(Polynomial::from_terms(ring, std::move(terms[r])));
  return out;
}

constexpr long kMaxSliceDim = 2'000'000;

/// Minimal generators of ker(phi) for a graded map phi: (+) R(-src_deg) -> (+) R(-tgt_deg),
/// scanning degrees with a window heuristic; kernel_dim gives the exact slice
/// dimension of the kernel (from Hilbert bookkeeping), used both to skip empty
/// degrees and as a cross-check on every computed nullspace.
template <class F>
std::vector<std::pair<int, ModuleElem>> kernel_generators(
    const F& f, const RingPtr& ring, const std::vector<int>& src_degs,
    const std::vector<ModuleElem>& phi, const std::vector<int>& tgt_degs,
    const std::function<long(int)>& kernel_dim, int degree_cap, int window) {
  std::vector<std::pair<int, ModuleElem>> gens;
  if (src_degs.empty()) return gens;
  int n = ring->nvars();
  int jmin = *std::min_element(src_degs.begin(), src_degs.end()) + 1;
  int lastfound = -1;
  std::vector<ModuleElem> kernel_slice;  // module elements spanning ker(phi)_j
  bool found_any = false;
  for (int j = jmin; j <= degree_cap; ++j) {
    if (found_any && j > lastfound + window) break;
    long kd = kernel_dim(j);
    if (kd < 0) throw Error("negative kernel dimension: earlier window too small");
    std::vector<ModuleElem> next_slice;
    if (kd == 0) {
      kernel_slice.clear();
      continue;
    }
    FreeSlice src = FreeSlice::build(ring, src_degs, j);
    if (src.dim() > kMaxSliceDim) throw Error("resolution slice too large");
    detail::Echelon<F> ech(f);
    // span of (linear forms) * (previous kernel slice)
    for (const auto& v : kernel_slice) {
      for (int var = 0; var < n; ++var) {
        auto coords = slice_coords(f, src, v, Monomial::variable(n, var));
        if (ech.insert(coords)) {
          ModuleElem shifted;
          for (const auto& p : v)
            shifted.push_back(p * Polynomial::variable(ring, var));
          next_slice.push_back(std::move(shifted));
        }
        if (ech.rank() == kd) break;
      }
      if (ech.rank() == kd) break;
    }
    if (ech.rank() > kd) throw Error("kernel bookkeeping violated");
    if (ech.rank() < kd) {
      // new minimal generators: extend with the exact nullspace of the slice map
      FreeSlice tgt = FreeSlice::build(ring, tgt_degs, j);
      std::vector<detail::SpVec<F>> rows(tgt.dim());
      for (int col = 0; col < src.dim(); ++col) {
        const auto& [r, u] = src.basis[col];
        auto coords = slice_coords(f, tgt, phi[r], u);
        for (const auto& [row, c] : coords.t) rows[row].t.emplace_back(col, c);
      }
      auto rr = detail::sparse_rref(f, std::move(rows), src.dim(), true);
      if (static_cast<long>(rr.nullspace.size()) != kd)
        throw Error("kernel dimension mismatch: earlier window too small");
      for (const auto& v : rr.nullspace) {
        if (ech.insert(v)) {
          auto me = from_slice_coords(f, ring, src, v, static_cast<int>(src_degs.size()));
          gens.emplace_back(j, me);
          next_slice.push_back(std::move(me));
          lastfound = j;
          found_any = true;
        }
      }
      if (ech.rank() != kd) throw Error("kernel slice not spanned");
    }
    kernel_slice = std::move(next_slice);
  }
  return gens;
}

}  // namespace

std::vector<std::pair<int, Polynomial>> minimal_generators(const Ideal& I, int degree_bound,
                                                           const GroebnerBudget& budget) {
  const RingPtr& ring = I.ring();
  auto ord = MonomialOrder::grevlex(ring->nvars());
  const auto& gb = I.groebner_basis(ord, budget);
  std::vector<std::pair<int, Polynomial>> out;
  if (gb.empty()) return out;
  for (const auto& g : gb)
    if (!g.is_homogeneous()) throw Error("minimal_generators needs a homogeneous ideal");
  int maxdeg = 0;
  for (const auto& g : gb) maxdeg = std::max(maxdeg, g.degree());
  if (degree_bound >= 0 && maxdeg > degree_bound)
    throw DegreeBoundExceeded("Groebner basis has an irreducible leading term of degree " +
                              std::to_string(maxdeg));
  return detail::with_field(ring->field(), [&](auto f) {
    using F = decltype(f);
    std::vector<std::pair<int, Polynomial>> gens;
    detail::Echelon<F> ech(f);
    std::vector<Polynomial> slice;  // basis of the previous degree slice of I
    int mindeg = maxdeg;
    for (const auto& g : gb) mindeg = std::min(mindeg, g.degree());
    for (int j = mindeg; j <= maxdeg; ++j) {
      ech = detail::Echelon<F>(f);
      auto monos = degree_monomials(ring, j);
      std::map<Monomial, int, decltype([](const Monomial& a, const Monomial& b) {
                 return Monomial::canonical_cmp(a, b) > 0;
               })>
          idx;
      for (int i = 0; i < static_cast<int>(monos.size()); ++i) idx[monos[i]] = i;
      auto coords = [&](const Polynomial& p) {
        detail::SpVec<F> v;
        for (const auto& [m, c] : p.terms()) v.t.emplace_back(idx.at(m), f.from_scalar(c));
        std::sort(v.t.begin(), v.t.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
      };
      std::vector<Polynomial> next;
      for (const auto& p : slice)
        for (int var = 0; var < ring->nvars(); ++var) {
          Polynomial q = p * Polynomial::variable(ring, var);
          if (ech.insert(coords(q))) next.push_back(std::move(q));
        }
      for (const auto& g : gb) {
        if (g.degree() != j) continue;
        if (ech.insert(coords(g))) {
          gens.emplace_back(j, g);
          next.push_back(g);
        }
      }
      slice = std::move(next);
    }
    return gens;
  });
}

BettiTable betti_table(const Ideal& I, const ResolveOptions& opts) {
  const RingPtr& ring = I.ring();
  int n = ring->nvars();
  auto hs = hilbert_series(I, opts.budget);
  auto mingens = minimal_generators(I, -1, opts.budget);
  BettiTable table;
  table.beta[{0, 0}] = 1;
  if (mingens.empty()) return table;  // zero ideal: free module, pd 0
  int maxgen = 0;
  for (const auto& [d, g] : mingens) maxgen = std::max(maxgen, d);
  int cap = opts.degree_cap >= 0 ? opts.degree_cap : 2 * maxgen + n;
  int window = opts.window;

  for (int attempt = 0; attempt < 3; ++attempt, window *= 2) {
    BettiTable t;
    t.beta[{0, 0}] = 1;
    bool ok = detail::with_field(ring->field(), [&](auto f) {
      // F_1 = minimal generators
      std::vector<int> src_degs;
      std::vector<ModuleElem> phi;
      for (const auto& [d, g] : mingens) {
        src_degs.push_back(d);
        phi.push_back({g});
        t.beta[{1, d}]++;
      }
      std::vector<int> tgt_degs = {0};
      // homological steps
      std::vector<std::vector<int>> all_degs = {tgt_degs, src_degs};
      for (int i = 1;; ++i) {
        const std::vector<int>& degs_i = all_degs[i];
        const std::vector<int>& degs_prev = all_degs[i - 1];
        std::function<long(int)> kdim = [&, i](int j) {
          // dim ker(phi_i)_j from exactness bookkeeping
          long acc = 0;
          int sign = 1;
          for (int k = i; k >= 1; --k) {
            for (int d : all_degs[k]) acc += sign * dim_poly_ring(n, j - d);
            sign = -sign;
          }
          // subtract/add the ideal slice: dim I_j = dim S_j - hf(j)
          acc += sign * (dim_poly_ring(n, j) - hs.hf(j));
          return acc;
        };
        (void)degs_prev;
        auto kg = kernel_generators(f, ring, degs_i, phi, all_degs[i - 1], kdim, cap, window);
        if (kg.empty()) break;
        std::vector<int> degs_next;
        std::vector<ModuleElem> phi_next;
        for (auto& [d, me] : kg) {
          degs_next.push_back(d);
          phi_next.push_back(std::move(me));
          t.beta[{i + 1, d}]++;
        }
        all_degs.push_back(degs_next);
        phi = std::move(phi_next);
      }
      // Euler certificate: alternating sum of Betti numbers equals the numerator
      std::vector<mpz_class> euler;
      for (const auto& [ij, b] : t.beta) {
        auto [i, j] = ij;
        if (static_cast<int>(euler.size()) <= j) euler.resize(j + 1, mpz_class(0));
        euler[j] += (i % 2 == 0 ? b : -b);
      }
      trim(euler);
      auto num = hs.num;
      trim(num);
      return euler == num;
    });
    if (ok) return t;
  }
  throw DegreeBoundExceeded("resolution did not certify within the degree cap " +
                            std::to_string(cap));
}

long BettiTable::at(int i, int j) const {
  auto it = beta.find({i, j});
  return it == beta.end() ? 0 : it->second;
}

int BettiTable::pd() const {
  int p = 0;
  for (const auto& [ij, b] : beta)
    if (b) p = std::max(p, ij.first);
  return p;
}

long BettiTable::total(int i) const {
  long s = 0;
  for (const auto& [ij, b] : beta)
    if (ij.first == i) s += b;
  return s;
}

int BettiTable::max_internal_degree() const {
  int m = 0;
  for (const auto& [ij, b] : beta)
    if (b) m = std::max(m, ij.second);
  return m;
}

std::string BettiTable::grid() const {
  // rows: j - i (Macaulay-style), columns: homological degree
  std::ostringstream os;
  int p = pd(), maxslope = 0;
  for (const auto& [ij, b] : beta)
    if (b) maxslope = std::max(maxslope, ij.second - ij.first);
  os << "      ";
  for (int i = 0; i <= p; ++i) os << i << (i < 10 ? "     " : "    ");
  os << "\n";
  for (int s = 0; s <= maxslope; ++s) {
    os << s << (s < 10 ? ": " : ":") << "   ";
    for (int i = 0; i <= p; ++i) {
      long b = at(i, i + s);
      std::string cell = b ? std::to_string(b) : ".";
      os << cell << std::string(cell.size() < 6 ? 6 - cell.size() : 1, ' ');
    }
    os << "\n";
  }
  return os.str();
}

std::vector<std::vector<Polynomial>> first_syzygies(const RingPtr& ring,
                                                    const std::vector<Polynomial>& gens,
                                                    const ResolveOptions& opts) {
  for (const auto& g : gens)
    if (g.is_zero() || !g.is_homogeneous())
      throw Error("first_syzygies needs nonzero homogeneous generators");
  Ideal I(ring, gens);
  auto hs = hilbert_series(I, opts.budget);
  int n = ring->nvars();
  std::vector<int> src_degs;
  std::vector<ModuleElem> phi;
  for (const auto& g : gens) {
    src_degs.push_back(g.degree());
    phi.push_back({g});
  }
  int maxgen = *std::max_element(src_degs.begin(), src_degs.end());
  int cap = opts.degree_cap >= 0 ? opts.degree_cap : 2 * maxgen + n;
  std::function<long(int)> kdim = [&](int j) {
    long acc = 0;
    for (int d : src_degs) acc += dim_poly_ring(n, j - d);
    acc -= dim_poly_ring(n, j) - hs.hf(j);
    return acc;
  };
  return detail::with_field(ring->field(), [&](auto f) {
    auto kg = kernel_generators(f, ring, src_degs, phi, {0}, kdim, cap, opts.window);
    std::vector<std::vector<Polynomial>> rows;
    for (auto& [d, me] : kg) rows.push_back(std::move(me));
    return rows;
  });
}

PresentationMatrix presentation_matrix(const Ideal& I, const ResolveOptions& opts) {
  auto mingens = minimal_generators(I, -1, opts.budget);
  if (mingens.empty()) throw Error("presentation of the zero ideal");
  PresentationMatrix L;
  for (const auto& [d, g] : mingens) {
    L.col_degrees.push_back(d);
    L.gens.push_back(g);
  }
  L.cols = static_cast<int>(L.gens.size());
  auto rows = first_syzygies(I.ring(), L.gens, opts);
  L.rows = static_cast<int>(rows.size());
  if (L.rows != L.cols - 1)
    throw Error("presentation is not rho x (rho+1): " + std::to_string(L.rows) + " syzygies on " +
                std::to_string(L.cols) + " generators");
  L.entry = std::move(rows);
  for (const auto& row : L.entry) {
    int rd = -1;
    for (int c = 0; c < L.cols; ++c)
      if (!row[c].is_zero()) rd = std::max(rd, row[c].degree() + L.col_degrees[c]);
    L.row_degrees.push_back(rd);
  }
  // verify L * gens^T = 0 exactly
  for (const auto& row : L.entry) {
    Polynomial acc = Polynomial::zero(I.ring());
    for (int c = 0; c < L.cols; ++c) acc = acc + row[c] * L.gens[c];
    if (!acc.is_zero()) throw Error("syzygy verification failed");
  }
  return L;
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, const RingPtr& ring) {
  size_t n = m.size();
  if (n == 0) return Polynomial::constant(ring, Scalar::one(ring->field()));
  for (const auto& row : m)
    if (row.size() != n) throw Error("poly_det needs a square matrix");
  if (n == 1) return m[0][0];
  Polynomial acc = Polynomial::zero(ring);
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    for (size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      sub.push_back(std::move(row));
    }
    Polynomial cof = m[0][c] * poly_det(sub, ring);
    acc = (c % 2 == 0) ? acc + cof : acc - cof;
  }
  return acc;
}

Polynomial signed_maximal_minor(const std::vector<std::vector<Polynomial>>& entry, int col,
                                const RingPtr& ring) {
  std::vector<std::vector<Polynomial>> sub;
  for (const auto& row : entry) {
    std::vector<Polynomial> r;
    for (int c = 0; c < static_cast<int>(row.size()); ++c)
      if (c != col) r.push_back(row[c]);
    sub.push_back(std::move(r));
  }
  Polynomial d = poly_det(sub, ring);
  return (col % 2 == 0) ? d : -d;
}

bool hilbert_burch_check(const Ideal& I, const PresentationMatrix& L,
                         const GroebnerBudget& budget) {
  if (L.rows + 1 != L.cols) return false;
  std::vector<Polynomial> minors;
  for (int c = 0; c < L.cols; ++c) minors.push_back(signed_maximal_minor(L.entry, c, I.ring()));
  Ideal M(I.ring(), minors);
  return ideal_equal(M, I, MonomialOrder::grevlex(I.ring()->nvars()), budget);
}

Ideal quotient_by_linear(const Ideal& I, const Polynomial& linear_form,
                         std::vector<Polynomial>* carry) {
  const RingPtr& ring = I.ring();
  if (linear_form.is_zero() || linear_form.degree() != 1 || !linear_form.is_homogeneous())
    throw Error("quotient_by_linear needs a nonzero linear form");
  // pivot: latest-indexed variable with a nonzero coefficient
  int pivot = -1;
  Scalar pc = Scalar::zero(ring->field());
  for (const auto& [m, c] : linear_form.terms())
    for (int i = 0; i < ring->nvars(); ++i)
      if (m.exp(i) == 1 && i > pivot) {
        pivot = i;
        pc = c;
      }
  std::vector<VarInfo> vars;
  for (int i = 0; i < ring->nvars(); ++i)
    if (i != pivot) vars.push_back(ring->var(i));
  RingPtr target = RingContext::custom(ring->field(), std::move(vars));
  // v_pivot := v_pivot - theta / pc  (so theta maps to zero)
  std::vector<Polynomial> images;
  for (int i = 0; i < ring->nvars(); ++i) {
    if (i == pivot) {
      Polynomial img = Polynomial::zero(target);
      for (const auto& [m, c] : linear_form.terms())
        for (int v = 0; v < ring->nvars(); ++v)
          if (m.exp(v) == 1 && v != pivot) {
            int tv = target->index_of(ring->var(v).name);
            img = img - Polynomial::variable(target, tv).scaled(c / pc);
          }
      images.push_back(std::move(img));
    } else {
      images.push_back(Polynomial::variable(target, target->index_of(ring->var(i).name)));
    }
  }
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) {
    Polynomial h = g.substitute(target, images);
    if (!h.is_zero()) gens.push_back(std::move(h));
  }
  if (carry)
    for (auto& p : *carry) p = p.substitute(target, images);
  return Ideal(target, std::move(gens));
}

PerfectReport is_perfect(const Ideal& I, PerfectStrategy strategy, uint64_t seed,
                         const ResolveOptions& opts) {
  PerfectReport rep;
  auto hs = hilbert_series(I, opts.budget);
  rep.dim = hs.dim;
  rep.codim = hs.codim;
  if (strategy == PerfectStrategy::Auto)
    strategy = (hs.codim <= 9 && I.ring()->nvars() <= 13) ? PerfectStrategy::Resolution
                                                          : PerfectStrategy::LinearSection;
  if (strategy == PerfectStrategy::Resolution) {
    auto bt = betti_table(I, opts);
    rep.pd = bt.pd();
    rep.perfect = rep.pd == rep.codim;
    rep.route = "resolution";
    return rep;
  }
  // linear-section route: cut with dim-many linear forms; for a linear system
  // of parameters, colength >= multiplicity with equality iff Cohen-Macaulay.
  uint64_t state = seed;
  auto next = [&]() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  int tries = 0;
  for (int attempt = 0; attempt < 3; ++attempt) {
    ++tries;
    Ideal J = I;
    bool degenerate = false;
    for (int cut = 0; cut < hs.dim; ++cut) {
      const RingPtr& r = J.ring();
      Polynomial theta = Polynomial::variable(r, r->nvars() - 1);
      for (int v = 0; v + 1 < r->nvars(); ++v) {
        long c;
        if (r->field().is_rational())
          c = static_cast<long>(next() % 41) - 20;
        else
          c = static_cast<long>(next() % r->field().modulus());
        theta = theta + Polynomial::variable(r, v).scaled(Scalar::from_long(c, r->field()));
      }
      J = quotient_by_linear(J, theta);
    }
    auto qhs = hilbert_series(J, opts.budget);
    if (qhs.dim != 0) {
      degenerate = true;  // not a system of parameters; resample
      continue;
    }
    (void)degenerate;
    // dim 0: the series is a polynomial and its value at 1 is the colength
    mpz_class colength = qhs.multiplicity();
    rep.perfect = colength == hs.multiplicity();
    rep.route = "linear-section(tries=" + std::to_string(tries) + ")";
    return rep;
  }
  rep.perfect = false;
  rep.route = "linear-section(no parameter system found, tries=" + std::to_string(tries) + ")";
  return rep;
}

}  // namespace blowup

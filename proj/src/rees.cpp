#include "blowup/rees.hpp"

#include <algorithm>

#include "detail/fields.hpp"
#include "detail/linalg.hpp"

namespace blowup {

std::string case_name(CaseKind k) {
  switch (k) {
    case CaseKind::Binomial:
      return "binomial";
    case CaseKind::MixedColumns:
      return "d<2k";
    case CaseKind::MixedRows:
      return "d>=2k";
  }
  return "?";
}

int asymptotic_threshold(int s) { return std::max(4, s + 1); }

CoefficientTensors coefficient_tensors(const PresentationMatrix& L, const RingPtr& wring,
                                       GammaSplitting split) {
  CoefficientTensors T;
  const FieldContext& f = wring->field();
  if (split == GammaSplitting::Symmetric && !f.is_rational() && f.modulus() == 2)
    throw Error("symmetric gamma splitting needs characteristic != 2");
  auto lin_coeffs = [&](const Polynomial& e) {
    std::array<Scalar, 3> lam = {Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
    for (const auto& [m, c] : e.terms())
      for (int i = 0; i < 3; ++i)
        if (m.exp(i) == 1 && m.degree() == 1) lam[i] = c;
    return lam;
  };
  auto quad_coeffs = [&](const Polynomial& e) {
    std::array<std::array<Scalar, 3>, 3> g;
    for (auto& row : g) row = {Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
    Scalar half = f.is_rational() ? Scalar::rational(mpq_class(1, 2))
                                  : Scalar::from_long(2, f).inverse();
    for (const auto& [m, c] : e.terms()) {
      int i = -1, h = -1;
      for (int v = 0; v < 3; ++v) {
        if (m.exp(v) == 2) i = h = v;
        if (m.exp(v) == 1) (i < 0 ? i : h) = v;
      }
      if (i == h) {
        g[i][i] = c;
      } else if (split == GammaSplitting::Symmetric) {
        g[i][h] = c * half;
        g[h][i] = c * half;
      } else {
        if (i > h) std::swap(i, h);
        g[i][h] = c;  // all weight on i <= h
      }
    }
    return g;
  };
  // classify rows by degree of their entries against the column labels
  for (int r = 0; r < L.rows; ++r) {
    std::vector<std::array<Scalar, 3>> lam_f, lam_g;
    std::vector<std::array<std::array<Scalar, 3>, 3>> gam_f;
    bool has_quadric = false;
    for (int c = 0; c < L.cols; ++c) {
      const Polynomial& e = L.entry[r][c];
      int want = L.row_degrees[r] - L.col_degrees[c];
      if (want != 1 && want != 2)
        throw Error("presentation entry of unexpected degree " + std::to_string(want));
      if (!e.is_zero() && (e.degree() != want || !e.is_homogeneous()))
        throw Error("presentation entry degree mismatch");
      if (want == 2) has_quadric = true;
    }
    for (int c = 0; c < L.cols; ++c) {
      const Polynomial& e = L.entry[r][c];
      int want = L.row_degrees[r] - L.col_degrees[c];
      if (want == 1) {
        if (has_quadric)
          lam_g.push_back(lin_coeffs(e));  // linear entry in a quadric row pairs with a G column
        else
          lam_f.push_back(lin_coeffs(e));
      } else {
        gam_f.push_back(quad_coeffs(e));
      }
    }
    if (has_quadric) {
      T.lam_y.push_back(std::move(lam_g));
      T.gam.push_back(std::move(gam_f));
    } else {
      T.lin_rows.push_back(std::move(lam_f));
    }
  }
  // reconstruction check: the tensors must reproduce every entry exactly
  auto w = [&](int i) { return Polynomial::variable(wring, i); };
  int lin_row = 0, quad_row = 0;
  for (int r = 0; r < L.rows; ++r) {
    bool has_quadric = false;
    for (int c = 0; c < L.cols; ++c)
      if (L.row_degrees[r] - L.col_degrees[c] == 2) has_quadric = true;
    int fcol = 0, gcol = 0;
    for (int c = 0; c < L.cols; ++c) {
      const Polynomial& e = L.entry[r][c];
      int want = L.row_degrees[r] - L.col_degrees[c];
      Polynomial rec = Polynomial::zero(wring);
      if (want == 1 && has_quadric) {
        for (int i = 0; i < 3; ++i) rec = rec + w(i).scaled(T.lam_y[quad_row][gcol][i]);
        ++gcol;
      } else if (want == 1) {
        for (int i = 0; i < 3; ++i) rec = rec + w(i).scaled(T.lin_rows[lin_row][fcol][i]);
        ++fcol;
      } else {
        for (int i = 0; i < 3; ++i)
          for (int h = 0; h < 3; ++h)
            rec = rec + (w(i) * w(h)).scaled(T.gam[quad_row][fcol][i][h]);
        ++fcol;
      }
      if (!(rec == e)) throw Error("coefficient tensor reconstruction failed");
    }
    if (has_quadric)
      ++quad_row;
    else
      ++lin_row;
  }
  return T;
}

namespace {

/// x_{ij} variable index in the Rees ring (column-major, 0-based i < 3, j).
int xvar(int i, int j) { return 3 + 3 * j + i; }

void expect(bool cond, const std::string& why) {
  if (!cond) throw InstanceRejected(why);
}

}  // namespace

CaseData build_case(const PointSet& X, GammaSplitting split, const GroebnerBudget& budget) {
  CaseData cd;
  cd.s = X.size();
  auto [d, k] = s_decomposition(cd.s);
  cd.d = d;
  cd.k = k;
  cd.kind = k == 0 ? CaseKind::Binomial
                   : (d < 2 * k ? CaseKind::MixedColumns : CaseKind::MixedRows);
  cd.wring = RingContext::w_ring(X.field());

  auto rep = genericity_report(X);
  expect(rep.generic_hf, "Hilbert function not generic");
  expect(rep.max_collinear <= d, std::to_string(rep.max_collinear) + " collinear points");
  auto hd = hilbert_data(X);
  int expected_sigma = k == 0 ? d : d + 1;
  expect(hd.sigma == expected_sigma, "sigma != expected value for the case");

  Ideal I = ideal_of_points(X);
  auto mingens = minimal_generators(I, -1, budget);
  int nF = k == 0 ? d + 1 : d - k + 1;
  int nG = k == 0 ? 0 : std::max(0, 2 * k - d);
  expect(static_cast<int>(mingens.size()) == nF + nG, "unexpected minimal generator count");
  for (int c = 0; c < nF; ++c) expect(mingens[c].first == d, "generator degree != d");
  for (int c = nF; c < nF + nG; ++c) expect(mingens[c].first == d + 1, "generator degree != d+1");
  cd.ncols = nF;

  PresentationMatrix L0;
  try {
    L0 = presentation_matrix(I, ResolveOptions{.budget = budget});
  } catch (const Error& e) {
    throw InstanceRejected(std::string("presentation: ") + e.what());
  }
  // expected row degrees: binomial d rows of degree d+1; d<2k: k rows of d+2;
  // d>=2k: d-2k rows of degree d+1 then k rows of degree d+2 (rows sorted asc)
  std::vector<int> expect_rows;
  if (k == 0)
    expect_rows.assign(d, d + 1);
  else if (d < 2 * k)
    expect_rows.assign(k, d + 2);
  else {
    expect_rows.assign(d - 2 * k, d + 1);
    expect_rows.insert(expect_rows.end(), k, d + 2);
  }
  expect(L0.row_degrees == expect_rows, "presentation row degrees fail the case table");

  // rearrange to the block layout: G columns first (d < 2k), quadric rows first (d >= 2k)
  cd.L.rows = L0.rows;
  cd.L.cols = L0.cols;
  std::vector<int> colperm, rowperm;
  for (int c = 0; c < L0.cols; ++c) colperm.push_back(c);
  if (cd.kind == CaseKind::MixedColumns) {
    colperm.clear();
    for (int c = nF; c < nF + nG; ++c) colperm.push_back(c);  // G columns first
    for (int c = 0; c < nF; ++c) colperm.push_back(c);
  }
  for (int r = 0; r < L0.rows; ++r) rowperm.push_back(r);
  if (cd.kind == CaseKind::MixedRows)
    std::stable_sort(rowperm.begin(), rowperm.end(),
                     [&](int a, int b) { return L0.row_degrees[a] > L0.row_degrees[b]; });
  for (int r : rowperm) {
    std::vector<Polynomial> row;
    for (int c : colperm) row.push_back(L0.entry[r][c]);
    cd.L.entry.push_back(std::move(row));
    cd.L.row_degrees.push_back(L0.row_degrees[r]);
  }
  for (int c : colperm) {
    cd.L.col_degrees.push_back(L0.col_degrees[c]);
    cd.L.gens.push_back(L0.gens[c]);
  }

  // regenerate the generators as the signed maximal minors of the layout
  for (int c = 0; c < cd.L.cols; ++c) {
    Polynomial minor = signed_maximal_minor(cd.L.entry, c, cd.wring);
    expect(!minor.is_zero(), "vanishing maximal minor");
    expect(minor.degree() == cd.L.col_degrees[c], "minor degree mismatch");
    if (cd.L.col_degrees[c] == d + 1 && k > 0)
      cd.G.push_back(minor);
    else
      cd.F.push_back(minor);
  }
  expect(static_cast<int>(cd.F.size()) == nF && static_cast<int>(cd.G.size()) == nG,
         "minor degree split mismatch");
  {
    Ideal M(cd.wring, [&] {
      std::vector<Polynomial> all = cd.F;
      all.insert(all.end(), cd.G.begin(), cd.G.end());
      return all;
    }());
    expect(ideal_equal(M, I, MonomialOrder::grevlex(3), budget),
           "signed minors do not regenerate the ideal");
  }

  cd.tensors = coefficient_tensors(cd.L, cd.wring, split);
  cd.rees = RingContext::rees_ring(X.field(), cd.ncols, nG, false);
  return cd;
}

SymbolMatrix build_M(const CaseData& cd) {
  if (cd.kind != CaseKind::Binomial) throw Error("build_M applies to the binomial case");
  return build_X(cd);
}

SymbolMatrix build_X(const CaseData& cd) {
  SymbolMatrix M;
  M.rows = 3;
  M.cols = cd.ncols + 1;
  for (int i = 0; i < 3; ++i) {
    std::vector<Polynomial> row;
    row.push_back(Polynomial::variable(cd.rees, i));  // w column
    for (int j = 0; j < cd.ncols; ++j) row.push_back(Polynomial::variable(cd.rees, xvar(i, j)));
    M.e.push_back(std::move(row));
  }
  return M;
}

SymbolMatrix build_B(const CaseData& cd) {
  if (cd.k < 1) throw Error("build_B needs k >= 1");
  SymbolMatrix B;
  B.rows = cd.k;
  B.cols = 3;
  int nG = static_cast<int>(cd.G.size());
  for (int u = 0; u < cd.k; ++u) {
    std::vector<Polynomial> row;
    for (int i = 0; i < 3; ++i) {
      Polynomial b = Polynomial::zero(cd.rees);
      for (int l = 0; l < nG; ++l) {
        int yv = 3 + 3 * cd.ncols + l;
        b = b + Polynomial::variable(cd.rees, yv).scaled(cd.tensors.lam_y[u][l][i]);
      }
      for (int j = 0; j < cd.ncols; ++j)
        for (int h = 0; h < 3; ++h)
          b = b + Polynomial::variable(cd.rees, xvar(h, j)).scaled(cd.tensors.gam[u][j][i][h]);
      row.push_back(std::move(b));
    }
    B.e.push_back(std::move(row));
  }
  // identity: sum_i b_ui w_i maps to sum_l L_ul G_l + sum_j Q_uj F_j = 0
  for (int u = 0; u < cd.k; ++u) {
    Polynomial acc = Polynomial::zero(cd.rees);
    for (int i = 0; i < 3; ++i) acc = acc + B.e[u][i] * Polynomial::variable(cd.rees, i);
    if (!graph_substitution(acc, cd).is_zero()) throw Error("B row identity failed");
  }
  return B;
}

std::vector<Polynomial> two_by_two_minors(const SymbolMatrix& m) {
  std::vector<Polynomial> out;
  for (int i1 = 0; i1 < m.rows; ++i1)
    for (int i2 = i1 + 1; i2 < m.rows; ++i2)
      for (int j1 = 0; j1 < m.cols; ++j1)
        for (int j2 = j1 + 1; j2 < m.cols; ++j2)
          out.push_back(m.e[i1][j1] * m.e[i2][j2] - m.e[i1][j2] * m.e[i2][j1]);
  return out;
}

std::vector<Polynomial> three_by_three_minors(const SymbolMatrix& m) {
  std::vector<Polynomial> out;
  if (m.cols != 3) throw Error("three_by_three_minors expects 3 columns");
  const RingPtr& ring = m.e[0][0].ring();
  for (int r1 = 0; r1 < m.rows; ++r1)
    for (int r2 = r1 + 1; r2 < m.rows; ++r2)
      for (int r3 = r2 + 1; r3 < m.rows; ++r3)
        out.push_back(poly_det({m.e[r1], m.e[r2], m.e[r3]}, ring));
  return out;
}

std::vector<Polynomial> linear_relations(const CaseData& cd) {
  std::vector<Polynomial> out;
  for (const auto& row : cd.tensors.lin_rows) {
    Polynomial r = Polynomial::zero(cd.rees);
    for (int j = 0; j < cd.ncols; ++j)
      for (int i = 0; i < 3; ++i)
        r = r + Polynomial::variable(cd.rees, xvar(i, j)).scaled(row[j][i]);
    out.push_back(std::move(r));
  }
  int expected = cd.kind == CaseKind::Binomial ? cd.d
                 : cd.kind == CaseKind::MixedRows ? cd.d - 2 * cd.k
                                                  : 0;
  if (static_cast<int>(out.size()) != expected)
    throw InstanceRejected("linear relation count " + std::to_string(out.size()) +
                           " != " + std::to_string(expected));
  // linear independence of the relation forms
  if (!out.empty()) {
    detail::with_field(cd.rees->field(), [&](auto f) {
      using F = decltype(f);
      detail::Echelon<F> ech(f);
      for (const auto& r : out) {
        detail::SpVec<F> v;
        for (const auto& [m, c] : r.terms())
          for (int var = 0; var < cd.rees->nvars(); ++var)
            if (m.exp(var)) v.t.emplace_back(var, f.from_scalar(c));
        std::sort(v.t.begin(), v.t.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (!ech.insert(v)) throw InstanceRejected("dependent linear relations");
      }
    });
  }
  // each relation vanishes under the graph substitution
  for (const auto& r : out)
    if (!graph_substitution(r, cd).is_zero()) throw Error("relation fails the substitution check");
  return out;
}

GeneratorSet build_J(const CaseData& cd) {
  GeneratorSet g;
  SymbolMatrix Xm = build_X(cd);
  SymbolMatrix B = build_B(cd);
  for (auto& p : three_by_three_minors(B)) {
    g.all.push_back(std::move(p));
    g.provenance["minor-of-B"]++;
  }
  for (auto& p : two_by_two_minors(Xm)) {
    g.all.push_back(std::move(p));
    g.provenance["minor-of-X"]++;
  }
  for (int u = 0; u < B.rows; ++u)
    for (int c = 0; c < Xm.cols; ++c) {
      Polynomial e = Polynomial::zero(cd.rees);
      for (int i = 0; i < 3; ++i) e = e + B.e[u][i] * Xm.e[i][c];
      g.all.push_back(std::move(e));
      g.provenance["entry-of-BX"]++;
    }
  if (!g.provenance.count("minor-of-B")) g.provenance["minor-of-B"] = 0;
  return g;
}

GeneratorSet determinantal_generators(const CaseData& cd) {
  GeneratorSet g;
  if (cd.kind == CaseKind::Binomial) {
    SymbolMatrix M = build_M(cd);
    for (auto& p : two_by_two_minors(M)) {
      g.all.push_back(std::move(p));
      g.provenance["minor-of-M"]++;
    }
    for (auto& r : linear_relations(cd)) {
      g.all.push_back(std::move(r));
      g.provenance["linear-relation"]++;
    }
  } else {
    g = build_J(cd);
    if (cd.kind == CaseKind::MixedRows) {
      for (auto& r : linear_relations(cd)) {
        g.all.push_back(std::move(r));
        g.provenance["linear-relation"]++;
      }
    } else {
      g.provenance["linear-relation"] = 0;
    }
  }
  // containment: every predicted generator vanishes on the graph
  for (const auto& p : g.all)
    if (!graph_substitution(p, cd).is_zero())
      throw Error("predicted generator fails the graph substitution");
  return g;
}

Polynomial graph_substitution(const Polynomial& p, const CaseData& cd) {
  std::vector<Polynomial> images;
  for (int i = 0; i < 3; ++i) images.push_back(Polynomial::variable(cd.wring, i));
  for (int j = 0; j < cd.ncols; ++j)
    for (int i = 0; i < 3; ++i)
      images.push_back(Polynomial::variable(cd.wring, i) * cd.F[j]);
  for (const auto& gl : cd.G) images.push_back(gl);
  if (p.ring()->nvars() != static_cast<int>(images.size()))
    throw ContextMismatch("graph substitution ring size");
  return p.substitute(cd.wring, images);
}

std::vector<Polynomial> rees_targets(const CaseData& cd) {
  std::vector<Polynomial> targets;
  for (int j = 0; j < cd.ncols; ++j)
    for (int i = 0; i < 3; ++i)
      targets.push_back(Polynomial::variable(cd.wring, i) * cd.F[j]);
  for (const auto& g : cd.G) targets.push_back(g);
  return targets;
}

Ideal rees_via_elimination(const CaseData& cd, const GroebnerBudget& budget) {
  return kernel_of_map(rees_targets(cd), cd.rees, budget);
}

Ideal rees_via_elimination(const PointSet& X, int t, const GroebnerBudget& budget) {
  auto hd = hilbert_data(X);
  if (t < hd.alpha) throw Error("t below alpha: the graded piece is zero");
  auto [d, k] = s_decomposition(X.size());
  if (t == d + 1) {
    try {
      CaseData cd = build_case(X, GammaSplitting::Symmetric, budget);
      return rees_via_elimination(cd, budget);
    } catch (const InstanceRejected&) {
      // fall through to the plain basis coordinates
    }
  }
  auto gp = graded_piece(X, t);
  auto ambient = RingContext::basis_ring(X.field(), static_cast<int>(gp.basis.size()), false);
  return kernel_of_map(gp.basis, ambient, budget);
}

BigradedGenerators bigraded_minimal_generators(const Ideal& K, const GroebnerBudget& budget) {
  BigradedGenerators out;
  const RingPtr& ring = K.ring();
  auto ord = MonomialOrder::grevlex(ring->nvars());
  const auto& gb = K.groebner_basis(ord, budget);
  if (gb.empty()) return out;
  std::vector<Polynomial> sorted = gb;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.degree() < b.degree();
  });
  std::vector<Polynomial> ugens;        // accepted minimal generators
  std::vector<Polynomial> ugb;          // Groebner basis of their span
  size_t pos = 0;
  while (pos < sorted.size()) {
    int deg = sorted[pos].degree();
    size_t end = pos;
    while (end < sorted.size() && sorted[end].degree() == deg) ++end;
    // residues of this degree batch against the ideal generated so far
    std::vector<std::pair<Polynomial, Polynomial>> residues;  // (original, residue)
    for (size_t i = pos; i < end; ++i) {
      Polynomial r = ugb.empty() ? sorted[i] : normal_form(sorted[i], ugb, ord);
      if (!r.is_zero()) residues.emplace_back(sorted[i], std::move(r));
    }
    if (!residues.empty()) {
      // independent residues modulo the lower part = minimal generators
      detail::with_field(ring->field(), [&](auto f) {
        using F = decltype(f);
        std::map<Monomial, int, decltype([](const Monomial& a, const Monomial& b) {
                   return Monomial::canonical_cmp(a, b) > 0;
                 })>
            idx;
        for (const auto& [g, r] : residues)
          for (const auto& [m, c] : r.terms())
            if (!idx.count(m)) {
              int next = static_cast<int>(idx.size());
              idx[m] = next;
            }
        detail::Echelon<F> ech(f);
        for (const auto& [g, r] : residues) {
          detail::SpVec<F> v;
          for (const auto& [m, c] : r.terms()) v.t.emplace_back(idx.at(m), f.from_scalar(c));
          std::sort(v.t.begin(), v.t.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
          if (ech.insert(v)) {
            auto bd = g.bidegree();
            out.gens.emplace_back(bd, g);
            out.counts[bd]++;
            out.max_total_degree = std::max(out.max_total_degree, deg);
            ugens.push_back(g);
          }
        }
      });
      ugb = buchberger(ring, ugens, ord, budget);
    }
    pos = end;
  }
  return out;
}

bool syzygy_slice_agreement(const std::vector<Polynomial>& targets, const Ideal& K, int max_wdeg,
                            const GroebnerBudget& budget) {
  const RingPtr& ring = K.ring();
  const RingPtr wring = RingContext::w_ring(ring->field());
  int m = static_cast<int>(targets.size());
  int tdeg = targets.empty() ? 0 : targets[0].degree();
  auto ord = MonomialOrder::grevlex(ring->nvars());
  const auto& gb = K.groebner_basis(ord, budget);
  std::vector<Monomial> lms;
  for (const auto& g : gb) lms.push_back(lead_monomial(g, ord));
  for (int a = 0; a <= max_wdeg; ++a) {
    // side 1: standard-monomial count of the (a,1) slice of K
    long total = 0, standard = 0;
    auto wmonos = degree_monomials(wring, a);
    for (const auto& wm : wmonos)
      for (int c = 0; c < m; ++c) {
        Monomial mm(ring->nvars());
        for (int i = 0; i < 3; ++i) mm.set_exp(i, wm.exp(i));
        mm.set_exp(3 + c, 1);
        ++total;
        bool divisible = false;
        for (const auto& lm : lms)
          if (lm.divides(mm)) {
            divisible = true;
            break;
          }
        if (!divisible) ++standard;
      }
    long k_slice = total - standard;
    // side 2: syzygies of the targets in w-degree a by evaluation linear algebra
    long syz = detail::with_field(ring->field(), [&](auto f) -> long {
      using F = decltype(f);
      auto rows_monos = degree_monomials(wring, a + tdeg);
      std::map<Monomial, int, decltype([](const Monomial& x, const Monomial& y) {
                 return Monomial::canonical_cmp(x, y) > 0;
               })>
          ridx;
      for (int i = 0; i < static_cast<int>(rows_monos.size()); ++i) ridx[rows_monos[i]] = i;
      std::vector<detail::SpVec<F>> rows(rows_monos.size());
      int col = 0;
      for (int c = 0; c < m; ++c)
        for (const auto& wm : wmonos) {
          Polynomial prod = Polynomial::term(wring, wm, Scalar::one(ring->field())) * targets[c];
          for (const auto& [mm, cc] : prod.terms())
            rows[ridx.at(mm)].t.emplace_back(col, f.from_scalar(cc));
          ++col;
        }
      auto rr = detail::sparse_rref(f, std::move(rows), col, false);
      return col - rr.rank;
    });
    if (k_slice != syz) return false;
  }
  return true;
}

BettiComparison binomial_betti_comparison(const CaseData& cd, const Ideal& K,
                                          const ResolveOptions& opts) {
  if (cd.kind != CaseKind::Binomial) throw Error("betti comparison applies to the binomial case");
  BettiComparison out;
  // split off the d linear relations by substitution, carrying the rest through
  Ideal J = K;
  auto rels = linear_relations(cd);
  while (!rels.empty()) {
    Polynomial rel = rels.front();
    rels.erase(rels.begin());
    if (rel.is_zero()) continue;
    J = quotient_by_linear(J, rel, &rels);
  }
  out.rees_after_split = betti_table(J, opts);
  // generic 3 x (d+2) matrix of fresh indeterminates
  auto R = RingContext::generic_ring(cd.rees->field(), 3 * (cd.d + 2));
  SymbolMatrix G;
  G.rows = 3;
  G.cols = cd.d + 2;
  for (int i = 0; i < 3; ++i) {
    std::vector<Polynomial> row;
    for (int j = 0; j < G.cols; ++j) row.push_back(Polynomial::variable(R, i * G.cols + j));
    G.e.push_back(std::move(row));
  }
  Ideal GI(R, two_by_two_minors(G));
  out.generic_minors = betti_table(GI, opts);
  out.match = out.rees_after_split == out.generic_minors;
  out.pd_full = out.rees_after_split.pd() + cd.d;
  return out;
}

}  // namespace blowup

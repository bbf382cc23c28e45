#include "blowup/points.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace blowup {

namespace {

uint64_t splitmix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t uniform_below(uint64_t& state, uint64_t n) {
  // rejection sampling, fully specified for reproducibility
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t v;
  do {
    v = splitmix64(state);
  } while (v >= limit);
  return v % n;
}

std::array<Scalar, 3> normalize_point(std::array<Scalar, 3> p) {
  int first = -1;
  for (int i = 0; i < 3 && first < 0; ++i)
    if (!p[i].is_zero()) first = i;
  if (first < 0) throw Error("point with all coordinates zero");
  Scalar inv = p[first].inverse();
  for (auto& c : p) c = c * inv;
  return p;
}

bool points_equal(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b) {
  return a[0] == b[0] && a[1] == b[1] && a[2] == b[2];
}

Scalar det3(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b,
            const std::array<Scalar, 3>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::pair<int, int> s_decomposition(int s) {
  int d = 1;
  while (binom(d + 2, 2) <= s) ++d;
  int k = s - static_cast<int>(binom(d + 1, 2));
  return {d, k};
}

PointSet PointSet::from_coords(FieldContext field,
                               const std::vector<std::array<Scalar, 3>>& coords,
                               std::string provenance) {
  if (coords.empty()) throw Error("empty point set");
  PointSet X(field);
  X.provenance_ = std::move(provenance);
  for (auto p : coords) {
    for (const auto& c : p)
      if (!(c.context() == field)) throw ContextMismatch("point coordinate field");
    p = normalize_point(std::move(p));
    for (const auto& q : X.pts_)
      if (points_equal(p, q)) throw Error("duplicate point after normalization");
    X.pts_.push_back(std::move(p));
  }
  return X;
}

PointSet PointSet::builtin(const std::string& name, FieldContext f) {
  auto S = [&](long v) { return Scalar::from_long(v, f); };
  std::vector<std::array<Scalar, 3>> pts;
  if (name == "coordinate-triangle") {
    pts = {{S(1), S(0), S(0)}, {S(0), S(1), S(0)}, {S(0), S(0), S(1)}};
  } else if (name == "frame-4") {
    pts = {{S(1), S(0), S(0)}, {S(0), S(1), S(0)}, {S(0), S(0), S(1)}, {S(1), S(1), S(1)}};
  } else if (name == "collinear-4") {
    // three points on the line w3 = 0 plus one off it
    pts = {{S(1), S(0), S(0)}, {S(0), S(1), S(0)}, {S(1), S(1), S(0)}, {S(0), S(0), S(1)}};
  } else {
    throw Error("unknown built-in point set '" + name + "'");
  }
  return from_coords(f, pts, "builtin:" + name);
}

PointSet PointSet::random(int s, uint64_t seed, uint32_t p, const Constraints& cons,
                          int retry_budget) {
  FieldContext f = FieldContext::prime(p);
  // |P^2(F_p)| = p^2 + p + 1 points must suffice
  unsigned long long npoints =
      static_cast<unsigned long long>(p) * p + p + 1;
  if (static_cast<unsigned long long>(s) > npoints)
    throw Error("s exceeds the number of points of the projective plane over F_" +
                std::to_string(p));
  auto [d, k] = s_decomposition(s);
  uint64_t state = seed;
  for (int attempt = 0; attempt <= retry_budget; ++attempt) {
    PointSet X(f);
    X.provenance_ = "random";
    X.seed_ = seed;
    X.retries_ = attempt;
    int guard = 0;
    while (X.size() < s) {
      if (++guard > 64 * s + 1024) break;  // duplicate-heavy small fields
      std::array<Scalar, 3> pt = {Scalar::from_long(static_cast<long>(uniform_below(state, p)), f),
                                  Scalar::from_long(static_cast<long>(uniform_below(state, p)), f),
                                  Scalar::from_long(static_cast<long>(uniform_below(state, p)), f)};
      if (pt[0].is_zero() && pt[1].is_zero() && pt[2].is_zero()) continue;
      pt = normalize_point(std::move(pt));
      bool dup = false;
      for (const auto& q : X.pts_) dup = dup || points_equal(pt, q);
      if (!dup) X.pts_.push_back(std::move(pt));
    }
    if (X.size() < s) continue;
    if (cons.generic_hf || cons.no_collinear) {
      auto rep = genericity_report(X);
      if (cons.generic_hf && !rep.generic_hf) continue;
      if (cons.no_collinear && rep.max_collinear > d) continue;
    }
    return X;
  }
  throw Error("random point retry budget exhausted (s=" + std::to_string(s) + ")");
}

std::string PointSet::to_file() const {
  std::ostringstream os;
  os << field_.str() << "\n";
  for (const auto& p : pts_) os << p[0].str() << ", " << p[1].str() << ", " << p[2].str() << "\n";
  return os.str();
}

PointSet PointSet::from_file(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty point file");
  FieldContext f = FieldContext::parse(line);
  std::vector<std::array<Scalar, 3>> pts;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::array<Scalar, 3> p = {Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
    std::istringstream ls(line);
    std::string tok;
    for (int i = 0; i < 3; ++i) {
      if (!std::getline(ls, tok, ',')) throw ParseError("point line needs 3 coordinates");
      tok.erase(0, tok.find_first_not_of(" \t"));
      tok.erase(tok.find_last_not_of(" \t") + 1);
      p[i] = Scalar::parse(tok, f);
    }
    pts.push_back(std::move(p));
  }
  return from_coords(f, pts, "file");
}

ExactMatrix evaluation_matrix(const PointSet& X, int t) {
  if (t < 0) throw Error("negative degree");
  auto ring = RingContext::w_ring(X.field());
  auto monos = degree_monomials(ring, t);
  ExactMatrix M(X.size(), static_cast<int>(monos.size()), X.field());
  for (int i = 0; i < X.size(); ++i) {
    const auto& P = X.point(i);
    for (size_t c = 0; c < monos.size(); ++c) {
      Scalar v = Scalar::one(X.field());
      for (int j = 0; j < 3; ++j)
        for (int e = 0; e < monos[c].exp(j); ++e) v = v * P[j];
      M.set(i, static_cast<int>(c), v);
    }
  }
  return M;
}

HilbertData hilbert_data(const PointSet& X) {
  HilbertData out;
  out.alpha = -1;
  out.sigma = -1;
  long prev = 0;
  for (int t = 0;; ++t) {
    long hf = evaluation_matrix(X, t).rref(false).rank;
    out.hf.push_back(hf);
    if (out.alpha < 0 && hf < binom(t + 2, 2)) out.alpha = t;
    if (out.sigma < 0 && hf - prev == 0) {
      out.sigma = t;
      break;
    }
    prev = hf;
    if (t > X.size() + 2) throw Error("sigma exceeds s, impossible for distinct points");
  }
  // sanity: sigma <= s for distinct points, and alpha appears by then
  if (out.sigma > X.size()) throw Error("sigma exceeds s");
  if (out.alpha < 0) throw Error("alpha not found below sigma");
  return out;
}

GradedPiece graded_piece(const PointSet& X, int t) {
  GradedPiece out;
  out.t = t;
  auto ring = RingContext::w_ring(X.field());
  auto monos = degree_monomials(ring, t);
  auto rr = evaluation_matrix(X, t).rref();
  for (const auto& v : rr.nullspace) {
    std::vector<std::pair<Monomial, Scalar>> ts;
    for (size_t c = 0; c < monos.size(); ++c)
      if (!v[c].is_zero()) ts.emplace_back(monos[c], v[c]);
    out.basis.push_back(Polynomial::from_terms(ring, std::move(ts)));
  }
  return out;
}

GenericityReport genericity_report(const PointSet& X) {
  GenericityReport rep;
  int s = X.size();
  auto [d, k] = s_decomposition(s);
  rep.d = d;
  rep.k = k;
  rep.generic_hf = true;
  for (int t = 0; t <= s; ++t) {
    long expect = std::min(binom(t + 2, 2), static_cast<long>(s));
    long got = evaluation_matrix(X, t).rref(false).rank;
    if (got != expect) {
      rep.generic_hf = false;
      break;
    }
    if (expect == s) break;  // stabilized generically; later degrees cannot drop
  }
  rep.max_collinear = s >= 2 ? 2 : 1;
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      int on_line = 2;
      for (int l = 0; l < s; ++l) {
        if (l == i || l == j) continue;
        if (det3(X.point(i), X.point(j), X.point(l)).is_zero()) ++on_line;
      }
      rep.max_collinear = std::max(rep.max_collinear, on_line);
    }
  return rep;
}

Ideal ideal_of_points(const PointSet& X, int up_to) {
  auto hd = hilbert_data(X);
  if (up_to < 0) up_to = hd.sigma + 1;
  auto ring = RingContext::w_ring(X.field());
  std::vector<Polynomial> gens;
  for (int t = hd.alpha; t <= up_to; ++t) {
    auto gp = graded_piece(X, t);
    for (auto& b : gp.basis) gens.push_back(std::move(b));
  }
  return Ideal(ring, std::move(gens));
}

}  // namespace blowup

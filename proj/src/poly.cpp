#include "blowup/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace blowup {

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.emplace_back(Monomial(ring->nvars()), c);
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  Polynomial p(ring);
  p.terms_.emplace_back(Monomial::variable(ring->nvars(), index),
                        Scalar::one(ring->field()));
  return p;
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Scalar& c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!ring_ || !o.ring_ || !ring_->same_layout(*o.ring_))
    throw ContextMismatch("polynomial rings differ");
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::pair<int, int> Polynomial::bidegree() const {
  if (is_zero()) throw Error("bidegree of zero polynomial");
  auto bideg_of = [&](const Monomial& m) {
    int a = 0, b = 0;
    for (int i = 0; i < ring_->nvars(); ++i) {
      a += m.exp(i) * ring_->var(i).bideg_w;
      b += m.exp(i) * ring_->var(i).bideg_x;
    }
    return std::pair<int, int>(a, b);
  };
  auto first = bideg_of(terms_[0].first);
  for (size_t k = 1; k < terms_.size(); ++k) {
    auto d = bideg_of(terms_[k].first);
    if (d != first) {
      Polynomial wa = term(ring_, terms_[0].first, terms_[0].second);
      Polynomial wb = term(ring_, terms_[k].first, terms_[k].second);
      throw NotBihomogeneous("witness terms " + wa.str() + " and " + wb.str());
    }
  }
  return first;
}

bool Polynomial::is_homogeneous() const {
  if (is_zero()) return true;
  int d = terms_[0].first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<std::pair<Monomial, Scalar>> ts) {
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    return Monomial::canonical_cmp(a.first, b.first) > 0;
  });
  Polynomial p(ring);
  for (auto& [m, c] : ts) {
    if (c.is_zero()) continue;
    if (!p.terms_.empty() && p.terms_.back().first == m) {
      Scalar s = p.terms_.back().second + c;
      if (s.is_zero())
        p.terms_.pop_back();
      else
        p.terms_.back().second = s;
    } else {
      p.terms_.emplace_back(m, c);
    }
  }
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = Monomial::canonical_cmp(terms_[i].first, o.terms_[j].first);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].second + o.terms_[j].second;
      if (!s.is_zero()) r.terms_.emplace_back(terms_[i].first, s);
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, -c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  std::vector<std::pair<Monomial, Scalar>> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) prod.emplace_back(m1 * m2, c1 * c2);
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [m, s] : terms_) r.terms_.emplace_back(m, s * c);
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(lead_coeff().inverse());
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
  if (!ring_->same_layout(*o.ring_)) return false;
  return terms_ == o.terms_;
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != ring_->nvars())
    throw Error("substitute: wrong image count");
  Polynomial acc = Polynomial::zero(target);
  // cache powers of each image
  std::vector<std::vector<Polynomial>> pows(images.size());
  auto power = [&](int i, int e) -> const Polynomial& {
    auto& ps = pows[i];
    if (ps.empty()) ps.push_back(Polynomial::constant(target, Scalar::one(target->field())));
    while (static_cast<int>(ps.size()) <= e) ps.push_back(ps.back() * images[i]);
    return ps[e];
  };
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(target, c);
    for (int i = 0; i < ring_->nvars(); ++i)
      if (m.exp(i)) t = t * power(i, m.exp(i));
    acc = acc + t;
  }
  return acc;
}

Polynomial Polynomial::lift(const RingPtr& bigger) const {
  if (bigger->nvars() < ring_->nvars()) throw ContextMismatch("lift into smaller ring");
  for (int i = 0; i < ring_->nvars(); ++i)
    if (bigger->var(i).name != ring_->var(i).name)
      throw ContextMismatch("lift: variable layout mismatch");
  Polynomial r(bigger);
  for (const auto& [m, c] : terms_) {
    Monomial mm(bigger->nvars());
    for (int i = 0; i < ring_->nvars(); ++i)
      if (m.exp(i)) mm.set_exp(i, m.exp(i));
    r.terms_.emplace_back(mm, c);
  }
  std::sort(r.terms_.begin(), r.terms_.end(), [](const auto& a, const auto& b) {
    return Monomial::canonical_cmp(a.first, b.first) > 0;
  });
  return r;
}

Polynomial Polynomial::project(const RingPtr& smaller) const {
  if (smaller->nvars() > ring_->nvars()) throw ContextMismatch("project into larger ring");
  for (int i = 0; i < smaller->nvars(); ++i)
    if (smaller->var(i).name != ring_->var(i).name)
      throw ContextMismatch("project: variable layout mismatch");
  Polynomial r(smaller);
  for (const auto& [m, c] : terms_) {
    for (int i = smaller->nvars(); i < ring_->nvars(); ++i)
      if (m.exp(i)) throw Error("project: variable " + ring_->var(i).name + " occurs");
    Monomial mm(smaller->nvars());
    for (int i = 0; i < smaller->nvars(); ++i)
      if (m.exp(i)) mm.set_exp(i, m.exp(i));
    r.terms_.emplace_back(mm, c);
  }
  std::sort(r.terms_.begin(), r.terms_.end(), [](const auto& a, const auto& b) {
    return Monomial::canonical_cmp(a.first, b.first) > 0;
  });
  return r;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != ring_->nvars())
    throw Error("evaluate: wrong point size");
  Scalar acc = Scalar::zero(ring_->field());
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < ring_->nvars(); ++i)
      for (int e = 0; e < m.exp(i); ++e) t = t * point[i];
    acc = acc + t;
  }
  return acc;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar a = c;
    if (first) {
      if (a.is_negative()) {
        out += "-";
        a = -a;
      }
    } else {
      if (a.is_negative()) {
        out += " - ";
        a = -a;
      } else {
        out += " + ";
      }
    }
    std::string mono;
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (!m.exp(i)) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->var(i).name;
      if (m.exp(i) > 1) mono += "^" + std::to_string(m.exp(i));
    }
    if (mono.empty())
      out += a.str();
    else if (a.is_one())
      out += mono;
    else
      out += a.str() + "*" + mono;
    first = false;
  }
  return out;
}

namespace {

// term := [coeff "*"] var ("^" exp)? ("*" var ("^" exp)?)*  |  coeff
std::pair<Monomial, Scalar> parse_term(const RingPtr& ring, const std::string& tok) {
  Monomial m(ring->nvars());
  Scalar c = Scalar::one(ring->field());
  bool saw_coeff = false, saw_var = false;
  size_t pos = 0;
  while (pos < tok.size()) {
    size_t star = tok.find('*', pos);
    std::string piece = tok.substr(pos, star == std::string::npos ? star : star - pos);
    pos = star == std::string::npos ? tok.size() : star + 1;
    if (piece.empty()) throw ParseError("empty factor in term '" + tok + "'");
    if (std::isdigit(static_cast<unsigned char>(piece[0])) || piece[0] == '-' ||
        piece[0] == '+') {
      if (saw_coeff || saw_var) throw ParseError("misplaced coefficient in '" + tok + "'");
      c = Scalar::parse(piece, ring->field());
      saw_coeff = true;
    } else {
      size_t caret = piece.find('^');
      std::string name = piece.substr(0, caret);
      int e = 1;
      if (caret != std::string::npos) {
        e = std::stoi(piece.substr(caret + 1));
        if (e < 0) throw ParseError("negative exponent in '" + tok + "'");
      }
      int idx = ring->index_of(name);
      if (idx < 0) throw ParseError("unknown variable '" + name + "'");
      m.set_exp(idx, m.exp(idx) + e);
      saw_var = true;
    }
  }
  if (!saw_coeff && !saw_var) throw ParseError("empty term");
  return {m, c};
}

}  // namespace

std::vector<Monomial> degree_monomials(const RingPtr& ring, int t) {
  std::vector<Monomial> out;
  int n = ring->nvars();
  std::vector<int> e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == n - 1) {
      e[i] = rem;
      Monomial mm(n);
      for (int j = 0; j < n; ++j) mm.set_exp(j, e[j]);
      out.push_back(mm);
      return;
    }
    for (int v = rem; v >= 0; --v) {
      e[i] = v;
      rec(i + 1, rem - v);
    }
  };
  if (t < 0) return out;
  rec(0, t);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return Monomial::canonical_cmp(a, b) > 0; });
  return out;
}

Polynomial Polynomial::parse(const RingPtr& ring, const std::string& text) {
  std::string s = text;
  if (s.empty()) throw ParseError("empty polynomial text");
  if (s == "0") return Polynomial::zero(ring);
  std::vector<std::pair<Monomial, Scalar>> ts;
  bool negate = false;
  size_t pos = 0;
  if (s[0] == '-') {
    negate = true;
    pos = 1;
  }
  while (pos < s.size()) {
    size_t plus = s.find(" + ", pos);
    size_t minus = s.find(" - ", pos);
    size_t cut = std::min(plus, minus);
    std::string tok = s.substr(pos, cut == std::string::npos ? cut : cut - pos);
    auto [m, c] = parse_term(ring, tok);
    ts.emplace_back(m, negate ? -c : c);
    if (cut == std::string::npos) break;
    negate = (cut == minus);
    pos = cut + 3;
  }
  return from_terms(ring, std::move(ts));
}

}  // namespace blowup

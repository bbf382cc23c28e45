#include <doctest.h>

#include <algorithm>

#include "blowup/groebner.hpp"

using namespace blowup;

namespace {
RingPtr QW() { return RingContext::w_ring(FieldContext::rationals()); }
Polynomial P(const RingPtr& r, const std::string& s) { return Polynomial::parse(r, s); }
std::vector<Polynomial> Ps(const RingPtr& r, std::initializer_list<std::string> ss) {
  std::vector<Polynomial> v;
  for (const auto& s : ss) v.push_back(P(r, s));
  return v;
}
}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("normal form examples") {
  auto R = QW();
  auto ord = MonomialOrder::grevlex(3);
  auto gb = buchberger(R, Ps(R, {"w1*w2", "w1*w3"}), ord);
  CHECK(normal_form(P(R, "w1*w2"), gb, ord).is_zero());
  CHECK(normal_form(P(R, "w1^2"), gb, ord) == P(R, "w1^2"));
  auto gb2 = buchberger(R, Ps(R, {"w2*w3"}), ord);
  CHECK(normal_form(P(R, "w2*w3 + w1"), gb2, ord) == P(R, "w1"));
}

TEST_CASE("buchberger: coordinate-triangle generators are already reduced") {
  auto R = QW();
  auto gens = Ps(R, {"w1*w2", "w1*w3", "w2*w3"});
  auto gb = buchberger(R, gens, MonomialOrder::grevlex(3));
  REQUIRE(gb.size() == 3);
  for (const auto& g : gens) CHECK(std::count(gb.begin(), gb.end(), g) == 1);
}

TEST_CASE("buchberger: linear cleanup") {
  auto R = QW();
  auto gb = buchberger(R, Ps(R, {"w1", "w1 + w2"}), MonomialOrder::grevlex(3));
  REQUIRE(gb.size() == 2);
  // ascending by leading monomial: w2 < w1 under grevlex
  CHECK(gb[0] == P(R, "w2"));
  CHECK(gb[1] == P(R, "w1"));
}

TEST_CASE("buchberger produces the S-polynomial completion") {
  auto R = QW();
  auto gb = buchberger(R, Ps(R, {"w1^2 - w2*w3", "w1*w2"}), MonomialOrder::grevlex(3));
  CHECK(std::count(gb.begin(), gb.end(), P(R, "w2^2*w3")) == 1);
}

TEST_CASE("reduced basis is unique under generator permutation and rescale") {
  auto R = RingContext::w_ring(FieldContext::prime(32003));
  auto gens = Ps(R, {"w1^2 - w2*w3", "w1*w2 - w3^2", "w2^2 - w1*w3"});
  auto perm = Ps(R, {"w1*w2 - w3^2", "w2^2 - w1*w3", "w1^2 - w2*w3"});
  for (auto& g : perm) g = g.scaled(Scalar::from_long(17, R->field()));
  auto ord = MonomialOrder::grevlex(3);
  auto a = buchberger(R, gens, ord);
  auto b = buchberger(R, perm, ord);
  CHECK(a == b);
  CHECK(ideal_equal(Ideal(R, gens), Ideal(R, perm), ord));
}

TEST_CASE("all S-polynomials of a reduced basis reduce to zero") {
  auto R = QW();
  auto ord = MonomialOrder::grevlex(3);
  auto gb = buchberger(R, Ps(R, {"w1^2 - w2*w3", "w1*w2", "w2^3 - w3^3"}), ord);
  for (size_t i = 0; i < gb.size(); ++i)
    for (size_t j = i + 1; j < gb.size(); ++j)
      CHECK(normal_form(s_polynomial(gb[i], gb[j], ord), gb, ord).is_zero());
}

TEST_CASE("membership iff zero normal form, with explicit cofactor members") {
  auto R = QW();
  auto ord = MonomialOrder::grevlex(3);
  auto gens = Ps(R, {"w1^2 - w2*w3", "w1*w2"});
  Ideal I(R, gens);
  // constructed member: w3*g0 + (w1-w2)*g1
  auto member = P(R, "w3") * gens[0] + P(R, "w1 - w2") * gens[1];
  CHECK(I.contains(member, ord));
  CHECK(!I.contains(P(R, "w1"), ord));
}

TEST_CASE("eliminate: implicitization of a weighted parametrization") {
  // <x11 - t*w1^2, x12 - t*w2^2>, eliminate t -> <w2^2*x11 - w1^2*x12>
  auto R = RingContext::basis_ring(FieldContext::rationals(), 2, true);
  auto I = Ideal(R, Ps(R, {"x11 - t*w1^2", "x12 - t*w2^2"}));
  auto E = eliminate_suffix(I, R->t_index());
  auto target = RingContext::basis_ring(FieldContext::rationals(), 2, false);
  REQUIRE(E.generators().size() == 1);
  CHECK(E.generators()[0] == Polynomial::parse(target, "w2^2*x11 - w1^2*x12").monic());
}

TEST_CASE("eliminate: shared variable") {
  // eliminate y from <y - w1, y - w2> -> <w1 - w2>
  auto base = RingContext::w_ring(FieldContext::rationals());
  auto R = RingContext::with_elim_var(base);
  auto I = Ideal(R, Ps(R, {"t - w1", "t - w2"}));
  auto E = eliminate_suffix(I, R->t_index());
  REQUIRE(E.generators().size() == 1);
  CHECK(E.generators()[0] == Polynomial::parse(base, "w1 - w2"));
}

TEST_CASE("eliminate: no consequence means zero ideal") {
  auto R = RingContext::basis_ring(FieldContext::rationals(), 1, true);
  auto I = Ideal(R, Ps(R, {"x11 - t"}));
  auto E = eliminate_suffix(I, R->t_index());
  CHECK(E.is_zero_ideal());
}

TEST_CASE("kernel of map: single target has no relations") {
  auto W = QW();
  auto ambient = RingContext::basis_ring(FieldContext::rationals(), 1, false);
  auto K = kernel_of_map({P(W, "w1*w2")}, ambient);
  CHECK(K.is_zero_ideal());
}

TEST_CASE("kernel of map: coordinate triangle degree-2 system") {
  auto W = QW();
  auto ambient = RingContext::basis_ring(FieldContext::rationals(), 3, false);
  auto K = kernel_of_map(Ps(W, {"w2*w3", "w1*w3", "w1*w2"}), ambient);
  auto ord = MonomialOrder::grevlex(ambient->nvars());
  CHECK(K.contains(Polynomial::parse(ambient, "w1*x11 - w2*x12"), ord));
  CHECK(K.contains(Polynomial::parse(ambient, "w2*x12 - w3*x13"), ord));
}

TEST_CASE("kernel of map: Veronese conic") {
  auto W = QW();
  auto ambient = RingContext::basis_ring(FieldContext::rationals(), 3, false);
  auto K = kernel_of_map(Ps(W, {"w1^2", "w1*w2", "w2^2"}), ambient);
  auto expected = Ideal(ambient, {Polynomial::parse(ambient, "x11*x13 - x12^2"),
                                  Polynomial::parse(ambient, "w2*x11 - w1*x12"),
                                  Polynomial::parse(ambient, "w2*x12 - w1*x13")});
  CHECK(ideal_equal(K, expected, MonomialOrder::grevlex(ambient->nvars())));
}

TEST_CASE("elimination soundness: substitution kills every kernel generator") {
  auto W = QW();
  auto targets = Ps(W, {"w1^2", "w1*w2", "w2^2"});
  auto ambient = RingContext::basis_ring(FieldContext::rationals(), 3, false);
  auto K = kernel_of_map(targets, ambient);
  auto ext = RingContext::with_elim_var(RingContext::w_ring(FieldContext::rationals()));
  auto tv = Polynomial::variable(ext, ext->t_index());
  std::vector<Polynomial> images;
  for (int i = 0; i < 3; ++i) images.push_back(Polynomial::variable(ext, i));
  for (const auto& f : targets) images.push_back(tv * f.lift(ext));
  for (const auto& g : K.generators()) CHECK(g.substitute(ext, images).is_zero());
}

TEST_CASE("ideal equality distinguishes powers") {
  auto R = QW();
  auto ord = MonomialOrder::grevlex(3);
  CHECK(!ideal_equal(Ideal(R, Ps(R, {"w1"})), Ideal(R, Ps(R, {"w1^2"})), ord));
}

TEST_CASE("kernel of map rejects unequal target degrees") {
  auto W = QW();
  auto ambient = RingContext::basis_ring(FieldContext::rationals(), 2, false);
  CHECK_THROWS_AS(kernel_of_map(Ps(W, {"w1", "w1*w2"}), ambient), Error);
}

TEST_CASE("budget exceeded is a distinct error") {
  auto R = QW();
  GroebnerBudget tiny;
  tiny.max_steps = 1;
  CHECK_THROWS_AS(
      buchberger(R, Ps(R, {"w1^3 - w2*w3^2", "w1*w2^2 - w3^3", "w2^4 - w1^2*w3^2"}),
                 MonomialOrder::grevlex(3), tiny),
      BudgetExceeded);
}

}  // TEST_SUITE

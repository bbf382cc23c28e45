#include <doctest.h>

#include "blowup/ring.hpp"

using namespace blowup;

namespace {
Monomial mono(const RingPtr& r, std::initializer_list<int> exps) {
  Monomial m(r->nvars());
  int i = 0;
  for (int e : exps) m.set_exp(i++, e);
  return m;
}
}  // namespace

TEST_SUITE("ring") {

TEST_CASE("w-ring layout") {
  auto R = RingContext::w_ring(FieldContext::rationals());
  CHECK(R->nvars() == 3);
  CHECK(R->var(0).name == "w1");
  CHECK(R->index_of("w3") == 2);
  CHECK(R->index_of("x11") == -1);
  CHECK(R->t_index() == -1);
}

TEST_CASE("rees ring layout is column-major with t last") {
  auto R = RingContext::rees_ring(FieldContext::rationals(), 3, 1, true);
  // w1 w2 w3 x11 x21 x31 x12 x22 x32 x13 x23 x33 y1 t
  CHECK(R->nvars() == 14);
  CHECK(R->var(3).name == "x11");
  CHECK(R->var(4).name == "x21");
  CHECK(R->var(6).name == "x12");
  CHECK(R->var(12).name == "y1");
  CHECK(R->t_index() == 13);
  CHECK(R->var(3).bideg_x == 1);
  CHECK(R->var(0).bideg_w == 1);
}

TEST_CASE("wide x-index naming") {
  auto R = RingContext::basis_ring(FieldContext::rationals(), 12, false);
  CHECK(R->var(3).name == "x_1_1");
  CHECK(R->var(14).name == "x_1_12");
}

TEST_CASE("grevlex tie-break on the last variable") {
  auto R = RingContext::w_ring(FieldContext::rationals());
  auto ord = MonomialOrder::grevlex(3);
  // w1^2 vs w1*w2 -> GT
  CHECK(ord.compare(mono(R, {2, 0, 0}), mono(R, {1, 1, 0})) > 0);
  // identical monomials -> EQ
  CHECK(ord.compare(mono(R, {1, 2, 3}), mono(R, {1, 2, 3})) == 0);
  // degree dominates
  CHECK(ord.compare(mono(R, {0, 0, 3}), mono(R, {1, 1, 0})) > 0);
}

TEST_CASE("block elimination order dominates") {
  // ring w1 w2 w3 t with t eliminated first: t > w1^5
  auto R = RingContext::with_elim_var(RingContext::w_ring(FieldContext::rationals()));
  auto ord = MonomialOrder::elimination(4, 3, 4);
  CHECK(ord.compare(mono(R, {0, 0, 0, 1}), mono(R, {5, 0, 0, 0})) > 0);
  CHECK(ord.compare(mono(R, {1, 0, 0, 1}), mono(R, {0, 0, 0, 1})) > 0);
}

TEST_CASE("order is antisymmetric and transitive; 1 is minimal") {
  auto R = RingContext::rees_ring(FieldContext::rationals(), 2, 0, false);
  auto ord = MonomialOrder::grevlex(R->nvars());
  uint64_t state = 7;
  auto next = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  auto rand_mono = [&]() {
    Monomial m(R->nvars());
    for (int i = 0; i < R->nvars(); ++i) m.set_exp(i, next() % 3);
    return m;
  };
  Monomial one(R->nvars());
  for (int trial = 0; trial < 200; ++trial) {
    Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
    CHECK(ord.compare(a, b) == -ord.compare(b, a));
    if (ord.compare(a, b) > 0 && ord.compare(b, c) > 0) CHECK(ord.compare(a, c) > 0);
    if (!(a == one)) CHECK(ord.compare(a, one) > 0);
    // multiplicative
    CHECK(ord.compare(a * c, b * c) == ord.compare(a, b));
  }
}

TEST_CASE("monomial division and lcm") {
  auto R = RingContext::w_ring(FieldContext::rationals());
  auto a = mono(R, {2, 1, 0});
  auto b = mono(R, {1, 1, 0});
  CHECK(b.divides(a));
  CHECK(!a.divides(b));
  CHECK(a.divide(b) == mono(R, {1, 0, 0}));
  CHECK(Monomial::lcm(mono(R, {2, 0, 1}), mono(R, {1, 1, 0})) == mono(R, {2, 1, 1}));
  CHECK(mono(R, {1, 0, 0}).coprime(mono(R, {0, 2, 1})));
  CHECK(!mono(R, {1, 1, 0}).coprime(mono(R, {0, 1, 0})));
}

}  // TEST_SUITE

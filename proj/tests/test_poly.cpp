#include <doctest.h>

#include "blowup/poly.hpp"

using namespace blowup;

namespace {
RingPtr QW() { return RingContext::w_ring(FieldContext::rationals()); }
Polynomial P(const RingPtr& r, const std::string& s) { return Polynomial::parse(r, s); }
}  // namespace

TEST_SUITE("poly") {

TEST_CASE("basic arithmetic") {
  auto R = QW();
  auto f = P(R, "w1 + w2");
  CHECK(f * f == P(R, "w1^2 + 2*w1*w2 + w2^2"));
  CHECK((f * Polynomial::zero(R)).is_zero());
  CHECK(P(R, "w1") * P(R, "w2*w3") == P(R, "w1*w2*w3"));
  CHECK(f - f == Polynomial::zero(R));
}

TEST_CASE("bidegree") {
  auto R = RingContext::rees_ring(FieldContext::rationals(), 2, 0, false);
  CHECK(P(R, "w1*x11").bidegree() == std::pair<int, int>(1, 1));
  CHECK(P(R, "x11*x22").bidegree() == std::pair<int, int>(0, 2));
  CHECK(P(R, "w1*w2").bidegree() == std::pair<int, int>(2, 0));
  CHECK_THROWS_AS(P(R, "w1*w2 + x11").bidegree(), NotBihomogeneous);
  CHECK_THROWS_AS(Polynomial::zero(R).bidegree(), Error);
}

TEST_CASE("print in descending default order") {
  auto R = QW();
  CHECK(P(R, "w2 + w1^2").str() == "w1^2 + w2");
  CHECK(P(R, "-w1 + w2").str() == "-w1 + w2");
  CHECK(P(R, "w1 - 2*w2").str() == "w1 - 2*w2");
  CHECK(Polynomial::zero(R).str() == "0");
  CHECK(P(R, "3/2*w1*w3^2").str() == "3/2*w1*w3^2");
  CHECK(Polynomial::constant(R, Scalar::from_long(5, R->field())).str() == "5");
}

TEST_CASE("parse-print round trip on random polynomials") {
  auto R = RingContext::rees_ring(FieldContext::prime(32003), 2, 1, true);
  uint64_t state = 11;
  auto next = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<Monomial, Scalar>> ts;
    int nt = 1 + next() % 6;
    for (int k = 0; k < nt; ++k) {
      Monomial m(R->nvars());
      for (int i = 0; i < R->nvars(); ++i) m.set_exp(i, next() % 3);
      ts.emplace_back(m, Scalar::from_long(static_cast<long>(next() % 100) - 50, R->field()));
    }
    auto f = Polynomial::from_terms(R, ts);
    CHECK(Polynomial::parse(R, f.str()) == f);
  }
  // rational coefficients incl. fractions
  auto RQ = QW();
  auto f = P(RQ, "1/2*w1^2 - 7/3*w1*w2 + w3 - 4");
  CHECK(Polynomial::parse(RQ, f.str()) == f);
}

TEST_CASE("ring axioms on random small polynomials") {
  auto R = RingContext::w_ring(FieldContext::prime(101));
  uint64_t state = 3;
  auto next = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  auto rand_poly = [&]() {
    std::vector<std::pair<Monomial, Scalar>> ts;
    int nt = next() % 4;
    for (int k = 0; k <= nt; ++k) {
      Monomial m(3);
      for (int i = 0; i < 3; ++i) m.set_exp(i, next() % 3);
      ts.emplace_back(m, Scalar::from_long(static_cast<long>(next() % 101), R->field()));
    }
    return Polynomial::from_terms(R, ts);
  };
  for (int trial = 0; trial < 30; ++trial) {
    auto a = rand_poly(), b = rand_poly(), c = rand_poly();
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("substitute performs a ring map") {
  auto R = RingContext::basis_ring(FieldContext::rationals(), 2, false);  // w1..w3, x_1, x_2
  auto W = QW();
  // x1 -> w2*w3, x2 -> w1*w3, w_i -> w_i
  std::vector<Polynomial> images;
  for (int i = 0; i < 3; ++i) images.push_back(Polynomial::variable(W, i));
  images.push_back(P(W, "w2*w3"));
  images.push_back(P(W, "w1*w3"));
  auto f = Polynomial::parse(R, "w1*x11 - w2*x12");
  CHECK(f.substitute(W, images) == P(W, "0"));
}

TEST_CASE("evaluation") {
  auto R = QW();
  auto f = P(R, "w1^2 - w2*w3");
  std::vector<Scalar> pt = {Scalar::from_long(2, R->field()), Scalar::from_long(1, R->field()),
                            Scalar::from_long(4, R->field())};
  CHECK(f.evaluate(pt) == Scalar::zero(R->field()));
}

}  // TEST_SUITE

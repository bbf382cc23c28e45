#include <doctest.h>

#include "blowup/points.hpp"
#include "blowup/resolution.hpp"

using namespace blowup;

namespace {
const FieldContext Q = FieldContext::rationals();
RingPtr QW() { return RingContext::w_ring(Q); }
Polynomial P(const RingPtr& r, const std::string& s) { return Polynomial::parse(r, s); }
}  // namespace

TEST_SUITE("resolution") {

TEST_CASE("hilbert series of the coordinate triangle") {
  auto I = ideal_of_points(PointSet::builtin("coordinate-triangle", Q));
  auto hs = hilbert_series(I);
  CHECK(hs.dim == 1);
  CHECK(hs.codim == 2);
  CHECK(hs.hf(0) == 1);
  CHECK(hs.hf(1) == 3);
  CHECK(hs.hf(5) == 3);
  CHECK(hs.multiplicity() == 3);
}

TEST_CASE("hilbert series of the zero ideal") {
  auto R = QW();
  Ideal Z(R, {});
  auto hs = hilbert_series(Z);
  CHECK(hs.dim == 3);
  CHECK(hs.codim == 0);
  CHECK(hs.hf(2) == 6);
}

TEST_CASE("minimal generators of point ideals") {
  auto tri = minimal_generators(ideal_of_points(PointSet::builtin("coordinate-triangle", Q)));
  REQUIRE(tri.size() == 3);
  for (const auto& [d, g] : tri) CHECK(d == 2);

  auto frame = minimal_generators(ideal_of_points(PointSet::builtin("frame-4", Q)));
  REQUIRE(frame.size() == 2);
  for (const auto& [d, g] : frame) CHECK(d == 2);

  // 8 general points: 2 cubics and h = 2k-d = 1 quartic
  auto X = PointSet::random(8, 5, 32003, PointSet::Constraints{});
  auto g8 = minimal_generators(ideal_of_points(X));
  REQUIRE(g8.size() == 3);
  CHECK(g8[0].first == 3);
  CHECK(g8[1].first == 3);
  CHECK(g8[2].first == 4);
}

TEST_CASE("minimal generator degree bound error") {
  auto I = ideal_of_points(PointSet::builtin("coordinate-triangle", Q));
  CHECK_THROWS_AS(minimal_generators(I, 1), DegreeBoundExceeded);
}

TEST_CASE("presentation matrix of the coordinate triangle") {
  auto I = ideal_of_points(PointSet::builtin("coordinate-triangle", Q));
  auto L = presentation_matrix(I);
  CHECK(L.rows == 2);
  CHECK(L.cols == 3);
  for (int r = 0; r < L.rows; ++r) {
    CHECK(L.row_degrees[r] == 3);
    for (int c = 0; c < L.cols; ++c)
      if (!L.entry[r][c].is_zero()) CHECK(L.entry[r][c].degree() == 1);
  }
  CHECK(hilbert_burch_check(I, L));
}

TEST_CASE("presentation matrix of the 4-point frame is a Koszul column") {
  auto I = ideal_of_points(PointSet::builtin("frame-4", Q));
  auto L = presentation_matrix(I);
  CHECK(L.rows == 1);
  CHECK(L.cols == 2);
  for (int c = 0; c < 2; ++c) CHECK(L.entry[0][c].degree() == 2);
  CHECK(hilbert_burch_check(I, L));
}

TEST_CASE("presentation of 7 general points has a quadric row and a linear row") {
  auto X = PointSet::random(7, 3, 32003, PointSet::Constraints{});
  auto I = ideal_of_points(X);
  auto L = presentation_matrix(I);
  CHECK(L.rows == 2);
  CHECK(L.cols == 3);
  // syzygy degrees d+1 = 4 (linear row) and d+2 = 5 (quadric row); rows sorted ascending
  CHECK(L.row_degrees == std::vector<int>{4, 5});
  CHECK(hilbert_burch_check(I, L));
}

TEST_CASE("non-perfect input fails the Hilbert-Burch round trip") {
  auto R = QW();
  Ideal I(R, {P(R, "w1*w2"), P(R, "w1*w3")});
  auto syz = first_syzygies(R, I.generators());
  REQUIRE(syz.size() == 1);
  // the Koszul-style syzygy (w3, -w2) up to scale
  PresentationMatrix L;
  L.rows = 1;
  L.cols = 2;
  L.entry = {syz[0]};
  L.col_degrees = {2, 2};
  L.row_degrees = {3};
  CHECK(!hilbert_burch_check(I, L));
}

TEST_CASE("betti table of a Koszul complex") {
  auto R = QW();
  Ideal I(R, {P(R, "w1"), P(R, "w2")});
  auto bt = betti_table(I);
  CHECK(bt.at(0, 0) == 1);
  CHECK(bt.at(1, 1) == 2);
  CHECK(bt.at(2, 2) == 1);
  CHECK(bt.pd() == 2);
  CHECK(bt.total(1) == 2);
}

TEST_CASE("betti table of the coordinate triangle") {
  auto I = ideal_of_points(PointSet::builtin("coordinate-triangle", Q));
  auto bt = betti_table(I);
  CHECK(bt.at(0, 0) == 1);
  CHECK(bt.at(1, 2) == 3);
  CHECK(bt.at(2, 3) == 2);
  CHECK(bt.pd() == 2);
}

TEST_CASE("betti table is invariant under generator permutation and rescale") {
  auto R = RingContext::w_ring(FieldContext::prime(32003));
  std::vector<Polynomial> gens = {P(R, "w1*w2"), P(R, "w1*w3"), P(R, "w2*w3")};
  std::vector<Polynomial> perm = {P(R, "w2*w3").scaled(Scalar::from_long(7, R->field())),
                                  P(R, "w1*w2"), P(R, "w1*w3")};
  CHECK(betti_table(Ideal(R, gens)) == betti_table(Ideal(R, perm)));
}

TEST_CASE("is_perfect on perfect and non-perfect ideals, both routes") {
  auto tri = ideal_of_points(PointSet::builtin("coordinate-triangle", Q));
  auto r1 = is_perfect(tri, PerfectStrategy::Resolution);
  CHECK(r1.perfect);
  CHECK(r1.pd == 2);
  CHECK(r1.codim == 2);
  auto r2 = is_perfect(tri, PerfectStrategy::LinearSection);
  CHECK(r2.perfect);

  auto R = QW();
  Ideal bad(R, {P(R, "w1*w2"), P(R, "w1*w3")});
  auto b1 = is_perfect(bad, PerfectStrategy::Resolution);
  CHECK(!b1.perfect);
  CHECK(b1.pd == 2);
  CHECK(b1.codim == 1);
  auto b2 = is_perfect(bad, PerfectStrategy::LinearSection);
  CHECK(!b2.perfect);
}

TEST_CASE("pd >= codim on assorted ideals") {
  auto R = QW();
  for (auto gens : {std::vector<Polynomial>{P(R, "w1*w2"), P(R, "w1*w3")},
                    std::vector<Polynomial>{P(R, "w1^2"), P(R, "w2^3")},
                    std::vector<Polynomial>{P(R, "w1*w2*w3")}}) {
    Ideal I(R, gens);
    auto bt = betti_table(I);
    auto hs = hilbert_series(I);
    CHECK(bt.pd() >= hs.codim);
  }
}

TEST_CASE("euler identity holds for a resolved ideal") {
  // the certificate is internal to betti_table; recompute it explicitly here
  auto I = ideal_of_points(PointSet::builtin("frame-4", Q));
  auto bt = betti_table(I);
  auto hs = hilbert_series(I);
  std::vector<mpz_class> euler;
  for (const auto& [ij, b] : bt.beta) {
    auto [i, j] = ij;
    if (static_cast<int>(euler.size()) <= j) euler.resize(j + 1, 0);
    euler[j] += (i % 2 == 0 ? b : -b);
  }
  while (!euler.empty() && euler.back() == 0) euler.pop_back();
  auto num = hs.num;
  while (!num.empty() && num.back() == 0) num.pop_back();
  CHECK(euler == num);
}

TEST_CASE("quotient by a linear form drops one variable exactly") {
  auto R = QW();
  Ideal I(R, {P(R, "w1*w2 - w3^2")});
  auto J = quotient_by_linear(I, P(R, "w3 - w1"));
  CHECK(J.ring()->nvars() == 2);
  REQUIRE(J.generators().size() == 1);
  CHECK(J.generators()[0] == Polynomial::parse(J.ring(), "w1*w2 - w1^2"));
}

}  // TEST_SUITE

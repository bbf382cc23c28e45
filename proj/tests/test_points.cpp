#include <doctest.h>

#include "blowup/points.hpp"

using namespace blowup;

namespace {
const FieldContext Q = FieldContext::rationals();
}

TEST_SUITE("points") {

TEST_CASE("builtin witnesses normalize and stay distinct") {
  auto X = PointSet::builtin("coordinate-triangle", Q);
  CHECK(X.size() == 3);
  auto F = PointSet::builtin("frame-4", Q);
  CHECK(F.size() == 4);
  CHECK_THROWS_AS(PointSet::builtin("nope", Q), Error);
  CHECK_THROWS_AS(
      PointSet::from_coords(Q, {{Scalar::from_long(1, Q), Scalar::zero(Q), Scalar::zero(Q)},
                                {Scalar::from_long(2, Q), Scalar::zero(Q), Scalar::zero(Q)}}),
      Error);  // same point after normalization
}

TEST_CASE("evaluation matrix shapes and ranks") {
  auto X = PointSet::builtin("coordinate-triangle", Q);
  auto M1 = evaluation_matrix(X, 1);
  CHECK(M1.rows() == 3);
  CHECK(M1.cols() == 3);
  CHECK(M1.rref(false).rank == 3);
  auto M0 = evaluation_matrix(X, 0);
  CHECK(M0.cols() == 1);
  CHECK(M0.rref(false).rank == 1);
  auto M2 = evaluation_matrix(X, 2);
  CHECK(M2.cols() == 6);
  CHECK(M2.rref(false).rank == 3);
  // nullspace dimension 3 at degree 2
  CHECK(M2.rref().nullspace.size() == 3);
}

TEST_CASE("hilbert data of the coordinate triangle") {
  auto hd = hilbert_data(PointSet::builtin("coordinate-triangle", Q));
  CHECK(hd.hf[0] == 1);
  CHECK(hd.hf[1] == 3);
  CHECK(hd.hf[2] == 3);
  CHECK(hd.alpha == 2);
  CHECK(hd.sigma == 2);
}

TEST_CASE("hilbert data of 8 general points") {
  // d = 3, k = 2: HF = 1, 3, 6, 8, 8 and sigma = d + 1 = 4
  auto X = PointSet::random(8, 5, 32003, PointSet::Constraints{});
  auto hd = hilbert_data(X);
  CHECK(hd.hf == std::vector<long>{1, 3, 6, 8, 8});
  CHECK(hd.sigma == 4);
  CHECK(hd.alpha == 3);
}

TEST_CASE("three collinear points are not generic") {
  auto S = [&](long v) { return Scalar::from_long(v, Q); };
  auto X = PointSet::from_coords(
      Q, {{S(1), S(0), S(0)}, {S(0), S(1), S(0)}, {S(1), S(1), S(0)}});
  CHECK(evaluation_matrix(X, 1).rref(false).rank == 2);
  CHECK(!genericity_report(X).generic_hf);
  CHECK(genericity_report(X).max_collinear == 3);
}

TEST_CASE("graded pieces of the coordinate triangle") {
  auto X = PointSet::builtin("coordinate-triangle", Q);
  auto ring = RingContext::w_ring(Q);
  auto gp2 = graded_piece(X, 2);
  REQUIRE(gp2.basis.size() == 3);
  auto ord = MonomialOrder::grevlex(3);
  Ideal I(ring, gp2.basis);
  Ideal J(ring, {Polynomial::parse(ring, "w1*w2"), Polynomial::parse(ring, "w1*w3"),
                 Polynomial::parse(ring, "w2*w3")});
  CHECK(ideal_equal(I, J, ord));
  CHECK(graded_piece(X, 1).basis.empty());
}

TEST_CASE("graded piece of the frame") {
  auto X = PointSet::builtin("frame-4", Q);
  auto ring = RingContext::w_ring(Q);
  auto gp = graded_piece(X, 2);
  REQUIRE(gp.basis.size() == 2);
  Ideal I(ring, gp.basis);
  Ideal J(ring, {Polynomial::parse(ring, "w2*w1 - w2*w3"), Polynomial::parse(ring, "w3*w1 - w3*w2")});
  CHECK(ideal_equal(I, J, MonomialOrder::grevlex(3)));
}

TEST_CASE("graded piece polynomials vanish on the points") {
  auto X = PointSet::random(6, 17, 32003, PointSet::Constraints{});
  for (int t = 2; t <= 4; ++t) {
    auto gp = graded_piece(X, t);
    for (const auto& f : gp.basis)
      for (int i = 0; i < X.size(); ++i) {
        std::vector<Scalar> pt(X.point(i).begin(), X.point(i).end());
        CHECK(f.evaluate(pt).is_zero());
      }
  }
}

TEST_CASE("s decomposition") {
  CHECK(s_decomposition(3) == std::pair<int, int>(2, 0));
  CHECK(s_decomposition(4) == std::pair<int, int>(2, 1));
  CHECK(s_decomposition(5) == std::pair<int, int>(2, 2));
  CHECK(s_decomposition(7) == std::pair<int, int>(3, 1));
  CHECK(s_decomposition(8) == std::pair<int, int>(3, 2));
}

TEST_CASE("frame has max-collinear 2") {
  CHECK(genericity_report(PointSet::builtin("frame-4", Q)).max_collinear == 2);
}

TEST_CASE("random points: determinism, constraints, pigeonhole") {
  auto A = PointSet::random(5, 99, 32003, PointSet::Constraints{});
  auto B = PointSet::random(5, 99, 32003, PointSet::Constraints{});
  REQUIRE(A.size() == B.size());
  for (int i = 0; i < A.size(); ++i)
    for (int j = 0; j < 3; ++j) CHECK(A.point(i)[j] == B.point(i)[j]);
  CHECK(genericity_report(A).generic_hf);
  // 4 points fit in P^2(F_2) (7 points), 8 do not
  PointSet::Constraints loose;
  loose.generic_hf = false;
  loose.no_collinear = false;
  CHECK_NOTHROW(PointSet::random(4, 1, 2, loose));
  CHECK_THROWS_AS(PointSet::random(8, 1, 2, loose), Error);
}

TEST_CASE("point file round trip") {
  auto X = PointSet::random(4, 7, 32003, PointSet::Constraints{});
  auto Y = PointSet::from_file(X.to_file());
  REQUIRE(Y.size() == X.size());
  for (int i = 0; i < X.size(); ++i)
    for (int j = 0; j < 3; ++j) CHECK(X.point(i)[j] == Y.point(i)[j]);
  // rational file with fractions
  auto Z = PointSet::from_file("Q\n1, 1/2, 0\n0, 1, -3/7\n");
  CHECK(Z.size() == 2);
  CHECK(Z.point(0)[1].str() == "1/2");
}

TEST_CASE("HF is nondecreasing, bounded by s, equal to s from sigma on") {
  auto X = PointSet::random(7, 3, 32003, PointSet::Constraints{});
  auto hd = hilbert_data(X);
  long prev = 0;
  for (long v : hd.hf) {
    CHECK(v >= prev);
    CHECK(v <= X.size());
    prev = v;
  }
  CHECK(hd.hf[hd.sigma] == X.size());
  CHECK(hd.sigma <= X.size());
}

}  // TEST_SUITE

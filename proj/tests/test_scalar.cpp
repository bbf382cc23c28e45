#include <doctest.h>

#include "blowup/matrix.hpp"
#include "blowup/scalar.hpp"

using namespace blowup;

TEST_SUITE("scalar") {

TEST_CASE("rational arithmetic is exact and normalized") {
  auto half = Scalar::rational(mpq_class(1, 2));
  auto third = Scalar::rational(mpq_class(1, 3));
  CHECK((half + third).str() == "5/6");
  CHECK((half * third).str() == "1/6");
  auto q = Scalar::rational(mpq_class(4, 6));
  CHECK(q.str() == "2/3");  // stored normalized
  CHECK((q / q).is_one());
}

TEST_CASE("prime field arithmetic") {
  auto a = Scalar::residue(3, 7);
  auto b = Scalar::residue(5, 7);
  CHECK((a * b).res() == 1);  // 15 mod 7
  CHECK((a + b).res() == 1);
  CHECK((a - b).res() == 5);
  CHECK((b / a).res() == 4);  // 5 * 3^{-1} = 5*5 = 25 = 4
  CHECK_THROWS_AS(a / Scalar::zero(FieldContext::prime(7)), DivisionByZero);
}

TEST_CASE("mixed-field arithmetic is rejected") {
  auto q = Scalar::rational(mpq_class(1));
  auto r = Scalar::residue(1, 7);
  CHECK_THROWS_AS(q + r, ContextMismatch);
  CHECK_THROWS_AS(q * r, ContextMismatch);
  CHECK_THROWS_AS(Scalar::residue(1, 7) + Scalar::residue(1, 11), ContextMismatch);
}

TEST_CASE("modulus must be prime") {
  CHECK_THROWS_AS(FieldContext::prime(6), Error);
  CHECK_NOTHROW(FieldContext::prime(32003));
}

TEST_CASE("scalar parse round trip") {
  auto c = FieldContext::rationals();
  for (const char* s : {"0", "1", "-1", "5/6", "-22/7", "32003"}) {
    CHECK(Scalar::parse(s, c).str() == s);
  }
  auto f = FieldContext::prime(32003);
  CHECK(Scalar::parse("-1", f).res() == 32002);
  CHECK(Scalar::parse("1/2", f).res() == 16002);  // inverse of 2
}

TEST_CASE("rref of identity") {
  auto f = FieldContext::rationals();
  ExactMatrix m(3, 3, f);
  for (int i = 0; i < 3; ++i) m.set(i, i, Scalar::one(f));
  auto r = m.rref();
  CHECK(r.rank == 3);
  CHECK(r.pivot_cols == std::vector<int>{0, 1, 2});
  CHECK(r.nullspace.empty());
}

TEST_CASE("rref of zero matrix") {
  auto f = FieldContext::rationals();
  ExactMatrix m(2, 3, f);
  auto r = m.rref();
  CHECK(r.rank == 0);
  CHECK(r.nullspace.size() == 3);
}

TEST_CASE("rank-nullity and exact nullspace") {
  auto f = FieldContext::rationals();
  // 2x4: rows (1,2,3,4), (2,4,6,8): rank 1
  ExactMatrix m(2, 4, f);
  for (int c = 0; c < 4; ++c) {
    m.set(0, c, Scalar::from_long(c + 1, f));
    m.set(1, c, Scalar::from_long(2 * (c + 1), f));
  }
  auto r = m.rref();
  CHECK(r.rank == 1);
  CHECK(r.nullspace.size() == 3);
  for (const auto& v : r.nullspace) {
    auto img = m.apply(v);
    for (const auto& s : img) CHECK(s.is_zero());
  }
}

TEST_CASE("rref idempotence: pivots of rref-form equal original pivots") {
  auto f = FieldContext::prime(32003);
  ExactMatrix m(3, 5, f);
  long data[3][5] = {{1, 2, 0, 4, 1}, {0, 0, 3, 1, 2}, {2, 4, 3, 9, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 5; ++j) m.set(i, j, Scalar::from_long(data[i][j], f));
  auto r1 = m.rref();
  ExactMatrix m2(r1.rank, 5, f);
  for (int i = 0; i < r1.rank; ++i)
    for (int j = 0; j < 5; ++j) m2.set(i, j, r1.rref_rows[i][j]);
  auto r2 = m2.rref();
  CHECK(r1.pivot_cols == r2.pivot_cols);
  CHECK(r1.rank == r2.rank);
  for (int i = 0; i < r1.rank; ++i)
    for (int j = 0; j < 5; ++j) CHECK(r1.rref_rows[i][j] == r2.rref_rows[i][j]);
}

// random small integer matrices: rank over Q agrees with rank over F_32003
TEST_CASE("rational and prime-field ranks agree on random integer matrices") {
  uint64_t state = 42;
  auto next = [&]() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  for (int trial = 0; trial < 10; ++trial) {
    int rows = 3 + static_cast<int>(next() % 3);
    int cols = 3 + static_cast<int>(next() % 3);
    ExactMatrix mq(rows, cols, FieldContext::rationals());
    ExactMatrix mp(rows, cols, FieldContext::prime(32003));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        long v = static_cast<long>(next() % 19) - 9;
        mq.set(i, j, Scalar::from_long(v, FieldContext::rationals()));
        mp.set(i, j, Scalar::from_long(v, FieldContext::prime(32003)));
      }
    auto rq = mq.rref(false);
    auto rp = mp.rref(false);
    CHECK(rq.rank == rp.rank);
    CHECK(rq.rank + static_cast<int>(mq.rref().nullspace.size()) == cols);
  }
}

}  // TEST_SUITE

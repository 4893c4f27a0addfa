#include <doctest.h>

#include <random>

#include "r3v/ring.hpp"

using namespace r3v;

TEST_CASE("ring multiplication examples") {
  Ring r3(3), r2(2);
  CHECK(r3.mul(r3.v(), r3.v2()) == r3.v());
  CHECK(r3.mul(r3.make(1, 1, 0), r3.make(1, 2, 0)) == r3.make(1, 0, 2));
  CHECK(r2.mul(r2.v2(), r2.v2()) == r2.v2());
}

TEST_CASE("ring axioms exhaustively for q in {2,3}") {
  for (u32 q : {2u, 3u}) {
    Ring r(q);
    const auto el = r.elements();
    for (const auto& x : el)
      for (const auto& y : el) {
        REQUIRE(r.mul(x, y) == r.mul(y, x));
        for (const auto& z : el) {
          REQUIRE(r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z)));
          REQUIRE(r.mul(x, r.add(y, z)) == r.add(r.mul(x, y), r.mul(x, z)));
        }
      }
  }
}

TEST_CASE("ring axioms on random triples for q=5") {
  Ring r(5);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    auto x = r.from_index(rng() % 125), y = r.from_index(rng() % 125), z = r.from_index(rng() % 125);
    REQUIRE(r.mul(x, y) == r.mul(y, x));
    REQUIRE(r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z)));
    REQUIRE(r.mul(x, r.add(y, z)) == r.add(r.mul(x, y), r.mul(x, z)));
  }
}

TEST_CASE("evaluation maps") {
  Ring r(3);
  CHECK(r.evaluate(r.make(1, 2, 1), 1) == 1);
  CHECK(r.evaluate(r.v(), 0) == 0);
  CHECK(r.evaluate(r.make(1, 2, 1), 2) == 0);
  try {
    Ring(5).evaluate(r.v(), 2);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidEvaluationPoint);
  }
  for (u32 q : {2u, 3u}) {
    Ring ring(q);
    const auto el = ring.elements();
    for (u32 t : {0u, 1u, q - 1})
      for (const auto& x : el)
        for (const auto& y : el)
          REQUIRE(ring.evaluate(ring.mul(x, y), t) == ring.field().mul(ring.evaluate(x, t), ring.evaluate(y, t)));
  }
}

TEST_CASE("CRT split and combine") {
  Ring r3(3);
  CHECK(r3.crt_split(r3.v()) == std::array<u32, 3>{0, 1, 2});
  CHECK(r3.crt_combine(0, 1, 2) == r3.v());
  Ring r5(5);
  CHECK(r5.crt_split(r5.one()) == std::array<u32, 3>{1, 1, 1});
  for (u32 q : {3u, 5u, 7u}) {
    Ring ring(q);
    for (const auto& x : ring.elements()) {
      const auto c = ring.crt_split(x);
      REQUIRE(ring.crt_combine(c[0], c[1], c[2]) == x);
    }
  }
  try {
    Ring(2).crt_combine(0, 1, 1);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CharacteristicTwoUnsupported);
  }
}

TEST_CASE("idempotents are orthogonal and sum to one") {
  for (u32 q : {3u, 5u}) {
    Ring r(q);
    const std::array e{r.idempotent_at1(), r.idempotent_at_minus1(), r.idempotent_at0()};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(r.mul(e[i], e[j]) == (i == j ? e[i] : r.zero()));
    CHECK(r.add(e[0], r.add(e[1], e[2])) == r.one());
  }
}

TEST_CASE("units agree with exhaustive inverse search") {
  Ring r3(3);
  CHECK(r3.is_unit(r3.make(2, 0, 0)));
  CHECK_FALSE(r3.is_unit(r3.v()));
  CHECK_FALSE(r3.is_unit(r3.make(1, 1, 0)));
  for (u32 q : {2u, 3u}) {
    Ring r(q);
    const auto el = r.elements();
    for (const auto& x : el) {
      bool has_inverse = false;
      for (const auto& y : el) has_inverse |= r.mul(x, y) == r.one();
      CHECK(r.is_unit(x) == has_inverse);
      if (has_inverse) CHECK(r.mul(x, *r.inverse(x)) == r.one());
    }
  }
}

TEST_CASE("Gray map and Lee weight") {
  Ring r3(3), r2(2);
  CHECK(r3.gray(r3.make(1, 0, 2)) == GrayTriple{1, 0, 0});
  CHECK(r3.gray(r3.zero()) == GrayTriple{0, 0, 0});
  CHECK(r3.gray(r3.make(1, 1, 1)) == GrayTriple{1, 2, 1});
  CHECK(r2.lee_weight(r2.v()) == 1);
  CHECK(r2.lee_weight(r2.one()) == 2);
  CHECK(r3.lee_weight(r3.make(1, 0, 2)) == 1);
  for (u32 q : {2u, 3u, 5u}) {
    Ring r(q);
    const auto el = r.elements();
    for (const auto& x : el) {
      CHECK(r.gray_inverse(r.gray(x)) == x);
      CHECK(r.lee_weight(r.neg(x)) == r.lee_weight(x));
      for (const auto& y : el) {
        const auto gx = r.gray(x), gy = r.gray(y), gs = r.gray(r.add(x, y));
        REQUIRE(gs == GrayTriple{r.field().add(gx.g0, gy.g0), r.field().add(gx.g1, gy.g1),
                                 r.field().add(gx.g2, gy.g2)});
      }
    }
  }
}

TEST_CASE("element text") {
  Ring r3(3), r5(5);
  CHECK(parse_elem(r3, "[1,2,0]") == r3.make(1, 2, 0));
  CHECK(parse_elem(r3, "1+2v") == r3.make(1, 2, 0));
  CHECK(parse_elem(r5, "4v+3v^2") == r5.make(0, 4, 3));
  CHECK(parse_elem(r5, " 4 * v + 3 v^2 ") == r5.make(0, 4, 3));
  CHECK(parse_elem(r3, "v^2") == r3.v2());
  CHECK(parse_elem(r3, "0") == r3.zero());
  CHECK(format_elem(r3.make(1, 2, 0)) == "[1,2,0]");
  CHECK(format_elem_poly(r3.make(1, 2, 1)) == "1+2v+v^2");
  CHECK_THROWS_AS(parse_elem(r3, "[1,3,0]"), Error);
  CHECK_THROWS_AS(parse_elem(r3, "3v"), Error);
  CHECK_THROWS_AS(parse_elem(r3, "v^3"), Error);
  CHECK_THROWS_AS(parse_elem(r3, "[1,2]"), Error);
  for (const auto& x : r5.elements()) {
    CHECK(parse_elem(r5, format_elem(x)) == x);
    CHECK(parse_elem(r5, format_elem_poly(x)) == x);
  }
}

TEST_CASE("printed Lee table audit") {
  for (u32 q : {2u, 3u, 5u}) {
    const auto rows = audit_lee_table(Ring(q));
    REQUIRE(rows.size() == 10);
    // a0 != 0, a1 != 0, a2 = 0 appears as rows 3 and 10 with weights 1 and 3
    CHECK(rows[2].duplicate_of == std::vector<int>{10});
    CHECK(rows[2].contradictory());
    CHECK_FALSE(rows[9].contradictory());
    CHECK_FALSE(rows[0].contradictory());
    CHECK_FALSE(rows[1].contradictory());
  }
}

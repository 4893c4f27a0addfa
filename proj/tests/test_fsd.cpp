#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "r3v/fsd.hpp"
#include "r3v/wenum.hpp"

using namespace r3v;

namespace {

RingVector V(const Ring& r, const char* text) { return parse_vector(r, text); }

RingVector random_vector(const Ring& ring, std::size_t n, std::mt19937_64& rng) {
  RingVector x(n);
  for (auto& e : x) e = oracle::random_elem(ring, rng);
  return x;
}

SymmetricMatrixR random_symmetric(const Ring& ring, std::size_t n, std::mt19937_64& rng) {
  std::vector<RingVector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(random_vector(ring, n, rng));
  return SymmetricMatrixR::from_upper(rows);
}

void check_construction(const Construction& c, bool exhaustive) {
  const auto check = isodual_witness_check(c.code, c.witness);
  CHECK(check.companion_is_dual);
  CHECK(check.witness_maps_to_dual);
  CHECK(2 * c.code.size_exponent() == 3 * c.code.length());
  if (exhaustive) {
    CHECK(is_formally_self_dual(c.code));
    CHECK(lee_enumerator(c.code) == lee_enumerator(dual(c.code)));
    CHECK(gray_fsd_transfer(c.code));
  }
}

}  // namespace

TEST_CASE("symmetric and circulant inputs") {
  Ring r3(3);
  CHECK_THROWS_AS(SymmetricMatrixR({V(r3, "0 1"), V(r3, "2 0")}), Error);
  try {
    SymmetricMatrixR({V(r3, "0 1"), V(r3, "0")});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ShapeError);
  }
  const auto s = SymmetricMatrixR::from_upper({V(r3, "1 v"), V(r3, "2 0")});
  CHECK(s(1, 0) == r3.v());
  const CirculantSpecR m{V(r3, "1 2 v")};
  CHECK(m.matrix() == std::vector<RingVector>{V(r3, "1 2 v"), V(r3, "v 1 2"), V(r3, "2 v 1")});
  const BorderedSpecR b{r3.one(), r3.v(), {V(r3, "1 2")}};
  CHECK(b.matrix() == std::vector<RingVector>{V(r3, "1 v v"), V(r3, "v 1 2"), V(r3, "v 2 1")});
}

TEST_CASE("construction examples") {
  Ring r3(3);
  SUBCASE("A = [0]") {
    const auto c = construction_a(r3, SymmetricMatrixR({V(r3, "0")}));
    CHECK(c.code == LinearCodeR(r3, 2, {V(r3, "1 0")}));
    CHECK(dual(c.code) == LinearCodeR(r3, 2, {V(r3, "0 1")}));
    check_construction(c, true);
  }
  SUBCASE("A = [v]") {
    const auto c = construction_a(r3, SymmetricMatrixR({V(r3, "v")}));
    CHECK(c.code.size() == 27);
    check_construction(c, true);
  }
  SUBCASE("double circulant") {
    check_construction(construction_b(r3, {V(r3, "0 0")}), true);
    check_construction(construction_b(r3, {V(r3, "1 v")}), true);
  }
  SUBCASE("bordered") {
    check_construction(construction_c(r3, {RingElem{}, RingElem{}, {V(r3, "0")}}), true);
    check_construction(construction_c(r3, {r3.one(), r3.v(), {V(r3, "1+v")}}), true);
    CHECK_THROWS_AS(construction_c(r3, {r3.one(), r3.v(), {RingVector{}}}), Error);
  }
}

TEST_CASE("wrong permutation is rejected") {
  Ring r3(3);
  const auto c = construction_b(r3, {V(r3, "1 v 2")});
  PermutationWitness identity{{0, 1, 2, 3, 4, 5}, std::vector<bool>(6, false)};
  CHECK_FALSE(isodual_witness_check(c.code, identity).witness_maps_to_dual);
  auto unsigned_swap = c.witness;
  unsigned_swap.negate.assign(6, false);
  CHECK_FALSE(isodual_witness_check(c.code, unsigned_swap).witness_maps_to_dual);
  PermutationWitness broken{{0, 0, 1, 2, 3, 4}, std::vector<bool>(6, false)};
  CHECK_FALSE(broken.valid());
  CHECK_FALSE(isodual_witness_check(c.code, broken).ok());
}

TEST_CASE("random constructions are isodual") {
  std::mt19937_64 rng(8);
  for (u32 q : {3u, 5u}) {
    Ring ring(q);
    for (std::size_t n = 1; n <= 3; ++n) {
      const bool exhaustive = q == 3;
      for (int t = 0; t < 34; ++t) {
        check_construction(construction_a(ring, random_symmetric(ring, n, rng)), exhaustive);
        check_construction(construction_b(ring, {random_vector(ring, n, rng)}), exhaustive);
        if (n >= 2)
          check_construction(construction_c(ring, {oracle::random_elem(ring, rng), oracle::random_elem(ring, rng),
                                                   {random_vector(ring, n - 1, rng)}}),
                             exhaustive);
      }
    }
  }
}

TEST_CASE("direct product") {
  Ring r3(3);
  const auto a = construction_a(r3, SymmetricMatrixR({V(r3, "v")})).code;
  const auto p = direct_product(a, a);
  CHECK(p.length() == 4);
  CHECK(lee_enumerator(p) == enumerator_product(lee_enumerator(a), lee_enumerator(a)));
  CHECK(is_formally_self_dual(p));
  CHECK(dual(p) == direct_product(dual(a), dual(a)));
  CHECK(direct_product(LinearCodeR::zero(r3, 2), LinearCodeR::zero(r3, 3)) == LinearCodeR::zero(r3, 5));
  CHECK_THROWS_AS(direct_product(a, LinearCodeR::zero(Ring(5), 1)), Error);

  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    const LinearCodeR x(r3, 1, oracle::random_generators(r3, 1, rng));
    const LinearCodeR y(r3, 2, oracle::random_generators(r3, 2, rng));
    const auto xy = direct_product(x, y);
    CHECK(lee_enumerator(xy) == enumerator_product(lee_enumerator(x), lee_enumerator(y)));
    CHECK(dual(xy) == direct_product(dual(x), dual(y)));
  }
}

TEST_CASE("Gray transfer") {
  Ring r3(3), r2(2);
  CHECK(gray_fsd_transfer(LinearCodeR(r2, 2, {V(r2, "1 1")})));
  // R x 0 and its dual 0 x R share a Lee enumerator
  CHECK(gray_fsd_transfer(LinearCodeR(r3, 2, {V(r3, "1 0")})));
  CHECK(is_formally_self_dual(LinearCodeR(r3, 2, {V(r3, "1 0")})));
  const LinearCodeR unequal(r3, 2, {V(r3, "1 0"), V(r3, "0 v")});
  CHECK_FALSE(is_formally_self_dual(unequal));
  CHECK_FALSE(gray_fsd_transfer(unequal));
  std::size_t checked = 0;
  for (const auto& c : enumerate_submodules(r3, 2, false)) {
    if (2 * c.size_exponent() != 6) continue;
    CHECK(gray_fsd_transfer(c) == is_formally_self_dual(c));
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("negation preserves Lee weight") {
  for (u32 q : {2u, 3u, 5u}) {
    Ring ring(q);
    for (const auto& x : ring.elements()) CHECK(ring.lee_weight(ring.neg(x)) == ring.lee_weight(x));
  }
}

TEST_CASE("odd formally self-dual search") {
  for (u32 q : {2u, 3u}) {
    const auto s = odd_fsd_search(Ring(q), 1);
    CHECK(s.exhausted);
    CHECK(s.size_matched == 0);
    CHECK_FALSE(s.witness.has_value());
  }
  const auto s = odd_fsd_search(Ring(2), 2);
  CHECK(s.exhausted);
  CHECK(s.fsd_found > 0);
  if (s.witness) {
    CHECK(is_formally_self_dual(*s.witness));
    CHECK(lee_enumerator(*s.witness).has_odd_weight());
  }
}

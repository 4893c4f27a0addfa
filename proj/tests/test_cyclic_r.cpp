#include <doctest.h>

#include "oracles.hpp"
#include "r3v/cyclic_r.hpp"

using namespace r3v;

namespace {

Polynomial P(const Field& f, const char* text) { return parse_polynomial(f, text); }

}  // namespace

TEST_CASE("cyclic code examples") {
  Ring r3(3);
  const Field& f = r3.field();
  const auto xn = Polynomial::xn_minus_1(f, 2);
  const auto one = Polynomial::constant(f, 1);
  CHECK(cyclic_code_r(r3, make_cyclic_spec(2, xn, xn, xn)) == LinearCodeR::zero(r3, 2));
  CHECK(cyclic_code_r(r3, make_cyclic_spec(2, one, one, one)) == LinearCodeR::full(r3, 2));

  const auto spec = make_cyclic_spec(2, P(f, "x+2"), P(f, "x+1"), one);
  const auto c = cyclic_code_r(r3, spec);
  CHECK(cyclic_size_exponent(spec) == 4);
  CHECK(c.size() == 81);
  CHECK(oracle::as_set(c).size() == 81);
  CHECK(is_cyclic_r(c));

  const auto d = cyclic_dual_r(r3, spec);
  CHECK(d.size() == 9);
  CHECK(is_cyclic_r(d));
  CHECK(oracle::as_set(d) == oracle::dual(r3, 2, oracle::as_set(c)));

  CHECK(cyclic_dual_r(r3, make_cyclic_spec(2, xn, xn, xn)) == LinearCodeR::full(r3, 2));
  CHECK(cyclic_dual_r(r3, make_cyclic_spec(2, one, one, one)) == LinearCodeR::zero(r3, 2));

  try {
    make_cyclic_spec(3, P(f, "x^2+1"), one, one);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotADivisor);
  }
  CHECK_THROWS_AS(cyclic_code_r(Ring(2), make_cyclic_spec(2, one, one, one)), Error);
}

TEST_CASE("size formula, cyclicity and componentwise dual over every divisor triple") {
  for (std::size_t n : {2u, 4u}) {
    Ring r3(3);
    const auto divisors = monic_divisors_of_xn_minus_1(r3.field(), n);
    for (const auto& f1 : divisors)
      for (const auto& f2 : divisors)
        for (const auto& f3 : divisors) {
          const auto spec = make_cyclic_spec(n, f1, f2, f3);
          const auto c = cyclic_code_r(r3, spec);
          REQUIRE(c.size_exponent() == cyclic_size_exponent(spec));
          CHECK(is_cyclic_r(c));
          const auto comps = components_crt(c);
          CHECK(comps.c1 == cyclic_code(f1, n));
          CHECK(comps.c2 == cyclic_code(f2, n));
          CHECK(comps.c3 == cyclic_code(f3, n));
          const auto d = cyclic_dual_r(r3, spec);
          CHECK(d == dual(c, DualMethod::Kernel));
          if (n == 2) CHECK(d == dual(c, DualMethod::BruteForce));
        }
  }
}

TEST_CASE("cyclic codes found by enumeration have cyclic components") {
  Ring r3(3);
  for (std::size_t n : {2u, 3u}) {
    const auto codes = enumerate_cyclic_codes(r3, n);
    std::size_t divisor_count = monic_divisors_of_xn_minus_1(r3.field(), n).size();
    CHECK(codes.size() == divisor_count * divisor_count * divisor_count);
    for (const auto& c : codes) {
      CHECK(is_cyclic_r(c));
      const auto t = components_crt(c);
      CHECK(is_cyclic(t.c1));
      CHECK(is_cyclic(t.c2));
      CHECK(is_cyclic(t.c3));
    }
  }
}

TEST_CASE("self-dual cyclic search") {
  for (std::size_t n : {2u, 4u}) {
    const auto s = self_dual_cyclic_search(Ring(3), n);
    CHECK(s.exhausted);
    CHECK_FALSE(s.witness_code.has_value());
    CHECK(s.tested > 0);
  }
  const auto odd = self_dual_cyclic_search(Ring(3), 3);
  CHECK_FALSE(odd.witness_code.has_value());

  const auto s2 = self_dual_cyclic_search(Ring(2), 2);
  CHECK(s2.exhausted);
  REQUIRE(s2.witness_code.has_value());
  const auto& w = *s2.witness_code;
  CHECK(is_cyclic_r(w));
  CHECK(w == dual(w, DualMethod::BruteForce));
  const auto j = to_json(s2);
  CHECK(j["exhausted"] == true);
  CHECK_FALSE(j["witness"].is_null());

  const auto s2odd = self_dual_cyclic_search(Ring(2), 3);
  CHECK_FALSE(s2odd.witness_code.has_value());
}

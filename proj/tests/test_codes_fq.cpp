#include <doctest.h>

#include <random>
#include <set>

#include "r3v/codes_fq.hpp"

using namespace r3v;

namespace {

MatrixFq M(std::initializer_list<std::initializer_list<u32>> rows) {
  MatrixFq m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (u32 x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

LinearCodeFq random_code(const Field& f, std::size_t n, std::mt19937_64& rng) {
  const auto k = static_cast<Eigen::Index>(rng() % (n + 1));
  MatrixFq g(k, static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = static_cast<u32>(rng() % f.q());
  return LinearCodeFq(f, g);
}

std::set<std::vector<u32>> words(const LinearCodeFq& c) {
  std::set<std::vector<u32>> s;
  for_each_codeword(c.field(), c.basis(), [&](std::span<const u32> w) { s.emplace(w.begin(), w.end()); });
  return s;
}

// Hamming enumerator of the dual by testing all q^n vectors.
WeightEnumerator brute_dual_enumerator(const LinearCodeFq& c) {
  const Field& f = c.field();
  const std::size_t n = c.length();
  WeightEnumerator e(n);
  MatrixFq id = MatrixFq::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for_each_codeword(f, id, [&](std::span<const u32> x) {
    for (Eigen::Index i = 0; i < c.basis().rows(); ++i)
      if (dot(f, x, {c.basis().row(i).data(), n}) != 0) return;
    ++e.counts[static_cast<std::size_t>(hamming_weight(x))];
  });
  return e;
}

// sum_i A_i (X + (q-1)Y)^{n-i} (X - Y)^i / |C| with plain integer arithmetic
WeightEnumerator macwilliams_small(const WeightEnumerator& a, u32 q) {
  const std::size_t n = a.length;
  std::vector<long long> out(n + 1, 0);
  auto binom = [](long long m, long long k) {
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (m - k + i) / i;
    return r;
  };
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      long long k = 0;  // Krawtchouk K_j(i)
      for (std::size_t s = 0; s <= j; ++s) {
        if (s > i || j - s > n - i) continue;
        long long t = binom(static_cast<long long>(i), static_cast<long long>(s)) *
                      binom(static_cast<long long>(n - i), static_cast<long long>(j - s));
        for (std::size_t p = 0; p < j - s; ++p) t *= q - 1;
        k += (s % 2 ? -t : t);
      }
      out[j] += static_cast<long long>(a.counts[i]) * k;
    }
  WeightEnumerator e(n);
  for (std::size_t j = 0; j <= n; ++j) e.counts[j] = static_cast<u64>(out[j] / static_cast<long long>(a.total()));
  return e;
}

}  // namespace

TEST_CASE("rref examples") {
  Field f3(3);
  auto id = rref(f3, MatrixFq::Identity(4, 4));
  CHECK(id.rank == 4);
  CHECK(id.matrix == MatrixFq::Identity(4, 4));
  auto r = rref(f3, M({{1, 2}, {2, 1}}));
  CHECK(r.rank == 1);
  CHECK(r.matrix == M({{1, 2}, {0, 0}}));
  auto z = rref(f3, MatrixFq::Zero(2, 3));
  CHECK(z.rank == 0);
  CHECK(z.matrix == MatrixFq::Zero(2, 3));
}

TEST_CASE("dual examples") {
  Field f3(3);
  CHECK(dual(LinearCodeFq::full(f3, 4)).dimension() == 0);
  CHECK(dual(LinearCodeFq::zero(f3, 4)) == LinearCodeFq::full(f3, 4));
  const LinearCodeFq rep(f3, M({{1, 1, 1}}));
  const auto d = dual(rep);
  CHECK(d.dimension() == 2);
  CHECK(d.contains(std::vector<u32>{1, 2, 0}));
}

TEST_CASE("dual properties on random codes") {
  std::mt19937_64 rng(11);
  for (u32 q : {2u, 3u, 5u}) {
    Field f(q);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 1 + rng() % 8;
      const auto c = random_code(f, n, rng);
      const auto d = dual(c);
      CHECK(dual(d) == c);
      CHECK(c.dimension() + d.dimension() == n);
      for (Eigen::Index i = 0; i < c.basis().rows(); ++i)
        for (Eigen::Index j = 0; j < d.basis().rows(); ++j)
          CHECK(dot(f, {c.basis().row(i).data(), n}, {d.basis().row(j).data(), n}) == 0);
    }
  }
}

TEST_CASE("minimum distance") {
  Field f3(3);
  CHECK(min_distance(LinearCodeFq(f3, M({{1, 1, 1}}))) == 3);
  CHECK(min_distance(dual(LinearCodeFq(f3, M({{1, 1, 1}})))) == 2);
  try {
    min_distance(LinearCodeFq::zero(f3, 3));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyCode);
  }
  try {
    min_distance(LinearCodeFq::full(f3, 10), 1000);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SearchSpaceTooLarge);
  }
}

TEST_CASE("Hamming enumerators") {
  Field f2(2), f3(3);
  auto e = hamming_enumerator(LinearCodeFq(f2, M({{1, 1, 1}})));
  CHECK(e.counts == std::vector<u64>{1, 0, 0, 1});
  e = hamming_enumerator(LinearCodeFq::full(f2, 2));
  CHECK(e.counts == std::vector<u64>{1, 2, 1});
  e = hamming_enumerator(LinearCodeFq(f3, M({{1, 1, 1}})));
  CHECK(e.counts == std::vector<u64>{1, 0, 0, 2});
}

TEST_CASE("MacWilliams identity over F_q against brute-force duals") {
  std::mt19937_64 rng(5);
  for (u32 q : {2u, 3u, 5u}) {
    Field f(q);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 1 + rng() % (q == 5 ? 5 : 7);
      const auto c = random_code(f, n, rng);
      const auto a = hamming_enumerator(c);
      CHECK(a.total() == checked_space_size(q, c.dimension(), ~u64{0}));
      CHECK(a.counts[0] == 1);
      CHECK(macwilliams_small(a, q) == brute_dual_enumerator(c));
      CHECK(hamming_enumerator(dual(c)) == brute_dual_enumerator(c));
    }
  }
}

TEST_CASE("cyclic codes") {
  Field f2(2), f3(3);
  SUBCASE("g = x^n - 1 gives the zero code, g = 1 the full space") {
    CHECK(cyclic_code(Polynomial::xn_minus_1(f3, 4), 4).dimension() == 0);
    CHECK(cyclic_code(Polynomial::constant(f3, 1), 4) == LinearCodeFq::full(f3, 4));
  }
  SUBCASE("q=2, n=3, g=x+1 is the even-weight code") {
    const auto c = cyclic_code(Polynomial(f2, {1, 1}), 3);
    CHECK(words(c) == std::set<std::vector<u32>>{{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  }
  SUBCASE("non-divisor") {
    try {
      cyclic_code(Polynomial(f3, {1, 0, 1}), 3);
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotADivisor);
    }
  }
  SUBCASE("every divisor gives a cyclic code of dimension n - deg g with a cyclic dual") {
    for (u32 q : {2u, 3u, 5u}) {
      Field f(q);
      for (std::size_t n = 1; n <= 8; ++n)
        for (const auto& g : monic_divisors_of_xn_minus_1(f, n)) {
          const auto c = cyclic_code(g, n);
          CHECK(is_cyclic(c));
          CHECK(c.dimension() == n - static_cast<std::size_t>(g.degree()));
          const auto h = cyclic_dual_generator(g, n);
          CHECK(cyclic_code(h, n) == dual(c));
        }
    }
  }
  SUBCASE("dual generator examples") {
    CHECK(cyclic_dual_generator(Polynomial::constant(f3, 1), 4) == Polynomial::xn_minus_1(f3, 4));
    CHECK(cyclic_dual_generator(Polynomial::xn_minus_1(f3, 4), 4) == Polynomial::constant(f3, 1));
    CHECK(cyclic_dual_generator(Polynomial(f2, {1, 1}), 3) == Polynomial(f2, {1, 1, 1}));
  }
  SUBCASE("a non-cyclic code") {
    CHECK_FALSE(is_cyclic(LinearCodeFq(f3, M({{1, 0, 0}}))));
  }
}

TEST_CASE("self-dual cyclic criterion and audit") {
  const auto a = audit_self_dual_cyclic(Field(2), 2);
  CHECK(a.criterion);
  CHECK(a.found);
  CHECK(*a.witness == Polynomial(Field(2), {1, 1}));
  CHECK_FALSE(self_dual_cyclic_exists(Field(3), 4));
  CHECK_FALSE(self_dual_cyclic_exists(Field(2), 3));
  for (std::size_t n = 1; n <= 8; ++n) CHECK(audit_self_dual_cyclic(Field(2), n).agrees());
  for (std::size_t n = 1; n <= 8; ++n) CHECK(audit_self_dual_cyclic(Field(3), n).agrees());
}

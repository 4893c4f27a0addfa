#include "r3v/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "r3v/cyclic_r.hpp"
#include "r3v/fsd.hpp"
#include "r3v/wenum.hpp"

namespace r3v {

using json = nlohmann::json;

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Confirmed: return "confirmed";
    case ClaimStatus::Refuted: return "refuted";
    case ClaimStatus::Untestable: return "untestable";
    case ClaimStatus::Canonicalized: return "canonicalized";
  }
  return "untestable";
}

namespace {

u64 fnv1a(std::string_view s) {
  u64 h = 1469598103934665603ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

struct Context {
  u64 budget;
  std::mt19937_64 rng;
};

RingElem random_elem(const Ring& ring, std::mt19937_64& rng) {
  return ring.from_index(static_cast<u32>(rng() % ring.size()));
}

RingVector random_vector(const Ring& ring, std::size_t n, std::mt19937_64& rng) {
  RingVector x(n);
  for (auto& e : x) e = random_elem(ring, rng);
  return x;
}

// Between 0 and n + 1 generators, each scaled by a random element so that
// non-free codes are common.
LinearCodeR random_code(const Ring& ring, std::size_t n, std::mt19937_64& rng) {
  const std::size_t m = rng() % (n + 2);
  std::vector<RingVector> gens;
  for (std::size_t i = 0; i < m; ++i) gens.push_back(scale(ring, random_elem(ring, rng), random_vector(ring, n, rng)));
  return LinearCodeR(ring, n, gens);
}

LinearCodeR random_nonzero_code(const Ring& ring, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    LinearCodeR c = random_code(ring, n, rng);
    if (c.size_exponent() > 0) return c;
  }
}

json code_json(const LinearCodeR& c) {
  json gens = json::array();
  for (const auto& g : c.generators()) gens.push_back(format_vector(g));
  return {{"q", c.ring().q()}, {"n", c.length()}, {"generators", gens}};
}

json rows_json(const std::vector<RingVector>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(format_vector(r));
  return out;
}

json params_json(std::size_t len, std::size_t k, int d) { return json::array({len, k, d}); }

// Pass/fail counter that keeps the first few failures.
struct Tally {
  u64 tested = 0;
  u64 holds = 0;
  json failures = json::array();

  void add(bool ok, const std::function<json()>& witness = {}) {
    ++tested;
    if (ok) {
      ++holds;
    } else if (witness && failures.size() < 3) {
      failures.push_back(witness());
    }
  }
  bool all() const { return holds == tested; }
  json to_json() const {
    json j{{"tested", tested}, {"holds", holds}};
    if (!failures.empty()) j["counterexamples"] = failures;
    return j;
  }
};

std::size_t dims(const ComponentTriple& t) { return t.c1.dimension() + t.c2.dimension() + t.c3.dimension(); }

// ---------------------------------------------------------------- gray scope

void sec2_cardinality(Context& ctx, ClaimResult& r) {
  Tally crt, literal_odd, literal_q2;
  for (u32 q : {3u, 5u}) {
    Ring ring(q);
    for (int t = 0; t < 60; ++t) {
      const LinearCodeR c = random_code(ring, 1 + ctx.rng() % 3, ctx.rng);
      crt.add(dims(components_crt(c)) == c.size_exponent(), [&] { return code_json(c); });
      const auto p = components_paper(c);
      literal_odd.add(dims(p) == c.size_exponent(), [&] {
        return json{{"code", code_json(c)}, {"log_q_size", c.size_exponent()}, {"log_q_product", dims(p)}};
      });
    }
  }
  Ring r2(2);
  for (int t = 0; t < 60; ++t) {
    const LinearCodeR c = random_code(r2, 1 + ctx.rng() % 3, ctx.rng);
    const auto p = components_paper(c);
    literal_q2.add(dims(p) == c.size_exponent(), [&] {
      return json{{"code", code_json(c)}, {"log_q_size", c.size_exponent()}, {"log_q_product", dims(p)}};
    });
  }
  r.observed = {{"evaluation_components", crt.to_json()},
                {"printed_projections_q_odd", literal_odd.to_json()},
                {"printed_projections_q2", literal_q2.to_json()}};
  r.expected = "|C| = |C1||C2||C3| for every code";
  r.consistent = crt.all();
  r.status = literal_odd.all() && literal_q2.all() ? ClaimStatus::Confirmed : ClaimStatus::Canonicalized;
  r.note = "holds with C1, C2, C3 the images at v = 1, -1, 0 (q odd); the printed projections a, a+b, a+b+c are measured";
}

void sec2_decomposition(Context& ctx, ClaimResult& r) {
  Tally idempotent, literal;
  for (u32 q : {2u, 3u, 5u}) {
    Ring ring(q);
    for (int t = 0; t < 40; ++t) {
      const LinearCodeR c = random_code(ring, 1 + ctx.rng() % 2, ctx.rng);
      if (q % 2) idempotent.add(combine_components(ring, components_crt(c), CombineMode::Idempotent) == c);
      literal.add(combine_components(ring, components_paper(c), CombineMode::PaperLiteral) == c,
                  [&] { return code_json(c); });
    }
  }
  json ideals = json::object();
  bool all_principal = true;
  for (u32 q : {2u, 3u, 5u}) {
    Ring ring(q);
    const auto subs = enumerate_submodules(ring, 1, false, ctx.budget);
    std::size_t principal = 0;
    for (const auto& s : subs) {
      bool found = false;
      for (const auto& x : ring.elements())
        if (LinearCodeR(ring, 1, {RingVector{x}}) == s) {
          found = true;
          break;
        }
      principal += found;
    }
    all_principal = all_principal && principal == subs.size();
    ideals[std::to_string(q)] = {{"non_trivial", subs.size() - 2},
                                 {"principal", principal == subs.size()},
                                 {"size_of_ideal_v", LinearCodeR(ring, 1, {RingVector{ring.v()}}).size()}};
  }
  r.observed = {{"idempotent_recombination_q_odd", idempotent.to_json()},
                {"printed_recombination", literal.to_json()},
                {"ideals", ideals}};
  r.expected = {{"recombination", "C for every code"}, {"non_trivial_ideals", 3}, {"size_of_ideal_v", "q"}};
  r.consistent = idempotent.all();
  r.status = literal.all() ? ClaimStatus::Confirmed : ClaimStatus::Canonicalized;
  r.note = std::string("recombination holds with the orthogonal idempotents (v+v^2)/2, (v^2-v)/2, 1-v^2 (q odd); ") +
           "R is " + (all_principal ? "" : "not ") +
           "principal but has 6 non-trivial ideals for q odd and 4 for q = 2, and <v> = {a v + b v^2} has q^2 elements";
}

void sec3_lee_table(Context&, ClaimResult& r) {
  json per_q = json::object();
  bool foundation = true;
  std::set<int> contradictory;
  for (u32 q : {2u, 3u, 5u}) {
    Ring ring(q);
    const auto elems = ring.elements();
    for (const auto& x : elems) {
      const auto g = ring.gray(x);
      foundation = foundation && ring.lee_weight(x) == (g.g0 != 0) + (g.g1 != 0) + (g.g2 != 0);
      for (const auto& y : elems) {
        const auto s = ring.gray(ring.add(x, y));
        const auto gy = ring.gray(y);
        foundation = foundation && s.g0 == (g.g0 + gy.g0) % q && s.g1 == (g.g1 + gy.g1) % q &&
                     s.g2 == (g.g2 + gy.g2) % q;
      }
    }
    json rows = json::array();
    for (const auto& row : audit_lee_table(ring)) {
      if (row.contradictory()) contradictory.insert(row.row);
      rows.push_back({{"row", row.row},
                      {"condition", row.condition},
                      {"printed_weight", row.printed_weight},
                      {"matching", row.matching},
                      {"agreeing", row.agreeing},
                      {"gray_weights", row.observed_weights},
                      {"duplicate_of", row.duplicate_of},
                      {"contradictory", row.contradictory()}});
    }
    per_q[std::to_string(q)] = rows;
  }
  r.observed = {{"rows", per_q}, {"contradictory_rows", contradictory}, {"gray_additive_and_weight_is_wH", foundation}};
  r.expected = "every printed row agrees with w_H(Psi(x))";
  r.consistent = foundation;
  r.status = contradictory.empty() ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
  r.note = "Lee weight is taken as w_H(Psi(x)); '[mod]' is read as mod q";
}

void thm2(Context& ctx, ClaimResult& r) {
  Tally words, enumerators;
  for (u32 q : {2u, 3u, 5u}) {
    Ring ring(q);
    for (int t = 0; t < 70; ++t) {
      const LinearCodeR c = random_code(ring, 1 + ctx.rng() % (q == 5 ? 2 : 3), ctx.rng);
      enumerate_codewords(
          c,
          [&](const RingVector& w) {
            int lee = 0;
            for (const auto& e : w) lee += ring.lee_weight(e);
            words.add(lee == hamming_weight(gray_vector(ring, w)) && from_gray_vector(ring, gray_vector(ring, w)) == w);
          },
          ctx.budget);
      enumerators.add(lee_enumerator(c, ctx.budget) == hamming_enumerator(gray_image_code(c), ctx.budget),
                      [&] { return code_json(c); });
    }
  }
  r.observed = {{"codewords", words.to_json()}, {"enumerators", enumerators.to_json()}};
  r.expected = "w_L(c) = w_H(Psi(c)) for every codeword";
  r.consistent = enumerators.all();
  r.status = words.all() ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
}

void thm3(Context& ctx, ClaimResult& r) {
  Tally identity, codes;
  for (u32 q : {2u, 3u, 5u}) {
    Ring ring(q);
    for (const auto& x : ring.elements())
      for (const auto& y : ring.elements()) {
        const auto gx = ring.gray(x), gy = ring.gray(y);
        const auto p = ring.mul(x, y);
        const u32 dot = static_cast<u32>((u64{gx.g0} * gy.g0 + u64{gx.g1} * gy.g1 + u64{gx.g2} * gy.g2) % q);
        identity.add(dot == (2 * p.a0 + p.a2) % q);
      }
  }
  const std::vector<std::pair<u32, std::size_t>> cases{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}};
  for (const auto& [q, n] : cases) {
    Ring ring(q);
    for (const auto& c : enumerate_submodules(ring, n, false, ctx.budget))
      if (is_self_orthogonal(c))
        codes.add(is_self_orthogonal(gray_image_code(c)), [&] { return code_json(c); });
  }
  r.observed = {{"self_orthogonal_codes", codes.to_json()}, {"gray_product_identity", identity.to_json()}};
  r.expected = "Psi(C) self-orthogonal whenever C is";
  r.consistent = identity.all();
  r.status = codes.all() ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
  r.note = "Psi(x).Psi(y) = 2(xy)_0 + (xy)_2 in terms of the coefficients of xy; every submodule of R^n checked for the listed (q, n)";
  json listed = json::array();
  for (const auto& [q, n] : cases) listed.push_back({q, n});
  r.observed["cases"] = listed;
}

void cor4(Context& ctx, ClaimResult& r) {
  Tally t;
  for (u32 q : {2u, 3u}) {
    Ring ring(q);
    for (int i = 0; i < 60; ++i) {
      const LinearCodeR c = random_nonzero_code(ring, 1 + ctx.rng() % 3, ctx.rng);
      const int ex = min_lee_distance(c, DistanceStrategy::Exhaustive, ctx.budget).distance;
      const int gi = min_lee_distance(c, DistanceStrategy::GrayImage, ctx.budget).distance;
      t.add(ex == gi, [&] { return json{{"code", code_json(c)}, {"lee", ex}, {"gray_hamming", gi}}; });
    }
  }
  r.observed = t.to_json();
  r.expected = "equal minimum weights";
  r.status = t.all() ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
}

void lem5_dimension(Context& ctx, ClaimResult& r) {
  Tally crt, literal;
  for (u32 q : {2u, 3u, 5u}) {
    Ring ring(q);
    for (int i = 0; i < 60; ++i) {
      const LinearCodeR c = random_code(ring, 1 + ctx.rng() % 3, ctx.rng);
      const std::size_t k = gray_image_code(c).dimension();
      if (q % 2) crt.add(k == dims(components_crt(c)), [&] { return code_json(c); });
      const auto p = components_paper(c);
      literal.add(k == dims(p), [&] {
        return json{{"code", code_json(c)}, {"dimension", k}, {"k1_k2_k3", {p.c1.dimension(), p.c2.dimension(), p.c3.dimension()}}};
      });
    }
  }
  r.observed = {{"evaluation_components_q_odd", crt.to_json()}, {"printed_projections", literal.to_json()}};
  r.expected = "dim Psi(C) = k1 + k2 + k3";
  r.consistent = crt.all();
  r.status = literal.all() ? ClaimStatus::Confirmed : ClaimStatus::Canonicalized;
  r.note = "holds with the evaluation components; the printed projections are measured";
}

void lem5_distance(Context& ctx, ClaimResult& r) {
  Ring ring(3);
  Tally agree, split;
  u64 lemma_above = 0, lemma_below = 0;
  for (int i = 0; i < 120; ++i) {
    const LinearCodeR c = random_nonzero_code(ring, 1 + ctx.rng() % 3, ctx.rng);
    const int ex = min_lee_distance(c, DistanceStrategy::Exhaustive, ctx.budget).distance;
    const int lemma = min_lee_distance(c, DistanceStrategy::ComponentLemma, ctx.budget).distance;
    const int sp = min_lee_distance(c, DistanceStrategy::CrtSplit, ctx.budget).distance;
    split.add(sp == ex);
    lemma_above += lemma > ex;
    lemma_below += lemma < ex;
    agree.add(lemma == ex, [&] { return json{{"code", code_json(c)}, {"exhaustive", ex}, {"lemma5_based", lemma}}; });
  }
  r.observed = {{"agreement", agree.to_json()},
                {"lemma_value_above_true_distance", lemma_above},
                {"lemma_value_below_true_distance", lemma_below},
                {"crt_split_matches_exhaustive", split.to_json()}};
  r.expected = "d(Psi(C)) = min{d(C1), d(C2), d(C3)}";
  r.consistent = split.all();
  r.status = agree.all() ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
  r.note = "q = 3, n <= 3; the middle and last Gray blocks are (x(1)+x(-1))/2 and (x(1)-x(-1))/2, which mix C1 and C2";
}

void thm6(Context& ctx, ClaimResult& r) {
  Tally equal, routes, self_dual;
  for (u32 q : {2u, 3u}) {
    Ring ring(q);
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = 1 + ctx.rng() % 3;
      const LinearCodeR c = random_code(ring, n, ctx.rng);
      const LinearCodeR d = dual(c, DualMethod::Kernel, ctx.budget);
      equal.add(dual(gray_image_code(c)) == gray_image_code(d), [&] { return code_json(c); });
      if (n <= 2) routes.add(d == dual(c, DualMethod::BruteForce, ctx.budget));
      if (q % 2) routes.add(d == dual(c, DualMethod::Crt, ctx.budget));
    }
    for (const auto& c : enumerate_submodules(ring, 2, false, ctx.budget))
      if (is_self_orthogonal(c) && 2 * c.size_exponent() == 6) {
        const auto g = gray_image_code(c);
        self_dual.add(g == dual(g), [&] { return code_json(c); });
      }
  }
  r.observed = {{"gray_dual_equality", equal.to_json()},
                {"self_dual_codes_length_2", self_dual.to_json()},
                {"dual_routes_agree", routes.to_json()}};
  r.expected = "Psi(C)^perp = Psi(C^perp) for every code";
  r.consistent = routes.all();
  r.status = equal.all() && self_dual.all() ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
}

// --------------------------------------------------------- enumerators scope

template <class F>
void for_random_codes(Context& ctx, F&& f) {
  for (u32 q : {2u, 3u}) {
    Ring ring(q);
    for (int i = 0; i < 100; ++i) f(ring, random_code(ring, 1 + ctx.rng() % 2, ctx.rng));
  }
  Ring r5(5);
  for (int i = 0; i < 30; ++i) f(r5, random_code(r5, 1, ctx.rng));
}

int printed_class_weight(const Ring& ring, const RingElem& x, int& memberships) {
  const int shape = (x.a0 != 0) | (x.a1 != 0) << 1 | (x.a2 != 0) << 2;
  static constexpr std::array<int, 8> eta_of_shape{0, 1, 2, 4, 3, 5, 6, 7};
  const int eta = eta_of_shape[shape];
  const auto& table = printed_symbol_classes();
  int weight = 0;
  memberships = 0;
  for (int i = 0; i < 4; ++i)
    if (std::find(table.alpha_members[i].begin(), table.alpha_members[i].end(), eta) != table.alpha_members[i].end()) {
      weight += i;
      ++memberships;
    }
  (void)ring;
  return weight;
}

void thm7_1(Context& ctx, ClaimResult& r) {
  Tally cwe, swe;
  for_random_codes(ctx, [&](const Ring& ring, const LinearCodeR& c) {
    const auto lee = lee_enumerator(c, ctx.budget);
    const auto complete = complete_enumerator(c, ctx.budget);
    cwe.add(specialize(complete, ring, SpecializeTarget::Lee) == lee, [&] { return code_json(c); });
    swe.add(specialize(symmetrize(complete, ring), SpecializeTarget::Lee) == lee &&
            symmetrize(complete, ring) == symmetrized_enumerator(c, ctx.budget));
  });
  Tally printed;
  u64 multi = 0, none = 0;
  for (u32 q : {2u, 3u, 5u}) {
    Ring ring(q);
    for (const auto& x : ring.elements()) {
      int memberships = 0;
      const int w = printed_class_weight(ring, x, memberships);
      multi += memberships > 1;
      none += memberships == 0;
      printed.add(memberships == 1 && w == ring.lee_weight(x),
                  [&] { return json{{"q", q}, {"element", format_elem(x)}, {"printed_classes_weight", w}, {"lee", ring.lee_weight(x)}}; });
    }
  }
  r.observed = {{"identity_with_gray_weight_classes", cwe.to_json()},
                {"printed_class_table",
                 {{"elements", printed.to_json()}, {"in_several_classes", multi}, {"in_no_class", none}}}};
  r.expected = "Lee_C(X,Y) = cwe_C(X^3, X^2Y, XY^2, Y^3) with classes alpha_i giving w_L = alpha_1 + 2 alpha_2 + 3 alpha_3";
  r.consistent = swe.all();
  r.status = cwe.all() ? (printed.all() ? ClaimStatus::Confirmed : ClaimStatus::Canonicalized) : ClaimStatus::Refuted;
  r.note = "symbol class i is the set of elements with w_H(Psi(x)) = i; the printed eta/alpha table is audited separately";
}

void thm7_2(Context& ctx, ClaimResult& r) {
  Tally t;
  for_random_codes(ctx, [&](const Ring& ring, const LinearCodeR& c) {
    const auto ham = hamming_enumerator_r(c, ctx.budget);
    t.add(specialize(complete_enumerator(c, ctx.budget), ring, SpecializeTarget::Hamming) == ham &&
              specialize(symmetrized_enumerator(c, ctx.budget), SpecializeTarget::Hamming) == ham,
          [&] { return code_json(c); });
  });
  r.observed = t.to_json();
  r.expected = "equality for every code";
  r.status = t.all() ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
}

void thm7_3(Context& ctx, ClaimResult& r) {
  Tally t, route;
  for_random_codes(ctx, [&](const Ring&, const LinearCodeR& c) {
    const auto lee = lee_enumerator(c, ctx.budget);
    t.add(lee == hamming_enumerator(gray_image_code(c), ctx.budget), [&] { return code_json(c); });
    route.add(lee == lee_distribution(c, ctx.budget));
  });
  r.observed = t.to_json();
  r.expected = "equality for every code";
  r.consistent = route.all();
  r.status = t.all() ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
}

void thm7_4(Context& ctx, ClaimResult& r) {
  Tally corrected, printed_q2, printed_q3;
  for (u32 q : {2u, 3u}) {
    Ring ring(q);
    for (int i = 0; i < 110; ++i) {
      const LinearCodeR c = random_code(ring, 1 + ctx.rng() % 2, ctx.rng);
      const auto e = lee_enumerator(c, ctx.budget);
      const auto d = lee_enumerator(dual(c, DualMethod::Auto, ctx.budget), ctx.budget);
      corrected.add(macwilliams_lee(e, c.size(), q) == d, [&] { return code_json(c); });
      const auto p = macwilliams_lee_printed(e, c.size());
      (q == 2 ? printed_q2 : printed_q3).add(p == d, [&] {
        return json{{"code", code_json(c)},
                    {"lee", e.counts},
                    {"dual_lee", d.counts},
                    {"printed_transform", p ? json(p->counts) : json("not a weight distribution")}};
      });
    }
  }
  r.observed = {{"corrected_form", corrected.to_json()}, {"printed_form_q2", printed_q2.to_json()},
                {"printed_form_q3", printed_q3.to_json()}};
  r.expected = "Lee_C^perp(X,Y) = 1/|C| Lee_C(X+Y, X-Y) for every code";
  r.consistent = corrected.all();
  if (printed_q2.all() && printed_q3.all())
    r.status = ClaimStatus::Confirmed;
  else
    r.status = corrected.all() ? ClaimStatus::Canonicalized : ClaimStatus::Refuted;
  r.note = "the q-ary form 1/|C| Lee_C(X+(q-1)Y, X-Y) holds; the printed form coincides with it only at q = 2";
}

// -------------------------------------------------------------- cyclic scope

template <class F>
void for_divisor_triples(const Field& f, std::size_t n, F&& fn) {
  const auto divisors = monic_divisors_of_xn_minus_1(f, n);
  for (const auto& f1 : divisors)
    for (const auto& f2 : divisors)
      for (const auto& f3 : divisors) fn(make_cyclic_spec(n, f1, f2, f3));
}

void thm8(Context& ctx, ClaimResult& r) {
  Ring r3(3), r2(2);
  json per_n = json::object();
  bool ok = true, consistent = true;
  for (std::size_t n : {2u, 3u, 4u}) {
    Tally from_components, literal_cyclic, to_components;
    std::size_t triples = 0;
    for_divisor_triples(r3.field(), n, [&](const CyclicSpecR& spec) {
      ++triples;
      from_components.add(is_cyclic(cyclic_code_r(r3, spec)), [&] { return to_json(spec); });
      literal_cyclic.add(is_cyclic(cyclic_code_r(r3, spec, CombineMode::PaperLiteral)));
    });
    const auto codes = enumerate_cyclic_codes(r3, n, ctx.budget);
    for (const auto& c : codes) {
      const auto t = components_crt(c);
      to_components.add(is_cyclic(t.c1) && is_cyclic(t.c2) && is_cyclic(t.c3), [&] { return code_json(c); });
    }
    consistent = consistent && codes.size() == triples;
    ok = ok && from_components.all() && to_components.all();
    per_n[std::to_string(n)] = {{"components_to_code", from_components.to_json()},
                                {"code_to_components", to_components.to_json()},
                                {"printed_combination_cyclic", literal_cyclic.to_json()},
                                {"cyclic_codes", codes.size()},
                                {"divisor_triples", triples}};
  }
  json q2 = json::object();
  for (std::size_t n : {2u, 3u, 4u}) {
    Tally t;
    for (const auto& c : enumerate_cyclic_codes(r2, n, ctx.budget)) {
      const auto p = components_paper(c);
      t.add(is_cyclic(p.c1) && is_cyclic(p.c2) && is_cyclic(p.c3), [&] { return code_json(c); });
    }
    ok = ok && t.all();
    q2[std::to_string(n)] = t.to_json();
  }
  r.observed = {{"q3", per_n}, {"q2_printed_projections", q2}};
  r.expected = "C cyclic iff C1, C2, C3 cyclic";
  r.consistent = consistent;
  r.status = ok ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
  r.note = "q = 3 with evaluation components, both directions by exhausting all cyclic codes; q = 2 with the printed projections";
}

void cor9(Context& ctx, ClaimResult& r) {
  Ring r3(3);
  Tally equal, cyclic, brute;
  for (std::size_t n : {2u, 3u, 4u})
    for_divisor_triples(r3.field(), n, [&](const CyclicSpecR& spec) {
      const auto c = cyclic_code_r(r3, spec);
      const auto d = cyclic_dual_r(r3, spec);
      const auto k = dual(c, DualMethod::Kernel, ctx.budget);
      equal.add(d == k, [&] { return to_json(spec); });
      cyclic.add(is_cyclic(d));
      if (n == 2) brute.add(k == dual(c, DualMethod::BruteForce, ctx.budget));
    });
  r.observed = {{"componentwise_dual_equals_dual", equal.to_json()}, {"dual_cyclic", cyclic.to_json()},
                {"kernel_matches_brute_force", brute.to_json()}};
  r.expected = "C^perp cyclic and equal to the componentwise dual";
  r.consistent = brute.all();
  r.status = equal.all() && cyclic.all() ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
  r.note = "q = 3, n in {2, 3, 4}, every divisor triple";
}

void cor10(Context& ctx, ClaimResult& r) {
  const std::vector<std::pair<u32, std::size_t>> cases{{3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 4}, {2, 2}, {2, 3}, {2, 4}};
  json rows = json::array();
  bool agree = true, consistent = true;
  for (const auto& [q, n] : cases) {
    Ring ring(q);
    const auto s = self_dual_cyclic_search(ring, n, ctx.budget);
    const bool predicted = q == 2 && n % 2 == 0;
    const bool found = s.witness_code.has_value();
    agree = agree && s.exhausted && found == predicted;
    if (found) consistent = consistent && *s.witness_code == dual(*s.witness_code, DualMethod::BruteForce, ctx.budget);
    json row = to_json(s);
    row["q"] = q;
    row["n"] = n;
    row["predicted"] = predicted;
    rows.push_back(row);
  }
  r.observed = rows;
  r.expected = "a witness exactly when q is a power of 2 and n is even";
  r.consistent = consistent;
  r.status = agree ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
  r.note = "q odd: all divisor triples; q = 2: all cyclic codes by ideal enumeration; q = 2^m with m > 1 needs extension fields and is not tested";
}

void thm11(Context&, ClaimResult& r) {
  Ring r3(3);
  Tally idempotent, literal;
  for (std::size_t n : {2u, 4u})
    for_divisor_triples(r3.field(), n, [&](const CyclicSpecR& spec) {
      const std::size_t formula = cyclic_size_exponent(spec);
      idempotent.add(cyclic_code_r(r3, spec).size_exponent() == formula, [&] { return to_json(spec); });
      const std::size_t lit = cyclic_code_r(r3, spec, CombineMode::PaperLiteral).size_exponent();
      literal.add(lit == formula, [&] {
        json j = to_json(spec);
        j["log_q_size"] = lit;
        j["formula"] = formula;
        return j;
      });
    });
  r.observed = {{"idempotent_combination", idempotent.to_json()}, {"printed_combination", literal.to_json()}};
  r.expected = "|C| = q^(3n - sum deg f_i) for every divisor triple";
  r.consistent = idempotent.all();
  r.status = literal.all() ? ClaimStatus::Confirmed : ClaimStatus::Canonicalized;
  r.note = "q = 3, n in {2, 4}; f_i generates the component at v = 1, -1, 0 combined with orthogonal idempotents";
}

// ----------------------------------------------------------------- fsd scope

struct ConstructionStats {
  Tally isodual, fsd, gray;
  u64 unsigned_tested = 0, unsigned_works = 0;
};

void check_construction(Context& ctx, const Construction& c, bool exhaustive, ConstructionStats& s) {
  const auto check = isodual_witness_check(c.code, c.witness);
  s.isodual.add(check.ok(), [&] { return json{{"block", rows_json(c.block)}}; });
  if (exhaustive) {
    s.fsd.add(lee_distribution(c.code, ctx.budget) == lee_distribution(dual(c.code), ctx.budget),
              [&] { return json{{"block", rows_json(c.block)}}; });
    s.gray.add(gray_fsd_transfer(c.code, ctx.budget));
  }
  PermutationWitness plain = c.witness;
  plain.negate.assign(plain.negate.size(), false);
  ++s.unsigned_tested;
  s.unsigned_works += isodual_witness_check(c.code, plain).witness_maps_to_dual;
}

void construction_claim(Context& ctx, ClaimResult& r, char kind) {
  auto build = [&](const Ring& ring, std::size_t n) {
    switch (kind) {
      case 'a': {
        std::vector<RingVector> rows;
        for (std::size_t i = 0; i < n; ++i) rows.push_back(random_vector(ring, n, ctx.rng));
        return construction_a(ring, SymmetricMatrixR::from_upper(rows));
      }
      case 'b': return construction_b(ring, {random_vector(ring, n, ctx.rng)});
      default:
        return construction_c(ring, {random_elem(ring, ctx.rng), random_elem(ring, ctx.rng),
                                     {random_vector(ring, n - 1, ctx.rng)}});
    }
  };
  const std::size_t n_min = kind == 'c' ? 2 : 1;
  ConstructionStats s3, s5;
  Ring r3(3), r5(5);
  const int per_n = kind == 'c' ? 50 : 34;
  for (std::size_t n = n_min; n <= 3; ++n)
    for (int i = 0; i < per_n; ++i) check_construction(ctx, build(r3, n), true, s3);
  for (std::size_t n = n_min; n <= 3; ++n)
    for (int i = 0; i < 10; ++i) check_construction(ctx, build(r5, n), false, s5);
  r.observed = {{"q3", {{"isodual_witness", s3.isodual.to_json()},
                        {"lee_enumerators_equal", s3.fsd.to_json()},
                        {"gray_image_formally_self_dual", s3.gray.to_json()}}},
                {"q5", {{"isodual_witness", s5.isodual.to_json()}}},
                {"unsigned_witness_suffices", {{"tested", s3.unsigned_tested + s5.unsigned_tested},
                                               {"works", s3.unsigned_works + s5.unsigned_works}}}};
  r.expected = "isodual and formally self-dual for every input";
  r.consistent = s3.fsd.all() && s3.gray.all();
  r.status = s3.isodual.all() && s5.isodual.all() && s3.fsd.all() ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
  r.note = "seeded random inputs, q = 3 (exhaustive enumerators) and q = 5 (witness only), n <= 3; "
           "the witness is (u, w) -> (w o s, -u o s), a permutation with sign changes, which preserves Lee weight";
}

void thm12(Context& ctx, ClaimResult& r) { construction_claim(ctx, r, 'a'); }
void thm14(Context& ctx, ClaimResult& r) { construction_claim(ctx, r, 'b'); }
void thm16(Context& ctx, ClaimResult& r) { construction_claim(ctx, r, 'c'); }

// Formally self-dual and size-matched submodules of R^2 for q in {2, 3}.
std::vector<LinearCodeR> fsd_pool(Context& ctx, std::vector<LinearCodeR>* non_fsd = nullptr) {
  std::vector<LinearCodeR> out;
  for (u32 q : {2u, 3u})
    for (auto& c : enumerate_submodules(Ring(q), 2, false, ctx.budget)) {
      if (2 * c.size_exponent() != 6) continue;
      if (is_formally_self_dual(c, ctx.budget))
        out.push_back(std::move(c));
      else if (non_fsd)
        non_fsd->push_back(std::move(c));
    }
  return out;
}

void thm18(Context& ctx, ClaimResult& r) {
  std::vector<LinearCodeR> non_fsd;
  auto pool = fsd_pool(ctx, &non_fsd);
  Ring r3(3);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 1 + ctx.rng() % 2;
    pool.push_back(construction_b(r3, {random_vector(r3, n, ctx.rng)}).code);
  }
  Tally transfer, converse;
  for (const auto& c : pool) transfer.add(gray_fsd_transfer(c, ctx.budget), [&] { return code_json(c); });
  for (const auto& c : non_fsd) converse.add(!gray_fsd_transfer(c, ctx.budget));
  r.observed = {{"formally_self_dual_codes", transfer.to_json()}, {"non_formally_self_dual_size_matched", converse.to_json()}};
  r.expected = "Psi(C) formally self-dual whenever C is";
  r.consistent = converse.all();
  r.status = transfer.all() ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
  r.note = "every submodule of R^2 (q = 2, 3) plus double circulant codes; follows from Lee_C = w_Psi(C) and Psi(C)^perp = Psi(C^perp)";
}

void lem19(Context& ctx, ClaimResult& r) {
  const auto pool = fsd_pool(ctx);
  std::map<u32, std::vector<const LinearCodeR*>> by_q;
  for (const auto& c : pool)
    if (by_q[c.ring().q()].size() < 8) by_q[c.ring().q()].push_back(&c);
  Tally fsd, product_law, dual_law;
  for (auto& [q, codes] : by_q)
    for (const auto* a : codes)
      for (const auto* b : codes) {
        const auto p = direct_product(*a, *b);
        const auto e = lee_distribution(p, ctx.budget);
        product_law.add(e == enumerator_product(lee_distribution(*a, ctx.budget), lee_distribution(*b, ctx.budget)));
        dual_law.add(dual(p) == direct_product(dual(*a), dual(*b)));
        fsd.add(e == lee_distribution(dual(p), ctx.budget),
                [&] { return json{{"left", code_json(*a)}, {"right", code_json(*b)}}; });
      }
  r.observed = {{"products_formally_self_dual", fsd.to_json()},
                {"enumerator_product_law", product_law.to_json()},
                {"dual_of_product", dual_law.to_json()}};
  r.expected = "C1 x C2 formally self-dual";
  r.consistent = product_law.all() && dual_law.all();
  r.status = fsd.all() ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
  r.note = "all ordered pairs from eight length-2 formally self-dual codes per q in {2, 3}";
}

void thm20(Context& ctx, ClaimResult& r) {
  const std::vector<std::pair<u32, std::size_t>> cases{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 3}};
  json rows = json::array();
  bool all_exist = true, consistent = true;
  for (const auto& [q, n] : cases) {
    const auto s = odd_fsd_search(Ring(q), n, ctx.budget);
    all_exist = all_exist && s.witness.has_value();
    // |C||C^perp| = q^3n forces 3n even when |C| = |C^perp| and q is prime
    if (n % 2 == 1) consistent = consistent && s.size_matched == 0;
    json row{{"q", q}, {"n", n}, {"exhausted", s.exhausted}, {"submodules", s.tested},
             {"size_matched", s.size_matched}, {"formally_self_dual", s.fsd_found},
             {"odd_witness", s.witness ? code_json(*s.witness) : json(nullptr)}};
    if (s.witness) row["witness_lee_enumerator"] = lee_distribution(*s.witness, ctx.budget).counts;
    rows.push_back(row);
  }
  r.observed = rows;
  r.expected = "an odd formally self-dual code at every length, built from one of length 1";
  r.consistent = consistent;
  r.status = all_exist ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
  r.note = "|C| = |C^perp| forces |C|^2 = q^3n, impossible for prime q and odd n, so no length-1 code exists; "
           "odd formally self-dual codes of length 2 exist, and direct products give every even length";
}

// ------------------------------------------------------------ examples scope

std::vector<RingVector> parse_rows(const Ring& ring, const std::vector<const char*>& rows) {
  std::vector<RingVector> out;
  for (const char* row : rows) out.push_back(parse_vector(ring, row));
  return out;
}

void ex13(Context& ctx, ClaimResult& r) {
  Ring ring(3);
  const auto printed = parse_rows(ring, {"0 v 2+v 1+2v+2v^2 2v+2v^2", "v 2v+2v^2 2 1+v 1+v^2",
                                         "2+v 2 2v^2 2+v+v^2 1+2v", "1+2v+v^2 1+v 2+v+v^2 1 v",
                                         "2v+2v^2 1+v^2 1+2v v 2"});
  json asym = json::array();
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (printed[i][j] != printed[j][i])
        asym.push_back({{"row", i + 1}, {"col", j + 1}, {"entry", format_elem_poly(printed[i][j])},
                        {"mirror", format_elem_poly(printed[j][i])}});
  std::vector<RingVector> lower = printed;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) lower[i][j] = printed[j][i];
  const auto c = construction_a(ring, SymmetricMatrixR::from_upper(printed));
  const auto alt = construction_a(ring, SymmetricMatrixR(lower));
  const std::size_t len = 3 * c.code.length(), k = gray_image_code(c.code).dimension();
  const int d = min_lee_distance(c.code, DistanceStrategy::Exhaustive, ctx.budget).distance;
  const int d_split = min_lee_distance(c.code, DistanceStrategy::CrtSplit, ctx.budget).distance;
  const bool isodual = isodual_witness_check(c.code, c.witness).ok();
  const bool fsd = lee_distribution(c.code, ctx.budget) == lee_distribution(dual(c.code), ctx.budget);
  const int d_alt = min_lee_distance(alt.code, DistanceStrategy::CrtSplit, ctx.budget).distance;
  r.observed = {{"input", "upper triangle mirrored"},
                {"asymmetric_entries", asym},
                {"matrix", rows_json(c.block)},
                {"parameters", params_json(len, k, d)},
                {"distance_provenance", "exhaustive"},
                {"crt_split_distance", d_split},
                {"isodual_witness", isodual},
                {"formally_self_dual", fsd},
                {"lower_triangle_alternative", {{"parameters", params_json(len, k, d_alt)}, {"distance_provenance", "crt-split"}}}};
  r.expected = {{"parameters", params_json(30, 15, 9)}, {"formally_self_dual", true}};
  r.consistent = d == d_split && isodual && fsd;
  r.status = len == 30 && k == 15 && d == 9 ? ClaimStatus::Canonicalized : ClaimStatus::Refuted;
  r.note = "printed A is not symmetric; the upper triangle is mirrored and the distance found by enumerating all 3^15 codewords";
}

void ex15(Context& ctx, ClaimResult& r) {
  Ring ring(5);
  const auto printed = parse_rows(ring, {"3v+2v^2 4v 3+2v 1+2v+2v^2 2v+3v^2", "2v+3v^2 3v+2v^2 4v 3+2v 1+2v+2v^2",
                                         "1+2v+2v^2 2v+3v^2 3v+2v^2 4v 3+2v", "3+2v 1+2v+2v^2 2v+3v^2 3v+2v^2 4v",
                                         "4v 3+2v 3+2v 1+2v+2v^2 2v+3v^2"});
  const CirculantSpecR spec{printed[0]};
  const auto circ = spec.matrix();
  json off = json::array();
  for (std::size_t i = 0; i < 5; ++i)
    if (printed[i] != circ[i])
      off.push_back({{"row", i + 1}, {"printed", format_vector(printed[i])}, {"circulant", format_vector(circ[i])}});
  const auto c = construction_b(ring, spec);
  const std::size_t len = 3 * c.code.length(), k = gray_image_code(c.code).dimension();
  const auto lemma = min_lee_distance(c.code, DistanceStrategy::ComponentLemma, ctx.budget);
  const auto exact = min_lee_distance(c.code, DistanceStrategy::CrtSplit, ctx.budget);
  const auto comps = components_crt(c.code);
  json comp = json::array();
  for (const LinearCodeFq* part : {&comps.c1, &comps.c2, &comps.c3})
    comp.push_back(params_json(part->length(), part->dimension(),
                               part->dimension() ? min_distance(*part, ctx.budget) : 0));
  const bool isodual = isodual_witness_check(c.code, c.witness).ok();
  std::vector<RingVector> printed_block = printed;
  const LinearCodeR printed_code = [&] {
    std::vector<RingVector> rows;
    for (std::size_t i = 0; i < 5; ++i) {
      RingVector row(10);
      row[i] = ring.one();
      std::copy(printed[i].begin(), printed[i].end(), row.begin() + 5);
      rows.push_back(row);
    }
    return LinearCodeR(ring, 10, rows);
  }();
  const bool printed_isodual = isodual_witness_check(printed_code, c.witness).ok();
  r.observed = {{"input", "circulant of the printed first row"},
                {"rows_breaking_circulancy", off},
                {"parameters", params_json(len, k, lemma.distance)},
                {"distance_provenance", lemma.provenance},
                {"components", comp},
                {"exact_distance", {{"value", exact.distance}, {"provenance", exact.provenance}}},
                {"isodual_witness", isodual},
                {"formally_self_dual", isodual},
                {"formally_self_dual_provenance", "isodual witness"},
                {"printed_matrix_isodual_witness", printed_isodual}};
  r.expected = {{"parameters", params_json(30, 15, 12)}, {"formally_self_dual", true}};
  r.consistent = isodual && exact.distance <= lemma.distance * 3;
  r.status = len == 30 && k == 15 && exact.distance == 12 ? ClaimStatus::Canonicalized : ClaimStatus::Refuted;
  r.note = "printed row 5 is not a shift of row 4; 5^15 codewords are out of reach, so d is reported from the component "
           "distances and from the exact split C3 + {(a+b | a-b)}";
}

void ex17(Context& ctx, ClaimResult& r) {
  Ring ring(3);
  const auto printed_core = parse_rows(ring, {"2 1+v 2v^2", "2v^2 2 1+v", "1+v v^2 2"});
  const CirculantSpecR core{printed_core[0]};
  json off = json::array();
  const auto circ = core.matrix();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (printed_core[i][j] != circ[i][j])
        off.push_back({{"row", i + 1}, {"col", j + 1}, {"printed", format_elem_poly(printed_core[i][j])},
                       {"circulant", format_elem_poly(circ[i][j])}});
  const BorderedSpecR spec{parse_elem(ring, "2+v+2v^2"), parse_elem(ring, "2+2v"), core};
  const auto c = construction_c(ring, spec);
  const std::size_t len = 3 * c.code.length(), k = gray_image_code(c.code).dimension();
  const int d = min_lee_distance(c.code, DistanceStrategy::Exhaustive, ctx.budget).distance;
  const int d_gray = min_lee_distance(c.code, DistanceStrategy::GrayImage, ctx.budget).distance;
  const int d_split = min_lee_distance(c.code, DistanceStrategy::CrtSplit, ctx.budget).distance;
  const bool isodual = isodual_witness_check(c.code, c.witness).ok();
  const bool fsd = is_formally_self_dual(c.code, ctx.budget);
  const BorderedSpecR alt_spec{parse_elem(ring, "2+v+2v"), spec.omega, core};
  const auto alt = construction_c(ring, alt_spec);
  r.observed = {{"input", "alpha = 2+v+2v^2, core rebuilt from its first row"},
                {"core_entries_breaking_circulancy", off},
                {"matrix", rows_json(c.block)},
                {"length_over_R", c.code.length()},
                {"parameters", params_json(len, k, d)},
                {"distance_provenance", "exhaustive"},
                {"isodual_witness", isodual},
                {"formally_self_dual", fsd},
                {"alpha_as_in_generator_matrix",
                 {{"alpha", format_elem_poly(alt_spec.alpha)},
                  {"parameters", params_json(len, k, min_lee_distance(alt.code, DistanceStrategy::Exhaustive, ctx.budget).distance)},
                  {"formally_self_dual", is_formally_self_dual(alt.code, ctx.budget)}}}};
  r.expected = {{"parameters", params_json(24, 12, 9)}, {"formally_self_dual", true}, {"length_over_R", 10}};
  r.consistent = d == d_gray && d == d_split && isodual && fsd;
  r.status = len == 24 && k == 12 && d == 9 ? ClaimStatus::Canonicalized : ClaimStatus::Refuted;
  r.note = "the generator matrix prints alpha as 2+v+2v (= 2 mod 3) and the text gives length 10 for n = 4; "
           "d by enumerating all 3^12 codewords";
}

using ClaimFn = void (*)(Context&, ClaimResult&);

const std::map<std::string_view, ClaimFn>& claim_functions() {
  static const std::map<std::string_view, ClaimFn> fns{
      {"sec2.cardinality", sec2_cardinality}, {"sec2.decomposition", sec2_decomposition},
      {"sec3.lee_table", sec3_lee_table},     {"thm2", thm2},
      {"thm3", thm3},                         {"cor4", cor4},
      {"lem5.dimension", lem5_dimension},     {"lem5.distance", lem5_distance},
      {"thm6", thm6},                         {"thm7.1", thm7_1},
      {"thm7.2", thm7_2},                     {"thm7.3", thm7_3},
      {"thm7.4", thm7_4},                     {"thm8", thm8},
      {"cor9", cor9},                         {"cor10", cor10},
      {"thm11", thm11},                       {"thm12", thm12},
      {"ex13", ex13},                         {"thm14", thm14},
      {"ex15", ex15},                         {"thm16", thm16},
      {"ex17", ex17},                         {"thm18", thm18},
      {"lem19", lem19},                       {"thm20", thm20},
  };
  return fns;
}

}  // namespace

bool VerificationReport::consistent() const {
  return complete && std::all_of(entries.begin(), entries.end(), [](const ClaimResult& e) { return e.consistent; });
}

json VerificationReport::to_json() const {
  json claims = json::array();
  std::map<std::string, int> summary;
  for (const auto& e : entries) {
    json j{{"id", e.id},
           {"anchor", e.anchor},
           {"scope", e.scope},
           {"status", r3v::to_string(e.status)},
           {"observed", e.observed},
           {"expected", e.expected},
           {"note", e.note},
           {"consistent", e.consistent}};
    if (options.timings) j["runtime_ms"] = e.runtime_ms;
    claims.push_back(std::move(j));
    ++summary[r3v::to_string(e.status)];
  }
  return {{"scope", options.scope}, {"seed", options.seed},  {"budget", options.budget},
          {"complete", complete},   {"consistent", consistent()}, {"summary", summary},
          {"claims", claims}};
}

std::string VerificationReport::to_text() const {
  std::string out;
  char line[256];
  for (const auto& e : entries) {
    std::snprintf(line, sizeof line, "%-20s %s%s", e.id.c_str(), r3v::to_string(e.status).c_str(),
                  e.consistent ? "" : " INCONSISTENT");
    out += line;
    if (options.timings) {
      std::snprintf(line, sizeof line, " (%.0f ms)", e.runtime_ms);
      out += line;
    }
    out += '\n';
  }
  std::snprintf(line, sizeof line, "%zu claims, scope %s, seed %llu, %s\n", entries.size(), options.scope.c_str(),
                static_cast<unsigned long long>(options.seed),
                consistent() ? "all cross-checks agree" : "cross-check failure");
  out += line;
  return out;
}

VerificationReport run_verification_suite(const VerificationOptions& options) {
  if (std::find(kScopes.begin(), kScopes.end(), options.scope) == kScopes.end())
    throw Error(ErrorCode::InvalidParams, "unknown scope '" + options.scope + "'");
  VerificationReport report;
  report.options = options;
  const auto& fns = claim_functions();
  std::size_t expected = 0;
  for (const auto& info : kClaims) {
    if (options.scope != "all" && info.scope != options.scope) continue;
    ++expected;
    ClaimResult r;
    r.id = info.id;
    r.anchor = info.anchor;
    r.scope = info.scope;
    const auto it = fns.find(info.id);
    if (it == fns.end()) continue;
    Context ctx{options.budget, std::mt19937_64(options.seed ^ fnv1a(info.id))};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      it->second(ctx, r);
    } catch (const Error& e) {
      r.status = ClaimStatus::Untestable;
      r.observed = nullptr;
      r.note = e.what();
      r.consistent = e.code() == ErrorCode::SearchSpaceTooLarge;
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report.entries.push_back(std::move(r));
  }
  std::set<std::string> ids;
  for (const auto& e : report.entries) ids.insert(e.id);
  report.complete = ids.size() == report.entries.size() && report.entries.size() == expected;
  return report;
}

}  // namespace r3v

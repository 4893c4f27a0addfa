#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "r3v/cyclic_r.hpp"
#include "r3v/fsd.hpp"
#include "r3v/wenum.hpp"

using namespace r3v;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

LinearCodeR random_code(const Ring& ring, std::size_t n, std::mt19937_64& rng) {
  return LinearCodeR(ring, n, oracle::random_generators(ring, n, rng));
}

WeightEnumerator lee_of_set(const Ring& ring, std::size_t n, const oracle::WordSet& set) {
  WeightEnumerator e(3 * n);
  for (const auto& k : set) ++e.counts[oracle::lee(ring, oracle::unkey(ring, k))];
  return e;
}

std::vector<RingVector> rows(const Ring& ring, std::initializer_list<const char*> text) {
  std::vector<RingVector> out;
  for (const char* t : text) out.push_back(parse_vector(ring, t));
  return out;
}

std::string params(const LinearCodeR& c, int d) {
  return "[" + std::to_string(3 * c.length()) + "," + std::to_string(gray_image_code(c).dimension()) + "," +
         std::to_string(d) + "]";
}

Outcome gray_foundation() {
  const auto t0 = Clock::now();
  bool ok = true;
  for (u32 q : {2u, 3u, 5u}) {
    const Ring ring(q);
    for (const auto& x : ring.elements()) {
      ok = ok && ring.lee_weight(x) == oracle::lee(ring, {x});
      const auto gx = gray_vector(ring, RingVector{x});
      for (const auto& y : ring.elements()) {
        const auto gy = gray_vector(ring, RingVector{y});
        const auto gs = gray_vector(ring, RingVector{ring.add(x, y)});
        for (int i = 0; i < 3; ++i) ok = ok && gs[i] == (gx[i] + gy[i]) % q;
      }
    }
  }
  const double secs = seconds_since(t0);
  std::string listed;
  bool duplicated_pattern = false;
  for (const auto& row : audit_lee_table(Ring(3)))
    if (row.contradictory()) {
      listed += (listed.empty() ? "" : ",") + std::to_string(row.row);
      duplicated_pattern = duplicated_pattern || row.condition == "a0!=0; a1!=0; a2=0";
    }
  return {ok && secs < 1.0 && duplicated_pattern,
          "exhaustive q in {2,3,5} " + std::string(ok ? "exact" : "MISMATCH") + (secs < 1.0 ? "" : ", over 1 s") +
              "; contradictory table rows " + listed};
}

Outcome gray_dual() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(42);
  int tested = 0, holds = 0, oracle_checked = 0, oracle_holds = 0;
  for (u32 q : {2u, 3u}) {
    const Ring ring(q);
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = 1 + rng() % 3;
      const LinearCodeR c = random_code(ring, n, rng);
      const LinearCodeR d = dual(c, DualMethod::Kernel);
      ++tested;
      holds += dual(gray_image_code(c)) == gray_image_code(d);
      if (n <= 2) {
        ++oracle_checked;
        oracle_holds += oracle::as_set(d) == oracle::dual(ring, n, oracle::as_set(c));
      }
    }
  }
  const double secs = seconds_since(t0);
  return {holds == tested && oracle_holds == oracle_checked && secs < 30.0,
          std::to_string(holds) + "/" + std::to_string(tested) + " codes equal, dual oracle " +
              std::to_string(oracle_holds) + "/" + std::to_string(oracle_checked) + (secs < 30.0 ? "" : ", over 30 s")};
}

Outcome macwilliams() {
  std::mt19937_64 rng(7);
  int tested = 0, corrected = 0, printed_refuted_q3 = 0;
  for (u32 q : {2u, 3u}) {
    const Ring ring(q);
    for (int i = 0; i < 60; ++i) {
      const std::size_t n = 1 + rng() % 2;
      const LinearCodeR c = random_code(ring, n, rng);
      const auto set = oracle::as_set(c);
      const WeightEnumerator direct = lee_of_set(ring, n, oracle::dual(ring, n, set));
      const WeightEnumerator e = lee_of_set(ring, n, set);
      ++tested;
      corrected += macwilliams_lee(e, set.size(), q) == direct;
      if (q == 3) printed_refuted_q3 += macwilliams_lee_printed(e, set.size()) != direct;
    }
  }
  return {corrected == tested && printed_refuted_q3 > 0,
          "corrected form " + std::to_string(corrected) + "/" + std::to_string(tested) +
              " against brute-force duals; printed form fails on " + std::to_string(printed_refuted_q3) +
              " q=3 codes"};
}

Outcome cyclic_sizes() {
  const Ring ring(3);
  int triples = 0, idempotent = 0, literal = 0, spans = 0, spans_ok = 0;
  for (std::size_t n : {2u, 4u}) {
    const auto divs = monic_divisors_of_xn_minus_1(ring.field(), n);
    for (const auto& f1 : divs)
      for (const auto& f2 : divs)
        for (const auto& f3 : divs) {
          const auto spec = make_cyclic_spec(n, f1, f2, f3);
          const LinearCodeR c = cyclic_code_r(ring, spec);
          ++triples;
          idempotent += c.size_exponent() == cyclic_size_exponent(spec);
          literal += cyclic_code_r(ring, spec, CombineMode::PaperLiteral).size_exponent() == cyclic_size_exponent(spec);
          if (n == 2) {
            ++spans;
            u64 expect = 1;
            for (std::size_t i = 0; i < cyclic_size_exponent(spec); ++i) expect *= 3;
            spans_ok += oracle::span(ring, n, c.generators()).size() == expect;
          }
        }
  }
  return {idempotent == triples && spans_ok == spans,
          std::to_string(idempotent) + "/" + std::to_string(triples) + " divisor triples match (span oracle " +
              std::to_string(spans_ok) + "/" + std::to_string(spans) + "); literal combination matches " +
              std::to_string(literal) + "/" + std::to_string(triples)};
}

Outcome self_dual_cyclic() {
  bool ok = true;
  std::string detail;
  for (std::size_t n : {2u, 3u, 4u}) {
    const auto s = self_dual_cyclic_search(Ring(3), n);
    ok = ok && s.exhausted && !s.witness_code;
    detail += "q=3 n=" + std::to_string(n) + (s.witness_code ? " witness" : " none") +
              (s.exhausted ? " (exhausted); " : " (partial); ");
  }
  const Ring r2(2);
  for (std::size_t n : {2u, 4u}) {
    const auto s = self_dual_cyclic_search(r2, n);
    ok = ok && s.exhausted;
    bool verified = true;
    if (s.witness_code) {
      const auto set = oracle::as_set(*s.witness_code);
      verified = set == oracle::dual(r2, n, set) && is_cyclic(*s.witness_code);
      ok = ok && verified;
    }
    detail += "q=2 n=" + std::to_string(n) +
              (s.witness_code ? std::string(" witness") + (verified ? " verified" : " NOT self-dual") : " none") +
              (s.exhausted ? " (exhausted); " : " (partial); ");
  }
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

Outcome example_bordered() {
  const Ring ring(3);
  const auto t0 = Clock::now();
  const BorderedSpecR spec{parse_elem(ring, "2+v+2v^2"), parse_elem(ring, "2+2v"), {parse_vector(ring, "2 1+v 2v^2")}};
  const auto con = construction_c(ring, spec);
  const int d = min_lee_distance(con.code, DistanceStrategy::Exhaustive).distance;
  const double secs = seconds_since(t0);
  const bool shape = con.code.length() == 8 && gray_image_code(con.code).dimension() == 12;
  return {shape && secs < 5.0, "observed " + params(con.code, d) + "_3 by exhaustion vs d=9 expected" +
                                   (secs < 5.0 ? "" : ", over 5 s")};
}

Outcome example_symmetric() {
  const Ring ring(3);
  const auto t0 = Clock::now();
  const auto a = rows(ring, {"0 v 2+v 1+2v+2v^2 2v+2v^2", "v 2v+2v^2 2 1+v 1+v^2", "2+v 2 2v^2 2+v+v^2 1+2v",
                             "1+2v+v^2 1+v 2+v+v^2 1 v", "2v+2v^2 1+v^2 1+2v v 2"});
  const auto con = construction_a(ring, SymmetricMatrixR::from_upper(a));
  const int d = min_lee_distance(con.code, DistanceStrategy::Exhaustive).distance;
  const double secs = seconds_since(t0);
  const bool shape = con.code.length() == 10 && gray_image_code(con.code).dimension() == 15;
  return {shape && secs < 300.0, "observed " + params(con.code, d) + "_3 over 3^15 codewords vs d=9 expected" +
                                     (secs < 300.0 ? "" : ", over 5 min")};
}

Outcome example_circulant() {
  const Ring r5(5);
  const auto con = construction_b(r5, {parse_vector(r5, "3v+2v^2 4v 3+2v 1+2v+2v^2 2v+3v^2")});
  const auto lemma = min_lee_distance(con.code, DistanceStrategy::ComponentLemma);
  const auto t = components_crt(con.code);
  std::string comps;
  bool shapes = true;
  for (const LinearCodeFq* part : {&t.c1, &t.c2, &t.c3}) {
    shapes = shapes && part->length() == 10 && part->dimension() == 5;
    comps += (comps.empty() ? "" : " ") + std::string("[10,") + std::to_string(part->dimension()) + "," +
             std::to_string(min_distance(*part)) + "]";
  }
  std::mt19937_64 rng(5);
  const Ring r3(3);
  int tested = 0, agree = 0;
  while (tested < 120) {
    const LinearCodeR c = random_code(r3, 1 + rng() % 3, rng);
    if (c.size_exponent() == 0) continue;
    ++tested;
    agree += min_lee_distance(c, DistanceStrategy::ComponentLemma).distance ==
             min_lee_distance(c, DistanceStrategy::Exhaustive).distance;
  }
  const bool lemma_verdict = tested >= 100;
  return {shapes && lemma.provenance == "lemma5-based" && lemma_verdict,
          "components " + comps + ", d=" + std::to_string(lemma.distance) + " (" + lemma.provenance +
              ") vs d=12 expected; distance formula holds on " + std::to_string(agree) + "/" +
              std::to_string(tested) + " random q=3 codes (" + (agree == tested ? "validated" : "refuted") + ")"};
}

Outcome constructions() {
  const Ring ring(3);
  std::mt19937_64 rng(42);
  auto vec = [&](std::size_t n) {
    RingVector v(n);
    for (auto& e : v) e = oracle::random_elem(ring, rng);
    return v;
  };
  std::string detail;
  bool ok = true;
  for (char kind : {'a', 'b', 'c'}) {
    int isodual = 0, fsd = 0, transfer = 0;
    for (int i = 0; i < 102; ++i) {
      const std::size_t n = (kind == 'c' ? 2 : 1) + i % (kind == 'c' ? 2 : 3);
      Construction con = [&] {
        if (kind == 'a') {
          std::vector<RingVector> m;
          for (std::size_t r = 0; r < n; ++r) m.push_back(vec(n));
          return construction_a(ring, SymmetricMatrixR::from_upper(m));
        }
        if (kind == 'b') return construction_b(ring, {vec(n)});
        return construction_c(ring, {oracle::random_elem(ring, rng), oracle::random_elem(ring, rng), {vec(n - 1)}});
      }();
      isodual += isodual_witness_check(con.code, con.witness).ok();
      fsd += lee_distribution(con.code) == lee_distribution(dual(con.code));
      transfer += gray_fsd_transfer(con.code);
    }
    ok = ok && isodual == 102 && fsd == 102 && transfer == 102;
    detail += std::string(1, static_cast<char>(kind - 32)) + ": isodual " + std::to_string(isodual) + ", fsd " +
              std::to_string(fsd) + ", Gray transfer " + std::to_string(transfer) + " of 102; ";
  }
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

Outcome odd_fsd() {
  bool ok = true;
  std::string detail;
  for (const auto& [q, n] : std::vector<std::pair<u32, std::size_t>>{{2, 1}, {3, 1}, {3, 2}}) {
    const auto s = odd_fsd_search(Ring(q), n);
    ok = ok && s.exhausted;
    if (n == 1) ok = ok && s.size_matched == 0;
    detail += "(" + std::to_string(q) + "," + std::to_string(n) + "): " + std::to_string(s.tested) +
              " submodules, " + std::to_string(s.fsd_found) + " fsd, " +
              (s.witness ? "odd witness" : "no odd fsd code") + "; ";
  }
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

std::string cli_path;

Outcome determinism() {
  auto run = [](std::string& out) {
    const std::string cmd = cli_path + " verify-paper --scope all --seed 42 --format json";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return -1;
    char buf[65536];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    return pclose(p);
  };
  if (cli_path.empty()) return {false, "no CLI path given"};
  std::string a, b;
  const int ra = run(a), rb = run(b);
  const bool ok = ra == 0 && rb == 0 && !a.empty() && a == b;
  return {ok, std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "DIFFERENT") +
                  ", exit codes " + std::to_string(ra) + "/" + std::to_string(rb)};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) cli_path = argv[1];
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"gray map and Lee weight foundation", gray_foundation},
      {"Gray image commutes with duality", gray_dual},
      {"MacWilliams identity for Lee enumerators", macwilliams},
      {"cyclic code sizes from divisor triples", cyclic_sizes},
      {"self-dual cyclic codes at desk scale", self_dual_cyclic},
      {"bordered circulant example over F_3", example_bordered},
      {"symmetric construction example over F_3", example_symmetric},
      {"double circulant example over F_5", example_circulant},
      {"isodual constructions A/B/C", constructions},
      {"odd formally self-dual codes at small length", odd_fsd},
      {"byte-identical verification reports", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s  %2zu  %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}

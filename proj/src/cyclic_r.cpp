#include "r3v/cyclic_r.hpp"

namespace r3v {

CyclicSpecR make_cyclic_spec(std::size_t n, const Polynomial& f1, const Polynomial& f2, const Polynomial& f3) {
  const Polynomial target = Polynomial::xn_minus_1(f1.field(), n);
  for (const Polynomial* f : {&f1, &f2, &f3})
    if (f->is_zero() || !divides(*f, target))
      throw Error(ErrorCode::NotADivisor,
                  format_polynomial(*f) + " does not divide x^" + std::to_string(n) + "-1");
  return {n, f1.monic(), f2.monic(), f3.monic()};
}

std::size_t cyclic_size_exponent(const CyclicSpecR& spec) {
  return 3 * spec.n - static_cast<std::size_t>(spec.f1.degree() + spec.f2.degree() + spec.f3.degree());
}

LinearCodeR cyclic_code_r(const Ring& ring, const CyclicSpecR& spec, CombineMode mode) {
  ComponentTriple t{cyclic_code(spec.f1, spec.n), cyclic_code(spec.f2, spec.n), cyclic_code(spec.f3, spec.n),
                    ComponentProvenance::Crt};
  return combine_components(ring, t, mode);
}

CyclicSpecR cyclic_dual_spec(const CyclicSpecR& spec) {
  return {spec.n, cyclic_dual_generator(spec.f1, spec.n), cyclic_dual_generator(spec.f2, spec.n),
          cyclic_dual_generator(spec.f3, spec.n)};
}

LinearCodeR cyclic_dual_r(const Ring& ring, const CyclicSpecR& spec) {
  return cyclic_code_r(ring, cyclic_dual_spec(spec), CombineMode::Idempotent);
}

std::vector<LinearCodeR> enumerate_cyclic_codes(const Ring& ring, std::size_t n, u64 budget) {
  return enumerate_submodules(ring, n, true, budget);
}

SelfDualCyclicSearch self_dual_cyclic_search(const Ring& ring, std::size_t n, u64 budget) {
  SelfDualCyclicSearch out;
  if (!ring.field().is_even()) {
    const auto divisors = monic_divisors_of_xn_minus_1(ring.field(), n);
    const u64 triples = static_cast<u64>(divisors.size()) * divisors.size() * divisors.size();
    if (triples > budget)
      throw Error(ErrorCode::SearchSpaceTooLarge, std::to_string(triples) + " divisor triples exceed budget");
    for (const auto& f1 : divisors)
      for (const auto& f2 : divisors)
        for (const auto& f3 : divisors) {
          ++out.tested;
          const CyclicSpecR spec{n, f1, f2, f3};
          if (2 * cyclic_size_exponent(spec) != 3 * n) continue;
          LinearCodeR c = cyclic_code_r(ring, spec);
          if (!out.witness_code && is_self_orthogonal(c)) {
            out.witness_spec = spec;
            out.witness_code = std::move(c);
          }
        }
  } else {
    for (auto& c : enumerate_cyclic_codes(ring, n, budget)) {
      ++out.tested;
      if (!out.witness_code && 2 * c.size_exponent() == 3 * n && is_self_orthogonal(c)) out.witness_code = c;
    }
  }
  out.exhausted = true;
  return out;
}

nlohmann::json to_json(const CyclicSpecR& spec) {
  return {{"n", spec.n},
          {"f1", format_polynomial(spec.f1)},
          {"f2", format_polynomial(spec.f2)},
          {"f3", format_polynomial(spec.f3)}};
}

nlohmann::json to_json(const SelfDualCyclicSearch& s) {
  nlohmann::json witness = nullptr;
  if (s.witness_spec) {
    witness = to_json(*s.witness_spec);
  } else if (s.witness_code) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : s.witness_code->generators()) gens.push_back(format_vector(g));
    witness = {{"n", s.witness_code->length()}, {"generators", gens}};
  }
  return {{"witness", witness}, {"exhausted", s.exhausted}, {"tested", s.tested}};
}

}  // namespace r3v

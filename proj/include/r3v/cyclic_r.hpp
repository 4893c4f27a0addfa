#pragma once

#include <optional>

#include <json.hpp>

#include "r3v/codes_r.hpp"
#include "r3v/poly.hpp"

namespace r3v {

/// Three monic divisors of x^n - 1, one per CRT component (at v = 1, v = -1, v = 0).
struct CyclicSpecR {
  std::size_t n = 0;
  Polynomial f1, f2, f3;
};

/// Validates divisibility (NotADivisor) and normalizes each f_i to monic.
CyclicSpecR make_cyclic_spec(std::size_t n, const Polynomial& f1, const Polynomial& f2, const Polynomial& f3);

/// 3n - (deg f1 + deg f2 + deg f3).
std::size_t cyclic_size_exponent(const CyclicSpecR& spec);

LinearCodeR cyclic_code_r(const Ring& ring, const CyclicSpecR& spec, CombineMode mode = CombineMode::Idempotent);
inline bool is_cyclic_r(const LinearCodeR& c) { return is_cyclic(c); }

/// Componentwise dual generators (idempotent combination; q odd).
CyclicSpecR cyclic_dual_spec(const CyclicSpecR& spec);
LinearCodeR cyclic_dual_r(const Ring& ring, const CyclicSpecR& spec);

/// All cyclic codes over R of length n, by ideal enumeration in R[x]/(x^n - 1).
std::vector<LinearCodeR> enumerate_cyclic_codes(const Ring& ring, std::size_t n, u64 budget = kDefaultBudget);

struct SelfDualCyclicSearch {
  std::optional<CyclicSpecR> witness_spec;   // q odd
  std::optional<LinearCodeR> witness_code;
  bool exhausted = false;
  std::size_t tested = 0;
};

/// q odd: every divisor triple in idempotent mode. q = 2: every cyclic
/// R-code from ideal enumeration (needs q^{3n} within budget).
SelfDualCyclicSearch self_dual_cyclic_search(const Ring& ring, std::size_t n, u64 budget = kDefaultBudget);

nlohmann::json to_json(const CyclicSpecR& spec);
nlohmann::json to_json(const SelfDualCyclicSearch& s);

}  // namespace r3v

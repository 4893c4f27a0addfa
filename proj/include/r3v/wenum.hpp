#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "r3v/codes_r.hpp"
#include "r3v/weight.hpp"

namespace r3v {

/// Lee distribution {E_0, ..., E_3n}; `length` is 3n.
using LeeEnumerator = WeightEnumerator;

/// Symbol class of x: the Hamming weight of its Gray image, in {0,1,2,3}.
inline int symbol_class(const Ring& ring, const RingElem& x) { return ring.lee_weight(x); }

/// Tallies (alpha_0, ..., alpha_3) of coordinates per symbol class.
struct SymmetrizedEnumerator {
  std::size_t n = 0;
  std::map<std::array<int, 4>, u64> counts;
  u64 total() const;
  friend bool operator==(const SymmetrizedEnumerator&, const SymmetrizedEnumerator&) = default;
};

/// Per-codeword tally w_a for every a in R, indexed by Ring::index(a).
struct CompleteEnumerator {
  std::size_t n = 0;
  u32 q = 0;
  std::map<std::vector<int>, u64> counts;
  u64 total() const;
  friend bool operator==(const CompleteEnumerator&, const CompleteEnumerator&) = default;
};

LeeEnumerator lee_enumerator(const LinearCodeR& c, u64 budget = kDefaultBudget);
/// Hamming weights over R (nonzero symbols), length n.
WeightEnumerator hamming_enumerator_r(const LinearCodeR& c, u64 budget = kDefaultBudget);
SymmetrizedEnumerator symmetrized_enumerator(const LinearCodeR& c, u64 budget = kDefaultBudget);
CompleteEnumerator complete_enumerator(const LinearCodeR& c, u64 budget = kDefaultBudget);

enum class SpecializeTarget { Lee, Hamming };

/// Lee: class i -> X^{3-i} Y^i. Hamming: zero symbol -> X, every other -> Y.
WeightEnumerator specialize(const SymmetrizedEnumerator& e, SpecializeTarget target);
WeightEnumerator specialize(const CompleteEnumerator& e, const Ring& ring, SpecializeTarget target);

/// Collapses a complete enumerator onto symbol classes.
SymmetrizedEnumerator symmetrize(const CompleteEnumerator& e, const Ring& ring);

/// (1/|C|) Lee_C(X + (q-1)Y, X - Y). Exact integer arithmetic; throws
/// TransformInconsistent if a coefficient is not divisible by |C| or is negative.
LeeEnumerator macwilliams_lee(const LeeEnumerator& e, u64 code_size, u32 q);

/// The form without the (q-1) factor, (1/|C|) Lee_C(X + Y, X - Y). Returns
/// nullopt instead of throwing when the result is not a valid distribution.
std::optional<LeeEnumerator> macwilliams_lee_printed(const LeeEnumerator& e, u64 code_size);

/// General q-ary MacWilliams transform of a Hamming enumerator of a length-N
/// F_q code (used for Gray images and as the field-level identity).
WeightEnumerator macwilliams_hamming(const WeightEnumerator& e, u64 code_size, u32 q);

/// Coefficient-wise product of two Lee enumerators (length adds).
LeeEnumerator enumerator_product(const LeeEnumerator& a, const LeeEnumerator& b);

nlohmann::json to_json(const WeightEnumerator& e, std::size_t n, const std::string& kind);
nlohmann::json to_json(const SymmetrizedEnumerator& e);
nlohmann::json to_json(const CompleteEnumerator& e);

/// The printed symbol-class table, kept for comparison only: eta_0..eta_7
/// and the alpha_i membership lists as printed.
struct PrintedSymbolClasses {
  std::array<const char*, 8> eta;
  std::array<std::vector<int>, 4> alpha_members;
};
const PrintedSymbolClasses& printed_symbol_classes();

}  // namespace r3v

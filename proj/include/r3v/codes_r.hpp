#pragma once

#include <functional>
#include <string>
#include <vector>

#include "r3v/codes_fq.hpp"
#include "r3v/ring.hpp"

namespace r3v {

using RingVector = std::vector<RingElem>;

/// Coefficient layout: symbol i occupies positions 3i, 3i+1, 3i+2 as (a0, a1, a2).
std::vector<u32> to_coefficients(std::span<const RingElem> x);
RingVector from_coefficients(std::span<const u32> coeffs);
/// Gray layout: three concatenated n-blocks (a0 | a0+a2 | a1).
std::vector<u32> gray_vector(const Ring& ring, std::span<const RingElem> x);
RingVector from_gray_vector(const Ring& ring, std::span<const u32> g);

RingElem inner_product(const Ring& ring, std::span<const RingElem> x, std::span<const RingElem> y);
int lee_weight(const Ring& ring, std::span<const RingElem> x);
int hamming_weight_r(std::span<const RingElem> x);
RingVector scale(const Ring& ring, const RingElem& r, std::span<const RingElem> x);
RingVector shift_right(std::span<const RingElem> x);

/// Linear code over R: the R-span of a generator list. Internally the span is
/// kept as an F_q subspace of F_q^{3n} in coefficient layout, generated by
/// g, v g and v^2 g for every generator g, which pins down membership, size
/// and equality exactly for free and non-free codes alike.
class LinearCodeR {
 public:
  /// R-span of `rows`; throws ShapeError on ragged input.
  LinearCodeR(const Ring& ring, std::size_t n, const std::vector<RingVector>& rows);

  /// Wraps an F_q subspace in coefficient layout that is already closed
  /// under multiplication by v.
  static LinearCodeR from_coefficient_code(const Ring& ring, const LinearCodeFq& module);
  static LinearCodeR zero(const Ring& ring, std::size_t n);
  static LinearCodeR full(const Ring& ring, std::size_t n);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t length() const noexcept { return length_; }
  /// Generators as supplied (or the F_q basis for derived codes).
  const std::vector<RingVector>& generators() const noexcept { return generators_; }
  const LinearCodeFq& coefficient_code() const noexcept { return module_; }
  /// log_q |C|
  std::size_t size_exponent() const noexcept { return module_.dimension(); }
  /// |C|; throws SearchSpaceTooLarge if it does not fit in 64 bits.
  u64 size() const;
  /// F_q basis of C, decoded into ring vectors.
  std::vector<RingVector> fq_basis() const;

  bool contains(std::span<const RingElem> x) const;
  bool contains(const LinearCodeR& sub) const { return module_.contains(sub.module_); }

  friend bool operator==(const LinearCodeR& a, const LinearCodeR& b) {
    return a.ring_ == b.ring_ && a.module_ == b.module_;
  }

 private:
  LinearCodeR(const Ring& ring, std::size_t n, LinearCodeFq module, std::vector<RingVector> gens);

  Ring ring_;
  std::size_t length_;
  LinearCodeFq module_;
  std::vector<RingVector> generators_;
};

inline LinearCodeR code_from_generators(const Ring& ring, std::size_t n, const std::vector<RingVector>& rows) {
  return LinearCodeR(ring, n, rows);
}

/// Visits every codeword exactly once in deterministic odometer order.
void enumerate_codewords(const LinearCodeR& c, const std::function<void(const RingVector&)>& visit,
                         u64 budget = kDefaultBudget);
std::vector<RingVector> codewords(const LinearCodeR& c, u64 budget = kDefaultBudget);

enum class ComponentProvenance { Crt, PaperLiteral };

/// Three F_q codes of length n. For Crt they are the evaluation images at
/// v = 1, v = -1, v = 0 (in that order); for PaperLiteral they are the
/// projections a, a+b, a+b+c of codewords a + v b + v^2 c.
struct ComponentTriple {
  LinearCodeFq c1, c2, c3;
  ComponentProvenance provenance;
};

ComponentTriple components_crt(const LinearCodeR& c);
ComponentTriple components_paper(const LinearCodeR& c);

enum class CombineMode { PaperLiteral, Idempotent };

/// PaperLiteral: R-span of v C1, (1-v) C2, (1-v^2) C3.
/// Idempotent: e1 C1 + e2 C2 + e0 C3 with the orthogonal idempotents (q odd).
LinearCodeR combine_components(const Ring& ring, const ComponentTriple& t, CombineMode mode);

enum class DualMethod { Auto, Kernel, Crt, BruteForce };

/// Auto picks Crt for q odd and Kernel otherwise. BruteForce tests all q^{3n}
/// vectors and is the independent oracle for the other two.
LinearCodeR dual(const LinearCodeR& c, DualMethod method = DualMethod::Auto, u64 budget = kDefaultBudget);

LinearCodeFq gray_image_code(const LinearCodeR& c);
/// Generator matrix of gray_image_code in Gray layout, one row per F_q basis vector of C.
MatrixFq gray_basis(const LinearCodeR& c);

/// ComponentLemma: min of the CRT component distances.
/// CrtSplit: exact for q odd, from the splitting of the Gray image into
/// C3 and {(a+b | a-b) : a in C1, b in C2}; enumerates q^{k1+k2} + q^{k3} words.
enum class DistanceStrategy { Exhaustive, GrayImage, ComponentLemma, CrtSplit };

struct LeeDistance {
  int distance = 0;
  std::string provenance;  // "exhaustive", "gray-image", "lemma5-based", "crt-split"
};

LeeDistance min_lee_distance(const LinearCodeR& c, DistanceStrategy strategy, u64 budget = kDefaultBudget);

/// Lee weight distribution through the Gray image (Hamming weights over F_q^{3n}).
WeightEnumerator lee_distribution(const LinearCodeR& c, u64 budget = kDefaultBudget);

struct DualityClass {
  bool self_orthogonal = false;
  bool self_dual = false;
  bool formally_self_dual = false;
};

DualityClass classify_duality(const LinearCodeR& c, u64 budget = kDefaultBudget);
bool is_self_orthogonal(const LinearCodeR& c);

bool is_cyclic(const LinearCodeR& c);

/// Every R-submodule of R^n (also closed under the cyclic shift when
/// `shift_closed`), found as sums of cyclic submodules generated by single
/// vectors. Sorted by (size, coefficient basis). Throws SearchSpaceTooLarge
/// when q^{3n} exceeds `budget`.
std::vector<LinearCodeR> enumerate_submodules(const Ring& ring, std::size_t n, bool shift_closed,
                                              u64 budget = kDefaultBudget);

/// Whitespace-separated elements.
RingVector parse_vector(const Ring& ring, std::string_view text);
std::string format_vector(std::span<const RingElem> x);

}  // namespace r3v

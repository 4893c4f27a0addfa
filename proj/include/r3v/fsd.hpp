#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "r3v/codes_r.hpp"

namespace r3v {

/// Square matrix over R with entry(i, j) == entry(j, i).
class SymmetricMatrixR {
 public:
  /// Throws NotSymmetric (or ShapeError for a non-square input).
  explicit SymmetricMatrixR(std::vector<RingVector> rows);
  /// Mirrors the upper triangle (including the diagonal) of a square matrix.
  static SymmetricMatrixR from_upper(const std::vector<RingVector>& rows);

  std::size_t order() const noexcept { return rows_.size(); }
  const RingElem& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const std::vector<RingVector>& rows() const noexcept { return rows_; }

 private:
  std::vector<RingVector> rows_;
};

/// Circulant matrix given by its first row; row i is the first row shifted
/// right i times.
struct CirculantSpecR {
  RingVector first_row;
  std::vector<RingVector> matrix() const;
};

/// Bordered block [[alpha, omega ... omega], [omega; ... ; omega | core]].
struct BorderedSpecR {
  RingElem alpha;
  RingElem omega;
  CirculantSpecR core;
  std::vector<RingVector> matrix() const;
};

/// Signed coordinate permutation: source coordinate i goes to target[i],
/// negated when negate[i]. Such maps preserve Lee weight, since w_L(-a) = w_L(a).
struct PermutationWitness {
  std::vector<std::size_t> target;
  std::vector<bool> negate;

  bool valid() const;
  RingVector apply(const Ring& ring, std::span<const RingElem> x) const;
};

LinearCodeR apply(const Ring& ring, const PermutationWitness& w, const LinearCodeR& c);

/// Systematic code [I_n | B] with the witness mapping it onto its dual.
struct Construction {
  LinearCodeR code;
  std::vector<RingVector> block;  // B, n x n
  PermutationWitness witness;
};

/// [I | A] for symmetric A.
Construction construction_a(const Ring& ring, const SymmetricMatrixR& a);
/// [I | M] for circulant M (double circulant).
Construction construction_b(const Ring& ring, const CirculantSpecR& m);
/// [I | bordered circulant].
Construction construction_c(const Ring& ring, const BorderedSpecR& spec);

/// The witness (u, w) -> (w o sigma, -u o sigma) for a block with B^T = P B P,
/// where P is the permutation matrix of the involution sigma.
PermutationWitness swap_negate_witness(const std::vector<std::size_t>& sigma);

/// [-B^T | I], which spans the dual of [I | B].
std::vector<RingVector> companion_generators(const Ring& ring, const std::vector<RingVector>& block);

struct IsodualCheck {
  bool companion_is_dual = false;  // [-B^T | I] orthogonal to C with complementary size
  bool witness_maps_to_dual = false;
  bool ok() const noexcept { return companion_is_dual && witness_maps_to_dual; }
};

/// Row-space comparison, exact at any size. When `c` is not in systematic
/// form the companion check falls back to the computed dual.
IsodualCheck isodual_witness_check(const LinearCodeR& c, const PermutationWitness& w);

/// Concatenation code C1 x C2.
LinearCodeR direct_product(const LinearCodeR& a, const LinearCodeR& b);

/// Lee enumerators of C and C^perp coincide.
bool is_formally_self_dual(const LinearCodeR& c, u64 budget = kDefaultBudget);

/// Whether the Gray image and its F_q dual share a Hamming enumerator.
bool gray_fsd_transfer(const LinearCodeR& c, u64 budget = kDefaultBudget);

struct OddFsdSearch {
  std::optional<LinearCodeR> witness;
  bool exhausted = false;
  std::size_t tested = 0;         // submodules examined
  std::size_t fsd_found = 0;      // of which formally self-dual
  std::size_t size_matched = 0;   // with |C| = |C^perp|
};

/// Exhaustive search over all R-submodules of R^n for a formally self-dual
/// code with a codeword of odd Lee weight.
OddFsdSearch odd_fsd_search(const Ring& ring, std::size_t n, u64 budget = kDefaultBudget);

nlohmann::json to_json(const Construction& c);

}  // namespace r3v

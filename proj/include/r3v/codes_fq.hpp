#pragma once

#include <optional>
#include <vector>

#include "r3v/enumerate.hpp"
#include "r3v/poly.hpp"
#include "r3v/weight.hpp"

namespace r3v {

struct RrefResult {
  MatrixFq matrix;           // same shape as the input, zero rows last
  int rank = 0;
  std::vector<int> pivots;   // pivot column of each nonzero row
};

/// Reduced row-echelon form over F_q.
RrefResult rref(const Field& f, const MatrixFq& m);

/// x . y over F_q.
u32 dot(const Field& f, std::span<const u32> x, std::span<const u32> y);
/// Hamming weight.
int hamming_weight(std::span<const u32> x);

/// Linear code over F_q, stored as its reduced row-echelon basis, so two codes
/// are equal iff their stored bases are.
class LinearCodeFq {
 public:
  /// Row span of `generators` (any rank, any number of rows).
  LinearCodeFq(const Field& f, const MatrixFq& generators);
  LinearCodeFq(const Field& f, std::size_t n, const std::vector<std::vector<u32>>& rows);

  static LinearCodeFq zero(const Field& f, std::size_t n);
  static LinearCodeFq full(const Field& f, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(basis_.rows()); }
  /// k x n basis in reduced row-echelon form.
  const MatrixFq& basis() const noexcept { return basis_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const u32> word) const;
  bool contains(const LinearCodeFq& sub) const;

  friend bool operator==(const LinearCodeFq& a, const LinearCodeFq& b) {
    return a.field_ == b.field_ && a.length_ == b.length_ && a.basis_.rows() == b.basis_.rows() &&
           a.basis_ == b.basis_;
  }

 private:
  Field field_;
  std::size_t length_;
  MatrixFq basis_;
  std::vector<int> pivots_;
};

LinearCodeFq dual(const LinearCodeFq& c);
LinearCodeFq code_sum(const LinearCodeFq& a, const LinearCodeFq& b);
bool is_self_orthogonal(const LinearCodeFq& c);
bool is_self_dual(const LinearCodeFq& c);

/// Exact minimum Hamming weight by enumerating all q^k codewords.
/// Throws EmptyCode for the zero code and SearchSpaceTooLarge past `budget`.
int min_distance(const LinearCodeFq& c, u64 budget = kDefaultBudget);
WeightEnumerator hamming_enumerator(const LinearCodeFq& c, u64 budget = kDefaultBudget);

/// Code spanned by the cyclic shifts of g; g must divide x^n - 1.
LinearCodeFq cyclic_code(const Polynomial& g, std::size_t n);
/// Right cyclic shift (c_{n-1}, c_0, ..., c_{n-2}).
std::vector<u32> cyclic_shift(std::span<const u32> word);
bool is_cyclic(const LinearCodeFq& c);
/// Generator of the dual of the cyclic code <g>: the monic reciprocal of (x^n-1)/g.
Polynomial cyclic_dual_generator(const Polynomial& g, std::size_t n);

/// Closed-form criterion for the existence of a self-dual cyclic code of
/// length n over F_q: q even and n even.
bool self_dual_cyclic_exists(const Field& f, std::size_t n);

struct SelfDualCyclicAudit {
  bool criterion = false;
  bool found = false;
  bool exhausted = false;
  std::optional<Polynomial> witness;
  std::size_t tested = 0;
  bool agrees() const noexcept { return exhausted && criterion == found; }
};

/// Tests every monic divisor of x^n - 1 for a self-dual cyclic code and
/// compares with the criterion.
SelfDualCyclicAudit audit_self_dual_cyclic(const Field& f, std::size_t n);

}  // namespace r3v

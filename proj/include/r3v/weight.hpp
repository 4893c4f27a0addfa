#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "r3v/gf.hpp"

namespace r3v {

/// Weight distribution of a code: counts[i] = number of codewords of weight i,
/// for i in [0, length]. Used for Hamming weights over F_q, Hamming weights
/// over R, and Lee weights (where `length` is 3n).
struct WeightEnumerator {
  std::size_t length = 0;
  std::vector<u64> counts;

  WeightEnumerator() = default;
  explicit WeightEnumerator(std::size_t len) : length(len), counts(len + 1, 0) {}

  u64 total() const noexcept { return std::accumulate(counts.begin(), counts.end(), u64{0}); }
  u64 at(std::size_t w) const noexcept { return w < counts.size() ? counts[w] : 0; }
  /// Smallest nonzero weight carrying a codeword, or -1.
  int min_nonzero_weight() const noexcept {
    for (std::size_t w = 1; w < counts.size(); ++w)
      if (counts[w] != 0) return static_cast<int>(w);
    return -1;
  }
  bool has_odd_weight() const noexcept {
    for (std::size_t w = 1; w < counts.size(); w += 2)
      if (counts[w] != 0) return true;
    return false;
  }

  WeightEnumerator& operator+=(const WeightEnumerator& o) {
    for (std::size_t i = 0; i < counts.size() && i < o.counts.size(); ++i) counts[i] += o.counts[i];
    return *this;
  }
  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

}  // namespace r3v

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Core>

#include "r3v/error.hpp"
#include "r3v/gf.hpp"

namespace r3v {

using MatrixFq = Eigen::Matrix<u32, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using VectorFq = Eigen::Matrix<u32, 1, Eigen::Dynamic>;

inline constexpr u64 kDefaultBudget = u64{1} << 25;

/// q^k, or SearchSpaceTooLarge when it exceeds `budget`.
inline u64 checked_space_size(u32 q, std::size_t k, u64 budget) {
  u64 size = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (size > budget / q)
      throw Error(ErrorCode::SearchSpaceTooLarge, std::to_string(q) + "^" + std::to_string(k) +
                                                      " codewords exceed budget " + std::to_string(budget));
    size *= q;
  }
  if (size > budget)
    throw Error(ErrorCode::SearchSpaceTooLarge,
                std::to_string(size) + " codewords exceed budget " + std::to_string(budget));
  return size;
}

namespace detail {

// Visits every F_q-combination of rows [first, last) of `basis` added to
// `start`. Incrementing message digit i always adds row i once: a wrap from
// q-1 to 0 adds the q-th copy, which is zero.
template <class Visit>
void odometer(const Field& f, const MatrixFq& basis, int first, int last, std::vector<u32> word, Visit&& visit) {
  const u32 q = f.q();
  const std::size_t n = word.size();
  const int k = last - first;
  std::vector<u32> digits(static_cast<std::size_t>(std::max(k, 0)), 0);
  std::span<const u32> view(word.data(), n);
  while (true) {
    visit(view);
    int i = 0;
    for (; i < k; ++i) {
      const u32* row = basis.data() + static_cast<std::size_t>(first + i) * n;
      for (std::size_t j = 0; j < n; ++j) {
        u32 s = word[j] + row[j];
        word[j] = s >= q ? s - q : s;
      }
      if (++digits[i] < q) break;
      digits[i] = 0;
    }
    if (i == k) return;
  }
}

}  // namespace detail

/// Calls visit(span<const u32>) for each of the q^k codewords spanned by the
/// rows of `basis` (assumed independent), in graded odometer order.
template <class Visit>
void for_each_codeword(const Field& f, const MatrixFq& basis, Visit&& visit) {
  std::vector<u32> word(static_cast<std::size_t>(basis.cols()), 0);
  detail::odometer(f, basis, 0, static_cast<int>(basis.rows()), std::move(word), visit);
}

/// Partitioned reduction over all codewords. The message space is split on
/// the values of the last few message digits; each chunk gets a fresh
/// accumulator from init(), chunks run on a small thread pool and are merged
/// in chunk order, so the result is independent of scheduling.
template <class Acc, class Init, class Visit, class Merge>
Acc reduce_codewords(const Field& f, const MatrixFq& basis, u64 budget, Init init, Visit visit, Merge merge,
                     unsigned threads = 0) {
  const int k = static_cast<int>(basis.rows());
  const std::size_t n = static_cast<std::size_t>(basis.cols());
  checked_space_size(f.q(), static_cast<std::size_t>(k), budget);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  // prefix digits: enough chunks to balance, none when single threaded
  int prefix = 0;
  u64 chunks = 1;
  if (threads > 1)
    while (prefix < k && chunks < 4ull * threads) {
      chunks *= f.q();
      ++prefix;
    }
  const int inner = k - prefix;

  std::vector<Acc> partial;
  partial.reserve(chunks);
  for (u64 c = 0; c < chunks; ++c) partial.push_back(init());

  auto run_chunk = [&](u64 c) {
    std::vector<u32> start(n, 0);
    u64 code = c;
    for (int i = 0; i < prefix; ++i) {
      const u32 coef = static_cast<u32>(code % f.q());
      code /= f.q();
      const u32* row = basis.data() + static_cast<std::size_t>(inner + i) * n;
      for (std::size_t j = 0; j < n; ++j) start[j] = f.mul_add(coef, row[j], start[j]);
    }
    Acc& acc = partial[c];
    detail::odometer(f, basis, 0, inner, std::move(start), [&](std::span<const u32> w) { visit(acc, w); });
  };

  if (threads <= 1 || chunks == 1) {
    for (u64 c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    std::atomic<u64> next{0};
    for (unsigned t = 0; t < std::min<u64>(threads, chunks); ++t)
      pool.emplace_back([&] {
        for (u64 c = next++; c < chunks; c = next++) run_chunk(c);
      });
    for (auto& th : pool) th.join();
  }

  Acc result = init();
  for (auto& p : partial) merge(result, p);
  return result;
}

}  // namespace r3v

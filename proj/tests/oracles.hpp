#pragma once

// Brute-force reference implementations used only by tests. They work on
// explicit sets of ring vectors and never touch the F_q linear algebra the
// library uses internally.

#include <random>
#include <set>
#include <vector>

#include "r3v/codes_r.hpp"

namespace oracle {

using r3v::Ring;
using r3v::RingElem;
using r3v::RingVector;

using WordSet = std::set<std::vector<r3v::u32>>;

inline std::vector<r3v::u32> key(const Ring& ring, const RingVector& x) {
  std::vector<r3v::u32> k;
  for (const auto& e : x) k.push_back(ring.index(e));
  return k;
}

inline RingVector unkey(const Ring& ring, const std::vector<r3v::u32>& k) {
  RingVector x;
  for (auto i : k) x.push_back(ring.from_index(i));
  return x;
}

inline RingVector add(const Ring& ring, const RingVector& a, const RingVector& b) {
  RingVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.add(a[i], b[i]);
  return out;
}

/// R-span of `gens` as a fixpoint of closure under adding r*g.
inline WordSet span(const Ring& ring, std::size_t n, const std::vector<RingVector>& gens) {
  WordSet set{key(ring, RingVector(n))};
  std::vector<RingVector> frontier{RingVector(n)};
  const auto elems = ring.elements();
  while (!frontier.empty()) {
    std::vector<RingVector> next;
    for (const auto& w : frontier)
      for (const auto& g : gens)
        for (const auto& r : elems) {
          RingVector y = add(ring, w, r3v::scale(ring, r, g));
          if (set.insert(key(ring, y)).second) next.push_back(std::move(y));
        }
    frontier = std::move(next);
  }
  return set;
}

/// All vectors of R^n.
inline std::vector<RingVector> ambient(const Ring& ring, std::size_t n) {
  std::vector<RingVector> out;
  std::vector<r3v::u32> idx(n, 0);
  while (true) {
    out.push_back(unkey(ring, idx));
    std::size_t i = 0;
    while (i < n && ++idx[i] == ring.size()) idx[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline WordSet dual(const Ring& ring, std::size_t n, const WordSet& code) {
  WordSet out;
  std::vector<RingVector> words;
  for (const auto& k : code) words.push_back(unkey(ring, k));
  for (const auto& x : ambient(ring, n)) {
    bool ok = true;
    for (const auto& c : words)
      if (r3v::inner_product(ring, x, c) != RingElem{}) {
        ok = false;
        break;
      }
    if (ok) out.insert(key(ring, x));
  }
  return out;
}

inline WordSet as_set(const r3v::LinearCodeR& c) {
  WordSet s;
  for (const auto& w : r3v::codewords(c)) s.insert(key(c.ring(), w));
  return s;
}

/// Lee weight straight from the definition (a0, a0 + a2, a1).
inline int lee(const Ring& ring, const RingVector& x) {
  int w = 0;
  for (const auto& e : x) w += (e.a0 != 0) + ((e.a0 + e.a2) % ring.q() != 0) + (e.a1 != 0);
  return w;
}

inline RingElem random_elem(const Ring& ring, std::mt19937_64& rng) {
  return ring.from_index(static_cast<r3v::u32>(rng() % ring.size()));
}

/// Random generator list; rows are multiplied by random ring elements so that
/// zero divisors (and hence non-free codes) show up often.
inline std::vector<RingVector> random_generators(const Ring& ring, std::size_t n, std::mt19937_64& rng) {
  const std::size_t m = rng() % (n + 2);
  std::vector<RingVector> gens;
  for (std::size_t i = 0; i < m; ++i) {
    RingVector g(n);
    for (auto& e : g) e = random_elem(ring, rng);
    gens.push_back(r3v::scale(ring, random_elem(ring, rng), g));
  }
  return gens;
}

}  // namespace oracle

#include "r3v/wenum.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace r3v {

using boost::multiprecision::cpp_int;

u64 SymmetrizedEnumerator::total() const {
  u64 t = 0;
  for (const auto& [k, v] : counts) t += v;
  return t;
}

u64 CompleteEnumerator::total() const {
  u64 t = 0;
  for (const auto& [k, v] : counts) t += v;
  return t;
}

LeeEnumerator lee_enumerator(const LinearCodeR& c, u64 budget) {
  LeeEnumerator e(3 * c.length());
  const Ring& ring = c.ring();
  enumerate_codewords(
      c, [&](const RingVector& w) { ++e.counts[static_cast<std::size_t>(lee_weight(ring, w))]; }, budget);
  return e;
}

WeightEnumerator hamming_enumerator_r(const LinearCodeR& c, u64 budget) {
  WeightEnumerator e(c.length());
  enumerate_codewords(
      c, [&](const RingVector& w) { ++e.counts[static_cast<std::size_t>(hamming_weight_r(w))]; }, budget);
  return e;
}

SymmetrizedEnumerator symmetrized_enumerator(const LinearCodeR& c, u64 budget) {
  SymmetrizedEnumerator e;
  e.n = c.length();
  const Ring& ring = c.ring();
  enumerate_codewords(
      c,
      [&](const RingVector& w) {
        std::array<int, 4> alpha{};
        for (const auto& x : w) ++alpha[static_cast<std::size_t>(symbol_class(ring, x))];
        ++e.counts[alpha];
      },
      budget);
  return e;
}

CompleteEnumerator complete_enumerator(const LinearCodeR& c, u64 budget) {
  CompleteEnumerator e;
  e.n = c.length();
  e.q = c.ring().q();
  const Ring& ring = c.ring();
  std::vector<int> tally(ring.size());
  enumerate_codewords(
      c,
      [&](const RingVector& w) {
        std::fill(tally.begin(), tally.end(), 0);
        for (const auto& x : w) ++tally[ring.index(x)];
        ++e.counts[tally];
      },
      budget);
  return e;
}

WeightEnumerator specialize(const SymmetrizedEnumerator& e, SpecializeTarget target) {
  WeightEnumerator out(target == SpecializeTarget::Lee ? 3 * e.n : e.n);
  for (const auto& [alpha, count] : e.counts) {
    // X^{3 alpha0 + 2 alpha1 + alpha2} Y^{alpha1 + 2 alpha2 + 3 alpha3}, or X^{alpha0} Y^{n - alpha0}
    const int ydeg = target == SpecializeTarget::Lee ? alpha[1] + 2 * alpha[2] + 3 * alpha[3]
                                                     : alpha[1] + alpha[2] + alpha[3];
    out.counts[static_cast<std::size_t>(ydeg)] += count;
  }
  return out;
}

SymmetrizedEnumerator symmetrize(const CompleteEnumerator& e, const Ring& ring) {
  SymmetrizedEnumerator out;
  out.n = e.n;
  for (const auto& [tally, count] : e.counts) {
    std::array<int, 4> alpha{};
    for (u32 a = 0; a < tally.size(); ++a)
      alpha[static_cast<std::size_t>(symbol_class(ring, ring.from_index(a)))] += tally[a];
    out.counts[alpha] += count;
  }
  return out;
}

WeightEnumerator specialize(const CompleteEnumerator& e, const Ring& ring, SpecializeTarget target) {
  if (target == SpecializeTarget::Lee) return specialize(symmetrize(e, ring), target);
  WeightEnumerator out(e.n);
  for (const auto& [tally, count] : e.counts) out.counts[e.n - static_cast<std::size_t>(tally[0])] += count;
  return out;
}

namespace {

cpp_int binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  cpp_int r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Coefficients of sum_i E_i (X + a Y)^{N-i} (X - Y)^i, indexed by Y-degree.
std::vector<cpp_int> substitute(const WeightEnumerator& e, u64 a) {
  const std::size_t len = e.length;
  std::vector<cpp_int> out(len + 1, 0);
  std::vector<cpp_int> apow(len + 1, 1);
  for (std::size_t s = 1; s <= len; ++s) apow[s] = apow[s - 1] * a;
  for (std::size_t i = 0; i <= len; ++i) {
    if (e.at(i) == 0) continue;
    for (std::size_t s = 0; s <= len - i; ++s) {
      const cpp_int left = binomial(len - i, s) * apow[s];
      for (std::size_t t = 0; t <= i; ++t) {
        cpp_int term = left * binomial(i, t) * e.at(i);
        if (t % 2) term = -term;
        out[s + t] += term;
      }
    }
  }
  return out;
}

std::optional<WeightEnumerator> divide_exact(const std::vector<cpp_int>& coeffs, u64 code_size) {
  if (code_size == 0) return std::nullopt;
  WeightEnumerator out(coeffs.size() - 1);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] < 0 || coeffs[j] % code_size != 0) return std::nullopt;
    const cpp_int v = coeffs[j] / code_size;
    if (v > std::numeric_limits<u64>::max()) return std::nullopt;
    out.counts[j] = static_cast<u64>(v);
  }
  return out;
}

}  // namespace

WeightEnumerator macwilliams_hamming(const WeightEnumerator& e, u64 code_size, u32 q) {
  if (code_size != e.total())
    throw Error(ErrorCode::TransformInconsistent, "code size " + std::to_string(code_size) +
                                                      " differs from enumerator total " + std::to_string(e.total()));
  auto out = divide_exact(substitute(e, q - 1), code_size);
  if (!out) throw Error(ErrorCode::TransformInconsistent, "non-integral or negative MacWilliams coefficient");
  return *out;
}

LeeEnumerator macwilliams_lee(const LeeEnumerator& e, u64 code_size, u32 q) {
  return macwilliams_hamming(e, code_size, q);
}

std::optional<LeeEnumerator> macwilliams_lee_printed(const LeeEnumerator& e, u64 code_size) {
  return divide_exact(substitute(e, 1), code_size);
}

LeeEnumerator enumerator_product(const LeeEnumerator& a, const LeeEnumerator& b) {
  LeeEnumerator out(a.length + b.length);
  for (std::size_t i = 0; i < a.counts.size(); ++i)
    for (std::size_t j = 0; j < b.counts.size(); ++j) out.counts[i + j] += a.counts[i] * b.counts[j];
  return out;
}

nlohmann::json to_json(const WeightEnumerator& e, std::size_t n, const std::string& kind) {
  nlohmann::json counts = nlohmann::json::object();
  for (std::size_t w = 0; w < e.counts.size(); ++w)
    if (e.counts[w]) counts[std::to_string(w)] = e.counts[w];
  return {{"n", n}, {"kind", kind}, {"counts", counts}};
}

namespace {

template <class Seq>
std::string join(const Seq& s) {
  std::string out;
  for (auto it = s.begin(); it != s.end(); ++it) {
    if (it != s.begin()) out += ',';
    out += std::to_string(*it);
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const SymmetrizedEnumerator& e) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [alpha, c] : e.counts) counts[join(alpha)] = c;
  return {{"n", e.n}, {"kind", "swe"}, {"counts", counts}};
}

nlohmann::json to_json(const CompleteEnumerator& e) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [tally, c] : e.counts) counts[join(tally)] = c;
  return {{"n", e.n}, {"kind", "cwe"}, {"counts", counts}};
}

const PrintedSymbolClasses& printed_symbol_classes() {
  static const PrintedSymbolClasses table{
      {"0", "a0", "a1 v", "a2 v^2", "a0 + a1 v", "a0 + a2 v^2", "a1 v + a2 v^2", "a0 + a1 v + a2 v^2"},
      {std::vector<int>{0}, std::vector<int>{3, 4, 6, 7}, std::vector<int>{1, 4, 5, 6}, std::vector<int>{4, 5, 7}}};
  return table;
}

}  // namespace r3v

#include "r3v/codes_r.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace r3v {

std::vector<u32> to_coefficients(std::span<const RingElem> x) {
  std::vector<u32> out(3 * x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[3 * i] = x[i].a0;
    out[3 * i + 1] = x[i].a1;
    out[3 * i + 2] = x[i].a2;
  }
  return out;
}

RingVector from_coefficients(std::span<const u32> coeffs) {
  RingVector out(coeffs.size() / 3);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {coeffs[3 * i], coeffs[3 * i + 1], coeffs[3 * i + 2]};
  return out;
}

std::vector<u32> gray_vector(const Ring& ring, std::span<const RingElem> x) {
  const std::size_t n = x.size();
  std::vector<u32> out(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const GrayTriple g = ring.gray(x[i]);
    out[i] = g.g0;
    out[n + i] = g.g1;
    out[2 * n + i] = g.g2;
  }
  return out;
}

RingVector from_gray_vector(const Ring& ring, std::span<const u32> g) {
  const std::size_t n = g.size() / 3;
  RingVector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = ring.gray_inverse({g[i], g[n + i], g[2 * n + i]});
  return out;
}

RingElem inner_product(const Ring& ring, std::span<const RingElem> x, std::span<const RingElem> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::ShapeError, "inner product of vectors of different length");
  RingElem acc = ring.zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = ring.add(acc, ring.mul(x[i], y[i]));
  return acc;
}

int lee_weight(const Ring& ring, std::span<const RingElem> x) {
  int w = 0;
  for (const auto& e : x) w += ring.lee_weight(e);
  return w;
}

int hamming_weight_r(std::span<const RingElem> x) {
  return static_cast<int>(std::count_if(x.begin(), x.end(), [](const RingElem& e) { return e != RingElem{}; }));
}

RingVector scale(const Ring& ring, const RingElem& r, std::span<const RingElem> x) {
  RingVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = ring.mul(r, x[i]);
  return out;
}

RingVector shift_right(std::span<const RingElem> x) {
  RingVector out(x.size());
  if (x.empty()) return out;
  out[0] = x.back();
  std::copy(x.begin(), x.end() - 1, out.begin() + 1);
  return out;
}

namespace {

MatrixFq rows_to_matrix(std::size_t cols, const std::vector<std::vector<u32>>& rows) {
  MatrixFq m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

LinearCodeFq span_module(const Ring& ring, std::size_t n, const std::vector<RingVector>& rows) {
  std::vector<std::vector<u32>> coeff_rows;
  coeff_rows.reserve(3 * rows.size());
  for (const auto& g : rows) {
    if (g.size() != n)
      throw Error(ErrorCode::ShapeError, "generator of length " + std::to_string(g.size()) + ", expected " +
                                             std::to_string(n));
    for (const auto& e : g)
      if (e.a0 >= ring.q() || e.a1 >= ring.q() || e.a2 >= ring.q())
        throw Error(ErrorCode::ParamMismatch, "element coefficient outside F_" + std::to_string(ring.q()));
    coeff_rows.push_back(to_coefficients(g));
    coeff_rows.push_back(to_coefficients(scale(ring, ring.v(), g)));
    coeff_rows.push_back(to_coefficients(scale(ring, ring.v2(), g)));
  }
  return LinearCodeFq(ring.field(), rows_to_matrix(3 * n, coeff_rows));
}

std::vector<RingVector> decode_basis(const LinearCodeFq& module) {
  std::vector<RingVector> out;
  for (Eigen::Index i = 0; i < module.basis().rows(); ++i)
    out.push_back(from_coefficients({module.basis().row(i).data(), module.length()}));
  return out;
}

}  // namespace

LinearCodeR::LinearCodeR(const Ring& ring, std::size_t n, const std::vector<RingVector>& rows)
    : ring_(ring), length_(n), module_(span_module(ring, n, rows)), generators_(rows) {}

LinearCodeR::LinearCodeR(const Ring& ring, std::size_t n, LinearCodeFq module, std::vector<RingVector> gens)
    : ring_(ring), length_(n), module_(std::move(module)), generators_(std::move(gens)) {}

LinearCodeR LinearCodeR::from_coefficient_code(const Ring& ring, const LinearCodeFq& module) {
  if (module.length() % 3 != 0) throw Error(ErrorCode::ShapeError, "coefficient code length not a multiple of 3");
  return LinearCodeR(ring, module.length() / 3, module, decode_basis(module));
}

LinearCodeR LinearCodeR::zero(const Ring& ring, std::size_t n) { return LinearCodeR(ring, n, {}); }

LinearCodeR LinearCodeR::full(const Ring& ring, std::size_t n) {
  std::vector<RingVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    RingVector e(n);
    e[i] = ring.one();
    rows.push_back(std::move(e));
  }
  return LinearCodeR(ring, n, rows);
}

u64 LinearCodeR::size() const {
  return checked_space_size(ring_.q(), size_exponent(), ~u64{0});
}

std::vector<RingVector> LinearCodeR::fq_basis() const { return decode_basis(module_); }

bool LinearCodeR::contains(std::span<const RingElem> x) const {
  if (x.size() != length_) return false;
  const auto coeffs = to_coefficients(x);
  return module_.contains(coeffs);
}

void enumerate_codewords(const LinearCodeR& c, const std::function<void(const RingVector&)>& visit, u64 budget) {
  const auto& basis = c.coefficient_code().basis();
  checked_space_size(c.ring().q(), static_cast<std::size_t>(basis.rows()), budget);
  RingVector word(c.length());
  for_each_codeword(c.ring().field(), basis, [&](std::span<const u32> w) {
    for (std::size_t i = 0; i < word.size(); ++i) word[i] = {w[3 * i], w[3 * i + 1], w[3 * i + 2]};
    visit(word);
  });
}

std::vector<RingVector> codewords(const LinearCodeR& c, u64 budget) {
  std::vector<RingVector> out;
  enumerate_codewords(c, [&](const RingVector& w) { out.push_back(w); }, budget);
  return out;
}

namespace {

// Image of every F_q basis vector under a per-symbol linear functional.
template <class F>
LinearCodeFq project(const LinearCodeR& c, F&& symbol_map) {
  const std::size_t n = c.length();
  std::vector<std::vector<u32>> rows;
  for (const auto& b : c.fq_basis()) {
    std::vector<u32> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = symbol_map(b[i]);
    rows.push_back(std::move(r));
  }
  return LinearCodeFq(c.ring().field(), rows_to_matrix(n, rows));
}

}  // namespace

ComponentTriple components_crt(const LinearCodeR& c) {
  const Ring& ring = c.ring();
  if (ring.field().is_even())
    throw Error(ErrorCode::CharacteristicTwoUnsupported, "CRT components need q odd");
  const u32 m1 = ring.field().minus_one();
  return {project(c, [&](const RingElem& x) { return ring.evaluate(x, 1); }),
          project(c, [&](const RingElem& x) { return ring.evaluate(x, m1); }),
          project(c, [&](const RingElem& x) { return ring.evaluate(x, 0); }), ComponentProvenance::Crt};
}

ComponentTriple components_paper(const LinearCodeR& c) {
  const Field& f = c.ring().field();
  return {project(c, [](const RingElem& x) { return x.a0; }),
          project(c, [&](const RingElem& x) { return f.add(x.a0, x.a1); }),
          project(c, [&](const RingElem& x) { return f.add(x.a0, f.add(x.a1, x.a2)); }),
          ComponentProvenance::PaperLiteral};
}

LinearCodeR combine_components(const Ring& ring, const ComponentTriple& t, CombineMode mode) {
  const std::size_t n = t.c1.length();
  if (t.c2.length() != n || t.c3.length() != n) throw Error(ErrorCode::ShapeError, "component lengths differ");
  std::array<RingElem, 3> coef;
  if (mode == CombineMode::Idempotent) {
    coef = {ring.idempotent_at1(), ring.idempotent_at_minus1(), ring.idempotent_at0()};
  } else {
    const Field& f = ring.field();
    coef = {ring.v(), RingElem{1, f.minus_one(), 0}, RingElem{1, 0, f.minus_one()}};
  }
  std::vector<RingVector> rows;
  const LinearCodeFq* parts[3] = {&t.c1, &t.c2, &t.c3};
  for (int p = 0; p < 3; ++p) {
    const auto& b = parts[p]->basis();
    for (Eigen::Index i = 0; i < b.rows(); ++i) {
      RingVector r(n);
      for (std::size_t j = 0; j < n; ++j) r[j] = ring.scale(b(i, static_cast<Eigen::Index>(j)), coef[p]);
      rows.push_back(std::move(r));
    }
  }
  return LinearCodeR(ring, n, rows);
}

namespace {

LinearCodeR dual_kernel(const LinearCodeR& c) {
  const Ring& ring = c.ring();
  const Field& f = ring.field();
  const std::size_t n = c.length();
  // x . b = 0 in R is three F_q-linear equations in the coefficients of x.
  std::vector<std::vector<u32>> eqs;
  for (const auto& b : c.fq_basis()) {
    std::vector<u32> e0(3 * n, 0), e1(3 * n, 0), e2(3 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const RingElem& y = b[i];
      const u32 s = f.add(y.a0, y.a2);
      e0[3 * i] = y.a0;
      e1[3 * i] = y.a1;
      e1[3 * i + 1] = s;
      e1[3 * i + 2] = y.a1;
      e2[3 * i] = y.a2;
      e2[3 * i + 1] = y.a1;
      e2[3 * i + 2] = s;
    }
    eqs.push_back(std::move(e0));
    eqs.push_back(std::move(e1));
    eqs.push_back(std::move(e2));
  }
  LinearCodeFq constraints(f, rows_to_matrix(3 * n, eqs));
  return LinearCodeR::from_coefficient_code(ring, dual(constraints));
}

LinearCodeR dual_crt(const LinearCodeR& c) {
  const auto comps = components_crt(c);
  return combine_components(c.ring(), {dual(comps.c1), dual(comps.c2), dual(comps.c3), ComponentProvenance::Crt},
                            CombineMode::Idempotent);
}

LinearCodeR dual_brute_force(const LinearCodeR& c, u64 budget) {
  const Ring& ring = c.ring();
  const std::size_t n = c.length();
  const auto basis = c.fq_basis();
  const MatrixFq ambient = MatrixFq::Identity(static_cast<Eigen::Index>(3 * n), static_cast<Eigen::Index>(3 * n));
  checked_space_size(ring.q(), 3 * n, budget);
  std::vector<std::vector<u32>> members;
  RingVector x(n);
  for_each_codeword(ring.field(), ambient, [&](std::span<const u32> w) {
    for (std::size_t i = 0; i < n; ++i) x[i] = {w[3 * i], w[3 * i + 1], w[3 * i + 2]};
    for (const auto& b : basis)
      if (inner_product(ring, x, b) != RingElem{}) return;
    members.emplace_back(w.begin(), w.end());
  });
  return LinearCodeR::from_coefficient_code(ring, LinearCodeFq(ring.field(), rows_to_matrix(3 * n, members)));
}

}  // namespace

LinearCodeR dual(const LinearCodeR& c, DualMethod method, u64 budget) {
  switch (method) {
    case DualMethod::Auto:
      return c.ring().field().is_even() ? dual_kernel(c) : dual_crt(c);
    case DualMethod::Kernel: return dual_kernel(c);
    case DualMethod::Crt: return dual_crt(c);
    case DualMethod::BruteForce: return dual_brute_force(c, budget);
  }
  return dual_kernel(c);
}

MatrixFq gray_basis(const LinearCodeR& c) {
  std::vector<std::vector<u32>> rows;
  for (const auto& b : c.fq_basis()) rows.push_back(gray_vector(c.ring(), b));
  return rows_to_matrix(3 * c.length(), rows);
}

LinearCodeFq gray_image_code(const LinearCodeR& c) { return LinearCodeFq(c.ring().field(), gray_basis(c)); }

WeightEnumerator lee_distribution(const LinearCodeR& c, u64 budget) {
  // gray_basis rows are independent: Gray is a bijection on each symbol
  const std::size_t len = 3 * c.length();
  return reduce_codewords<WeightEnumerator>(
      c.ring().field(), gray_basis(c), budget, [len] { return WeightEnumerator(len); },
      [](WeightEnumerator& e, std::span<const u32> w) { ++e.counts[static_cast<std::size_t>(hamming_weight(w))]; },
      [](WeightEnumerator& into, const WeightEnumerator& part) { into += part; });
}

LeeDistance min_lee_distance(const LinearCodeR& c, DistanceStrategy strategy, u64 budget) {
  if (c.size_exponent() == 0) throw Error(ErrorCode::EmptyCode, "zero code has no nonzero codeword");
  switch (strategy) {
    case DistanceStrategy::Exhaustive: {
      int best = static_cast<int>(3 * c.length()) + 1;
      const Ring& ring = c.ring();
      enumerate_codewords(
          c,
          [&](const RingVector& w) {
            const int wt = lee_weight(ring, w);
            if (wt != 0 && wt < best) best = wt;
          },
          budget);
      return {best, "exhaustive"};
    }
    case DistanceStrategy::GrayImage:
      return {min_distance(gray_image_code(c), budget), "gray-image"};
    case DistanceStrategy::ComponentLemma: {
      const auto comps = components_crt(c);
      int best = -1;
      for (const LinearCodeFq* part : {&comps.c1, &comps.c2, &comps.c3}) {
        if (part->dimension() == 0) continue;
        const int d = min_distance(*part, budget);
        if (best < 0 || d < best) best = d;
      }
      return {best, "lemma5-based"};
    }
    case DistanceStrategy::CrtSplit: {
      // Gray blocks are x(0) | (x(1)+x(-1))/2 | (x(1)-x(-1))/2, so the image is
      // C3 (+) {(a+b | a-b) : a in C1, b in C2} up to a scalar on the last 2n coordinates.
      const auto comps = components_crt(c);
      const Field& f = c.ring().field();
      const std::size_t n = c.length();
      std::vector<std::vector<u32>> rows;
      for (const LinearCodeFq* part : {&comps.c1, &comps.c2}) {
        const bool minus = part == &comps.c2;
        const MatrixFq& b = part->basis();
        for (Eigen::Index i = 0; i < b.rows(); ++i) {
          std::vector<u32> r(2 * n);
          for (std::size_t j = 0; j < n; ++j) {
            const u32 x = b(i, static_cast<Eigen::Index>(j));
            r[j] = x;
            r[n + j] = minus ? f.neg(x) : x;
          }
          rows.push_back(std::move(r));
        }
      }
      int best = -1;
      if (!rows.empty()) best = min_distance(LinearCodeFq(f, 2 * n, rows), budget);
      if (comps.c3.dimension() > 0) {
        const int d3 = min_distance(comps.c3, budget);
        if (best < 0 || d3 < best) best = d3;
      }
      return {best, "crt-split"};
    }
  }
  return {};
}

bool is_self_orthogonal(const LinearCodeR& c) {
  const auto basis = c.fq_basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      if (inner_product(c.ring(), basis[i], basis[j]) != RingElem{}) return false;
  return true;
}

DualityClass classify_duality(const LinearCodeR& c, u64 budget) {
  DualityClass out;
  out.self_orthogonal = is_self_orthogonal(c);
  out.self_dual = out.self_orthogonal && 2 * c.size_exponent() == 3 * c.length();
  if (out.self_dual) {
    out.formally_self_dual = true;
  } else if (2 * c.size_exponent() == 3 * c.length()) {
    out.formally_self_dual = lee_distribution(c, budget) == lee_distribution(dual(c), budget);
  }
  return out;
}

bool is_cyclic(const LinearCodeR& c) {
  for (const auto& b : c.fq_basis())
    if (!c.contains(shift_right(b))) return false;
  return true;
}

RingVector parse_vector(const Ring& ring, std::string_view text) {
  RingVector out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) out.push_back(parse_elem(ring, tok));
  return out;
}

std::string format_vector(std::span<const RingElem> x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ' ';
    out += format_elem(x[i]);
  }
  return out;
}

}  // namespace r3v

namespace r3v {

namespace {

std::vector<u32> module_key(const LinearCodeFq& m) {
  std::vector<u32> key{static_cast<u32>(m.dimension())};
  key.insert(key.end(), m.basis().data(), m.basis().data() + m.basis().size());
  return key;
}

}  // namespace

std::vector<LinearCodeR> enumerate_submodules(const Ring& ring, std::size_t n, bool shift_closed, u64 budget) {
  checked_space_size(ring.q(), 3 * n, budget);
  const std::size_t len = 3 * n;
  const Field& f = ring.field();
  std::map<std::vector<u32>, std::size_t> seen;
  std::vector<LinearCodeFq> found;
  auto add = [&](LinearCodeFq m) -> bool {
    auto key = module_key(m);
    if (seen.count(key)) return false;
    seen.emplace(std::move(key), found.size());
    found.push_back(std::move(m));
    return true;
  };
  add(LinearCodeFq::zero(f, len));

  // cyclic submodules R[x] y (or R y)
  const std::size_t shifts = shift_closed ? n : 1;
  const MatrixFq ambient = MatrixFq::Identity(static_cast<Eigen::Index>(len), static_cast<Eigen::Index>(len));
  MatrixFq gens(static_cast<Eigen::Index>(3 * shifts), static_cast<Eigen::Index>(len));
  std::vector<std::size_t> principal;
  for_each_codeword(f, ambient, [&](std::span<const u32> w) {
    RingVector y = from_coefficients(w);
    Eigen::Index r = 0;
    for (std::size_t s = 0; s < shifts; ++s) {
      for (const RingElem& m : {ring.one(), ring.v(), ring.v2()}) {
        const auto row = to_coefficients(scale(ring, m, y));
        for (std::size_t j = 0; j < len; ++j) gens(r, static_cast<Eigen::Index>(j)) = row[j];
        ++r;
      }
      y = shift_right(y);
    }
    if (add(LinearCodeFq(f, gens))) principal.push_back(found.size() - 1);
  });

  // close under sums
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t p : principal) {
      if (found[i].contains(found[p])) continue;
      add(code_sum(found[i], found[p]));
    }

  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (found[a].dimension() != found[b].dimension()) return found[a].dimension() < found[b].dimension();
    return module_key(found[a]) < module_key(found[b]);
  });
  std::vector<LinearCodeR> out;
  out.reserve(found.size());
  for (std::size_t i : order) out.push_back(LinearCodeR::from_coefficient_code(ring, found[i]));
  return out;
}

}  // namespace r3v

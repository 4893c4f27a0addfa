#include "r3v/codes_fq.hpp"

#include <algorithm>

namespace r3v {

RrefResult rref(const Field& f, const MatrixFq& m) {
  RrefResult out{m, 0, {}};
  MatrixFq& a = out.matrix;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const u32 inv = f.inv(a(r, c));
    if (inv != 1)
      for (Eigen::Index j = c; j < cols; ++j) a(r, j) = f.mul(a(r, j), inv);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const u32 factor = f.neg(a(i, c));
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) = f.mul_add(factor, a(r, j), a(i, j));
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  out.rank = static_cast<int>(r);
  return out;
}

u32 dot(const Field& f, std::span<const u32> x, std::span<const u32> y) {
  u64 acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += static_cast<u64>(x[i]) * y[i];
  return f.reduce(acc);
}

int hamming_weight(std::span<const u32> x) {
  return static_cast<int>(std::count_if(x.begin(), x.end(), [](u32 a) { return a != 0; }));
}

LinearCodeFq::LinearCodeFq(const Field& f, const MatrixFq& generators)
    : field_(f), length_(static_cast<std::size_t>(generators.cols())) {
  MatrixFq reduced = generators.unaryExpr([&](u32 x) { return f.reduce(x); });
  auto res = rref(f, reduced);
  basis_ = res.matrix.topRows(res.rank);
  pivots_ = std::move(res.pivots);
}

namespace {

MatrixFq to_matrix(std::size_t n, const std::vector<std::vector<u32>>& rows) {
  MatrixFq m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw Error(ErrorCode::ShapeError, "ragged generator rows");
    for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  return m;
}

}  // namespace

LinearCodeFq::LinearCodeFq(const Field& f, std::size_t n, const std::vector<std::vector<u32>>& rows)
    : LinearCodeFq(f, to_matrix(n, rows)) {}

LinearCodeFq LinearCodeFq::zero(const Field& f, std::size_t n) {
  return LinearCodeFq(f, MatrixFq(0, static_cast<Eigen::Index>(n)));
}

LinearCodeFq LinearCodeFq::full(const Field& f, std::size_t n) {
  const auto e = static_cast<Eigen::Index>(n);
  return LinearCodeFq(f, MatrixFq::Identity(e, e));
}

bool LinearCodeFq::contains(std::span<const u32> word) const {
  if (word.size() != length_) return false;
  // reduce against the RREF basis; membership iff residual is zero
  std::vector<u32> w(word.begin(), word.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const u32 c = w[static_cast<std::size_t>(pivots_[i])];
    if (c == 0) continue;
    const u32 factor = field_.neg(c);
    for (std::size_t j = 0; j < length_; ++j)
      w[j] = field_.mul_add(factor, basis_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), w[j]);
  }
  return std::all_of(w.begin(), w.end(), [](u32 x) { return x == 0; });
}

bool LinearCodeFq::contains(const LinearCodeFq& sub) const {
  if (sub.length_ != length_ || !(sub.field_ == field_)) return false;
  for (Eigen::Index i = 0; i < sub.basis_.rows(); ++i)
    if (!contains(std::span<const u32>(sub.basis_.row(i).data(), length_))) return false;
  return true;
}

LinearCodeFq dual(const LinearCodeFq& c) {
  const Field& f = c.field();
  const std::size_t n = c.length();
  const std::size_t k = c.dimension();
  std::vector<bool> is_pivot(n, false);
  for (int p : c.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
  MatrixFq h(static_cast<Eigen::Index>(n - k), static_cast<Eigen::Index>(n));
  h.setZero();
  Eigen::Index r = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    h(r, static_cast<Eigen::Index>(free)) = 1;
    for (std::size_t i = 0; i < k; ++i)
      h(r, c.pivots()[i]) = f.neg(c.basis()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(free)));
    ++r;
  }
  return LinearCodeFq(f, h);
}

LinearCodeFq code_sum(const LinearCodeFq& a, const LinearCodeFq& b) {
  if (a.length() != b.length() || !(a.field() == b.field()))
    throw Error(ErrorCode::ParamMismatch, "codes differ in length or field");
  MatrixFq m(a.basis().rows() + b.basis().rows(), static_cast<Eigen::Index>(a.length()));
  m << a.basis(), b.basis();
  return LinearCodeFq(a.field(), m);
}

bool is_self_orthogonal(const LinearCodeFq& c) {
  const auto& g = c.basis();
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = i; j < g.rows(); ++j)
      if (dot(c.field(), {g.row(i).data(), c.length()}, {g.row(j).data(), c.length()}) != 0) return false;
  return true;
}

bool is_self_dual(const LinearCodeFq& c) { return 2 * c.dimension() == c.length() && is_self_orthogonal(c); }

int min_distance(const LinearCodeFq& c, u64 budget) {
  if (c.dimension() == 0) throw Error(ErrorCode::EmptyCode, "zero code has no nonzero codeword");
  const int none = static_cast<int>(c.length()) + 1;
  return reduce_codewords<int>(
      c.field(), c.basis(), budget, [none] { return none; },
      [](int& best, std::span<const u32> w) {
        const int wt = hamming_weight(w);
        if (wt != 0 && wt < best) best = wt;
      },
      [](int& into, const int& part) { into = std::min(into, part); });
}

WeightEnumerator hamming_enumerator(const LinearCodeFq& c, u64 budget) {
  const std::size_t n = c.length();
  return reduce_codewords<WeightEnumerator>(
      c.field(), c.basis(), budget, [n] { return WeightEnumerator(n); },
      [](WeightEnumerator& e, std::span<const u32> w) { ++e.counts[static_cast<std::size_t>(hamming_weight(w))]; },
      [](WeightEnumerator& into, const WeightEnumerator& part) { into += part; });
}

LinearCodeFq cyclic_code(const Polynomial& g, std::size_t n) {
  const Field& f = g.field();
  if (g.is_zero() || !divides(g, Polynomial::xn_minus_1(f, n)))
    throw Error(ErrorCode::NotADivisor, format_polynomial(g) + " does not divide x^" + std::to_string(n) + "-1");
  const std::size_t k = n - static_cast<std::size_t>(g.degree());
  MatrixFq m = MatrixFq::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < k; ++i)
    for (int d = 0; d <= g.degree(); ++d)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i + static_cast<std::size_t>(d))) = g.coeff(d);
  return LinearCodeFq(f, m);
}

std::vector<u32> cyclic_shift(std::span<const u32> word) {
  std::vector<u32> out(word.size());
  if (word.empty()) return out;
  out[0] = word.back();
  std::copy(word.begin(), word.end() - 1, out.begin() + 1);
  return out;
}

bool is_cyclic(const LinearCodeFq& c) {
  for (Eigen::Index i = 0; i < c.basis().rows(); ++i)
    if (!c.contains(cyclic_shift({c.basis().row(i).data(), c.length()}))) return false;
  return true;
}

Polynomial cyclic_dual_generator(const Polynomial& g, std::size_t n) {
  const Field& f = g.field();
  if (g.is_zero()) throw Error(ErrorCode::NotADivisor, "zero polynomial");
  auto [h, rem] = divmod(Polynomial::xn_minus_1(f, n), g);
  if (!rem.is_zero())
    throw Error(ErrorCode::NotADivisor, format_polynomial(g) + " does not divide x^" + std::to_string(n) + "-1");
  return h.reversed().monic();
}

bool self_dual_cyclic_exists(const Field& f, std::size_t n) { return f.is_even() && n % 2 == 0; }

SelfDualCyclicAudit audit_self_dual_cyclic(const Field& f, std::size_t n) {
  SelfDualCyclicAudit audit;
  audit.criterion = self_dual_cyclic_exists(f, n);
  for (const auto& g : monic_divisors_of_xn_minus_1(f, n)) {
    ++audit.tested;
    if (is_self_dual(cyclic_code(g, n)) && !audit.found) {
      audit.found = true;
      audit.witness = g;
    }
  }
  audit.exhausted = true;
  return audit;
}

}  // namespace r3v

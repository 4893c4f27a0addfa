#include "r3v/fsd.hpp"

#include "r3v/wenum.hpp"

namespace r3v {

SymmetricMatrixR::SymmetricMatrixR(std::vector<RingVector> rows) : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  for (const auto& r : rows_)
    if (r.size() != n) throw Error(ErrorCode::ShapeError, "matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rows_[i][j] != rows_[j][i])
        throw Error(ErrorCode::NotSymmetric, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                 ") = " + format_elem_poly(rows_[i][j]) + " but (" +
                                                 std::to_string(j + 1) + "," + std::to_string(i + 1) +
                                                 ") = " + format_elem_poly(rows_[j][i]));
}

SymmetricMatrixR SymmetricMatrixR::from_upper(const std::vector<RingVector>& rows) {
  std::vector<RingVector> m = rows;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) throw Error(ErrorCode::ShapeError, "matrix is not square");
    for (std::size_t j = 0; j < i; ++j) m[i][j] = m[j][i];
  }
  return SymmetricMatrixR(std::move(m));
}

std::vector<RingVector> CirculantSpecR::matrix() const {
  std::vector<RingVector> rows;
  RingVector r = first_row;
  for (std::size_t i = 0; i < first_row.size(); ++i) {
    rows.push_back(r);
    r = shift_right(r);
  }
  return rows;
}

std::vector<RingVector> BorderedSpecR::matrix() const {
  const std::size_t n = core.first_row.size() + 1;
  std::vector<RingVector> rows(n, RingVector(n));
  rows[0][0] = alpha;
  for (std::size_t j = 1; j < n; ++j) {
    rows[0][j] = omega;
    rows[j][0] = omega;
  }
  const auto m = core.matrix();
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) rows[i][j] = m[i - 1][j - 1];
  return rows;
}

bool PermutationWitness::valid() const {
  if (negate.size() != target.size()) return false;
  std::vector<bool> hit(target.size(), false);
  for (std::size_t t : target) {
    if (t >= target.size() || hit[t]) return false;
    hit[t] = true;
  }
  return true;
}

RingVector PermutationWitness::apply(const Ring& ring, std::span<const RingElem> x) const {
  if (x.size() != target.size()) throw Error(ErrorCode::ShapeError, "witness size differs from code length");
  RingVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[target[i]] = negate[i] ? ring.neg(x[i]) : x[i];
  return out;
}

LinearCodeR apply(const Ring& ring, const PermutationWitness& w, const LinearCodeR& c) {
  if (!w.valid()) throw Error(ErrorCode::ShapeError, "not a permutation");
  std::vector<RingVector> rows;
  for (const auto& b : c.fq_basis()) rows.push_back(w.apply(ring, b));
  return LinearCodeR(ring, c.length(), rows);
}

PermutationWitness swap_negate_witness(const std::vector<std::size_t>& sigma) {
  const std::size_t n = sigma.size();
  PermutationWitness w{std::vector<std::size_t>(2 * n), std::vector<bool>(2 * n, false)};
  for (std::size_t i = 0; i < n; ++i) {
    w.target[n + i] = sigma[i];  // right half lands on the left, reindexed
    w.target[i] = n + sigma[i];  // left half lands on the right, negated
    w.negate[i] = true;
  }
  return w;
}

namespace {

LinearCodeR systematic(const Ring& ring, const std::vector<RingVector>& block) {
  const std::size_t n = block.size();
  std::vector<RingVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (block[i].size() != n) throw Error(ErrorCode::ShapeError, "block is not square");
    RingVector r(2 * n);
    r[i] = ring.one();
    std::copy(block[i].begin(), block[i].end(), r.begin() + static_cast<std::ptrdiff_t>(n));
    rows.push_back(std::move(r));
  }
  return LinearCodeR(ring, 2 * n, rows);
}

std::vector<std::size_t> reversal(std::size_t n, std::size_t fixed_prefix) {
  // fixes [0, fixed_prefix), reverses the rest cyclically: i -> -i on the tail
  std::vector<std::size_t> s(n);
  const std::size_t m = n - fixed_prefix;
  for (std::size_t i = 0; i < n; ++i)
    s[i] = i < fixed_prefix ? i : fixed_prefix + (m - (i - fixed_prefix)) % m;
  return s;
}

}  // namespace

Construction construction_a(const Ring& ring, const SymmetricMatrixR& a) {
  const std::size_t n = a.order();
  return {systematic(ring, a.rows()), a.rows(), swap_negate_witness(reversal(n, n))};
}

Construction construction_b(const Ring& ring, const CirculantSpecR& m) {
  const auto block = m.matrix();
  return {systematic(ring, block), block, swap_negate_witness(reversal(block.size(), 0))};
}

Construction construction_c(const Ring& ring, const BorderedSpecR& spec) {
  if (spec.core.first_row.empty()) throw Error(ErrorCode::ShapeError, "bordered core must have order >= 1");
  const auto block = spec.matrix();
  return {systematic(ring, block), block, swap_negate_witness(reversal(block.size(), 1))};
}

std::vector<RingVector> companion_generators(const Ring& ring, const std::vector<RingVector>& block) {
  const std::size_t n = block.size();
  std::vector<RingVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    RingVector r(2 * n);
    for (std::size_t j = 0; j < n; ++j) r[j] = ring.neg(block[j][i]);
    r[n + i] = ring.one();
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

// B when the generators are exactly [I_n | B], else nullopt.
std::optional<std::vector<RingVector>> systematic_block(const LinearCodeR& c) {
  const auto& g = c.generators();
  const std::size_t n = g.size();
  if (c.length() != 2 * n) return std::nullopt;
  std::vector<RingVector> block;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (g[i][j] != (i == j ? RingElem{1, 0, 0} : RingElem{})) return std::nullopt;
    block.emplace_back(g[i].begin() + static_cast<std::ptrdiff_t>(n), g[i].end());
  }
  return block;
}

}  // namespace

IsodualCheck isodual_witness_check(const LinearCodeR& c, const PermutationWitness& w) {
  const Ring& ring = c.ring();
  IsodualCheck out;
  const LinearCodeR perp = dual(c);
  if (auto block = systematic_block(c)) {
    const auto comp = companion_generators(ring, *block);
    bool orthogonal = true;
    for (const auto& x : comp)
      for (const auto& y : c.generators())
        if (inner_product(ring, x, y) != RingElem{}) orthogonal = false;
    const LinearCodeR companion(ring, c.length(), comp);
    out.companion_is_dual =
        orthogonal && companion.size_exponent() + c.size_exponent() == 3 * c.length() && companion == perp;
  } else {
    out.companion_is_dual = c.size_exponent() + perp.size_exponent() == 3 * c.length();
  }
  out.witness_maps_to_dual = w.valid() && w.target.size() == c.length() && apply(ring, w, c) == perp;
  return out;
}

LinearCodeR direct_product(const LinearCodeR& a, const LinearCodeR& b) {
  if (!(a.ring() == b.ring())) throw Error(ErrorCode::ParamMismatch, "codes over different rings");
  const std::size_t n1 = a.length(), n2 = b.length();
  std::vector<RingVector> rows;
  for (const auto& g : a.fq_basis()) {
    RingVector r(n1 + n2);
    std::copy(g.begin(), g.end(), r.begin());
    rows.push_back(std::move(r));
  }
  for (const auto& g : b.fq_basis()) {
    RingVector r(n1 + n2);
    std::copy(g.begin(), g.end(), r.begin() + static_cast<std::ptrdiff_t>(n1));
    rows.push_back(std::move(r));
  }
  return LinearCodeR(a.ring(), n1 + n2, rows);
}

bool is_formally_self_dual(const LinearCodeR& c, u64 budget) {
  const LinearCodeR perp = dual(c);
  if (perp.size_exponent() != c.size_exponent()) return false;
  return lee_distribution(c, budget) == lee_distribution(perp, budget);
}

bool gray_fsd_transfer(const LinearCodeR& c, u64 budget) {
  const LinearCodeFq image = gray_image_code(c);
  const LinearCodeFq perp = dual(image);
  if (perp.dimension() != image.dimension()) return false;
  return hamming_enumerator(image, budget) == hamming_enumerator(perp, budget);
}

OddFsdSearch odd_fsd_search(const Ring& ring, std::size_t n, u64 budget) {
  OddFsdSearch out;
  for (auto& c : enumerate_submodules(ring, n, false, budget)) {
    ++out.tested;
    if (2 * c.size_exponent() != 3 * n) continue;
    ++out.size_matched;
    const auto e = lee_distribution(c, budget);
    if (e != lee_distribution(dual(c), budget)) continue;
    ++out.fsd_found;
    if (!out.witness && e.has_odd_weight()) out.witness = c;
  }
  out.exhausted = true;
  return out;
}

nlohmann::json to_json(const Construction& c) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : c.code.generators()) gens.push_back(format_vector(g));
  nlohmann::json perm = nlohmann::json::array();
  for (std::size_t i = 0; i < c.witness.target.size(); ++i)
    perm.push_back({{"from", i}, {"to", c.witness.target[i]}, {"negate", static_cast<bool>(c.witness.negate[i])}});
  return {{"q", c.code.ring().q()}, {"n", c.code.length()}, {"generators", gens}, {"witness", perm}};
}

}  // namespace r3v

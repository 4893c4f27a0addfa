#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "r3v/gf.hpp"

namespace r3v {

/// Element a0 + a1 v + a2 v^2 of R = F_q[v]/(v^3 - v). Coefficients are raw
/// residues; the owning Ring supplies the modulus.
struct RingElem {
  u32 a0 = 0, a1 = 0, a2 = 0;

  friend bool operator==(const RingElem&, const RingElem&) = default;
  friend auto operator<=>(const RingElem&, const RingElem&) = default;
};

/// Gray image (a0, a0 + a2, a1) of a single symbol.
struct GrayTriple {
  u32 g0 = 0, g1 = 0, g2 = 0;
  friend bool operator==(const GrayTriple&, const GrayTriple&) = default;
};

/// Arithmetic context for R over a prime field.
class Ring {
 public:
  explicit Ring(const Field& field) : field_(field) {}
  explicit Ring(u32 q) : field_(q) {}

  const Field& field() const noexcept { return field_; }
  u32 q() const noexcept { return field_.q(); }
  /// q^3
  u32 size() const noexcept { return q() * q() * q(); }

  RingElem make(u64 a0, u64 a1, u64 a2) const noexcept {
    return {field_.reduce(a0), field_.reduce(a1), field_.reduce(a2)};
  }
  RingElem zero() const noexcept { return {}; }
  RingElem one() const noexcept { return {1, 0, 0}; }
  RingElem v() const noexcept { return {0, 1, 0}; }
  RingElem v2() const noexcept { return {0, 0, 1}; }

  /// Dense index a0 + q a1 + q^2 a2, a bijection onto [0, q^3).
  u32 index(const RingElem& x) const noexcept { return x.a0 + q() * (x.a1 + q() * x.a2); }
  RingElem from_index(u32 i) const noexcept { return {i % q(), (i / q()) % q(), i / (q() * q())}; }
  std::vector<RingElem> elements() const;

  RingElem add(const RingElem& x, const RingElem& y) const noexcept {
    return {field_.add(x.a0, y.a0), field_.add(x.a1, y.a1), field_.add(x.a2, y.a2)};
  }
  RingElem sub(const RingElem& x, const RingElem& y) const noexcept {
    return {field_.sub(x.a0, y.a0), field_.sub(x.a1, y.a1), field_.sub(x.a2, y.a2)};
  }
  RingElem neg(const RingElem& x) const noexcept { return {field_.neg(x.a0), field_.neg(x.a1), field_.neg(x.a2)}; }
  RingElem scale(u32 c, const RingElem& x) const noexcept {
    return {field_.mul(c, x.a0), field_.mul(c, x.a1), field_.mul(c, x.a2)};
  }
  /// Product with v^3 = v, v^4 = v^2.
  RingElem mul(const RingElem& x, const RingElem& y) const noexcept;

  /// Image under the ring map v -> t for t in {0, 1, -1}.
  u32 evaluate(const RingElem& x, u32 t) const;

  /// (x(0), x(1), x(-1)).
  std::array<u32, 3> crt_split(const RingElem& x) const noexcept;
  /// Inverse of crt_split; q odd only.
  RingElem crt_combine(u32 at0, u32 at1, u32 at_minus1) const;

  bool is_unit(const RingElem& x) const noexcept;
  /// Inverse through the CRT components (q odd) or exhaustive search (q = 2).
  std::optional<RingElem> inverse(const RingElem& x) const;

  GrayTriple gray(const RingElem& x) const noexcept { return {x.a0, field_.add(x.a0, x.a2), x.a1}; }
  RingElem gray_inverse(const GrayTriple& g) const noexcept { return {g.g0, g.g2, field_.sub(g.g1, g.g0)}; }
  int lee_weight(const RingElem& x) const noexcept {
    const GrayTriple g = gray(x);
    return (g.g0 != 0) + (g.g1 != 0) + (g.g2 != 0);
  }

  /// Orthogonal idempotents for q odd: e1 = (v+v^2)/2, e2 = (v^2-v)/2, e0 = 1-v^2.
  RingElem idempotent_at1() const;
  RingElem idempotent_at_minus1() const;
  RingElem idempotent_at0() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Field field_;
};

/// `[a0,a1,a2]` or a sum of terms `c`, `c v`, `c*v`, `c v^2`, whitespace
/// insensitive. Coefficients must lie in [0, q).
RingElem parse_elem(const Ring& ring, std::string_view text);
/// Canonical triple form `[a0,a1,a2]`.
std::string format_elem(const RingElem& x);
/// Human form like `1+2v+v^2`.
std::string format_elem_poly(const RingElem& x);

/// One row of the printed Lee-weight case table and how it compares with
/// w_H(Gray(x)) over all q^3 elements.
struct LeeTableRow {
  int row = 0;                 // 1-based, in printed order
  std::string condition;       // as printed
  int printed_weight = 0;
  u64 matching = 0;            // elements satisfying the condition
  u64 agreeing = 0;            // of those, how many have Gray weight == printed weight
  std::vector<int> observed_weights;  // distinct Gray weights among matches
  std::vector<int> duplicate_of;      // other rows with the identical condition
  bool contradictory() const noexcept { return agreeing != matching; }
};

/// Audits every printed row; `[mod]` is read as mod q.
std::vector<LeeTableRow> audit_lee_table(const Ring& ring);

}  // namespace r3v

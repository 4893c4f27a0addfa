#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "r3v/gf.hpp"

namespace r3v {

/// Univariate polynomial over F_q, coefficients lowest degree first. Trailing
/// zeros are always stripped, so the zero polynomial has no coefficients and
/// two polynomials are equal iff their coefficient vectors are.
class Polynomial {
 public:
  explicit Polynomial(const Field& field) : field_(field) {}
  Polynomial(const Field& field, std::vector<u32> coeffs);

  static Polynomial constant(const Field& field, u32 c) { return Polynomial(field, {c}); }
  static Polynomial monomial(const Field& field, u32 c, std::size_t degree);
  /// x^n - 1
  static Polynomial xn_minus_1(const Field& field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  const std::vector<u32>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  u32 coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  u32 leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_monic() const noexcept { return leading() == 1; }

  Polynomial monic() const;
  u32 eval(u32 x) const noexcept;
  /// x^deg * p(1/x), the coefficient reversal.
  Polynomial reversed() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(u32 c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize() noexcept;
  void check(const Polynomial& o) const;

  Field field_;
  std::vector<u32> coeffs_;
};

/// Quotient and remainder with a = q*b + r, deg r < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial gcd(Polynomial a, Polynomial b);
bool divides(const Polynomial& d, const Polynomial& a);

/// Monic irreducible factors of x^n - 1 with multiplicity, sorted by
/// (degree, coefficients).
std::vector<Polynomial> factor_xn_minus_1(const Field& field, std::size_t n);

/// Distinct irreducible factor with its multiplicity.
struct FactorPower {
  Polynomial factor;
  int multiplicity;
};
std::vector<FactorPower> group_factors(const std::vector<Polynomial>& factors);

inline constexpr std::size_t kDefaultDivisorCap = 4096;

/// All monic divisors of x^n - 1, sorted by (degree, coefficients). Throws
/// SearchSpaceTooLarge when the divisor count exceeds `cap`.
std::vector<Polynomial> monic_divisors_of_xn_minus_1(const Field& field, std::size_t n,
                                                     std::size_t cap = kDefaultDivisorCap);

/// Terms `c`, `c*x^k`, `c*x`, `x^k`, joined by `+`. Coefficients must lie in [0, q).
Polynomial parse_polynomial(const Field& field, std::string_view text);
std::string format_polynomial(const Polynomial& p);

/// Strict weak order for canonical sorting.
bool poly_less(const Polynomial& a, const Polynomial& b);

}  // namespace r3v

#pragma once

#include <cstdint>
#include <compare>
#include <iosfwd>

#include "r3v/error.hpp"

namespace r3v {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Prime field F_q. Holds only the modulus; every operation takes and returns
/// values already reduced into [0, q). Moduli are capped below 2^16 so that a
/// product plus a sum still fits in 32 bits.
class Field {
 public:
  explicit Field(u32 q);

  u32 q() const noexcept { return q_; }
  bool is_even() const noexcept { return q_ == 2; }

  u32 reduce(u64 x) const noexcept { return static_cast<u32>(x % q_); }
  u32 add(u32 a, u32 b) const noexcept {
    u32 s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  u32 sub(u32 a, u32 b) const noexcept { return a >= b ? a - b : a + q_ - b; }
  u32 neg(u32 a) const noexcept { return a == 0 ? 0 : q_ - a; }
  u32 mul(u32 a, u32 b) const noexcept { return (a * b) % q_; }
  /// a*b + c mod q
  u32 mul_add(u32 a, u32 b, u32 c) const noexcept { return (a * b + c) % q_; }
  u32 inv(u32 a) const;
  u32 pow(u32 a, u64 e) const noexcept;
  u32 minus_one() const noexcept { return q_ - 1; }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class FieldElem;
  struct Unchecked {};
  Field(u32 q, Unchecked) noexcept : q_(q) {}

  u32 q_;
};

bool is_prime(u32 n) noexcept;

/// Checked element of F_q; arithmetic between elements of different fields
/// throws ParamMismatch.
class FieldElem {
 public:
  FieldElem(const Field& field, u64 value) : value_(field.reduce(value)), q_(field.q()) {}

  u32 value() const noexcept { return value_; }
  Field field() const noexcept { return Field(q_, Field::Unchecked{}); }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inv() const;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;

 private:
  FieldElem(u32 value, u32 q, int) : value_(value), q_(q) {}
  void check(const FieldElem& o) const;

  u32 value_;
  u32 q_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& a);

}  // namespace r3v

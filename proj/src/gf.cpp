#include "r3v/gf.hpp"

#include <ostream>
#include <string>

namespace r3v {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParamMismatch: return "ParamMismatch";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::CharacteristicTwoUnsupported: return "CharacteristicTwoUnsupported";
    case ErrorCode::InvalidEvaluationPoint: return "InvalidEvaluationPoint";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::EmptyCode: return "EmptyCode";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::TransformInconsistent: return "TransformInconsistent";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(u32 n) noexcept {
  if (n < 2) return false;
  for (u32 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(u32 q) : q_(q) {
  if (q >= (1u << 16) || !is_prime(q))
    throw Error(ErrorCode::InvalidParams, "modulus " + std::to_string(q) + " is not a prime below 65536");
}

u32 Field::pow(u32 a, u64 e) const noexcept {
  u32 r = 1 % q_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u32 Field::inv(u32 a) const {
  if (a % q_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(q_));
  // extended Euclid on (a, q)
  long long t = 0, new_t = 1, r = q_, new_r = a;
  while (new_r != 0) {
    long long quot = r / new_r;
    long long tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += q_;
  return static_cast<u32>(t);
}

void FieldElem::check(const FieldElem& o) const {
  if (q_ != o.q_)
    throw Error(ErrorCode::ParamMismatch,
                "F_" + std::to_string(q_) + " vs F_" + std::to_string(o.q_));
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check(o);
  return {field().add(value_, o.value_), q_, 0};
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
  check(o);
  return {field().sub(value_, o.value_), q_, 0};
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
  check(o);
  return {field().mul(value_, o.value_), q_, 0};
}
FieldElem FieldElem::operator-() const { return {field().neg(value_), q_, 0}; }
FieldElem FieldElem::inv() const { return {field().inv(value_), q_, 0}; }

std::ostream& operator<<(std::ostream& os, const FieldElem& a) { return os << a.value(); }

}  // namespace r3v

#include "r3v/poly.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace r3v {

Polynomial::Polynomial(const Field& field, std::vector<u32> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = field_.reduce(c);
  normalize();
}

Polynomial Polynomial::monomial(const Field& field, u32 c, std::size_t degree) {
  std::vector<u32> v(degree + 1, 0);
  v[degree] = c;
  return Polynomial(field, std::move(v));
}

Polynomial Polynomial::xn_minus_1(const Field& field, std::size_t n) {
  std::vector<u32> v(n + 1, 0);
  v[0] = field.minus_one();
  v[n] = 1;
  return Polynomial(field, std::move(v));
}

void Polynomial::normalize() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Polynomial::check(const Polynomial& o) const {
  if (!(field_ == o.field_)) throw Error(ErrorCode::ParamMismatch, "polynomials over different fields");
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

u32 Polynomial::eval(u32 x) const noexcept {
  u32 acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.mul_add(acc, x, *it);
  return acc;
}

Polynomial Polynomial::reversed() const {
  std::vector<u32> v(coeffs_.rbegin(), coeffs_.rend());
  return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check(o);
  std::vector<u32> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.add(coeff(i), o.coeff(i));
  return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check(o);
  std::vector<u32> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.sub(coeff(i), o.coeff(i));
  return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check(o);
  if (is_zero() || o.is_zero()) return Polynomial(field_);
  std::vector<u32> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] = field_.mul_add(coeffs_[i], o.coeffs_[j], v[i + j]);
  return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::scaled(u32 c) const {
  std::vector<u32> v(coeffs_);
  for (auto& x : v) x = field_.mul(x, field_.reduce(c));
  return Polynomial(field_, std::move(v));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::ParamMismatch, "polynomials over different fields");
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const Field& f = a.field();
  std::vector<u32> rem(a.coeffs());
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(f), a};
  std::vector<u32> quot(a.degree() - db + 1, 0);
  const u32 lead_inv = f.inv(b.leading());
  for (int i = a.degree(); i >= db; --i) {
    u32 c = f.mul(rem[i], lead_inv);
    quot[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.coeffs()[j]));
  }
  rem.resize(db);
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool divides(const Polynomial& d, const Polynomial& a) { return divmod(a, d).second.is_zero(); }

bool poly_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

namespace {

Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& m) {
  return divmod(a * b, m).second;
}

Polynomial powmod(Polynomial base, u64 e, const Polynomial& m) {
  Polynomial r = divmod(Polynomial::constant(m.field(), 1), m).second;
  base = divmod(base, m).second;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

// Splits `g`, a product of distinct monic irreducibles all of degree d, by
// trial division over monic polynomials of degree d in lexicographic order.
void split_equal_degree(Polynomial g, int d, std::vector<Polynomial>& out) {
  const Field& f = g.field();
  if (g.degree() == d) {
    out.push_back(std::move(g));
    return;
  }
  std::vector<u32> c(d + 1, 0);
  c[d] = 1;
  while (g.degree() > d) {
    Polynomial cand(f, c);
    auto [quo, rem] = divmod(g, cand);
    if (rem.is_zero()) {
      out.push_back(cand);
      g = quo;
    }
    // odometer over the low d coefficients
    int i = 0;
    while (i < d && ++c[i] == f.q()) c[i++] = 0;
    if (i == d) break;
  }
  if (g.degree() == d) out.push_back(std::move(g));
}

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<Polynomial> factor_squarefree(Polynomial f) {
  const Field& field = f.field();
  std::vector<Polynomial> out;
  const Polynomial x = Polynomial::monomial(field, 1, 1);
  Polynomial h = x;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, field.q(), f);
    Polynomial g = gcd(f, h - x);
    if (g.degree() > 0) {
      split_equal_degree(g, d, out);
      f = divmod(f, g).first;
      h = divmod(h, f).second;
    }
  }
  if (f.degree() > 0) out.push_back(f.monic());
  return out;
}

}  // namespace

std::vector<Polynomial> factor_xn_minus_1(const Field& field, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidParams, "length must be positive");
  std::size_t m = n, pe = 1;
  while (m % field.q() == 0) {
    m /= field.q();
    pe *= field.q();
  }
  auto base = factor_squarefree(Polynomial::xn_minus_1(field, m));
  std::vector<Polynomial> out;
  for (const auto& p : base)
    for (std::size_t i = 0; i < pe; ++i) out.push_back(p);
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<FactorPower> group_factors(const std::vector<Polynomial>& factors) {
  std::vector<FactorPower> out;
  for (const auto& p : factors) {
    auto it = std::find_if(out.begin(), out.end(), [&](const FactorPower& fp) { return fp.factor == p; });
    if (it == out.end())
      out.push_back({p, 1});
    else
      ++it->multiplicity;
  }
  return out;
}

std::vector<Polynomial> monic_divisors_of_xn_minus_1(const Field& field, std::size_t n, std::size_t cap) {
  auto groups = group_factors(factor_xn_minus_1(field, n));
  std::size_t count = 1;
  for (const auto& g : groups) {
    count *= static_cast<std::size_t>(g.multiplicity + 1);
    if (count > cap)
      throw Error(ErrorCode::SearchSpaceTooLarge,
                  "x^" + std::to_string(n) + "-1 has more than " + std::to_string(cap) + " monic divisors");
  }
  std::vector<Polynomial> divisors{Polynomial::constant(field, 1)};
  for (const auto& g : groups) {
    std::vector<Polynomial> next;
    for (const auto& d : divisors) {
      Polynomial acc = d;
      next.push_back(acc);
      for (int k = 0; k < g.multiplicity; ++k) {
        acc = acc * g.factor;
        next.push_back(acc);
      }
    }
    divisors = std::move(next);
  }
  std::sort(divisors.begin(), divisors.end(), poly_less);
  return divisors;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "polynomial '" + std::string(text) + "': " + why);
}

}  // namespace

Polynomial parse_polynomial(const Field& field, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) parse_fail(text, "empty");
  std::vector<u32> coeffs;
  std::size_t pos = 0;
  auto read_int = [&](u64& out) {
    std::size_t start = pos;
    u64 v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<u64>(s[pos] - '0');
      if (v > (1u << 20)) parse_fail(text, "integer too large");
      ++pos;
    }
    if (pos == start) return false;
    out = v;
    return true;
  };
  while (true) {
    u64 c = 1;
    bool has_coeff = read_int(c);
    if (has_coeff && c >= field.q()) parse_fail(text, "coefficient " + std::to_string(c) + " not in [0,q)");
    std::size_t deg = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (!has_coeff) parse_fail(text, "'*' without coefficient");
      ++pos;
      if (pos >= s.size() || s[pos] != 'x') parse_fail(text, "expected 'x' after '*'");
    }
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      deg = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        u64 k = 0;
        if (!read_int(k)) parse_fail(text, "expected exponent");
        deg = static_cast<std::size_t>(k);
      }
    } else if (!has_coeff) {
      parse_fail(text, "expected term");
    }
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
    coeffs[deg] = field.add(coeffs[deg], static_cast<u32>(c));
    if (pos == s.size()) break;
    if (s[pos] != '+') parse_fail(text, std::string("unexpected '") + s[pos] + "'");
    ++pos;
  }
  return Polynomial(field, std::move(coeffs));
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    u32 c = p.coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += 'x';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace r3v

#include "r3v/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace r3v {

std::vector<RingElem> Ring::elements() const {
  std::vector<RingElem> out;
  out.reserve(size());
  for (u32 i = 0; i < size(); ++i) out.push_back(from_index(i));
  return out;
}

RingElem Ring::mul(const RingElem& x, const RingElem& y) const noexcept {
  const u32 q = field_.q();
  // Products of residues below 2^16 are below 2^32; four of them need 64 bits.
  const u64 c0 = static_cast<u64>(x.a0) * y.a0;
  const u64 c1 = static_cast<u64>(x.a0) * y.a1 + static_cast<u64>(x.a1) * y.a0 +
                 static_cast<u64>(x.a1) * y.a2 + static_cast<u64>(x.a2) * y.a1;
  const u64 c2 = static_cast<u64>(x.a0) * y.a2 + static_cast<u64>(x.a1) * y.a1 +
                 static_cast<u64>(x.a2) * y.a0 + static_cast<u64>(x.a2) * y.a2;
  return {static_cast<u32>(c0 % q), static_cast<u32>(c1 % q), static_cast<u32>(c2 % q)};
}

u32 Ring::evaluate(const RingElem& x, u32 t) const {
  if (t != 0 && t != 1 && t != field_.minus_one())
    throw Error(ErrorCode::InvalidEvaluationPoint,
                "v -> " + std::to_string(t) + " is not a root of v^3 - v over F_" + std::to_string(q()));
  const u32 t2 = field_.mul(t, t);
  return field_.add(x.a0, field_.add(field_.mul(x.a1, t), field_.mul(x.a2, t2)));
}

std::array<u32, 3> Ring::crt_split(const RingElem& x) const noexcept {
  return {x.a0, field_.add(x.a0, field_.add(x.a1, x.a2)), field_.add(field_.sub(x.a0, x.a1), x.a2)};
}

RingElem Ring::crt_combine(u32 at0, u32 at1, u32 at_minus1) const {
  if (field_.is_even())
    throw Error(ErrorCode::CharacteristicTwoUnsupported, "CRT recombination needs 1/2");
  // a0 = x(0); a1 = (x(1) - x(-1))/2; a2 = (x(1) + x(-1))/2 - x(0)
  const u32 half = field_.inv(2);
  const u32 a1 = field_.mul(half, field_.sub(at1, at_minus1));
  const u32 a2 = field_.sub(field_.mul(half, field_.add(at1, at_minus1)), at0);
  return {at0, a1, a2};
}

bool Ring::is_unit(const RingElem& x) const noexcept {
  const auto c = crt_split(x);
  return c[0] != 0 && c[1] != 0 && c[2] != 0;
}

std::optional<RingElem> Ring::inverse(const RingElem& x) const {
  if (!is_unit(x)) return std::nullopt;
  if (!field_.is_even()) {
    const auto c = crt_split(x);
    return crt_combine(field_.inv(c[0]), field_.inv(c[1]), field_.inv(c[2]));
  }
  for (const auto& y : elements())
    if (mul(x, y) == one()) return y;
  return std::nullopt;
}

RingElem Ring::idempotent_at1() const { return crt_combine(0, 1, 0); }
RingElem Ring::idempotent_at_minus1() const { return crt_combine(0, 0, 1); }
RingElem Ring::idempotent_at0() const { return crt_combine(1, 0, 0); }

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "element '" + std::string(text) + "': " + why);
}

}  // namespace

RingElem parse_elem(const Ring& ring, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) parse_fail(text, "empty");
  const u32 q = ring.q();
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
  auto check_range = [&](u64 c) {
    if (c >= q) parse_fail(text, "coefficient " + std::to_string(c) + " not in [0," + std::to_string(q) + ")");
  };

  if (s.front() == '[') {
    std::array<u64, 3> a{};
    pos = 1;
    for (int i = 0; i < 3; ++i) {
      if (!read_int(a[i])) parse_fail(text, "expected integer");
      check_range(a[i]);
      const char want = i < 2 ? ',' : ']';
      if (pos >= s.size() || s[pos] != want) parse_fail(text, std::string("expected '") + want + "'");
      ++pos;
    }
    if (pos != s.size()) parse_fail(text, "trailing characters");
    return ring.make(a[0], a[1], a[2]);
  }

  std::array<u32, 3> acc{};
  while (true) {
    u64 c = 1;
    const bool has_coeff = read_int(c);
    if (has_coeff) check_range(c);
    int deg = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (!has_coeff) parse_fail(text, "'*' without coefficient");
      ++pos;
      if (pos >= s.size() || s[pos] != 'v') parse_fail(text, "expected 'v' after '*'");
    }
    if (pos < s.size() && s[pos] == 'v') {
      ++pos;
      deg = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        u64 k = 0;
        if (!read_int(k) || k > 2) parse_fail(text, "exponent must be 0, 1 or 2");
        deg = static_cast<int>(k);
      }
    } else if (!has_coeff) {
      parse_fail(text, "expected term");
    }
    acc[deg] = ring.field().add(acc[deg], static_cast<u32>(c));
    if (pos == s.size()) break;
    if (s[pos] != '+') parse_fail(text, std::string("unexpected '") + s[pos] + "'");
    ++pos;
  }
  return {acc[0], acc[1], acc[2]};
}

std::string format_elem(const RingElem& x) {
  return "[" + std::to_string(x.a0) + "," + std::to_string(x.a1) + "," + std::to_string(x.a2) + "]";
}

std::string format_elem_poly(const RingElem& x) {
  std::string out;
  auto term = [&](u32 c, const char* var) {
    if (c == 0) return;
    if (!out.empty()) out += '+';
    if (*var == '\0')
      out += std::to_string(c);
    else {
      if (c != 1) out += std::to_string(c);
      out += var;
    }
  };
  term(x.a0, "");
  term(x.a1, "v");
  term(x.a2, "v^2");
  return out.empty() ? "0" : out;
}

namespace {

enum class Cond { Zero, NonZero, SumA0A2Zero, SumA0A1Zero };

struct PrintedRow {
  Cond c0, c1, c2;
  int weight;
  const char* text;
};

// Rows exactly as printed; conditions on (a0, a1, third column).
constexpr PrintedRow kPrintedLeeTable[] = {
    {Cond::Zero, Cond::Zero, Cond::Zero, 0, "a0=0; a1=0; a2=0"},
    {Cond::Zero, Cond::NonZero, Cond::Zero, 1, "a0=0; a1!=0; a2=0"},
    {Cond::NonZero, Cond::NonZero, Cond::Zero, 1, "a0!=0; a1!=0; a2=0"},
    {Cond::NonZero, Cond::Zero, Cond::SumA0A2Zero, 1, "a0!=0; a1=0; a0+a2=0 [mod]"},
    {Cond::Zero, Cond::NonZero, Cond::NonZero, 1, "a0=0; a1!=0; a2!=0"},
    {Cond::NonZero, Cond::Zero, Cond::SumA0A2Zero, 2, "a0!=0; a1=0; a0+a2=0 [mod]"},
    {Cond::Zero, Cond::NonZero, Cond::NonZero, 2, "a0=0; a1!=0; a2!=0"},
    {Cond::NonZero, Cond::NonZero, Cond::SumA0A1Zero, 2, "a0!=0; a1!=0; a0+a1=0 [mod]"},
    {Cond::NonZero, Cond::NonZero, Cond::SumA0A2Zero, 3, "a0!=0; a1!=0; a0+a2=0 [mod]"},
    {Cond::NonZero, Cond::NonZero, Cond::Zero, 3, "a0!=0; a1!=0; a2=0"},
};

bool holds(Cond c, u32 value, const Field& f, const RingElem& x) {
  switch (c) {
    case Cond::Zero: return value == 0;
    case Cond::NonZero: return value != 0;
    case Cond::SumA0A2Zero: return f.add(x.a0, x.a2) == 0;
    case Cond::SumA0A1Zero: return f.add(x.a0, x.a1) == 0;
  }
  return false;
}

}  // namespace

std::vector<LeeTableRow> audit_lee_table(const Ring& ring) {
  std::vector<LeeTableRow> rows;
  const auto elems = ring.elements();
  const int count = static_cast<int>(std::size(kPrintedLeeTable));
  for (int r = 0; r < count; ++r) {
    const auto& pr = kPrintedLeeTable[r];
    LeeTableRow row;
    row.row = r + 1;
    row.condition = pr.text;
    row.printed_weight = pr.weight;
    std::set<int> seen;
    for (const auto& x : elems) {
      if (!holds(pr.c0, x.a0, ring.field(), x) || !holds(pr.c1, x.a1, ring.field(), x) ||
          !holds(pr.c2, x.a2, ring.field(), x))
        continue;
      ++row.matching;
      const int w = ring.lee_weight(x);
      seen.insert(w);
      if (w == pr.weight) ++row.agreeing;
    }
    row.observed_weights.assign(seen.begin(), seen.end());
    for (int o = 0; o < count; ++o) {
      const auto& other = kPrintedLeeTable[o];
      if (o != r && other.c0 == pr.c0 && other.c1 == pr.c1 && other.c2 == pr.c2) row.duplicate_of.push_back(o + 1);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace r3v

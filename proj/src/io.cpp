#include "r3v/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace r3v {

namespace {

bool skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

// Parses `q=<q> n=<n>`.
std::pair<u32, std::size_t> read_header(std::istream& in) {
  std::string line;
  while (std::getline(in, line))
    if (!skippable(line)) break;
  std::istringstream hs(line);
  std::string a, b;
  hs >> a >> b;
  auto value = [&](const std::string& tok, const char* key) -> u64 {
    const std::string prefix = std::string(key) + "=";
    if (tok.rfind(prefix, 0) != 0) throw Error(ErrorCode::ParseError, "header must be 'q=<q> n=<n>', got '" + line + "'");
    try {
      return std::stoull(tok.substr(prefix.size()));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad header value '" + tok + "'");
    }
  };
  const u64 q = value(a, "q");
  const u64 n = value(b, "n");
  if (q >= (1u << 16)) throw Error(ErrorCode::InvalidParams, "q too large");
  Field check(static_cast<u32>(q));
  return {static_cast<u32>(q), static_cast<std::size_t>(n)};
}

}  // namespace

MatrixFile read_matrix_file(std::istream& in) {
  MatrixFile m;
  std::tie(m.q, m.n) = read_header(in);
  std::string line;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    std::istringstream ls(line);
    std::vector<u32> row;
    long long x;
    while (ls >> x) {
      if (x < 0 || x >= m.q) throw Error(ErrorCode::ParseError, "entry " + std::to_string(x) + " not in [0,q)");
      row.push_back(static_cast<u32>(x));
    }
    if (!ls.eof()) throw Error(ErrorCode::ParseError, "non-integer entry in '" + line + "'");
    if (row.size() != m.n)
      throw Error(ErrorCode::ShapeError, "row has " + std::to_string(row.size()) + " entries, expected " +
                                             std::to_string(m.n));
    m.rows.push_back(std::move(row));
  }
  return m;
}

void write_matrix_file(std::ostream& out, const MatrixFile& m) {
  out << "q=" << m.q << " n=" << m.n << '\n';
  for (const auto& r : m.rows) {
    for (std::size_t j = 0; j < r.size(); ++j) out << (j ? " " : "") << r[j];
    out << '\n';
  }
}

MatrixFile to_matrix_file(const LinearCodeFq& c) {
  MatrixFile m{c.field().q(), c.length(), {}};
  for (Eigen::Index i = 0; i < c.basis().rows(); ++i)
    m.rows.emplace_back(c.basis().row(i).data(), c.basis().row(i).data() + c.length());
  return m;
}

CodeFile read_code_file(std::istream& in) {
  CodeFile c;
  std::tie(c.q, c.n) = read_header(in);
  const Ring ring(c.q);
  std::string line;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    RingVector row = parse_vector(ring, line);
    if (row.size() != c.n)
      throw Error(ErrorCode::ShapeError, "generator has " + std::to_string(row.size()) + " entries, expected " +
                                             std::to_string(c.n));
    c.rows.push_back(std::move(row));
  }
  return c;
}

void write_code_file(std::ostream& out, const CodeFile& c) {
  out << "q=" << c.q << " n=" << c.n << '\n';
  for (const auto& r : c.rows) out << format_vector(r) << '\n';
}

CodeFile to_code_file(const LinearCodeR& c) { return {c.ring().q(), c.length(), c.generators()}; }

MatrixFile load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_matrix_file(in);
}

CodeFile load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_code_file(in);
}

}  // namespace r3v

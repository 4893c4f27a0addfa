#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "r3v/codes_fq.hpp"
#include "r3v/codes_r.hpp"

namespace r3v {

// Both file formats start with a header line `q=<q> n=<n>`, followed by one
// row per line. Blank lines and lines starting with '#' are skipped.

struct MatrixFile {
  u32 q = 0;
  std::size_t n = 0;
  std::vector<std::vector<u32>> rows;  // entries in [0, q)
};

struct CodeFile {
  u32 q = 0;
  std::size_t n = 0;
  std::vector<RingVector> rows;  // element grammar, whitespace-separated
};

MatrixFile read_matrix_file(std::istream& in);
void write_matrix_file(std::ostream& out, const MatrixFile& m);
MatrixFile to_matrix_file(const LinearCodeFq& c);

CodeFile read_code_file(std::istream& in);
void write_code_file(std::ostream& out, const CodeFile& c);
CodeFile to_code_file(const LinearCodeR& c);

MatrixFile load_matrix_file(const std::string& path);
CodeFile load_code_file(const std::string& path);

}  // namespace r3v

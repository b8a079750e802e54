// SPDX-License-Identifier: Apache-2.0
//
// Plain-text matrix and coordinate files: one row per line, entries
// separated by whitespace, lines starting with '#' and blank lines ignored.
#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "distgeom/matrices.hpp"

namespace distgeom::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Rectangular table of reals. Throws ParseError on ragged rows or bad
// tokens, naming the 1-based line number.
Eigen::MatrixXd read_table(std::istream& in, const std::string& source);
Eigen::MatrixXd read_table_file(const std::string& path);

// Comma-separated reals, e.g. "1.5,2,3e-1".
std::vector<double> parse_list(const std::string& text);

// 12 significant digits, trailing zeros kept; -0 prints as 0.
std::string format_number(double v);

// One point per line, coordinates separated by tabs.
void write_coords(std::ostream& out, const Realization& x);

}  // namespace distgeom::io

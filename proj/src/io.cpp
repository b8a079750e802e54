// SPDX-License-Identifier: Apache-2.0
#include "distgeom/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace distgeom::io {

namespace {

bool parse_real(const std::string& token, double& out) {
  if (token.empty()) return false;
  errno = 0;
  char* end = nullptr;
  out = std::strtod(token.c_str(), &end);
  return end == token.c_str() + token.size() && errno != ERANGE &&
         std::isfinite(out);
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line,
                       const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
      line_(line) {}

Eigen::MatrixXd read_table(std::istream& in, const std::string& source) {
  std::vector<std::vector<double>> rows;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    std::istringstream fields(text);
    std::vector<double> row;
    std::string token;
    while (fields >> token) {
      double v = 0.0;
      if (!parse_real(token, v))
        throw ParseError(source, line_no, "not a finite number: '" + token + "'");
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(source, line_no,
                       "row has " + std::to_string(row.size()) +
                           " entries, expected " +
                           std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto k = rows.empty() ? Eigen::Index{0}
                              : static_cast<Eigen::Index>(rows.front().size());
  Eigen::MatrixXd m(n, k);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

Eigen::MatrixXd read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return read_table(in, path);
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  std::size_t item = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto stop = comma == std::string::npos ? text.size() : comma;
    std::string token = text.substr(start, stop - start);
    const auto b = token.find_first_not_of(" \t");
    const auto e = token.find_last_not_of(" \t");
    token = b == std::string::npos ? std::string{} : token.substr(b, e - b + 1);
    ++item;
    double v = 0.0;
    if (!parse_real(token, v))
      throw ParseError("list", item, "not a finite number: '" + token + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drops the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.12g", v);
  return buf;
}

void write_coords(std::ostream& out, const Realization& x) {
  const Eigen::MatrixXd& c = x.coords();
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    for (Eigen::Index j = 0; j < c.cols(); ++j) {
      if (j > 0) out << '\t';
      out << format_number(c(i, j));
    }
    out << '\n';
  }
}

}  // namespace distgeom::io

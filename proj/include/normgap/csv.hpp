#ifndef NORMGAP_CSV_HPP
#define NORMGAP_CSV_HPP

// Plain-text vector and matrix files.
//
// Vector files hold either one real per line or a single comma-separated
// row; the layout is auto-detected. Lines starting with '#' (after leading
// whitespace) and blank lines are ignored. Matrix files are row-major, one
// comma-separated row per line.

#include <Eigen/Dense>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "normgap/error.hpp"

namespace normgap::csv {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\v\f");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\v\f");
  return s.substr(first, last - first + 1);
}

inline double parse_real(std::string_view cell, std::size_t line) {
  cell = trim(cell);
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(v)) {
    throw InvalidInput("line " + std::to_string(line) + ": cannot parse '" + std::string(cell) +
                       "' as a finite real");
  }
  return v;
}

inline std::vector<double> parse_row(std::string_view row, std::size_t line) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = row.find(',', start);
    out.push_back(parse_real(row.substr(start, comma - start), line));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

struct DataLine {
  std::size_t number;
  std::string text;
};

inline std::vector<DataLine> data_lines(std::string_view text) {
  std::vector<DataLine> lines;
  std::size_t start = 0;
  std::size_t number = 0;
  // Skip a UTF-8 byte order mark.
  if (text.substr(0, 3) == "\xEF\xBB\xBF") start = 3;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    const std::string_view t = trim(text.substr(start, end - start));
    if (!t.empty() && t.front() != '#') lines.push_back({number, std::string(t)});
    start = end + 1;
  }
  return lines;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

inline std::vector<double> parse_vector(std::string_view text) {
  const auto lines = detail::data_lines(text);
  if (lines.empty()) throw InvalidInput("vector file contains no data");
  if (lines.size() == 1) return detail::parse_row(lines.front().text, lines.front().number);
  std::vector<double> out;
  out.reserve(lines.size());
  for (const auto& l : lines) {
    if (l.text.find(',') != std::string::npos) {
      throw InvalidInput("line " + std::to_string(l.number) +
                         ": expected one value per line in a multi-line vector file");
    }
    out.push_back(detail::parse_real(l.text, l.number));
  }
  return out;
}

inline std::vector<double> read_vector(const std::string& path) {
  return parse_vector(detail::read_file(path));
}

inline Eigen::MatrixXd parse_matrix(std::string_view text) {
  const auto lines = detail::data_lines(text);
  if (lines.empty()) throw InvalidInput("matrix file contains no data");
  std::vector<std::vector<double>> rows;
  rows.reserve(lines.size());
  for (const auto& l : lines) {
    rows.push_back(detail::parse_row(l.text, l.number));
    if (rows.back().size() != rows.front().size()) {
      throw InvalidInput("line " + std::to_string(l.number) + ": row has " +
                         std::to_string(rows.back().size()) + " columns, expected " +
                         std::to_string(rows.front().size()));
    }
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.front().size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return m;
}

inline Eigen::MatrixXd read_matrix(const std::string& path) {
  return parse_matrix(detail::read_file(path));
}

/// Shortest text that round-trips the double.
inline std::string format_real(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

/// Single comma-separated row.
inline void write_row(std::ostream& out, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out << ',';
    out << format_real(values[i]);
  }
  out << '\n';
}

}  // namespace normgap::csv

#endif  // NORMGAP_CSV_HPP

#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "taugraph/graph.hpp"

namespace taugraph {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace detail

/// Parses the `a,b,length` CSV edge-list format. Blank lines and text after `#` are ignored.
inline std::vector<EdgeRecord> parse_edge_list(std::istream& in) {
  std::vector<EdgeRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = detail::trim(body);
    if (body.empty()) continue;

    std::string_view fields[3];
    std::size_t count = 0;
    while (count < 3) {
      const auto comma = body.find(',');
      fields[count++] = detail::trim(body.substr(0, comma));
      if (comma == std::string_view::npos) {
        body = {};
        break;
      }
      body = body.substr(comma + 1);
    }
    if (count != 3 || !detail::trim(body).empty()) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected a,b,length");
    }
    EdgeRecord r;
    auto parse_index = [&](std::string_view f, VertexId& out) {
      const auto res = std::from_chars(f.data(), f.data() + f.size(), out);
      if (res.ec != std::errc{} || res.ptr != f.data() + f.size()) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad vertex index '" + std::string(f) + "'");
      }
    };
    parse_index(fields[0], r.a);
    parse_index(fields[1], r.b);
    try {
      std::size_t used = 0;
      const std::string len(fields[2]);
      r.length = std::stod(len, &used);
      if (used != len.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad length '" + std::string(fields[2]) + "'");
    }
    if (!(r.length > 0.0)) {
      throw Error(ErrorCode::NonPositiveLength, "line " + std::to_string(line_no) + ": length must be positive");
    }
    records.push_back(r);
  }
  return records;
}

inline MetrizedGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  const auto records = parse_edge_list(in);
  return from_edge_list(records);
}

/// Writes the CSV edge list, preceded by `#` comment lines (if any).
inline void write_edge_list(std::ostream& out, const MetrizedGraph& g, const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "# " << c << '\n';
  for (const Edge& e : g.edges()) {
    out << e.a << ',' << e.b << ',' << detail::format_double(e.length) << '\n';
  }
}

inline void write_edge_list_file(const std::string& path, const MetrizedGraph& g,
                                 const std::vector<std::string>& comments = {}) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  write_edge_list(out, g, comments);
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

// Matrix dumps. Dense: one row per line, entries separated by a single space.
// Sparse: a "rows cols nnz" header, then one "row col value" line per stored
// entry, 0-based, row-major order.

inline void write_dense_matrix(std::ostream& out, const Eigen::MatrixXd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << detail::format_double(m(i, j));
    }
    out << '\n';
  }
}

inline void write_triplet_matrix(std::ostream& out, const Eigen::SparseMatrix<double>& m) {
  Eigen::SparseMatrix<double, Eigen::RowMajor> rm = m;
  out << rm.rows() << ' ' << rm.cols() << ' ' << rm.nonZeros() << '\n';
  for (Eigen::Index i = 0; i < rm.outerSize(); ++i) {
    for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(rm, i); it; ++it) {
      out << it.row() << ' ' << it.col() << ' ' << detail::format_double(it.value()) << '\n';
    }
  }
}

inline Eigen::MatrixXd read_dense_matrix(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (detail::trim(line).empty()) continue;
    std::istringstream ls(line);
    std::vector<double> row;
    double x;
    while (ls >> x) row.push_back(x);
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorCode::ParseError, "ragged dense matrix");
    }
    rows.push_back(std::move(row));
  }
  Eigen::MatrixXd m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace taugraph

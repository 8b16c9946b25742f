#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dpcut/graph.hpp"

// Text format:
//   # comment lines anywhere
//   n m
//   u v     (m lines, 0-based)

namespace dpcut::io {

namespace detail {

inline bool is_skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

inline long long parse_count(std::istringstream& in, const std::string& what, std::size_t line_no) {
  long long value = 0;
  if (!(in >> value))
    throw InputError("edge list line " + std::to_string(line_no) + ": expected " + what);
  return value;
}

inline void expect_end(std::istringstream& in, std::size_t line_no) {
  std::string rest;
  if (in >> rest) throw InputError("edge list line " + std::to_string(line_no) + ": unexpected token '" + rest + "'");
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<std::pair<int, int>> pairs;

  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_skippable(line)) continue;
    std::istringstream fields(line);
    if (!have_header) {
      n = detail::parse_count(fields, "vertex count n", line_no);
      m = detail::parse_count(fields, "edge count m", line_no);
      detail::expect_end(fields, line_no);
      if (n < 0 || m < 0) throw InputError("edge list header: negative count");
      have_header = true;
      continue;
    }
    if (static_cast<long long>(pairs.size()) == m)
      throw InputError("edge list line " + std::to_string(line_no) + ": more than m=" + std::to_string(m) + " edges");
    auto u = detail::parse_count(fields, "endpoint u", line_no);
    auto v = detail::parse_count(fields, "endpoint v", line_no);
    detail::expect_end(fields, line_no);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge list line " + std::to_string(line_no) + ": edge (" + std::to_string(u) + "," +
                       std::to_string(v) + ") endpoint out of range [0," + std::to_string(n) + ")");
    pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (!have_header) throw InputError("edge list: missing 'n m' header");
  if (static_cast<long long>(pairs.size()) != m)
    throw InputError("edge list: header promises " + std::to_string(m) + " edges, found " +
                     std::to_string(pairs.size()));
  return Graph::from_edge_list(static_cast<std::size_t>(n), pairs);
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_edge_list(in);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

/// Canonical serialization: optional comment lines, header, edges in sorted order.
inline void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string format_edge_list(const Graph& g, const std::vector<std::string>& comments = {}) {
  std::ostringstream out;
  write_edge_list(out, g, comments);
  return out.str();
}

}  // namespace dpcut::io

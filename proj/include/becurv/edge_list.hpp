#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <string_view>

#include "becurv/errors.hpp"
#include "becurv/graph.hpp"

namespace becurv {

// Edge-list text: one edge per line as two whitespace-separated labels.
// Blank lines and lines whose first non-blank character is '#' are skipped.

inline Graph read_edge_list(std::istream& in) {
  Graph g;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string u, v, extra;
    fields >> u >> v;
    if (v.empty()) throw ParseError(line_no, "expected two vertex labels");
    if (fields >> extra) throw ParseError(line_no, "unexpected token '" + extra + "'");
    g.add_edge(u, v);
  }
  return g;
}

inline Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

/// Isolated vertices have no representation in the format and are not written.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace becurv

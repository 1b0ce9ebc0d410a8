#pragma once

#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rlc/error.hpp"
#include "rlc/graph.hpp"

namespace rlc {

// graph6: N(n) followed by the upper triangle x(0,1), x(0,2), x(1,2),
// x(0,3), ... packed big-endian six bits per byte, each byte offset by 63.

inline std::string to_graph6(const Graph& g) {
  std::string out;
  const std::uint64_t n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int filled = 0;
  unsigned char current = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      current = static_cast<unsigned char>((current << 1) | (g.adjacent(i, j) ? 1 : 0));
      if (++filled == 6) {
        out.push_back(static_cast<char>(current + 63));
        filled = 0;
        current = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((current << (6 - filled)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty record");

  std::size_t pos = 0;
  auto take = [&]() -> std::uint64_t {
    if (pos >= text.size()) throw ParseError("graph6: truncated record");
    const int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
    return static_cast<std::uint64_t>(c - 63);
  };

  std::uint64_t n = 0;
  if (text[0] != '~') {
    n = take();
  } else if (text.size() > 1 && text[1] == '~') {
    pos = 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | take();
  } else {
    pos = 1;
    for (int i = 0; i < 3; ++i) n = (n << 6) | take();
  }
  if (n > std::numeric_limits<std::uint32_t>::max() / 2) throw ParseError("graph6: graph too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) throw ParseError("graph6: wrong record length");

  std::vector<Edge> es;
  std::uint64_t k = 0;
  Vertex i = 0;
  Vertex j = 1;
  for (std::uint64_t b = 0; b < bytes; ++b) {
    const std::uint64_t chunk = take();
    for (int bit = 5; bit >= 0 && k < bits; --bit, ++k) {
      if ((chunk >> bit) & 1) es.push_back({i, j});
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_edges(static_cast<std::uint32_t>(n), es);
}

/// Reads one graph6 record per line; blank lines are skipped.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(in) {}

  std::optional<Graph> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      try {
        last_ = line;
        return from_graph6(line);
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no_) + ": " + e.what());
      }
    }
    return std::nullopt;
  }

  const std::string& last_record() const { return last_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
  std::string last_;
};

/// DIMACS-like edge list: `p <n> <edge-count>` then `e <u> <v>` lines with
/// 0-based endpoints. `c` lines are comments.
inline Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::uint64_t> n;
  std::uint64_t declared = 0;
  std::vector<Edge> es;
  auto fail = [&](const std::string& why) {
    throw ParseError("edge list line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (n) fail("duplicate p line");
      std::int64_t nn = -1, mm = -1;
      if (!(ls >> nn >> mm) || nn < 0 || mm < 0) fail("expected `p <n> <edge-count>`");
      n = static_cast<std::uint64_t>(nn);
      declared = static_cast<std::uint64_t>(mm);
      if (*n > std::numeric_limits<std::int32_t>::max()) fail("vertex count unsupported");
    } else if (tag == "e") {
      if (!n) fail("edge before p line");
      std::int64_t u = -1, v = -1;
      if (!(ls >> u >> v)) fail("expected `e <u> <v>`");
      if (u < 0 || v < 0 || static_cast<std::uint64_t>(u) >= *n || static_cast<std::uint64_t>(v) >= *n)
        fail("endpoint out of range");
      if (u == v) fail("self-loop");
      es.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    } else {
      fail("unknown line tag '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing tokens");
  }
  if (!n) throw ParseError("edge list: missing p line");
  if (es.size() != declared)
    throw ParseError("edge list: header declares " + std::to_string(declared) + " edges, found " +
                     std::to_string(es.size()));
  Graph g = Graph::from_edges(static_cast<std::uint32_t>(*n), es);
  if (g.size() != es.size()) throw ParseError("edge list: repeated edge");
  return g;
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

}  // namespace rlc

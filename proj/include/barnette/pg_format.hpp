#pragma once

// The `.pg` text format:
//
//   # comment
//   n <V>
//   outer <dart>          (optional)
//   <v>: <u1> <u2> ...    (one line per vertex, clockwise neighbours)
//
// Parallel edges are twinned by occurrence rank: the i-th occurrence of u in
// v's list pairs with the i-th occurrence of v in u's list. A token `u/k`
// overrides the rank and pairs with the k-th (0-based) occurrence of v in u's
// list; the writer emits it only where the default rank would pair wrongly.

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "barnette/plane_graph.hpp"

namespace barnette {

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline int parse_int(const std::string& tok, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw InputError("malformed " + what + ": '" + tok + "'");
  }
  if (used != tok.size()) throw InputError("malformed " + what + ": '" + tok + "'");
  return value;
}

}  // namespace detail

inline PlaneGraph parse_plane_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::optional<DartId> outer;
  std::vector<std::vector<std::pair<VertexId, int>>> lists;  // (neighbour, explicit rank or -1)
  std::vector<char> defined;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::string where = "line " + std::to_string(line_no);
    std::istringstream ls(t);
    std::string head;
    ls >> head;
    if (head == "n") {
      require(n == -1, where + ": duplicate 'n' header");
      std::string tok, extra;
      require(static_cast<bool>(ls >> tok), where + ": missing vertex count");
      require(!(ls >> extra), where + ": trailing tokens after vertex count");
      n = detail::parse_int(tok, "vertex count");
      require(n > 0, where + ": vertex count must be positive");
      lists.assign(n, {});
      defined.assign(n, 0);
      continue;
    }
    require(n != -1, where + ": expected 'n <V>' header first");
    if (head == "outer") {
      require(!outer, where + ": duplicate 'outer' line");
      std::string tok, extra;
      require(static_cast<bool>(ls >> tok), where + ": missing outer dart");
      require(!(ls >> extra), where + ": trailing tokens after outer dart");
      outer = detail::parse_int(tok, "outer dart");
      continue;
    }
    require(head.size() >= 2 && head.back() == ':', where + ": expected '<v>:'");
    const int v = detail::parse_int(head.substr(0, head.size() - 1), "vertex id");
    require(v >= 0 && v < n, where + ": vertex id out of range");
    require(!defined[v], where + ": vertex " + std::to_string(v) + " listed twice");
    defined[v] = 1;
    std::string tok;
    while (ls >> tok) {
      const auto slash = tok.find('/');
      if (slash == std::string::npos) {
        lists[v].emplace_back(detail::parse_int(tok, "neighbour"), -1);
      } else {
        const int k = detail::parse_int(tok.substr(slash + 1), "twin rank");
        require(k >= 0, where + ": negative twin rank");
        lists[v].emplace_back(detail::parse_int(tok.substr(0, slash), "neighbour"), k);
      }
    }
  }
  require(n != -1, "missing 'n <V>' header");
  for (int v = 0; v < n; ++v) require(defined[v], "vertex " + std::to_string(v) + " has no rotation line");

  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + static_cast<int>(lists[v].size());
  // partner[global] = global index of twin entry
  std::vector<int> partner(offset[n], -1);
  for (int v = 0; v < n; ++v) {
    for (int p = 0; p < static_cast<int>(lists[v].size()); ++p) {
      const auto [u, explicit_rank] = lists[v][p];
      require(u >= 0 && u < n, "vertex " + std::to_string(v) + ": neighbour out of range");
      require(u != v, "loop at vertex " + std::to_string(v));
      int occurrence = 0;
      for (int q = 0; q < p; ++q) occurrence += lists[v][q].first == u;
      const int rank = explicit_rank >= 0 ? explicit_rank : occurrence;
      int seen = 0;
      int found = -1;
      for (int q = 0; q < static_cast<int>(lists[u].size()); ++q) {
        if (lists[u][q].first != v) continue;
        if (seen++ == rank) {
          found = q;
          break;
        }
      }
      require(found != -1, "twin matching failed: vertex " + std::to_string(u) + " lacks occurrence " +
                               std::to_string(rank) + " of " + std::to_string(v));
      partner[offset[v] + p] = offset[u] + found;
    }
  }
  std::vector<std::vector<PlaneGraph::HalfEdge>> rot(n);
  for (int v = 0; v < n; ++v) {
    for (int p = 0; p < static_cast<int>(lists[v].size()); ++p) {
      const int self = offset[v] + p;
      const int other = partner[self];
      require(partner[other] == self, "twin matching failed at vertex " + std::to_string(v));
      rot[v].push_back({lists[v][p].first, std::min(self, other)});
    }
  }
  if (outer) require(*outer >= 0 && *outer < offset[n], "outer dart out of range");
  return PlaneGraph::from_rotation(rot, outer);
}

inline std::string write_plane_graph(const PlaneGraph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  out << "outer " << g.face_darts(g.outer_face()).front() << "\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << v << ":";
    for (DartId d : g.rotation(v)) {
      const VertexId u = g.head(d);
      int occurrence = 0;
      for (DartId x : g.rotation(v)) {
        if (x == d) break;
        occurrence += g.head(x) == u;
      }
      const DartId t = g.twin(d);
      int rank = 0;
      for (DartId x : g.rotation(u)) {
        if (x == t) break;
        rank += g.head(x) == v;
      }
      out << " " << u;
      if (rank != occurrence) out << "/" << rank;
    }
    out << "\n";
  }
  return out.str();
}

inline PlaneGraph read_plane_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_plane_graph(buf.str());
}

inline void write_plane_graph_file(const PlaneGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << write_plane_graph(g);
}

}  // namespace barnette

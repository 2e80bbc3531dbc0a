#pragma once

// Structural predicates over PlaneGraph: regularity, bipartiteness,
// vertex connectivity, cycle checks and the inside/outside split of faces.

#include <map>
#include <string>
#include <vector>

#include "barnette/plane_graph.hpp"

namespace barnette {

using EdgeSet = std::vector<EdgeId>;  // sorted, no duplicates

inline EdgeSet normalized(EdgeSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool is_regular(const PlaneGraph& g, int k) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

inline bool is_cubic(const PlaneGraph& g) { return is_regular(g, 3); }

inline bool is_eulerian(const PlaneGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0) return false;
  return true;
}

inline int min_degree(const PlaneGraph& g) {
  int m = g.degree(0);
  for (VertexId v = 1; v < g.vertex_count(); ++v) m = std::min(m, g.degree(v));
  return m;
}

/// Proper 2-colouring of the vertices (0/1), or nullopt when not bipartite.
inline std::optional<std::vector<int>> vertex_bipartition(const PlaneGraph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  side[0] = 0;
  std::vector<VertexId> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const VertexId v = queue[i];
    for (DartId d : g.rotation(v)) {
      const VertexId w = g.head(d);
      if (side[w] == -1) {
        side[w] = 1 - side[v];
        queue.push_back(w);
      } else if (side[w] == side[v]) {
        return std::nullopt;
      }
    }
  }
  return side;
}

inline bool is_bipartite(const PlaneGraph& g) { return vertex_bipartition(g).has_value(); }

inline bool all_faces_even(const PlaneGraph& g) {
  for (FaceId f = 0; f < g.face_count(); ++f)
    if (g.face_length(f) % 2 != 0) return false;
  return true;
}

namespace detail {

// Maximum number of internally vertex-disjoint s-t paths, capped at `cap`,
// via unit-capacity max-flow on the split graph (v_in = 2v, v_out = 2v+1).
class VertexFlow {
 public:
  explicit VertexFlow(const PlaneGraph& g) : n_(g.vertex_count()) {
    adjacency_.assign(n_, {});
    for (VertexId v = 0; v < n_; ++v) {
      for (VertexId w : g.neighbours(v)) adjacency_[v].push_back(w);
      std::sort(adjacency_[v].begin(), adjacency_[v].end());
      adjacency_[v].erase(std::unique(adjacency_[v].begin(), adjacency_[v].end()), adjacency_[v].end());
    }
  }

  bool adjacent(VertexId a, VertexId b) const {
    return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
  }

  int disjoint_paths(VertexId s, VertexId t, int cap) {
    build(s, t);
    int flow = 0;
    const int src = 2 * s + 1;
    const int dst = 2 * t;
    while (flow < cap) {
      std::vector<int> parent_arc(2 * n_, -1);
      std::vector<char> seen(2 * n_, 0);
      std::vector<int> queue{src};
      seen[src] = 1;
      for (std::size_t i = 0; i < queue.size() && !seen[dst]; ++i) {
        const int x = queue[i];
        for (int a : out_[x]) {
          if (cap_[a] > 0 && !seen[to_[a]]) {
            seen[to_[a]] = 1;
            parent_arc[to_[a]] = a;
            queue.push_back(to_[a]);
          }
        }
      }
      if (!seen[dst]) break;
      for (int x = dst; x != src; x = to_[parent_arc[x] ^ 1]) {
        --cap_[parent_arc[x]];
        ++cap_[parent_arc[x] ^ 1];
      }
      ++flow;
    }
    return flow;
  }

 private:
  void add_arc(int a, int b, int c) {
    out_[a].push_back(static_cast<int>(to_.size()));
    to_.push_back(b);
    cap_.push_back(c);
    out_[b].push_back(static_cast<int>(to_.size()));
    to_.push_back(a);
    cap_.push_back(0);
  }

  void build(VertexId s, VertexId t) {
    out_.assign(2 * n_, {});
    to_.clear();
    cap_.clear();
    const int big = n_ + 1;
    for (VertexId v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
    for (VertexId v = 0; v < n_; ++v)
      for (VertexId w : adjacency_[v]) add_arc(2 * v + 1, 2 * w, 1);
  }

  int n_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::vector<int>> out_;
  std::vector<int> to_;
  std::vector<int> cap_;
};

}  // namespace detail

/// Vertex k-connectivity by Menger: at least k+1 vertices and k disjoint
/// paths between every non-adjacent pair. A two-vertex multigraph counts as
/// 2-connected when it has at least two parallel edges.
inline bool is_k_connected(const PlaneGraph& g, int k) {
  const int n = g.vertex_count();
  if (k <= 0) return true;
  if (k == 1) return true;  // PlaneGraph is connected by construction
  if (n == 2 && k == 2) return g.edge_count() >= 2;
  if (n < k + 1) return false;
  detail::VertexFlow flow(g);
  for (VertexId s = 0; s < n; ++s)
    for (VertexId t = s + 1; t < n; ++t)
      if (!flow.adjacent(s, t) && flow.disjoint_paths(s, t, k) < k) return false;
  return true;
}

/// Largest k <= cap such that g is k-connected.
inline int connectivity_class(const PlaneGraph& g, int cap = 3) {
  int k = 0;
  while (k < cap && is_k_connected(g, k + 1)) ++k;
  return k;
}

inline bool is_connected_without_edges(const PlaneGraph& g, const std::vector<char>& removed) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (DartId d : g.rotation(v)) {
      if (removed[g.edge_of(d)]) continue;
      const VertexId w = g.head(d);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.vertex_count();
}

inline bool is_barnette(const PlaneGraph& g) {
  return is_cubic(g) && is_bipartite(g) && is_k_connected(g, 3);
}

/// Evaluates named properties: "cubic", "bipartite", "eulerian",
/// "<k>_connected". Unknown names throw InputError.
inline std::vector<std::pair<std::string, bool>> validate(const PlaneGraph& g,
                                                          const std::vector<std::string>& props) {
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& p : props) {
    if (p == "cubic") {
      out.emplace_back(p, is_cubic(g));
    } else if (p == "bipartite") {
      out.emplace_back(p, is_bipartite(g));
    } else if (p == "eulerian") {
      out.emplace_back(p, is_eulerian(g));
    } else if (p == "barnette") {
      out.emplace_back(p, is_barnette(g));
    } else if (p.size() > 10 && p.substr(p.size() - 10) == "_connected") {
      int k = 0;
      try {
        k = std::stoi(p.substr(0, p.size() - 10));
      } catch (const std::exception&) {
        throw InputError("unknown property '" + p + "'");
      }
      out.emplace_back(p, is_k_connected(g, k));
    } else {
      throw InputError("unknown property '" + p + "'");
    }
  }
  return out;
}

/// True iff `edges` is the edge set of a hamiltonian cycle of g.
inline bool is_hamiltonian_cycle(const PlaneGraph& g, const EdgeSet& edges) {
  const int n = g.vertex_count();
  if (static_cast<int>(edges.size()) != n || n < 2) return false;
  std::vector<std::vector<EdgeId>> inc(n);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    auto [a, b] = g.endpoints(e);
    inc[a].push_back(e);
    inc[b].push_back(e);
  }
  for (VertexId v = 0; v < n; ++v)
    if (inc[v].size() != 2) return false;
  if (normalized(edges).size() != edges.size()) return false;
  int steps = 0;
  VertexId v = 0;
  EdgeId via = inc[0][0];
  do {
    v = g.other_end(via, v);
    via = inc[v][0] == via ? inc[v][1] : inc[v][0];
    ++steps;
  } while (v != 0);
  return steps == n;
}

/// True iff `edges` form a hamiltonian path between u and v.
inline bool is_hamiltonian_path(const PlaneGraph& g, const EdgeSet& edges, VertexId u, VertexId v) {
  const int n = g.vertex_count();
  if (static_cast<int>(edges.size()) != n - 1 || u == v) return false;
  if (normalized(edges).size() != edges.size()) return false;
  std::vector<std::vector<EdgeId>> inc(n);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    auto [a, b] = g.endpoints(e);
    inc[a].push_back(e);
    inc[b].push_back(e);
  }
  for (VertexId x = 0; x < n; ++x) {
    const std::size_t want = (x == u || x == v) ? 1 : 2;
    if (inc[x].size() != want) return false;
  }
  int visited = 1;
  VertexId x = u;
  EdgeId via = inc[u][0];
  while (true) {
    x = g.other_end(via, x);
    ++visited;
    if (x == v) break;
    via = inc[x][0] == via ? inc[x][1] : inc[x][0];
  }
  return visited == n;
}

enum class Side { inside, outside };

/// Sides of all faces relative to a set of edges (typically a cycle): a face
/// is outside iff it is reachable from the outer face in the dual without
/// crossing an edge of the set.
inline std::vector<Side> face_sides(const PlaneGraph& g, const EdgeSet& cycle) {
  std::vector<char> blocked(g.edge_count(), 0);
  for (EdgeId e : cycle) blocked[e] = 1;
  std::vector<Side> side(g.face_count(), Side::inside);
  std::vector<FaceId> queue{g.outer_face()};
  side[g.outer_face()] = Side::outside;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (DartId d : g.face_darts(queue[i])) {
      if (blocked[g.edge_of(d)]) continue;
      const FaceId other = g.face_of(g.twin(d));
      if (side[other] == Side::inside) {
        side[other] = Side::outside;
        queue.push_back(other);
      }
    }
  }
  return side;
}

/// Edges of a cycle given as a closed vertex sequence (first vertex not
/// repeated). Uses the lowest-id edge between consecutive vertices.
inline EdgeSet edges_of_vertex_cycle(const PlaneGraph& g, const std::vector<VertexId>& cycle, bool closed = true) {
  EdgeSet out;
  const std::size_t m = cycle.size();
  const std::size_t steps = closed ? m : m - 1;
  for (std::size_t i = 0; i < steps; ++i) {
    const VertexId a = cycle[i];
    const VertexId b = cycle[(i + 1) % m];
    EdgeId best = -1;
    for (DartId d : g.rotation(a))
      if (g.head(d) == b && (best == -1 || g.edge_of(d) < best)) best = g.edge_of(d);
    require(best != -1, "vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
    out.push_back(best);
  }
  return normalized(out);
}

}  // namespace barnette

#pragma once

// Brute-force oracles. They work on plain edge lists and share no search
// code with the modules they certify: hamiltonian cycles and paths,
// closed eulerian trail enumeration and face-subset enumeration with an
// independent quasi-spanning-tree check.

#include <bit>
#include <functional>
#include <set>

#include "barnette/budget.hpp"
#include "barnette/plane_graph.hpp"

namespace barnette::oracle {

/// Undirected multigraph as an edge list; edge i joins edges[i].
struct EdgeList {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;

  static EdgeList of(const PlaneGraph& g) {
    EdgeList out;
    out.node_count = g.vertex_count();
    for (EdgeId e = 0; e < g.edge_count(); ++e) out.edges.push_back(g.endpoints(e));
    return out;
  }
};

enum class HcMode { first, count, all };

struct HcResult {
  std::vector<std::vector<int>> cycles;  // sorted edge ids
  std::int64_t count = 0;
};

namespace detail {

struct Incidence {
  std::vector<std::vector<std::pair<int, int>>> at;  // node -> (edge, other end), by (other end, edge)
  explicit Incidence(const EdgeList& g) : at(g.node_count) {
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      const auto [a, b] = g.edges[e];
      at[a].emplace_back(e, b);
      at[b].emplace_back(e, a);
    }
    for (auto& list : at)
      std::sort(list.begin(), list.end(), [](auto x, auto y) { return std::tie(x.second, x.first) < std::tie(y.second, y.first); });
  }
};

}  // namespace detail

/// All hamiltonian cycles (as edge sets) containing every forced edge and
/// no forbidden edge. Each cycle is reported once.
inline HcResult find_hc(const EdgeList& g, const std::vector<int>& forced, const std::vector<int>& forbidden,
                        HcMode mode, const SearchBudget& budget = {}) {
  BudgetMeter meter(budget);
  const int n = g.node_count;
  const int m = static_cast<int>(g.edges.size());
  std::vector<char> is_forced(m, 0), is_forbidden(m, 0);
  for (int e : forced) {
    require(e >= 0 && e < m, "forced edge out of range");
    is_forced[e] = 1;
  }
  for (int e : forbidden) {
    require(e >= 0 && e < m, "forbidden edge out of range");
    require(!is_forced[e], "edge " + std::to_string(e) + " is both forced and forbidden");
    is_forbidden[e] = 1;
  }
  HcResult result;
  if (n < 2) return result;
  const detail::Incidence inc(g);
  std::vector<int> forced_at(n, 0);
  for (int e = 0; e < m; ++e)
    if (is_forced[e]) {
      ++forced_at[g.edges[e].first];
      ++forced_at[g.edges[e].second];
    }
  for (int v = 0; v < n; ++v)
    if (forced_at[v] > 2) return result;
  std::vector<char> visited(n, 0);
  std::vector<int> path_edges;
  std::vector<char> edge_used(m, 0);
  int forced_used = 0;
  const int forced_total = static_cast<int>(forced.size());

  // Every unvisited node keeps two usable edges and the unvisited part stays
  // connected to both path ends.
  auto feasible = [&](int end) {
    for (int v = 0; v < n; ++v) {
      if (visited[v]) continue;
      int usable = 0;
      for (auto [e, w] : inc.at[v])
        if (!is_forbidden[e] && (!visited[w] || w == end || w == 0)) ++usable;
      if (usable < 2) return false;
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{end};
    seen[end] = 1;
    int reached = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (auto [e, w] : inc.at[v]) {
        if (is_forbidden[e] || seen[w] || (visited[w] && w != 0)) continue;
        seen[w] = 1;
        if (!visited[w]) ++reached;
        if (w != 0) stack.push_back(w);
      }
    }
    int unvisited = 0;
    for (int v = 0; v < n; ++v) unvisited += !visited[v];
    return reached == unvisited && (unvisited == 0 || seen[0]);
  };

  std::function<bool(int, int, int)> extend = [&](int v, int depth, int arrived_by) -> bool {
    meter.tick();
    if (depth == n) {
      for (auto [e, w] : inc.at[v]) {
        if (w != 0 || is_forbidden[e] || e == arrived_by || edge_used[e]) continue;
        if (forced_used + is_forced[e] != forced_total) continue;
        if (path_edges.front() >= e) continue;  // each cycle once: first edge < closing edge
        ++result.count;
        if (mode != HcMode::count) {
          std::vector<int> cyc = path_edges;
          cyc.push_back(e);
          std::sort(cyc.begin(), cyc.end());
          result.cycles.push_back(std::move(cyc));
        }
        if (mode == HcMode::first) return true;
      }
      return false;
    }
    // A node with a pending forced edge must leave through it.
    int must = -1;
    if (v != 0)
      for (auto [e, w] : inc.at[v])
        if (is_forced[e] && !edge_used[e]) must = e;
    for (auto [e, w] : inc.at[v]) {
      if (visited[w] || is_forbidden[e]) continue;
      if (must != -1 && e != must) continue;
      visited[w] = 1;
      edge_used[e] = 1;
      path_edges.push_back(e);
      forced_used += is_forced[e];
      // a node passed through must have no forced edge left unused
      bool ok = true;
      if (v != 0)
        for (auto [f, x] : inc.at[v])
          if (is_forced[f] && !edge_used[f]) ok = false;
      if (ok && feasible(w) && extend(w, depth + 1, e)) return true;
      forced_used -= is_forced[e];
      path_edges.pop_back();
      edge_used[e] = 0;
      visited[w] = 0;
    }
    return false;
  };
  visited[0] = 1;
  extend(0, 1, -1);
  std::sort(result.cycles.begin(), result.cycles.end());
  return result;
}

inline HcResult find_hc(const PlaneGraph& g, const std::vector<int>& forced = {},
                        const std::vector<int>& forbidden = {}, HcMode mode = HcMode::first,
                        const SearchBudget& budget = {}) {
  BudgetMeter(budget).check_size(g);
  return find_hc(EdgeList::of(g), forced, forbidden, mode, budget);
}

struct HamPath {
  std::vector<int> vertices;
  std::vector<int> edges;  // in path order
  friend bool operator==(const HamPath&, const HamPath&) = default;
};

/// Every hamiltonian u-v path, ordered lexicographically by vertex
/// sequence and then by edge sequence.
inline std::vector<HamPath> enumerate_ham_paths(const EdgeList& g, int u, int v, const SearchBudget& budget = {}) {
  require(u != v, "path endpoints must differ");
  require(u >= 0 && u < g.node_count && v >= 0 && v < g.node_count, "endpoint out of range");
  BudgetMeter meter(budget);
  const detail::Incidence inc(g);
  std::vector<HamPath> out;
  std::vector<char> visited(g.node_count, 0);
  HamPath cur{{u}, {}};
  visited[u] = 1;
  std::function<void(int)> extend = [&](int x) {
    meter.tick();
    if (static_cast<int>(cur.vertices.size()) == g.node_count) {
      if (x == v) out.push_back(cur);
      return;
    }
    if (x == v) return;
    for (auto [e, w] : inc.at[x]) {
      if (visited[w]) continue;
      visited[w] = 1;
      cur.vertices.push_back(w);
      cur.edges.push_back(e);
      extend(w);
      cur.edges.pop_back();
      cur.vertices.pop_back();
      visited[w] = 0;
    }
  };
  extend(u);
  return out;
}

/// Every closed trail starting with dart 0 that uses each edge once, as a
/// dart sequence. Trails are not filtered.
inline void for_each_euler_circuit(const PlaneGraph& g, const std::function<void(const std::vector<DartId>&)>& fn,
                                   const SearchBudget& budget = {}) {
  BudgetMeter meter(budget);
  std::vector<char> used(g.edge_count(), 0);
  std::vector<DartId> seq{0};
  used[g.edge_of(0)] = 1;
  std::function<void()> extend = [&] {
    meter.tick();
    if (static_cast<int>(seq.size()) == g.edge_count()) {
      if (g.head(seq.back()) == g.origin(0)) fn(seq);
      return;
    }
    for (DartId d : g.rotation(g.head(seq.back()))) {
      if (used[g.edge_of(d)]) continue;
      used[g.edge_of(d)] = 1;
      seq.push_back(d);
      extend();
      seq.pop_back();
      used[g.edge_of(d)] = 0;
    }
  };
  extend();
}

/// Independent check of the quasi spanning tree of faces definition from
/// face boundaries given as vertex and edge lists.
struct FaceIncidence {
  int vertex_count = 0;
  std::vector<int> degree;
  std::vector<std::vector<int>> face_vertices;  // with multiplicity
  std::vector<std::vector<int>> face_edges;
  int outer = -1;

  static FaceIncidence of(const PlaneGraph& h) {
    FaceIncidence fi;
    fi.vertex_count = h.vertex_count();
    for (VertexId v = 0; v < h.vertex_count(); ++v) fi.degree.push_back(h.degree(v));
    for (FaceId f = 0; f < h.face_count(); ++f) {
      fi.face_vertices.emplace_back();
      fi.face_edges.emplace_back();
      for (DartId d : h.face_darts(f)) {
        fi.face_vertices.back().push_back(h.origin(d));
        fi.face_edges.back().push_back(h.edge_of(d));
      }
    }
    fi.outer = h.outer_face();
    return fi;
  }
};

inline bool check_face_tree(const FaceIncidence& fi, const std::vector<int>& proper, const std::vector<int>& faces) {
  const int n = fi.vertex_count;
  std::vector<char> in_u(n, 0);
  for (int v : proper) in_u[v] = 1;
  std::set<int> edges;
  std::vector<int> hits(n, 0);
  for (int f : faces) {
    if (f == fi.outer) return false;
    for (int e : fi.face_edges[f])
      if (!edges.insert(e).second) return false;
    for (int x : fi.face_vertices[f]) ++hits[x];
  }
  for (int x = 0; x < n; ++x) {
    if (hits[x] == 0) return false;
    if (!in_u[x] && 2 * hits[x] != fi.degree[x]) return false;
  }
  // R(U,T): nodes are proper vertices and faces; tree iff connected with
  // one edge fewer than nodes.
  const int nodes = static_cast<int>(proper.size() + faces.size());
  int links = 0;
  std::vector<int> root(n + static_cast<int>(fi.face_vertices.size()));
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
  for (int f : faces)
    for (int x : fi.face_vertices[f])
      if (in_u[x]) {
        ++links;
        const int a = find(x);
        const int b = find(n + f);
        if (a == b) return false;
        root[a] = b;
      }
  return links == nodes - 1;
}

struct BruteFaceTree {
  std::vector<int> faces;
  std::vector<int> proper;
  friend auto operator<=>(const BruteFaceTree&, const BruteFaceTree&) = default;
};

/// All (U, T) with T a subset of the bounded candidate faces passing the
/// definition. Spanning mode fixes U = V; quasi mode tries every U that
/// could work for T.
inline std::vector<BruteFaceTree> enumerate_face_trees(const PlaneGraph& h, std::vector<int> candidates, bool quasi,
                                                       const SearchBudget& budget = {}) {
  BudgetMeter meter(budget);
  const FaceIncidence fi = FaceIncidence::of(h);
  std::erase(candidates, fi.outer);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  require(candidates.size() < 40, "too many candidate faces for exhaustive enumeration");
  std::vector<BruteFaceTree> out;
  const int n = fi.vertex_count;
  const std::uint64_t subsets = std::uint64_t{1} << candidates.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    meter.tick();
    std::vector<int> t;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (mask >> i & 1) t.push_back(candidates[i]);
    if (!quasi) {
      std::vector<int> all(n);
      std::iota(all.begin(), all.end(), 0);
      if (check_face_tree(fi, all, t)) out.push_back({t, all});
      continue;
    }
    std::vector<int> hits(n, 0);
    for (int f : t)
      for (int x : fi.face_vertices[f]) ++hits[x];
    std::vector<int> optional;  // vertices that may be quasi
    for (int x = 0; x < n; ++x)
      if (2 * hits[x] == fi.degree[x]) optional.push_back(x);
    require(optional.size() < 30, "too many candidate quasi vertices for exhaustive enumeration");
    for (std::uint64_t qm = 0; qm < (std::uint64_t{1} << optional.size()); ++qm) {
      meter.tick();
      std::vector<char> quasi_v(n, 0);
      for (std::size_t i = 0; i < optional.size(); ++i)
        if (qm >> i & 1) quasi_v[optional[i]] = 1;
      std::vector<int> proper;
      for (int x = 0; x < n; ++x)
        if (!quasi_v[x]) proper.push_back(x);
      if (check_face_tree(fi, proper, t)) out.push_back({t, proper});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Spanning trees of an edge list, filtered by a predicate; returns how
/// many passed. Used to certify the parity solver.
inline std::int64_t count_spanning_trees_if(const EdgeList& g, const std::function<bool(const std::vector<int>&)>& keep,
                                            std::vector<std::vector<int>>* found = nullptr) {
  const int m = static_cast<int>(g.edges.size());
  require(m <= 24, "too many edges for spanning tree enumeration");
  std::int64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != g.node_count - 1) continue;
    std::vector<int> root(g.node_count);
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
    bool acyclic = true;
    std::vector<int> edges;
    for (int e = 0; e < m && acyclic; ++e) {
      if (!(mask >> e & 1)) continue;
      const int a = find(g.edges[e].first);
      const int b = find(g.edges[e].second);
      if (a == b) acyclic = false;
      root[a] = b;
      edges.push_back(e);
    }
    if (!acyclic || !keep(edges)) continue;
    ++count;
    if (found) found->push_back(edges);
  }
  return count;
}

}  // namespace barnette::oracle

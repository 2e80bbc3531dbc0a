#pragma once

// Derived embeddings (dual, radial graph), restricted radial graphs, face
// colourings and embedding isomorphism.

#include "barnette/graph_props.hpp"

namespace barnette {

struct DualResult {
  PlaneGraph graph;
  /// g dart d  -> dual dart crossing it (origin = dual vertex face_of(d)).
  std::vector<DartId> dart_map;
  /// g edge -> dual edge.
  std::vector<EdgeId> edge_map;
  // dual vertex id == g face id
};

/// Geometric dual. Dual vertex f is face f of g; the rotation at f follows
/// the boundary walk of f, so dual faces are the vertices of g and
/// dual(dual(g)) reproduces g's rotation exactly.
inline DualResult dual(const PlaneGraph& g) {
  std::vector<std::vector<PlaneGraph::HalfEdge>> rot(g.face_count());
  std::vector<std::pair<FaceId, int>> slot(g.dart_count());
  for (FaceId f = 0; f < g.face_count(); ++f) {
    for (DartId d : g.face_darts(f)) {
      const FaceId across = g.face_of(g.twin(d));
      require(across != f, "dual would contain a loop (edge " + std::to_string(g.edge_of(d)) + " is a bridge)");
      slot[d] = {f, static_cast<int>(rot[f].size())};
      rot[f].push_back({across, g.edge_of(d)});
    }
  }
  // Outer face of the dual: the face around g's vertex 0.
  DualResult out;
  const auto [f0, p0] = slot[0];
  int outer = 0;
  for (FaceId f = 0; f < f0; ++f) outer += static_cast<int>(rot[f].size());
  outer += p0;
  out.graph = PlaneGraph::from_rotation(rot, outer);
  out.dart_map.resize(g.dart_count());
  out.edge_map.resize(g.edge_count());
  for (DartId d = 0; d < g.dart_count(); ++d) {
    out.dart_map[d] = out.graph.dart_at(slot[d].first, slot[d].second);
    out.edge_map[g.edge_of(d)] = out.graph.edge_of(out.dart_map[d]);
  }
  return out;
}

struct RadialResult {
  PlaneGraph graph;
  /// Radial vertices 0..V-1 are g's vertices; V+f is face f.
  int vertex_nodes = 0;
  /// g dart d -> radial edge for the corner (origin(d), face_of(d)).
  std::vector<EdgeId> corner_edge;
  bool is_face_node(VertexId x) const { return x >= vertex_nodes; }
};

/// Radial graph: one edge per vertex-face incidence (per dart, so repeated
/// boundary visits give parallel edges). Requires g 2-connected.
inline RadialResult radial_graph(const PlaneGraph& g) {
  require(is_k_connected(g, 2), "radial graph requires a 2-connected graph");
  const int n = g.vertex_count();
  std::vector<std::vector<PlaneGraph::HalfEdge>> rot(n + g.face_count());
  for (VertexId v = 0; v < n; ++v)
    for (DartId d : g.rotation(v)) rot[v].push_back({n + g.face_of(d), d});
  // Around a face node the corners appear in reverse boundary order.
  for (FaceId f = 0; f < g.face_count(); ++f) {
    const auto& walk = g.face_darts(f);
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) rot[n + f].push_back({g.origin(*it), *it});
  }
  RadialResult out;
  out.vertex_nodes = n;
  out.graph = PlaneGraph::from_rotation(rot);
  out.corner_edge.resize(g.dart_count());
  for (DartId d = 0; d < g.dart_count(); ++d)
    out.corner_edge[d] = out.graph.edge_of(out.graph.dart_at(g.origin(d), g.position(d)));
  return out;
}

/// An abstract multigraph with labelled nodes.
struct AbstractGraph {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;
};

inline bool is_tree(const AbstractGraph& a) {
  if (a.node_count == 0) return false;
  if (static_cast<int>(a.edges.size()) != a.node_count - 1) return false;
  std::vector<int> parent(a.node_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [x, y] : a.edges) {
    const int rx = find(x);
    const int ry = find(y);
    if (rx == ry) return false;
    parent[rx] = ry;
  }
  return true;
}

struct RestrictedRadial {
  AbstractGraph graph;
  std::vector<VertexId> vertex_nodes;  // node i < vertex_nodes.size() is this vertex
  std::vector<FaceId> face_nodes;      // following nodes are these faces
};

/// Induced subgraph of the radial graph on U ∪ T, keeping incidence
/// multiplicity. T must consist of bounded faces.
inline RestrictedRadial restricted_radial(const PlaneGraph& g, std::vector<VertexId> u, std::vector<FaceId> t) {
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  for (FaceId f : t) {
    require(f >= 0 && f < g.face_count(), "face id out of range");
    require(g.is_bounded(f), "restricted radial graph: T contains the outer face");
  }
  std::vector<int> vnode(g.vertex_count(), -1);
  std::vector<int> fnode(g.face_count(), -1);
  RestrictedRadial r;
  for (VertexId v : u) {
    require(v >= 0 && v < g.vertex_count(), "vertex id out of range");
    vnode[v] = static_cast<int>(r.vertex_nodes.size());
    r.vertex_nodes.push_back(v);
  }
  for (FaceId f : t) {
    fnode[f] = static_cast<int>(u.size() + r.face_nodes.size());
    r.face_nodes.push_back(f);
  }
  r.graph.node_count = static_cast<int>(u.size() + t.size());
  for (DartId d = 0; d < g.dart_count(); ++d) {
    const int a = vnode[g.origin(d)];
    const int b = fnode[g.face_of(d)];
    if (a != -1 && b != -1) r.graph.edges.emplace_back(a, b);
  }
  return r;
}

struct FaceColoring {
  int palette = 0;          // 2 or 3
  std::vector<int> color;   // per face, in 1..palette
  std::vector<FaceId> faces_of(int c) const {
    std::vector<FaceId> out;
    for (FaceId f = 0; f < static_cast<FaceId>(color.size()); ++f)
      if (color[f] == c) out.push_back(f);
    return out;
  }
};

inline bool is_proper(const PlaneGraph& g, const FaceColoring& c) {
  if (static_cast<int>(c.color.size()) != g.face_count()) return false;
  for (FaceId f = 0; f < g.face_count(); ++f)
    if (c.color[f] < 1 || c.color[f] > c.palette) return false;
  for (DartId d = 0; d < g.dart_count(); ++d)
    if (c.color[g.face_of(d)] == c.color[g.face_of(g.twin(d))]) return false;
  return true;
}

/// Relabels colours: new colour of class c is perm[c-1].
inline FaceColoring permute_colors(const FaceColoring& c, const std::vector<int>& perm) {
  require(static_cast<int>(perm.size()) == c.palette, "colour permutation has wrong size");
  FaceColoring out = c;
  for (int& x : out.color) x = perm[x - 1];
  return out;
}

/// Proper face colouring. k = 2 needs an eulerian graph; the outer face gets
/// colour 1. k = 3 needs a cubic bipartite graph; the outer face gets colour
/// 3 and the faces around the first outer vertex follow in rotation order.
inline FaceColoring face_coloring(const PlaneGraph& g, int k) {
  FaceColoring c;
  c.palette = k;
  c.color.assign(g.face_count(), 0);
  if (k == 2) {
    require(is_eulerian(g), "2-face-colouring requires an eulerian graph");
    c.color[g.outer_face()] = 1;
    std::vector<FaceId> queue{g.outer_face()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (DartId d : g.face_darts(queue[i])) {
        const FaceId other = g.face_of(g.twin(d));
        if (c.color[other] == 0) {
          c.color[other] = 3 - c.color[queue[i]];
          queue.push_back(other);
        }
      }
    }
  } else if (k == 3) {
    require(is_cubic(g) && is_bipartite(g), "3-face-colouring requires a cubic bipartite graph");
    const DartId start = g.face_darts(g.outer_face()).front();
    const VertexId v0 = g.origin(start);
    // Faces around v0 in rotation order, starting at the outer corner.
    const DartId a = start;
    const DartId b = g.rot_next(a);
    const DartId cc = g.rot_next(b);
    c.color[g.face_of(a)] = 3;
    require(c.color[g.face_of(b)] == 0, "a face meets vertex " + std::to_string(v0) + " twice");
    c.color[g.face_of(b)] = 1;
    require(c.color[g.face_of(cc)] == 0, "a face meets vertex " + std::to_string(v0) + " twice");
    c.color[g.face_of(cc)] = 2;
    // Propagate: at every vertex the three faces take three distinct colours.
    bool changed = true;
    while (changed) {
      changed = false;
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto rot = g.rotation(v);
        int known = 0;
        int sum = 0;
        for (DartId d : rot) {
          if (c.color[g.face_of(d)] != 0) {
            ++known;
            sum += c.color[g.face_of(d)];
          }
        }
        if (known == 2) {
          for (DartId d : rot) {
            if (c.color[g.face_of(d)] == 0) {
              c.color[g.face_of(d)] = 6 - sum;
              changed = true;
            }
          }
        }
      }
    }
    for (int x : c.color) require(x != 0, "face colouring did not reach every face");
  } else {
    throw InputError("face colouring palette must be 2 or 3");
  }
  require(is_proper(g, c), "graph admits no proper " + std::to_string(k) + "-face-colouring");
  return c;
}

/// Embedding isomorphism a -> b as a dart map, trying every image of dart 0.
/// With allow_mirror, orientation-reversing maps are accepted too.
inline std::optional<std::vector<DartId>> find_map_isomorphism(const PlaneGraph& a, const PlaneGraph& b,
                                                               bool allow_mirror = false) {
  if (a.vertex_count() != b.vertex_count() || a.dart_count() != b.dart_count() ||
      a.face_count() != b.face_count())
    return std::nullopt;
  for (int mirror = 0; mirror <= (allow_mirror ? 1 : 0); ++mirror) {
    for (DartId start = 0; start < b.dart_count(); ++start) {
      std::vector<DartId> map(a.dart_count(), -1);
      std::vector<char> used(b.dart_count(), 0);
      std::vector<DartId> stack{0};
      map[0] = start;
      used[start] = 1;
      bool ok = true;
      while (ok && !stack.empty()) {
        const DartId x = stack.back();
        stack.pop_back();
        const DartId y = map[x];
        const std::pair<DartId, DartId> steps[2] = {
            {a.twin(x), b.twin(y)}, {a.rot_next(x), mirror ? b.rot_prev(y) : b.rot_next(y)}};
        for (auto [xa, yb] : steps) {
          if (map[xa] == -1) {
            if (used[yb]) {
              ok = false;
              break;
            }
            map[xa] = yb;
            used[yb] = 1;
            stack.push_back(xa);
          } else if (map[xa] != yb) {
            ok = false;
            break;
          }
        }
      }
      if (ok) return map;
    }
  }
  return std::nullopt;
}

inline bool isomorphic_maps(const PlaneGraph& a, const PlaneGraph& b, bool allow_mirror = false) {
  return find_map_isomorphism(a, b, allow_mirror).has_value();
}

}  // namespace barnette

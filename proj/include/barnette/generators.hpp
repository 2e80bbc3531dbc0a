#pragma once

// Fixture families: prisms, bipyramids, K4, leapfrog towers, 2-cut joins
// and catalog ingestion.

#include <filesystem>

#include "barnette/pg_format.hpp"
#include "barnette/transforms.hpp"

namespace barnette {

/// Prism over C_m: outer cycle a_i = i, inner cycle b_i = m+i.
inline PlaneGraph prism(int m) {
  require(m >= 2, "prism needs at least 2 rim vertices");
  std::vector<std::vector<PlaneGraph::HalfEdge>> rot(2 * m);
  // keys: spokes i, outer rim m+i (a_i a_{i+1}), inner rim 2m+i (b_i b_{i+1})
  for (int i = 0; i < m; ++i) {
    const int next = (i + 1) % m;
    const int prev = (i + m - 1) % m;
    rot[i] = {{m + i, i}, {next, m + i}, {prev, m + prev}};
    rot[m + i] = {{i, i}, {m + prev, 2 * m + prev}, {m + next, 2 * m + i}};
  }
  return PlaneGraph::from_rotation(rot);
}

inline PlaneGraph cube() { return prism(4); }

/// Prism over C_{2k}; Barnette for every k >= 2.
inline PlaneGraph even_prism(int k) {
  require(k >= 2, "even prism needs k >= 2");
  return prism(2 * k);
}

/// Double pyramid over C_m: rim 0..m-1, apexes m and m+1.
inline PlaneGraph bipyramid(int m) {
  require(m >= 3, "bipyramid needs at least 3 rim vertices");
  std::vector<std::vector<PlaneGraph::HalfEdge>> rot(m + 2);
  const int top = m;
  const int bottom = m + 1;
  // keys: rim i (i,i+1), top spoke m+i, bottom spoke 2m+i
  for (int i = 0; i < m; ++i) {
    const int next = (i + 1) % m;
    const int prev = (i + m - 1) % m;
    rot[i] = {{next, i}, {top, m + i}, {prev, prev}, {bottom, 2 * m + i}};
  }
  for (int i = 0; i < m; ++i) rot[top].push_back({i, m + i});
  for (int i = 0; i < m; ++i) rot[bottom].push_back({m - 1 - i, 2 * m + (m - 1 - i)});
  return PlaneGraph::from_rotation(rot);
}

inline PlaneGraph octahedron() { return bipyramid(4); }

inline PlaneGraph k4() {
  return parse_plane_graph("n 4\n0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n");
}

/// Two vertices joined by k parallel edges.
inline PlaneGraph multi_edge(int k) {
  require(k >= 1, "need at least one edge");
  std::vector<std::vector<PlaneGraph::HalfEdge>> rot(2);
  for (int i = 0; i < k; ++i) rot[0].push_back({1, i});
  for (int i = 0; i < k; ++i) rot[1].push_back({0, k - 1 - i});
  return PlaneGraph::from_rotation(rot);
}

/// Plain cycle C_n.
inline PlaneGraph cycle_graph(int n) {
  require(n >= 2, "cycle needs at least 2 vertices");
  std::vector<std::vector<PlaneGraph::HalfEdge>> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = {{(i + 1) % n, i}, {(i + n - 1) % n, (i + n - 1) % n}};
  return PlaneGraph::from_rotation(rot);
}

/// Mirror image: every rotation reversed.
inline PlaneGraph mirror(const PlaneGraph& g) {
  auto rot = g.rotation_lists();
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return PlaneGraph::from_rotation(rot);
}

/// Leapfrog applied `depth` times.
inline PlaneGraph leapfrog_tower(const PlaneGraph& base, int depth) {
  require(depth >= 0, "depth must be nonnegative");
  PlaneGraph g = base;
  for (int i = 0; i < depth; ++i) g = leapfrog(g).graph;
  return g;
}

struct TwoCutJoin {
  PlaneGraph graph;
  std::vector<EdgeId> left_edges;   // left edge -> joined edge, -1 for the deleted one
  std::vector<EdgeId> right_edges;  // right edge -> joined edge, -1 for the deleted one
  std::pair<EdgeId, EdgeId> cut;    // the two joining edges
};

/// Deletes edge a1b1 of `left` and a2b2 of `right` and adds a1a2 and b1b2,
/// placing `right` (or its mirror image) inside the merged face.
inline TwoCutJoin join_by_2cut(const PlaneGraph& left, EdgeId e_left, const PlaneGraph& right, EdgeId e_right) {
  require(e_left >= 0 && e_left < left.edge_count() && e_right >= 0 && e_right < right.edge_count(),
          "edge id out of range");
  for (int flip = 0; flip < 2; ++flip) {
    const PlaneGraph r = flip ? mirror(right) : right;
    std::vector<std::vector<DraftEntry>> rot(left.vertex_count() + r.vertex_count());
    const int shift = left.vertex_count();
    const std::int64_t rshift = left.edge_count();
    for (VertexId v = 0; v < left.vertex_count(); ++v)
      for (DartId d : left.rotation(v)) rot[v].push_back({left.head(d), left.edge_of(d), d});
    for (VertexId v = 0; v < r.vertex_count(); ++v)
      for (DartId d : r.rotation(v)) rot[shift + v].push_back({shift + r.head(d), rshift + r.edge_of(d), -1});
    const DartId dl = left.edge_dart(e_left);
    const DartId dr = r.edge_dart(e_right);
    const VertexId a1 = left.origin(dl), b1 = left.head(dl);
    const VertexId a2 = shift + r.origin(dr), b2 = shift + r.head(dr);
    const std::int64_t ka = rshift + r.edge_count();
    const std::int64_t kb = ka + 1;
    auto replace = [&](VertexId v, std::int64_t old_key, VertexId to, std::int64_t key) {
      for (auto& e : rot[v])
        if (e.key == old_key) {
          e.to = to;
          e.key = key;
          return;
        }
      throw InternalError("join_by_2cut: edge not found");
    };
    replace(a1, e_left, a2, ka);
    replace(b1, e_left, b2, kb);
    replace(a2, rshift + e_right, a1, ka);
    replace(b2, rshift + e_right, b1, kb);
    std::vector<std::vector<PlaneGraph::HalfEdge>> plain(rot.size());
    for (std::size_t v = 0; v < rot.size(); ++v)
      for (const auto& e : rot[v]) plain[v].push_back({e.to, e.key});
    PlaneGraph joined;
    try {
      joined = PlaneGraph::from_rotation(plain);
    } catch (const InputError&) {
      continue;
    }
    TwoCutJoin out;
    out.graph = joined;
    // Edge ids follow dart order, so map keys through the darts.
    std::vector<std::int64_t> key_of(joined.dart_count());
    {
      int d = 0;
      for (const auto& list : plain)
        for (const auto& e : list) key_of[d++] = e.key;
    }
    std::vector<EdgeId> edge_by_key(kb + 1, -1);
    for (DartId d = 0; d < joined.dart_count(); ++d) edge_by_key[key_of[d]] = joined.edge_of(d);
    out.left_edges.assign(left.edge_count(), -1);
    for (EdgeId e = 0; e < left.edge_count(); ++e)
      if (e != e_left) out.left_edges[e] = edge_by_key[e];
    out.right_edges.assign(right.edge_count(), -1);
    for (EdgeId e = 0; e < right.edge_count(); ++e)
      if (e != e_right) out.right_edges[e] = edge_by_key[rshift + e];
    out.cut = {edge_by_key[ka], edge_by_key[kb]};
    return out;
  }
  throw InputError("join_by_2cut: no planar placement");
}

/// Every `.pg` file of a directory, in file-name order. Entries that are not
/// Barnette graphs are listed in `rejected` with the reason.
struct Catalog {
  std::vector<std::pair<std::string, PlaneGraph>> graphs;
  std::vector<std::pair<std::string, std::string>> rejected;
};

inline Catalog read_catalog(const std::string& dir) {
  require(std::filesystem::is_directory(dir), "catalog directory " + dir + " does not exist");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".pg") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  Catalog out;
  for (const auto& path : files) {
    const std::string name = path.filename().string();
    try {
      PlaneGraph g = read_plane_graph_file(path.string());
      if (is_barnette(g)) {
        out.graphs.emplace_back(name, std::move(g));
      } else {
        out.rejected.emplace_back(name, "not a Barnette graph");
      }
    } catch (const InputError& e) {
      out.rejected.emplace_back(name, e.what());
    }
  }
  return out;
}

/// Goodey class: Barnette and every face a quadrilateral or hexagon.
inline bool is_goodey(const PlaneGraph& g) {
  if (!is_barnette(g)) return false;
  for (FaceId f = 0; f < g.face_count(); ++f)
    if (g.face_length(f) != 4 && g.face_length(f) != 6) return false;
  return true;
}

}  // namespace barnette

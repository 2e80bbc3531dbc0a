#pragma once

// Graph surgeries: facial 2-factor contraction and its inverse expansion,
// leapfrog extension, quadrilateral detachment, terminal identification,
// digon subdivision, 2-edge-cut decomposition and vertex substitution.

#include <array>
#include <functional>
#include <numeric>

#include "barnette/embedding_ops.hpp"
#include "barnette/rotation_draft.hpp"

namespace barnette {

// ---------------------------------------------------------------------------
// Facial 2-factor contraction

struct ReducedGraph {
  PlaneGraph h;
  PlaneGraph source;
  std::vector<FaceId> q;            // contracted source faces, sorted
  std::vector<FaceId> vertex_map;   // h vertex -> source face
  std::vector<VertexId> vertex_of;  // source vertex -> h vertex
  std::vector<DartId> dart_map;     // h dart -> source dart
  std::vector<DartId> h_dart_of;    // source dart -> h dart, -1 on contracted edges
  std::vector<FaceId> face_map;     // h face -> source face
  std::vector<FaceId> h_face_of;    // source face -> h face, -1 for faces of q
  std::vector<DartId> q_out;        // source vertex -> boundary dart of its q face leaving it
};

/// Throws unless every vertex lies on exactly one face of q exactly once.
inline void check_facial_2_factor(const PlaneGraph& g, const std::vector<FaceId>& q) {
  std::vector<int> cover(g.vertex_count(), 0);
  std::vector<char> in_q(g.face_count(), 0);
  for (FaceId f : q) {
    require(f >= 0 && f < g.face_count(), "face id " + std::to_string(f) + " out of range");
    require(!in_q[f], "face " + std::to_string(f) + " listed twice");
    in_q[f] = 1;
    for (DartId d : g.face_darts(f)) ++cover[g.origin(d)];
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    require(cover[v] != 0, "not a facial 2-factor: vertex " + std::to_string(v) + " is not covered");
    require(cover[v] == 1, "not a facial 2-factor: vertex " + std::to_string(v) + " is covered " +
                               std::to_string(cover[v]) + " times");
  }
}

/// Contracts every face of the facial 2-factor q to a single vertex. Parallel
/// edges are kept. Around the new vertex the external darts appear in
/// descending boundary-walk order, each vertex contributing its darts in
/// rotation order.
inline ReducedGraph contract_facial_factor(const PlaneGraph& g, std::vector<FaceId> q) {
  std::sort(q.begin(), q.end());
  check_facial_2_factor(g, q);
  ReducedGraph r;
  r.source = g;
  r.q = q;
  r.vertex_map = q;
  r.vertex_of.assign(g.vertex_count(), -1);
  r.q_out.assign(g.vertex_count(), -1);
  std::vector<char> in_q(g.face_count(), 0);
  for (FaceId f : q) in_q[f] = 1;
  for (int w = 0; w < static_cast<int>(q.size()); ++w) {
    for (DartId d : g.face_darts(q[w])) {
      r.vertex_of[g.origin(d)] = w;
      r.q_out[g.origin(d)] = d;
    }
  }
  std::vector<std::vector<PlaneGraph::HalfEdge>> rot(q.size());
  std::vector<std::pair<int, int>> slot(g.dart_count(), {-1, -1});
  for (int w = 0; w < static_cast<int>(q.size()); ++w) {
    const auto& walk = g.face_darts(q[w]);
    const int k = static_cast<int>(walk.size());
    for (int step = 0; step < k; ++step) {
      const DartId qi = walk[(k - step) % k];
      const DartId back = g.rot_prev(qi);  // twin of the incoming boundary dart
      for (DartId d = g.rot_next(qi); d != back; d = g.rot_next(d)) {
        const VertexId other = r.vertex_of[g.head(d)];
        require(other != w, "contraction would create a loop at edge " + std::to_string(g.edge_of(d)));
        slot[d] = {w, static_cast<int>(rot[w].size())};
        rot[w].push_back({other, g.edge_of(d)});
      }
    }
  }
  std::optional<DartId> outer;
  auto h_dart = [&](DartId d) {
    int base = 0;
    for (int w = 0; w < slot[d].first; ++w) base += static_cast<int>(rot[w].size());
    return base + slot[d].second;
  };
  if (!in_q[g.outer_face()]) {
    for (DartId d : g.face_darts(g.outer_face())) {
      if (slot[d].first != -1) {
        outer = h_dart(d);
        break;
      }
    }
  }
  r.h = PlaneGraph::from_rotation(rot, outer);
  r.dart_map.assign(r.h.dart_count(), -1);
  r.h_dart_of.assign(g.dart_count(), -1);
  for (DartId d = 0; d < g.dart_count(); ++d) {
    if (slot[d].first == -1) continue;
    const DartId hd = r.h.dart_at(slot[d].first, slot[d].second);
    r.dart_map[hd] = d;
    r.h_dart_of[d] = hd;
  }
  r.face_map.assign(r.h.face_count(), -1);
  r.h_face_of.assign(g.face_count(), -1);
  for (FaceId hf = 0; hf < r.h.face_count(); ++hf) {
    const FaceId sf = g.face_of(r.dart_map[r.h.face_darts(hf).front()]);
    r.face_map[hf] = sf;
    r.h_face_of[sf] = hf;
  }
  for (FaceId hf = 0; hf < r.h.face_count(); ++hf)
    for (DartId hd : r.h.face_darts(hf))
      if (g.face_of(r.dart_map[hd]) != r.face_map[hf]) throw InternalError("contraction face map is inconsistent");
  return r;
}

/// Source-graph path along q face `face_of_vertex` from x to y, walking the
/// boundary backwards (the direction that matches the contracted rotation).
inline EdgeSet q_arc_backward(const ReducedGraph& r, VertexId from, VertexId to) {
  EdgeSet out;
  const PlaneGraph& g = r.source;
  VertexId x = from;
  int guard = g.vertex_count() + 1;
  while (x != to) {
    const DartId back = g.twin(g.face_prev(r.q_out[x]));
    out.push_back(g.edge_of(back));
    x = g.head(back);
    if (--guard == 0) throw InternalError("q arc does not reach its target");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vertex expansion (inverse of contraction)

struct ExpansionResult {
  PlaneGraph graph;
  std::vector<FaceId> cycle_face;      // h vertex -> face C_w of the expansion
  std::vector<VertexId> dart_vertex;   // h dart -> expansion vertex w_i
  std::vector<EdgeId> edge_map;        // h edge -> expansion edge
  std::vector<FaceId> face_map;        // h face -> expansion face
};

/// Replaces every vertex w by a cycle C_w of length deg(w); edge u_i w becomes
/// u_i w_i, respecting the rotation. Requires minimum degree 2.
inline ExpansionResult vertex_expand(const PlaneGraph& h) {
  require(min_degree(h) >= 2, "vertex expansion requires minimum degree 2");
  const std::int64_t base = h.edge_count();
  std::vector<std::vector<PlaneGraph::HalfEdge>> rot(h.dart_count());
  std::vector<std::int64_t> cycle_base(h.vertex_count());
  std::int64_t next = base;
  for (VertexId w = 0; w < h.vertex_count(); ++w) {
    cycle_base[w] = next;
    next += h.degree(w);
  }
  for (VertexId w = 0; w < h.vertex_count(); ++w) {
    const int k = h.degree(w);
    for (int j = 0; j < k; ++j) {
      const DartId a = h.dart_at(w, j);
      const VertexId succ = h.dart_at(w, (j + 1) % k);
      const VertexId pred = h.dart_at(w, (j + k - 1) % k);
      rot[a].push_back({h.twin(a), h.edge_of(a)});
      rot[a].push_back({succ, cycle_base[w] + j});
      rot[a].push_back({pred, cycle_base[w] + (j + k - 1) % k});
    }
  }
  ExpansionResult out;
  out.graph = PlaneGraph::from_rotation(rot, 3 * h.face_darts(h.outer_face()).front());
  out.dart_vertex.resize(h.dart_count());
  std::iota(out.dart_vertex.begin(), out.dart_vertex.end(), 0);
  out.cycle_face.resize(h.vertex_count());
  for (VertexId w = 0; w < h.vertex_count(); ++w)
    out.cycle_face[w] = out.graph.face_of(out.graph.dart_at(h.dart_at(w, 0), 2));
  out.edge_map.resize(h.edge_count());
  out.face_map.resize(h.face_count());
  for (DartId a = 0; a < h.dart_count(); ++a) {
    const DartId ext = out.graph.dart_at(a, 0);
    out.edge_map[h.edge_of(a)] = out.graph.edge_of(ext);
    out.face_map[h.face_of(a)] = out.graph.face_of(ext);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Leapfrog extension

struct LeapfrogResult {
  PlaneGraph graph;
  std::vector<FaceId> hexagon;      // g vertex -> face C6(v)
  std::vector<FaceId> face_image;   // g face -> face of the same length
  std::vector<EdgeId> shared_edge;  // g edge -> edge shared by the two hexagons
  std::vector<EdgeId> corner_edge;  // g dart d -> edge on face_of(d) at the corner head(d)
};

/// Leapfrog extension of a 2-connected cubic plane graph. Vertex x_d of the
/// result sits on dart d of g, on face_of(d) next to head(d)'s hexagon side.
inline LeapfrogResult leapfrog(const PlaneGraph& g) {
  require(is_cubic(g), "leapfrog requires a cubic graph");
  require(is_k_connected(g, 2), "leapfrog requires a 2-connected graph");
  const std::int64_t corner_base = g.edge_count();
  std::vector<std::vector<PlaneGraph::HalfEdge>> rot(g.dart_count());
  for (DartId d = 0; d < g.dart_count(); ++d) {
    const DartId prev = g.face_prev(d);
    rot[d].push_back({g.twin(d), g.edge_of(d)});
    rot[d].push_back({prev, corner_base + prev});
    rot[d].push_back({g.face_next(d), corner_base + d});
  }
  LeapfrogResult out;
  out.graph = PlaneGraph::from_rotation(rot);
  const PlaneGraph& lf = out.graph;
  out.shared_edge.resize(g.edge_count());
  out.corner_edge.resize(g.dart_count());
  for (DartId d = 0; d < g.dart_count(); ++d) {
    out.shared_edge[g.edge_of(d)] = lf.edge_of(lf.dart_at(d, 0));
    out.corner_edge[d] = lf.edge_of(lf.dart_at(d, 2));
  }
  // The face image of g-face F is the face through the corner edges of F.
  out.face_image.assign(g.face_count(), -1);
  for (FaceId f = 0; f < g.face_count(); ++f) {
    const DartId d = g.face_darts(f).front();
    for (DartId cand : {lf.dart_at(d, 2), lf.twin(lf.dart_at(d, 2))}) {
      const FaceId lf_face = lf.face_of(cand);
      if (lf.face_length(lf_face) != g.face_length(f)) continue;
      bool all = true;
      for (VertexId x : lf.face_vertices(lf_face)) all = all && g.face_of(x) == f;
      if (all) out.face_image[f] = lf_face;
    }
    if (out.face_image[f] == -1) throw InternalError("leapfrog: face image not found");
  }
  out.hexagon.assign(g.vertex_count(), -1);
  for (FaceId lf_face = 0; lf_face < lf.face_count(); ++lf_face) {
    if (lf.face_length(lf_face) != 6) continue;
    std::vector<VertexId> xs = lf.face_vertices(lf_face);
    // x_d touches vertices origin(d) and head(d); a hexagon's six darts share one vertex.
    for (VertexId v : {g.origin(xs[0]), g.head(xs[0])}) {
      bool all = true;
      for (VertexId x : xs) all = all && (g.origin(x) == v || g.head(x) == v);
      if (all && out.hexagon[v] == -1) out.hexagon[v] = lf_face;
    }
  }
  for (FaceId f : out.hexagon)
    if (f == -1) throw InternalError("leapfrog: hexagon not found");
  // Designated outer face: the image of g's outer face.
  out.graph = out.graph.with_outer_face(out.face_image[g.outer_face()]);
  return out;
}

// ---------------------------------------------------------------------------
// Edge deletion

struct EdgeDeletion {
  PlaneGraph graph;
  std::vector<EdgeId> edge_map;  // old edge -> new edge, -1 for the deleted one
  std::vector<DartId> dart_map;  // old dart -> new dart
};

inline EdgeDeletion delete_edge(const PlaneGraph& g, EdgeId e) {
  require(e >= 0 && e < g.edge_count(), "edge " + std::to_string(e) + " does not exist");
  RotationDraft draft(g);
  const DartId d = g.edge_dart(e);
  for (DartId x : {d, g.twin(d)}) {
    auto& list = draft.at(g.origin(x));
    list.erase(list.begin() + draft.find_old(g.origin(x), x));
  }
  std::vector<DartId> outer = g.face_darts(g.outer_face());
  outer.push_back(g.rot_next(d));
  auto built = draft.build(g.dart_count(), outer);
  EdgeDeletion out;
  out.graph = std::move(built.graph);
  out.dart_map = built.old_dart_map;
  out.edge_map.assign(g.edge_count(), -1);
  for (DartId x = 0; x < g.dart_count(); ++x)
    if (built.old_dart_map[x] != -1) out.edge_map[g.edge_of(x)] = out.graph.edge_of(built.old_dart_map[x]);
  return out;
}

// ---------------------------------------------------------------------------
// Quadrilateral detachment

struct QuadDetachResult {
  PlaneGraph graph;
  int connectivity = 0;  // vertex connectivity class, capped at 3
};

/// Removes the four vertices w,x,y,z of a facial quadrilateral of a cubic
/// graph and joins their outer neighbours: variant 1 adds w1x1 and y1z1,
/// variant 2 adds w1z1 and x1y1 (w,x,y,z in boundary-walk order).
inline QuadDetachResult quad_detach(const PlaneGraph& g, FaceId quad, int variant) {
  require(is_cubic(g), "quad detachment requires a cubic graph");
  require(quad >= 0 && quad < g.face_count(), "face id out of range");
  require(g.face_length(quad) == 4, "face " + std::to_string(quad) + " is not a quadrilateral");
  require(variant == 1 || variant == 2, "variant must be 1 or 2");
  const auto& walk = g.face_darts(quad);
  std::vector<VertexId> corner;
  for (DartId d : walk) corner.push_back(g.origin(d));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) require(corner[i] != corner[j], "quadrilateral is not a 4-cycle");
  std::vector<DartId> out_dart(4);  // dart from quad vertex to its third neighbour
  for (int i = 0; i < 4; ++i) {
    out_dart[i] = g.rot_next(walk[i]);
    const VertexId third = g.head(out_dart[i]);
    for (VertexId c : corner)
      require(third != c, "third neighbour of quad vertex " + std::to_string(corner[i]) + " lies on the quad");
  }
  RotationDraft draft(g);
  auto join = [&](int i, int j) {
    const std::int64_t key = draft.fresh_key();
    const DartId ti = g.twin(out_dart[i]);
    const DartId tj = g.twin(out_dart[j]);
    const VertexId a = g.origin(ti);
    const VertexId b = g.origin(tj);
    require(a != b, "detachment would create a loop");
    draft.at(a)[draft.find_old(a, ti)] = {b, key, -1};
    draft.at(b)[draft.find_old(b, tj)] = {a, key, -1};
  };
  if (variant == 1) {
    join(0, 1);
    join(2, 3);
  } else {
    join(0, 3);
    join(1, 2);
  }
  for (VertexId c : corner) draft.remove_vertex(c);
  std::vector<DartId> outer = g.face_darts(g.outer_face());
  const VertexId a0 = g.head(out_dart[0]);
  QuadDetachResult out;
  out.graph = draft.build(g.dart_count(), outer, {a0, 0}).graph;
  out.connectivity = connectivity_class(out.graph, 3);
  return out;
}

// ---------------------------------------------------------------------------
// Terminal identification

/// Joins three degree-2 terminals to a new vertex r placed in a face that
/// contains all of them. The terminals must be pairwise at even distance.
inline PlaneGraph identify_terminals(const PlaneGraph& g, std::array<VertexId, 3> terminals) {
  for (VertexId t : terminals) {
    require(t >= 0 && t < g.vertex_count(), "terminal out of range");
    require(g.degree(t) == 2, "terminal " + std::to_string(t) + " does not have degree 2");
  }
  require(terminals[0] != terminals[1] && terminals[1] != terminals[2] && terminals[0] != terminals[2],
          "terminals must be distinct");
  for (int i = 0; i < 3; ++i) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<VertexId> queue{terminals[i]};
    dist[terminals[i]] = 0;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (VertexId w : g.neighbours(queue[k]))
        if (dist[w] == -1) {
          dist[w] = dist[queue[k]] + 1;
          queue.push_back(w);
        }
    for (int j = 0; j < 3; ++j)
      require(dist[terminals[j]] % 2 == 0, "terminals " + std::to_string(terminals[i]) + " and " +
                                               std::to_string(terminals[j]) + " are at odd distance");
  }
  for (FaceId f = 0; f < g.face_count(); ++f) {
    std::vector<DartId> at;  // darts of f leaving a terminal, in walk order
    for (DartId d : g.face_darts(f))
      if (std::find(terminals.begin(), terminals.end(), g.origin(d)) != terminals.end()) at.push_back(d);
    if (at.size() != 3) continue;
    for (int orientation = 0; orientation < 2; ++orientation) {
      RotationDraft draft(g);
      const VertexId r = draft.add_vertex();
      std::vector<std::int64_t> keys;
      for (DartId d : at) {
        const std::int64_t key = draft.fresh_key();
        keys.push_back(key);
        auto& list = draft.at(g.origin(d));
        list.insert(list.begin() + draft.find_old(g.origin(d), d), {r, key, -1});
      }
      for (int i = 0; i < 3; ++i) {
        const int k = orientation == 0 ? i : 2 - i;
        draft.at(r).push_back({g.origin(at[k]), keys[k], -1});
      }
      try {
        return draft.build(g.dart_count(), g.face_darts(g.outer_face())).graph;
      } catch (const InputError&) {
        // the other cyclic order at r is the planar one
      }
    }
  }
  throw InputError("no face contains all three terminals");
}

// ---------------------------------------------------------------------------
// Digon subdivision

struct DigonSubdivision {
  PlaneGraph graph;
  enum class Kind { kept, triangle, inner_digon };
  std::vector<FaceId> source_face;  // new face -> face of h it lies in
  std::vector<Kind> kind;           // new face -> origin kind
  std::vector<FaceId> kept_face;    // h face -> new face (-1 for subdivided digons)
};

/// Subdivides both edges of every listed digon and joins the two new
/// vertices by a pair of parallel edges inside it. Listed digons must be
/// pairwise edge-disjoint.
inline DigonSubdivision subdivide_digons(const PlaneGraph& h, std::vector<FaceId> digons) {
  std::sort(digons.begin(), digons.end());
  digons.erase(std::unique(digons.begin(), digons.end()), digons.end());
  std::vector<char> edge_used(h.edge_count(), 0);
  std::vector<char> subdivided(h.face_count(), 0);
  for (FaceId f : digons) {
    require(f >= 0 && f < h.face_count(), "face id out of range");
    require(h.face_length(f) == 2, "face " + std::to_string(f) + " is not a digon");
    for (DartId d : h.face_darts(f)) {
      require(!edge_used[h.edge_of(d)], "listed digons share an edge");
      edge_used[h.edge_of(d)] = 1;
    }
    subdivided[f] = 1;
  }
  RotationDraft draft(h);
  for (FaceId f : digons) {
    const DartId d1 = h.face_darts(f)[0];  // a -> b
    const DartId d2 = h.face_darts(f)[1];  // b -> a
    const VertexId a = h.origin(d1);
    const VertexId b = h.origin(d2);
    const VertexId w = draft.add_vertex();
    const VertexId x = draft.add_vertex();
    const std::int64_t aw = draft.fresh_key(), bw = draft.fresh_key(), bx = draft.fresh_key(),
                       ax = draft.fresh_key(), g1 = draft.fresh_key(), g2 = draft.fresh_key();
    draft.at(a)[draft.find_old(a, d1)] = {w, aw, d1};
    draft.at(b)[draft.find_old(b, h.twin(d1))] = {w, bw, h.twin(d1)};
    draft.at(b)[draft.find_old(b, d2)] = {x, bx, d2};
    draft.at(a)[draft.find_old(a, h.twin(d2))] = {x, ax, h.twin(d2)};
    draft.at(w) = {{a, aw, -1}, {x, g1, -1}, {x, g2, -1}, {b, bw, -1}};
    draft.at(x) = {{b, bx, -1}, {w, g2, -1}, {w, g1, -1}, {a, ax, -1}};
  }
  auto built = draft.build(h.dart_count(), h.face_darts(h.outer_face()));
  DigonSubdivision out;
  out.graph = std::move(built.graph);
  const PlaneGraph& g = out.graph;
  out.source_face.assign(g.face_count(), -1);
  out.kind.assign(g.face_count(), DigonSubdivision::Kind::kept);
  out.kept_face.assign(h.face_count(), -1);
  for (DartId old = 0; old < h.dart_count(); ++old) {
    const DartId nd = built.old_dart_map[old];
    if (nd == -1) continue;
    const FaceId src = h.face_of(old);
    const FaceId nf = g.face_of(nd);
    out.source_face[nf] = src;
    if (subdivided[src]) {
      out.kind[nf] = DigonSubdivision::Kind::triangle;
    } else {
      out.kept_face[src] = nf;
    }
  }
  for (FaceId nf = 0; nf < g.face_count(); ++nf) {
    if (out.source_face[nf] != -1) continue;
    // Inner digon between w and x: inherit the digon the triangles came from.
    const DartId d = g.face_darts(nf).front();
    const DartId neighbour = g.twin(d);
    out.source_face[nf] = out.source_face[g.face_of(neighbour)];
    out.kind[nf] = DigonSubdivision::Kind::inner_digon;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vertex substitution

/// Replaces vertex x of g by gadget − u, joining x's j-th rotation neighbour
/// to u's pairing[j]-th rotation neighbour. Gadget vertices follow g's.
inline PlaneGraph substitute_vertex(const PlaneGraph& g, VertexId x, const PlaneGraph& gadget, VertexId u,
                                    std::array<int, 3> pairing) {
  require(x >= 0 && x < g.vertex_count() && u >= 0 && u < gadget.vertex_count(), "vertex out of range");
  require(g.degree(x) == 3 && gadget.degree(u) == 3, "substitution requires degree 3 at both vertices");
  std::array<int, 3> sorted = pairing;
  std::sort(sorted.begin(), sorted.end());
  require(sorted == std::array<int, 3>{0, 1, 2}, "pairing must be a permutation of 0,1,2");
  RotationDraft draft(g);
  const int offset = draft.size();
  for (VertexId v = 0; v < gadget.vertex_count(); ++v) draft.add_vertex();
  const std::int64_t gadget_key_base = draft.fresh_key() + 1;
  for (VertexId v = 0; v < gadget.vertex_count(); ++v)
    for (DartId d : gadget.rotation(v))
      draft.at(offset + v).push_back({offset + gadget.head(d), gadget_key_base + gadget.edge_of(d), -1});
  std::int64_t key = gadget_key_base + gadget.edge_count();
  for (int j = 0; j < 3; ++j) {
    const DartId xd = g.dart_at(x, j);
    const DartId ud = gadget.dart_at(u, pairing[j]);
    const VertexId y = g.head(xd);
    const VertexId v = offset + gadget.head(ud);
    require(y != x && gadget.head(ud) != u, "substitution at a vertex with a loop");
    draft.at(y)[draft.find_old(y, g.twin(xd))] = {v, key, -1};
    auto& vl = draft.at(v);
    const int pos = gadget.position(gadget.twin(ud));
    vl[pos] = {y, key, -1};
    ++key;
  }
  draft.remove_vertex(x);
  draft.remove_vertex(offset + u);
  try {
    return draft.build(g.dart_count(), g.face_darts(g.outer_face()), {g.head(g.dart_at(x, 0)), 0}).graph;
  } catch (const InputError& e) {
    throw InputError(std::string("substitution is nonplanar under the given pairing: ") + e.what());
  }
}

/// All pairings for which substitute_vertex yields a plane graph.
inline std::vector<std::array<int, 3>> planar_pairings(const PlaneGraph& g, VertexId x, const PlaneGraph& gadget,
                                                       VertexId u) {
  std::vector<std::array<int, 3>> out;
  std::array<int, 3> p{0, 1, 2};
  do {
    try {
      substitute_vertex(g, x, gadget, u, p);
      out.push_back(p);
    } catch (const InputError&) {
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// ---------------------------------------------------------------------------
// 2-edge-cut decomposition

struct DecompositionComponent {
  PlaneGraph graph;
  EdgeSet forced;
};

struct DecompositionSplit {
  int parent = -1;                  // index into DecompositionResult::nodes
  std::pair<EdgeId, EdgeId> cut;    // cut edges in the parent's ids
  std::pair<int, int> children;
};

struct DecompositionResult {
  std::vector<DecompositionComponent> components;  // leaves, in left-to-right order
  std::vector<DecompositionComponent> nodes;       // every graph of the split tree
  std::vector<DecompositionSplit> splits;
  std::vector<int> leaf_nodes;                     // node index of each component
};

/// Lexicographically smallest 2-edge-cut {e1 < e2}, if any.
inline std::optional<std::pair<EdgeId, EdgeId>> smallest_2_edge_cut(const PlaneGraph& g) {
  std::vector<char> removed(g.edge_count(), 0);
  for (EdgeId a = 0; a < g.edge_count(); ++a) {
    removed[a] = 1;
    for (EdgeId b = a + 1; b < g.edge_count(); ++b) {
      removed[b] = 1;
      const bool split = !is_connected_without_edges(g, removed);
      removed[b] = 0;
      if (split) return std::make_pair(a, b);
    }
    removed[a] = 0;
  }
  return std::nullopt;
}

namespace detail {

inline std::pair<DecompositionComponent, DecompositionComponent> split_2_cut(const DecompositionComponent& c,
                                                                             EdgeId e1, EdgeId e2) {
  const PlaneGraph& g = c.graph;
  std::vector<char> removed(g.edge_count(), 0);
  removed[e1] = removed[e2] = 1;
  std::vector<int> side(g.vertex_count(), -1);
  int sides = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (side[s] != -1) continue;
    std::vector<VertexId> stack{s};
    side[s] = sides;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (DartId d : g.rotation(v)) {
        if (removed[g.edge_of(d)] || side[g.head(d)] != -1) continue;
        side[g.head(d)] = sides;
        stack.push_back(g.head(d));
      }
    }
    ++sides;
  }
  if (sides != 2) throw InternalError("2-edge-cut does not split into two sides");
  std::vector<char> forced(g.edge_count(), 0);
  for (EdgeId e : c.forced) forced[e] = 1;
  DecompositionComponent parts[2];
  for (int s = 0; s < 2; ++s) {
    RotationDraft draft(g);
    // Endpoints of the cut edges on this side.
    DartId inner[2];
    int k = 0;
    for (EdgeId e : {e1, e2}) {
      const DartId d = g.edge_dart(e);
      inner[k++] = side[g.origin(d)] == s ? d : g.twin(d);
    }
    const VertexId a1 = g.origin(inner[0]);
    const VertexId a2 = g.origin(inner[1]);
    require(a1 != a2, "2-edge-cut edges share an endpoint; graph has a bridge");
    const std::int64_t key = draft.fresh_key();
    const int join_pos = g.position(inner[0]);
    draft.at(a1)[join_pos] = {a2, key, -1};
    draft.at(a2)[g.position(inner[1])] = {a1, key, -1};
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (side[v] != s) draft.remove_vertex(v);
    auto built = draft.build(g.dart_count(), g.face_darts(g.outer_face()), {a1, join_pos});
    parts[s].graph = std::move(built.graph);
    const PlaneGraph& ng = parts[s].graph;
    EdgeSet fs;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!forced[e] || e == e1 || e == e2) continue;
      const DartId d = built.old_dart_map[g.edge_dart(e)];
      if (d != -1) fs.push_back(ng.edge_of(d));
    }
    // The joining edge stands in for both cut edges, which every hamiltonian
    // cycle must use.
    fs.push_back(ng.edge_of(ng.dart_at(built.vertex_map[a1], join_pos)));
    parts[s].forced = normalized(fs);
  }
  return {parts[0], parts[1]};
}

}  // namespace detail

/// Splits r recursively along lexicographically smallest 2-edge-cuts until
/// every piece is 3-edge-connected. `forced` edges of r are carried along.
inline DecompositionResult decompose_2cuts(const PlaneGraph& r, const EdgeSet& forced = {}) {
  require(is_k_connected(r, 2), "2-cut decomposition requires a 2-connected graph");
  DecompositionResult out;
  out.nodes.push_back({r, normalized(forced)});
  std::function<void(int)> visit = [&](int node) {
    const auto cut = smallest_2_edge_cut(out.nodes[node].graph);
    if (!cut) {
      out.leaf_nodes.push_back(node);
      out.components.push_back(out.nodes[node]);
      return;
    }
    auto [left, right] = detail::split_2_cut(out.nodes[node], cut->first, cut->second);
    const int li = static_cast<int>(out.nodes.size());
    out.nodes.push_back(std::move(left));
    const int ri = static_cast<int>(out.nodes.size());
    out.nodes.push_back(std::move(right));
    out.splits.push_back({node, *cut, {li, ri}});
    visit(li);
    visit(ri);
  };
  visit(0);
  return out;
}

}  // namespace barnette

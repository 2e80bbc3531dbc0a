#pragma once

// Constructions behind the hardness results: hamiltonian u-v paths of a
// cubic graph minus an edge become spanning trees of 2-faces in a doubled
// radial graph, which in turn become A-trails of an 8-regular graph and
// spanning trees of arbitrary faces. Also the 2-edge-cut pipeline for
// bipartite cubic graphs with a recomposition check.

#include <map>

#include "barnette/oracle.hpp"
#include "barnette/stpp.hpp"

namespace barnette {

struct Th4Artifacts {
  PlaneGraph g0;
  EdgeId deleted = -1;                 // edge uv of g0
  VertexId u = -1;
  VertexId v = -1;
  EdgeDeletion g0p;                    // g0 - uv, same vertex ids
  RadialResult radial;                 // radial graph of g0p
  PlaneGraph h;                        // radial graph with every edge doubled
  FaceColoring h_color;                // digons 3, quadrilaterals 2
  std::vector<FaceId> quad_of_edge;    // g0p edge -> quadrilateral of h
  std::vector<EdgeId> edge_of_quad;    // h face -> g0p edge, -1 for digons
  ExpansionResult expansion;           // g = expansion.graph
  FaceColoring g_color;                // 1 = cycles C_w, 2 = octagons, 3 = expanded digons

  const PlaneGraph& g() const { return expansion.graph; }
};

/// Builds every stage and checks the structural claims: each edge of h lies
/// on one digon and one quadrilateral, and g is a Barnette graph. The outer
/// face of h is a digon, so the outer face of g is a 3-face.
inline Th4Artifacts build_th4_instance(const PlaneGraph& g0, EdgeId e) {
  require(is_cubic(g0) && is_k_connected(g0, 3), "source graph must be 3-connected cubic");
  require(e >= 0 && e < g0.edge_count(), "edge " + std::to_string(e) + " does not exist");
  Th4Artifacts a;
  a.g0 = g0;
  a.deleted = e;
  std::tie(a.u, a.v) = g0.endpoints(e);
  a.g0p = delete_edge(g0, e);
  const PlaneGraph& gp = a.g0p.graph;
  a.radial = radial_graph(gp);
  const PlaneGraph& r = a.radial.graph;
  // Copy keys 2x and 2x+1 appear in opposite orders at the two ends, so the
  // second copy at every origin bounds the new digon.
  std::vector<std::vector<PlaneGraph::HalfEdge>> rot(r.vertex_count());
  for (VertexId x = 0; x < r.vertex_count(); ++x) {
    for (DartId d : r.rotation(x)) {
      const std::int64_t base = 2 * static_cast<std::int64_t>(r.edge_of(d));
      const bool low = r.edge_dart(r.edge_of(d)) == d;
      rot[x].push_back({r.head(d), low ? base : base + 1});
      rot[x].push_back({r.head(d), low ? base + 1 : base});
    }
  }
  a.h = PlaneGraph::from_rotation(rot, 2 * r.face_darts(r.outer_face()).front() + 1);
  const PlaneGraph& h = a.h;
  a.h_color.palette = 3;
  a.h_color.color.assign(h.face_count(), 0);
  a.edge_of_quad.assign(h.face_count(), -1);
  a.quad_of_edge.assign(gp.edge_count(), -1);
  std::map<std::pair<VertexId, VertexId>, EdgeId> edge_by_ends;
  for (EdgeId x = 0; x < gp.edge_count(); ++x) {
    auto [p, q] = gp.endpoints(x);
    edge_by_ends[std::minmax(p, q)] = x;
  }
  for (FaceId f = 0; f < h.face_count(); ++f) {
    if (h.face_length(f) == 2) {
      a.h_color.color[f] = 3;
      continue;
    }
    if (h.face_length(f) != 4) throw InternalError("doubled radial graph has a face of length " +
                                                   std::to_string(h.face_length(f)));
    a.h_color.color[f] = 2;
    std::vector<VertexId> ends;
    for (VertexId x : h.face_vertices(f))
      if (!a.radial.is_face_node(x)) ends.push_back(x);
    if (ends.size() != 2) throw InternalError("quadrilateral does not alternate vertex and face nodes");
    const auto it = edge_by_ends.find(std::minmax(ends[0], ends[1]));
    if (it == edge_by_ends.end()) throw InternalError("quadrilateral does not match an edge");
    a.edge_of_quad[f] = it->second;
    a.quad_of_edge[it->second] = f;
  }
  for (FaceId f : a.quad_of_edge)
    if (f == -1) throw InternalError("edge without a quadrilateral");
  for (EdgeId x = 0; x < h.edge_count(); ++x) {
    const DartId d = h.edge_dart(x);
    const int sum = h.face_length(h.face_of(d)) + h.face_length(h.face_of(h.twin(d)));
    if (sum != 6) throw InternalError("edge " + std::to_string(x) + " does not lie on a digon and a quadrilateral");
  }
  if (!is_proper(h, a.h_color)) throw InternalError("digon/quadrilateral colouring is not proper");
  if (a.h_color.color[h.outer_face()] != 3) throw InternalError("outer face of h is not a digon");
  a.expansion = vertex_expand(h);
  const PlaneGraph& g = a.expansion.graph;
  a.g_color.palette = 3;
  a.g_color.color.assign(g.face_count(), 0);
  for (FaceId f : a.expansion.cycle_face) a.g_color.color[f] = 1;
  for (FaceId f = 0; f < h.face_count(); ++f) a.g_color.color[a.expansion.face_map[f]] = a.h_color.color[f];
  if (!is_proper(g, a.g_color)) throw InternalError("colouring of g is not proper");
  if (!is_barnette(g)) throw InternalError("expanded graph is not a Barnette graph");
  return a;
}

/// T = quadrilaterals of the edges off the path; a spanning tree of 2-faces.
inline FaceTree claim1_forward(const Th4Artifacts& a, const EdgeSet& path) {
  const PlaneGraph& gp = a.g0p.graph;
  require(is_hamiltonian_path(gp, path, a.u, a.v), "edge set is not a hamiltonian u-v path of g0 - uv");
  std::vector<char> on_path(gp.edge_count(), 0);
  for (EdgeId x : path) on_path[x] = 1;
  FaceTree ft;
  for (EdgeId x = 0; x < gp.edge_count(); ++x)
    if (!on_path[x]) ft.faces.push_back(a.quad_of_edge[x]);
  ft.proper = all_vertices(a.h);
  ft.canonicalize();
  const QstfCheck check = is_qstf(a.h, ft);
  if (!check) throw InternalError("path did not give a spanning tree of 2-faces: " + check.failure);
  return ft;
}

/// The path is every edge whose quadrilateral is not in the tree.
inline EdgeSet claim1_backward(const Th4Artifacts& a, const FaceTree& ft) {
  require(ft.is_spanning(a.h), "face tree must be spanning");
  const QstfCheck check = is_qstf(a.h, ft);
  require(check.ok, "not a spanning tree of faces: " + check.failure);
  std::vector<char> in_tree(a.g0p.graph.edge_count(), 0);
  for (FaceId f : ft.faces) {
    require(a.edge_of_quad[f] != -1, "face " + std::to_string(f) + " is not a 2-face");
    in_tree[a.edge_of_quad[f]] = 1;
  }
  EdgeSet path;
  for (EdgeId x = 0; x < a.g0p.graph.edge_count(); ++x)
    if (!in_tree[x]) path.push_back(x);
  if (!is_hamiltonian_path(a.g0p.graph, path, a.u, a.v))
    throw InternalError("face tree did not give a hamiltonian u-v path");
  return path;
}

// ---------------------------------------------------------------------------
// 8-regular A-trail instances

/// With colours 1 and 2 exchanged in g, the octagons are the 1-faces: g
/// contracted by them is the 8-regular graph, and g contracted by the cycles
/// C_w is h again. A-trails of the former and spanning trees of 2-faces of
/// the latter are forms (ii) and (iii) of the same hamiltonian cycles.
struct Cor3Instance {
  ColoredBarnette forms;  // g with octagons as 1-faces
  const PlaneGraph& hp() const { return forms.by_1_faces.h; }
};

inline Cor3Instance build_cor3_instance(const Th4Artifacts& a) {
  const FaceColoring swapped = permute_colors(a.g_color, {2, 1, 3});
  const PlaneGraph& g = a.g();
  std::vector<int> octagons_at(g.vertex_count(), 0);
  for (FaceId f : swapped.faces_of(1)) {
    if (g.face_length(f) != 8) throw InternalError("2-face of g is not an octagon");
    for (VertexId x : g.face_vertices(f)) ++octagons_at[x];
  }
  for (VertexId x = 0; x < g.vertex_count(); ++x)
    if (octagons_at[x] != 1) throw InternalError("octagons are not a facial 2-factor");
  Cor3Instance out{prepare_forms(g, swapped)};
  if (!is_regular(out.hp(), 8)) throw InternalError("contracted graph is not 8-regular");
  return out;
}

/// h's faces are the faces of g / cycles C_w; quadrilateral f of h is
/// face expansion.face_map[f] of g.
inline ATrail cor3_tree_to_trail(const Th4Artifacts& a, const Cor3Instance& c3, const FaceTree& ft) {
  require(ft.is_spanning(a.h) && is_qstf(a.h, ft).ok, "not a spanning tree of faces of h");
  const ReducedGraph& by_cycles = c3.forms.by_2_faces;
  FaceTree mapped;
  for (FaceId f : ft.faces) mapped.faces.push_back(by_cycles.h_face_of[a.expansion.face_map[f]]);
  mapped.proper = all_vertices(by_cycles.h);
  mapped.canonicalize();
  return std::get<ATrail>(thm2_convert(c3.forms, Form::tree_mod_2, SpanningFaceTree{mapped}, Form::atrail));
}

inline FaceTree cor3_trail_to_tree(const Th4Artifacts& a, const Cor3Instance& c3, const ATrail& trail) {
  const auto st = std::get<SpanningFaceTree>(thm2_convert(c3.forms, Form::atrail, trail, Form::tree_mod_2));
  std::vector<FaceId> h_face_of_g(a.g().face_count(), -1);
  for (FaceId f = 0; f < a.h.face_count(); ++f) h_face_of_g[a.expansion.face_map[f]] = f;
  FaceTree ft;
  for (FaceId f : st.tree.faces) ft.faces.push_back(h_face_of_g[c3.forms.by_2_faces.face_map[f]]);
  ft.proper = all_vertices(a.h);
  ft.canonicalize();
  const QstfCheck check = is_qstf(a.h, ft);
  if (!check) throw InternalError("A-trail did not give a spanning tree of 2-faces of h: " + check.failure);
  return ft;
}

// ---------------------------------------------------------------------------
// Octagons, digons and triangles

struct Cor4Instance {
  DigonSubdivision sub;        // h0 = sub.graph
  FaceColoring h0_color;       // octagons and inner digons 2, triangles 3
  const PlaneGraph& h0() const { return sub.graph; }
};

inline Cor4Instance build_cor4_instance(const Th4Artifacts& a) {
  Cor4Instance out;
  out.sub = subdivide_digons(a.h, a.h_color.faces_of(3));
  const PlaneGraph& h0 = out.sub.graph;
  out.h0_color.palette = 3;
  out.h0_color.color.assign(h0.face_count(), 0);
  for (FaceId f = 0; f < h0.face_count(); ++f) {
    const bool triangle = out.sub.kind[f] == DigonSubdivision::Kind::triangle;
    out.h0_color.color[f] = triangle ? 3 : 2;
    const int want = triangle ? 3 : out.sub.kind[f] == DigonSubdivision::Kind::inner_digon ? 2 : 8;
    if (h0.face_length(f) != want)
      throw InternalError("face " + std::to_string(f) + " of h0 has length " + std::to_string(h0.face_length(f)));
  }
  if (!is_proper(h0, out.h0_color)) throw InternalError("colouring of h0 is not proper");
  return out;
}

/// Octagons of the tree's quadrilaterals; per subdivided digon the inner
/// digon when a quadrilateral beside it is chosen, otherwise its first
/// triangle.
inline FaceTree cor4_forward(const Th4Artifacts& a, const Cor4Instance& c4, const FaceTree& ft) {
  require(ft.is_spanning(a.h) && is_qstf(a.h, ft).ok, "not a spanning tree of faces of h");
  const PlaneGraph& h = a.h;
  std::vector<char> chosen(h.face_count(), 0);
  for (FaceId f : ft.faces) {
    require(a.h_color.color[f] == 2, "face " + std::to_string(f) + " is not a 2-face");
    chosen[f] = 1;
  }
  FaceTree out;
  for (FaceId f : ft.faces) out.faces.push_back(c4.sub.kept_face[f]);
  const PlaneGraph& h0 = c4.h0();
  for (FaceId digon : a.h_color.faces_of(3)) {
    bool beside = false;
    for (DartId d : h.face_darts(digon)) beside = beside || chosen[h.face_of(h.twin(d))];
    FaceId pick = -1;
    for (FaceId nf = 0; nf < h0.face_count() && pick == -1; ++nf) {
      if (c4.sub.source_face[nf] != digon) continue;
      const auto kind = c4.sub.kind[nf];
      if ((beside && kind == DigonSubdivision::Kind::inner_digon) ||
          (!beside && kind == DigonSubdivision::Kind::triangle))
        pick = nf;
    }
    if (pick == -1) throw InternalError("subdivided digon has no replacement face");
    out.faces.push_back(pick);
  }
  out.proper = all_vertices(h0);
  out.canonicalize();
  const QstfCheck check = is_qstf(h0, out);
  if (!check) throw InternalError("transfer did not give a spanning tree of faces of h0: " + check.failure);
  return out;
}

/// The quadrilaterals whose octagons are in the tree.
inline FaceTree cor4_backward(const Th4Artifacts& a, const Cor4Instance& c4, const FaceTree& ft0) {
  require(ft0.is_spanning(c4.h0()) && is_qstf(c4.h0(), ft0).ok, "not a spanning tree of faces of h0");
  FaceTree out;
  for (FaceId f : ft0.faces)
    if (c4.sub.kind[f] == DigonSubdivision::Kind::kept) out.faces.push_back(c4.sub.source_face[f]);
  out.proper = all_vertices(a.h);
  out.canonicalize();
  const QstfCheck check = is_qstf(a.h, out);
  if (!check) throw InternalError("transfer did not give a spanning tree of 2-faces of h: " + check.failure);
  return out;
}

// ---------------------------------------------------------------------------
// 2-edge-cut pipeline

struct Thm6Check {
  bool source_hamiltonian = false;
  std::vector<bool> component_hamiltonian;  // through its forced edges
  bool agrees() const {
    const bool all = std::all_of(component_hamiltonian.begin(), component_hamiltonian.end(), [](bool b) { return b; });
    return all == source_hamiltonian;
  }
};

struct Thm6Pipeline {
  DecompositionResult decomposition;
  /// Hamiltonicity of r against every component through its forced edges,
  /// decided by the oracle.
  Thm6Check verify(const PlaneGraph& r, const SearchBudget& budget = {}) const {
    Thm6Check out;
    out.source_hamiltonian = oracle::find_hc(r, {}, {}, oracle::HcMode::first, budget).count > 0;
    for (const auto& c : decomposition.components)
      out.component_hamiltonian.push_back(oracle::find_hc(c.graph, c.forced, {}, oracle::HcMode::first, budget).count > 0);
    return out;
  }
};

inline Thm6Pipeline thm6_pipeline(const PlaneGraph& r) {
  require(is_cubic(r) && is_bipartite(r) && is_k_connected(r, 2), "pipeline needs a 2-connected cubic bipartite graph");
  return {decompose_2cuts(r)};
}

}  // namespace barnette

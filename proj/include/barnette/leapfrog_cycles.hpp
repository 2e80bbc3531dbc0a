#pragma once

// Hamiltonian cycles of a Barnette graph G and of its leapfrog extension
// Lf(G). The hexagons of Lf(G) take colours 1 and 2 by the bipartition
// class of their centre vertex, the images of G's faces take colour 3, and
// contracting the 3-faces gives back the dual of G.

#include "barnette/dual_trails.hpp"
#include "barnette/face_trees.hpp"

namespace barnette {

/// F1 = hexagons around vertices in the class of vertex 0, F2 = the other
/// hexagons, F3 = face images.
inline FaceColoring leapfrog_coloring(const PlaneGraph& g, const LeapfrogResult& lf) {
  const auto classes = vertex_bipartition(g);
  require(classes.has_value(), "leapfrog colouring needs a bipartite graph");
  FaceColoring c;
  c.palette = 3;
  c.color.assign(lf.graph.face_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) c.color[lf.hexagon[v]] = (*classes)[v] == (*classes)[0] ? 1 : 2;
  for (FaceId f : lf.face_image) c.color[f] = 3;
  if (!is_proper(lf.graph, c)) throw InternalError("leapfrog colouring is not proper");
  return c;
}

struct LfIdentity {
  LeapfrogResult lf;
  ReducedGraph contracted;            // Lf(G) / face images
  DualResult dual;
  std::vector<DartId> iso;            // contracted dart -> dual dart, empty on failure
  bool mirrored = false;              // the map reverses every rotation
  std::string witness;                // first mismatch when iso is empty
  bool ok() const { return !iso.empty(); }
};

/// Checks that contracting the face images of Lf(G) gives G*, using the
/// natural correspondence: the contracted dart along the shared edge at x_d
/// goes to the dual dart crossing d.
inline LfIdentity lf_identity_check(const PlaneGraph& g) {
  require(is_barnette(g), "identity check needs a Barnette graph");
  LfIdentity out;
  out.lf = leapfrog(g);
  out.contracted = contract_facial_factor(out.lf.graph, out.lf.face_image);
  out.dual = dual(g);
  const PlaneGraph& h = out.contracted.h;
  const PlaneGraph& d = out.dual.graph;
  if (h.vertex_count() != d.vertex_count() || h.edge_count() != d.edge_count()) {
    out.witness = "size mismatch: " + std::to_string(h.vertex_count()) + "/" + std::to_string(h.edge_count()) +
                  " against " + std::to_string(d.vertex_count()) + "/" + std::to_string(d.edge_count());
    return out;
  }
  std::vector<DartId> map(h.dart_count());
  for (DartId a = 0; a < h.dart_count(); ++a) map[a] = out.dual.dart_map[out.lf.graph.origin(out.contracted.dart_map[a])];
  for (int mirrored = 0; mirrored < 2; ++mirrored) {
    std::string witness;
    for (DartId a = 0; a < h.dart_count() && witness.empty(); ++a) {
      const DartId next = mirrored ? d.rot_prev(map[a]) : d.rot_next(map[a]);
      if (map[h.twin(a)] != d.twin(map[a])) witness = "twin of dart " + std::to_string(a) + " is not preserved";
      else if (map[h.rot_next(a)] != next) witness = "rotation at dart " + std::to_string(a) + " is not preserved";
    }
    if (witness.empty()) {
      out.iso = map;
      out.mirrored = mirrored != 0;
      out.witness.clear();
      return out;
    }
    if (!mirrored) out.witness = witness;
  }
  return out;
}

namespace detail {

inline void require_leapfrog_coloring(const PlaneGraph& g, const LeapfrogResult& lf, const FaceColoring& c) {
  require(c.palette == 3 && static_cast<int>(c.color.size()) == lf.graph.face_count() && is_proper(lf.graph, c),
          "need a proper 3-face-colouring of Lf(G)");
  for (FaceId f : lf.face_image) require(c.color[f] == 3, "face images must be the 3-faces");
  const auto classes = vertex_bipartition(g);
  require(classes.has_value(), "G must be bipartite");
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    require(c.color[lf.hexagon[v]] != 3, "hexagons must not be 3-faces");
}

inline std::string leapfrog_side_violation(const PlaneGraph& g, const LeapfrogResult& lf, const FaceColoring& c,
                                           const HamCycleWithSides& cycle) {
  if (!is_hamiltonian_cycle(lf.graph, cycle.cycle)) return "not a hamiltonian cycle of Lf(G)";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const FaceId f = lf.hexagon[v];
    const Side want = c.color[f] == 1 ? Side::inside : Side::outside;
    if (cycle.side[f] != want)
      return "hexagon of vertex " + std::to_string(v) + " (colour " + std::to_string(c.color[f]) + ") is " +
             (cycle.side[f] == Side::inside ? "inside" : "outside");
  }
  return {};
}

}  // namespace detail

/// Lifts a hamiltonian cycle c0 of G to one of Lf(G) with the 1-hexagons
/// inside and the 2-hexagons outside. Every shared edge of c0 is kept; at
/// each vertex v the hexagon C6(v) is crossed either by its single corner
/// edge between the two cycle edges, or around the other way through the
/// shared edge of the chord at v.
inline HamCycleWithSides hc_lift_leapfrog(const PlaneGraph& g, const LeapfrogResult& lf, const FaceColoring& c,
                                          const EdgeSet& c0) {
  require(is_hamiltonian_cycle(g, c0), "c0 is not a hamiltonian cycle of G");
  detail::require_leapfrog_coloring(g, lf, c);
  const std::vector<Side> sides = face_sides(g, c0);
  std::vector<char> on_cycle(g.edge_count(), 0);
  for (EdgeId e : c0) on_cycle[e] = 1;
  EdgeSet cycle;
  for (EdgeId e : c0) cycle.push_back(lf.shared_edge[e]);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    DartId p = -1;
    for (DartId x : g.rotation(v))
      if (on_cycle[g.edge_of(x)] && on_cycle[g.edge_of(g.rot_next(x))]) p = x;
    const DartId q = g.rot_next(p);
    const DartId chord = g.rot_next(q);
    const Side wanted = c.color[lf.hexagon[v]] == 1 ? Side::outside : Side::inside;
    if (sides[g.face_of(q)] == wanted) {
      cycle.push_back(lf.corner_edge[g.twin(p)]);
    } else {
      cycle.push_back(lf.corner_edge[g.twin(q)]);
      cycle.push_back(lf.shared_edge[g.edge_of(chord)]);
      cycle.push_back(lf.corner_edge[g.twin(chord)]);
    }
  }
  cycle = normalized(cycle);
  if (!is_hamiltonian_cycle(lf.graph, cycle)) throw InternalError("lifted edge set is not a hamiltonian cycle");
  HamCycleWithSides out = with_sides(lf.graph, cycle);
  const std::string violation = detail::leapfrog_side_violation(g, lf, c, out);
  if (!violation.empty()) throw InternalError("lifted cycle has the wrong sides: " + violation);
  return out;
}

/// Every vertex x_d of Lf(G) meets the cycle in its shared edge and one
/// corner edge, which lies on C6(origin d) or C6(head d). An edge of G is
/// on the projected cycle iff the two ends of its shared edge take their
/// corners in different hexagons; along a chord both ends turn in the same
/// hexagon.
///
/// Throws InputError when the side shape is wrong or the traced edges do
/// not form a hamiltonian cycle of G.
inline EdgeSet hc_project_leapfrog(const PlaneGraph& g, const LeapfrogResult& lf, const FaceColoring& c,
                                   const HamCycleWithSides& cycle) {
  detail::require_leapfrog_coloring(g, lf, c);
  const std::string violation = detail::leapfrog_side_violation(g, lf, c, cycle);
  require(violation.empty(), "cycle does not have the leapfrog side shape: " + violation);
  std::vector<char> on_cycle(lf.graph.edge_count(), 0);
  for (EdgeId e : cycle.cycle) on_cycle[e] = 1;
  // corner_edge[d] lies on C6(head d), corner_edge[face_prev d] on C6(origin d)
  auto corner_hexagon = [&](DartId d) {
    const bool ahead = on_cycle[lf.corner_edge[d]] != 0;
    const bool behind = on_cycle[lf.corner_edge[g.face_prev(d)]] != 0;
    if (ahead == behind) throw InternalError("vertex x_" + std::to_string(d) + " does not use exactly one corner");
    return ahead ? g.head(d) : g.origin(d);
  };
  EdgeSet out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const DartId d = g.edge_dart(e);
    if (corner_hexagon(d) != corner_hexagon(g.twin(d))) out.push_back(e);
  }
  // The traced edges bound the union of the face images inside. Some cycles
  // with the right sides trace a region missing vertices of G (their
  // contraction is a separating A-trail of G*); those have no projection.
  require(is_hamiltonian_cycle(g, out), "cycle traces " + std::to_string(out.size()) +
                                            " edges of G that do not form a hamiltonian cycle");
  return out;
}

struct LeapfrogTree {
  LeapfrogResult lf;
  FaceColoring colors;
  EdgeSet base_cycle;           // hamiltonian cycle of G from the dual trail
  HamCycleWithSides lifted;     // on Lf(G)
  ReducedGraph reduced;         // Lf(G) re-rooted at a 2-hexagon, contracted by the face images
  FaceTree tree;                // on reduced.h: T = the 1-hexagons, proper = face images inside
};

/// Dual trail -> hamiltonian cycle of G -> lifted cycle of Lf(G) -> quasi
/// spanning tree of faces of Lf(G)/F3 containing every 1-hexagon.
inline LeapfrogTree thm4_qstf(const PlaneGraph& g, const ATrail& trail) {
  require(is_barnette(g), "leapfrog face trees need a Barnette graph");
  const DualResult d = dual(g);
  require(is_a_trail(d.graph, trail), "trail is not an A-trail of the dual");
  require(is_non_separating(d.graph, trail), "trail is separating");
  LeapfrogTree out;
  out.lf = leapfrog(g);
  out.colors = leapfrog_coloring(g, out.lf);
  out.base_cycle = normalized(dual_trail_to_hamiltonian(g, trail));
  if (!is_hamiltonian_cycle(g, out.base_cycle)) throw InternalError("dual trail did not give a hamiltonian cycle");
  out.lifted = hc_lift_leapfrog(g, out.lf, out.colors, out.base_cycle);
  // The face images include the outer face; move it to a 2-hexagon, which
  // lies outside the lifted cycle as well.
  const PlaneGraph rerooted = out.lf.graph.with_outer_face(out.colors.faces_of(2).front());
  out.reduced = contract_facial_factor(rerooted, out.lf.face_image);
  out.tree = hamiltonian_to_qstf(out.reduced, with_sides(rerooted, out.lifted.cycle));
  std::vector<FaceId> ones;
  for (FaceId f : out.colors.faces_of(1)) ones.push_back(out.reduced.h_face_of[f]);
  std::sort(ones.begin(), ones.end());
  if (out.tree.faces != ones) throw InternalError("face tree does not consist of the 1-hexagons");
  for (VertexId w = 0; w < out.reduced.h.vertex_count(); ++w) {
    const bool inside = out.lifted.side[out.reduced.vertex_map[w]] == Side::inside;
    if (inside != std::binary_search(out.tree.proper.begin(), out.tree.proper.end(), w))
      throw InternalError("proper vertices differ from the face images inside the lifted cycle");
  }
  if (!is_tree(restricted_radial(out.reduced.h, out.tree.proper, ones).graph))
    throw InternalError("restricted radial graph of the 1-hexagons is not a tree");
  return out;
}

}  // namespace barnette

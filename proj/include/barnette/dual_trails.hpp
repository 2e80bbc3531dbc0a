#pragma once

// Hamiltonian cycles of a cubic bipartite plane graph and non-separating
// A-trails of its dual triangulation. Dual vertex f is face f of g, so the
// A-partition of a dual trail splits the faces of g into the two sides of
// a hamiltonian cycle.

#include "barnette/atrails.hpp"
#include "barnette/graph_props.hpp"

namespace barnette {

/// Edges of g separating faces in different A-partition classes of `trail`,
/// a trail of dual(g).graph.
inline EdgeSet dual_trail_to_hamiltonian(const PlaneGraph& g, const ATrail& trail) {
  require(is_cubic(g) && is_bipartite(g), "dual trail transfer needs a cubic bipartite graph");
  const DualResult d = dual(g);
  const APartition p = a_partition(d.graph, trail, face_coloring(d.graph, 2));
  require(p.consistent(), "A-partition of the dual trail is not single-valued");
  EdgeSet cycle;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const DartId x = g.edge_dart(e);
    if (p.side[g.face_of(x)] != p.side[g.face_of(g.twin(x))]) cycle.push_back(e);
  }
  return cycle;
}

/// The dual A-trail whose transitions at inside faces use corners of one
/// colour and at outside faces the other. Either colour assignment may be
/// the one that closes into a single trail; both are tried.
inline ATrail hamiltonian_to_dual_trail(const PlaneGraph& g, const EdgeSet& cycle) {
  require(is_cubic(g) && is_bipartite(g), "dual trail transfer needs a cubic bipartite graph");
  require(is_hamiltonian_cycle(g, cycle), "edge set is not a hamiltonian cycle");
  const std::vector<Side> sides = face_sides(g, cycle);
  const DualResult d = dual(g);
  const PlaneGraph& h = d.graph;
  const FaceColoring colors = face_coloring(h, 2);
  const EdgeSet target = normalized(cycle);
  for (int inside_color : {2, 1}) {
    std::vector<int> choice(h.vertex_count(), 0);
    for (VertexId f = 0; f < h.vertex_count(); ++f) {
      const int want = sides[f] == Side::inside ? inside_color : 3 - inside_color;
      // choice 0 turns in the corner before position 1
      choice[f] = colors.color[h.face_of(h.dart_at(f, 1))] == want ? 0 : 1;
    }
    auto trail = trail_from_partner(h, partner_from_choice(h, choice));
    if (!trail || !is_a_trail(h, *trail)) continue;
    if (normalized(dual_trail_to_hamiltonian(g, *trail)) == target) return *trail;
  }
  throw InternalError("hamiltonian cycle did not give a dual A-trail");
}

}  // namespace barnette

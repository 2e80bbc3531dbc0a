#pragma once

#include <string>
#include <utility>
#include <vector>

#include "barnette/barnette.hpp"

namespace fixtures {

using namespace barnette;

struct Named {
  std::string name;
  PlaneGraph graph;
};

/// Cube with the given vertices replaced, one after another, by a cube.
inline PlaneGraph cube_substituted(const std::vector<VertexId>& at) {
  PlaneGraph g = cube();
  for (VertexId x : at) g = substitute_vertex(g, x, cube(), 0, planar_pairings(g, x, cube(), 0).front());
  return g;
}

inline FaceId prism_hexagon(const PlaneGraph& g) {
  for (FaceId f = 0; f < g.face_count(); ++f)
    if (g.face_length(f) == 6) return f;
  return -1;
}

inline PlaneGraph truncated_octahedron() { return vertex_expand(octahedron()).graph; }

/// Thirty connected plane graphs of mixed degrees and face sizes.
inline std::vector<Named> corpus() {
  std::vector<Named> out;
  for (int m = 3; m <= 12; ++m) out.push_back({"prism" + std::to_string(m), prism(m)});
  for (int m = 3; m <= 8; ++m) out.push_back({"bipyramid" + std::to_string(m), bipyramid(m)});
  out.push_back({"k4", k4()});
  out.push_back({"cycle5", cycle_graph(5)});
  out.push_back({"digon_bundle3", multi_edge(3)});
  out.push_back({"leapfrog_cube", leapfrog(cube()).graph});
  out.push_back({"leapfrog_k4", leapfrog(k4()).graph});
  out.push_back({"leapfrog_prism3", leapfrog(prism(3)).graph});
  out.push_back({"truncated_octahedron", truncated_octahedron()});
  out.push_back({"cube_sub1", cube_substituted({0})});
  out.push_back({"cube_sub2", cube_substituted({0, 3})});
  out.push_back({"prism6_mirror", mirror(prism(6))});
  out.push_back({"cube_outer1", cube().with_outer_face(1)});
  out.push_back({"radial_cube", radial_graph(cube()).graph});
  out.push_back({"expanded_k4", vertex_expand(k4()).graph});
  out.push_back({"dual_prism5", dual(prism(5)).graph});
  return out;
}

inline std::vector<Named> barnette_corpus(int max_vertices) {
  std::vector<Named> out;
  for (auto& n : corpus())
    if (n.graph.vertex_count() <= max_vertices && is_barnette(n.graph)) out.push_back(std::move(n));
  return out;
}

/// 4-connected eulerian plane triangulations.
inline std::vector<Named> eulerian_triangulations() {
  return {{"octahedron", octahedron()},
          {"bipyramid6", bipyramid(6)},
          {"bipyramid8", bipyramid(8)},
          {"dual_truncated_octahedron", dual(truncated_octahedron()).graph}};
}

}  // namespace fixtures

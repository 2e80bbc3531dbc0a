#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace barnette;

namespace {

// Orbits of d -> rot_next(twin(d)), counted without the library's face table.
int face_orbits(const PlaneGraph& g) {
  std::vector<char> seen(g.dart_count(), 0);
  int orbits = 0;
  for (DartId d = 0; d < g.dart_count(); ++d) {
    if (seen[d]) continue;
    ++orbits;
    for (DartId x = d; !seen[x]; x = g.rot_next(g.twin(x))) seen[x] = 1;
  }
  return orbits;
}

std::vector<int> sorted_lengths(const PlaneGraph& g) {
  std::vector<int> out;
  for (FaceId f = 0; f < g.face_count(); ++f) out.push_back(g.face_length(f));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(PlaneGraph, CubeCounts) {
  const PlaneGraph g = cube();
  EXPECT_EQ(g.vertex_count(), 8);
  EXPECT_EQ(g.edge_count(), 12);
  EXPECT_EQ(g.face_count(), 6);
  EXPECT_EQ(sorted_lengths(g), std::vector<int>(6, 4));
}

TEST(PlaneGraph, SingleEdgeParses) {
  const PlaneGraph g = parse_plane_graph("n 2\n0: 1\n1: 0\n");
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_EQ(g.face_count(), 1);
  EXPECT_EQ(g.vertex_count() - g.edge_count() + g.face_count(), 2);
  EXPECT_FALSE(is_cubic(g));
}

TEST(PlaneGraph, DoubledEdgeHasTwoDigons) {
  const PlaneGraph g = parse_plane_graph("n 2\n0: 1 1\n1: 0 0\n");
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(g.face_count(), 2);
  EXPECT_EQ(sorted_lengths(g), (std::vector<int>{2, 2}));
}

TEST(PlaneGraph, FaceTableMatchesOrbitCount) {
  for (const auto& n : fixtures::corpus()) EXPECT_EQ(n.graph.face_count(), face_orbits(n.graph)) << n.name;
}

TEST(PlaneGraph, EveryDartOnExactlyOneFace) {
  for (const auto& n : fixtures::corpus()) {
    const PlaneGraph& g = n.graph;
    std::vector<int> hits(g.dart_count(), 0);
    for (FaceId f = 0; f < g.face_count(); ++f)
      for (DartId d : g.face_darts(f)) {
        ++hits[d];
        EXPECT_EQ(g.face_of(d), f);
      }
    EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; })) << n.name;
  }
}

TEST(PlaneGraph, TwinAndRotationAreInverse) {
  const PlaneGraph g = leapfrog(cube()).graph;
  for (DartId d = 0; d < g.dart_count(); ++d) {
    EXPECT_EQ(g.twin(g.twin(d)), d);
    EXPECT_NE(g.twin(d), d);
    EXPECT_EQ(g.rot_prev(g.rot_next(d)), d);
    EXPECT_EQ(g.face_prev(g.face_next(d)), d);
    EXPECT_EQ(g.origin(g.twin(d)), g.head(d));
  }
}

TEST(PlaneGraph, WriteParseRoundTrip) {
  for (const auto& n : fixtures::corpus()) {
    const std::string text = write_plane_graph(n.graph);
    const PlaneGraph back = parse_plane_graph(text);
    EXPECT_EQ(write_plane_graph(back), text) << n.name;
    EXPECT_TRUE(isomorphic_maps(back, n.graph)) << n.name;
    EXPECT_EQ(back.outer_face(), n.graph.outer_face()) << n.name;
  }
}

TEST(PlaneGraph, RankTokensDisambiguateParallelEdges) {
  // Rank overrides survive a round trip for multigraphs produced by contraction.
  const PlaneGraph g = prism(6);
  const ReducedGraph rg = contract_color_class(g, face_coloring(g, 3), 1);
  const std::string text = write_plane_graph(rg.h);
  EXPECT_TRUE(isomorphic_maps(parse_plane_graph(text), rg.h));
}

TEST(PlaneGraph, CommentsAndBlankLines) {
  const PlaneGraph g = parse_plane_graph("# a triangle\n\nn 3\n0: 1 2\n# middle\n1: 2 0\n2: 0 1\n");
  EXPECT_EQ(g.face_count(), 2);
}

TEST(PlaneGraph, MalformedInputsAreInputErrors) {
  const std::vector<std::string> bad{
      "",
      "0: 1\n",                          // no header
      "n 2\n0: 1\n",                     // vertex 1 missing
      "n 2\n0: 1\n1: 1\n",               // self loop / asymmetric
      "n 2\n0: 1\n1: 0\n1: 0\n",         // duplicate line
      "n 2\n0: 1 1\n1: 0\n",             // unmatched parallel edge
      "n 2\n0: x\n1: 0\n",               // not a number
      "n 3\n0: 1\n1: 0\n2:\n",           // isolated vertex, disconnected
      "n 2\nouter 9\n0: 1\n1: 0\n",      // outer dart out of range
      "n 2\n0: 1/3\n1: 0\n",             // rank out of range
  };
  for (const auto& text : bad) EXPECT_THROW(parse_plane_graph(text), InputError) << text;
}

TEST(PlaneGraph, OuterFaceIsData) {
  const PlaneGraph g = cube();
  for (FaceId f = 0; f < g.face_count(); ++f) {
    const PlaneGraph r = g.with_outer_face(f);
    EXPECT_EQ(r.outer_face(), f);
    EXPECT_EQ(parse_plane_graph(write_plane_graph(r)).outer_face(), f);
  }
}

TEST(PlaneGraph, FaceLengthProfile) {
  const auto profile = face_length_profile(prism(6));
  EXPECT_EQ(profile, (std::vector<std::pair<int, int>>{{4, 6}, {6, 2}}));
}

TEST(Transforms, DualCounts) {
  const DualResult d = dual(cube());
  EXPECT_EQ(d.graph.vertex_count(), 6);
  EXPECT_EQ(d.graph.edge_count(), 12);
  EXPECT_EQ(sorted_lengths(d.graph), std::vector<int>(8, 3));
  EXPECT_TRUE(isomorphic_maps(d.graph, octahedron(), true));
  const DualResult p = dual(prism(6));
  EXPECT_EQ(p.graph.vertex_count(), 8);
  EXPECT_EQ(p.graph.edge_count(), 18);
  EXPECT_EQ(p.graph.face_count(), 12);
}

TEST(Transforms, DualOfDualIsIdentity) {
  for (const auto& n : fixtures::corpus()) EXPECT_TRUE(isomorphic_maps(dual(dual(n.graph).graph).graph, n.graph)) << n.name;
}

TEST(Transforms, DualMapsAreBijections) {
  const PlaneGraph g = prism(5);
  const DualResult d = dual(g);
  std::vector<DartId> darts = d.dart_map;
  std::sort(darts.begin(), darts.end());
  for (DartId x = 0; x < g.dart_count(); ++x) EXPECT_EQ(darts[x], x);
  std::vector<EdgeId> edges = d.edge_map;
  std::sort(edges.begin(), edges.end());
  for (EdgeId x = 0; x < g.edge_count(); ++x) EXPECT_EQ(edges[x], x);
}

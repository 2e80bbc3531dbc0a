#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace barnette;

namespace {

// A-trails by brute force: every euler circuit whose transitions all join
// rotation-adjacent darts, keyed by its transition system.
std::set<std::vector<DartId>> brute_a_trails(const PlaneGraph& h) {
  std::set<std::vector<DartId>> out;
  oracle::for_each_euler_circuit(h, [&](const std::vector<DartId>& seq) {
    const int m = static_cast<int>(seq.size());
    std::vector<DartId> partner(h.dart_count(), -1);
    for (int i = 0; i < m; ++i) {
      const DartId back = h.twin(seq[i]);
      const DartId next = seq[(i + 1) % m];
      if (h.rot_next(back) != next && h.rot_prev(back) != next) return;
      partner[back] = next;
      partner[next] = back;
    }
    out.insert(partner);
  });
  return out;
}

std::set<std::vector<DartId>> library_a_trails(const PlaneGraph& h) {
  std::set<std::vector<DartId>> out;
  for (const ATrail& t : find_a_trail(h, TrailMode::all)) {
    EXPECT_TRUE(is_a_trail(h, t));
    out.insert(partner_of_trail(h, t));
  }
  return out;
}

PlaneGraph contracted_cube() {
  const PlaneGraph g = cube();
  return contract_color_class(g, face_coloring(g, 3), 1).h;
}

}  // namespace

TEST(ATrail, EnumerationMatchesEulerCircuitFilter) {
  const std::vector<fixtures::Named> hosts{{"digons4", multi_edge(4)},
                                           {"digons6", multi_edge(6)},
                                           {"contracted_cube", contracted_cube()},
                                           {"octahedron", octahedron()},
                                           {"bipyramid6", bipyramid(6)}};
  for (const auto& n : hosts) {
    const auto brute = brute_a_trails(n.graph);
    EXPECT_FALSE(brute.empty()) << n.name;
    EXPECT_EQ(library_a_trails(n.graph), brute) << n.name;
  }
}

TEST(ATrail, CycleIsItsOwnATrail) {
  const PlaneGraph c = cycle_graph(5);
  EXPECT_TRUE(is_a_trail(c, c.face_darts(0)));
  const auto all = find_a_trail(c, TrailMode::all);
  EXPECT_EQ(all.size(), 1u);
}

TEST(ATrail, PerturbedTransitionIsRejected) {
  const PlaneGraph h = octahedron();
  const auto trails = find_a_trail(h, TrailMode::first);
  ASSERT_EQ(trails.size(), 1u);
  EXPECT_TRUE(is_a_trail(h, trails[0]));
  // Re-pair one vertex across its rotation so a transition crosses.
  std::vector<DartId> partner = partner_of_trail(h, trails[0]);
  const VertexId v = 0;
  const DartId a = h.dart_at(v, 0);
  const DartId b = h.dart_at(v, 2);
  const DartId pa = partner[a];
  const DartId pb = partner[b];
  partner[a] = b;
  partner[b] = a;
  partner[pa] = pb;
  partner[pb] = pa;
  const auto crossed = trail_from_partner(h, partner);
  if (crossed) EXPECT_FALSE(is_a_trail(h, *crossed));
}

TEST(ATrail, SequencesThatAreNotTrails) {
  const PlaneGraph h = octahedron();
  const ATrail t = find_a_trail(h, TrailMode::first).front();
  std::vector<DartId> short_seq(t.darts.begin(), t.darts.end() - 1);
  EXPECT_FALSE(is_a_trail(h, short_seq));
  std::vector<DartId> repeated = t.darts;
  repeated[1] = repeated[0];
  EXPECT_FALSE(is_a_trail(h, repeated));
  EXPECT_FALSE(is_a_trail(h, std::vector<DartId>{}));
}

TEST(ATrail, HostPreconditions) {
  EXPECT_THROW(find_a_trail(cube(), TrailMode::first), InputError);
  // Two triangles sharing a vertex: eulerian with a cut vertex.
  const PlaneGraph bowtie = parse_plane_graph("n 5\n0: 1 2 3 4\n1: 2 0\n2: 0 1\n3: 4 0\n4: 0 3\n");
  ASSERT_TRUE(is_eulerian(bowtie));
  EXPECT_THROW(find_a_trail(bowtie, TrailMode::first), InputError);
}

TEST(ATrail, LimitStopsEarly) {
  const PlaneGraph h = octahedron();
  EXPECT_EQ(find_a_trail(h, TrailMode::all, 3).size(), 3u);
}

TEST(ATrail, BudgetIsReported) {
  SearchBudget tiny;
  tiny.max_nodes = 2;
  EXPECT_THROW(find_a_trail(bipyramid(8), TrailMode::all, 0, tiny), BudgetExceeded);
}

TEST(NonSeparating, OctahedronCountIsTwiceCubeCycles) {
  const auto ns = find_a_trail(octahedron(), TrailMode::nonseparating_all);
  const auto hc = oracle::find_hc(cube(), {}, {}, oracle::HcMode::count);
  EXPECT_EQ(static_cast<std::int64_t>(ns.size()), 2 * hc.count);
}

TEST(NonSeparating, ClassifiesEveryOctahedronTrail) {
  const PlaneGraph h = octahedron();
  int separating = 0;
  for (const ATrail& t : find_a_trail(h, TrailMode::all)) {
    // Direct definition: some triangle has no two edges consecutive in the trail.
    std::set<std::pair<EdgeId, EdgeId>> consecutive;
    for (std::size_t i = 0; i < t.darts.size(); ++i) {
      const EdgeId a = h.edge_of(t.darts[i]);
      const EdgeId b = h.edge_of(t.darts[(i + 1) % t.darts.size()]);
      consecutive.insert({std::min(a, b), std::max(a, b)});
    }
    bool every_face = true;
    for (FaceId f = 0; f < h.face_count(); ++f) {
      const auto& ds = h.face_darts(f);
      bool hit = false;
      for (std::size_t i = 0; i < ds.size(); ++i) {
        const EdgeId a = h.edge_of(ds[i]);
        const EdgeId b = h.edge_of(ds[(i + 1) % ds.size()]);
        hit = hit || consecutive.count({std::min(a, b), std::max(a, b)});
      }
      every_face = every_face && hit;
    }
    EXPECT_EQ(is_non_separating(h, t), every_face);
    separating += !every_face;
  }
  EXPECT_GT(separating, 0);
}

TEST(NonSeparating, NeedsTriangulation) {
  const PlaneGraph h = multi_edge(4);
  const ATrail t = find_a_trail(h, TrailMode::first).front();
  EXPECT_THROW(is_non_separating(h, t), InputError);
}

TEST(APartition, SingleCycle) {
  const PlaneGraph c = cycle_graph(6);
  const FaceColoring col = face_coloring(c, 2);
  ASSERT_EQ(col.color[c.outer_face()], 1);
  const ATrail t = find_a_trail(c, TrailMode::first).front();
  const APartition p = a_partition(c, t, col);
  ASSERT_TRUE(p.consistent());
  // Every transition lies on both faces; the degree-2 convention picks the
  // face followed in the trail's direction.
  const int cls = p.side[0];
  for (VertexId v = 0; v < c.vertex_count(); ++v) EXPECT_EQ(p.side[v], cls);
}

TEST(APartition, SwappingColoursSwapsClasses) {
  for (const PlaneGraph& h : {contracted_cube(), octahedron(), bipyramid(6)}) {
    const FaceColoring col = face_coloring(h, 2);
    const FaceColoring swapped = permute_colors(col, {2, 1});
    for (const ATrail& t : find_a_trail(h, TrailMode::all, 20)) {
      const APartition p = a_partition(h, t, col);
      const APartition q = a_partition(h, t, swapped);
      ASSERT_TRUE(p.consistent());
      ASSERT_TRUE(q.consistent());
      EXPECT_EQ(p.members(1), q.members(2));
      EXPECT_EQ(p.members(2), q.members(1));
    }
  }
}

TEST(TrailFaceTree, ATrailToFaceTree) {
  for (const PlaneGraph& h : {contracted_cube(), octahedron(), bipyramid(6)}) {
    const FaceColoring col = face_coloring(h, 2);
    for (const ATrail& t : find_a_trail(h, TrailMode::all, 30)) {
      const FaceTree ft = atrail_to_qstf(h, t, col);
      EXPECT_TRUE(is_qstf(h, ft).ok);
      EXPECT_EQ(ft.faces, col.faces_of(2));
      // Back to the same transition system on H_T = h.
      const SubgraphTrail back = qstf_to_atrail(h, ft);
      EXPECT_EQ(partner_of_trail(h, ATrail{back.host_darts()}), partner_of_trail(h, t));
    }
  }
}

TEST(TrailFaceTree, NeedsMinimumDegreeFour) {
  const PlaneGraph c = cycle_graph(4);
  const ATrail t = find_a_trail(c, TrailMode::first).front();
  EXPECT_THROW(atrail_to_qstf(c, t, face_coloring(c, 2)), InputError);
}

TEST(TrailFaceTree, SingleFaceTreeIsBoundaryWalk) {
  const PlaneGraph c = cycle_graph(5);
  const FaceId inner = c.outer_face() == 0 ? 1 : 0;
  const FaceTree ft{{inner}, all_vertices(c)};
  const SubgraphTrail st = qstf_to_atrail(c, ft);
  EXPECT_EQ(st.trail.darts.size(), 5u);
  std::set<DartId> walk(c.face_darts(inner).begin(), c.face_darts(inner).end());
  const auto host = st.host_darts();
  const std::set<DartId> got(host.begin(), host.end());
  const std::set<DartId> reversed = [&] {
    std::set<DartId> r;
    for (DartId d : walk) r.insert(c.twin(d));
    return r;
  }();
  EXPECT_TRUE(got == walk || got == reversed);
}

TEST(TrailFaceTree, TwoFacesAtOneVertexMakeAFigureEight) {
  const PlaneGraph bowtie = parse_plane_graph("n 5\n0: 1 2 3 4\n1: 2 0\n2: 0 1\n3: 4 0\n4: 0 3\n");
  std::vector<FaceId> triangles;
  for (FaceId f = 0; f < bowtie.face_count(); ++f)
    if (f != bowtie.outer_face()) triangles.push_back(f);
  ASSERT_EQ(triangles.size(), 2u);
  const FaceTree ft{triangles, all_vertices(bowtie)};
  ASSERT_TRUE(is_qstf(bowtie, ft).ok);
  const SubgraphTrail st = qstf_to_atrail(bowtie, ft);
  ASSERT_EQ(st.trail.darts.size(), 6u);
  int through_centre = 0;
  for (DartId d : st.host_darts()) through_centre += bowtie.origin(d) == 0;
  EXPECT_EQ(through_centre, 2);
}

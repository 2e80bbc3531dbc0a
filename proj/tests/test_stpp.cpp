#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace barnette;

namespace {

std::vector<std::vector<int>> parity_trees(const StppInstance& inst) {
  oracle::EdgeList el;
  el.node_count = inst.vertex_count;
  el.edges = inst.edges;
  std::vector<std::vector<int>> found;
  oracle::count_spanning_trees_if(
      el,
      [&](const std::vector<int>& tree) {
        std::vector<char> in(inst.edges.size(), 0);
        for (int e : tree) in[e] = 1;
        for (const auto& [a, b] : inst.pairs)
          if (in[a] != in[b]) return false;
        return true;
      },
      &found);
  std::sort(found.begin(), found.end());
  return found;
}

StppInstance random_instance(std::mt19937_64& rng) {
  StppInstance inst;
  inst.vertex_count = 2 + static_cast<int>(rng() % 6);
  const int m = 1 + static_cast<int>(rng() % 14);
  for (int i = 0; i < m; ++i) {
    const int a = static_cast<int>(rng() % inst.vertex_count);
    int b = static_cast<int>(rng() % (inst.vertex_count - 1));
    if (b >= a) ++b;
    inst.edges.emplace_back(a, b);
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const int pairs = static_cast<int>(rng() % (m / 2 + 1));
  for (int i = 0; i < pairs; ++i) inst.pairs.emplace_back(order[2 * i], order[2 * i + 1]);
  return inst;
}

StppInstance triangle_with_pair() {
  // a=0 b=1 c=2; edges ab, bc, ac.
  return parse_stpp("v 3\ne 0 1\ne 1 2\ne 0 2\np 0 1\n");
}

}  // namespace

TEST(Stpp, TrianglePairIsTheOnlyTree) {
  const StppInstance inst = triangle_with_pair();
  EXPECT_EQ(parity_trees(inst), (std::vector<std::vector<int>>{{0, 1}}));
  const auto sol = solve_stpp(inst);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->edges, (std::vector<int>{0, 1}));
}

TEST(Stpp, NoPairsGivesLexicographicMinimum) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    StppInstance inst = random_instance(rng);
    inst.pairs.clear();
    const auto all = parity_trees(inst);
    const auto sol = solve_stpp(inst);
    ASSERT_EQ(sol.has_value(), !all.empty());
    if (sol) EXPECT_EQ(sol->edges, all.front());
  }
}

TEST(Stpp, FourCycleWithTwoPairsHasNoTree) {
  const StppInstance inst = parse_stpp("v 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\np 0 1\np 2 3\n");
  EXPECT_TRUE(parity_trees(inst).empty());
  EXPECT_FALSE(solve_stpp(inst));
}

TEST(Stpp, SingleVertexHasEmptyTree) {
  const auto sol = solve_stpp(parse_stpp("v 1\n"));
  ASSERT_TRUE(sol);
  EXPECT_TRUE(sol->edges.empty());
}

TEST(Stpp, RandomInstancesMatchEnumeration) {
  std::mt19937_64 rng(1234);
  int satisfiable = 0;
  for (int i = 0; i < 300; ++i) {
    const StppInstance inst = random_instance(rng);
    const auto all = parity_trees(inst);
    const auto sol = solve_stpp(inst);
    ASSERT_EQ(sol.has_value(), !all.empty()) << write_stpp(inst);
    if (!sol) continue;
    ++satisfiable;
    EXPECT_EQ(stpp_violation(inst, *sol), "");
    EXPECT_TRUE(std::binary_search(all.begin(), all.end(), sol->edges));
    // Free edges plus both edges of each chosen pair make V-1.
    std::vector<char> in(inst.edges.size(), 0);
    for (int e : sol->edges) in[e] = 1;
    int free_chosen = 0;
    for (int e : inst.free_edges()) free_chosen += in[e];
    int pairs_chosen = 0;
    for (auto [a, b] : inst.pairs) pairs_chosen += in[a] && in[b];
    EXPECT_EQ(free_chosen + 2 * pairs_chosen, inst.vertex_count - 1);
  }
  EXPECT_GT(satisfiable, 50);
  EXPECT_LT(satisfiable, 300);
}

TEST(Stpp, Deterministic) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 30; ++i) {
    const StppInstance inst = random_instance(rng);
    EXPECT_EQ(solve_stpp(inst), solve_stpp(inst));
  }
}

TEST(Stpp, BudgetIsReported) {
  StppInstance inst;
  inst.vertex_count = 8;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) inst.edges.emplace_back(a, b);
  SearchBudget tiny;
  tiny.max_nodes = 3;
  EXPECT_THROW(solve_stpp(inst, tiny), BudgetExceeded);
}

TEST(Stpp, ViolationMessages) {
  const StppInstance inst = triangle_with_pair();
  EXPECT_NE(stpp_violation(inst, {{0, 2}}), "");
  EXPECT_NE(stpp_violation(inst, {{0}}), "");
  EXPECT_NE(stpp_violation(inst, {{0, 0}}), "");
  EXPECT_NE(stpp_violation(inst, {{0, 7}}), "");
  EXPECT_EQ(stpp_violation(inst, {{0, 1}}), "");
}

TEST(StppText, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const StppInstance inst = random_instance(rng);
    EXPECT_EQ(parse_stpp(write_stpp(inst)), inst);
  }
}

TEST(StppText, MalformedInputs) {
  const std::vector<std::string> bad{
      "",                           // no vertex count
      "e 0 1\n",                    // no vertex count
      "v 2\ne 0 5\n",               // endpoint out of range
      "v 2\ne 0 1\np 0 3\n",        // missing edge
      "v 3\ne 0 1\ne 1 2\np 0 0\n", // pair with itself
      "v 3\ne 0 1\ne 1 2\ne 0 2\np 0 1\np 1 2\n",  // overlapping pairs
      "v 2\nx 0 1\n",               // unknown tag
      "v 2\ne 0 1 2\n",             // trailing text
  };
  for (const auto& text : bad) EXPECT_THROW(parse_stpp(text), InputError) << text;
}

TEST(ParityInstance, DigonsAreFreeEdges) {
  const PlaneGraph h = multi_edge(4);
  // Alternate digons so the cover is edge-disjoint.
  const std::vector<FaceId> d{h.face_of(h.dart_at(0, 0)), h.face_of(h.dart_at(0, 2))};
  const auto [inst, lift] = build_parity_instance(h, d);
  EXPECT_EQ(inst.vertex_count, 2);
  EXPECT_EQ(inst.edges.size(), 2u);
  EXPECT_TRUE(inst.pairs.empty());
  EXPECT_EQ(lift.face_of_edge.size(), 2u);
}

TEST(ParityInstance, OnePairPerTriangle) {
  const PlaneGraph h = octahedron();
  const FaceColoring col = face_coloring(h, 2);
  const auto d = col.faces_of(1);
  const auto [inst, lift] = build_parity_instance(h, d);
  EXPECT_EQ(inst.pairs.size(), d.size());
  EXPECT_EQ(inst.edges.size(), 2 * d.size());
  EXPECT_TRUE(inst.free_edges().empty());
  // Each pair shares an endpoint: two sides of one triangle.
  for (auto [a, b] : inst.pairs) {
    const auto [x, y] = inst.edges[a];
    const auto [u, v] = inst.edges[b];
    EXPECT_EQ(x, u);
    EXPECT_NE(y, v);
    EXPECT_EQ(lift.face_of_edge[a], lift.face_of_edge[b]);
  }
}

TEST(ParityInstance, Preconditions) {
  const PlaneGraph g = cube();
  EXPECT_THROW(build_parity_instance(g, {0}), InputError);  // quadrilateral
  const PlaneGraph h = octahedron();
  // Two triangles sharing an edge.
  const DartId d = h.dart_at(0, 0);
  EXPECT_THROW(build_parity_instance(h, {h.face_of(d), h.face_of(h.twin(d))}), InputError);
  // A cover missing vertices.
  EXPECT_THROW(build_parity_instance(h, {h.face_of(d)}), InputError);
}

TEST(ParityInstance, SatisfiableIffFaceTreeExists) {
  std::vector<std::pair<std::string, PlaneGraph>> hosts{{"octahedron", octahedron()}, {"bipyramid6", bipyramid(6)}};
  for (const auto& n : fixtures::barnette_corpus(16)) {
    const FaceColoring c = face_coloring(n.graph, 3);
    for (int cls : {1, 2, 3}) hosts.emplace_back(n.name + "/" + std::to_string(cls), contract_color_class(n.graph, c, cls).h);
  }
  int compared = 0;
  int satisfiable = 0;
  for (const auto& [name, h] : hosts) {
    const FaceColoring col = face_coloring(h, 2);
    for (int cls : {1, 2}) {
      const auto d = col.faces_of(cls);
      bool small = true;
      for (FaceId f : d) small = small && h.face_length(f) <= 3;
      if (!small) continue;
      const auto [inst, lift] = build_parity_instance(h, d);
      const auto sol = solve_stpp(inst);
      // The oracle drops the outer face, so compare with the outer face outside d.
      if (std::find(d.begin(), d.end(), h.outer_face()) != d.end()) continue;
      const auto trees = oracle::enumerate_face_trees(h, d, false);
      EXPECT_EQ(sol.has_value(), !trees.empty()) << name << " class " << cls;
      ++compared;
      if (!sol) continue;
      ++satisfiable;
      const FaceTree ft = parity_tree_to_face_tree(h, inst, lift, *sol);
      EXPECT_TRUE(is_qstf(h, ft).ok) << name;
      EXPECT_EQ(ft.proper, all_vertices(h));
      EXPECT_EQ(face_tree_to_parity_tree(lift, ft), *sol) << name;
    }
  }
  std::cout << compared << " covers compared, " << satisfiable << " satisfiable\n";
  EXPECT_GE(compared, 15);
}

TEST(ParityInstance, FaceTreeRoundTrip) {
  const PlaneGraph h = bipyramid(6);
  const FaceColoring col = face_coloring(h, 2);
  std::vector<FaceId> d = col.faces_of(1);
  if (std::find(d.begin(), d.end(), h.outer_face()) != d.end()) d = col.faces_of(2);
  const auto [inst, lift] = build_parity_instance(h, d);
  for (const auto& t : oracle::enumerate_face_trees(h, d, false)) {
    FaceTree ft{t.faces, t.proper};
    ft.canonicalize();
    const StppSolution sol = face_tree_to_parity_tree(lift, ft);
    EXPECT_EQ(stpp_violation(inst, sol), "");
    EXPECT_EQ(parity_tree_to_face_tree(h, inst, lift, sol), ft);
  }
}

TEST(ParityInstance, InvalidSolutionIsRejected) {
  const PlaneGraph h = octahedron();
  const auto d = face_coloring(h, 2).faces_of(1);
  const auto [inst, lift] = build_parity_instance(h, d);
  EXPECT_THROW(parity_tree_to_face_tree(h, inst, lift, StppSolution{{0}}), InputError);
}

TEST(DecideCr2, CubeEveryClass) {
  const PlaneGraph g = cube();
  for (const FaceColoring& c : colorings_with_outer_3(g)) {
    const Cr2Run run = decide_cr2(g, c);
    ASSERT_TRUE(run.cycle);
    EXPECT_TRUE(is_hamiltonian_cycle(g, run.cycle->cycle));
    ASSERT_TRUE(run.tree);
  }
}

TEST(DecideCr2, HexagonalPrismWithHexagonsAsOneFaces) {
  const PlaneGraph g = prism(6);
  bool tried = false;
  for (const FaceColoring& c : colorings_with_outer_3(g)) {
    const auto ones = c.faces_of(1);
    if (ones.size() != 2 || g.face_length(ones[0]) != 6 || g.face_length(ones[1]) != 6) continue;
    tried = true;
    const Cr2Run run = decide_cr2(g, c);
    ASSERT_TRUE(run.cycle);
    EXPECT_TRUE(is_hamiltonian_cycle(g, run.cycle->cycle));
  }
  EXPECT_TRUE(tried);
}

TEST(DecideCr2, CycleKeepsTwoFacesInside) {
  for (const auto& n : fixtures::barnette_corpus(16)) {
    for (const FaceColoring& c : colorings_with_outer_3(n.graph)) {
      bool fits = true;
      for (FaceId f : c.faces_of(1)) fits = fits && (n.graph.face_length(f) == 4 || n.graph.face_length(f) == 6);
      if (!fits) continue;
      const Cr2Run run = decide_cr2(n.graph, c);
      if (!run.cycle) continue;
      for (FaceId f : c.faces_of(2)) EXPECT_EQ(run.cycle->side[f], Side::inside) << n.name;
      for (FaceId f : c.faces_of(3)) EXPECT_EQ(run.cycle->side[f], Side::outside) << n.name;
    }
  }
}

TEST(DecideCr2, Preconditions) {
  const PlaneGraph g = prism(8);
  for (const FaceColoring& c : colorings_with_outer_3(g)) {
    const auto ones = c.faces_of(1);
    if (std::any_of(ones.begin(), ones.end(), [&](FaceId f) { return g.face_length(f) == 8; })) {
      EXPECT_THROW(decide_cr2(g, c), InputError);
      return;
    }
  }
  FAIL() << "no colouring with octagons as 1-faces";
}

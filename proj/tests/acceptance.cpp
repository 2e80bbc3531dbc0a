// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "fixtures.hpp"

using namespace barnette;
using fixtures::Named;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int number;
  const char* title;
  double seconds_limit;  // 0: no limit
  std::function<Verdict()> run;
};

Verdict fail(const std::string& why) { return {false, why}; }

// 1 ---------------------------------------------------------------------------

Verdict embedding_core() {
  const auto corpus = fixtures::corpus();
  if (corpus.size() != 30) return fail("corpus has " + std::to_string(corpus.size()) + " graphs");
  for (const Named& n : corpus) {
    const PlaneGraph& g = n.graph;
    if (g.vertex_count() - g.edge_count() + g.face_count() != 2) return fail(n.name + ": Euler formula");
    int degrees = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) degrees += g.degree(v);
    if (degrees != 2 * g.edge_count()) return fail(n.name + ": degree sum");
    if (all_faces_even(g) != is_bipartite(g)) return fail(n.name + ": face parity vs bipartiteness");
    if (!isomorphic_maps(dual(dual(g).graph).graph, g)) return fail(n.name + ": dual of dual");
  }
  return {true, "30 graphs"};
}

// 2 ---------------------------------------------------------------------------

Verdict dual_trail_check() {
  std::ostringstream out;
  for (const Named& n : fixtures::barnette_corpus(24)) {
    const DualTrailReport r = check_dual_trails(n.graph, false);
    if (!r.agrees()) return fail(n.name + ": hamiltonian and non-separating trail disagree");
    out << n.name << "=" << (r.hamiltonian ? "ham " : "non-ham ");
  }
  return {true, out.str()};
}

// 3 ---------------------------------------------------------------------------

Verdict four_forms_check() {
  int checked = 0;
  for (const Named& n : fixtures::barnette_corpus(24)) {
    for (const FaceColoring& c : colorings_with_outer_3(n.graph)) {
      const FormsReport r = check_forms(n.graph, c);
      if (!r.agrees()) {
        std::string e;
        for (bool b : r.exists) e += b ? '1' : '0';
        return fail(n.name + ": forms " + e + (r.converted ? "" : ", conversion failed"));
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " coloured graphs"};
}

// 4 ---------------------------------------------------------------------------

Verdict face_tree_cycle_check() {
  std::ostringstream out;
  const std::vector<Named> hosts{{"cube", cube()}, {"prism6", prism(6)}, {"leapfrog_cube", leapfrog(cube()).graph}};
  for (const Named& n : hosts) {
    const FaceColoring c = face_coloring(n.graph, 3);
    for (int q = 1; q <= 3; ++q) {
      const BijectionReport r = check_face_tree_bijection(contract_color_class(n.graph, c, q));
      if (!r.agrees())
        return fail(n.name + "/" + std::to_string(q) + ": " + std::to_string(r.face_trees) + " trees vs " +
                    std::to_string(r.constrained_cycles) + " cycles" + (r.inverse ? "" : ", not inverse"));
      out << n.name << "/" << q << "=" << r.face_trees << " ";
    }
  }
  return {true, out.str()};
}

// 5 ---------------------------------------------------------------------------

StppInstance random_stpp(std::mt19937_64& rng) {
  StppInstance inst;
  inst.vertex_count = 2 + static_cast<int>(rng() % 7);
  const int m = 1 + static_cast<int>(rng() % 16);
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

/// Spanning trees containing both or neither edge of every pair.
std::int64_t parity_tree_count(const StppInstance& inst) {
  oracle::EdgeList el;
  el.node_count = inst.vertex_count;
  for (const auto& e : inst.edges) el.edges.push_back(e);
  return oracle::count_spanning_trees_if(el, [&](const std::vector<int>& tree) {
    std::vector<char> in(inst.edges.size(), 0);
    for (int e : tree) in[e] = 1;
    for (const auto& [a, b] : inst.pairs)
      if (in[a] != in[b]) return false;
    return true;
  });
}

struct Cr2Fixture {
  std::string name;
  PlaneGraph graph;
  FaceColoring coloring;
};

/// Barnette corpus graphs with every colouring whose 1-faces have length 4
/// or 6, rooted at each 3-face in turn.
std::vector<Cr2Fixture> cr2_fixtures(std::size_t count) {
  std::vector<Cr2Fixture> out;
  for (const Named& n : fixtures::barnette_corpus(24)) {
    for (const FaceColoring& c : colorings_with_outer_3(n.graph)) {
      bool fits = true;
      for (FaceId f : c.faces_of(1)) fits = fits && (n.graph.face_length(f) == 4 || n.graph.face_length(f) == 6);
      if (!fits) continue;
      for (FaceId root : c.faces_of(3)) {
        if (out.size() == count) return out;
        out.push_back({n.name + "@" + std::to_string(root), n.graph.with_outer_face(root), c});
      }
    }
  }
  return out;
}

Verdict parity_tree_check() {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 200; ++i) {
    const StppInstance inst = random_stpp(rng);
    const auto sol = solve_stpp(inst);
    const bool exists = parity_tree_count(inst) > 0;
    if (sol.has_value() != exists) return fail("stpp instance " + std::to_string(i) + ": solver disagrees");
    if (sol && !stpp_violation(inst, *sol).empty()) return fail("stpp instance " + std::to_string(i) + ": bad tree");
  }
  const auto fx = cr2_fixtures(50);
  if (fx.size() != 50) return fail("only " + std::to_string(fx.size()) + " degree-{4,6} fixtures");
  int yes = 0;
  for (const auto& f : fx) {
    const Cr2Run run = decide_cr2(f.graph, f.coloring);
    const ReducedGraph& rg = run.forms.by_2_faces;
    std::vector<FaceId> ones;
    for (FaceId x : f.coloring.faces_of(1)) ones.push_back(rg.h_face_of[x]);
    const bool exhaustive = !oracle::enumerate_face_trees(rg.h, ones, false).empty();
    if (run.cycle.has_value() != exhaustive) return fail(f.name + ": decide_cr2 disagrees with face-tree search");
    if (run.cycle && !is_hamiltonian_cycle(f.graph, run.cycle->cycle)) return fail(f.name + ": bad cycle");
    yes += run.cycle.has_value();
  }
  return {true, "200 STPP instances, 50 fixtures (" + std::to_string(yes) + " hamiltonian)"};
}

// 6 ---------------------------------------------------------------------------

Verdict leapfrog_check() {
  int lifted = 0;
  for (const Named& n : fixtures::barnette_corpus(20)) {
    const LfIdentity id = lf_identity_check(n.graph);
    if (!id.ok()) return fail(n.name + ": no isomorphism: " + id.witness);
    const FaceColoring colors = leapfrog_coloring(n.graph, id.lf);
    for (const auto& cycle : oracle::find_hc(n.graph, {}, {}, oracle::HcMode::all).cycles) {
      const HamCycleWithSides up = hc_lift_leapfrog(n.graph, id.lf, colors, cycle);
      const std::string bad = detail::leapfrog_side_violation(n.graph, id.lf, colors, up);
      if (!bad.empty()) return fail(n.name + ": side audit: " + bad);
      if (hc_project_leapfrog(n.graph, id.lf, colors, up) != cycle) return fail(n.name + ": round trip");
      ++lifted;
    }
  }
  return {true, std::to_string(lifted) + " cycles lifted"};
}

// 7 ---------------------------------------------------------------------------

Verdict path_tree_check() {
  std::ostringstream out;
  const std::vector<Named> sources{{"k4", k4()}, {"cube", cube()}, {"prism3", prism(3)}};
  for (const Named& n : sources) {
    for (EdgeId e = 0; e < n.graph.edge_count(); ++e) {
      const Th4Artifacts a = build_th4_instance(n.graph, e);
      const auto paths = oracle::enumerate_ham_paths(oracle::EdgeList::of(a.g0p.graph), a.u, a.v);
      const auto trees = oracle::enumerate_face_trees(a.h, a.h_color.faces_of(2), false);
      const std::string at = n.name + " edge " + std::to_string(e);
      if (paths.size() != trees.size())
        return fail(at + ": " + std::to_string(paths.size()) + " paths vs " + std::to_string(trees.size()) + " trees");
      if (n.name == "k4" && paths.size() != 2) return fail(at + ": expected 2 paths");
      for (const auto& p : paths)
        if (claim1_backward(a, claim1_forward(a, p.edges)) != normalized(p.edges)) return fail(at + ": path round trip");
      for (const auto& t : trees) {
        const FaceTree ft{t.faces, t.proper};
        if (claim1_forward(a, claim1_backward(a, ft)) != ft) return fail(at + ": tree round trip");
      }
      if (e == 0) out << n.name << "=" << paths.size() << " ";
    }
  }
  return {true, out.str()};
}

// 8 ---------------------------------------------------------------------------

Verdict gadget_chain_check() {
  const Th4Artifacts a = build_th4_instance(k4(), 0);
  const Cor3Instance c3 = build_cor3_instance(a);
  const PlaneGraph& hp = c3.hp();
  if (!is_regular(hp, 8) || hp.vertex_count() != 5 || hp.edge_count() != 20)
    return fail("hp has " + std::to_string(hp.vertex_count()) + " vertices and " + std::to_string(hp.edge_count()) +
                " edges");
  const auto trails = find_a_trail(hp, TrailMode::all);
  const auto trees = oracle::enumerate_face_trees(a.h, a.h_color.faces_of(2), false);
  const Cor4Instance c4 = build_cor4_instance(a);
  std::vector<FaceId> h0_faces(c4.h0().face_count());
  std::iota(h0_faces.begin(), h0_faces.end(), 0);
  const auto h0_tree = find_face_tree(c4.h0(), h0_faces, FaceTreeMode::spanning);
  if (trails.empty() != trees.empty() || trees.empty() != !h0_tree.has_value())
    return fail("existence differs: trails " + std::to_string(trails.size()) + ", h trees " +
                std::to_string(trees.size()) + ", h0 tree " + (h0_tree ? "yes" : "no"));
  for (const auto& t : trees) {
    const FaceTree ft{t.faces, t.proper};
    if (cor3_trail_to_tree(a, c3, cor3_tree_to_trail(a, c3, ft)) != ft) return fail("cor3 round trip");
    if (cor4_backward(a, c4, cor4_forward(a, c4, ft)) != ft) return fail("cor4 round trip");
  }
  for (const auto& tr : trails)
    if (!is_qstf(a.h, cor3_trail_to_tree(a, c3, tr)).ok) return fail("A-trail of hp did not give a tree of h");
  return {true, "hp V5 E20, " + std::to_string(trails.size()) + " A-trails, " + std::to_string(trees.size()) +
                    " trees of h, tree of h0 found"};
}

// 9 ---------------------------------------------------------------------------

Verdict goodey() {
  std::vector<Named> family{{"cube", cube()}, {"prism6", prism(6)}};
  for (int depth = 1; depth <= 2; ++depth) {
    family.push_back({"tower_cube_" + std::to_string(depth), leapfrog_tower(cube(), depth)});
    family.push_back({"tower_prism6_" + std::to_string(depth), leapfrog_tower(prism(6), depth)});
  }
  int checked = 0;
  for (const Named& n : family) {
    if (n.graph.vertex_count() > 72) continue;
    if (!is_goodey(n.graph)) return fail(n.name + " is not in the Goodey class");
    if (oracle::find_hc(n.graph).count == 0) return fail(n.name + " not hamiltonian");
    ++checked;
  }
  return {true, std::to_string(checked) + " graphs up to 72 vertices"};
}

// 10 --------------------------------------------------------------------------

Verdict catalog() {
  const Catalog cat = read_catalog(std::string(BARNETTE_DATA_DIR) + "/catalog");
  int checked = 0;
  for (const auto& [name, g] : cat.graphs) {
    if (g.vertex_count() > 24) continue;
    if (oracle::find_hc(g).count == 0) return fail(name + " not hamiltonian");
    ++checked;
  }
  if (checked == 0) return fail("empty catalog");
  return {true, std::to_string(checked) + " ingested, " + std::to_string(cat.rejected.size()) + " rejected"};
}

// 11 --------------------------------------------------------------------------

Verdict two_cut_check() {
  struct TwoCut {
    std::string name;
    PlaneGraph graph;
    EdgeSet forced;
  };
  const TwoCutJoin cc = join_by_2cut(cube(), 0, cube(), 0);
  const TwoCutJoin cp = join_by_2cut(cube(), 5, prism(6), 2);
  const TwoCutJoin ccc = join_by_2cut(cc.graph, cc.cut.first, cube(), 3);
  const TwoCutJoin chain = join_by_2cut(cp.graph, 0, cube(), 7);
  std::vector<TwoCut> cases{{"cube+cube", cc.graph, {}},
                            {"cube+prism6", cp.graph, {}},
                            {"three cubes", ccc.graph, {}},
                            {"chain", chain.graph, {}}};
  // Forcing every edge of a face makes a short cycle, so no hamiltonian
  // cycle exists on either side.
  const PlaneGraph& g = ccc.graph;
  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (f == g.outer_face() || g.face_length(f) != 4) continue;
    EdgeSet square;
    for (DartId d : g.face_darts(f)) square.push_back(g.edge_of(d));
    cases.push_back({"three cubes, square forced", g, normalized(square)});
    break;
  }
  cases.push_back({"three cubes, cut forced", g, normalized({ccc.cut.first, ccc.cut.second})});
  int yes = 0, no = 0;
  for (const TwoCut& c : cases) {
    const DecompositionResult d = decompose_2cuts(c.graph, c.forced);
    if (d.components.size() < 2) return fail(c.name + ": no 2-cut found");
    const bool whole = oracle::find_hc(c.graph, c.forced, {}, oracle::HcMode::first).count > 0;
    bool parts = true;
    for (const auto& comp : d.components)
      parts = parts && oracle::find_hc(comp.graph, comp.forced, {}, oracle::HcMode::first).count > 0;
    if (whole != parts) return fail(c.name + ": whole " + (whole ? "yes" : "no") + ", parts " + (parts ? "yes" : "no"));
    (whole ? yes : no) += 1;
    if (c.forced.empty() && !thm6_pipeline(c.graph).verify(c.graph).agrees()) return fail(c.name + ": pipeline");
  }
  if (yes == 0 || no == 0) return fail("fixtures do not exercise both directions");
  return {true, std::to_string(yes) + " hamiltonian, " + std::to_string(no) + " not"};
}

// 12 --------------------------------------------------------------------------

Verdict triangulation_check() {
  std::ostringstream out;
  for (const Named& n : fixtures::eulerian_triangulations()) {
    if (!is_eulerian(n.graph) || !is_k_connected(n.graph, 4)) return fail(n.name + " is not a 4-connected eulerian");
    std::vector<FaceId> faces(n.graph.face_count());
    std::iota(faces.begin(), faces.end(), 0);
    const auto ft = find_face_tree(n.graph, faces, FaceTreeMode::quasi);
    if (!ft) return fail(n.name + ": no quasi spanning tree of faces");
    if (!is_qstf(n.graph, *ft).ok) return fail(n.name + ": returned tree is invalid");
    out << n.name << " ";
  }
  return {true, out.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "embedding core", 1, embedding_core},
      {2, "dual non-separating A-trails", 300, dual_trail_check},
      {3, "four forms of a hamiltonian cycle", 600, four_forms_check},
      {4, "face trees and constrained cycles", 0, face_tree_cycle_check},
      {5, "parity trees", 300, parity_tree_check},
      {6, "leapfrog lift and projection", 0, leapfrog_check},
      {7, "paths and spanning trees of 2-faces", 120, path_tree_check},
      {8, "8-regular and digon-triangle instances", 0, gadget_chain_check},
      {9, "Goodey class fixtures", 600, goodey},
      {10, "catalog", 0, catalog},
      {11, "2-edge-cut recomposition", 0, two_cut_check},
      {12, "4-connected eulerian triangulations", 0, triangulation_check},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.pass && c.seconds_limit > 0 && secs > c.seconds_limit)
      v = fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.seconds_limit) + " s");
    std::printf("criterion %2d %s: %s (%.2f s) %s\n", c.number, c.title, v.pass ? "PASS" : "FAIL", secs,
                v.detail.c_str());
    std::fflush(stdout);
    failures += !v.pass;
  }
  return failures == 0 ? 0 : 1;
}

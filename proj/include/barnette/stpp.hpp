#pragma once

// Spanning trees with parity constraints: given a multigraph and disjoint
// pairs of edges, find a spanning tree containing both or neither edge of
// every pair. Spanning trees of digon and triangle faces reduce to it, which
// gives a decision procedure for cubic bipartite graphs whose 1-faces are
// quadrilaterals and hexagons.

#include <istream>
#include <sstream>

#include "barnette/face_trees.hpp"

namespace barnette {

struct StppInstance {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> pairs;  // edge indices

  std::vector<int> free_edges() const {
    std::vector<char> paired(edges.size(), 0);
    for (auto [a, b] : pairs) paired[a] = paired[b] = 1;
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
      if (!paired[e]) out.push_back(e);
    return out;
  }

  void validate() const {
    require(vertex_count >= 1, "instance needs at least one vertex");
    for (auto [a, b] : edges)
      require(a >= 0 && a < vertex_count && b >= 0 && b < vertex_count, "edge endpoint out of range");
    std::vector<char> used(edges.size(), 0);
    for (auto [a, b] : pairs) {
      require(a >= 0 && a < static_cast<int>(edges.size()) && b >= 0 && b < static_cast<int>(edges.size()),
              "pair refers to a missing edge");
      require(a != b && !used[a] && !used[b], "pairs must be disjoint");
      used[a] = used[b] = 1;
    }
  }

  friend bool operator==(const StppInstance&, const StppInstance&) = default;
};

struct StppSolution {
  std::vector<int> edges;  // sorted edge indices of the spanning tree
  friend bool operator==(const StppSolution&, const StppSolution&) = default;
};

/// Text form:
///   v <vertex count>
///   e <a> <b>        one line per edge, in index order
///   p <i> <j>        one line per pair of edge indices
/// Blank lines and lines starting with '#' are ignored.
inline StppInstance parse_stpp(const std::string& text) {
  StppInstance inst;
  bool have_count = false;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      throw InputError("stpp line " + std::to_string(line_no) + ": " + why);
    };
    int a = 0;
    int b = 0;
    if (tag == "v") {
      if (!(ls >> a)) fail("expected a vertex count");
      inst.vertex_count = a;
      have_count = true;
    } else if (tag == "e" || tag == "p") {
      if (!(ls >> a >> b)) fail("expected two integers");
      (tag == "e" ? inst.edges : inst.pairs).emplace_back(a, b);
    } else {
      fail("unknown tag '" + tag + "'");
    }
    std::string rest;
    if (ls >> rest) fail("trailing text '" + rest + "'");
  }
  if (!have_count) throw InputError("stpp: missing vertex count line");
  inst.validate();
  return inst;
}

inline std::string write_stpp(const StppInstance& inst) {
  std::ostringstream out;
  out << "v " << inst.vertex_count << "\n";
  for (auto [a, b] : inst.edges) out << "e " << a << " " << b << "\n";
  for (auto [a, b] : inst.pairs) out << "p " << a << " " << b << "\n";
  return out.str();
}

/// Empty string when `sol` is a spanning tree meeting every pair in 0 or 2
/// edges.
inline std::string stpp_violation(const StppInstance& inst, const StppSolution& sol) {
  const int n = inst.vertex_count;
  if (static_cast<int>(sol.edges.size()) != n - 1)
    return "tree has " + std::to_string(sol.edges.size()) + " edges, expected " + std::to_string(n - 1);
  std::vector<char> chosen(inst.edges.size(), 0);
  detail::RollbackDsu dsu(n);
  for (int e : sol.edges) {
    if (e < 0 || e >= static_cast<int>(inst.edges.size())) return "edge index " + std::to_string(e) + " out of range";
    if (chosen[e]) return "edge " + std::to_string(e) + " listed twice";
    chosen[e] = 1;
    if (!dsu.unite(inst.edges[e].first, inst.edges[e].second)) return "edge " + std::to_string(e) + " closes a cycle";
  }
  for (auto [a, b] : inst.pairs)
    if (chosen[a] != chosen[b])
      return "pair {" + std::to_string(a) + "," + std::to_string(b) + "} is split";
  return {};
}

/// Exact branch and bound over units (free edges and whole pairs) in order
/// of their lowest edge index, inclusion first; the first solution found is
/// returned. Prunes on cycles, on the edge count V-1 and on connectivity of
/// the chosen plus undecided units.
inline std::optional<StppSolution> solve_stpp(const StppInstance& inst, const SearchBudget& budget = {}) {
  inst.validate();
  BudgetMeter meter(budget);
  const int n = inst.vertex_count;
  std::vector<std::vector<int>> units;
  std::vector<char> paired(inst.edges.size(), 0);
  for (auto [a, b] : inst.pairs) {
    units.push_back({std::min(a, b), std::max(a, b)});
    paired[a] = paired[b] = 1;
  }
  for (int e = 0; e < static_cast<int>(inst.edges.size()); ++e)
    if (!paired[e]) units.push_back({e});
  std::sort(units.begin(), units.end());
  const int k = static_cast<int>(units.size());
  // edges still available from unit i onwards
  std::vector<int> supply(k + 1, 0);
  for (int i = k - 1; i >= 0; --i) supply[i] = supply[i + 1] + static_cast<int>(units[i].size());

  detail::RollbackDsu dsu(n);
  std::vector<int> chosen;
  std::optional<StppSolution> found;
  auto connectable = [&](int from) {
    detail::RollbackDsu reach = dsu;
    int parts = 0;
    for (int x = 0; x < n; ++x) parts += reach.find(x) == x;
    for (int i = from; i < k && parts > 1; ++i)
      for (int e : units[i])
        if (reach.unite(inst.edges[e].first, inst.edges[e].second)) --parts;
    return parts == 1;
  };
  std::function<bool(int)> visit = [&](int i) -> bool {
    meter.tick();
    const int have = static_cast<int>(chosen.size());
    if (have == n - 1) {
      StppSolution sol{chosen};
      std::sort(sol.edges.begin(), sol.edges.end());
      found = sol;
      return true;
    }
    if (i == k || have + supply[i] < n - 1 || !connectable(i)) return false;
    const auto& unit = units[i];
    if (have + static_cast<int>(unit.size()) <= n - 1) {
      const std::size_t mark = dsu.mark();
      bool acyclic = true;
      for (int e : unit) acyclic = acyclic && dsu.unite(inst.edges[e].first, inst.edges[e].second);
      if (acyclic) {
        chosen.insert(chosen.end(), unit.begin(), unit.end());
        if (visit(i + 1)) return true;
        chosen.resize(have);
      }
      dsu.rollback(mark);
    }
    return visit(i + 1);
  };
  if (n == 1) return StppSolution{};
  visit(0);
  if (found) {
    const std::string violation = stpp_violation(inst, *found);
    if (!violation.empty()) throw InternalError("solver returned an invalid tree: " + violation);
  }
  return found;
}

// ---------------------------------------------------------------------------
// Spanning trees of digon and triangle faces

struct ParityLift {
  std::vector<FaceId> faces;         // the face cover, as given
  std::vector<FaceId> face_of_edge;  // instance edge -> face it represents
};

/// Instance vertices are h's vertices. A digon xy becomes the free edge xy;
/// a triangle becomes the pair of its two edges at its lowest vertex.
inline std::pair<StppInstance, ParityLift> build_parity_instance(const PlaneGraph& h, const std::vector<FaceId>& d) {
  StppInstance inst;
  inst.vertex_count = h.vertex_count();
  ParityLift lift;
  lift.faces = d;
  std::vector<char> covered(h.vertex_count(), 0);
  std::vector<FaceId> owner(h.edge_count(), -1);
  for (FaceId f : d) {
    require(f >= 0 && f < h.face_count(), "face id out of range");
    const auto darts = h.face_darts(f);
    for (DartId x : darts) {
      const EdgeId e = h.edge_of(x);
      require(owner[e] == -1, "faces " + std::to_string(owner[e]) + " and " + std::to_string(f) + " share an edge");
      owner[e] = f;
      covered[h.origin(x)] = 1;
    }
    const std::vector<VertexId> vs = h.face_vertices(f);
    if (vs.size() == 2) {
      inst.edges.emplace_back(vs[0], vs[1]);
      lift.face_of_edge.push_back(f);
    } else if (vs.size() == 3) {
      const int low = static_cast<int>(std::min_element(vs.begin(), vs.end()) - vs.begin());
      const VertexId m = vs[low];
      const int e0 = static_cast<int>(inst.edges.size());
      inst.edges.emplace_back(m, vs[(low + 1) % 3]);
      inst.edges.emplace_back(m, vs[(low + 2) % 3]);
      inst.pairs.emplace_back(e0, e0 + 1);
      lift.face_of_edge.push_back(f);
      lift.face_of_edge.push_back(f);
    } else {
      throw InputError("face " + std::to_string(f) + " has " + std::to_string(vs.size()) +
                       " sides; only digons and triangles reduce to parity trees");
    }
  }
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    require(covered[v] != 0, "vertex " + std::to_string(v) + " lies on no face of the cover");
  return {inst, lift};
}

/// T = faces whose edges the tree uses, U = V(h).
inline FaceTree parity_tree_to_face_tree(const PlaneGraph& h, const StppInstance& inst, const ParityLift& lift,
                                         const StppSolution& sol) {
  const std::string violation = stpp_violation(inst, sol);
  require(violation.empty(), "not a parity spanning tree: " + violation);
  FaceTree ft;
  for (int e : sol.edges) ft.faces.push_back(lift.face_of_edge[e]);
  ft.proper = all_vertices(h);
  ft.canonicalize();
  const QstfCheck check = is_qstf(h, ft);
  if (!check) throw InternalError("parity tree did not lift to a spanning tree of faces: " + check.failure);
  return ft;
}

/// The inverse direction: every face of the tree contributes its instance
/// edges.
inline StppSolution face_tree_to_parity_tree(const ParityLift& lift, const FaceTree& ft) {
  StppSolution sol;
  for (int e = 0; e < static_cast<int>(lift.face_of_edge.size()); ++e)
    if (std::binary_search(ft.faces.begin(), ft.faces.end(), lift.face_of_edge[e])) sol.edges.push_back(e);
  return sol;
}

// ---------------------------------------------------------------------------
// Decision for 1-faces of length 4 or 6

struct Cr2Run {
  ColoredBarnette forms;
  StppInstance instance;
  ParityLift lift;
  std::optional<FaceTree> tree;             // spanning tree of 1-faces of G/2-faces
  std::optional<HamCycleWithSides> cycle;   // 2-faces inside, 3-faces outside
};

/// In G/2-faces every 1-face of length 4 or 6 is a digon or a triangle, so a
/// spanning tree of 1-faces is a parity spanning tree; a solution converts
/// to a hamiltonian cycle with the 2-faces inside.
inline Cr2Run decide_cr2(const PlaneGraph& g, const FaceColoring& c, const SearchBudget& budget = {}) {
  require(is_barnette(g), "decision needs a Barnette graph");
  for (FaceId f : c.faces_of(1))
    require(g.face_length(f) == 4 || g.face_length(f) == 6,
            "1-face " + std::to_string(f) + " has length " + std::to_string(g.face_length(f)) + ", expected 4 or 6");
  Cr2Run run{prepare_forms(g, c), {}, {}, std::nullopt, std::nullopt};
  const ReducedGraph& rg = run.forms.by_2_faces;
  std::vector<FaceId> ones;
  for (FaceId f : c.faces_of(1)) ones.push_back(rg.h_face_of[f]);
  std::sort(ones.begin(), ones.end());
  std::tie(run.instance, run.lift) = build_parity_instance(rg.h, ones);
  const auto sol = solve_stpp(run.instance, budget);
  if (!sol) return run;
  run.tree = parity_tree_to_face_tree(rg.h, run.instance, run.lift, *sol);
  run.cycle = std::get<HamCycleWithSides>(thm2_convert(run.forms, Form::tree_mod_2, SpanningFaceTree{*run.tree}, Form::cycle));
  return run;
}

}  // namespace barnette

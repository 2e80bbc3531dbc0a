#pragma once

// Face-tree search, the correspondence between quasi spanning trees of
// faces of G/Q and hamiltonian cycles of G, and converters between the four
// equivalent forms for 3-face-coloured cubic bipartite graphs.

#include <variant>

#include "barnette/atrails.hpp"
#include "barnette/budget.hpp"
#include "barnette/transforms.hpp"

namespace barnette {

// ---------------------------------------------------------------------------
// Search

enum class FaceTreeMode { spanning, quasi };

namespace detail {

// Best proper-vertex set for a fixed T in quasi mode: every vertex whose
// T-count differs from deg/2 is proper, vertices on one face of T are always
// proper, and the rest are chosen to make R(U,T) a tree with |U| maximal.
inline std::optional<std::vector<VertexId>> best_proper_set(const PlaneGraph& h, const std::vector<FaceId>& t,
                                                            const std::vector<int>& hits, BudgetMeter& meter) {
  const int n = h.vertex_count();
  std::vector<int> face_index(h.face_count(), -1);
  for (int i = 0; i < static_cast<int>(t.size()); ++i) face_index[t[i]] = i;
  std::vector<std::vector<int>> faces_at(n);
  for (FaceId f : t)
    for (VertexId x : h.face_vertices(f)) faces_at[x].push_back(face_index[f]);
  RollbackDsu dsu(static_cast<int>(t.size()));
  int merges = 0;
  auto join = [&](VertexId x) {
    for (std::size_t i = 1; i < faces_at[x].size(); ++i) {
      if (!dsu.unite(faces_at[x][0], faces_at[x][i])) return false;
      ++merges;
    }
    return true;
  };
  std::vector<VertexId> proper;
  std::vector<VertexId> optional;
  for (VertexId x = 0; x < n; ++x) {
    if (2 * hits[x] != h.degree(x) || hits[x] == 1) {
      if (!join(x)) return std::nullopt;
      proper.push_back(x);
    } else {
      optional.push_back(x);
    }
  }
  const int needed = static_cast<int>(t.size()) - 1;
  std::optional<std::vector<VertexId>> best;
  std::vector<VertexId> chosen;
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    meter.tick();
    if (merges == needed) {
      // Remaining optional vertices would close a cycle; the tree is complete.
      if (!best || chosen.size() > best->size()) best = chosen;
      return;
    }
    if (i == optional.size()) return;
    if (best && chosen.size() + (optional.size() - i) <= best->size()) return;
    const std::size_t mark = dsu.mark();
    const int before = merges;
    if (join(optional[i])) {
      chosen.push_back(optional[i]);
      visit(i + 1);
      chosen.pop_back();
    }
    dsu.rollback(mark);
    merges = before;
    visit(i + 1);
  };
  visit(0);
  if (!best) return std::nullopt;
  proper.insert(proper.end(), best->begin(), best->end());
  std::sort(proper.begin(), proper.end());
  return proper;
}

}  // namespace detail

/// Exhaustive face-tree search over subsets of `candidates`, deciding faces
/// in ascending id order with inclusion tried first. Spanning mode returns
/// the first spanning tree of faces found. Quasi mode maximises the number
/// of proper vertices; among equally good trees the first found wins.
inline std::optional<FaceTree> find_face_tree(const PlaneGraph& h, std::vector<FaceId> candidates, FaceTreeMode mode,
                                              const SearchBudget& budget = {}) {
  BudgetMeter meter(budget);
  meter.check_size(h);
  const int n = h.vertex_count();
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::erase_if(candidates, [&](FaceId f) {
    require(f >= 0 && f < h.face_count(), "candidate face out of range");
    if (!h.is_bounded(f)) return true;
    auto vs = h.face_vertices(f);
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) != vs.end();  // visits a vertex twice
  });
  const int k = static_cast<int>(candidates.size());
  std::vector<std::vector<VertexId>> verts(k);
  std::vector<std::vector<EdgeId>> edges(k);
  for (int i = 0; i < k; ++i) {
    for (DartId d : h.face_darts(candidates[i])) {
      verts[i].push_back(h.origin(d));
      edges[i].push_back(h.edge_of(d));
    }
  }
  std::vector<int> hits(n, 0);
  std::vector<char> edge_taken(h.edge_count(), 0);
  std::vector<FaceId> chosen;
  detail::RollbackDsu dsu(n + k);  // spanning mode: vertices and faces
  std::optional<FaceTree> best;
  auto usable = [&](int i) {
    for (EdgeId e : edges[i])
      if (edge_taken[e]) return false;
    return true;
  };
  auto coverable = [&](int from) {
    std::vector<char> ok(n, 0);
    for (VertexId x = 0; x < n; ++x) ok[x] = hits[x] > 0;
    for (int i = from; i < k; ++i)
      if (usable(i))
        for (VertexId x : verts[i]) ok[x] = 1;
    return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  };
  std::function<bool(int)> visit = [&](int i) -> bool {
    meter.tick();
    if (!coverable(i)) return false;
    if (i == k) {
      if (chosen.empty()) return false;
      if (mode == FaceTreeMode::spanning) {
        if (dsu.size_of(0) != n + static_cast<int>(chosen.size())) return false;
        best = FaceTree{chosen, all_vertices(h)};
        return true;
      }
      auto proper = detail::best_proper_set(h, chosen, hits, meter);
      if (proper && (!best || proper->size() > best->proper.size())) best = FaceTree{chosen, *proper};
      return best && static_cast<int>(best->proper.size()) == n;
    }
    if (usable(i)) {
      const std::size_t mark = dsu.mark();
      bool ok = true;
      if (mode == FaceTreeMode::spanning) {
        // Component sizes count face nodes too; only tree-ness matters here.
        for (VertexId x : verts[i]) {
          if (!dsu.unite(n + i, x)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        for (EdgeId e : edges[i]) edge_taken[e] = 1;
        for (VertexId x : verts[i]) ++hits[x];
        chosen.push_back(candidates[i]);
        const bool done = visit(i + 1);
        chosen.pop_back();
        for (VertexId x : verts[i]) --hits[x];
        for (EdgeId e : edges[i]) edge_taken[e] = 0;
        if (done) return true;
      }
      dsu.rollback(mark);
    }
    return visit(i + 1);
  };
  visit(0);
  if (best) {
    best->canonicalize();
    const QstfCheck check = is_qstf(h, *best);
    if (!check) throw InternalError("face tree search returned an invalid tree: " + check.failure);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Hamiltonian cycles with a side table

struct HamCycleWithSides {
  EdgeSet cycle;
  std::vector<Side> side;  // per face

  friend bool operator==(const HamCycleWithSides&, const HamCycleWithSides&) = default;
};

inline HamCycleWithSides with_sides(const PlaneGraph& g, EdgeSet cycle) {
  cycle = normalized(std::move(cycle));
  require(is_hamiltonian_cycle(g, cycle), "edge set is not a hamiltonian cycle");
  return {cycle, face_sides(g, cycle)};
}

/// The faces inside the cycle together with the cycle form a subgraph whose
/// weak dual (inside faces, adjacent across inside edges) is a tree.
inline bool inside_weak_dual_is_tree(const PlaneGraph& g, const HamCycleWithSides& c) {
  AbstractGraph weak;
  std::vector<int> node(g.face_count(), -1);
  for (FaceId f = 0; f < g.face_count(); ++f)
    if (c.side[f] == Side::inside) node[f] = weak.node_count++;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const DartId d = g.edge_dart(e);
    const FaceId a = g.face_of(d);
    const FaceId b = g.face_of(g.twin(d));
    if (node[a] != -1 && node[b] != -1) weak.edges.emplace_back(node[a], node[b]);
  }
  return is_tree(weak);
}

// ---------------------------------------------------------------------------
// Quasi spanning trees of G/Q and constrained hamiltonian cycles of G

namespace detail {

inline void require_side_constraint_input(const ReducedGraph& rg) {
  require(is_cubic(rg.source), "the source graph must be cubic");
  require(rg.h_face_of[rg.source.outer_face()] != -1, "the outer face of the source must not belong to Q");
}

}  // namespace detail

/// Lifts the A-trail of H_T to G: every external edge of H_T plus, for each
/// transition at a contracted face, the boundary arc between the two
/// attachment vertices.
inline HamCycleWithSides qstf_to_hamiltonian(const ReducedGraph& rg, const FaceTree& ft) {
  detail::require_side_constraint_input(rg);
  const PlaneGraph& h = rg.h;
  require(std::find(ft.faces.begin(), ft.faces.end(), h.outer_face()) == ft.faces.end(),
          "face tree contains the outer face");
  const SubgraphTrail st = qstf_to_atrail(h, ft);
  const PlaneGraph& s = st.subgraph.graph;
  EdgeSet cycle;
  const int m = static_cast<int>(st.trail.darts.size());
  for (int i = 0; i < m; ++i) {
    const DartId in = st.trail.darts[i];
    const DartId out = st.trail.darts[(i + 1) % m];
    cycle.push_back(rg.source.edge_of(rg.dart_map[st.subgraph.dart_map[in]]));
    // Order the transition so that second == rot_next(first) in H_T and the
    // corner between them is the one the trail turns in. At a degree-2
    // vertex both orders are rotation-adjacent; the corner decides.
    DartId first = s.twin(in);
    DartId second = out;
    const bool proper = std::binary_search(ft.proper.begin(), ft.proper.end(), s.origin(out));
    auto turns_here = [&](DartId a, DartId b) {
      return s.rot_next(a) == b && (st.subgraph.tree_face[s.face_of(b)] != 0) != proper;
    };
    if (!turns_here(first, second)) std::swap(first, second);
    if (!turns_here(first, second)) throw InternalError("trail transition does not match a corner of H_T");
    const VertexId from = rg.source.origin(rg.dart_map[st.subgraph.dart_map[first]]);
    const VertexId to = rg.source.origin(rg.dart_map[st.subgraph.dart_map[second]]);
    for (EdgeId e : q_arc_backward(rg, from, to)) cycle.push_back(e);
  }
  return with_sides(rg.source, cycle);
}

/// Checks the side constraints a cycle must meet to come from a face tree
/// of G/Q and returns the first violated one, or an empty string.
inline std::string side_constraint_violation(const ReducedGraph& rg, const HamCycleWithSides& c) {
  const PlaneGraph& g = rg.source;
  if (!is_hamiltonian_cycle(g, c.cycle)) return "not a hamiltonian cycle";
  if (c.side[g.outer_face()] != Side::outside) return "outer face is inside the cycle";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const DartId d = g.edge_dart(e);
    const FaceId a = g.face_of(d);
    const FaceId b = g.face_of(g.twin(d));
    if (rg.h_face_of[a] == -1 || rg.h_face_of[b] == -1) continue;
    if (!g.is_bounded(a) || !g.is_bounded(b)) continue;
    if (c.side[a] == Side::inside && c.side[b] == Side::inside)
      return "faces " + std::to_string(a) + " and " + std::to_string(b) + " outside Q share edge " +
             std::to_string(e) + " and are both inside";
  }
  return {};
}

/// U = contracted faces inside the cycle, T = the other faces inside it.
inline FaceTree hamiltonian_to_qstf(const ReducedGraph& rg, const HamCycleWithSides& c) {
  detail::require_side_constraint_input(rg);
  const std::string violation = side_constraint_violation(rg, c);
  require(violation.empty(), "cycle violates the side constraints: " + violation);
  FaceTree ft;
  for (VertexId w = 0; w < rg.h.vertex_count(); ++w)
    if (c.side[rg.vertex_map[w]] == Side::inside) ft.proper.push_back(w);
  for (FaceId f = 0; f < rg.h.face_count(); ++f)
    if (c.side[rg.face_map[f]] == Side::inside) ft.faces.push_back(f);
  ft.canonicalize();
  const QstfCheck check = is_qstf(rg.h, ft);
  if (!check) throw InternalError("constrained cycle did not give a face tree: " + check.failure);
  return ft;
}

// ---------------------------------------------------------------------------
// The four equivalent forms for a 3-face-coloured cubic bipartite graph whose
// outer face is a 3-face:
//   (i)   a hamiltonian cycle with the 2-faces inside and the 3-faces outside
//   (ii)  an A-trail of G / 1-faces
//   (iii) a spanning tree of 1-faces of G / 2-faces
//   (iv)  a spanning tree of 1-faces of G' / 3-faces, G' being G re-rooted
//         at its lowest 2-face so that the tree may use every 1-face

struct ColoredBarnette {
  PlaneGraph g;
  FaceColoring color;
  ReducedGraph by_1_faces;  // H for form (ii)
  ReducedGraph by_2_faces;  // H for form (iii)
  ReducedGraph by_3_faces;  // H for form (iv), built from the re-rooted graph
};

inline ColoredBarnette prepare_forms(const PlaneGraph& g, const FaceColoring& c) {
  require(is_cubic(g) && is_bipartite(g), "forms need a cubic bipartite graph");
  require(c.palette == 3 && is_proper(g, c), "forms need a proper 3-face-colouring");
  require(c.color[g.outer_face()] == 3, "the outer face must be a 3-face");
  ColoredBarnette cb{g, c, {}, {}, {}};
  cb.by_1_faces = contract_facial_factor(g, c.faces_of(1));
  cb.by_2_faces = contract_facial_factor(g, c.faces_of(2));
  const PlaneGraph rerooted = g.with_outer_face(c.faces_of(2).front());
  cb.by_3_faces = contract_facial_factor(rerooted, c.faces_of(3));
  return cb;
}

enum class Form { cycle, atrail, tree_mod_2, tree_mod_3 };

struct SpanningFaceTree {
  FaceTree tree;
};

using FormValue = std::variant<HamCycleWithSides, ATrail, SpanningFaceTree>;

inline std::string form_name(Form f) {
  switch (f) {
    case Form::cycle: return "i";
    case Form::atrail: return "ii";
    case Form::tree_mod_2: return "iii";
    case Form::tree_mod_3: return "iv";
  }
  return "?";
}

/// Empty string when `value` is a valid object of form `f`.
inline std::string form_violation(const ColoredBarnette& cb, Form f, const FormValue& value) {
  switch (f) {
    case Form::cycle: {
      const auto* c = std::get_if<HamCycleWithSides>(&value);
      if (!c) return "expected a hamiltonian cycle";
      if (!is_hamiltonian_cycle(cb.g, c->cycle)) return "not a hamiltonian cycle";
      const auto sides = face_sides(cb.g, c->cycle);
      for (FaceId x = 0; x < cb.g.face_count(); ++x) {
        if (cb.color.color[x] == 2 && sides[x] != Side::inside) return "2-face " + std::to_string(x) + " is outside";
        if (cb.color.color[x] == 3 && sides[x] != Side::outside) return "3-face " + std::to_string(x) + " is inside";
      }
      return {};
    }
    case Form::atrail: {
      const auto* t = std::get_if<ATrail>(&value);
      if (!t) return "expected an A-trail";
      return is_a_trail(cb.by_1_faces.h, *t) ? std::string() : "not an A-trail of G/1-faces";
    }
    case Form::tree_mod_2:
    case Form::tree_mod_3: {
      const auto* st = std::get_if<SpanningFaceTree>(&value);
      if (!st) return "expected a spanning tree of faces";
      const ReducedGraph& rg = f == Form::tree_mod_2 ? cb.by_2_faces : cb.by_3_faces;
      if (!st->tree.is_spanning(rg.h)) return "face tree is not spanning";
      for (FaceId x : st->tree.faces)
        if (x < 0 || x >= rg.h.face_count() || cb.color.color[rg.face_map[x]] != 1)
          return "face " + std::to_string(x) + " is not a 1-face";
      const QstfCheck check = is_qstf(rg.h, st->tree);
      return check ? std::string() : check.failure;
    }
  }
  return "unknown form";
}

namespace detail {

inline HamCycleWithSides to_cycle(const ColoredBarnette& cb, Form f, const FormValue& value) {
  switch (f) {
    case Form::cycle: return std::get<HamCycleWithSides>(value);
    case Form::atrail: {
      const ReducedGraph& rg = cb.by_1_faces;
      const FaceTree ft = atrail_to_qstf(rg.h, std::get<ATrail>(value), face_coloring(rg.h, 2));
      return qstf_to_hamiltonian(rg, ft);
    }
    case Form::tree_mod_2: return qstf_to_hamiltonian(cb.by_2_faces, std::get<SpanningFaceTree>(value).tree);
    case Form::tree_mod_3: {
      // Sides come out relative to the re-rooted graph; recompute them for g.
      const HamCycleWithSides c = qstf_to_hamiltonian(cb.by_3_faces, std::get<SpanningFaceTree>(value).tree);
      return with_sides(cb.g, c.cycle);
    }
  }
  throw InternalError("unknown form");
}

inline FormValue from_cycle(const ColoredBarnette& cb, Form f, const HamCycleWithSides& c) {
  switch (f) {
    case Form::cycle: return c;
    case Form::atrail: {
      const ReducedGraph& rg = cb.by_1_faces;
      const FaceTree ft = hamiltonian_to_qstf(rg, c);
      const SubgraphTrail st = qstf_to_atrail(rg.h, ft);
      if (st.subgraph.graph.edge_count() != rg.h.edge_count())
        throw InternalError("2-faces do not cover every edge of G/1-faces");
      return ATrail{st.host_darts()};
    }
    case Form::tree_mod_2: return SpanningFaceTree{hamiltonian_to_qstf(cb.by_2_faces, c)};
    case Form::tree_mod_3: {
      const HamCycleWithSides rerooted = with_sides(cb.by_3_faces.source, c.cycle);
      return SpanningFaceTree{hamiltonian_to_qstf(cb.by_3_faces, rerooted)};
    }
  }
  throw InternalError("unknown form");
}

}  // namespace detail

/// Converts a valid object of one form into the corresponding object of
/// another, going through the hamiltonian cycle of form (i).
inline FormValue thm2_convert(const ColoredBarnette& cb, Form from, const FormValue& value, Form to) {
  const std::string violation = form_violation(cb, from, value);
  require(violation.empty(), "input is not a valid form (" + form_name(from) + ") object: " + violation);
  const HamCycleWithSides c = detail::to_cycle(cb, from, value);
  const std::string cv = form_violation(cb, Form::cycle, c);
  if (!cv.empty()) throw InternalError("form (" + form_name(from) + ") did not lift to form (i): " + cv);
  FormValue out = detail::from_cycle(cb, to, c);
  const std::string ov = form_violation(cb, to, out);
  if (!ov.empty()) throw InternalError("conversion produced an invalid form (" + form_name(to) + ") object: " + ov);
  return out;
}

}  // namespace barnette

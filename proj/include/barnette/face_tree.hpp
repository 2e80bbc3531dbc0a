#pragma once

// (Quasi) spanning trees of faces: the FaceTree value type, its checker and
// the subgraph H_T spanned by the chosen faces.

#include "barnette/embedding_ops.hpp"
#include "barnette/rotation_draft.hpp"

namespace barnette {

/// A set of bounded faces plus the proper vertices. Vertices outside
/// `proper` are quasi vertices. Both lists are kept sorted.
struct FaceTree {
  std::vector<FaceId> faces;
  std::vector<VertexId> proper;

  std::vector<VertexId> quasi(const PlaneGraph& h) const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < h.vertex_count(); ++v)
      if (!std::binary_search(proper.begin(), proper.end(), v)) out.push_back(v);
    return out;
  }

  bool is_spanning(const PlaneGraph& h) const { return static_cast<int>(proper.size()) == h.vertex_count(); }

  FaceTree& canonicalize() {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::sort(proper.begin(), proper.end());
    proper.erase(std::unique(proper.begin(), proper.end()), proper.end());
    return *this;
  }

  friend bool operator==(const FaceTree&, const FaceTree&) = default;
  friend auto operator<=>(const FaceTree&, const FaceTree&) = default;
};

inline std::vector<VertexId> all_vertices(const PlaneGraph& h) {
  std::vector<VertexId> out(h.vertex_count());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

struct QstfCheck {
  bool ok = true;
  std::string failure;  // first failing clause, empty when ok
  explicit operator bool() const { return ok; }
};

/// Checks every clause of the quasi spanning tree of faces definition and
/// names the first one that fails.
inline QstfCheck is_qstf(const PlaneGraph& h, const std::vector<VertexId>& proper, const std::vector<FaceId>& faces) {
  auto fail = [](std::string why) { return QstfCheck{false, std::move(why)}; };
  std::vector<char> in_t(h.face_count(), 0);
  for (FaceId f : faces) {
    if (f < 0 || f >= h.face_count()) return fail("face id " + std::to_string(f) + " out of range");
    if (!h.is_bounded(f)) return fail("T contains the outer face");
    if (in_t[f]) return fail("face " + std::to_string(f) + " listed twice");
    in_t[f] = 1;
  }
  std::vector<char> is_proper(h.vertex_count(), 0);
  for (VertexId v : proper) {
    if (v < 0 || v >= h.vertex_count()) return fail("vertex id " + std::to_string(v) + " out of range");
    is_proper[v] = 1;
  }
  std::vector<FaceId> owner(h.edge_count(), -1);
  std::vector<int> incidences(h.vertex_count(), 0);
  for (FaceId f : faces) {
    for (DartId d : h.face_darts(f)) {
      const EdgeId e = h.edge_of(d);
      if (owner[e] != -1)
        return fail("faces " + std::to_string(owner[e]) + " and " + std::to_string(f) + " share edge " +
                    std::to_string(e));
      owner[e] = f;
      ++incidences[h.origin(d)];
    }
  }
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    if (incidences[v] == 0) return fail("vertex " + std::to_string(v) + " lies on no face of T");
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    if (!is_proper[v] && 2 * incidences[v] != h.degree(v))
      return fail("quasi vertex " + std::to_string(v) + " lies on " + std::to_string(incidences[v]) +
                  " faces of T, expected " + std::to_string(h.degree(v) / 2) + (h.degree(v) % 2 ? ".5" : ""));
  if (!is_tree(restricted_radial(h, proper, faces).graph)) return fail("restricted radial graph is not a tree");
  return {};
}

inline QstfCheck is_qstf(const PlaneGraph& h, const FaceTree& ft) { return is_qstf(h, ft.proper, ft.faces); }

/// H_T: the subgraph formed by the boundaries of the faces in T, as a plane
/// graph on the same vertex ids.
struct FaceSubgraph {
  PlaneGraph graph;
  std::vector<EdgeId> edge_map;      // subgraph edge -> host edge
  std::vector<DartId> dart_map;      // subgraph dart -> host dart
  std::vector<DartId> sub_dart_of;   // host dart -> subgraph dart or -1
  std::vector<char> tree_face;       // subgraph face -> is one of the faces of T
};

inline FaceSubgraph face_subgraph(const PlaneGraph& h, const std::vector<FaceId>& faces) {
  std::vector<char> keep(h.edge_count(), 0);
  for (FaceId f : faces)
    for (DartId d : h.face_darts(f)) keep[h.edge_of(d)] = 1;
  RotationDraft draft(h);
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    auto& list = draft.at(v);
    std::erase_if(list, [&](const DraftEntry& e) { return !keep[h.edge_of(e.old_dart)]; });
    require(!list.empty(), "vertex " + std::to_string(v) + " lies on no chosen face");
  }
  auto built = draft.build(h.dart_count(), h.face_darts(h.outer_face()));
  FaceSubgraph out;
  out.graph = std::move(built.graph);
  out.sub_dart_of = built.old_dart_map;
  out.dart_map.assign(out.graph.dart_count(), -1);
  out.edge_map.assign(out.graph.edge_count(), -1);
  for (DartId d = 0; d < h.dart_count(); ++d) {
    const DartId s = built.old_dart_map[d];
    if (s == -1) continue;
    out.dart_map[s] = d;
    out.edge_map[out.graph.edge_of(s)] = h.edge_of(d);
  }
  std::vector<char> in_t(h.face_count(), 0);
  for (FaceId f : faces) in_t[f] = 1;
  out.tree_face.assign(out.graph.face_count(), 0);
  for (FaceId f : faces) out.tree_face[out.graph.face_of(built.old_dart_map[h.face_darts(f).front()])] = 1;
  return out;
}

}  // namespace barnette

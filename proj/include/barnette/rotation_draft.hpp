#pragma once

// Mutable rotation lists used by the surgeries. Entries remember the dart they
// came from so callers can map old darts, edges and faces onto the result.

#include "barnette/plane_graph.hpp"

namespace barnette {

struct DraftEntry {
  VertexId to;
  std::int64_t key;
  DartId old_dart = -1;  // -1 for entries created by the surgery
};

class RotationDraft {
 public:
  RotationDraft() = default;

  explicit RotationDraft(const PlaneGraph& g) : next_key_(g.edge_count()) {
    rot_.resize(g.vertex_count());
    removed_.assign(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      for (DartId d : g.rotation(v)) rot_[v].push_back({g.head(d), g.edge_of(d), d});
  }

  VertexId add_vertex() {
    rot_.emplace_back();
    removed_.push_back(0);
    return static_cast<VertexId>(rot_.size()) - 1;
  }

  std::int64_t fresh_key() { return next_key_++; }

  std::vector<DraftEntry>& at(VertexId v) { return rot_[v]; }
  const std::vector<DraftEntry>& at(VertexId v) const { return rot_[v]; }

  /// Position of the entry that came from `old_dart` at v.
  int find_old(VertexId v, DartId old_dart) const {
    for (int p = 0; p < static_cast<int>(rot_[v].size()); ++p)
      if (rot_[v][p].old_dart == old_dart) return p;
    throw InternalError("rotation draft: dart " + std::to_string(old_dart) + " not at vertex " + std::to_string(v));
  }

  void remove_vertex(VertexId v) { removed_[v] = 1; }
  bool removed(VertexId v) const { return removed_[v] != 0; }
  int size() const { return static_cast<int>(rot_.size()); }

  struct Built {
    PlaneGraph graph;
    std::vector<VertexId> vertex_map;  // draft vertex -> new vertex (-1 if removed)
    std::vector<DartId> old_dart_map;  // old dart -> new dart (-1 if gone)
  };

  /// Compacts removed vertices away and builds the embedding. The outer face
  /// is the face of the first surviving dart in `outer_candidates` (old dart
  /// ids), else `outer_fallback` given as (draft vertex, position).
  Built build(int old_dart_count, const std::vector<DartId>& outer_candidates = {},
              std::pair<VertexId, int> outer_fallback = {-1, -1}) const {
    Built out;
    out.vertex_map.assign(rot_.size(), -1);
    VertexId next = 0;
    for (VertexId v = 0; v < size(); ++v)
      if (!removed_[v]) out.vertex_map[v] = next++;
    std::vector<std::vector<PlaneGraph::HalfEdge>> rot(next);
    for (VertexId v = 0; v < size(); ++v) {
      if (removed_[v]) continue;
      for (const auto& e : rot_[v]) {
        if (out.vertex_map[e.to] == -1)
          throw InternalError("rotation draft: entry at " + std::to_string(v) + " points to removed vertex");
        rot[out.vertex_map[v]].push_back({out.vertex_map[e.to], e.key});
      }
    }
    // Canonical dart ids follow from the compacted lists.
    std::vector<int> offset(next + 1, 0);
    for (VertexId v = 0; v < next; ++v) offset[v + 1] = offset[v] + static_cast<int>(rot[v].size());
    out.old_dart_map.assign(old_dart_count, -1);
    for (VertexId v = 0; v < size(); ++v) {
      if (removed_[v]) continue;
      for (int p = 0; p < static_cast<int>(rot_[v].size()); ++p)
        if (rot_[v][p].old_dart >= 0) out.old_dart_map[rot_[v][p].old_dart] = offset[out.vertex_map[v]] + p;
    }
    std::optional<DartId> outer;
    for (DartId d : outer_candidates) {
      if (d >= 0 && d < old_dart_count && out.old_dart_map[d] != -1) {
        outer = out.old_dart_map[d];
        break;
      }
    }
    if (!outer && outer_fallback.first >= 0 && out.vertex_map[outer_fallback.first] != -1)
      outer = offset[out.vertex_map[outer_fallback.first]] + outer_fallback.second;
    out.graph = PlaneGraph::from_rotation(rot, outer);
    return out;
  }

 private:
  std::vector<std::vector<DraftEntry>> rot_;
  std::vector<char> removed_;
  std::int64_t next_key_ = 0;
};

}  // namespace barnette

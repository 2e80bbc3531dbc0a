#pragma once

// Dart-based combinatorial embeddings of connected plane multigraphs.
//
// Every vertex v owns the darts offset(v) .. offset(v)+deg(v)-1, listed in
// clockwise rotation order. Dart ids are therefore canonical: two graphs with
// the same rotation lists and twin pairing have identical dart ids. Faces are
// the orbits of face_next(d) = rot_next(twin(d)); the face of the corner
// between d and rot_next(d) is face_of(rot_next(d)).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "barnette/error.hpp"

namespace barnette {

using VertexId = int;
using DartId = int;
using EdgeId = int;
using FaceId = int;

class PlaneGraph {
 public:
  /// One entry of a rotation list: the neighbour and a key shared with the
  /// twin entry at the neighbour.
  struct HalfEdge {
    VertexId to;
    std::int64_t key;
  };

  PlaneGraph() = default;

  /// Builds and validates an embedding from clockwise rotation lists.
  /// Throws InputError on unmatched keys, loops, disconnection or a failed
  /// Euler check. `outer_dart` selects the outer face (default: face of dart 0).
  static PlaneGraph from_rotation(const std::vector<std::vector<HalfEdge>>& rotation,
                                  std::optional<DartId> outer_dart = std::nullopt) {
    PlaneGraph g;
    const int n = static_cast<int>(rotation.size());
    require(n > 0, "graph has no vertices");
    g.offset_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) g.offset_[v + 1] = g.offset_[v] + static_cast<int>(rotation[v].size());
    const int darts = g.offset_[n];
    require(darts > 0, "graph has no edges");
    g.origin_.resize(darts);
    g.twin_.assign(darts, -1);
    std::vector<std::pair<std::int64_t, DartId>> keyed;
    keyed.reserve(darts);
    for (int v = 0; v < n; ++v) {
      for (int p = 0; p < static_cast<int>(rotation[v].size()); ++p) {
        const DartId d = g.offset_[v] + p;
        g.origin_[d] = v;
        const VertexId to = rotation[v][p].to;
        require(to >= 0 && to < n, "neighbour id out of range at vertex " + std::to_string(v));
        require(to != v, "loop at vertex " + std::to_string(v));
        keyed.emplace_back(rotation[v][p].key, d);
      }
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < keyed.size(); i += 2) {
      require(i + 1 < keyed.size() && keyed[i].first == keyed[i + 1].first &&
                  (i + 2 >= keyed.size() || keyed[i + 2].first != keyed[i].first),
              "twin matching failed for half-edge key " + std::to_string(keyed[i].first));
      const DartId a = keyed[i].second;
      const DartId b = keyed[i + 1].second;
      const VertexId va = g.origin_[a];
      const VertexId vb = g.origin_[b];
      require(rotation[va][a - g.offset_[va]].to == vb && rotation[vb][b - g.offset_[vb]].to == va,
              "twin matching failed: endpoints disagree for key " + std::to_string(keyed[i].first));
      g.twin_[a] = b;
      g.twin_[b] = a;
    }
    g.finish(outer_dart.value_or(0));
    return g;
  }

  int vertex_count() const { return static_cast<int>(offset_.size()) - 1; }
  int dart_count() const { return static_cast<int>(origin_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int face_count() const { return static_cast<int>(face_darts_.size()); }

  int degree(VertexId v) const { return offset_[v + 1] - offset_[v]; }
  DartId dart_at(VertexId v, int pos) const { return offset_[v] + pos; }
  int position(DartId d) const { return d - offset_[origin_[d]]; }

  /// Outgoing darts of v in clockwise order.
  std::span<const DartId> rotation(VertexId v) const {
    return std::span<const DartId>(dart_ids_).subspan(offset_[v], degree(v));
  }

  VertexId origin(DartId d) const { return origin_[d]; }
  VertexId head(DartId d) const { return origin_[twin_[d]]; }
  DartId twin(DartId d) const { return twin_[d]; }
  DartId rot_next(DartId d) const {
    const VertexId v = origin_[d];
    const int p = d - offset_[v] + 1;
    return p == degree(v) ? offset_[v] : d + 1;
  }
  DartId rot_prev(DartId d) const {
    const VertexId v = origin_[d];
    return d == offset_[v] ? offset_[v + 1] - 1 : d - 1;
  }
  DartId face_next(DartId d) const { return rot_next(twin_[d]); }
  DartId face_prev(DartId d) const { return twin_[rot_prev(d)]; }

  EdgeId edge_of(DartId d) const { return edge_of_[d]; }
  /// The lower-numbered dart of an edge.
  DartId edge_dart(EdgeId e) const { return edge_dart_[e]; }
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
    return {origin_[edge_dart_[e]], head(edge_dart_[e])};
  }
  VertexId other_end(EdgeId e, VertexId v) const {
    auto [a, b] = endpoints(e);
    return a == v ? b : a;
  }

  FaceId face_of(DartId d) const { return face_of_[d]; }
  /// Boundary walk starting at the face's lowest dart.
  const std::vector<DartId>& face_darts(FaceId f) const { return face_darts_[f]; }
  int face_length(FaceId f) const { return static_cast<int>(face_darts_[f].size()); }
  std::vector<VertexId> face_vertices(FaceId f) const {
    std::vector<VertexId> out;
    for (DartId d : face_darts_[f]) out.push_back(origin_[d]);
    return out;
  }
  FaceId outer_face() const { return outer_; }
  bool is_bounded(FaceId f) const { return f != outer_; }

  std::vector<VertexId> neighbours(VertexId v) const {
    std::vector<VertexId> out;
    for (DartId d : rotation(v)) out.push_back(head(d));
    return out;
  }

  /// Same embedding with a different outer face.
  PlaneGraph with_outer_face(FaceId f) const {
    require(f >= 0 && f < face_count(), "outer face id out of range");
    PlaneGraph g = *this;
    g.outer_ = f;
    return g;
  }

  /// Rotation lists keyed by edge id; feeding them back to from_rotation
  /// reproduces this graph.
  std::vector<std::vector<HalfEdge>> rotation_lists() const {
    std::vector<std::vector<HalfEdge>> rot(vertex_count());
    for (VertexId v = 0; v < vertex_count(); ++v)
      for (DartId d : rotation(v)) rot[v].push_back({head(d), edge_of(d)});
    return rot;
  }

  friend bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
    return a.offset_ == b.offset_ && a.twin_ == b.twin_ && a.origin_ == b.origin_ && a.outer_ == b.outer_;
  }

 private:
  void finish(DartId outer_dart) {
    const int darts = dart_count();
    const int n = vertex_count();
    dart_ids_.resize(darts);
    std::iota(dart_ids_.begin(), dart_ids_.end(), 0);
    edge_of_.assign(darts, -1);
    edge_dart_.clear();
    for (DartId d = 0; d < darts; ++d) {
      if (d < twin_[d]) {
        edge_of_[d] = edge_of_[twin_[d]] = static_cast<EdgeId>(edge_dart_.size());
        edge_dart_.push_back(d);
      }
    }
    // Connectivity.
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (DartId d : rotation(v)) {
        const VertexId w = head(d);
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    require(reached == n, "graph is disconnected");
    face_of_.assign(darts, -1);
    face_darts_.clear();
    for (DartId d = 0; d < darts; ++d) {
      if (face_of_[d] != -1) continue;
      const FaceId f = static_cast<FaceId>(face_darts_.size());
      face_darts_.emplace_back();
      DartId x = d;
      do {
        face_of_[x] = f;
        face_darts_[f].push_back(x);
        x = face_next(x);
      } while (x != d);
    }
    require(n - edge_count() + face_count() == 2,
            "Euler check failed (V - E + F = " + std::to_string(n - edge_count() + face_count()) +
                "): rotation system is not a plane embedding");
    require(outer_dart >= 0 && outer_dart < darts, "outer dart out of range");
    outer_ = face_of_[outer_dart];
  }

  std::vector<int> offset_;
  std::vector<VertexId> origin_;
  std::vector<DartId> twin_;
  std::vector<DartId> dart_ids_;
  std::vector<EdgeId> edge_of_;
  std::vector<DartId> edge_dart_;
  std::vector<FaceId> face_of_;
  std::vector<std::vector<DartId>> face_darts_;
  FaceId outer_ = 0;
};

struct Face {
  FaceId id;
  std::vector<DartId> boundary;
  int length() const { return static_cast<int>(boundary.size()); }
};

inline std::vector<Face> faces(const PlaneGraph& g) {
  std::vector<Face> out;
  out.reserve(g.face_count());
  for (FaceId f = 0; f < g.face_count(); ++f) out.push_back({f, g.face_darts(f)});
  return out;
}

/// Histogram "length -> count" of face lengths, sorted by length.
inline std::vector<std::pair<int, int>> face_length_profile(const PlaneGraph& g) {
  std::vector<int> lengths;
  for (FaceId f = 0; f < g.face_count(); ++f) lengths.push_back(g.face_length(f));
  std::sort(lengths.begin(), lengths.end());
  std::vector<std::pair<int, int>> out;
  for (int l : lengths) {
    if (out.empty() || out.back().first != l) out.emplace_back(l, 0);
    ++out.back().second;
  }
  return out;
}

}  // namespace barnette

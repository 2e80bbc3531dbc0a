#pragma once

// A-trails of eulerian plane graphs: verification, exhaustive search,
// the non-separating test for triangulations, A-partitions and the
// conversions to and from quasi spanning trees of faces.
//
// At a vertex of degree 2k a transition system whose transitions all join
// rotation-adjacent darts is one of exactly two alternating matchings. We
// encode it as a corner choice: choice 0 pairs positions (0,1),(2,3),...
// and choice 1 pairs (1,2),(3,4),...,(2k-1,0). The corners used by one
// choice all carry the same colour of the 2-face-colouring.

#include <functional>

#include "barnette/budget.hpp"
#include "barnette/face_tree.hpp"

namespace barnette {

struct ATrail {
  std::vector<DartId> darts;  // closed: head(darts.back()) == origin(darts.front())

  friend bool operator==(const ATrail&, const ATrail&) = default;
};

inline void require_atrail_host(const PlaneGraph& h) {
  require(is_eulerian(h), "A-trails need an eulerian graph");
  require(is_k_connected(h, 2), "A-trails need a 2-connected graph");
}

/// True iff seq is a closed trail using every edge once and each two
/// consecutive edges (cyclically) lie on a common face boundary.
inline bool is_a_trail(const PlaneGraph& h, const std::vector<DartId>& seq) {
  const int m = static_cast<int>(seq.size());
  if (m != h.edge_count() || m == 0) return false;
  std::vector<char> used(h.edge_count(), 0);
  for (DartId d : seq) {
    if (d < 0 || d >= h.dart_count() || used[h.edge_of(d)]) return false;
    used[h.edge_of(d)] = 1;
  }
  std::vector<std::vector<FaceId>> faces_of_edge(h.edge_count());
  for (DartId d = 0; d < h.dart_count(); ++d) faces_of_edge[h.edge_of(d)].push_back(h.face_of(d));
  for (int i = 0; i < m; ++i) {
    const DartId a = seq[i];
    const DartId b = seq[(i + 1) % m];
    if (h.head(a) != h.origin(b)) return false;
    bool shared = false;
    for (FaceId f : faces_of_edge[h.edge_of(a)])
      for (FaceId g : faces_of_edge[h.edge_of(b)]) shared = shared || f == g;
    if (!shared) return false;
  }
  return true;
}

inline bool is_a_trail(const PlaneGraph& h, const ATrail& t) { return is_a_trail(h, t.darts); }

/// Pairing of outgoing darts at every vertex induced by a corner choice.
inline std::vector<DartId> partner_from_choice(const PlaneGraph& h, const std::vector<int>& choice) {
  std::vector<DartId> partner(h.dart_count(), -1);
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    const int k = h.degree(v);
    require(k % 2 == 0, "vertex " + std::to_string(v) + " has odd degree");
    for (int i = choice[v]; i < k + choice[v]; i += 2) {
      const DartId a = h.dart_at(v, i % k);
      const DartId b = h.dart_at(v, (i + 1) % k);
      partner[a] = b;
      partner[b] = a;
    }
  }
  return partner;
}

/// Follows d -> partner(twin(d)) from `start`; nullopt unless the walk is a
/// single closed trail through every edge.
inline std::optional<ATrail> trail_from_partner(const PlaneGraph& h, const std::vector<DartId>& partner,
                                                DartId start = 0) {
  ATrail t;
  DartId d = start;
  do {
    t.darts.push_back(d);
    d = partner[h.twin(d)];
    if (static_cast<int>(t.darts.size()) > h.edge_count()) return std::nullopt;
  } while (d != start);
  if (static_cast<int>(t.darts.size()) != h.edge_count()) return std::nullopt;
  return t;
}

/// Outgoing-dart pairing at every vertex used by a closed trail.
inline std::vector<DartId> partner_of_trail(const PlaneGraph& h, const ATrail& t) {
  std::vector<DartId> partner(h.dart_count(), -1);
  const int m = static_cast<int>(t.darts.size());
  for (int i = 0; i < m; ++i) {
    const DartId a = h.twin(t.darts[i]);
    const DartId b = t.darts[(i + 1) % m];
    partner[a] = b;
    partner[b] = a;
  }
  return partner;
}

/// Face hosting the transition from incoming dart `in` to outgoing dart
/// `out`. When both corners qualify (degree 2) the face the trail follows
/// in its own direction wins.
inline FaceId transition_face(const PlaneGraph& h, DartId in, DartId out) {
  const DartId a = h.twin(in);
  if (h.rot_next(a) == out) return h.face_of(out);
  if (h.rot_next(out) == a) return h.face_of(a);
  throw InputError("darts " + std::to_string(in) + " and " + std::to_string(out) + " are not rotation-adjacent");
}

struct APartition {
  std::vector<int> side;             // per vertex: 1 or 2, 0 when conflicting
  std::vector<VertexId> conflicts;   // vertices that qualify for both classes
  bool consistent() const { return conflicts.empty(); }
  std::vector<VertexId> members(int i) const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < static_cast<VertexId>(side.size()); ++v)
      if (side[v] == i) out.push_back(v);
    return out;
  }
};

/// v is in class i iff one of its transitions lies on a face of colour 3-i.
inline APartition a_partition(const PlaneGraph& h, const ATrail& t, const FaceColoring& c) {
  require(c.palette == 2 && is_proper(h, c), "A-partition needs a proper 2-face-colouring");
  require(is_a_trail(h, t), "sequence is not an A-trail");
  std::vector<int> mask(h.vertex_count(), 0);
  const int m = static_cast<int>(t.darts.size());
  for (int i = 0; i < m; ++i) {
    const DartId in = t.darts[i];
    const DartId out = t.darts[(i + 1) % m];
    mask[h.origin(out)] |= 1 << (3 - c.color[transition_face(h, in, out)] - 1);
  }
  APartition p;
  p.side.assign(h.vertex_count(), 0);
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (mask[v] == 3) {
      p.conflicts.push_back(v);
    } else {
      p.side[v] = mask[v] == 1 ? 1 : 2;
    }
  }
  return p;
}

/// True iff every triangle has two of its edges consecutive in the trail.
inline bool is_non_separating(const PlaneGraph& h, const ATrail& t) {
  for (FaceId f = 0; f < h.face_count(); ++f)
    require(h.face_length(f) == 3, "non-separation is defined for triangulations only");
  require(is_a_trail(h, t), "sequence is not an A-trail");
  std::vector<char> hit(h.face_count(), 0);
  std::vector<std::vector<FaceId>> faces_of_edge(h.edge_count());
  for (DartId d = 0; d < h.dart_count(); ++d) faces_of_edge[h.edge_of(d)].push_back(h.face_of(d));
  const int m = static_cast<int>(t.darts.size());
  for (int i = 0; i < m; ++i) {
    const EdgeId a = h.edge_of(t.darts[i]);
    const EdgeId b = h.edge_of(t.darts[(i + 1) % m]);
    for (FaceId f : faces_of_edge[a])
      for (FaceId g : faces_of_edge[b])
        if (f == g) hit[f] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char x) { return x != 0; });
}

enum class TrailMode { first, all, nonseparating_first, nonseparating_all };

namespace detail {

// Union-find with undo, used to keep the transition graph acyclic until the
// final transition closes the single trail.
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  int size_of(int x) const { return size_[find(x)]; }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      history_.push_back(-1);
      return false;
    }
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }
  std::size_t mark() const { return history_.size(); }
  void rollback(std::size_t to) {
    while (history_.size() > to) {
      const int b = history_.back();
      history_.pop_back();
      if (b == -1) continue;
      const int a = parent_[b];
      size_[a] -= size_[b];
      parent_[b] = b;
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

}  // namespace detail

/// Exhaustive A-trail search over corner choices, vertices in id order and
/// choice 0 before choice 1. `limit` = 0 means no limit in the `all` modes.
/// Degree-2 vertices have a single transition and are not branched on.
inline std::vector<ATrail> find_a_trail(const PlaneGraph& h, TrailMode mode, std::size_t limit = 0,
                                        const SearchBudget& budget = {}) {
  require_atrail_host(h);
  BudgetMeter meter(budget);
  meter.check_size(h);
  const bool nonsep = mode == TrailMode::nonseparating_first || mode == TrailMode::nonseparating_all;
  const bool stop_at_first = mode == TrailMode::first || mode == TrailMode::nonseparating_first;
  if (nonsep)
    for (FaceId f = 0; f < h.face_count(); ++f)
      require(h.face_length(f) == 3, "non-separating search needs a triangulation");
  const int n = h.vertex_count();
  const int m = h.edge_count();
  // Faces to audit once their last vertex has been decided.
  std::vector<std::vector<FaceId>> closes_at(n);
  if (nonsep)
    for (FaceId f = 0; f < h.face_count(); ++f) {
      const auto vs = h.face_vertices(f);
      closes_at[*std::max_element(vs.begin(), vs.end())].push_back(f);
    }
  std::vector<int> choice(n, 0);
  detail::RollbackDsu dsu(m);
  std::vector<ATrail> out;
  // corner of face f at vertex x is used iff the pair (rot_prev(d), d) is
  // chosen, d being the dart of f leaving x.
  auto corner_used = [&](DartId d) {
    const VertexId x = h.origin(d);
    if (h.degree(x) == 2) return true;
    const int p = h.position(d);
    return (p % 2 == 1) == (choice[x] == 0);
  };
  std::function<bool(VertexId)> visit = [&](VertexId v) -> bool {
    meter.tick();
    if (v == n) {
      auto t = trail_from_partner(h, partner_from_choice(h, choice));
      if (!t) throw InternalError("A-trail search produced a disconnected transition system");
      out.push_back(std::move(*t));
      return stop_at_first || (limit != 0 && out.size() >= limit);
    }
    const int k = h.degree(v);
    const int options = k == 2 ? 1 : 2;
    for (int c = 0; c < options; ++c) {
      choice[v] = c;
      const std::size_t mark = dsu.mark();
      bool ok = true;
      for (int i = c; i < k + c && ok; i += 2) {
        const EdgeId a = h.edge_of(h.dart_at(v, i % k));
        const EdgeId b = h.edge_of(h.dart_at(v, (i + 1) % k));
        if (!dsu.unite(a, b) && dsu.size_of(a) != m) ok = false;
      }
      if (ok && nonsep) {
        for (FaceId f : closes_at[v]) {
          bool hit = false;
          for (DartId d : h.face_darts(f)) hit = hit || corner_used(d);
          if (!hit) {
            ok = false;
            break;
          }
        }
      }
      if (ok && visit(v + 1)) return true;
      dsu.rollback(mark);
    }
    choice[v] = 0;
    return false;
  };
  visit(0);
  return out;
}

// ---------------------------------------------------------------------------
// Conversions between A-trails and quasi spanning trees of faces

/// T = all 2-faces, quasi vertices = class V1 of the A-partition.
inline FaceTree atrail_to_qstf(const PlaneGraph& h, const ATrail& t, const FaceColoring& c) {
  require(is_eulerian(h) && min_degree(h) >= 4, "A-trail to face tree needs an eulerian graph of minimum degree 4");
  require(c.palette == 2 && c.color[h.outer_face()] == 1, "colouring must give the outer face colour 1");
  const APartition p = a_partition(h, t, c);
  require(p.consistent(), "A-partition is not single-valued at vertex " +
                              (p.conflicts.empty() ? std::string() : std::to_string(p.conflicts.front())));
  FaceTree ft{c.faces_of(2), p.members(2)};
  ft.canonicalize();
  const QstfCheck check = is_qstf(h, ft);
  if (!check) throw InternalError("A-trail did not give a quasi spanning tree of faces: " + check.failure);
  return ft;
}

struct SubgraphTrail {
  FaceSubgraph subgraph;  // H_T
  ATrail trail;           // darts of subgraph.graph
  /// The same trail as darts of the host graph.
  std::vector<DartId> host_darts() const {
    std::vector<DartId> out;
    for (DartId d : trail.darts) out.push_back(subgraph.dart_map[d]);
    return out;
  }
};

/// The A-trail of H_T: quasi vertices turn inside faces of T, proper
/// vertices turn in the corners between them.
inline SubgraphTrail qstf_to_atrail(const PlaneGraph& h, const FaceTree& ft) {
  const QstfCheck check = is_qstf(h, ft);
  require(check.ok, "not a quasi spanning tree of faces: " + check.failure);
  SubgraphTrail out;
  out.subgraph = face_subgraph(h, ft.faces);
  const PlaneGraph& s = out.subgraph.graph;
  std::vector<DartId> partner(s.dart_count(), -1);
  for (VertexId v = 0; v < s.vertex_count(); ++v) {
    const bool proper = std::binary_search(ft.proper.begin(), ft.proper.end(), v);
    for (DartId b : s.rotation(v)) {
      // corner between rot_prev(b) and b belongs to face_of(b)
      const bool tree_corner = out.subgraph.tree_face[s.face_of(b)] != 0;
      if (tree_corner != proper) {
        const DartId a = s.rot_prev(b);
        partner[a] = b;
        partner[b] = a;
      }
    }
  }
  for (DartId d = 0; d < s.dart_count(); ++d)
    if (partner[d] == -1) throw InternalError("face tree transitions do not cover every dart");
  auto t = trail_from_partner(s, partner);
  if (!t) throw InternalError("face tree transitions do not form a single trail");
  out.trail = std::move(*t);
  return out;
}

}  // namespace barnette

#pragma once

// Whole-graph consistency suites: each side of a correspondence is decided
// by its own search and the answers and converters are compared.

#include "barnette/leapfrog_cycles.hpp"
#include "barnette/oracle.hpp"

namespace barnette {

/// The 3-face-colourings of g with a 3-coloured outer face, up to
/// exchanging colours 1 and 2 (both orders are listed).
inline std::vector<FaceColoring> colorings_with_outer_3(const PlaneGraph& g) {
  const FaceColoring base = face_coloring(g, 3);
  std::vector<int> perm(3);
  const int outer = base.color[g.outer_face()];
  std::vector<FaceColoring> out;
  for (int one : {1, 2, 3}) {
    if (one == outer) continue;
    const int two = 6 - one - outer;
    perm[one - 1] = 1;
    perm[two - 1] = 2;
    perm[outer - 1] = 3;
    out.push_back(permute_colors(base, perm));
  }
  return out;
}

struct FormsReport {
  std::array<bool, 4> exists{};  // forms (i)-(iv), each from its own search
  bool converted = true;         // a witness of (i) converts to every form and back
  bool agrees() const {
    return converted && exists[0] == exists[1] && exists[1] == exists[2] && exists[2] == exists[3];
  }
};

inline FormsReport check_forms(const PlaneGraph& g, const FaceColoring& c, const SearchBudget& budget = {}) {
  FormsReport r;
  const ColoredBarnette cb = prepare_forms(g, c);
  std::optional<HamCycleWithSides> witness;
  for (const auto& cycle : oracle::find_hc(g, {}, {}, oracle::HcMode::all, budget).cycles) {
    HamCycleWithSides w = with_sides(g, cycle);
    if (form_violation(cb, Form::cycle, w).empty()) {
      witness = w;
      break;
    }
  }
  r.exists[0] = witness.has_value();
  r.exists[1] = !find_a_trail(cb.by_1_faces.h, TrailMode::first, 0, budget).empty();
  auto ones = [&](const ReducedGraph& rg) {
    std::vector<FaceId> out;
    for (FaceId f = 0; f < rg.h.face_count(); ++f)
      if (c.color[rg.face_map[f]] == 1) out.push_back(f);
    return out;
  };
  r.exists[2] = find_face_tree(cb.by_2_faces.h, ones(cb.by_2_faces), FaceTreeMode::spanning, budget).has_value();
  r.exists[3] = find_face_tree(cb.by_3_faces.h, ones(cb.by_3_faces), FaceTreeMode::spanning, budget).has_value();
  if (witness) {
    for (Form f : {Form::atrail, Form::tree_mod_2, Form::tree_mod_3}) {
      const FormValue v = thm2_convert(cb, Form::cycle, *witness, f);
      const auto back = std::get<HamCycleWithSides>(thm2_convert(cb, f, v, Form::cycle));
      r.converted = r.converted && back == *witness;
    }
  }
  return r;
}

struct BijectionReport {
  std::int64_t face_trees = 0;          // quasi spanning trees of faces, outer face excluded
  std::int64_t constrained_cycles = 0;  // hamiltonian cycles meeting the side constraints
  bool inverse = true;                  // both round trips reproduce their input
  bool agrees() const { return inverse && face_trees == constrained_cycles; }
};

/// Counts both sides for G/Q. The outer face of rg.source must not be in Q.
inline BijectionReport check_face_tree_bijection(const ReducedGraph& rg, const SearchBudget& budget = {}) {
  BijectionReport r;
  std::vector<int> candidates;
  for (FaceId f = 0; f < rg.h.face_count(); ++f) candidates.push_back(f);
  const auto trees = oracle::enumerate_face_trees(rg.h, candidates, true, budget);
  r.face_trees = static_cast<std::int64_t>(trees.size());
  for (const auto& t : trees) {
    const FaceTree ft{t.faces, t.proper};
    const HamCycleWithSides c = qstf_to_hamiltonian(rg, ft);
    r.inverse = r.inverse && hamiltonian_to_qstf(rg, c) == ft;
  }
  for (const auto& cycle : oracle::find_hc(rg.source, {}, {}, oracle::HcMode::all, budget).cycles) {
    const HamCycleWithSides c = with_sides(rg.source, cycle);
    if (!side_constraint_violation(rg, c).empty()) continue;
    ++r.constrained_cycles;
    r.inverse = r.inverse && qstf_to_hamiltonian(rg, hamiltonian_to_qstf(rg, c)) == c;
  }
  return r;
}

/// g / (colour class q), re-rooted first when the outer face belongs to q.
inline ReducedGraph contract_color_class(const PlaneGraph& g, const FaceColoring& c, int q) {
  const std::vector<FaceId> faces = c.faces_of(q);
  if (c.color[g.outer_face()] != q) return contract_facial_factor(g, faces);
  FaceId root = 0;
  while (c.color[root] == q) ++root;
  return contract_facial_factor(g.with_outer_face(root), faces);
}

struct DualTrailReport {
  bool hamiltonian = false;          // oracle
  bool has_nonseparating = false;    // A-trail enumeration on the dual
  std::int64_t cycles = 0;
  std::int64_t nonseparating = 0;
  bool transfers = true;             // every cycle maps to a non-separating trail and back
  bool agrees() const { return transfers && hamiltonian == has_nonseparating; }
};

inline DualTrailReport check_dual_trails(const PlaneGraph& g, bool count_all, const SearchBudget& budget = {}) {
  DualTrailReport r;
  const DualResult d = dual(g);
  const auto mode = count_all ? TrailMode::nonseparating_all : TrailMode::nonseparating_first;
  const auto trails = find_a_trail(d.graph, mode, 0, budget);
  r.nonseparating = static_cast<std::int64_t>(trails.size());
  r.has_nonseparating = !trails.empty();
  const auto hcs = oracle::find_hc(g, {}, {}, count_all ? oracle::HcMode::all : oracle::HcMode::first, budget);
  r.cycles = hcs.count;
  r.hamiltonian = hcs.count > 0;
  for (const auto& cycle : hcs.cycles) {
    const ATrail t = hamiltonian_to_dual_trail(g, cycle);
    r.transfers = r.transfers && is_non_separating(d.graph, t) && normalized(dual_trail_to_hamiltonian(g, t)) == cycle;
  }
  for (const auto& t : trails)
    r.transfers = r.transfers && is_hamiltonian_cycle(g, dual_trail_to_hamiltonian(g, t));
  return r;
}

struct LeapfrogReport {
  bool identity = false;
  bool mirrored = false;
  std::int64_t cycles = 0;
  std::int64_t round_trips = 0;  // lifted with correct sides and projected back exactly
  bool agrees() const { return identity && round_trips == cycles; }
};

inline LeapfrogReport check_leapfrog(const PlaneGraph& g, const SearchBudget& budget = {}) {
  LeapfrogReport r;
  const LfIdentity id = lf_identity_check(g);
  r.identity = id.ok();
  r.mirrored = id.mirrored;
  const FaceColoring colors = leapfrog_coloring(g, id.lf);
  for (const auto& cycle : oracle::find_hc(g, {}, {}, oracle::HcMode::all, budget).cycles) {
    ++r.cycles;
    const HamCycleWithSides lifted = hc_lift_leapfrog(g, id.lf, colors, cycle);
    if (hc_project_leapfrog(g, id.lf, colors, lifted) == cycle) ++r.round_trips;
  }
  return r;
}

}  // namespace barnette

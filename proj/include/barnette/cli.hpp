#pragma once

// Command-line front end. Every subcommand reads `.pg` files and prints a
// `key: value` record on standard output; graph-producing subcommands also
// write the graph to -o and the correspondence maps to <output>.map.
//
// Exit codes: 0 decided or constructed, 1 none exists, 2 budget exceeded,
// 3 input error, 4 internal error.

#include <filesystem>
#include <future>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "barnette/equivalence_checks.hpp"
#include "barnette/generators.hpp"
#include "barnette/reductions.hpp"
#include "barnette/text_io.hpp"

namespace barnette::cli {

enum class Exit : int { ok = 0, none = 1, budget = 2, input = 3, internal = 4 };

inline constexpr int kFormatVersion = 1;

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::string output;
  SearchBudget budget;
  std::string mode;
  int jobs = 1;
  int format_version = kFormatVersion;
  std::uint64_t seed = 0;
};

struct Outcome {
  Exit code = Exit::ok;
  std::string text;  // record for standard output
  std::string error;
};

namespace detail {

inline Exit worst(Exit a, Exit b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

template <class Fn>
Outcome guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    return {Exit::input, {}, std::string("input: ") + e.what()};
  } catch (const BudgetExceeded& e) {
    return {Exit::budget, {}, std::string("budget: ") + e.what()};
  } catch (const std::exception& e) {
    return {Exit::internal, {}, std::string("internal: ") + e.what()};
  }
}

inline void write_graph_and_map(const RunConfig& cfg, const PlaneGraph& g, const Record& map) {
  require(!cfg.output.empty(), "this subcommand needs -o <output.pg>");
  write_plane_graph_file(g, cfg.output);
  write_text_file(cfg.output + ".map", map.str());
}

inline Record header(const PlaneGraph& g) {
  return Record()
      .set("format", kFormatVersion)
      .set("vertices", g.vertex_count())
      .set("edges", g.edge_count())
      .set("faces", g.face_count());
}

inline oracle::HcMode hc_mode(const std::string& m) {
  if (m.empty() || m == "first") return oracle::HcMode::first;
  if (m == "count") return oracle::HcMode::count;
  if (m == "all") return oracle::HcMode::all;
  throw InputError("unknown mode '" + m + "' (first, count, all)");
}

inline TrailMode trail_mode(const std::string& m) {
  if (m.empty() || m == "first") return TrailMode::first;
  if (m == "all") return TrailMode::all;
  if (m == "nonseparating_first") return TrailMode::nonseparating_first;
  if (m == "nonseparating_all") return TrailMode::nonseparating_all;
  throw InputError("unknown mode '" + m + "' (first, all, nonseparating_first, nonseparating_all)");
}

inline FaceTreeMode tree_mode(const std::string& m) {
  if (m.empty() || m == "spanning") return FaceTreeMode::spanning;
  if (m == "quasi") return FaceTreeMode::quasi;
  throw InputError("unknown mode '" + m + "' (spanning, quasi)");
}

inline std::string index_key(const std::string& prefix, std::size_t i) { return prefix + "." + std::to_string(i); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Subcommands. Each takes the configuration and one input path.

struct Options {
  std::vector<std::string> props;  // empty: report everything, exit 0
  int k = 3;
  int color = -1;
  std::vector<int> faces;
  std::vector<int> forced;
  std::vector<int> forbidden;
  std::size_t limit = 0;
  int edge = 0;
  std::string expanded;
  std::string out_dir;
  bool verify = false;
  std::string suite = "thm2";
  std::string coloring;
  std::string family = "cube";
  int depth = 1;
  int steps = 1;
  std::string base;
  std::string dir;
};

inline Outcome cmd_validate(const RunConfig&, const Options& opt, const std::string& in) {
  const PlaneGraph g = read_plane_graph_file(in);
  Record r = detail::header(g);
  const bool report_only = opt.props.empty();
  const std::vector<std::string> everything{"cubic", "bipartite", "eulerian", "2_connected", "3_connected", "barnette"};
  bool all = true;
  for (const auto& [name, ok] : validate(g, report_only ? everything : opt.props)) {
    r.set(name, ok);
    all = all && ok;
  }
  return {all || report_only ? Exit::ok : Exit::none, r.str(), {}};
}

inline Outcome cmd_faces(const RunConfig&, const Options&, const std::string& in) {
  const PlaneGraph g = read_plane_graph_file(in);
  Record r = detail::header(g);
  r.set("outer", g.outer_face());
  for (FaceId f = 0; f < g.face_count(); ++f) r.set(detail::index_key("face", f), g.face_vertices(f));
  return {Exit::ok, r.str(), {}};
}

inline Outcome cmd_dual(const RunConfig& cfg, const Options&, const std::string& in) {
  const PlaneGraph g = read_plane_graph_file(in);
  const DualResult d = dual(g);
  Record map = detail::header(d.graph);
  map.set("dart_map", d.dart_map).set("edge_map", d.edge_map);
  detail::write_graph_and_map(cfg, d.graph, map);
  return {Exit::ok, map.str(), {}};
}

inline Outcome cmd_radial(const RunConfig& cfg, const Options&, const std::string& in) {
  const PlaneGraph g = read_plane_graph_file(in);
  const RadialResult rr = radial_graph(g);
  Record map = detail::header(rr.graph);
  map.set("vertex_nodes", rr.vertex_nodes).set("corner_edge", rr.corner_edge);
  detail::write_graph_and_map(cfg, rr.graph, map);
  return {Exit::ok, map.str(), {}};
}

inline Outcome cmd_color_faces(const RunConfig& cfg, const Options& opt, const std::string& in) {
  const PlaneGraph g = read_plane_graph_file(in);
  const FaceColoring c = face_coloring(g, opt.k);
  Record r = to_record(c);
  if (!cfg.output.empty()) write_text_file(cfg.output, r.str());
  return {Exit::ok, r.str(), {}};
}

inline Outcome cmd_contract(const RunConfig& cfg, const Options& opt, const std::string& in) {
  const PlaneGraph g = read_plane_graph_file(in);
  std::vector<FaceId> q = opt.faces;
  if (opt.color != -1) {
    require(q.empty(), "give either --faces or --color");
    q = face_coloring(g, 3).faces_of(opt.color);
  }
  require(!q.empty(), "contract needs --faces or --color");
  const ReducedGraph rg = contract_facial_factor(g, q);
  Record map = detail::header(rg.h);
  map.set("q", rg.q).set("vertex_map", rg.vertex_map).set("dart_map", rg.dart_map).set("face_map", rg.face_map);
  detail::write_graph_and_map(cfg, rg.h, map);
  return {Exit::ok, map.str(), {}};
}

inline Outcome cmd_leapfrog(const RunConfig& cfg, const Options&, const std::string& in) {
  const PlaneGraph g = read_plane_graph_file(in);
  const LeapfrogResult lf = leapfrog(g);
  Record map = detail::header(lf.graph);
  map.set("hexagon", lf.hexagon)
      .set("face_image", lf.face_image)
      .set("shared_edge", lf.shared_edge)
      .set("corner_edge", lf.corner_edge);
  detail::write_graph_and_map(cfg, lf.graph, map);
  return {Exit::ok, map.str(), {}};
}

inline Outcome cmd_expand(const RunConfig& cfg, const Options&, const std::string& in) {
  const PlaneGraph h = read_plane_graph_file(in);
  const ExpansionResult ex = vertex_expand(h);
  Record map = detail::header(ex.graph);
  map.set("cycle_face", ex.cycle_face).set("edge_map", ex.edge_map).set("face_map", ex.face_map);
  detail::write_graph_and_map(cfg, ex.graph, map);
  return {Exit::ok, map.str(), {}};
}

inline Outcome cmd_find_hc(const RunConfig& cfg, const Options& opt, const std::string& in) {
  const PlaneGraph g = read_plane_graph_file(in);
  const auto result = oracle::find_hc(g, opt.forced, opt.forbidden, detail::hc_mode(cfg.mode), cfg.budget);
  Record r = detail::header(g);
  r.set("count", result.count);
  for (std::size_t i = 0; i < result.cycles.size(); ++i) r.set(detail::index_key("cycle", i), result.cycles[i]);
  if (!cfg.output.empty() && !result.cycles.empty())
    write_text_file(cfg.output, to_record(with_sides(g, result.cycles.front())).str());
  return {result.count > 0 ? Exit::ok : Exit::none, r.str(), {}};
}

inline Outcome cmd_find_atrail(const RunConfig& cfg, const Options& opt, const std::string& in) {
  const PlaneGraph h = read_plane_graph_file(in);
  const auto trails = find_a_trail(h, detail::trail_mode(cfg.mode), opt.limit, cfg.budget);
  Record r = detail::header(h);
  r.set("count", static_cast<std::int64_t>(trails.size()));
  for (std::size_t i = 0; i < trails.size(); ++i) r.set(detail::index_key("trail", i), trails[i].darts);
  if (!cfg.output.empty()) write_text_file(cfg.output, write_trails(trails));
  return {trails.empty() ? Exit::none : Exit::ok, r.str(), {}};
}

inline Outcome cmd_find_facetree(const RunConfig& cfg, const Options& opt, const std::string& in) {
  const PlaneGraph h = read_plane_graph_file(in);
  std::vector<FaceId> candidates = opt.faces;
  if (candidates.empty())
    for (FaceId f = 0; f < h.face_count(); ++f) candidates.push_back(f);
  const auto ft = find_face_tree(h, candidates, detail::tree_mode(cfg.mode), cfg.budget);
  Record r = detail::header(h);
  r.set("found", ft.has_value());
  if (ft) {
    r.set("faces", ft->faces).set("proper", ft->proper);
    if (!cfg.output.empty()) write_text_file(cfg.output, to_record(*ft).str());
  }
  return {ft ? Exit::ok : Exit::none, r.str(), {}};
}

inline Outcome cmd_stpp_solve(const RunConfig& cfg, const Options&, const std::string& in) {
  const StppInstance inst = parse_stpp(read_text_file(in));
  const auto sol = solve_stpp(inst, cfg.budget);
  Record r;
  r.set("format", kFormatVersion)
      .set("vertices", inst.vertex_count)
      .set("edges", static_cast<std::int64_t>(inst.edges.size()))
      .set("pairs", static_cast<std::int64_t>(inst.pairs.size()))
      .set("found", sol.has_value());
  if (sol) r.set("tree", sol->edges);
  if (!cfg.output.empty() && sol) write_text_file(cfg.output, Record().set("tree", sol->edges).str());
  return {sol ? Exit::ok : Exit::none, r.str(), {}};
}

/// The colouring from --coloring, else the first colouring with a 3-coloured
/// outer face whose 1-faces all have length 4 or 6.
inline FaceColoring cr2_coloring(const PlaneGraph& g, const Options& opt) {
  if (!opt.coloring.empty()) return coloring_from_record(g, Record::parse(read_text_file(opt.coloring)));
  for (const FaceColoring& c : colorings_with_outer_3(g)) {
    bool fits = true;
    for (FaceId f : c.faces_of(1)) fits = fits && (g.face_length(f) == 4 || g.face_length(f) == 6);
    if (fits) return c;
  }
  throw InputError("no colouring with a 3-coloured outer face has all 1-faces of length 4 or 6");
}

inline Outcome cmd_decide_cr2(const RunConfig& cfg, const Options& opt, const std::string& in) {
  const PlaneGraph g = read_plane_graph_file(in);
  const FaceColoring c = cr2_coloring(g, opt);
  const Cr2Run run = decide_cr2(g, c, cfg.budget);
  Record r = detail::header(g);
  r.set("colors", c.color).set("pairs", static_cast<std::int64_t>(run.instance.pairs.size()));
  r.set("found", run.cycle.has_value());
  if (run.cycle) {
    r.set("tree", run.tree->faces);
    const Record cr = to_record(*run.cycle);
    for (const auto& [k, v] : cr.entries()) r.set(k, v);
    // Without -o the cycle goes next to the input.
    const std::string path = cfg.output.empty() ? in + ".cycle" : cfg.output;
    write_text_file(path, cr.str());
    r.set("cycle_file", path);
  }
  return {run.cycle ? Exit::ok : Exit::none, r.str(), {}};
}

inline Outcome cmd_reduce_th4(const RunConfig& cfg, const Options& opt, const std::string& in) {
  const Th4Artifacts a = build_th4_instance(read_plane_graph_file(in), opt.edge);
  Record map = detail::header(a.h);
  map.set("deleted", a.deleted)
      .set("u", a.u)
      .set("v", a.v)
      .set("quad_of_edge", a.quad_of_edge)
      .set("edge_of_quad", a.edge_of_quad)
      .set("h_colors", a.h_color.color)
      .set("g_vertices", a.g().vertex_count())
      .set("cycle_face", a.expansion.cycle_face)
      .set("g_colors", a.g_color.color);
  detail::write_graph_and_map(cfg, a.h, map);
  if (!opt.expanded.empty()) write_plane_graph_file(a.g(), opt.expanded);
  return {Exit::ok, map.str(), {}};
}

inline Outcome cmd_reduce_cor3(const RunConfig& cfg, const Options& opt, const std::string& in) {
  const Th4Artifacts a = build_th4_instance(read_plane_graph_file(in), opt.edge);
  const Cor3Instance c3 = build_cor3_instance(a);
  Record map = detail::header(c3.hp());
  map.set("octagon_of_vertex", c3.forms.by_1_faces.vertex_map).set("g_colors", c3.forms.color.color);
  detail::write_graph_and_map(cfg, c3.hp(), map);
  if (!opt.expanded.empty()) write_plane_graph_file(a.g(), opt.expanded);
  return {Exit::ok, map.str(), {}};
}

inline Outcome cmd_reduce_cor4(const RunConfig& cfg, const Options& opt, const std::string& in) {
  const Th4Artifacts a = build_th4_instance(read_plane_graph_file(in), opt.edge);
  const Cor4Instance c4 = build_cor4_instance(a);
  std::vector<int> kinds;
  for (auto k : c4.sub.kind) kinds.push_back(static_cast<int>(k));
  Record map = detail::header(c4.h0());
  map.set("source_face", c4.sub.source_face)
      .set("kind", kinds)
      .set("kept_face", c4.sub.kept_face)
      .set("colors", c4.h0_color.color);
  detail::write_graph_and_map(cfg, c4.h0(), map);
  if (!opt.expanded.empty()) write_plane_graph_file(a.h, opt.expanded);
  return {Exit::ok, map.str(), {}};
}

inline Outcome cmd_decompose(const RunConfig& cfg, const Options& opt, const std::string& in) {
  const PlaneGraph r = read_plane_graph_file(in);
  const Thm6Pipeline p = thm6_pipeline(r);
  Record rec = detail::header(r);
  const auto& comps = p.decomposition.components;
  rec.set("components", static_cast<std::int64_t>(comps.size()));
  if (!opt.out_dir.empty()) std::filesystem::create_directories(opt.out_dir);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    rec.set(detail::index_key("forced", i), comps[i].forced);
    if (!opt.out_dir.empty())
      write_plane_graph_file(comps[i].graph, (std::filesystem::path(opt.out_dir) /
                                              ("component." + std::to_string(i) + ".pg")).string());
  }
  Exit code = Exit::ok;
  if (opt.verify) {
    const Thm6Check check = p.verify(r, cfg.budget);
    rec.set("hamiltonian", check.source_hamiltonian);
    std::vector<int> parts(check.component_hamiltonian.begin(), check.component_hamiltonian.end());
    rec.set("component_hamiltonian", parts).set("agrees", check.agrees());
    if (!check.agrees()) code = Exit::none;
  }
  if (!opt.out_dir.empty())
    write_text_file((std::filesystem::path(opt.out_dir) / "components.map").string(), rec.str());
  return {code, rec.str(), {}};
}

inline Outcome cmd_verify_equiv(const RunConfig& cfg, const Options& opt, const std::string& in) {
  const PlaneGraph g = read_plane_graph_file(in);
  Record r = detail::header(g);
  r.set("suite", opt.suite);
  bool agrees = true;
  if (opt.suite == "thm2") {
    const auto colorings = colorings_with_outer_3(g);
    for (std::size_t i = 0; i < colorings.size(); ++i) {
      const FormsReport f = check_forms(g, colorings[i], cfg.budget);
      std::vector<int> exists(f.exists.begin(), f.exists.end());
      r.set(detail::index_key("exists", i), exists).set(detail::index_key("converted", i), f.converted);
      agrees = agrees && f.agrees();
    }
  } else if (opt.suite == "thmB") {
    const FaceColoring c = face_coloring(g, 3);
    for (int q = 1; q <= 3; ++q) {
      const BijectionReport b = check_face_tree_bijection(contract_color_class(g, c, q), cfg.budget);
      r.set(detail::index_key("face_trees", q), b.face_trees)
          .set(detail::index_key("constrained_cycles", q), b.constrained_cycles)
          .set(detail::index_key("inverse", q), b.inverse);
      agrees = agrees && b.agrees();
    }
  } else if (opt.suite == "thmA") {
    const DualTrailReport d = check_dual_trails(g, true, cfg.budget);
    r.set("hamiltonian_cycles", d.cycles).set("nonseparating_trails", d.nonseparating).set("transfers", d.transfers);
    agrees = d.agrees();
  } else if (opt.suite == "thm4") {
    const LeapfrogReport l = check_leapfrog(g, cfg.budget);
    r.set("identity", l.identity).set("mirrored", l.mirrored).set("cycles", l.cycles).set("round_trips", l.round_trips);
    agrees = l.agrees();
  } else {
    throw InputError("unknown suite '" + opt.suite + "' (thm2, thmB, thmA, thm4)");
  }
  r.set("agrees", agrees);
  return {agrees ? Exit::ok : Exit::none, r.str(), {}};
}

/// Cube with `steps` random vertices replaced by cubes.
inline PlaneGraph substituted_cubes(int steps, std::uint64_t seed) {
  require(steps >= 0, "steps must be nonnegative");
  std::mt19937_64 rng(seed);
  PlaneGraph g = cube();
  const PlaneGraph gadget = cube();
  for (int i = 0; i < steps; ++i) {
    const VertexId x = static_cast<VertexId>(rng() % static_cast<std::uint64_t>(g.vertex_count()));
    const auto pairings = planar_pairings(g, x, gadget, 0);
    require(!pairings.empty(), "no planar pairing for substitution");
    g = substitute_vertex(g, x, gadget, 0, pairings.front());
  }
  return g;
}

inline Outcome cmd_gen(const RunConfig& cfg, const Options& opt) {
  if (opt.family == "catalog") {
    const Catalog cat = read_catalog(opt.dir);
    Record r;
    r.set("format", kFormatVersion).set("accepted", static_cast<std::int64_t>(cat.graphs.size()));
    for (const auto& [name, g] : cat.graphs) r.set("graph." + name, static_cast<std::int64_t>(g.vertex_count()));
    r.set("rejected", static_cast<std::int64_t>(cat.rejected.size()));
    for (const auto& [name, why] : cat.rejected) r.set("rejected." + name, why);
    return {Exit::ok, r.str(), {}};
  }
  PlaneGraph g;
  if (opt.family == "cube") {
    g = cube();
  } else if (opt.family == "even_prism") {
    g = even_prism(opt.k);
  } else if (opt.family == "leapfrog_tower") {
    g = leapfrog_tower(opt.base.empty() ? cube() : read_plane_graph_file(opt.base), opt.depth);
  } else if (opt.family == "substituted") {
    g = substituted_cubes(opt.steps, cfg.seed);
  } else {
    throw InputError("unknown family '" + opt.family + "' (cube, even_prism, leapfrog_tower, substituted, catalog)");
  }
  if (!cfg.output.empty()) {
    write_plane_graph_file(g, cfg.output);
    Record r = detail::header(g);
    r.set("barnette", is_barnette(g)).set("goodey", is_goodey(g));
    return {Exit::ok, r.str(), {}};
  }
  return {Exit::ok, write_plane_graph(g), {}};
}

// ---------------------------------------------------------------------------

using Handler = Outcome (*)(const RunConfig&, const Options&, const std::string&);

/// Runs `handler` on every input, `jobs` files at a time, and prints the
/// results in input order.
inline Exit run_inputs(const RunConfig& cfg, const Options& opt, Handler handler, std::ostream& out,
                       std::ostream& err) {
  require(!cfg.inputs.empty(), "no input files");
  require(cfg.inputs.size() == 1 || cfg.output.empty(), "-o needs a single input file");
  std::vector<Outcome> results(cfg.inputs.size());
  const std::size_t width = static_cast<std::size_t>(std::max(1, cfg.jobs));
  for (std::size_t start = 0; start < cfg.inputs.size(); start += width) {
    std::vector<std::future<Outcome>> batch;
    const std::size_t end = std::min(cfg.inputs.size(), start + width);
    for (std::size_t i = start; i < end; ++i)
      batch.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred, [&, i] {
        return detail::guarded([&] { return handler(cfg, opt, cfg.inputs[i]); });
      }));
    for (std::size_t i = start; i < end; ++i) results[i] = batch[i - start].get();
  }
  Exit code = Exit::ok;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (cfg.inputs.size() > 1) out << "file: " << cfg.inputs[i] << "\n";
    out << results[i].text;
    if (!results[i].error.empty()) err << "error: " << cfg.inputs[i] << ": " << results[i].error << "\n";
    code = detail::worst(code, results[i].code);
  }
  return code;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Plane cubic graphs, A-trails and spanning trees of faces", "barnette"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  Options opt;
  app.add_option("--budget-nodes", cfg.budget.max_nodes, "search node cap")->check(CLI::PositiveNumber);
  app.add_option("--budget-seconds", cfg.budget.max_seconds, "search time cap")->check(CLI::PositiveNumber);
  app.add_option("--jobs", cfg.jobs, "input files processed in parallel")->check(CLI::PositiveNumber);
  app.add_option("--format-version", cfg.format_version, "expected file format version");
  app.add_option("--seed", cfg.seed, "seed for randomised fixture generation");

  std::vector<std::pair<CLI::App*, Handler>> handlers;
  auto sub = [&](const char* name, const char* about, Handler h) {
    CLI::App* s = app.add_subcommand(name, about);
    s->add_option("inputs", cfg.inputs, "input files")->required();
    s->add_option("-o,--output", cfg.output, "output file");
    handlers.emplace_back(s, h);
    return s;
  };
  auto mode = [&](CLI::App* s, const char* choices) { s->add_option("--mode", cfg.mode, choices); };

  sub("validate", "check graph properties", cmd_validate)->add_option("--props", opt.props, "properties")->delimiter(',');
  sub("faces", "list faces", cmd_faces);
  sub("dual", "geometric dual", cmd_dual);
  sub("radial", "radial graph", cmd_radial);
  sub("color-faces", "proper face colouring", cmd_color_faces)->add_option("--k", opt.k, "2 or 3");
  auto* contract = sub("contract", "contract a facial 2-factor", cmd_contract);
  contract->add_option("--faces", opt.faces, "faces to contract")->delimiter(',');
  contract->add_option("--color", opt.color, "contract a colour class of the 3-face-colouring");
  sub("leapfrog", "leapfrog extension", cmd_leapfrog);
  sub("expand", "replace every vertex by a cycle", cmd_expand);
  auto* hc = sub("find-hc", "hamiltonian cycles", cmd_find_hc);
  mode(hc, "first, count or all");
  hc->add_option("--forced", opt.forced, "edges every cycle uses")->delimiter(',');
  hc->add_option("--forbidden", opt.forbidden, "edges no cycle uses")->delimiter(',');
  auto* at = sub("find-atrail", "A-trails", cmd_find_atrail);
  mode(at, "first, all, nonseparating_first or nonseparating_all");
  at->add_option("--limit", opt.limit, "stop after this many trails (0 = no limit)");
  auto* ft = sub("find-facetree", "spanning or quasi spanning tree of faces", cmd_find_facetree);
  mode(ft, "spanning or quasi");
  ft->add_option("--faces", opt.faces, "candidate faces (default all)")->delimiter(',');
  sub("stpp-solve", "spanning tree with paired edges", cmd_stpp_solve);
  sub("decide-cr2", "hamiltonian cycle via parity trees", cmd_decide_cr2)
      ->add_option("--coloring", opt.coloring, "face colouring record");
  for (const char* name : {"reduce-th4", "reduce-cor3", "reduce-cor4"}) {
    const std::string n = name;
    Handler h = n == "reduce-th4" ? cmd_reduce_th4 : n == "reduce-cor3" ? cmd_reduce_cor3 : cmd_reduce_cor4;
    auto* s = sub(name, "hardness construction from a 3-connected cubic graph", h);
    s->add_option("--edge", opt.edge, "edge to delete");
    s->add_option("--expanded", opt.expanded, "also write the intermediate graph here");
  }
  auto* dc = sub("decompose-2cuts", "split along 2-edge-cuts", cmd_decompose);
  dc->add_option("--out-dir", opt.out_dir, "directory for the component graphs");
  dc->add_flag("--verify", opt.verify, "check hamiltonicity on both sides with the oracle");
  sub("verify-equiv", "consistency suites", cmd_verify_equiv)
      ->add_option("--suite", opt.suite, "thm2, thmB, thmA or thm4");
  CLI::App* gen = app.add_subcommand("gen", "generate fixtures");
  gen->add_option("--family", opt.family, "cube, even_prism, leapfrog_tower, substituted or catalog");
  gen->add_option("--k", opt.k, "even prism half-length");
  gen->add_option("--depth", opt.depth, "leapfrog depth");
  gen->add_option("--base", opt.base, "base graph for leapfrog towers");
  gen->add_option("--steps", opt.steps, "substitutions");
  gen->add_option("--dir", opt.dir, "catalog directory");
  gen->add_option("-o,--output", cfg.output, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return static_cast<int>(Exit::input);
  }
  if (cfg.format_version != kFormatVersion) {
    err << "error: input: format version " << cfg.format_version << " is not supported (expected " << kFormatVersion
        << ")\n";
    return static_cast<int>(Exit::input);
  }
  if (gen->parsed()) {
    cfg.subcommand = "gen";
    const Outcome o = detail::guarded([&] { return cmd_gen(cfg, opt); });
    out << o.text;
    if (!o.error.empty()) err << "error: " << o.error << "\n";
    return static_cast<int>(o.code);
  }
  for (auto [s, h] : handlers) {
    if (!s->parsed()) continue;
    cfg.subcommand = s->get_name();
    try {
      return static_cast<int>(run_inputs(cfg, opt, h, out, err));
    } catch (const InputError& e) {
      err << "error: input: " << e.what() << "\n";
      return static_cast<int>(Exit::input);
    }
  }
  return static_cast<int>(Exit::input);
}

}  // namespace barnette::cli

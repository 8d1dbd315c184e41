// emptytri: command-line front end over the core library.
//
// Exit codes: 0 success, 2 input or usage error, 3 point set not in general
// position, 4 internal invariant violated (including a failed verify sweep).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "emptytri/emptytri.hpp"

namespace et = emptytri;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitGeometry = 3;
constexpr int kExitInvariant = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw et::InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

et::PointSet load_points(const std::string& path) {
  return et::PointSet(et::parse_points(read_file(path)));
}

void check_apex(const et::PointSet& points, et::Index apex) {
  if (apex >= points.size()) {
    throw et::InputError("apex " + std::to_string(apex) + " out of range for " +
                         std::to_string(points.size()) + " points");
  }
}

// Writes to `path`, or stdout when empty.
template <typename Fn>
void emit(const std::string& path, Fn&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw et::InputError("cannot write " + path);
  write(out);
}

struct AnalyzeArgs {
  std::string file;
  et::Index apex = 0;
  std::string format = "text";
};

int cmd_analyze(const AnalyzeArgs& a) {
  const auto points = load_points(a.file);
  check_apex(points, a.apex);
  const auto counts = et::counts_report(points, a.apex);
  const auto gp = et::build_incidence_graph(points, a.apex);
  const auto triangles = et::count_triangles(gp.graph);
  if (a.format == "json") {
    auto j = et::counts_json(counts);
    j["graph_vertices"] = gp.graph.vertex_count();
    j["graph_edges"] = gp.graph.edge_count();
    j["graph_triangles"] = triangles;
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "n=" << points.size() << '\n'
            << "apex=" << a.apex << '\n'
            << "n_delta_p=" << counts.n_delta_p << '\n'
            << "n_delta_p_minus_x=" << counts.n_delta_p_minus_x << '\n'
            << "v=" << counts.v << '\n'
            << "u=" << counts.u << '\n'
            << "i=" << counts.i << '\n'
            << "delta=" << counts.delta << '\n'
            << "graph_vertices=" << gp.graph.vertex_count() << '\n'
            << "graph_edges=" << gp.graph.edge_count() << '\n'
            << "graph_triangles=" << triangles << '\n';
  return 0;
}

struct GraphArgs {
  std::string file;
  et::Index apex = 0;
  std::string format = "dot";
  std::string output;
};

int cmd_graph(const GraphArgs& a) {
  const auto points = load_points(a.file);
  check_apex(points, a.apex);
  const auto gp = et::build_incidence_graph(points, a.apex);
  emit(a.output, [&](std::ostream& out) {
    if (a.format == "json") {
      out << et::graph_json(gp).dump(2) << '\n';
    } else {
      et::write_graph_dot(out, gp);
    }
  });
  return 0;
}

struct GenArgs {
  std::string family;
  std::uint32_t L = 3;
  std::uint32_t r = 2;
  std::uint32_t s = 3;
  std::uint32_t n = 10;
  std::uint64_t seed = 1;
  std::int64_t grid = et::kRandomGrid;
  std::string output;
};

int cmd_gen(const GenArgs& a) {
  const auto instance = [&] {
    switch (et::parse_family(a.family)) {
      case et::Family::LowerBound: return et::gen_lower_bound(a.L);
      case et::Family::Bipartite: return et::gen_bipartite(a.r, a.s);
      case et::Family::Random: return et::gen_random(a.n, a.seed, a.grid);
      case et::Family::Convex: return et::gen_convex(a.n);
      case et::Family::Figure2: return et::gen_figure2();
    }
    throw et::InputError("unknown family " + a.family);
  }();
  emit(a.output, [&](std::ostream& out) {
    et::write_points(out, instance.points.points(), et::instance_header(instance));
  });
  return 0;
}

struct ExtremalArgs {
  std::uint32_t n = 5;
  std::uint64_t p = 3;
  std::vector<std::uint64_t> residues;
  std::string format = "text";
};

int cmd_extremal_h(const ExtremalArgs& a) {
  if (a.n > et::kMaxExhaustiveVertices) {
    throw et::ResourceError("h(n) is computed exhaustively only for n <= N_max = " +
                            std::to_string(et::kMaxExhaustiveVertices) + ", got n=" +
                            std::to_string(a.n));
  }
  const auto record = et::max_triangles_kite_free(a.n);
  if (a.format == "json") {
    std::cout << et::extremal_json(record).dump(2) << '\n';
    return 0;
  }
  std::cout << "n=" << record.n << '\n' << "h=" << record.h << '\n' << "witness_triangles=";
  const auto triangles = et::list_triangles(record.witness);
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const auto& [x, y, z] = triangles[t];
    std::cout << (t ? " " : "") << x << '-' << y << '-' << z;
  }
  std::cout << '\n' << "witness_edges=" << record.witness.edge_count() << '\n';
  std::cout << "kite_free=" << (et::find_kites(record.witness).empty() ? "yes" : "no") << '\n';
  return 0;
}

int cmd_extremal_behrend(const ExtremalArgs& a) {
  const auto spec = a.residues.empty() ? et::greedy_ap_free(a.p) : et::BehrendSpec(a.p, a.residues);
  const auto g = et::build_behrend_graph(spec);
  const auto report = et::verify_unique_triangle(g);
  const auto triangles = et::count_triangles(g);
  if (a.format == "json") {
    nlohmann::ordered_json j;
    j["p"] = spec.p();
    j["residues"] = spec.residues();
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["triangles"] = triangles;
    j["unique_triangle"] = report.unique;
    j["graph"] = et::graph_json(g);
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << g.vertex_count() << " vertices, " << g.edge_count() << " edges, " << triangles
            << " triangles, unique-triangle: " << (report.unique ? "pass" : "fail") << '\n';
  return 0;
}

struct RealizeArgs {
  std::string target;
  std::uint32_t budget_points = 10;
  std::uint64_t budget_trials = 100'000;
  std::int64_t grid = 16;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  bool force_search = false;
  std::string output;
};

et::Graph builtin_or_file(const std::string& target) {
  if (target == "paley9") return et::paley9();
  if (target == "k3") return et::Graph(3, std::vector<et::Edge>{{0, 1}, {0, 2}, {1, 2}});
  if (target == "single") return et::Graph(1);
  return et::parse_graph(read_file(target));
}

int cmd_realize(const RealizeArgs& a) {
  const auto target = builtin_or_file(a.target);
  const auto verdict = et::counting_feasibility(target);
  std::cout << "target: " << target.vertex_count() << " vertices, " << target.edge_count()
            << " edges, " << verdict.t << " triangles\n";
  std::cout << "verdict: " << et::feasibility_name(verdict.status);
  if (!verdict.rule.empty()) std::cout << " (" << verdict.rule << ")";
  std::cout << '\n' << "detail: " << verdict.detail << '\n';
  if (verdict.status == et::Feasibility::InfeasibleByCounting && !a.force_search) return 0;

  et::RealizationTask task{target, a.grid, a.budget_points, a.budget_trials, a.seed, a.workers};
  const auto found = et::search_realization(task);
  if (!found) {
    std::cout << "witness: none within " << a.budget_trials << " trials\n";
    return 0;
  }
  std::cout << "witness: trial " << found->trial << ", " << found->points.size()
            << " points, apex " << found->apex << ", re-verified\n";
  const std::vector<std::string> header{
      "realization target=" + a.target + " seed=" + std::to_string(a.seed) +
          " trial=" + std::to_string(found->trial),
      "n=" + std::to_string(found->points.size()), "apex=" + std::to_string(found->apex)};
  if (!a.output.empty()) {
    emit(a.output, [&](std::ostream& out) {
      et::write_points(out, found->points.points(), header);
    });
  } else {
    et::write_points(std::cout, found->points.points(), header);
  }
  return 0;
}

struct VerifyArgs {
  et::SweepOptions options;
  std::string format = "text";
};

int cmd_verify(const VerifyArgs& a) {
  const auto report = et::run_property_sweep(a.options);
  if (a.format == "json") {
    std::cout << et::sweep_json(report).dump(2) << '\n';
  } else {
    std::cout << "instances=" << report.instances << '\n'
              << "apex_checks=" << report.apex_checks << '\n'
              << "interior_edge_in_three=" << report.shared_edges.apexes_with_edge_in_three << '\n'
              << "interior_all_edges_shared=" << report.shared_edges.apexes_with_all_edges_shared
              << '\n'
              << "interior_max_edge_multiplicity=" << report.shared_edges.max_edge_multiplicity
              << '\n'
              << report.violations.size() << " violations\n";
    if (!report.ok()) {
      const auto& v = report.violations.front();
      std::cout << "counterexample: check=" << v.check << " instance=" << v.instance
                << " apex=" << v.apex << '\n'
                << "message: " << v.message << '\n'
                << v.points;
    }
  }
  return report.ok() ? 0 : kExitInvariant;
}

struct ScalingArgs {
  std::uint32_t L_min = 1;
  std::uint32_t L_max = 40;
  std::uint32_t brute_up_to = 8;
  std::string format = "csv";
};

int cmd_scaling(const ScalingArgs& a) {
  const auto report = et::run_scaling(a.L_min, a.L_max, a.brute_up_to);
  if (a.format == "json") {
    std::cout << et::scaling_json(report).dump(2) << '\n';
  } else {
    et::write_scaling_csv(std::cout, report);
    std::cerr << "slope over L=" << report.fit_from << ".." << report.fit_to << ": "
              << et::fixed(report.slope) << '\n';
  }
  return 0;
}

struct DensityArgs {
  std::uint32_t n = 200;
  std::uint32_t trials = 20;
  std::uint64_t seed = 1;
  std::string format = "csv";
};

int cmd_density(const DensityArgs& a) {
  const auto report = et::run_random_density(a.n, a.trials, a.seed);
  if (a.format == "json") {
    std::cout << et::density_json(report).dump(2) << '\n';
  } else {
    et::write_density_csv(std::cout, report);
    std::cerr << "mean=" << et::fixed(report.mean) << " stddev=" << et::fixed(report.stddev)
              << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Empty-triangle counts, incidence graphs and extremal searches"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "emptytri 0.1.0");

  AnalyzeArgs analyze;
  auto* c_analyze = app.add_subcommand("analyze", "Count empty triangles around an apex");
  c_analyze->add_option("file", analyze.file, "Point file")->required();
  c_analyze->add_option("--apex", analyze.apex, "Apex point index")->required();
  c_analyze->add_option("--format", analyze.format)->check(CLI::IsMember({"text", "json"}));

  GraphArgs graph;
  auto* c_graph = app.add_subcommand("graph", "Emit the incidence graph at an apex");
  c_graph->add_option("file", graph.file, "Point file")->required();
  c_graph->add_option("--apex", graph.apex, "Apex point index")->required();
  c_graph->add_option("--format", graph.format)->check(CLI::IsMember({"dot", "json"}));
  c_graph->add_option("-o,--output", graph.output, "Output file (default stdout)");

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen", "Generate a point set");
  c_gen->add_option("family", gen.family, "lower-bound | bipartite | random | convex | figure2")
      ->required();
  c_gen->add_option("--L", gen.L, "Points per chain (lower-bound)");
  c_gen->add_option("--r", gen.r, "Points above the axis (bipartite)");
  c_gen->add_option("--s", gen.s, "Points below the axis (bipartite)");
  c_gen->add_option("--n", gen.n, "Number of points (random, convex)");
  c_gen->add_option("--seed", gen.seed, "Seed (random)");
  c_gen->add_option("--grid", gen.grid, "Lattice side (random)");
  c_gen->add_option("-o,--output", gen.output, "Output file (default stdout)");

  ExtremalArgs extremal;
  auto* c_extremal = app.add_subcommand("extremal", "Kite-free extremal numbers and Behrend graphs");
  c_extremal->require_subcommand(1);
  auto* c_h = c_extremal->add_subcommand("h", "Most triangles in a kite-free graph on n vertices");
  c_h->add_option("--n", extremal.n)->required();
  c_h->add_option("--format", extremal.format)->check(CLI::IsMember({"text", "json"}));
  auto* c_behrend = c_extremal->add_subcommand("behrend", "Behrend graph for a prime p");
  c_behrend->add_option("--p", extremal.p)->required();
  c_behrend->add_option("--set", extremal.residues, "3-AP-free residues (default: greedy)")
      ->delimiter(',');
  c_behrend->add_option("--format", extremal.format)->check(CLI::IsMember({"text", "json"}));

  RealizeArgs realize;
  auto* c_realize = app.add_subcommand("realize", "Counting verdict and realization search");
  c_realize->add_option("target", realize.target, "Graph file, or paley9 | k3 | single")
      ->required();
  c_realize->add_option("--budget-points", realize.budget_points, "Largest point set tried");
  c_realize->add_option("--budget-trials", realize.budget_trials, "Random configurations");
  c_realize->add_option("--grid", realize.grid, "Coordinate bound of sampled points");
  c_realize->add_option("--seed", realize.seed);
  c_realize->add_option("--workers", realize.workers, "Search threads (0: all cores)");
  c_realize->add_flag("--force-search", realize.force_search,
                      "Search even when counting refutes the target");
  c_realize->add_option("-o,--output", realize.output, "Witness point file");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Property sweep over the test corpus");
  c_verify->add_option("--seed", verify.options.seed);
  c_verify->add_option("--sets", verify.options.num_sets, "Random point sets");
  c_verify->add_option("--n-min", verify.options.n_min);
  c_verify->add_option("--n-max", verify.options.n_max);
  c_verify->add_flag("--quick", verify.options.quick, "Small corpus");
  c_verify->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json"}));
  c_verify->add_flag("--inject-fault", verify.options.inject_fault)->group("");

  ScalingArgs scaling;
  auto* c_scaling = app.add_subcommand("scaling", "Lower-bound family counts per L");
  c_scaling->add_option("--L-min", scaling.L_min);
  c_scaling->add_option("--L-max", scaling.L_max);
  c_scaling->add_option("--brute-up-to", scaling.brute_up_to, "Use the brute enumerator up to L");
  c_scaling->add_option("--format", scaling.format)->check(CLI::IsMember({"csv", "json"}));

  DensityArgs density;
  auto* c_density = app.add_subcommand("density", "Empty triangles per n^2 in random sets");
  c_density->add_option("--n", density.n);
  c_density->add_option("--trials", density.trials);
  c_density->add_option("--seed", density.seed);
  c_density->add_option("--format", density.format)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (c_analyze->parsed()) return cmd_analyze(analyze);
    if (c_graph->parsed()) return cmd_graph(graph);
    if (c_gen->parsed()) return cmd_gen(gen);
    if (c_h->parsed()) return cmd_extremal_h(extremal);
    if (c_behrend->parsed()) return cmd_extremal_behrend(extremal);
    if (c_realize->parsed()) return cmd_realize(realize);
    if (c_verify->parsed()) return cmd_verify(verify);
    if (c_scaling->parsed()) return cmd_scaling(scaling);
    if (c_density->parsed()) return cmd_density(density);
  } catch (const et::GeometryError& e) {
    std::cerr << "geometry error: " << e.what() << '\n';
    return kExitGeometry;
  } catch (const et::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const et::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitInput;
  } catch (const et::InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

// main.cpp — radheat command line: classify / solve / mass / simulate /
// compare / catalog over radially symmetric graph families.
#include "radheat/catalog.hpp"
#include "radheat/classify.hpp"
#include "radheat/config.hpp"
#include "radheat/harmonic.hpp"
#include "radheat/heat.hpp"
#include "radheat/report.hpp"
#include "radheat/simulate.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace radheat;

struct FamilyFlags {
  std::string family, k, k_tilde, sphere, weight, k_plus, k_minus, m_zero, intra;
};

GraphFamily resolve_family(const RunConfig& cfg, const FamilyFlags& f) {
  if (f.family.empty()) {
    if (cfg.family) return *cfg.family;
    throw ConfigError("no family given: pass --family plus its sequences, or a config file");
  }
  auto need = [&f](const std::string& text, const char* flag) -> SequenceSpec {
    if (text.empty())
      throw ConfigError("family \"" + f.family + "\" needs " + flag + " (mini-language, e.g. poly:2)");
    return parse_sequence(text);
  };
  if (f.family == "tree") return SymmetricTree{need(f.k, "--k")};
  if (f.family == "decorated-tree") return DecoratedTree{need(f.k, "--k"), need(f.k_tilde, "--kTilde")};
  if (f.family == "intra-sphere-tree") {
    IntraSphereRule rule;
    if (!f.intra.empty()) rule.m_zero = parse_sequence(f.intra);
    return IntraSphereTree{need(f.k, "--k"), std::move(rule)};
  }
  if (f.family == "antitree") return Antitree{need(f.sphere, "--S")};
  if (f.family == "weighted-path") return WeightedPath{need(f.weight, "--a")};
  if (f.family == "custom-radial") {
    RadialProfile p{need(f.k_plus, "--kPlus"), need(f.k_minus, "--kMinus"), need(f.m_zero, "--mZero"),
                    need(f.sphere, "--S"), "custom-radial"};
    return CustomRadial{std::move(p)};
  }
  throw ConfigError("unknown family \"" + f.family +
                    "\" (tree, decorated-tree, intra-sphere-tree, antitree, weighted-path, custom-radial)");
}

std::vector<double> parse_times(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stod(part, &pos));
      if (pos != part.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ConfigError("bad time value \"" + part + "\" in --times");
    }
  }
  if (out.empty()) throw ConfigError("--times must list at least one value");
  return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot open output file \"" + path + "\"");
  return f;
}

RadialSolution solve_family(const GraphFamily& g, const RunConfig& cfg) {
  const LambdaParam lam(static_cast<Real>(cfg.lambda));
  const Attachment att = cfg.attachment == "path" ? Attachment::PathToInfinity : Attachment::EndVertex;
  if (const auto* dt = std::get_if<DecoratedTree>(&g))
    return solve_decorated_tree(dt->k, dt->k_tilde, lam, cfg.depth, att);
  if (const auto* wp = std::get_if<WeightedPath>(&g)) return solve_weighted_path(wp->weight, lam, cfg.depth);
  return solve_radial(lower_to_profile(g), lam, cfg.depth);
}

int cmd_classify(const GraphFamily& g, const RunConfig& cfg) {
  ClassifyOptions opt;
  opt.numeric_horizon = cfg.numeric_horizon;
  const Verdict v = classify(g, opt);
  emit(Json{{"command", "classify"}, {"family", family_to_json(g)}, {"verdict", verdict_to_json(v)}});
  return v.status == Completeness::Inconclusive ? 2 : 0;
}

int cmd_solve(const GraphFamily& g, const RunConfig& cfg) {
  const RadialSolution s = solve_family(g, cfg);
  const BoundednessReport probe = boundedness_probe(s);
  emit(Json{{"command", "solve"},
            {"family", family_to_json(g)},
            {"solution", solution_to_json(s, probe)}});
  return 0;
}

int cmd_mass(const GraphFamily& g, const RunConfig& cfg) {
  SemigroupOptions sopt;
  sopt.step_tol = cfg.solver_tol;
  const Solver solver = parse_solver(cfg.solver);

  if (cfg.at_r) {
    AdvanceStats stats;
    const std::vector<double> mass = mass_at_radius(g, *cfg.at_r, cfg.times, solver, sopt, &stats);
    emit(Json{{"command", "mass"},
              {"family", family_to_json(g)},
              {"atR", *cfg.at_r},
              {"times", cfg.times},
              {"mass", mass},
              {"solver", stats.solver},
              {"work", stats.work}});
    return 0;
  }

  MassOptions mopt;
  mopt.times = cfg.times;
  mopt.r_start = cfg.r_start;
  mopt.r_max = cfg.r_max;
  mopt.doubling_tol = cfg.doubling_tol;
  mopt.solver = solver;
  mopt.semigroup = sopt;
  const MassCurve curve = dirichlet_mass(g, mopt);
  if (!cfg.out.empty()) {
    auto f = open_out(cfg.out);
    write_mass_curve_csv(f, curve);
  }
  emit(Json{{"command", "mass"}, {"family", family_to_json(g)}, {"curve", mass_diagnostics_json(curve)}});
  return 0;
}

int cmd_simulate(const GraphFamily& g, const RunConfig& cfg) {
  if (cfg.trace && cfg.out.empty()) throw ConfigError("--trace needs --out for the trace csv");
  const SurvivalEstimate est = estimate_survival(g, cfg.horizon, cfg.paths, cfg.r_sim, cfg.seed);
  if (cfg.trace) {
    const long traced = std::min<long>(cfg.paths, 10);
    std::vector<std::vector<TraceRow>> traces(static_cast<size_t>(traced));
    const SimTables tables = sim_tables(g, cfg.r_sim);
    for (long i = 0; i < traced; ++i)
      simulate_path(tables, cfg.horizon, cfg.seed + static_cast<std::uint64_t>(i),
                    &traces[static_cast<size_t>(i)]);
    auto f = open_out(cfg.out);
    write_trace_csv(f, traces);
  }
  emit(Json{{"command", "simulate"}, {"family", family_to_json(g)}, {"survival", survival_to_json(est)}});
  return 0;
}

int cmd_compare(const GraphFamily& g, const RunConfig& cfg) {
  const auto* tree = std::get_if<SymmetricTree>(&g);
  if (!tree) throw ConfigError("compare works on --family tree (lateral edges are added internally)");
  const ComparisonReport rep = comparison_test(tree->k, cfg.compare_radius, cfg.compare_t, cfg.vertex_cap);
  emit(Json{{"command", "compare"},
            {"family", family_to_json(g)},
            {"comparison", comparison_to_json(rep, cfg.compare_tol)}});
  return 0;
}

int cmd_catalog(const RunConfig& cfg) {
  const std::vector<CatalogEntry> entries =
      cfg.catalog_file.empty() ? builtin_catalog() : load_catalog_file(cfg.catalog_file);
  if (entries.empty()) throw ConfigError("catalog is empty");
  ClassifyOptions opt;
  opt.numeric_horizon = cfg.numeric_horizon;
  const CatalogReport rep = run_catalog(entries, opt);
  Json rows = Json::array();
  for (const auto& row : rep.rows)
    rows.push_back(Json{{"name", row.name},
                        {"expected", completeness_name(row.expected)},
                        {"got", verdict_to_json(row.got)},
                        {"pass", row.pass}});
  emit(Json{{"command", "catalog"},
            {"rows", rows},
            {"passed", rep.passed},
            {"total", static_cast<long>(rep.rows.size())},
            {"allPass", rep.all_pass}});
  return rep.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radheat: stochastic completeness of radially symmetric graphs\n"
               "series verdicts, harmonic growth, Dirichlet heat mass, Monte Carlo"};
  app.require_subcommand(1);

  std::string config_path;
  FamilyFlags ff;
  app.add_option("--config", config_path, "JSON config file (flags override it)");
  app.add_option("--family", ff.family,
                 "tree | decorated-tree | intra-sphere-tree | antitree | weighted-path | custom-radial");
  app.add_option("--k", ff.k, "branching sequence (mini-language, e.g. const:2, poly:2, geom:1,2)");
  app.add_option("--kTilde", ff.k_tilde, "pendant ends per vertex (decorated trees)");
  app.add_option("--S", ff.sphere, "sphere sizes (antitree, custom-radial)");
  app.add_option("--a", ff.weight, "edge weights (weighted paths)");
  app.add_option("--kPlus", ff.k_plus, "outward degrees (custom-radial)");
  app.add_option("--kMinus", ff.k_minus, "inward degrees (custom-radial)");
  app.add_option("--mZero", ff.m_zero, "lateral degrees (custom-radial)");
  app.add_option("--intra", ff.intra, "explicit lateral degrees (intra-sphere-tree; default complete)");

  std::optional<double> lambda, horizon, solver_tol, doubling_tol, compare_t, compare_tol;
  std::optional<long> depth, r_start, r_max, at_r, paths, r_sim, compare_radius, vertex_cap,
      numeric_horizon;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> attachment, times_text, solver, out, catalog_file;
  std::optional<bool> trace;
  app.add_option("--lambda", lambda, "spectral parameter of the harmonic solve (> 0)");
  app.add_option("--depth", depth, "radial depth of the harmonic solve");
  app.add_option("--attachment", attachment, "decorated-tree end model: end | path");
  app.add_option("--times", times_text, "comma-separated time grid, e.g. 0.5,1,2");
  app.add_option("--rStart", r_start, "first truncation radius of the doubling scan");
  app.add_option("--rMax", r_max, "truncation radius ceiling");
  app.add_option("--atR", at_r, "evaluate the mass at one radius, no doubling");
  app.add_option("--solver", solver, "semigroup solver: auto | uniformization | trbdf2");
  app.add_option("--solverTol", solver_tol, "accuracy target per advance");
  app.add_option("--doublingTol", doubling_tol, "stop doubling when the curve moves less than this");
  app.add_option("--paths", paths, "Monte Carlo path count");
  app.add_option("--seed", seed, "seed base; path i uses seed+i");
  app.add_option("--rSim", r_sim, "truncation radius of the simulation (escape = explosion)");
  app.add_option("--horizon", horizon, "time horizon of the simulation");
  app.add_flag("--trace", trace, "write a path trace csv (first 10 paths) to --out");
  app.add_option("--compareRadius", compare_radius, "ball radius of the kernel comparison");
  app.add_option("--compareT", compare_t, "kernel time of the comparison");
  app.add_option("--vertexCap", vertex_cap, "ball materialization cap");
  app.add_option("--compareTol", compare_tol, "pass threshold of the comparison");
  app.add_option("--numericHorizon", numeric_horizon, "partial-sum depth of numeric classification");
  app.add_option("--out", out, "CSV output path");
  app.add_option("--catalogFile", catalog_file, "JSON catalog to run instead of the built-in one");

  CLI::App* sub_classify = app.add_subcommand("classify", "series verdict for a family");
  CLI::App* sub_solve = app.add_subcommand("solve", "radial lambda-harmonic solution and growth probe");
  CLI::App* sub_mass = app.add_subcommand("mass", "Dirichlet heat-semigroup mass under radius doubling");
  CLI::App* sub_simulate = app.add_subcommand("simulate", "Monte Carlo survival estimate");
  CLI::App* sub_compare = app.add_subcommand("compare", "tree vs intra-sphere ball kernel comparison");
  CLI::App* sub_catalog = app.add_subcommand("catalog", "run the verdict catalog");
  for (CLI::App* s : {sub_classify, sub_solve, sub_mass, sub_simulate, sub_compare, sub_catalog})
    s->fallthrough();

  try {
    app.parse(argc, argv);

    RunConfig cfg;
    if (!config_path.empty()) cfg = load_config_file(config_path);
    if (lambda) cfg.lambda = *lambda;
    if (depth) cfg.depth = *depth;
    if (attachment) cfg.attachment = *attachment;
    if (times_text) cfg.times = parse_times(*times_text);
    if (r_start) cfg.r_start = *r_start;
    if (r_max) cfg.r_max = *r_max;
    if (at_r) cfg.at_r = *at_r;
    if (solver) cfg.solver = *solver;
    if (solver_tol) cfg.solver_tol = *solver_tol;
    if (doubling_tol) cfg.doubling_tol = *doubling_tol;
    if (paths) cfg.paths = *paths;
    if (seed) cfg.seed = *seed;
    if (r_sim) cfg.r_sim = *r_sim;
    if (horizon) cfg.horizon = *horizon;
    if (trace) cfg.trace = *trace;
    if (compare_radius) cfg.compare_radius = *compare_radius;
    if (compare_t) cfg.compare_t = *compare_t;
    if (vertex_cap) cfg.vertex_cap = *vertex_cap;
    if (compare_tol) cfg.compare_tol = *compare_tol;
    if (numeric_horizon) cfg.numeric_horizon = *numeric_horizon;
    if (out) cfg.out = *out;
    if (catalog_file) cfg.catalog_file = *catalog_file;
    if (cfg.attachment != "end" && cfg.attachment != "path")
      throw ConfigError("attachment must be \"end\" or \"path\"");
    parse_solver(cfg.solver);

    if (sub_catalog->parsed()) return cmd_catalog(cfg);
    const GraphFamily g = resolve_family(cfg, ff);
    if (sub_classify->parsed()) return cmd_classify(g, cfg);
    if (sub_solve->parsed()) return cmd_solve(g, cfg);
    if (sub_mass->parsed()) return cmd_mass(g, cfg);
    if (sub_simulate->parsed()) return cmd_simulate(g, cfg);
    if (sub_compare->parsed()) return cmd_compare(g, cfg);
    throw ConfigError("no command given");
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

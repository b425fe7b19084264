#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "hoising/cut_dynamics.hpp"
#include "hoising/error.hpp"
#include "hoising/instances.hpp"
#include "hoising/nae_dynamics.hpp"
#include "hoising/oracle.hpp"
#include "hoising/sde.hpp"

namespace hoising::cli {
namespace {

using Json = nlohmann::ordered_json;

// Bad flag combination; reported together with the subcommand's usage.
class UsageError : public InputError {
 public:
  using InputError::InputError;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("failed writing '" + path + "'");
}

// What a solve or audit needs before the model exists. Unset optionals take
// the per-family defaults.
struct RunSpec {
  Problem problem = Problem::kNaeSat;
  std::string input;
  int k = 0;  // 0: take K from the CNF clause width
  std::optional<double> coupling;
  std::optional<double> harmonic;
  std::optional<double> sigma;
  SolverConfig solver;
};

struct BoundRun {
  RunSpec spec;  // every optional filled in
  bool tabulated = true;
  std::shared_ptr<const PhaseModel> model;
};

BoundRun bind(RunSpec spec) {
  BoundRun bound;
  const auto text = read_file(spec.input);
  if (spec.problem == Problem::kNaeSat) {
    if (spec.sigma) throw InputError("--sigma applies to hyper-maxcut only");
    const auto inst = parse_dimacs(text);
    const int width = static_cast<int>(inst.k());
    if (spec.k != 0 && spec.k != width) {
      throw InputError("--k " + std::to_string(spec.k) + " does not match the clause width " + std::to_string(width));
    }
    spec.k = width;
    auto c = nae_constants_for(inst.k());
    if (spec.coupling) c.coupling = *spec.coupling;
    if (spec.harmonic) c.harmonic = *spec.harmonic;
    spec.coupling = c.coupling;
    spec.harmonic = c.harmonic;
    bound.tabulated = nae_constants_tabulated(inst.k());
    bound.model = make_nae_model(inst, c);
  } else {
    if (spec.k < 2) throw InputError("--k (at least 2) is required for hyper-maxcut");
    const auto graph = parse_hypergraph(text);
    auto c = cut_constants_for(spec.k);
    if (spec.coupling) c.coupling = *spec.coupling;
    if (spec.harmonic) c.harmonic = *spec.harmonic;
    if (spec.sigma) c.sigma = *spec.sigma;
    spec.coupling = c.coupling;
    spec.harmonic = c.harmonic;
    spec.sigma = c.sigma;
    bound.tabulated = cut_constants_tabulated(spec.k);
    bound.model = make_cut_model(graph, spec.k, c);
  }
  bound.spec = std::move(spec);
  return bound;
}

Json config_echo(const BoundRun& run, const SolverConfig& c) {
  const auto& s = run.spec;
  Json j;
  j["problem"] = to_string(s.problem);
  j["input"] = s.input;
  j["k"] = s.k;
  j["coupling"] = *s.coupling;
  j["harmonic"] = *s.harmonic;
  if (s.sigma) j["sigma"] = *s.sigma;
  j["constants_tabulated"] = run.tabulated;
  j["dt"] = c.dt;
  j["steps"] = c.steps;
  j["noise"] = c.noise_amplitude;
  j["schedule"] = to_string(c.schedule);
  j["decay_end"] = c.decay_end.value_or(0);
  j["restarts"] = c.restarts;
  j["seed"] = c.seed;
  j["record_every"] = c.record_every;
  j["target"] = c.target ? Json(*c.target) : Json(nullptr);
  j["threads"] = c.threads;
  return j;
}

RunSpec spec_from_echo(const Json& doc) {
  const Json& j = doc.contains("config") ? doc.at("config") : doc;
  RunSpec s;
  s.problem = parse_problem(j.at("problem").get<std::string>());
  s.input = j.at("input").get<std::string>();
  s.k = j.at("k").get<int>();
  s.coupling = j.at("coupling").get<double>();
  s.harmonic = j.at("harmonic").get<double>();
  if (j.contains("sigma")) s.sigma = j.at("sigma").get<double>();
  auto& c = s.solver;
  c.dt = j.at("dt").get<double>();
  c.steps = j.at("steps").get<std::size_t>();
  c.noise_amplitude = j.at("noise").get<double>();
  c.schedule = parse_noise_schedule(j.at("schedule").get<std::string>());
  c.decay_end = j.at("decay_end").get<std::size_t>();
  c.restarts = j.at("restarts").get<std::size_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.record_every = j.at("record_every").get<std::size_t>();
  if (!j.at("target").is_null()) c.target = j.at("target").get<std::size_t>();
  c.threads = j.value("threads", std::size_t{1});
  return s;
}

std::string trace_csv(const SolveResult& r) {
  std::ostringstream csv;
  csv << "restart,step,energy,metric\n" << std::setprecision(17);
  for (const auto& rec : r.trace) csv << rec.restart << ',' << rec.step << ',' << rec.energy << ',' << rec.metric << '\n';
  return csv.str();
}

Json result_document(const BoundRun& run, const SolveResult& r) {
  Json doc;
  doc["config"] = config_echo(run, r.config);
  doc["metric_bound"] = run.model->metric_bound();
  Json solution = Json::object();
  for (std::size_t i = 0; i < r.best_values.size(); ++i) solution[std::to_string(i + 1)] = r.best_values[i];
  doc["best"] = {{"metric", r.best_metric},
                 {"restart", r.best_restart},
                 {"step", r.best_step},
                 {"final_energy", r.final_energy},
                 {"solution", solution}};
  Json restarts = Json::array();
  for (const auto& s : r.restarts) {
    restarts.push_back({{"restart", s.restart},
                        {"seed", s.seed},
                        {"best_metric", s.best_metric},
                        {"best_step", s.best_step},
                        {"steps_taken", s.steps_taken},
                        {"final_energy", s.final_energy},
                        {"reached_target", s.reached_target}});
  }
  doc["restarts"] = restarts;
  return doc;
}

std::string metric_noun(Problem p) { return p == Problem::kNaeSat ? "clauses satisfied" : "hyperedges cut"; }

// Flags shared by solve and audit.
struct ModelFlags {
  std::string problem;
  std::string input;
  int k = 0;
  double coupling = 0.0;
  double harmonic = 0.0;
  double sigma = 0.0;
  CLI::Option* problem_opt = nullptr;
  CLI::Option* input_opt = nullptr;
  CLI::Option* k_opt = nullptr;
  CLI::Option* coupling_opt = nullptr;
  CLI::Option* harmonic_opt = nullptr;
  CLI::Option* sigma_opt = nullptr;

  void attach(CLI::App* app) {
    problem_opt = app->add_option("--problem", problem, "nae-sat or hyper-maxcut")
                      ->check(CLI::IsMember({"nae-sat", "hyper-maxcut"}));
    input_opt = app->add_option("--input", input, "Instance file (DIMACS cnf or p hyp)");
    k_opt = app->add_option("--k", k, "Partition count (hyper-maxcut); clause width check (nae-sat)");
    coupling_opt = app->add_option("--coupling", coupling, "Interaction strength C or A");
    harmonic_opt = app->add_option("--harmonic", harmonic, "Harmonic injection strength C_s or A_s");
    sigma_opt = app->add_option("--sigma", sigma, "Phase-penalty bump width (hyper-maxcut)");
  }

  std::vector<CLI::Option*> all() const { return {problem_opt, input_opt, k_opt, coupling_opt, harmonic_opt, sigma_opt}; }

  RunSpec spec() const {
    if (problem_opt->count() == 0) throw UsageError("--problem is required");
    if (input_opt->count() == 0) throw UsageError("--input is required");
    RunSpec s;
    s.problem = parse_problem(problem);
    s.input = input;
    if (k_opt->count()) s.k = k;
    if (coupling_opt->count()) s.coupling = coupling;
    if (harmonic_opt->count()) s.harmonic = harmonic;
    if (sigma_opt->count()) s.sigma = sigma;
    if (s.problem == Problem::kHyperMaxCut && k_opt->count() == 0) {
      throw UsageError("--k is required for hyper-maxcut");
    }
    return s;
  }
};

struct SolveFlags {
  ModelFlags model;
  SolverConfig solver;
  std::string schedule = "decay";
  std::size_t decay_end = 0;
  std::size_t target = 0;
  std::string out_path;
  std::string trace_path;
  std::string replay_path;
  std::vector<CLI::Option*> solver_opts;
  CLI::Option* noise_opt = nullptr;
  CLI::Option* dt_opt = nullptr;
  CLI::Option* decay_opt = nullptr;
  CLI::Option* target_opt = nullptr;
  CLI::Option* replay_opt = nullptr;

  void attach(CLI::App* app) {
    model.attach(app);
    dt_opt = app->add_option("--dt", solver.dt, "Time step (default 1e-3 nae-sat, 1e-2 hyper-maxcut)");
    noise_opt = app->add_option("--noise", solver.noise_amplitude, "Noise amplitude (default 3.0 nae-sat, 0.3 hyper-maxcut)");
    solver_opts = {
        dt_opt,
        noise_opt,
        app->add_option("--steps", solver.steps, "Steps per restart")->capture_default_str(),
        app->add_option("--schedule", schedule, "Noise schedule")->check(CLI::IsMember({"constant", "decay"}))->capture_default_str(),
        decay_opt = app->add_option("--decay-end", decay_end, "Step where decaying noise reaches zero (default 80% of steps)"),
        app->add_option("--restarts", solver.restarts, "Independent restarts")->capture_default_str(),
        app->add_option("--seed", solver.seed, "Base seed; restart r uses seed + r")->capture_default_str(),
        app->add_option("--record-every", solver.record_every, "Trace sampling stride")->capture_default_str(),
        target_opt = app->add_option("--target", target, "Stop a restart once this metric is reached"),
    };
    app->add_option("--threads", solver.threads, "Worker threads for restarts")->capture_default_str();
    app->add_option("--out", out_path, "Write the result document (JSON) here");
    app->add_option("--trace", trace_path, "Write the trace CSV here");
    replay_opt = app->add_option("--replay", replay_path, "Rerun from a result document's config");
  }

  RunSpec spec() const {
    if (replay_opt->count()) {
      for (const auto* opt : model.all()) {
        if (opt->count()) throw UsageError("--replay cannot be combined with " + opt->get_name());
      }
      for (const auto* opt : solver_opts) {
        if (opt->count()) throw UsageError("--replay cannot be combined with " + opt->get_name());
      }
      Json doc;
      try {
        doc = Json::parse(read_file(replay_path));
      } catch (const Json::exception& e) {
        throw InputError("cannot use '" + replay_path + "' as a config: " + e.what());
      }
      try {
        auto s = spec_from_echo(doc);
        s.solver.threads = solver.threads;
        return s;
      } catch (const Json::exception& e) {
        throw InputError("incomplete config in '" + replay_path + "': " + e.what());
      }
    }
    auto s = model.spec();
    const auto defaults = default_config(s.problem);
    s.solver = solver;
    if (!dt_opt->count()) s.solver.dt = defaults.dt;
    if (!noise_opt->count()) s.solver.noise_amplitude = defaults.noise_amplitude;
    s.solver.schedule = parse_noise_schedule(schedule);
    if (decay_opt->count()) s.solver.decay_end = decay_end;
    if (target_opt->count()) s.solver.target = target;
    return s;
  }
};

int do_solve(const SolveFlags& flags, std::ostream& out) {
  const auto bound = bind(flags.spec());
  const auto result = run(*bound.model, bound.spec.solver);
  if (!flags.out_path.empty()) write_file(flags.out_path, result_document(bound, result).dump(2) + "\n");
  if (!flags.trace_path.empty()) write_file(flags.trace_path, trace_csv(result));
  std::size_t reached = 0;
  for (const auto& s : result.restarts) reached += s.best_metric == result.best_metric;
  out << to_string(bound.spec.problem) << ": best " << result.best_metric << "/" << bound.model->metric_bound() << ' '
      << metric_noun(bound.spec.problem) << " (restart " << result.best_restart << ", step " << result.best_step
      << "); " << reached << "/" << result.restarts.size() << " restarts reached it\n";
  return kExitOk;
}

struct AuditFlags {
  ModelFlags model;
  double dt = 0.0;
  std::size_t steps = 2000;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  CLI::Option* dt_opt = nullptr;

  void attach(CLI::App* app) {
    model.attach(app);
    dt_opt = app->add_option("--dt", dt, "Time step (default: the family's solver default)");
    app->add_option("--steps", steps, "Noise-free steps")->capture_default_str();
    app->add_option("--seed", seed, "Seed for the initial phases and gradient samples")->capture_default_str();
    app->add_option("--samples", samples, "Random states for the gradient check")->capture_default_str();
  }
};

int do_audit(const AuditFlags& flags, std::ostream& out) {
  const auto bound = bind(flags.model.spec());
  const auto problem = bound.spec.problem;
  AuditOptions options;
  options.dt = flags.dt_opt->count() ? flags.dt : default_config(problem).dt;
  options.steps = flags.steps;
  options.seed = flags.seed;
  const auto report = lyapunov_audit(*bound.model, options);
  const double gradient = flags.samples ? gradient_audit(*bound.model, flags.samples, flags.seed) : 0.0;
  const double gradient_limit = problem == Problem::kNaeSat ? kAuditNaeGradient : kAuditCutGradient;

  const bool descent_ok = report.max_increase <= kAuditMaxIncrease && (report.steps == 0 || report.total_change() < 0.0);
  const bool gradient_ok = gradient <= gradient_limit;
  out << "dt: " << options.dt << ", steps: " << report.steps << "\n"
      << "max step increase: " << report.max_increase << " (limit " << kAuditMaxIncrease << ")\n"
      << "total energy change: " << report.total_change() << " (must be negative)\n"
      << "excluded steps: " << report.excluded_steps << "\n"
      << "gradient relative error: " << gradient << " (limit " << gradient_limit << ")\n"
      << "result: " << (descent_ok && gradient_ok ? "pass" : "fail") << "\n";
  return descent_ok && gradient_ok ? kExitOk : kExitFailure;
}

struct OracleFlags {
  ModelFlags model;
  void attach(CLI::App* app) { model.attach(app); }
};

int do_oracle(const OracleFlags& flags, std::ostream& out) {
  const auto spec = flags.model.spec();
  const auto text = read_file(spec.input);
  if (spec.problem == Problem::kNaeSat) {
    const auto inst = parse_dimacs(text);
    const auto best = brute_force_nae(inst);
    out << "optimum: " << best.max_satisfied << "/" << inst.num_clauses() << " clauses satisfied\nassignment:";
    for (const int s : best.assignment.values()) out << ' ' << s;
  } else {
    const auto graph = parse_hypergraph(text);
    const auto best = brute_force_maxkcut(graph, spec.k);
    out << "optimum: " << best.max_cut << "/" << graph.num_edges() << " hyperedges cut\nlabels:";
    for (const int l : best.labels.labels()) out << ' ' << l;
  }
  out << "\n";
  return kExitOk;
}

struct GenerateFlags {
  std::size_t vars = 20;
  std::size_t clauses = 50;
  std::size_t k = 4;
  std::size_t nodes = 10;
  std::size_t edges = 20;
  std::size_t min_size = 2;
  std::size_t max_size = 4;
  std::uint64_t nae_seed = 0;
  std::uint64_t graph_seed = 0;
  std::string nae_out;
  std::string graph_out;
  CLI::App* planted = nullptr;
  CLI::App* hypergraph = nullptr;

  void attach(CLI::App* app) {
    planted = app->add_subcommand("planted-nae", "Planted satisfiable NAE-K-SAT instance (DIMACS)");
    planted->add_option("--vars", vars, "Variables")->capture_default_str();
    planted->add_option("--clauses", clauses, "Clauses")->capture_default_str();
    planted->add_option("--k", k, "Literals per clause")->capture_default_str();
    planted->add_option("--seed", nae_seed, "Seed")->capture_default_str();
    planted->add_option("--out", nae_out, "Output file (default stdout)");
    hypergraph = app->add_subcommand("hypergraph", "Random hypergraph (p hyp format)");
    hypergraph->add_option("--nodes", nodes, "Nodes")->capture_default_str();
    hypergraph->add_option("--edges", edges, "Hyperedges")->capture_default_str();
    hypergraph->add_option("--min", min_size, "Smallest hyperedge")->capture_default_str();
    hypergraph->add_option("--max", max_size, "Largest hyperedge")->capture_default_str();
    hypergraph->add_option("--seed", graph_seed, "Seed")->capture_default_str();
    hypergraph->add_option("--out", graph_out, "Output file (default stdout)");
    app->require_subcommand(1);
  }
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

int do_generate(const GenerateFlags& flags, std::ostream& out) {
  if (*flags.planted) {
    const auto p = generate_planted_nae(flags.vars, flags.clauses, flags.k, flags.nae_seed);
    std::ostringstream plant;
    plant << "planted assignment:";
    for (std::size_t i = 0; i < p.plant.size(); ++i) plant << ' ' << (p.plant[i] > 0 ? "" : "-") << i + 1;
    const std::vector<std::string> comments{
        "planted-nae vars=" + std::to_string(flags.vars) + " clauses=" + std::to_string(flags.clauses) +
            " k=" + std::to_string(flags.k) + " seed=" + std::to_string(flags.nae_seed),
        plant.str()};
    emit(flags.nae_out, write_dimacs(p.instance, comments), out);
  } else {
    const auto g = generate_random_hypergraph(flags.nodes, flags.edges, flags.min_size, flags.max_size, flags.graph_seed);
    const std::vector<std::string> comments{"uniform-random hypergraph nodes=" + std::to_string(flags.nodes) +
                                            " edges=" + std::to_string(flags.edges) +
                                            " min=" + std::to_string(flags.min_size) +
                                            " max=" + std::to_string(flags.max_size) +
                                            " seed=" + std::to_string(flags.graph_seed)};
    emit(flags.graph_out, write_hypergraph(g, comments), out);
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oscillator phase dynamics for NAE-K-SAT and hypergraph Max-K-Cut", "hoising"};
  app.require_subcommand(1);

  SolveFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "Integrate the noisy phase dynamics and report the best snapped solution");
  solve_flags.attach(solve);

  GenerateFlags generate_flags;
  auto* generate = app.add_subcommand("generate", "Write a random instance");
  generate_flags.attach(generate);

  OracleFlags oracle_flags;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum for small instances");
  oracle_flags.attach(oracle);

  AuditFlags audit_flags;
  auto* audit = app.add_subcommand("audit", "Noise-free descent and gradient checks");
  audit_flags.attach(audit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  CLI::App* active = nullptr;
  try {
    if (*solve) {
      active = solve;
      return do_solve(solve_flags, out);
    }
    if (*generate) {
      active = generate;
      return do_generate(generate_flags, out);
    }
    if (*oracle) {
      active = oracle;
      return do_oracle(oracle_flags, out);
    }
    active = audit;
    return do_audit(audit_flags, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    if (active != nullptr) err << "Run 'hoising " << active->get_name() << " --help' for usage.\n";
    return kExitInput;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"hoising"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hoising::cli

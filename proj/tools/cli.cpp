#include "switchopt/cli.hpp"

#include "switchopt/analysis.hpp"
#include "switchopt/bench.hpp"
#include "switchopt/generate.hpp"
#include "switchopt/minlp.hpp"
#include "switchopt/reductions.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace switchopt {

namespace {

constexpr int exit_usage = 1;
constexpr int exit_numeric = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out)
    throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

template <Scalar T>
void override_objective(Instance<T>& inst, const std::string& kind) {
  if (kind.empty())
    return;
  ObjectiveKind k = parse_objective_kind(kind);
  if (k == inst.objective.kind)
    return;
  switch (k) {
  case ObjectiveKind::l1: inst.objective = Objective<T>::l1(); break;
  case ObjectiveKind::l2sq: inst.objective = Objective<T>::l2sq(); break;
  case ObjectiveKind::linf: inst.objective = Objective<T>::linf(); break;
  default: throw InvalidArgument("--objective linear needs the coefficients in the instance file");
  }
}

Instance<Rational> require_exact(const AnyInstance& any, const char* command) {
  if (const auto* inst = std::get_if<Instance<Rational>>(&any))
    return *inst;
  throw InvalidArgument(std::string(command) + " needs an instance with \"arithmetic\": \"exact\"");
}

struct Args {
  std::string instance;
  std::string objective;
  std::string engine = "auto";
  std::string trace_out;
  std::string csv;
  std::string output;
  std::string norm = "2";
  std::string grid;
  bool rescale = false;
  bool serial = false;
  bool integer = false;
  bool right_stochastic = false;
  bool no_rescale = false;
  std::size_t k = 0;
  std::size_t n = 2, m = 2, K = 10;
  std::uint64_t seed = 1;
  std::uint64_t cap = default_enumeration_cap;
  double time_limit = 600;
};

SolverOptions solver_options(const Args& a) {
  SolverOptions opt;
  opt.engine = parse_engine(a.engine);
  opt.rescale = a.rescale;
  opt.hull.parallel = !a.serial;
  return opt;
}

int run_solve(const Args& a, std::ostream& out) {
  AnyInstance any = load_instance(a.instance);
  std::visit(
      [&](auto inst) {
        override_objective(inst, a.objective);
        auto res = solve(inst, solver_options(a));
        out << "value: " << to_string(res.value) << '\n';
        out << "log10 value: " << res.log10_value << '\n';
        out << "x(K): " << format_vector(res.xK) << '\n';
        out << "sequence: " << join(res.sequence) << '\n';
        out << "N_k: " << join(res.nk_trace) << '\n';
        out << "engine: " << to_string(res.engine) << '\n';
        if (!a.trace_out.empty())
          write_file(a.trace_out, trace_csv(NkTrace{a.instance, res.nk_trace}));
      },
      any);
  return 0;
}

int run_brute(const Args& a, std::ostream& out) {
  AnyInstance any = load_instance(a.instance);
  std::visit(
      [&](auto inst) {
        override_objective(inst, a.objective);
        auto res = brute_force(inst, a.cap);
        out << "value: " << to_string(res.value) << '\n';
        out << "x(K): " << format_vector(res.xK) << '\n';
        out << "sequence: " << join(res.sequence) << '\n';
        out << "reachable points: " << res.reachable.size() << '\n';
      },
      any);
  return 0;
}

int run_trace(const Args& a, std::ostream& out) {
  AnyInstance any = load_instance(a.instance);
  std::string csv = std::visit(
      [&](const auto& inst) {
        auto opt = solver_options(a);
        opt.rescale = false;
        return trace_csv(NkTrace{a.instance, trace_nk(inst, a.k, opt).nk});
      },
      any);
  if (a.csv.empty())
    out << csv;
  else
    write_file(a.csv, csv);
  return 0;
}

int run_classify(const Args& a, std::ostream& out) {
  Instance<Rational> inst = require_exact(load_instance(a.instance), "classify");
  if (inst.n != 2)
    throw DimensionError("classify needs n = 2");
  SolverOptions opt;
  std::vector<Layer<Rational>> layers;
  Layer<Rational> last;
  build_layers(inst, a.k, opt, last, nullptr, &layers);
  std::vector<std::array<std::size_t, 5>> rows;
  for (const auto& l : layers)
    rows.push_back(classify_vertices(l).counts());
  std::string csv = classification_csv(rows);
  if (a.csv.empty())
    out << csv;
  else
    write_file(a.csv, csv);
  auto cls = classify_vertices(last);
  for (std::size_t i = 0; i < 5; ++i) {
    out << "E" << i << ":";
    for (const auto& v : cls.sets[i])
      out << ' ' << format_vector(v);
    out << '\n';
  }
  return 0;
}

int run_gen_random(const Args& a, std::ostream& out) {
  GenSpec spec = a.integer ? GenSpec::integer_mode(a.n, a.m, a.K, a.seed) : GenSpec::float_mode(a.n, a.m, a.K, a.seed);
  if (!a.objective.empty())
    spec.objective = parse_objective_kind(a.objective);
  std::string text = emit_instance(gen_random(spec));
  if (a.output.empty())
    out << text;
  else
    write_file(a.output, text);
  return 0;
}

int run_gen_sat(const Args& a, std::ostream& out, std::ostream& err) {
  CnfFormula f = parse_dimacs(read_file(a.instance));
  ReductionArtifact art = sat_to_instance(f, a.right_stochastic);
  std::string text = emit_instance(art.instance);
  if (a.output.empty()) {
    out << text;
    err << "threshold: " << to_string(art.threshold) << '\n';
  } else {
    write_file(a.output, text);
    out << "threshold: " << to_string(art.threshold) << '\n';
  }
  return 0;
}

int run_mortal(const Args& a, std::ostream& out) {
  Instance<Rational> inst = require_exact(load_instance(a.instance), "check-mortal");
  bool mortal = check_k_mortal(inst.matrices, a.k, solver_options(a));
  out << (mortal ? "mortal" : "not mortal") << " at k = " << a.k << '\n';
  return 0;
}

int run_jsr(const Args& a, std::ostream& out) {
  AnyInstance any = load_instance(a.instance);
  NormKind p = parse_norm(a.norm);
  double bound = std::visit(
      [&](const auto& inst) { return jsr_lower_bound(inst.matrices, a.k, inst.a, p, solver_options(a)); }, any);
  out << "lower bound: " << to_string(bound) << '\n';
  return 0;
}

int run_export(const Args& a, std::ostream& out) {
  AnyInstance any = load_instance(a.instance);
  MinlpExport ex = export_minlp(any);
  if (a.output.empty()) {
    out << "# ---- model ----\n" << ex.model << "# ---- data ----\n" << ex.data;
  } else {
    write_file(a.output + ".mod", ex.model);
    write_file(a.output + ".dat", ex.data);
    out << "wrote " << a.output << ".mod and " << a.output << ".dat\n";
  }
  out << "# state constraints: " << ex.state_constraints << ", assignment constraints: "
      << ex.assignment_constraints << ", binaries: " << ex.binaries << '\n';
  return 0;
}

int run_bench_cmd(const Args& a, std::ostream& out) {
  std::string text = a.grid;
  if (!text.empty() && text.front() != '[' && text.find(',') == std::string::npos)
    text = read_file(text);
  BenchOptions opt;
  opt.time_limit_seconds = a.time_limit;
  opt.rescale = !a.no_rescale;
  opt.integer = a.integer;
  opt.engine = parse_engine(a.engine);
  opt.parallel = !a.serial;
  BenchReport rep = run_bench(parse_grid(text), opt);
  if (a.csv.empty())
    out << rep.to_csv();
  else
    write_file(a.csv, rep.to_csv());
  out << rep.summary();
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact optimal switching sequences for discrete-time switched linear systems"};
  app.require_subcommand(1);
  Args a;

  auto engine_opt = [&](CLI::App* sub) {
    sub->add_option("--engine", a.engine, "Hull engine: lp, graham, auto")
        ->check(CLI::IsMember({"lp", "graham", "auto"}));
    sub->add_flag("--serial", a.serial, "Run separation LPs without OpenMP");
  };

  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance by extreme-point dynamic programming");
  solve_cmd->add_option("instance", a.instance, "Instance file")->required();
  solve_cmd->add_option("--objective", a.objective, "Override objective: l1, l2sq, linf");
  solve_cmd->add_flag("--rescale", a.rescale, "Normalize each layer (homogeneous objectives)");
  solve_cmd->add_option("--trace-out", a.trace_out, "Write k,N_k CSV here");
  engine_opt(solve_cmd);

  auto* brute_cmd = app.add_subcommand("brute-force", "Enumerate every matrix sequence");
  brute_cmd->add_option("instance", a.instance, "Instance file")->required();
  brute_cmd->add_option("--objective", a.objective, "Override objective: l1, l2sq, linf");
  brute_cmd->add_option("--cap", a.cap, "Maximum number of sequences");

  auto* trace_cmd = app.add_subcommand("trace-nk", "Number of extreme points per period");
  trace_cmd->add_option("instance", a.instance, "Instance file")->required();
  trace_cmd->add_option("--K", a.k, "Horizon")->required();
  trace_cmd->add_option("--csv", a.csv, "Write CSV here instead of stdout");
  engine_opt(trace_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Quadrant classes of the vertices (n = 2, exact)");
  classify_cmd->add_option("instance", a.instance, "Instance file")->required();
  classify_cmd->add_option("--k", a.k, "Period")->required();
  classify_cmd->add_option("--csv", a.csv, "Write k,e0..e4 CSV here instead of stdout");

  auto* gen_cmd = app.add_subcommand("gen-random", "Seeded random instance");
  gen_cmd->add_option("--n", a.n, "Dimension")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--m", a.m, "Number of matrices")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--K", a.K, "Horizon");
  gen_cmd->add_option("--seed", a.seed, "RNG seed");
  gen_cmd->add_flag("--integer", a.integer, "Exact integer entries instead of U[-1,1]");
  gen_cmd->add_option("--objective", a.objective, "linear, l1, l2sq, linf");
  gen_cmd->add_option("-o,--output", a.output, "Output file");

  auto* sat_cmd = app.add_subcommand("gen-sat", "Instance from a 3-CNF in DIMACS format");
  sat_cmd->add_option("cnf", a.instance, "DIMACS file")->required();
  sat_cmd->add_flag("--right-stochastic", a.right_stochastic, "Transposed variant");
  sat_cmd->add_option("-o,--output", a.output, "Output file");

  auto* mortal_cmd = app.add_subcommand("check-mortal", "Does some product of k matrices vanish?");
  mortal_cmd->add_option("instance", a.instance, "Instance file (exact, non-negative)")->required();
  mortal_cmd->add_option("--k", a.k, "Product length")->required();
  engine_opt(mortal_cmd);

  auto* jsr_cmd = app.add_subcommand("jsr-bound", "Lower bound from the best k-step growth of a");
  jsr_cmd->add_option("instance", a.instance, "Instance file; a must have unit norm")->required();
  jsr_cmd->add_option("--k", a.k, "Product length")->required();
  jsr_cmd->add_option("--p", a.norm, "Norm: 1, 2 or inf")->check(CLI::IsMember({"1", "2", "inf"}));
  jsr_cmd->add_flag("--rescale", a.rescale, "Normalize each layer");
  engine_opt(jsr_cmd);

  auto* export_cmd = app.add_subcommand("export-minlp", "AMPL model and data for the MINLP formulation");
  export_cmd->add_option("instance", a.instance, "Instance file")->required();
  export_cmd->add_option("-o,--output", a.output, "Write <prefix>.mod and <prefix>.dat");

  auto* bench_cmd = app.add_subcommand("bench", "Run a seeded benchmark grid");
  bench_cmd->add_option("grid", a.grid, "\"n,m,Kxreps[@seed];...\", JSON array, or a file")->required();
  bench_cmd->add_option("--time-limit", a.time_limit, "Seconds per instance");
  bench_cmd->add_flag("--no-rescale", a.no_rescale, "Disable per-layer rescaling");
  bench_cmd->add_flag("--integer", a.integer, "Exact integer instances");
  bench_cmd->add_option("--csv", a.csv, "Write the CSV report here");
  engine_opt(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help() << '\n' << instance_schema_help() << '\n';
    return exit_usage;
  }

  try {
    if (*solve_cmd) return run_solve(a, out);
    if (*brute_cmd) return run_brute(a, out);
    if (*trace_cmd) return run_trace(a, out);
    if (*classify_cmd) return run_classify(a, out);
    if (*gen_cmd) return run_gen_random(a, out);
    if (*sat_cmd) return run_gen_sat(a, out, err);
    if (*mortal_cmd) return run_mortal(a, out);
    if (*jsr_cmd) return run_jsr(a, out);
    if (*export_cmd) return run_export(a, out);
    if (*bench_cmd) return run_bench_cmd(a, out);
  } catch (const SchemaError& e) {
    err << "error: " << e.what();
    if (e.line())
      err << " (line " << *e.line() << ")";
    err << '\n' << instance_schema_help() << '\n';
    return exit_usage;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return exit_numeric;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace switchopt

// Command-line surface: recognition, decomposition, linearization, solving,
// verification and instance generation for the linearizable QAP special
// cases. Exit codes: 0 = positive verdict / solved, 1 = negative verdict,
// 2 = usage or input error.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "qaplin/oracle.hpp"
#include "qaplin/qaplin.hpp"

using json = nlohmann::json;
using namespace qaplin;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

double resolve_tolerance(const std::optional<double>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("QAPLIN_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v >= 0) return v;
    throw Error(std::string("QAPLIN_TOL is not a valid tolerance: '") + env + "'");
  }
  return default_tolerance;
}

json to_json(const SquareMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.order(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const BalanceWitness& w) {
  return {{"i", w.i + 1}, {"j", w.j + 1}, {"k", w.k + 1}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

json to_json(const WeakSumWitness& w) {
  return {{"i", w.i + 1}, {"j", w.j + 1}, {"residual", w.residual}};
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

void print_matrix_block(const SquareMatrix& m) {
  std::cout << emit_instance(InstanceFile{m.order(), {m}});
}

std::string triple_text(const BalanceWitness& w) {
  char buffer[160];
  std::snprintf(buffer, sizeof buffer, "triple (%d,%d,%d): lhs %g, rhs %g", w.i + 1, w.j + 1,
                w.k + 1, w.lhs, w.rhs);
  return buffer;
}

int cmd_check_balanced(const std::string& path, std::optional<double> tol_flag, bool as_json) {
  const double tol = resolve_tolerance(tol_flag);
  const InstanceFile in = parse_instance(read_input(path));
  const BalanceCheck check = check_balanced_3cycle(in.matrices[0], tol);
  if (as_json) {
    json out = {{"command", "check-balanced"}, {"n", in.n}, {"tolerance", tol},
                {"balanced", check.balanced}};
    out["witness"] = check.witness ? to_json(*check.witness) : json(nullptr);
    print_json(out);
  } else if (check.balanced) {
    std::cout << "balanced\n";
  } else {
    std::cout << "not balanced: " << triple_text(*check.witness) << '\n';
  }
  return check.balanced ? 0 : 1;
}

int cmd_check_weaksum(const std::string& path, std::optional<double> tol_flag, bool as_json) {
  const double tol = resolve_tolerance(tol_flag);
  const InstanceFile in = parse_instance(read_input(path));
  const WeakSumCheck check = recognize_weak_sum(in.matrices[0], tol);
  if (as_json) {
    json out = {{"command", "check-weaksum"}, {"n", in.n}, {"tolerance", tol},
                {"weak_sum", check.weak_sum}};
    out["certificate"] = check.certificate
                             ? json{{"alpha", check.certificate->alpha},
                                    {"beta", check.certificate->beta}}
                             : json(nullptr);
    out["witness"] = check.witness ? to_json(*check.witness) : json(nullptr);
    print_json(out);
  } else if (check.weak_sum) {
    std::cout << "weak sum\nalpha:";
    for (double x : check.certificate->alpha) std::cout << ' ' << x;
    std::cout << "\nbeta:";
    for (double x : check.certificate->beta) std::cout << ' ' << x;
    std::cout << '\n';
  } else {
    std::cout << "not a weak sum: entry (" << check.witness->i + 1 << ','
              << check.witness->j + 1 << ") off by " << check.witness->residual << '\n';
  }
  return check.weak_sum ? 0 : 1;
}

int cmd_decompose(const std::string& path, std::optional<double> tol_flag, bool with_trace,
                  bool as_json) {
  const double tol = resolve_tolerance(tol_flag);
  const InstanceFile in = parse_instance(read_input(path));
  const DecomposeResult result = decompose(in.matrices[0], tol);
  if (as_json) {
    json out = {{"command", "decompose"}, {"n", in.n}, {"ok", result.ok}};
    if (result.ok) {
      out["symmetric_part"] = to_json(result.decomposition->symmetric_part);
      json terms = json::array();
      for (const CutTerm& t : result.decomposition->terms)
        terms.push_back({{"coefficient", t.coefficient}, {"subset", t.subset.to_one_based()}});
      out["terms"] = std::move(terms);
    }
    if (with_trace) {
      json steps = json::array();
      for (const DecompositionStep& s : result.trace)
        steps.push_back({{"r", s.r + 1},
                         {"s", s.s + 1},
                         {"subset", s.subset.to_one_based()},
                         {"p", s.p + 1},
                         {"q", s.q + 1},
                         {"lambda", s.lambda}});
      out["trace"] = std::move(steps);
    }
    out["witness"] = result.witness ? to_json(*result.witness) : json(nullptr);
    print_json(out);
  } else if (result.ok) {
    std::cout << "symmetric part:\n";
    print_matrix_block(result.decomposition->symmetric_part);
    std::cout << "cut terms (" << result.decomposition->terms.size() << "):\n";
    for (const CutTerm& t : result.decomposition->terms) {
      std::cout << "  " << t.coefficient << " * cut {";
      bool first = true;
      for (int v : t.subset.to_one_based()) {
        std::cout << (first ? "" : ",") << v;
        first = false;
      }
      std::cout << "}\n";
    }
    if (with_trace)
      for (std::size_t k = 0; k < result.trace.size(); ++k) {
        const DecompositionStep& s = result.trace[k];
        std::cout << "step " << k + 1 << ": max at (" << s.r + 1 << ',' << s.s + 1
                  << "), lambda " << s.lambda << " at (" << s.p + 1 << ',' << s.q + 1 << ")\n";
      }
  } else {
    std::cout << "not balanced";
    if (result.witness) std::cout << ": " << triple_text(*result.witness);
    std::cout << '\n';
  }
  return result.ok ? 0 : 1;
}

int cmd_linearize_fas(const std::string& path, std::optional<double> tol_flag, bool as_json) {
  const double tol = resolve_tolerance(tol_flag);
  const InstanceFile in = parse_instance(read_input(path));
  const FasLinearization lin = linearize_fas(in.matrices[0], tol);
  if (as_json) {
    json out = {{"command", "linearize-fas"}, {"n", in.n}, {"ok", lin.ok}};
    out["c"] = lin.ok ? to_json(lin.linearization->c) : json(nullptr);
    out["witness"] = lin.witness ? to_json(*lin.witness) : json(nullptr);
    print_json(out);
  } else if (lin.ok) {
    print_matrix_block(lin.linearization->c);
  } else {
    std::cout << "not balanced: " << triple_text(*lin.witness) << '\n';
  }
  return lin.ok ? 0 : 1;
}

int cmd_linearize_tsp(const std::string& path, std::optional<double> tol_flag, bool as_json) {
  const double tol = resolve_tolerance(tol_flag);
  const InstanceFile in = parse_instance(read_input(path));
  const TspLinearization lin = linearize_tsp(in.matrices[0], tol);
  if (as_json) {
    json out = {{"command", "linearize-tsp"}, {"n", in.n}, {"ok", lin.ok}};
    out["c"] = lin.ok ? to_json(lin.linearization->c) : json(nullptr);
    out["tour_value"] = lin.ok ? json(lin.tour_value) : json(nullptr);
    out["witness"] = lin.witness ? to_json(*lin.witness) : json(nullptr);
    print_json(out);
  } else if (lin.ok) {
    std::cout << "# constant tour value " << lin.tour_value << '\n';
    print_matrix_block(lin.linearization->c);
  } else {
    std::cout << "not a weak sum: entry (" << lin.witness->i + 1 << ',' << lin.witness->j + 1
              << ") off by " << lin.witness->residual << '\n';
  }
  return lin.ok ? 0 : 1;
}

int cmd_solve_fas(const std::string& path, std::optional<double> tol_flag, bool as_json) {
  const double tol = resolve_tolerance(tol_flag);
  const InstanceFile in = parse_instance(read_input(path));
  const FasSolveResult result = solve_fas_balanced(in.matrices[0], tol);
  if (as_json) {
    json out = {{"command", "solve-fas"}, {"n", in.n}, {"ok", result.ok}};
    if (result.ok) {
      out["layout"] = result.solution->layout.to_one_based();
      out["value"] = result.solution->value;
      json arcs = json::array();
      for (const BackwardArc& arc : result.solution->backward_arcs)
        arcs.push_back({{"from", arc.from + 1}, {"to", arc.to + 1}, {"weight", arc.weight}});
      out["backward_arcs"] = std::move(arcs);
    }
    out["witness"] = result.witness ? to_json(*result.witness) : json(nullptr);
    print_json(out);
  } else if (result.ok) {
    std::cout << "layout:";
    for (int v : result.solution->layout.to_one_based()) std::cout << ' ' << v;
    std::cout << "\nvalue: " << result.solution->value << "\nbackward arcs ("
              << result.solution->backward_arcs.size() << "):\n";
    for (const BackwardArc& arc : result.solution->backward_arcs)
      std::cout << "  " << arc.from + 1 << " -> " << arc.to + 1 << "  weight " << arc.weight
                << '\n';
  } else {
    std::cout << "not balanced: " << triple_text(*result.witness) << '\n';
  }
  return result.ok ? 0 : 1;
}

int cmd_solve_lap(const std::string& path, bool as_json) {
  const InstanceFile in = parse_instance(read_input(path));
  const LapSolution s = solve_lap(in.matrices[0]);
  if (as_json) {
    print_json({{"command", "solve-lap"},
                {"n", in.n},
                {"assignment", s.assignment.to_one_based()},
                {"value", s.value},
                {"row_potentials", s.row_potentials},
                {"col_potentials", s.col_potentials}});
  } else {
    std::cout << "assignment:";
    for (int v : s.assignment.to_one_based()) std::cout << ' ' << v;
    std::cout << "\nvalue: " << s.value << "\nrow potentials:";
    for (double x : s.row_potentials) std::cout << ' ' << x;
    std::cout << "\ncol potentials:";
    for (double x : s.col_potentials) std::cout << ' ' << x;
    std::cout << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& path, std::optional<double> tol_flag, bool exhaustive,
               std::optional<std::uint64_t> sample, std::uint64_t seed, bool as_json) {
  const double tol = resolve_tolerance(tol_flag);
  const InstanceFile in = parse_instance(read_input(path), 3, 3);
  const SquareMatrix &a = in.matrices[0], &b = in.matrices[1], &c = in.matrices[2];
  if (exhaustive && sample) throw Error("choose either --exhaustive or --sample");
  const VerifyOutcome outcome = sample
                                    ? verify_linearization_sampled(a, b, c, tol, *sample, seed)
                                    : verify_linearization(a, b, c, tol);
  if (as_json) {
    json out = {{"command", "verify"},
                {"n", in.n},
                {"mode", sample ? "sampled" : "exhaustive"},
                {"permutations_checked", outcome.permutations_checked},
                {"ok", outcome.ok}};
    if (!outcome.ok) {
      out["counterexample"] = outcome.counterexample->to_one_based();
      out["qap"] = outcome.qap_at;
      out["lap"] = outcome.lap_at;
    }
    print_json(out);
  } else if (outcome.ok) {
    std::cout << "ok: " << outcome.permutations_checked << " permutations checked\n";
  } else {
    std::cout << "counterexample:";
    for (int v : outcome.counterexample->to_one_based()) std::cout << ' ' << v;
    std::cout << "  qap " << outcome.qap_at << "  lap " << outcome.lap_at << '\n';
  }
  return outcome.ok ? 0 : 1;
}

int cmd_oracle(const std::string& path, std::optional<double> tol_flag, bool as_json) {
  const double tol = resolve_tolerance(tol_flag);
  const InstanceFile in = parse_instance(read_input(path), 2, 2);
  const OracleVerdict verdict = linearizability_oracle(in.matrices[0], in.matrices[1], tol);
  if (as_json) {
    json out = {{"command", "oracle"},
                {"n", in.n},
                {"linearizable", verdict.linearizable},
                {"residual", verdict.residual}};
    out["c"] = verdict.c ? to_json(*verdict.c) : json(nullptr);
    print_json(out);
  } else if (verdict.linearizable) {
    std::cout << "linearizable (residual " << verdict.residual << ")\n";
    print_matrix_block(*verdict.c);
  } else {
    std::cout << "not linearizable (residual " << verdict.residual << ")\n";
  }
  return verdict.linearizable ? 0 : 1;
}

int cmd_generate(const std::string& kind_name, int n, std::uint64_t seed,
                 const std::string& range, std::optional<double> perturb) {
  GeneratorSpec spec;
  if (kind_name == "balanced")
    spec.kind = GeneratorKind::balanced;
  else if (kind_name == "weak-sum" || kind_name == "weak_sum" || kind_name == "weaksum")
    spec.kind = GeneratorKind::weak_sum;
  else if (kind_name == "symmetric")
    spec.kind = GeneratorKind::symmetric;
  else if (kind_name == "cut")
    spec.kind = GeneratorKind::cut;
  else
    throw Error("unknown kind '" + kind_name + "' (balanced, weak-sum, symmetric, cut)");
  spec.n = n;
  spec.seed = seed;
  spec.perturbation = perturb;
  if (!range.empty()) {
    const std::size_t colon = range.find(':');
    if (colon == std::string::npos) throw Error("--range wants LO:HI");
    try {
      spec.lo = std::stod(range.substr(0, colon));
      spec.hi = std::stod(range.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error("--range wants numeric LO:HI");
    }
  }
  std::cout << emit_instance(generate(spec));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"recognize, decompose, linearize and solve the linearizable QAP special cases"};
  app.require_subcommand(1);

  std::string path = "-";
  std::optional<double> tol;
  bool as_json = false;
  bool with_trace = false;
  int exit_code = 0;

  auto add_common = [&](CLI::App* cmd, bool wants_tol = true) {
    cmd->add_option("file", path, "instance file (or - for stdin)");
    cmd->add_flag("--json", as_json, "machine-readable output");
    if (wants_tol) cmd->add_option("--tol", tol, "comparison tolerance (overrides QAPLIN_TOL)");
  };

  CLI::App* check = app.add_subcommand("check", "recognize matrix classes");
  check->require_subcommand(1);
  CLI::App* check_balanced = check->add_subcommand("balanced", "balanced 3-cycle test");
  add_common(check_balanced);
  check_balanced->callback([&] { exit_code = cmd_check_balanced(path, tol, as_json); });
  CLI::App* check_weaksum = check->add_subcommand("weaksum", "weak sum test");
  add_common(check_weaksum);
  check_weaksum->callback([&] { exit_code = cmd_check_weaksum(path, tol, as_json); });

  CLI::App* dec = app.add_subcommand("decompose", "symmetric plus directed-cut decomposition");
  add_common(dec);
  dec->add_flag("--trace", with_trace, "include the greedy step trace");
  dec->callback([&] { exit_code = cmd_decompose(path, tol, with_trace, as_json); });

  CLI::App* lin = app.add_subcommand("linearize", "construct a linearization");
  lin->require_subcommand(1);
  CLI::App* lin_fas = lin->add_subcommand("fas", "feedback arc set instance");
  add_common(lin_fas);
  lin_fas->callback([&] { exit_code = cmd_linearize_fas(path, tol, as_json); });
  CLI::App* lin_tsp = lin->add_subcommand("tsp", "traveling salesman instance");
  add_common(lin_tsp);
  lin_tsp->callback([&] { exit_code = cmd_linearize_tsp(path, tol, as_json); });

  CLI::App* solve = app.add_subcommand("solve", "optimize an instance");
  solve->require_subcommand(1);
  CLI::App* solve_fas = solve->add_subcommand("fas", "minimum feedback arc set, balanced case");
  add_common(solve_fas);
  solve_fas->callback([&] { exit_code = cmd_solve_fas(path, tol, as_json); });
  CLI::App* solve_lap_cmd = solve->add_subcommand("lap", "linear assignment");
  add_common(solve_lap_cmd, false);
  solve_lap_cmd->callback([&] { exit_code = cmd_solve_lap(path, as_json); });

  CLI::App* verify = app.add_subcommand("verify", "check a linearization (file holds A, B, C)");
  bool exhaustive = false;
  std::optional<std::uint64_t> sample;
  std::uint64_t sample_seed = 0;
  add_common(verify);
  verify->add_flag("--exhaustive", exhaustive, "enumerate all permutations (default, n <= 10)");
  verify->add_option("--sample", sample, "check this many sampled permutations instead");
  verify->add_option("--seed", sample_seed, "seed for --sample");
  verify->callback(
      [&] { exit_code = cmd_verify(path, tol, exhaustive, sample, sample_seed, as_json); });

  CLI::App* oracle = app.add_subcommand("oracle", "least-squares linearizability oracle (A, B)");
  add_common(oracle);
  oracle->callback([&] { exit_code = cmd_oracle(path, tol, as_json); });

  CLI::App* gen = app.add_subcommand("generate", "emit a seeded instance");
  std::string kind = "balanced";
  int n = 4;
  std::uint64_t seed = 0;
  std::string range;
  std::optional<double> perturb;
  gen->add_option("--kind", kind, "balanced | weak-sum | symmetric | cut")->required();
  gen->add_option("--n", n, "order")->required();
  gen->add_option("--seed", seed, "64-bit seed");
  gen->add_option("--range", range, "entry range LO:HI (integers give integer instances)");
  gen->add_option("--perturb", perturb, "bump one off-diagonal entry by this magnitude");
  gen->callback([&] { exit_code = cmd_generate(kind, n, seed, range, perturb); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}

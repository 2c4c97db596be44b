// dpplab: generate, solve and inspect disjoint-paths instances.
//
// Exit codes: 0 success / solvable, 1 unsolvable, 2 usage or input error,
// 3 budget exhausted, 4 a check failed.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "dpp/calibration.hpp"
#include "dpp/construction.hpp"
#include "dpp/io.hpp"
#include "dpp/oracle.hpp"
#include "dpp/random_instances.hpp"
#include "dpp/render.hpp"
#include "dpp/solver.hpp"
#include "dpp/width.hpp"

namespace {

using namespace dpp;

enum Exit : int { ok = 0, unsolvable = 1, usage = 2, aborted = 3, check_failed = 4 };

struct BudgetFlags {
  std::uint64_t nodes = Budget{}.max_nodes;
  double seconds = 600;

  void attach(CLI::App* cmd) {
    cmd->add_option("--budget-nodes", nodes, "Search node limit")->capture_default_str();
    cmd->add_option("--budget-seconds", seconds, "Wall-clock limit in seconds")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
  std::chrono::milliseconds time() const {
    return std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000));
  }
  Budget solver() const { return {nodes, time()}; }
  WidthBudget width() const { return {nodes, time()}; }
};

std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

Instance load(const std::string& path, const std::string& pairs) {
  return load_instance(path, pairs.empty() ? std::vector<TerminalPair>{} : parse_pair_list(pairs));
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  int k = 0;
  std::string arc_rule = "calibrated";
  std::string s0;
  std::string out;
  bool random = false;
  std::uint64_t seed = 1;
  int vertices = 8;
  int pairs = 2;
  double density = 0.3;
};

int run_generate(const GenerateArgs& a) {
  Instance inst;
  if (a.random) {
    inst = random_instance(a.seed, {a.vertices, a.pairs, a.density});
  } else {
    if (a.k < 1) {
      std::cerr << "generate: -k must be at least 1\n";
      return usage;
    }
    ArcRule rule;
    S0Placement placement = S0Placement::top_right;
    if (a.arc_rule == "calibrated") {
      const auto cal = calibrate_arc_rule(2, default_solver());
      rule = cal.rule;
      placement = cal.placement;
      std::cerr << "calibrated: arc rule " << rule.identifier << ", s0 "
                << to_string(placement) << "\n";
    } else {
      auto found = arc_rule_by_name(a.arc_rule);
      if (!found) {
        std::cerr << "generate: unknown arc rule '" << a.arc_rule << "'\n";
        return usage;
      }
      rule = *found;
    }
    if (!a.s0.empty()) placement = *placement_from_string(a.s0);
    inst = build_instance(a.k, rule, placement);
  }
  emit(a.out, serialize_instance(inst));
  auto& log = (a.out.empty() || a.out == "-") ? std::cerr : std::cout;
  log << "vertices: " << inst.graph.vertex_count() << "\n"
      << "edges: " << inst.graph.edge_count() << "\n"
      << "pairs:";
  for (const auto& [s, t] : inst.pairs) log << " " << s << "-" << t;
  log << "\n";
  return ok;
}

// ------------------------------------------------------------------- solve

struct SolveArgs {
  std::string input;
  std::string pairs;
  std::string mode = "decide";
  std::size_t cap = 2;
  bool spanning = false;
  bool no_pruning = false;
  std::string out;
  BudgetFlags budget;
};

SolveMode mode_of(const std::string& name, std::size_t cap) {
  if (name == "count") return SolveMode::count_up_to(cap);
  if (name == "all") return SolveMode::enumerate_all();
  return SolveMode::decide();
}

void print_summary(const Instance& inst, const SolutionDocument& doc, const SolveOutcome& out) {
  std::cout << "status: " << to_string(doc.status) << "\n"
            << "solutions: " << doc.solutions.size() << "\n"
            << "unique: " << to_string(doc.unique) << "\n"
            << "spanning: " << (doc.spanning ? "true" : "false") << "\n";
  if (doc.crossing) {
    std::cout << "crossings: " << join(doc.crossing->per_path) << "\n"
              << "total_crossings: " << doc.crossing->total << "\n";
  }
  if (!doc.solutions.empty()) {
    const auto& first = doc.solutions.front();
    for (std::size_t i = 0; i < first.paths.size(); ++i) {
      std::cout << "path " << i << " (" << inst.pairs[i].source << "-" << inst.pairs[i].target
                << "): " << join(first.paths[i].vertices, " ") << "\n";
    }
  }
  std::cout << "nodes: " << out.nodes_explored << "\n";
}

int run_solve(const SolveArgs& a) {
  const Instance inst = load(a.input, a.pairs);
  SolveOptions options;
  options.require_spanning = a.spanning;
  options.pruning = !a.no_pruning;
  options.budget = a.budget.solver();
  const SolveMode mode = mode_of(a.mode, a.cap);
  const SolveOutcome out = solve(inst, mode, options);
  const SolutionDocument doc = make_solution_document(inst, out, mode);
  if (!a.out.empty()) write_text_file(a.out, serialize_solution(doc));
  print_summary(inst, doc, out);
  switch (out.status) {
    case SolveStatus::solvable: return ok;
    case SolveStatus::unsolvable: return unsolvable;
    case SolveStatus::aborted: return aborted;
  }
  return ok;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string input;
  std::string solution;
  unsigned threads = 1;
  bool skip_irrelevant = false;
  BudgetFlags budget;
};

int run_verify(const VerifyArgs& a) {
  const Instance inst = load(a.input, "");
  bool failed = false;
  bool indeterminate = false;
  auto line = [&](const std::string& name, Verdict v, const std::string& detail = "") {
    const char* tag = v == Verdict::yes ? "PASS" : v == Verdict::no ? "FAIL" : "INDETERMINATE";
    failed = failed || v == Verdict::no;
    indeterminate = indeterminate || v == Verdict::indeterminate;
    std::cout << tag << " " << name << (detail.empty() ? "" : ": " + detail) << "\n";
  };
  auto verdict = [](bool b) { return b ? Verdict::yes : Verdict::no; };

  if (!a.solution.empty()) {
    const SolutionDocument doc = parse_solution(read_text_file(a.solution));
    bool digest_ok = true;
    try {
      check_digest(doc, inst);
    } catch (const ParseError&) {
      digest_ok = false;
    }
    line("solution digest", verdict(digest_ok));
    std::string defect;
    for (const auto& l : doc.solutions) {
      defect = linkage_defect(inst, l);
      if (!defect.empty()) break;
    }
    line("solution linkages", verdict(defect.empty()), defect);
  }

  if (!inst.meta || !inst.layout) {
    if (a.solution.empty()) {
      std::cerr << "verify: instance has no generator metadata; nothing to check\n";
      return usage;
    }
  } else {
    SolveOptions options;
    options.budget = a.budget.solver();
    const auto checks = check_instance(inst, default_solver(options));
    const int k = inst.meta->k;
    line("unique solution", checks.unique);
    line("spanning", checks.spanning);
    const bool solved = checks.unique != Verdict::indeterminate && !checks.crossing_profile.empty();
    line("crossing profile", solved ? verdict(checks.profile_ok) : Verdict::indeterminate,
         "(" + join(checks.crossing_profile) + ")");
    line("total crossings", solved ? verdict(checks.total_ok) : Verdict::indeterminate,
         std::to_string(checks.total_crossings) + " expected " + std::to_string((1 << k) - 1));
    if (!a.skip_irrelevant) {
      const auto report = irrelevant_vertices(inst, options, a.threads);
      std::string detail = std::to_string(report.irrelevant.size()) + " irrelevant";
      if (!report.indeterminate.empty()) {
        detail += ", " + std::to_string(report.indeterminate.size()) + " indeterminate";
      }
      line("no irrelevant vertex",
           !report.irrelevant.empty()      ? Verdict::no
           : report.indeterminate.empty() ? Verdict::yes
                                          : Verdict::indeterminate,
           detail);
    }
  }
  if (failed) return check_failed;
  if (indeterminate) return aborted;
  return ok;
}

// ------------------------------------------------------------------- width

struct WidthArgs {
  std::string input;
  bool tw = false;
  bool pw = false;
  BudgetFlags budget;
};

int run_width(const WidthArgs& a) {
  const Instance inst = load(a.input, "");
  const bool both = !a.tw && !a.pw;
  const WidthBudget budget = a.budget.width();
  bool exact = true;
  bool failed = false;
  const int required = inst.meta ? (1 << inst.meta->k) + 1 : -1;
  auto report = [&](const char* name, const WidthResult& r) {
    exact = exact && r.exact;
    std::cout << name << ": " << r.value << (r.exact ? "" : " (upper bound, budget exhausted)")
              << "\n"
              << name << "_certificate: " << join(r.certificate, " ") << "\n";
    if (required > 0) {
      const bool pass = r.value >= required;
      if (r.exact) failed = failed || !pass;
      std::cout << name << " >= 2^" << inst.meta->k << "+1: " << r.value << " >= " << required
                << " " << (!r.exact ? "indeterminate" : pass ? "pass" : "fail") << "\n";
    }
  };
  if (both || a.tw) report("tw", treewidth_exact(inst.graph, budget));
  if (both || a.pw) report("pw", pathwidth_exact(inst.graph, budget));
  if (inst.meta) {
    // The unique solution is a vital linkage with k+1 paths.
    const int k = inst.meta->k;
    std::cout << "components: " << k + 1 << "\n"
              << "bound: f(" << k + 1 << ") >= 2^" << k << "+1 = " << required << "\n";
  }
  if (failed) return check_failed;
  return exact ? ok : aborted;
}

// ------------------------------------------------------------------ render

struct RenderArgs {
  std::string input;
  std::string solution;
  std::string format = "svg";
  std::string out;
};

int run_render(const RenderArgs& a) {
  const Instance inst = load(a.input, "");
  std::optional<Linkage> linkage;
  if (!a.solution.empty()) {
    const SolutionDocument doc = parse_solution(read_text_file(a.solution));
    check_digest(doc, inst);
    if (!doc.solutions.empty()) linkage = doc.solutions.front();
  }
  emit(a.out, a.format == "dot" ? render_dot(inst, linkage) : render_svg(inst, linkage));
  return ok;
}

// ------------------------------------------------------------------ oracle

struct OracleArgs {
  std::string input;
  std::string pairs;
  bool spanning = false;
};

int run_oracle(const OracleArgs& a) {
  const Instance inst = load(a.input, a.pairs);
  const SolveOutcome reference = brute_force_oracle(inst, a.spanning);
  SolveOptions options;
  options.require_spanning = a.spanning;
  const SolveOutcome fast = solve(inst, SolveMode::enumerate_all(), options);
  const bool agree = reference.solutions == fast.solutions;
  std::cout << "oracle_solutions: " << reference.solutions.size() << "\n"
            << "solver_solutions: " << fast.solutions.size() << "\n"
            << "agree: " << (agree ? "true" : "false") << "\n";
  if (!agree) return check_failed;
  return reference.solutions.empty() ? unsolvable : ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disjoint paths instances on grids: generation, exact solving, widths"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a lower-bound or random instance");
  generate->add_option("-k", gen.k, "Construction parameter (grid side 2^k+1)");
  generate->add_option("--arc-rule", gen.arc_rule, "calibrated, pow2-minus-1, pow2 or pow2-plus-1")
      ->capture_default_str();
  generate->add_option("--s0", gen.s0, "top-right, bottom-right or bottom-left")
      ->check(CLI::IsMember({"top-right", "bottom-right", "bottom-left"}));
  generate->add_option("-o,--out", gen.out, "Output file (default stdout)");
  generate->add_flag("--random", gen.random, "Random G(n,p) instance instead");
  generate->add_option("--seed", gen.seed)->capture_default_str();
  generate->add_option("--vertices", gen.vertices)->check(CLI::Range(1, 64))->capture_default_str();
  generate->add_option("--pairs", gen.pairs)->check(CLI::NonNegativeNumber)->capture_default_str();
  generate->add_option("--density", gen.density)->check(CLI::Range(0.0, 1.0))->capture_default_str();

  SolveArgs sol;
  auto* solve_cmd = app.add_subcommand("solve", "Decide, count or enumerate disjoint paths");
  solve_cmd->add_option("instance", sol.input)->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--pairs", sol.pairs, "Terminal pairs for edge-list input, e.g. 1-5,2-6");
  solve_cmd->add_option("--mode", sol.mode)
      ->check(CLI::IsMember({"decide", "count", "all"}))
      ->capture_default_str();
  solve_cmd->add_option("--cap", sol.cap, "Solution cap for --mode count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve_cmd->add_flag("--spanning", sol.spanning, "Paths must cover every vertex");
  solve_cmd->add_flag("--no-pruning", sol.no_pruning);
  solve_cmd->add_option("-o,--out", sol.out, "Write the solution document here");
  sol.budget.attach(solve_cmd);

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Uniqueness, spanning, crossing and irrelevance checks");
  verify->add_option("instance", ver.input)->required()->check(CLI::ExistingFile);
  verify->add_option("--solution", ver.solution, "Also check a solution document")
      ->check(CLI::ExistingFile);
  verify->add_option("--threads", ver.threads)->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_flag("--skip-irrelevant", ver.skip_irrelevant);
  ver.budget.attach(verify);

  WidthArgs wid;
  auto* width = app.add_subcommand("width", "Exact treewidth and pathwidth");
  width->add_option("input", wid.input, "Instance document or edge list")
      ->required()
      ->check(CLI::ExistingFile);
  width->add_flag("--tw", wid.tw);
  width->add_flag("--pw", wid.pw);
  wid.budget.attach(width);

  RenderArgs ren;
  auto* render = app.add_subcommand("render", "SVG or DOT drawing");
  render->add_option("instance", ren.input)->required()->check(CLI::ExistingFile);
  render->add_option("--solution", ren.solution)->check(CLI::ExistingFile);
  render->add_option("--format", ren.format)->check(CLI::IsMember({"svg", "dot"}))->capture_default_str();
  render->add_option("-o,--out", ren.out);

  OracleArgs ora;
  auto* oracle = app.add_subcommand("oracle", "Compare the solver with brute-force enumeration");
  oracle->add_option("instance", ora.input)->required()->check(CLI::ExistingFile);
  oracle->add_option("--pairs", ora.pairs);
  oracle->add_flag("--spanning", ora.spanning);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*solve_cmd) return run_solve(sol);
    if (*verify) return run_verify(ver);
    if (*width) return run_width(wid);
    if (*render) return run_render(ren);
    if (*oracle) return run_oracle(ora);
  } catch (const CalibrationError& e) {
    std::cerr << "calibration failed: " << e.what() << "\n";
    for (const auto& c : e.report()) {
      std::cerr << "  " << c.rule << " / " << to_string(c.placement) << " / k=" << c.k << ":";
      for (const auto& v : c.violations) std::cerr << " [" << v << "]";
      std::cerr << "\n";
    }
    return check_failed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

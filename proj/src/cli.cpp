#include "tcedit/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "tcedit/generator.hpp"
#include "tcedit/io.hpp"
#include "tcedit/kernel.hpp"
#include "tcedit/recognition.hpp"
#include "tcedit/reductions.hpp"
#include "tcedit/solver.hpp"

namespace tcedit {

namespace {

std::string join(const std::vector<Vertex>& vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  return out.str();
}

void print_obstruction(std::ostream& out, const Obstruction& o) {
  out << "obstruction " << to_string(o.kind) << ' ' << join(o.vertices) << '\n';
}

void print_levels(std::ostream& out, const ThresholdPartition& part) {
  for (std::size_t i = 0; i < part.levels.size(); ++i)
    out << "level " << i << " C: " << join(part.levels[i].clique) << " | I: " << join(part.levels[i].independent)
        << '\n';
}

// Budget from -k, else from a "# k" comment of the input file.
int resolve_budget(std::optional<int> flag, const std::string& text) {
  if (flag) {
    if (*flag < 0) throw InputError("budget must be non-negative");
    return *flag;
  }
  if (auto k = parse_budget_comment(text)) return *k;
  throw InputError("no budget given: pass -k or add a '# k' line to the graph file");
}

Target target_of(const std::string& s) {
  auto t = parse_target(s);
  if (!t) throw InputError("unknown target " + s);
  return *t;
}

Variant variant_of(const std::string& s) {
  auto v = parse_variant(s);
  if (!v) throw InputError("unknown variant " + s);
  return *v;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    write_text_file(path, text);
}

int cmd_recognize(const std::string& target, const std::string& file, std::ostream& out) {
  const Graph g = parse_graph(read_text_file(file));
  if (target == "threshold") {
    const ThresholdResult r = is_threshold(g);
    out << "threshold " << (r.yes ? "yes" : "no") << '\n';
    if (r.yes)
      print_levels(out, r.partition);
    else
      print_obstruction(out, r.obstruction);
    return r.yes ? kExitYes : kExitNo;
  }
  if (target == "chain") {
    const ChainResult r = is_chain(g);
    out << "chain " << (r.yes ? "yes" : "no") << '\n';
    if (r.yes)
      out << "A: " << join(r.side_a) << "\nB: " << join(r.side_b) << '\n';
    else
      print_obstruction(out, r.obstruction);
    return r.yes ? kExitYes : kExitNo;
  }
  if (target == "split") {
    const auto p = compute_split_partition(g);
    out << "split " << (p ? "yes" : "no") << '\n';
    if (p) out << "C: " << join(p->clique) << "\nI: " << join(p->independent) << '\n';
    return p ? kExitYes : kExitNo;
  }
  const ChordalResult r = is_chordal(g);
  out << "chordal " << (r.yes ? "yes" : "no") << '\n';
  if (!r.yes) out << "cycle " << join(r.cycle) << '\n';
  return r.yes ? kExitYes : kExitNo;
}

int cmd_kernelize(const std::string& target, std::optional<int> k, const std::string& file,
                  const std::string& output, std::ostream& out) {
  const std::string text = read_text_file(file);
  Instance inst{parse_graph(text), resolve_budget(k, text), target_of(target), Variant::Edit};
  const Kernel kern = kernelize(inst);
  std::string body = serialize_instance(kern.instance);
  const std::string extra = "# original " + join(kern.original) + '\n';
  body.insert(body.find('\n') + 1, extra);
  if (!output.empty()) {
    write_text_file(output, body);
    out << (kern.no_instance ? "no-instance" : "reduced") << '\n'
        << "k " << kern.instance.k << '\n'
        << "vertices " << kern.instance.graph.order() << " of " << inst.graph.order() << '\n'
        << "original " << join(kern.original) << '\n';
  } else {
    out << body;
  }
  return kern.no_instance ? kExitNo : kExitYes;
}

struct SolveArgs {
  std::string target = "threshold";
  std::string variant = "edit";
  std::optional<int> k;
  std::string file;
  std::string output;
  bool no_kernel = false;
  double time_limit = 0;
};

int cmd_solve(const SolveArgs& a, bool oracle, std::ostream& out) {
  const std::string text = read_text_file(a.file);
  Instance inst{parse_graph(text), resolve_budget(a.k, text), target_of(a.target), variant_of(a.variant)};
  std::optional<EditSet> f;
  SolveReport report;
  if (oracle) {
    f = brute_force_oracle(inst);
  } else {
    SolveOptions opts;
    opts.use_kernel = !a.no_kernel;
    if (a.time_limit > 0)
      opts.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(a.time_limit));
    try {
      f = solve(inst, opts, &report);
    } catch (const TimeLimitExceeded&) {
      out << "TIMEOUT\n"
          << "kernel_vertices " << report.kernel_vertices << '\n'
          << "lower_bound " << report.lower_bound << '\n'
          << "last_budget_tried " << report.last_budget_tried << '\n'
          << "partitions_tried " << report.partitions_tried << '\n';
      return kExitTimeout;
    }
  }
  if (!f) {
    out << "NO\n";
    return kExitNo;
  }
  out << "optimum " << f->size() << '\n';
  const SolutionFile sol = make_solution_file(inst.graph, *f, inst.target, inst.variant, "optimal");
  emit(a.output, serialize_solution(sol), out);
  return kExitYes;
}

int cmd_verify(std::optional<int> k, const std::string& graph_file, const std::string& solution_file,
               std::ostream& out) {
  const std::string text = read_text_file(graph_file);
  const Graph g = parse_graph(text);
  const SolutionFile sol = parse_solution(read_text_file(solution_file));
  int budget = sol.k_used;
  if (k)
    budget = resolve_budget(k, text);
  else if (auto c = parse_budget_comment(text))
    budget = *c;
  const Instance inst{g, budget, sol.target, sol.variant};
  const VerifyResult r = verify_solution(inst, solution_edits(g, sol));
  if (r.accepted) {
    out << "accepted\n";
    return kExitYes;
  }
  out << "rejected: " << to_string(r.reason) << ": " << r.message << '\n';
  if (r.witness) print_obstruction(out, *r.witness);
  return kExitNo;
}

int cmd_reduce(const std::string& name, std::optional<int> k, const std::string& file, const std::string& output,
               std::string layout_path, std::ostream& out) {
  const std::string text = read_text_file(file);
  Instance result;
  if (name == "sat2te") {
    auto [inst, layout] = sat_to_threshold_editing(parse_cnf(text));
    result = inst;
    if (layout_path.empty() && !output.empty()) layout_path = output + ".layout";
    if (!layout_path.empty()) write_text_file(layout_path, serialize_layout(layout));
  } else {
    const Graph g = parse_graph(text);
    const int budget = resolve_budget(k, text);
    if (name == "ste2bce") {
      const auto part = compute_split_partition(g);
      if (!part) throw InputError("input graph is not split");
      result = split_te_to_bipartite_chain(g, *part, budget);
    } else if (name == "cce2chordal") {
      const auto sides = cobipartition_of(g);
      if (!sides) throw InputError("input graph is not cobipartite");
      result = cobipartite_to_chordal(g, *sides, budget);
    } else {
      const auto sides = bipartition_of(g);
      if (!sides) throw InputError("input graph is not bipartite");
      result = name == "bce2ce" ? bipartite_chain_to_chain(g, *sides, budget)
                                : bipartite_chain_to_cobipartite_chordal(g, *sides, budget);
    }
  }
  emit(output, serialize_instance(result), out);
  if (!output.empty()) out << "k " << result.k << "\nvertices " << result.graph.order() << '\n';
  return kExitYes;
}

struct BenchArgs {
  int n = 40;
  std::vector<int> flips{4, 8, 12, 16};
  int seeds = 1;
  std::uint64_t first_seed = 1;
  int threads = 0;
  double time_limit = 600;
  std::string target = "threshold";
  bool no_kernel = false;
};

struct BenchRow {
  int r = 0;
  std::uint64_t seed = 0;
  std::string optimum = "-";
  double seconds = 0;
  std::string status;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  const Target target = target_of(a.target);
  std::vector<BenchRow> rows;
  for (int r : a.flips)
    for (int s = 0; s < a.seeds; ++s) rows.push_back({r, a.first_seed + static_cast<std::uint64_t>(s), "-", 0, ""});

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      BenchRow& row = rows[i];
      const PlantedInstance planted = gen_instance(row.seed, a.n, row.r, target);
      const Instance inst{planted.graph, planted.flips, target, Variant::Edit};
      SolveOptions opts;
      opts.use_kernel = !a.no_kernel;
      const auto start = std::chrono::steady_clock::now();
      opts.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                  std::chrono::duration<double>(a.time_limit));
      try {
        const auto f = solve(inst, opts);
        if (f) {
          row.optimum = std::to_string(f->size());
          row.status = "ok";
        } else {
          row.status = "missed";
        }
      } catch (const TimeLimitExceeded&) {
        row.status = "timeout";
      }
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const int threads = std::max(1, std::min<int>(a.threads > 0 ? a.threads : default_threads(),
                                                static_cast<int>(rows.size())));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  bool all_ok = true;
  out << std::left << std::setw(6) << "index" << std::setw(5) << "n" << std::setw(5) << "r" << std::setw(8) << "seed"
      << std::setw(9) << "optimum" << std::setw(11) << "seconds"
      << "status\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const BenchRow& row = rows[i];
    all_ok = all_ok && row.status == "ok";
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(3) << row.seconds;
    out << std::setw(6) << i << std::setw(5) << a.n << std::setw(5) << row.r << std::setw(8) << row.seed
        << std::setw(9) << row.optimum << std::setw(11) << secs.str() << row.status << '\n';
  }
  return all_ok ? kExitYes : kExitNo;
}

}  // namespace

int default_threads() {
  if (const char* env = std::getenv("TCEDIT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact editing to threshold and chain graphs", "tcedit"};
  app.require_subcommand(1);

  const std::vector<std::string> targets{"threshold", "chain"};
  const std::vector<std::string> variants{"edit", "complete", "delete"};

  std::string rec_target = "threshold", rec_file;
  auto* rec = app.add_subcommand("recognize", "Test membership and print a witness");
  rec->add_option("--target", rec_target)->check(CLI::IsMember({"threshold", "chain", "split", "chordal"}));
  rec->add_option("graph", rec_file)->required();

  std::string ker_target = "threshold", ker_file, ker_out;
  std::optional<int> ker_k;
  auto* ker = app.add_subcommand("kernelize", "Reduce an instance to a kernel");
  ker->add_option("--target", ker_target)->check(CLI::IsMember(targets));
  ker->add_option("-k", ker_k, "Budget");
  ker->add_option("-o,--output", ker_out);
  ker->add_option("graph", ker_file)->required();

  SolveArgs solve_args, oracle_args;
  auto add_solve_options = [&](CLI::App* sub, SolveArgs& a, bool full) {
    sub->add_option("--target", a.target)->check(CLI::IsMember(targets));
    sub->add_option("--variant", a.variant)->check(CLI::IsMember(variants));
    sub->add_option("-k", a.k, "Budget");
    sub->add_option("-o,--output", a.output, "Solution file");
    sub->add_option("graph", a.file)->required();
    if (full) {
      sub->add_flag("--no-kernel", a.no_kernel);
      sub->add_option("--time-limit", a.time_limit, "Seconds")->check(CLI::NonNegativeNumber);
    }
  };
  auto* sol = app.add_subcommand("solve", "Optimal solution within the budget");
  add_solve_options(sol, solve_args, true);
  auto* orc = app.add_subcommand("oracle", "Optimal solution by exhaustive branching");
  add_solve_options(orc, oracle_args, false);

  std::optional<int> ver_k;
  std::string ver_graph, ver_solution;
  auto* ver = app.add_subcommand("verify", "Check a solution file against a graph");
  ver->add_option("-k", ver_k, "Budget");
  ver->add_option("graph", ver_graph)->required();
  ver->add_option("solution", ver_solution)->required();

  std::string red_name, red_file, red_out, red_layout;
  std::optional<int> red_k;
  auto* red = app.add_subcommand("reduce", "Run a named reduction");
  red->add_option("reduction", red_name)
      ->required()
      ->check(CLI::IsMember({"sat2te", "ste2bce", "bce2ce", "bce2cce", "cce2chordal"}));
  red->add_option("input", red_file)->required();
  red->add_option("-k", red_k, "Budget");
  red->add_option("-o,--output", red_out);
  red->add_option("--layout", red_layout, "Layout sidecar path (sat2te)");

  std::uint64_t gen_seed = 1;
  int gen_n = 20, gen_r = 4;
  std::string gen_target = "threshold", gen_out;
  auto* gen = app.add_subcommand("gen", "Planted instance");
  gen->add_option("--seed", gen_seed);
  gen->add_option("--n", gen_n)->check(CLI::NonNegativeNumber);
  gen->add_option("--r", gen_r, "Number of flips")->check(CLI::NonNegativeNumber);
  gen->add_option("--target", gen_target)->check(CLI::IsMember(targets));
  gen->add_option("-o,--output", gen_out);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Planted suite with a timing table");
  bench->add_option("--n", bench_args.n)->check(CLI::NonNegativeNumber);
  bench->add_option("--r", bench_args.flips, "Flip counts")->delimiter(',');
  bench->add_option("--seeds", bench_args.seeds, "Seeds per flip count")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_args.first_seed, "First seed");
  bench->add_option("--threads", bench_args.threads)->check(CLI::NonNegativeNumber);
  bench->add_option("--time-limit", bench_args.time_limit, "Seconds per instance")->check(CLI::PositiveNumber);
  bench->add_option("--target", bench_args.target)->check(CLI::IsMember(targets));
  bench->add_flag("--no-kernel", bench_args.no_kernel);

  if (!args.empty() && !args[0].empty() && args[0][0] != '-' && !app.get_subcommand_no_throw(args[0])) {
    err << "error: unknown subcommand " << args[0] << '\n' << app.help();
    return kExitUsage;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (rec->parsed()) return cmd_recognize(rec_target, rec_file, out);
    if (ker->parsed()) return cmd_kernelize(ker_target, ker_k, ker_file, ker_out, out);
    if (sol->parsed()) return cmd_solve(solve_args, false, out);
    if (orc->parsed()) return cmd_solve(oracle_args, true, out);
    if (ver->parsed()) return cmd_verify(ver_k, ver_graph, ver_solution, out);
    if (red->parsed()) return cmd_reduce(red_name, red_k, red_file, red_out, red_layout, out);
    if (gen->parsed()) {
      const Target t = target_of(gen_target);
      const PlantedInstance p = gen_instance(gen_seed, gen_n, gen_r, t);
      emit(gen_out, serialize_instance({p.graph, p.flips, t, Variant::Edit}), out);
      return kExitYes;
    }
    if (bench->parsed()) return cmd_bench(bench_args, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace tcedit

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "tcedit/generator.hpp"
#include "tcedit/kernel.hpp"
#include "tcedit/recognition.hpp"
#include "tcedit/reductions.hpp"
#include "tcedit/solver.hpp"
#include "test_support.hpp"

using namespace tcedit;
using namespace tcedit::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " edges:";
  for (const Edge& e : g.edges()) out << ' ' << e.u << '-' << e.v;
  return out.str();
}

std::optional<int> size_of(const std::optional<EditSet>& f) {
  if (!f) return std::nullopt;
  return static_cast<int>(f->size());
}

std::string show(std::optional<int> v) { return v ? std::to_string(*v) : "none"; }

Outcome oracle_equivalence() {
  Outcome o;
  int checked = 0;
  for (Target target : {Target::Threshold, Target::Chain})
    for (Variant variant : {Variant::Edit, Variant::Complete, Variant::Delete}) {
      std::mt19937_64 rng(1000 + 10 * static_cast<int>(target) + static_cast<int>(variant));
      for (int i = 0; i < 200; ++i) {
        const int n = uniform(rng, 1, 9);
        const int k = uniform(rng, 0, 3);
        const Instance inst{mixed_graph(rng, n, target, 4), k, target, variant};
        const auto expected = size_of(brute_force_oracle(inst));
        std::optional<EditSet> f;
        try {
          f = solve(inst);
        } catch (const std::exception& e) {
          o.pass = false;
          o.detail = to_string(target) + "/" + to_string(variant) + " k=" + std::to_string(k) + " " +
                     describe(inst.graph) + ": " + e.what();
          return o;
        }
        const auto got = size_of(f);
        ++checked;
        if (f && !verify_solution(inst, *f).accepted) {
          o.pass = false;
          o.detail = "unverifiable solution on " + describe(inst.graph);
          return o;
        }
        if (got != expected) {
          o.pass = false;
          o.detail = to_string(target) + "/" + to_string(variant) + " k=" + std::to_string(k) + " " +
                     describe(inst.graph) + " solve=" + show(got) + " oracle=" + show(expected);
          return o;
        }
      }
    }
  o.detail = std::to_string(checked) + " instances agree";
  return o;
}

Outcome kernel_soundness() {
  Outcome o;
  long long largest = 0;
  for (Target target : {Target::Threshold, Target::Chain}) {
    std::mt19937_64 rng(2000 + static_cast<int>(target));
    for (int i = 0; i < 100; ++i) {
      const int n = uniform(rng, 1, 10);
      const int k = uniform(rng, 0, 3);
      const Instance inst{mixed_graph(rng, n, target, 4), k, target, Variant::Edit};
      const Kernel kern = kernelize(inst);
      const bool before = brute_force_oracle(inst).has_value();
      const bool after = brute_force_oracle(kern.instance).has_value();
      const auto induced = induced_subgraph(inst.graph, kern.original);
      std::string fault;
      if (before != after) fault = "decision changed";
      if (kern.no_instance && before) fault = "no-instance reported for a yes-instance";
      if (!(induced.graph == kern.instance.graph)) fault = "kernel is not the induced subgraph";
      if (!kern.no_instance && kern.instance.k != k) fault = "budget changed";
      const long long bound = target == Target::Threshold ? threshold_kernel_bound(k) : chain_kernel_bound(k);
      if (kern.instance.graph.order() > bound) fault = "kernel exceeds the vertex bound";
      largest = std::max<long long>(largest, kern.instance.graph.order());
      if (!fault.empty()) {
        o.pass = false;
        o.detail = to_string(target) + " k=" + std::to_string(k) + " " + describe(inst.graph) + ": " + fault;
        return o;
      }
    }
  }
  o.detail = "200 instances, largest kernel " + std::to_string(largest) + " vertices";
  return o;
}

Outcome recognition_cross_validation() {
  Outcome o;
  std::mt19937_64 rng(3000);
  int threshold_yes = 0, chain_yes = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = uniform(rng, 0, 8);
    const Target planted = i % 2 ? Target::Chain : Target::Threshold;
    const Graph g = mixed_graph(rng, n, planted, 2);
    const bool t = is_threshold(g).yes;
    const bool c = is_chain(g).yes;
    threshold_yes += t;
    chain_yes += c;
    if (t == find_obstruction_naive(g, Family::Threshold).has_value() ||
        c == find_obstruction_naive(g, Family::Chain).has_value()) {
      o.pass = false;
      o.detail = "disagreement on " + describe(g);
      return o;
    }
  }
  o.detail = "500 graphs agree (" + std::to_string(threshold_yes) + " threshold, " + std::to_string(chain_yes) +
             " chain)";
  return o;
}

CnfFormula random_formula(std::mt19937_64& rng) {
  CnfFormula phi;
  phi.variables = uniform(rng, 1, 3);
  const int clauses = uniform(rng, 1, 3);
  for (int c = 0; c < clauses; ++c) {
    std::vector<int> vars(phi.variables);
    for (int v = 0; v < phi.variables; ++v) vars[v] = v + 1;
    std::shuffle(vars.begin(), vars.end(), rng);
    vars.resize(uniform(rng, 1, phi.variables));
    std::vector<int> clause;
    for (int v : vars) clause.push_back(rng() % 2 ? v : -v);
    phi.clauses.push_back(clause);
  }
  return phi;
}

Outcome reduction_forward() {
  Outcome o;
  std::mt19937_64 rng(4000);
  int made = 0;
  while (made < 20) {
    const CnfFormula phi = random_formula(rng);
    const auto alpha = find_satisfying(phi);
    if (!alpha) continue;
    ++made;
    const auto [inst, layout] = sat_to_threshold_editing(phi);
    const int expected = static_cast<int>(phi.clauses.size()) * (3 * phi.variables - 1);
    const EditSet f = assignment_to_solution(layout, *alpha);
    const bool threshold = is_threshold(apply_edits(inst.graph, f)).yes;
    if (inst.k != expected || static_cast<int>(f.size()) != expected || !threshold) {
      o.pass = false;
      o.detail = "formula " + std::to_string(made) + ": k=" + std::to_string(inst.k) + " edits=" +
                 std::to_string(f.size()) + " expected " + std::to_string(expected) +
                 (threshold ? "" : ", result not threshold");
      return o;
    }
  }
  o.detail = "20 satisfiable formulas";
  return o;
}

Outcome reduction_equivalence() {
  Outcome o;
  const std::vector<std::vector<int>> clauses{{1}, {-1}};
  std::vector<CnfFormula> formulas{{1, {}}};
  for (const auto& a : clauses) {
    formulas.push_back({1, {a}});
    for (const auto& b : clauses) formulas.push_back({1, {a, b}});
  }
  double slowest = 0;
  for (const CnfFormula& phi : formulas) {
    const auto [inst, layout] = sat_to_threshold_editing(phi);
    const auto start = std::chrono::steady_clock::now();
    const auto f = brute_force_oracle(inst);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    slowest = std::max(slowest, secs);
    const bool sat = find_satisfying(phi).has_value();
    if (f.has_value() != sat || secs >= 60) {
      o.pass = false;
      o.detail = "formula with " + std::to_string(phi.clauses.size()) + " clauses: oracle " +
                 (f ? "yes" : "no") + ", satisfiable " + (sat ? "yes" : "no");
      return o;
    }
    if (f && !satisfies(phi, extract_assignment(layout, *f))) {
      o.pass = false;
      o.detail = "extracted assignment does not satisfy the formula";
      return o;
    }
  }
  std::ostringstream d;
  d << formulas.size() << " formulas, slowest " << std::fixed << std::setprecision(2) << slowest << "s";
  o.detail = d.str();
  return o;
}

using PartitionKey = std::pair<std::vector<Vertex>, std::vector<Vertex>>;

std::vector<PartitionKey> split_partitions_of(const Graph& h) {
  std::vector<PartitionKey> out;
  const int n = h.order();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    PartitionKey p;
    for (int v = 0; v < n; ++v) (mask >> v & 1 ? p.first : p.second).push_back(v);
    bool ok = true;
    for (std::size_t i = 0; ok && i < p.first.size(); ++i)
      for (std::size_t j = i + 1; ok && j < p.first.size(); ++j) ok = h.adjacent(p.first[i], p.first[j]);
    for (std::size_t i = 0; ok && i < p.second.size(); ++i)
      for (std::size_t j = i + 1; ok && j < p.second.size(); ++j) ok = !h.adjacent(p.second[i], p.second[j]);
    if (ok) out.push_back(p);
  }
  return out;
}

Outcome split_enumeration() {
  Outcome o;
  std::mt19937_64 rng(6000);
  std::size_t required = 0;
  for (int i = 0; i < 50; ++i) {
    const int n = uniform(rng, 1, 7);
    const int k = uniform(rng, 0, 2);
    const Graph g = mixed_graph(rng, n, Target::Threshold, 3);
    std::set<PartitionKey> listed;
    for (SplitPartition p : enumerate_split_partitions(g, k)) {
      std::sort(p.clique.begin(), p.clique.end());
      std::sort(p.independent.begin(), p.independent.end());
      listed.emplace(p.clique, p.independent);
    }
    std::set<PartitionKey> needed;
    for_each_pair_subset(all_pairs(n), k, [&](const std::vector<Edge>& f) {
      for (const auto& p : split_partitions_of(toggled(g, f))) needed.insert(p);
      return false;
    });
    required += needed.size();
    for (const auto& p : needed)
      if (!listed.count(p)) {
        o.pass = false;
        o.detail = "missing partition for k=" + std::to_string(k) + " " + describe(g);
        return o;
      }
  }
  o.detail = "50 graphs, " + std::to_string(required) + " required partitions all listed";
  return o;
}

Outcome duality() {
  Outcome o;
  std::mt19937_64 rng(7000);
  int yes = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = uniform(rng, 1, 10);
    const int k = uniform(rng, 0, 4);
    const Graph g = mixed_graph(rng, n, Target::Threshold, 4);
    const auto completion = size_of(solve({g, k, Target::Threshold, Variant::Complete}));
    const auto deletion = size_of(solve({complement(g), k, Target::Threshold, Variant::Delete}));
    yes += completion.has_value();
    if (completion != deletion) {
      o.pass = false;
      o.detail = describe(g) + " completion=" + show(completion) + " deletion on complement=" + show(deletion);
      return o;
    }
  }
  o.detail = "100 instances agree (" + std::to_string(yes) + " yes)";
  return o;
}

Outcome planted_recovery() {
  Outcome o;
  std::ostringstream d;
  for (int r : {4, 8, 12, 16}) {
    const PlantedInstance p = gen_instance(static_cast<std::uint64_t>(8000 + r), 40, r, Target::Threshold);
    const Instance inst{p.graph, r, Target::Threshold, Variant::Edit};
    SolveOptions opts;
    const auto start = std::chrono::steady_clock::now();
    opts.deadline = start + std::chrono::minutes(10);
    std::string result;
    try {
      const auto f = solve(inst, opts);
      if (!f) {
        result = "none";
        o.pass = false;
      } else if (!verify_solution(inst, *f).accepted) {
        result = "invalid";
        o.pass = false;
      } else {
        result = "opt " + std::to_string(f->size());
      }
    } catch (const TimeLimitExceeded&) {
      result = "timeout";
      o.pass = false;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    d << (r == 4 ? "" : ", ") << "r=" << r << ": " << result << " in " << std::fixed << std::setprecision(2) << secs
      << "s";
  }
  o.detail = d.str();
  return o;
}

// Least number of A x B toggles turning g into a graph accepted by `good`.
int least_cross_edits(const Graph& g, const Sides& sides, const std::function<bool(const Graph&)>& good) {
  std::vector<Edge> cross;
  for (Vertex a : sides.a)
    for (Vertex b : sides.b) cross.emplace_back(a, b);
  int best = -1;
  for_each_pair_subset(cross, static_cast<int>(cross.size()), [&](const std::vector<Edge>& f) {
    if (!good(toggled(g, f))) return false;
    best = static_cast<int>(f.size());
    return true;
  });
  return best;
}

bool bipartite_chain_with_sides(const Graph& h, const Sides& sides) {
  for (const auto* side : {&sides.a, &sides.b})
    for (std::size_t i = 0; i < side->size(); ++i)
      for (std::size_t j = i + 1; j < side->size(); ++j)
        if (h.adjacent((*side)[i], (*side)[j])) return false;
  // Neighbourhoods of side a must be nested.
  for (Vertex x : sides.a)
    for (Vertex y : sides.a) {
      bool x_in_y = true, y_in_x = true;
      for (Vertex b : sides.b) {
        if (h.adjacent(x, b) && !h.adjacent(y, b)) x_in_y = false;
        if (h.adjacent(y, b) && !h.adjacent(x, b)) y_in_x = false;
      }
      if (!x_in_y && !y_in_x) return false;
    }
  return true;
}

Outcome chain_chordal_transfer() {
  Outcome o;
  std::mt19937_64 rng(9000);
  for (int i = 0; i < 30; ++i) {
    const int n = uniform(rng, 2, 6);
    const int k = uniform(rng, 0, 2);
    Sides sides;
    for (int v = 0; v < n; ++v) (v < (n + 1) / 2 ? sides.a : sides.b).push_back(v);
    std::vector<Edge> edges;
    for (Vertex a : sides.a)
      for (Vertex b : sides.b)
        if (rng() % 2) edges.emplace_back(a, b);
    const Graph g(n, edges);
    const Instance completed = bipartite_chain_to_cobipartite_chordal(g, sides, k);
    const int chain_opt = least_cross_edits(g, sides, [&](const Graph& h) {
      return bipartite_chain_with_sides(h, sides);
    });
    const int chordal_opt = least_cross_edits(completed.graph, sides, [](const Graph& h) {
      return is_chordal(h).yes;
    });
    if (chain_opt != chordal_opt || completed.k != k || (chain_opt <= k) != (chordal_opt <= k)) {
      o.pass = false;
      o.detail = describe(g) + " chain optimum " + std::to_string(chain_opt) + ", chordal optimum " +
                 std::to_string(chordal_opt);
      return o;
    }
  }
  o.detail = "30 bipartite instances agree";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  // Optional arguments select criteria by number.
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"kernel soundness and size", kernel_soundness},
      {"recognition cross-validation", recognition_cross_validation},
      {"reduction forward correctness", reduction_forward},
      {"reduction equivalence", reduction_equivalence},
      {"split partition enumeration", split_enumeration},
      {"completion/deletion duality", duality},
      {"planted recovery n=40", planted_recovery},
      {"chain/chordal transfer", chain_chordal_transfer},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && !only.count(static_cast<int>(i + 1))) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): " << o.detail
              << std::endl;
  }
  return failures ? 1 : 0;
}

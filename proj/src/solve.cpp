#include <algorithm>
#include <numeric>
#include <tuple>

#include "tcedit/kernel.hpp"
#include "tcedit/solver.hpp"

namespace tcedit {

namespace {

void check_deadline(const Deadline& deadline) {
  if (deadline && std::chrono::steady_clock::now() > *deadline) throw TimeLimitExceeded("time limit exceeded");
}

// Cost of building g's closest threshold graph along a fixed creation order:
// each vertex is independently isolated or universal with respect to the
// vertices before it.
int order_cost(const Graph& g, const std::vector<Vertex>& order, Variant variant, std::vector<Edge>* edits) {
  const int n = g.order();
  std::vector<char> before(n, 0);
  int total = 0;
  for (int j = 0; j < n; ++j) {
    const Vertex v = order[j];
    int earlier_nbrs = 0;
    for (Vertex w : g.neighbors(v)) earlier_nbrs += before[w];
    const int as_universal = j - earlier_nbrs;
    const int as_isolated = earlier_nbrs;
    bool universal;
    if (variant == Variant::Complete) universal = as_isolated > 0 || as_universal <= as_isolated;
    else if (variant == Variant::Delete) universal = as_universal == 0;
    else universal = as_universal < as_isolated;
    total += universal ? as_universal : as_isolated;
    if (edits)
      for (int q = 0; q < j; ++q)
        if (g.adjacent(v, order[q]) != universal) edits->emplace_back(v, order[q]);
    before[v] = 1;
  }
  return total;
}

// Upper bound by degree ordering plus insertion moves.
std::vector<Edge> threshold_upper_bound(const Graph& g, Variant variant, const Deadline& deadline) {
  const int n = g.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  int cost = order_cost(g, order, variant, nullptr);
  if (n <= 120) {
    bool improved = true;
    while (improved && cost > 0) {
      improved = false;
      check_deadline(deadline);
      for (int i = 0; i < n && !improved; ++i)
        for (int j = 0; j < n && !improved; ++j) {
          if (i == j) continue;
          std::vector<Vertex> next = order;
          const Vertex v = next[i];
          next.erase(next.begin() + i);
          next.insert(next.begin() + j, v);
          const int c = order_cost(g, next, variant, nullptr);
          if (c < cost) {
            cost = c;
            order = std::move(next);
            improved = true;
          }
        }
    }
  }
  std::vector<Edge> edits;
  order_cost(g, order, variant, &edits);
  std::sort(edits.begin(), edits.end());
  return edits;
}

std::vector<Edge> side_fix(const Graph& g, const std::vector<Vertex>& side, bool want_edges) {
  std::vector<Edge> out;
  for (std::size_t x = 0; x < side.size(); ++x)
    for (std::size_t y = x + 1; y < side.size(); ++y)
      if (g.adjacent(side[x], side[y]) != want_edges) out.emplace_back(side[x], side[y]);
  return out;
}

Graph toggled(const Graph& g, const std::vector<Edge>& pairs) { return apply_edits(g, EditSet(pairs)); }

std::optional<std::vector<Edge>> solve_threshold(const Graph& g, int k, Variant variant, const Deadline& deadline,
                                                 SolveReport& report) {
  const int lb = obstruction_packing_bound(g, Family::Threshold);
  report.lower_bound = lb;
  if (lb > k) return std::nullopt;
  std::optional<std::vector<Edge>> best;
  auto ub = threshold_upper_bound(g, variant, deadline);
  int limit = k;
  if (static_cast<int>(ub.size()) <= k) {
    best = ub;
    limit = static_cast<int>(ub.size()) - 1;
  }
  if (limit < lb) return best;

  auto parts = enumerate_split_partitions(g, limit);
  // (forced cost + bound on the split part, forced cost, index)
  std::vector<std::tuple<int, int, std::size_t>> order;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    check_deadline(deadline);
    const SplitPartition& part = parts[p];
    auto fix_c = side_fix(g, part.clique, true);
    auto fix_i = side_fix(g, part.independent, false);
    if (variant == Variant::Complete && !fix_i.empty()) continue;
    if (variant == Variant::Delete && !fix_c.empty()) continue;
    const int forced = static_cast<int>(fix_c.size() + fix_i.size());
    fix_c.insert(fix_c.end(), fix_i.begin(), fix_i.end());
    order.emplace_back(forced + split_threshold_packing_bound(toggled(g, fix_c), part), forced, p);
  }
  std::sort(order.begin(), order.end());
  for (const auto& [bound, forced, p] : order) {
    check_deadline(deadline);
    if (bound > limit) break;
    const SplitPartition& part = parts[p];
    ++report.partitions_tried;
    report.last_budget_tried = limit;
    std::vector<Edge> forced_edits = side_fix(g, part.clique, true);
    auto fix_i = side_fix(g, part.independent, false);
    forced_edits.insert(forced_edits.end(), fix_i.begin(), fix_i.end());
    const Graph split = toggled(g, forced_edits);
    auto ste = solve_split_threshold(split, part, limit - forced, variant, deadline);
    if (!ste) continue;
    forced_edits.insert(forced_edits.end(), ste->pairs().begin(), ste->pairs().end());
    std::sort(forced_edits.begin(), forced_edits.end());
    best = std::move(forced_edits);
    limit = static_cast<int>(best->size()) - 1;
    if (limit < lb) break;
  }
  return best;
}

std::optional<std::vector<Edge>> solve_chain(const Graph& g, int k, Variant variant, const Deadline& deadline,
                                             SolveReport& report) {
  const int lb = obstruction_packing_bound(g, Family::Chain);
  report.lower_bound = lb;
  if (lb > k) return std::nullopt;
  std::optional<std::vector<Edge>> best;
  int limit = k;
  auto bips = enumerate_bipartitions(g, limit);
  // Completing A makes the chain condition a split threshold condition; the
  // added clique edges are not part of the answer.
  auto shape_of = [&](const Bipartition& bp) {
    std::vector<Edge> shape = side_fix(g, bp.b, false);
    auto add_a = side_fix(g, bp.a, true);
    shape.insert(shape.end(), add_a.begin(), add_a.end());
    return toggled(g, shape);
  };
  // (intra edges + bound on the split part, intra edges, index)
  std::vector<std::tuple<int, int, std::size_t>> order;
  for (std::size_t p = 0; p < bips.size(); ++p) {
    check_deadline(deadline);
    const int intra = intra_edges(g, bips[p]);
    if (variant == Variant::Complete && intra > 0) continue;
    const SplitPartition part{bips[p].a, bips[p].b};
    order.emplace_back(intra + split_threshold_packing_bound(shape_of(bips[p]), part), intra, p);
  }
  std::sort(order.begin(), order.end());
  for (const auto& [bound, intra, p] : order) {
    check_deadline(deadline);
    if (bound > limit) break;
    const Bipartition& bp = bips[p];
    ++report.partitions_tried;
    report.last_budget_tried = limit;
    std::vector<Edge> deletions = side_fix(g, bp.a, false);
    auto del_b = side_fix(g, bp.b, false);
    deletions.insert(deletions.end(), del_b.begin(), del_b.end());
    auto ste = solve_split_threshold(shape_of(bp), SplitPartition{bp.a, bp.b}, limit - intra, variant, deadline);
    if (!ste) continue;
    deletions.insert(deletions.end(), ste->pairs().begin(), ste->pairs().end());
    std::sort(deletions.begin(), deletions.end());
    best = std::move(deletions);
    limit = static_cast<int>(best->size()) - 1;
    if (limit < lb) break;
  }
  return best;
}

std::optional<std::vector<Edge>> solve_direct(const Graph& g, int k, Target target, Variant variant,
                                              const Deadline& deadline, SolveReport& report) {
  return target == Target::Threshold ? solve_threshold(g, k, variant, deadline, report)
                                     : solve_chain(g, k, variant, deadline, report);
}

}  // namespace

std::optional<EditSet> solve(const Instance& inst, const SolveOptions& options, SolveReport* report) {
  if (inst.target == Target::Chordal) throw ContractError("solving chordal editing is not supported");
  if (inst.k < 0) throw ContractError("negative budget");
  SolveReport local;
  SolveReport& rep = report ? *report : local;
  rep = SolveReport{};
  rep.kernel_vertices = inst.graph.order();

  std::optional<std::vector<Edge>> found;
  if (options.use_kernel) {
    const Kernel kern = kernelize(inst);
    rep.kernel_vertices = kern.instance.graph.order();
    if (kern.no_instance) return std::nullopt;
    auto sub = solve_direct(kern.instance.graph, inst.k, inst.target, inst.variant, options.deadline, rep);
    if (!sub) return std::nullopt;
    std::vector<Edge> lifted;
    for (const Edge& e : *sub) lifted.emplace_back(kern.original[e.u], kern.original[e.v]);
    std::sort(lifted.begin(), lifted.end());
    if (verify_solution(inst, EditSet(lifted, inst.variant)).accepted) {
      found = std::move(lifted);
    } else {
      // The kernel optimum is a lower bound for the original graph.
      found = solve_direct(inst.graph, inst.k, inst.target, inst.variant, options.deadline, rep);
    }
  } else {
    found = solve_direct(inst.graph, inst.k, inst.target, inst.variant, options.deadline, rep);
  }
  if (!found) return std::nullopt;
  EditSet out(*found, inst.variant);
  auto check = verify_solution(inst, out);
  if (!check.accepted) throw ContractError("internal: solver produced a rejected solution: " + check.message);
  return out;
}

}  // namespace tcedit

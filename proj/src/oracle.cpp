#include <algorithm>
#include <set>

#include "tcedit/solver.hpp"

namespace tcedit {

std::string to_string(RejectReason r) {
  switch (r) {
    case RejectReason::None: return "none";
    case RejectReason::Range: return "range";
    case RejectReason::Budget: return "budget";
    case RejectReason::Purity: return "variant purity";
    case RejectReason::Membership: return "membership";
  }
  return "?";
}

Family family_of(Target t) {
  if (t == Target::Chordal) throw ContractError("chordal target has no obstruction family here");
  return t == Target::Threshold ? Family::Threshold : Family::Chain;
}

VerifyResult verify_solution(const Instance& inst, const EditSet& f) {
  VerifyResult r;
  const Graph& g = inst.graph;
  for (const Edge& e : f)
    if (e.u < 0 || e.v >= g.order()) {
      r.reason = RejectReason::Range;
      r.message = "pair {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} out of range";
      return r;
    }
  if (static_cast<long long>(f.size()) > inst.k) {
    r.reason = RejectReason::Budget;
    r.message = std::to_string(f.size()) + " edits exceed budget " + std::to_string(inst.k);
    return r;
  }
  for (const Edge& e : f) {
    const bool present = g.adjacent(e.u, e.v);
    if ((inst.variant == Variant::Complete && present) || (inst.variant == Variant::Delete && !present)) {
      r.reason = RejectReason::Purity;
      r.message = std::string(present ? "deletes" : "adds") + " {" + std::to_string(e.u) + "," +
                  std::to_string(e.v) + "} under " + to_string(inst.variant);
      return r;
    }
  }
  EditSet untagged(f.pairs());
  Graph h = apply_edits(g, untagged);
  if (inst.target == Target::Chordal) {
    auto c = is_chordal(h);
    if (!c.yes) {
      r.reason = RejectReason::Membership;
      r.message = "result has a chordless cycle of length " + std::to_string(c.cycle.size());
      return r;
    }
  } else if (auto obs = find_obstruction(h, family_of(inst.target))) {
    r.reason = RejectReason::Membership;
    r.message = "result contains an induced " + to_string(obs->kind);
    r.witness = obs;
    return r;
  }
  r.accepted = true;
  return r;
}

namespace {

Graph toggle(const Graph& g, Edge e) {
  std::vector<Edge> edges = g.edges();
  if (g.adjacent(e.u, e.v)) edges.erase(std::find(edges.begin(), edges.end(), e));
  else edges.push_back(e);
  return Graph(g.order(), edges);
}

bool branch(const Graph& g, int depth, Family family, Variant variant, std::vector<Edge>& chosen) {
  auto obs = find_obstruction(g, family);
  if (!obs) return true;
  if (depth == 0) return false;
  const auto& vs = obs->vertices;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      Edge e(vs[i], vs[j]);
      const bool present = g.adjacent(e.u, e.v);
      if (variant == Variant::Complete && present) continue;
      if (variant == Variant::Delete && !present) continue;
      if (std::find(chosen.begin(), chosen.end(), e) != chosen.end()) continue;
      chosen.push_back(e);
      if (branch(toggle(g, e), depth - 1, family, variant, chosen)) return true;
      chosen.pop_back();
    }
  return false;
}

}  // namespace

std::optional<EditSet> brute_force_oracle(const Instance& inst) {
  const Family family = family_of(inst.target);
  for (int d = 0; d <= inst.k; ++d) {
    std::vector<Edge> chosen;
    if (branch(inst.graph, d, family, inst.variant, chosen)) return EditSet(chosen, inst.variant);
  }
  return std::nullopt;
}

int obstruction_packing_bound(const Graph& g, Family family) {
  std::set<Edge> used;
  int count = 0;
  for_each_obstruction(g, family, [&](const Obstruction& w) {
    const auto& vs = w.vertices;
    std::vector<Edge> pairs;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) pairs.emplace_back(vs[i], vs[j]);
    for (const Edge& e : pairs)
      if (used.count(e)) return false;
    used.insert(pairs.begin(), pairs.end());
    ++count;
    return false;
  });
  return count;
}

int forced_cost(const Graph& g, const SplitPartition& part) {
  int cost = 0;
  const auto& c = part.clique;
  const auto& i = part.independent;
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = x + 1; y < c.size(); ++y) cost += !g.adjacent(c[x], c[y]);
  for (std::size_t x = 0; x < i.size(); ++x)
    for (std::size_t y = x + 1; y < i.size(); ++y) cost += g.adjacent(i[x], i[y]);
  return cost;
}

int intra_edges(const Graph& g, const Bipartition& bp) {
  int cost = 0;
  for (const auto* side : {&bp.a, &bp.b})
    for (std::size_t x = 0; x < side->size(); ++x)
      for (std::size_t y = x + 1; y < side->size(); ++y) cost += g.adjacent((*side)[x], (*side)[y]);
  return cost;
}

}  // namespace tcedit

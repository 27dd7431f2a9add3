#include "tcedit/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

#include "tcedit/solver.hpp"

namespace tcedit {

bool satisfies(const CnfFormula& phi, const Assignment& alpha) {
  if (static_cast<int>(alpha.size()) != phi.variables) return false;
  for (const auto& clause : phi.clauses) {
    bool sat = false;
    for (int lit : clause)
      if (alpha[std::abs(lit) - 1] == (lit > 0)) sat = true;
    if (!sat) return false;
  }
  return true;
}

std::optional<Assignment> find_satisfying(const CnfFormula& phi) {
  if (phi.variables > 24) throw ContractError("too many variables for exhaustive search");
  for (std::uint32_t m = 0; m < (1U << phi.variables); ++m) {
    Assignment alpha(phi.variables);
    for (int x = 0; x < phi.variables; ++x) alpha[x] = (m >> x) & 1U;
    if (satisfies(phi, alpha)) return alpha;
  }
  return std::nullopt;
}

namespace {

CnfFormula normalized(const CnfFormula& phi) {
  if (phi.variables < 0) throw InputError("negative variable count");
  CnfFormula out{phi.variables, {}};
  for (const auto& clause : phi.clauses) {
    std::vector<int> lits = clause;
    std::sort(lits.begin(), lits.end(), [](int x, int y) { return std::abs(x) != std::abs(y) ? std::abs(x) < std::abs(y) : x < y; });
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    if (lits.empty()) throw InputError("empty clause");
    for (int lit : lits)
      if (lit == 0 || std::abs(lit) > phi.variables) throw InputError("literal out of range: " + std::to_string(lit));
    for (std::size_t j = 1; j < lits.size(); ++j)
      if (lits[j] == -lits[j - 1]) throw InputError("tautological clause");
    if (lits.size() > 3) throw InputError("clause with more than three literals");
    out.clauses.push_back(std::move(lits));
  }
  return out;
}

// Clique vertices of the variable order up to and including boundary `b` of
// variable x.
std::vector<Vertex> prefix(const GadgetLayout& layout, int x, int boundary) {
  std::vector<Vertex> out;
  for (int y = 0; y < x; ++y) {
    const auto& g = layout.variables[y];
    out.insert(out.end(), {g.a, g.b, g.bottom, g.top, g.c, g.d});
  }
  const auto& g = layout.variables[x];
  const std::vector<Vertex> own = {g.a, g.b, g.bottom, g.top, g.c, g.d};
  const int take[5] = {1, 2, 4, 5, 6};
  out.insert(out.end(), own.begin(), own.begin() + take[boundary]);
  return out;
}

void check_sides(const Graph& g, const Sides& sides) {
  std::vector<char> seen(g.order(), 0);
  for (const auto* side : {&sides.a, &sides.b})
    for (Vertex v : *side) {
      g.check_vertex(v);
      if (seen[v]) throw ContractError("sides overlap");
      seen[v] = 1;
    }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw ContractError("sides do not cover V");
}

void check_bipartite(const Graph& g, const Sides& sides) {
  check_sides(g, sides);
  for (const auto* side : {&sides.a, &sides.b})
    for (std::size_t x = 0; x < side->size(); ++x)
      for (std::size_t y = x + 1; y < side->size(); ++y)
        if (g.adjacent((*side)[x], (*side)[y])) throw ContractError("side is not independent");
}

std::optional<Sides> two_colour(const Graph& g, bool use_complement) {
  const int n = g.order();
  std::vector<int> colour(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex w = 0; w < n; ++w) {
        if (w == v || g.adjacent(v, w) == use_complement) continue;
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          q.push(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Sides sides;
  for (Vertex v = 0; v < n; ++v) (colour[v] == 0 ? sides.a : sides.b).push_back(v);
  return sides;
}

}  // namespace

std::optional<Sides> bipartition_of(const Graph& g) { return two_colour(g, false); }
std::optional<Sides> cobipartition_of(const Graph& g) { return two_colour(g, true); }

std::pair<Instance, GadgetLayout> sat_to_threshold_editing(const CnfFormula& phi_in) {
  const CnfFormula phi = normalized(phi_in);
  GadgetLayout layout;
  layout.formula = phi;
  if (phi.clauses.empty()) {
    // Nothing to satisfy: the trivial yes-instance.
    layout.formula = CnfFormula{phi.variables, {}};
    return {Instance{Graph(0), 0, Target::Threshold, Variant::Edit}, layout};
  }
  const int nv = phi.variables;
  const int nc = static_cast<int>(phi.clauses.size());
  const int k = nc * (3 * nv - 1);
  layout.k = k;

  Vertex next = 0;
  for (int x = 0; x < nv; ++x) {
    VariableGadget g;
    g.a = next++;
    g.b = next++;
    g.bottom = next++;
    g.top = next++;
    g.c = next++;
    g.d = next++;
    layout.variables.push_back(g);
  }
  const Vertex clique_end = next;
  for (int j = 0; j < nc; ++j) layout.clauses.push_back(next++);
  for (int x = 0; x < nv; ++x)
    for (int boundary = 0; boundary < 5; ++boundary) {
      layout.enforcement.push_back(Enforcement{x, boundary, next, k + 1});
      next += k + 1;
    }
  layout.isolated_first = next;
  layout.isolated_count = 4 * (k + 1);
  next += layout.isolated_count;

  std::vector<Edge> edges;
  for (Vertex u = 0; u < clique_end; ++u)
    for (Vertex v = u + 1; v < clique_end; ++v) edges.emplace_back(u, v);
  for (int j = 0; j < nc; ++j) {
    const Vertex vc = layout.clauses[j];
    int degree = 0;
    for (int x = 0; x < nv; ++x) {
      const auto& g = layout.variables[x];
      int sign = 0;
      for (int lit : phi.clauses[j])
        if (std::abs(lit) == x + 1) sign = lit > 0 ? 1 : -1;
      const Vertex middle = sign > 0 ? g.top : sign < 0 ? g.bottom : g.c;
      for (Vertex w : {g.b, middle, g.d}) {
        edges.emplace_back(vc, w);
        ++degree;
      }
    }
    if (degree != 3 * nv) throw ContractError("internal: clause vertex degree");
  }
  for (const auto& enf : layout.enforcement) {
    const auto pre = prefix(layout, enf.variable, enf.boundary);
    for (int q = 0; q < enf.count; ++q)
      for (Vertex w : pre) edges.emplace_back(enf.first + q, w);
  }
  Graph g(next, edges);
  return {Instance{std::move(g), k, Target::Threshold, Variant::Edit}, layout};
}

EditSet assignment_to_solution(const GadgetLayout& layout, const Assignment& alpha) {
  const CnfFormula& phi = layout.formula;
  if (!satisfies(phi, alpha)) throw ContractError("assignment does not satisfy the formula");
  if (phi.clauses.empty()) return EditSet({}, Variant::Edit);
  const Graph g = sat_to_threshold_editing(phi).first.graph;
  // Clique order: a, b, then the literal true under alpha, then the other, c, d.
  std::vector<Vertex> pi;
  for (int x = 0; x < phi.variables; ++x) {
    const auto& v = layout.variables[x];
    pi.push_back(v.a);
    pi.push_back(v.b);
    if (alpha[x]) {
      pi.push_back(v.top);
      pi.push_back(v.bottom);
    } else {
      pi.push_back(v.bottom);
      pi.push_back(v.top);
    }
    pi.push_back(v.c);
    pi.push_back(v.d);
  }
  std::vector<Edge> edits;
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    int chosen = 0;
    for (int lit : phi.clauses[j])
      if (alpha[std::abs(lit) - 1] == (lit > 0) && (chosen == 0 || std::abs(lit) < std::abs(chosen))) chosen = lit;
    const auto& gad = layout.variables[std::abs(chosen) - 1];
    const Vertex cut = chosen > 0 ? gad.top : gad.bottom;
    const Vertex vc = layout.clauses[j];
    bool inside = true;
    for (Vertex w : pi) {
      if (g.adjacent(vc, w) != inside) edits.emplace_back(vc, w);
      if (w == cut) inside = false;
    }
  }
  return EditSet(edits, Variant::Edit);
}

Assignment extract_assignment(const GadgetLayout& layout, const EditSet& f) {
  const auto [inst, rebuilt] = sat_to_threshold_editing(layout.formula);
  if (!verify_solution(inst, EditSet(f.pairs())).accepted)
    throw ContractError("edit set is not a solution of the gadget instance");
  const Graph h = apply_edits(inst.graph, EditSet(f.pairs()));
  Assignment alpha(layout.formula.variables, true);
  // A formula without clauses has no gadgets; every assignment satisfies it.
  for (std::size_t x = 0; x < rebuilt.variables.size(); ++x) {
    const auto& v = rebuilt.variables[x];
    alpha[x] = !(h.degree(v.bottom) > h.degree(v.top));
  }
  if (!satisfies(layout.formula, alpha)) throw ContractError("decoded assignment does not satisfy the formula");
  return alpha;
}

Instance split_te_to_bipartite_chain(const Graph& g, const SplitPartition& part, int k) {
  check_sides(g, Sides{part.clique, part.independent});
  const auto& c = part.clique;
  const auto& i = part.independent;
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = x + 1; y < c.size(); ++y)
      if (!g.adjacent(c[x], c[y])) throw ContractError("split partition not realized: clique side");
  for (std::size_t x = 0; x < i.size(); ++x)
    for (std::size_t y = x + 1; y < i.size(); ++y)
      if (g.adjacent(i[x], i[y])) throw ContractError("split partition not realized: independent side");
  std::vector<char> in_c(g.order(), 0);
  for (Vertex v : c) in_c[v] = 1;
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (!(in_c[e.u] && in_c[e.v])) kept.push_back(e);
  return Instance{Graph(g.order(), kept), k, Target::Chain, Variant::Edit};
}

Instance bipartite_chain_to_chain(const Graph& g, const Sides& sides, int k) {
  check_bipartite(g, sides);
  if (k < 0) throw ContractError("negative budget");
  const int n = g.order();
  std::vector<Edge> edges = g.edges();
  std::vector<Vertex> new_a, new_b;
  for (int q = 0; q <= k; ++q) new_a.push_back(n + q);
  for (int q = 0; q <= k; ++q) new_b.push_back(n + k + 1 + q);
  for (Vertex a : new_a) {
    for (Vertex b : sides.b) edges.emplace_back(a, b);
    for (Vertex b : new_b) edges.emplace_back(a, b);
  }
  for (Vertex b : new_b)
    for (Vertex a : sides.a) edges.emplace_back(a, b);
  return Instance{Graph(n + 2 * (k + 1), edges), k, Target::Chain, Variant::Edit};
}

Instance bipartite_chain_to_cobipartite_chordal(const Graph& g, const Sides& sides, int k) {
  check_bipartite(g, sides);
  std::vector<Edge> edges = g.edges();
  for (const auto* side : {&sides.a, &sides.b})
    for (std::size_t x = 0; x < side->size(); ++x)
      for (std::size_t y = x + 1; y < side->size(); ++y) edges.emplace_back((*side)[x], (*side)[y]);
  return Instance{Graph(g.order(), edges), k, Target::Chordal, Variant::Edit};
}

long long cobipartite_to_chordal_order(int n, int k) {
  const long long kk = k;
  return n + 2 * (kk + 1) + (kk + 1) * (kk + 1) * kk;
}

Instance cobipartite_to_chordal(const Graph& g, const Sides& sides, int k) {
  check_sides(g, sides);
  if (k < 0) throw ContractError("negative budget");
  for (const auto* side : {&sides.a, &sides.b})
    for (std::size_t x = 0; x < side->size(); ++x)
      for (std::size_t y = x + 1; y < side->size(); ++y)
        if (!g.adjacent((*side)[x], (*side)[y])) throw ContractError("side is not a clique");
  const int n = g.order();
  std::vector<Edge> edges = g.edges();
  std::vector<Vertex> new_a, new_b, full_a = sides.a, full_b = sides.b;
  Vertex next = n;
  for (int q = 0; q <= k; ++q) new_a.push_back(next++);
  for (int q = 0; q <= k; ++q) new_b.push_back(next++);
  full_a.insert(full_a.end(), new_a.begin(), new_a.end());
  full_b.insert(full_b.end(), new_b.begin(), new_b.end());
  // New frame vertices join their own clique; the a_i also see all of B'.
  for (Vertex a : new_a) {
    for (Vertex w : full_a)
      if (w != a && (w < n || w < a)) edges.emplace_back(a, w);
    for (Vertex b : full_b) edges.emplace_back(a, b);
  }
  for (Vertex b : new_b)
    for (Vertex w : full_b)
      if (w != b && (w < n || w < b)) edges.emplace_back(b, w);
  for (const auto* frame : {&new_a, &new_b})
    for (std::size_t x = 0; x < frame->size(); ++x)
      for (std::size_t y = x + 1; y < frame->size(); ++y)
        for (int q = 0; q <= k; ++q) {
          const Vertex p = next++;
          edges.emplace_back(p, (*frame)[x]);
          edges.emplace_back(p, (*frame)[y]);
        }
  if (next != cobipartite_to_chordal_order(n, k)) throw ContractError("internal: vertex count");
  return Instance{Graph(next, edges), k, Target::Chordal, Variant::Edit};
}

}  // namespace tcedit

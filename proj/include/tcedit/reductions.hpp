#pragma once

#include <utility>
#include <vector>

#include "tcedit/graph.hpp"
#include "tcedit/recognition.hpp"

namespace tcedit {

// Literals are signed 1-based variable ids, as in DIMACS.
struct CnfFormula {
  int variables = 0;
  std::vector<std::vector<int>> clauses;

  bool operator==(const CnfFormula&) const = default;
};

using Assignment = std::vector<bool>;  // indexed by 0-based variable id

bool satisfies(const CnfFormula& phi, const Assignment& alpha);
// Exhaustive search; intended for a handful of variables.
std::optional<Assignment> find_satisfying(const CnfFormula& phi);

struct VariableGadget {
  Vertex a = -1, b = -1, bottom = -1, top = -1, c = -1, d = -1;

  bool operator==(const VariableGadget&) const = default;
};

// k+1 independent vertices seeing exactly the clique prefix that ends at a
// boundary of the variable order. Boundaries per variable: 0 after a, 1 after
// b, 2 after the literal pair, 3 after c, 4 after d.
struct Enforcement {
  int variable = 0;
  int boundary = 0;
  Vertex first = 0;
  int count = 0;

  bool operator==(const Enforcement&) const = default;
};

struct GadgetLayout {
  CnfFormula formula;
  int k = 0;
  std::vector<VariableGadget> variables;
  std::vector<Vertex> clauses;
  std::vector<Enforcement> enforcement;
  Vertex isolated_first = 0;
  int isolated_count = 0;

  bool operator==(const GadgetLayout&) const = default;
};

// Clauses are normalized: duplicate literals dropped. Throws InputError on
// empty or oversized clauses, out-of-range literals and tautologies.
std::pair<Instance, GadgetLayout> sat_to_threshold_editing(const CnfFormula& phi);

EditSet assignment_to_solution(const GadgetLayout& layout, const Assignment& alpha);

Assignment extract_assignment(const GadgetLayout& layout, const EditSet& f);

Instance split_te_to_bipartite_chain(const Graph& g, const SplitPartition& part, int k);

struct Sides {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
};

// Both results keep the input ids; new vertices are appended.
Instance bipartite_chain_to_chain(const Graph& g, const Sides& sides, int k);

Instance bipartite_chain_to_cobipartite_chordal(const Graph& g, const Sides& sides, int k);

Instance cobipartite_to_chordal(const Graph& g, const Sides& sides, int k);

// Closed form of the vertex count produced by cobipartite_to_chordal.
long long cobipartite_to_chordal_order(int n, int k);

// Bipartition by 2-colouring (first vertex of each component on side a).
std::optional<Sides> bipartition_of(const Graph& g);
// Two cliques covering V, via a 2-colouring of the complement.
std::optional<Sides> cobipartition_of(const Graph& g);

}  // namespace tcedit

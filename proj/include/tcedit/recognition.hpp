#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tcedit/graph.hpp"

namespace tcedit {

struct Level {
  std::vector<Vertex> clique;       // C_i
  std::vector<Vertex> independent;  // I_i
};

// Ordered levels (C_1, I_1), ..., (C_t, I_t). A clique vertex of level i is
// adjacent to an independent vertex of level j exactly when j >= i.
struct ThresholdPartition {
  std::vector<Level> levels;
  std::optional<int> transfer_level;

  std::vector<int> level_of(int n) const;  // -1 for vertices not covered
  int vertex_count() const;
};

struct SplitPartition {
  std::vector<Vertex> clique;
  std::vector<Vertex> independent;
};

enum class ObstructionKind { C4, P4, TwoK2, C3, C5 };
std::string to_string(ObstructionKind k);

struct Obstruction {
  std::vector<Vertex> vertices;
  ObstructionKind kind = ObstructionKind::P4;
};

enum class Family { Threshold, Chain };

struct ThresholdResult {
  bool yes = false;
  ThresholdPartition partition;  // valid when yes
  Obstruction obstruction;       // valid when !yes
};

struct ChainResult {
  bool yes = false;
  std::vector<Vertex> side_a;    // valid when yes; side A plays the clique role
  std::vector<Vertex> side_b;
  ThresholdPartition partition;  // levels over (A, B)
  Obstruction obstruction;       // valid when !yes
};

struct ChordalResult {
  bool yes = false;
  std::vector<Vertex> cycle;  // chordless, length >= 4, when !yes
};

ThresholdResult is_threshold(const Graph& g);
ChainResult is_chain(const Graph& g);

std::optional<Obstruction> find_obstruction(const Graph& g, Family family);
// Exhaustive subset scan in lexicographic order, smaller subsets first.
std::optional<Obstruction> find_obstruction_naive(const Graph& g, Family family);
// Visits induced obstructions in naive-scan order until visit returns true.
void for_each_obstruction(const Graph& g, Family family,
                          const std::function<bool(const Obstruction&)>& visit);
// Every induced obstruction, in the same order as the naive scan.
std::vector<Obstruction> all_obstructions(const Graph& g, Family family);
// Kind of the graph induced by vs if it is an obstruction of the family.
std::optional<ObstructionKind> classify_obstruction(const Graph& g, const std::vector<Vertex>& vs,
                                                    Family family);
// Same test for a labelled graph on size <= 5 vertices: pair (i, j), i < j,
// is an edge iff bit j(j-1)/2 + i of mask is set.
std::optional<ObstructionKind> classify_pattern(int size, unsigned mask, Family family);

std::optional<SplitPartition> compute_split_partition(const Graph& g);
ChordalResult is_chordal(const Graph& g);

// Empty string when the partition is valid for g, otherwise a description of
// the first violated condition. Chain decompositions are checked against
// complete_side(g, side_a).
std::string validate_partition(const Graph& g, const ThresholdPartition& part);

// Graph obtained from the adjacency law of the partition.
Graph realize(const ThresholdPartition& part, int n);

// Graph with all pairs inside `side` added.
Graph complete_side(const Graph& g, const std::vector<Vertex>& side);

}  // namespace tcedit

#pragma once

#include <optional>
#include <vector>

#include "tcedit/graph.hpp"
#include "tcedit/recognition.hpp"

namespace tcedit {

struct Modulator {
  std::vector<Vertex> vertices;  // sorted
  Family family = Family::Threshold;
  std::vector<Obstruction> packing;  // obstructions whose vertices were added
};

struct ModulatorResult {
  bool no_instance = false;
  Modulator modulator;     // valid when !no_instance
  Obstruction witness;     // an obstruction of the input when no_instance
};

enum class LevelLabel { Important, Outlying, Regular };

struct Strip {
  int first = 0;  // level indices, inclusive
  int last = 0;
  int size = 0;
  bool large = false;
  std::vector<Vertex> central;  // sorted
};

struct LevelClassification {
  std::vector<LevelLabel> labels;
  std::vector<Strip> strips;
  int f = 0;  // last outlying level from the bottom
  int r = 0;  // first outlying level from the top
};

// Modulator size limit: 4k for threshold, 5k for chain.
int modulator_limit(Family family, int k);

// Vertex bounds for kernels.
long long threshold_kernel_bound(int k);  // 336k^2 + 388k + 92
long long chain_kernel_bound(int k);      // 826k^2 + 865k + 158

// One application of the twin rule: a vertex to remove, if any.
std::optional<Vertex> twin_rule_candidate(const Graph& g, int k);

// Twin rule applied until no twin class exceeds 2k+2.
InducedSubgraph apply_twin_rule(const Graph& g, int k);

ModulatorResult build_modulator(const Graph& g, int k, Family family);

// part partitions G - X, using vertex ids of g.
LevelClassification classify_decomposition(const Graph& g, const Modulator& x,
                                           const ThresholdPartition& part, int k);

struct IrrelevantVertexOutcome {
  bool no_instance = false;
  Obstruction witness;            // when no_instance
  std::optional<Vertex> removed;  // vertex of g removed by the rule
};

IrrelevantVertexOutcome apply_irrelevant_vertex_rule(const Graph& g, int k, Family family);

struct Kernel {
  Instance instance;
  std::vector<Vertex> original;  // kernel vertex -> input vertex
  bool no_instance = false;
};

// Threshold and chain targets only.
Kernel kernelize(const Instance& inst);

}  // namespace tcedit

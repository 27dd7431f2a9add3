#pragma once

#include <cstdint>

#include "tcedit/graph.hpp"

namespace tcedit {

struct PlantedInstance {
  Graph graph;
  int flips = 0;  // the planted distance is at most this
};

// A random threshold (or chain) graph from a shuffled creation sequence with
// `flips` distinct random vertex pairs toggled. Deterministic per seed.
PlantedInstance gen_instance(std::uint64_t seed, int n, int flips, Target target);

}  // namespace tcedit

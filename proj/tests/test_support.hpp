#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "tcedit/generator.hpp"
#include "tcedit/graph.hpp"

namespace tcedit::testing {

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

// Alternates planted near-members of the target class with plain random
// graphs so that both answers are exercised.
inline Graph mixed_graph(std::mt19937_64& rng, int n, Target target, int max_flips) {
  if (rng() % 2 == 0) {
    const int pairs = n * (n - 1) / 2;
    const int flips = std::min(pairs, uniform(rng, 0, max_flips));
    return gen_instance(rng(), n, flips, target).graph;
  }
  return random_graph(rng, n, 0.2 + 0.6 * std::uniform_real_distribution<double>(0, 1)(rng));
}

inline std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
  return out;
}

// Calls visit on every subset of pairs of size <= k, smallest first, until it
// returns true.
template <class Visit>
bool for_each_pair_subset(const std::vector<Edge>& pairs, int k, Visit&& visit) {
  std::vector<int> idx;
  std::vector<Edge> chosen;
  for (int size = 0; size <= k && size <= static_cast<int>(pairs.size()); ++size) {
    idx.resize(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      chosen.clear();
      for (int i : idx) chosen.push_back(pairs[i]);
      if (visit(chosen)) return true;
      int i = size - 1;
      while (i >= 0 && idx[i] == static_cast<int>(pairs.size()) - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

inline Graph toggled(const Graph& g, const std::vector<Edge>& pairs) {
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : pairs) {
    auto it = std::find(edges.begin(), edges.end(), e);
    if (it != edges.end())
      edges.erase(it);
    else
      edges.push_back(e);
  }
  return Graph(g.order(), edges);
}

}  // namespace tcedit::testing

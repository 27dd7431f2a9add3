#include "tcedit/generator.hpp"

#include <limits>
#include <numeric>
#include <random>
#include <set>

namespace tcedit {

namespace {

// Uniform value in [0, bound) by rejection; independent of the standard
// library's distribution implementations so seeds reproduce everywhere.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

}  // namespace

PlantedInstance gen_instance(std::uint64_t seed, int n, int flips, Target target) {
  if (target == Target::Chordal) throw ContractError("generator supports threshold and chain targets");
  if (n < 0) throw ContractError("negative vertex count");
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  if (flips < 0 || flips > pairs) throw ContractError("flip count out of range");
  std::mt19937_64 rng(seed);

  std::vector<char> universal(n);
  for (auto& u : universal) u = static_cast<char>(below(rng, 2));
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int j = n - 1; j > 0; --j) std::swap(perm[j], perm[below(rng, j + 1)]);

  std::set<Edge> edges;
  for (int j = 0; j < n; ++j) {
    if (!universal[j]) continue;
    for (int q = 0; q < j; ++q) {
      // Chain graphs drop the clique formed by the universal additions.
      if (target == Target::Chain && universal[q]) continue;
      edges.emplace(perm[j], perm[q]);
    }
  }

  std::set<Edge> chosen;
  while (static_cast<int>(chosen.size()) < flips) {
    const Vertex u = static_cast<Vertex>(below(rng, n));
    const Vertex v = static_cast<Vertex>(below(rng, n));
    if (u != v) chosen.emplace(u, v);
  }
  for (const Edge& e : chosen)
    if (!edges.erase(e)) edges.insert(e);
  std::vector<Edge> list(edges.begin(), edges.end());
  return {Graph(n, list), flips};
}

}  // namespace tcedit

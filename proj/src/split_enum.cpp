#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "tcedit/solver.hpp"

namespace tcedit {

int cheap_radius(int k) {
  if (k <= 0) return 0;
  int r = static_cast<int>(std::floor(2.0 * std::sqrt(static_cast<double>(k))));
  while (static_cast<long long>(r) * r < 4LL * k) ++r;
  while (r > 0 && static_cast<long long>(r - 1) * (r - 1) >= 4LL * k) --r;
  return r;
}

int max_expensive(int k) {
  const int r = cheap_radius(k);
  // Each expensive vertex carries at least r+1 of the 2k edit endpoints.
  return std::min(r, (2 * k) / (r + 1));
}

// Every partition whose forced cost is within k, by a pruned DFS in degree
// order. Forced cost is exactly the least number of edits giving a split graph
// with that partition, so the output is complete.
std::vector<SplitPartition> enumerate_split_partitions(const Graph& g, int k) {
  const int n = g.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  std::vector<SplitPartition> out;
  std::vector<Vertex> clique, independent;
  for (int sc = 0; sc <= n; ++sc) {
    const int si = n - sc;
    std::function<void(int, int)> dfs = [&](int pos, int cost) {
      if (pos == n) {
        SplitPartition p{clique, independent};
        std::sort(p.clique.begin(), p.clique.end());
        std::sort(p.independent.begin(), p.independent.end());
        out.push_back(std::move(p));
        return;
      }
      const Vertex v = order[pos];
      if (static_cast<int>(clique.size()) < sc) {
        int add = 0;
        for (Vertex c : clique) add += !g.adjacent(v, c);
        if (cost + add <= k) {
          clique.push_back(v);
          dfs(pos + 1, cost + add);
          clique.pop_back();
        }
      }
      if (static_cast<int>(independent.size()) < si) {
        int add = 0;
        for (Vertex x : independent) add += g.adjacent(v, x);
        if (cost + add <= k) {
          independent.push_back(v);
          dfs(pos + 1, cost + add);
          independent.pop_back();
        }
      }
    };
    dfs(0, 0);
  }
  return out;
}

namespace {

Bipartition canonical(std::vector<Vertex> a, std::vector<Vertex> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a.empty() || (!b.empty() && b.front() < a.front())) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

// Calls visit(set) for every symmetric-difference patch of base by at most
// radius elements of universe.
void for_each_patch(const std::vector<char>& base, const std::vector<Vertex>& universe, int radius,
                    const std::function<void(const std::vector<char>&, int)>& visit) {
  std::vector<char> current = base;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int used) {
    visit(current, used);
    if (used == radius) return;
    for (std::size_t i = start; i < universe.size(); ++i) {
      current[universe[i]] ^= 1;
      rec(i + 1, used + 1);
      current[universe[i]] ^= 1;
    }
  };
  rec(0, 0);
}

// All weak orderings of m items as level numbers 0..m-1.
void for_each_levelling(int m, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> level(m, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      visit(level);
      return;
    }
    for (int l = 0; l < std::max(m, 1); ++l) {
      level[i] = l;
      rec(i + 1);
    }
  };
  rec(0);
}

// Both sides of the solution are large: guess the extreme cheap vertices,
// their neighbourhoods and the expensive extremes, then place the rest.
void large_side_bipartitions(const Graph& g, int k, std::set<Bipartition>& out) {
  const int n = g.order();
  const int radius = std::min(cheap_radius(k), k);
  const int emax = max_expensive(k);
  std::vector<char> base(n);
  for (Vertex va = 0; va < n; ++va)
    for (Vertex vb = 0; vb < n; ++vb) {
      if (va == vb) continue;
      std::vector<Vertex> universe_a, universe_b;
      for (Vertex w = 0; w < n; ++w) {
        if (w != va) universe_a.push_back(w);
        if (w != vb) universe_b.push_back(w);
      }
      std::fill(base.begin(), base.end(), 0);
      for (Vertex w : g.neighbors(va)) base[w] = 1;
      for_each_patch(base, universe_a, radius, [&](const std::vector<char>& na, int used_a) {
        if (!na[vb]) return;
        std::vector<char> base_b(n, 0);
        for (Vertex w : g.neighbors(vb)) base_b[w] = 1;
        for_each_patch(base_b, universe_b, std::min(radius, k + 1 - used_a),
                       [&](const std::vector<char>& nb, int) {
                         if (!nb[va]) return;
                         std::vector<Vertex> side_a, side_b, z;
                         for (Vertex w = 0; w < n; ++w) {
                           if (na[w] && nb[w]) return;
                           if (nb[w]) side_a.push_back(w);
                           else if (na[w]) side_b.push_back(w);
                           else z.push_back(w);
                         }
                         std::vector<Vertex> cand_ax, cand_bx;
                         for (Vertex w : side_a)
                           if (w != va) cand_ax.push_back(w);
                         for (Vertex w : side_b)
                           if (w != vb) cand_bx.push_back(w);
                         // Expensive extremes and their level orders.
                         std::function<void(std::size_t, std::vector<Vertex>&, std::size_t, std::vector<Vertex>&)>
                             pick;
                         auto place = [&](const std::vector<Vertex>& ax, const std::vector<Vertex>& bx) {
                           for_each_levelling(static_cast<int>(ax.size()), [&](const std::vector<int>& lax) {
                             for_each_levelling(static_cast<int>(bx.size()), [&](const std::vector<int>& lbx) {
                               std::vector<Vertex> za, zb;
                               for (Vertex v : z) {
                                 int in_a_intra = 0, in_b_intra = 0, to_a = 0, to_b = 0;
                                 for (Vertex w : side_a) to_a += g.adjacent(v, w);
                                 for (Vertex w : side_b) to_b += g.adjacent(v, w);
                                 in_a_intra = to_a;
                                 in_b_intra = to_b;
                                 // In A above v_B: adjacent to exactly the B_X at level >= j.
                                 int best_a = 1 << 30;
                                 for (int j = 0; j <= static_cast<int>(bx.size()); ++j) {
                                   int cost = in_a_intra + to_b;
                                   for (std::size_t q = 0; q < bx.size(); ++q) {
                                     const bool want = lbx[q] >= j;
                                     const bool has = g.adjacent(v, bx[q]);
                                     if (want && has) --cost;
                                     if (want && !has) ++cost;
                                   }
                                   best_a = std::min(best_a, cost);
                                 }
                                 int best_b = 1 << 30;
                                 for (int j = -1; j < static_cast<int>(ax.size()); ++j) {
                                   int cost = in_b_intra + to_a;
                                   for (std::size_t q = 0; q < ax.size(); ++q) {
                                     const bool want = lax[q] <= j;
                                     const bool has = g.adjacent(v, ax[q]);
                                     if (want && has) --cost;
                                     if (want && !has) ++cost;
                                   }
                                   best_b = std::min(best_b, cost);
                                 }
                                 (best_a <= best_b ? za : zb).push_back(v);
                               }
                               std::vector<Vertex> a = side_a, b = side_b;
                               a.insert(a.end(), za.begin(), za.end());
                               b.insert(b.end(), zb.begin(), zb.end());
                               Bipartition bp = canonical(a, b);
                               if (intra_edges(g, bp) <= k) out.insert(bp);
                             });
                           });
                         };
                         pick = [&](std::size_t ia, std::vector<Vertex>& ax, std::size_t ib, std::vector<Vertex>& bx) {
                           if (ia < cand_ax.size() && static_cast<int>(ax.size() + bx.size()) < emax) {
                             ax.push_back(cand_ax[ia]);
                             pick(ia + 1, ax, ib, bx);
                             ax.pop_back();
                             pick(ia + 1, ax, ib, bx);
                             return;
                           }
                           if (ia < cand_ax.size()) {
                             pick(cand_ax.size(), ax, ib, bx);
                             return;
                           }
                           if (ib < cand_bx.size() && static_cast<int>(ax.size() + bx.size()) < emax) {
                             bx.push_back(cand_bx[ib]);
                             pick(ia, ax, ib + 1, bx);
                             bx.pop_back();
                             pick(ia, ax, ib + 1, bx);
                             return;
                           }
                           place(ax, bx);
                         };
                         std::vector<Vertex> ax, bx;
                         pick(0, ax, 0, bx);
                       });
      });
    }
}

}  // namespace

std::vector<Bipartition> enumerate_bipartitions(const Graph& g, int k) {
  const int n = g.order();
  const double direct_limit = 5.0 * std::sqrt(static_cast<double>(k));
  std::set<Bipartition> found;
  std::vector<Vertex> a, b;
  std::function<void(int, int)> dfs = [&](int v, int cost) {
    if (v == n) {
      if (std::min(a.size(), b.size()) <= direct_limit) found.insert(canonical(a, b));
      return;
    }
    for (int side = 0; side < 2; ++side) {
      auto& mine = side == 0 ? a : b;
      if (v == 0 && side == 1) continue;
      int add = 0;
      for (Vertex w : mine) add += g.adjacent(v, w);
      if (cost + add > k) continue;
      mine.push_back(v);
      dfs(v + 1, cost + add);
      mine.pop_back();
    }
  };
  if (n == 0) return {Bipartition{}};
  dfs(0, 0);
  if (n > 2 * direct_limit) large_side_bipartitions(g, k, found);
  return {found.begin(), found.end()};
}

}  // namespace tcedit

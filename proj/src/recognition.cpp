#include "tcedit/recognition.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

namespace tcedit {

std::string to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::C4: return "C4";
    case ObstructionKind::P4: return "P4";
    case ObstructionKind::TwoK2: return "2K2";
    case ObstructionKind::C3: return "C3";
    case ObstructionKind::C5: return "C5";
  }
  return "?";
}

std::vector<int> ThresholdPartition::level_of(int n) const {
  std::vector<int> out(n, -1);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (Vertex v : levels[i].clique) out[v] = static_cast<int>(i);
    for (Vertex v : levels[i].independent) out[v] = static_cast<int>(i);
  }
  return out;
}

int ThresholdPartition::vertex_count() const {
  int total = 0;
  for (const auto& l : levels) total += static_cast<int>(l.clique.size() + l.independent.size());
  return total;
}

namespace {

// Does N(u) \ N[v] contain a vertex? Returns it, or -1.
Vertex private_neighbor(const Graph& g, Vertex u, Vertex v) {
  auto ru = g.row(u);
  auto rv = g.row(v);
  for (std::size_t w = 0; w < ru.size(); ++w) {
    std::uint64_t bits = ru[w] & ~rv[w];
    if (static_cast<std::size_t>(v >> 6) == w) bits &= ~(std::uint64_t{1} << (v & 63));
    if (bits) return static_cast<Vertex>(w * 64 + __builtin_ctzll(bits));
  }
  return -1;
}

Obstruction make_obstruction(const Graph& g, std::vector<Vertex> vs, Family family) {
  std::sort(vs.begin(), vs.end());
  auto kind = classify_obstruction(g, vs, family);
  if (!kind) throw ContractError("internal: witness does not induce an obstruction");
  return {std::move(vs), *kind};
}

std::optional<Obstruction> threshold_obstruction_fast(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Vertex u = order[i], v = order[j];
      Vertex up = private_neighbor(g, u, v);
      if (up < 0) continue;
      Vertex vp = private_neighbor(g, v, u);
      if (vp < 0) continue;
      return make_obstruction(g, {u, v, up, vp}, Family::Threshold);
    }
  }
  return std::nullopt;
}

// Shortest odd cycle, as a vertex sequence; empty if g is bipartite.
std::vector<Vertex> shortest_odd_cycle(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> best;
  std::vector<int> dist(n), parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      if (!best.empty() && 2 * dist[x] + 1 >= static_cast<int>(best.size())) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (dist[y] == dist[x] && x < y) {
          std::vector<Vertex> left{x}, right{y};
          while (left.back() != right.back()) {
            left.push_back(parent[left.back()]);
            right.push_back(parent[right.back()]);
          }
          right.pop_back();
          std::reverse(right.begin(), right.end());
          left.insert(left.end(), right.begin(), right.end());
          if (best.empty() || left.size() < best.size()) best = left;
        }
      }
    }
  }
  return best;
}

// 2-colouring, colour 0 given to the smallest vertex of each component.
// Returns false on an odd cycle.
bool two_colour(const Graph& g, std::vector<int>& colour) {
  const int n = g.order();
  colour.assign(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<Obstruction> odd_cycle_obstruction(const Graph& g) {
  auto cycle = shortest_odd_cycle(g);
  if (cycle.size() == 3 || cycle.size() == 5) return make_obstruction(g, cycle, Family::Chain);
  return make_obstruction(g, {cycle[0], cycle[1], cycle[3], cycle[4]}, Family::Chain);
}

// Nesting check on side A of a bipartite graph; a violation gives a 2K2.
std::optional<Obstruction> one_sided_violation(const Graph& g, std::vector<Vertex> side) {
  std::stable_sort(side.begin(), side.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  for (std::size_t i = 0; i + 1 < side.size(); ++i) {
    Vertex big = side[i], small = side[i + 1];
    Vertex y = private_neighbor(g, small, big);
    if (y < 0) continue;
    Vertex x = private_neighbor(g, big, small);
    return make_obstruction(g, {big, x, small, y}, Family::Chain);
  }
  return std::nullopt;
}

template <typename Visit>
bool for_each_subset(int n, int size, Visit&& visit) {
  std::vector<Vertex> pick(size);
  std::function<bool(int, int)> rec = [&](int pos, int start) -> bool {
    if (pos == size) return visit(pick);
    for (int v = start; v <= n - (size - pos); ++v) {
      pick[pos] = v;
      if (rec(pos + 1, v + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

template <typename Visit>
void scan_obstructions(const Graph& g, Family family, Visit&& visit) {
  std::vector<int> sizes = family == Family::Threshold ? std::vector<int>{4} : std::vector<int>{3, 4, 5};
  for (int size : sizes) {
    bool stop = for_each_subset(g.order(), size, [&](const std::vector<Vertex>& vs) {
      auto kind = classify_obstruction(g, vs, family);
      return kind ? visit(Obstruction{vs, *kind}) : false;
    });
    if (stop) return;
  }
}

}  // namespace

std::optional<ObstructionKind> classify_obstruction(const Graph& g, const std::vector<Vertex>& vs,
                                                    Family family) {
  const std::size_t s = vs.size();
  int edges = 0;
  std::vector<int> deg(s, 0);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (g.adjacent(vs[i], vs[j])) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
  std::sort(deg.begin(), deg.end());
  if (s == 3) {
    if (family == Family::Chain && edges == 3) return ObstructionKind::C3;
  } else if (s == 4) {
    if (edges == 2 && deg == std::vector<int>{1, 1, 1, 1}) return ObstructionKind::TwoK2;
    if (family == Family::Threshold) {
      if (edges == 3 && deg == std::vector<int>{1, 1, 2, 2}) return ObstructionKind::P4;
      if (edges == 4 && deg == std::vector<int>{2, 2, 2, 2}) return ObstructionKind::C4;
    }
  } else if (s == 5) {
    if (family == Family::Chain && edges == 5 && deg == std::vector<int>{2, 2, 2, 2, 2})
      return ObstructionKind::C5;
  }
  return std::nullopt;
}

std::optional<Obstruction> find_obstruction(const Graph& g, Family family) {
  if (family == Family::Threshold) return threshold_obstruction_fast(g);
  std::vector<int> colour;
  if (!two_colour(g, colour)) return odd_cycle_obstruction(g);
  std::vector<Vertex> side;
  for (Vertex v = 0; v < g.order(); ++v)
    if (colour[v] == 0) side.push_back(v);
  return one_sided_violation(g, side);
}

namespace {

constexpr int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

struct PatternTables {
  // kind[size][mask]: -1 or an ObstructionKind, per family.
  std::vector<int> kind[2][6];
  // prefix[size][p][mask]: the first p vertices of some obstruction of this
  // size can induce mask.
  std::vector<char> prefix[2][6][6];
};

const PatternTables& pattern_tables() {
  static const PatternTables tables = [] {
    PatternTables t;
    for (int f = 0; f < 2; ++f) {
      const Family family = f == 0 ? Family::Threshold : Family::Chain;
      for (int size = 0; size <= 5; ++size) {
        const int bits = size * (size - 1) / 2;
        t.kind[f][size].assign(1U << bits, -1);
        for (int p = 0; p <= size; ++p) t.prefix[f][size][p].assign(1U << (p * (p - 1) / 2), 0);
        std::vector<Vertex> local(size);
        std::iota(local.begin(), local.end(), 0);
        for (unsigned mask = 0; mask < (1U << bits); ++mask) {
          std::vector<Edge> edges;
          for (int j = 1; j < size; ++j)
            for (int i = 0; i < j; ++i)
              if (mask >> pair_bit(i, j) & 1U) edges.emplace_back(i, j);
          const auto kind = classify_obstruction(Graph(size, edges), local, family);
          if (!kind) continue;
          t.kind[f][size][mask] = static_cast<int>(*kind);
          for (int p = 0; p <= size; ++p) t.prefix[f][size][p][mask & ((1U << (p * (p - 1) / 2)) - 1)] = 1;
        }
      }
    }
    return t;
  }();
  return tables;
}

// Lexicographic scan over sorted vertex tuples of one size, extending only
// prefixes that can still grow into an obstruction.
bool scan_obstructions_of_size(const Graph& g, Family family, int size,
                               const std::function<bool(const Obstruction&)>& visit) {
  const PatternTables& t = pattern_tables();
  const int f = family == Family::Threshold ? 0 : 1;
  const int n = g.order();
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<Vertex> pick(size);
  std::vector<std::uint64_t> cand(words * size);

  std::function<bool(int, unsigned)> rec = [&](int p, unsigned mask) -> bool {
    if (p == size) return visit(Obstruction{pick, static_cast<ObstructionKind>(t.kind[f][size][mask])});
    const Vertex start = p == 0 ? 0 : pick[p - 1] + 1;
    if (start >= n) return false;
    std::uint64_t* c = cand.data() + words * p;
    std::fill(c, c + words, 0);
    const auto& allowed = t.prefix[f][size][p + 1];
    for (unsigned pattern = 0; pattern < (1U << p); ++pattern) {
      if (!allowed[mask | pattern << pair_bit(0, p)]) continue;
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = ~std::uint64_t{0};
        for (int i = 0; i < p; ++i) {
          const std::uint64_t r = g.row(pick[i])[w];
          bits &= (pattern >> i & 1U) ? r : ~r;
        }
        c[w] |= bits;
      }
    }
    for (std::size_t w = static_cast<std::size_t>(start) >> 6; w < words; ++w) {
      std::uint64_t bits = c[w];
      if (w == static_cast<std::size_t>(start) >> 6) bits &= ~std::uint64_t{0} << (start & 63);
      for (; bits; bits &= bits - 1) {
        const Vertex v = static_cast<Vertex>(w * 64 + __builtin_ctzll(bits));
        if (v >= n) return false;
        unsigned next = mask;
        for (int i = 0; i < p; ++i)
          if (g.adjacent(pick[i], v)) next |= 1U << pair_bit(i, p);
        pick[p] = v;
        if (rec(p + 1, next)) return true;
      }
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace

std::optional<ObstructionKind> classify_pattern(int size, unsigned mask, Family family) {
  if (size < 0 || size > 5) throw ContractError("pattern size must be at most 5");
  const auto& table = pattern_tables().kind[family == Family::Threshold ? 0 : 1][size];
  if (mask >= table.size()) throw ContractError("pattern mask out of range");
  if (table[mask] < 0) return std::nullopt;
  return static_cast<ObstructionKind>(table[mask]);
}

void for_each_obstruction(const Graph& g, Family family,
                          const std::function<bool(const Obstruction&)>& visit) {
  const std::vector<int> sizes = family == Family::Threshold ? std::vector<int>{4} : std::vector<int>{3, 4, 5};
  for (int size : sizes)
    if (scan_obstructions_of_size(g, family, size, visit)) return;
}

std::optional<Obstruction> find_obstruction_naive(const Graph& g, Family family) {
  std::optional<Obstruction> found;
  scan_obstructions(g, family, [&](Obstruction o) {
    found = std::move(o);
    return true;
  });
  return found;
}

std::vector<Obstruction> all_obstructions(const Graph& g, Family family) {
  std::vector<Obstruction> out;
  scan_obstructions(g, family, [&](Obstruction o) {
    out.push_back(std::move(o));
    return false;
  });
  return out;
}

ThresholdResult is_threshold(const Graph& g) {
  ThresholdResult result;
  const int n = g.order();
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  int remaining = n;
  auto& levels = result.partition.levels;

  auto remove_group = [&](const std::vector<Vertex>& group) {
    for (Vertex v : group) alive[v] = 0;
    for (Vertex v : group)
      for (Vertex w : g.neighbors(v))
        if (alive[w]) --deg[w];
    remaining -= static_cast<int>(group.size());
  };

  while (remaining > 0) {
    std::vector<Vertex> universal, isolated;
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      if (deg[v] == remaining - 1) universal.push_back(v);
      if (deg[v] == 0) isolated.push_back(v);
    }
    if (!universal.empty()) {
      levels.push_back({universal, {}});
      remove_group(universal);
    } else if (!isolated.empty()) {
      if (levels.empty() || !levels.back().independent.empty()) levels.push_back({});
      levels.back().independent = isolated;
      remove_group(isolated);
    } else {
      result.partition.levels.clear();
      result.obstruction = *threshold_obstruction_fast(g);
      return result;
    }
  }
  result.yes = true;
  return result;
}

ChainResult is_chain(const Graph& g) {
  ChainResult result;
  const int n = g.order();
  std::vector<int> colour;
  if (!two_colour(g, colour)) {
    result.obstruction = *odd_cycle_obstruction(g);
    return result;
  }
  for (Vertex v = 0; v < n; ++v) (colour[v] == 0 ? result.side_a : result.side_b).push_back(v);
  if (auto bad = one_sided_violation(g, result.side_a)) {
    result.obstruction = *bad;
    result.side_a.clear();
    result.side_b.clear();
    return result;
  }

  // Group side A by neighbourhood, largest first; the groups are nested.
  std::map<std::vector<Vertex>, std::vector<Vertex>, std::function<bool(const std::vector<Vertex>&,
                                                                        const std::vector<Vertex>&)>>
      groups([](const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
        return x.size() != y.size() ? x.size() > y.size() : x < y;
      });
  for (Vertex a : result.side_a) {
    auto nb = g.neighbors(a);
    groups[std::vector<Vertex>(nb.begin(), nb.end())].push_back(a);
  }
  std::vector<std::vector<Vertex>> a_groups;
  for (auto& [key, members] : groups) a_groups.push_back(members);

  // A vertex b of side B sees exactly the first p groups.
  std::vector<std::vector<Vertex>> by_prefix(a_groups.size() + 1);
  for (Vertex b : result.side_b) {
    std::size_t p = 0;
    while (p < a_groups.size() && g.adjacent(a_groups[p].front(), b)) ++p;
    by_prefix[p].push_back(b);
  }
  auto& levels = result.partition.levels;
  if (!by_prefix[0].empty()) levels.push_back({{}, by_prefix[0]});
  for (std::size_t i = 0; i < a_groups.size(); ++i) levels.push_back({a_groups[i], by_prefix[i + 1]});
  result.yes = true;
  return result;
}

std::optional<SplitPartition> compute_split_partition(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (g.degree(order[i]) >= i) m = i + 1;
  long long head = 0, tail = 0;
  for (int i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[i]);
  if (head != static_cast<long long>(m) * (m - 1) + tail) return std::nullopt;
  SplitPartition part;
  part.clique.assign(order.begin(), order.begin() + m);
  part.independent.assign(order.begin() + m, order.end());
  std::sort(part.clique.begin(), part.clique.end());
  std::sort(part.independent.begin(), part.independent.end());
  return part;
}

namespace {

std::vector<Vertex> chordless_cycle_through(const Graph& g, Vertex v, Vertex p, Vertex w) {
  const int n = g.order();
  std::vector<int> parent(n, -2);
  std::vector<char> blocked(n, 0);
  blocked[v] = 1;
  for (Vertex x : g.neighbors(v))
    if (x != p && x != w) blocked[x] = 1;
  parent[p] = -1;
  std::deque<Vertex> queue{p};
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (x == w) break;
    for (Vertex y : g.neighbors(x)) {
      if (blocked[y] || parent[y] != -2) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (parent[w] == -2) return {};
  std::vector<Vertex> cycle{v};
  std::vector<Vertex> path;
  for (Vertex x = w; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

}  // namespace

ChordalResult is_chordal(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(n, 0), position(n, -1);
  std::vector<Vertex> visit;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (position[v] < 0 && (pick < 0 || weight[v] > weight[pick])) pick = v;
    position[pick] = step;
    visit.push_back(pick);
    for (Vertex w : g.neighbors(pick))
      if (position[w] < 0) ++weight[w];
  }

  ChordalResult result;
  result.yes = true;
  Vertex bad_v = -1, bad_p = -1, bad_w = -1;
  for (Vertex v : visit) {
    Vertex latest = -1;
    for (Vertex w : g.neighbors(v))
      if (position[w] < position[v] && (latest < 0 || position[w] > position[latest])) latest = w;
    if (latest < 0) continue;
    for (Vertex w : g.neighbors(v))
      if (position[w] < position[v] && w != latest && !g.adjacent(w, latest)) {
        result.yes = false;
        bad_v = v;
        bad_p = latest;
        bad_w = w;
        break;
      }
    if (!result.yes) break;
  }
  if (result.yes) return result;

  result.cycle = chordless_cycle_through(g, bad_v, bad_p, bad_w);
  for (Vertex v = 0; v < n && result.cycle.empty(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size() && result.cycle.empty(); ++i)
      for (std::size_t j = i + 1; j < nb.size() && result.cycle.empty(); ++j)
        if (!g.adjacent(nb[i], nb[j])) result.cycle = chordless_cycle_through(g, v, nb[i], nb[j]);
  }
  return result;
}

std::string validate_partition(const Graph& g, const ThresholdPartition& part) {
  const int n = g.order();
  const auto& levels = part.levels;
  const int t = static_cast<int>(levels.size());
  std::vector<int> level(n, -1);
  std::vector<char> in_clique(n, 0);
  for (int i = 0; i < t; ++i) {
    if (levels[i].clique.empty() && i != 0) return "empty clique fragment at interior level " + std::to_string(i);
    if (levels[i].independent.empty() && i != t - 1)
      return "empty independent fragment at interior level " + std::to_string(i);
    if (levels[i].clique.empty() && levels[i].independent.empty()) return "empty level";
    for (int side = 0; side < 2; ++side)
      for (Vertex v : side == 0 ? levels[i].clique : levels[i].independent) {
        if (v < 0 || v >= n) return "vertex out of range";
        if (level[v] >= 0) return "vertex " + std::to_string(v) + " appears twice";
        level[v] = i;
        in_clique[v] = side == 0;
      }
  }
  for (Vertex v = 0; v < n; ++v)
    if (level[v] < 0) return "vertex " + std::to_string(v) + " not covered";
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      bool expected;
      if (in_clique[u] && in_clique[v]) expected = true;
      else if (!in_clique[u] && !in_clique[v]) expected = false;
      else if (in_clique[u]) expected = level[v] >= level[u];
      else expected = level[u] >= level[v];
      if (expected != g.adjacent(u, v))
        return "adjacency law violated at {" + std::to_string(u) + "," + std::to_string(v) + "}";
    }
  return {};
}

Graph realize(const ThresholdPartition& part, int n) {
  std::vector<Edge> edges;
  std::vector<Vertex> clique_so_far;
  for (const auto& level : part.levels) {
    for (Vertex c : level.clique) {
      for (Vertex d : clique_so_far) edges.emplace_back(c, d);
      clique_so_far.push_back(c);
    }
    for (Vertex x : level.independent)
      for (Vertex c : clique_so_far) edges.emplace_back(c, x);
  }
  return Graph(n, edges);
}

Graph complete_side(const Graph& g, const std::vector<Vertex>& side) {
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i < side.size(); ++i)
    for (std::size_t j = i + 1; j < side.size(); ++j)
      if (!g.adjacent(side[i], side[j])) edges.emplace_back(side[i], side[j]);
  return Graph(g.order(), edges);
}

}  // namespace tcedit

#include "tcedit/kernel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tcedit {

int modulator_limit(Family family, int k) { return family == Family::Threshold ? 4 * k : 5 * k; }

long long threshold_kernel_bound(int k) {
  const long long kk = k;
  return 336 * kk * kk + 388 * kk + 92;
}

long long chain_kernel_bound(int k) {
  const long long kk = k;
  return 826 * kk * kk + 865 * kk + 158;
}

std::optional<Vertex> twin_rule_candidate(const Graph& g, int k) {
  const auto classes = twin_classes(g);
  for (const auto& members : classes.members)
    if (static_cast<long long>(members.size()) > 2LL * k + 2) return members.back();
  return std::nullopt;
}

namespace {

std::vector<Vertex> all_but(int n, Vertex skip) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n; ++v)
    if (v != skip) keep.push_back(v);
  return keep;
}

InducedSubgraph identity(const Graph& g) {
  std::vector<Vertex> ids(g.order());
  std::iota(ids.begin(), ids.end(), 0);
  return {g, ids};
}

// Compose: sub is an induced subgraph of base.graph.
InducedSubgraph compose(const InducedSubgraph& base, InducedSubgraph sub) {
  for (Vertex& v : sub.original) v = base.original[v];
  return sub;
}

// Can some edit set inside [s]^2 turn the obstruction on vs into a
// non-obstruction of the family?
bool destroyable(const Graph& g, const std::vector<Vertex>& vs, const std::vector<char>& in_x,
                 Family family) {
  const int size = static_cast<int>(vs.size());
  unsigned mask = 0, free_pairs = 0;
  for (int j = 1; j < size; ++j)
    for (int i = 0; i < j; ++i) {
      const unsigned bit = 1U << (j * (j - 1) / 2 + i);
      if (g.adjacent(vs[i], vs[j])) mask |= bit;
      if (in_x[vs[i]] && in_x[vs[j]]) free_pairs |= bit;
    }
  for (unsigned sub = free_pairs; sub; sub = (sub - 1) & free_pairs)
    if (!classify_pattern(size, mask ^ sub, family)) return true;
  return false;
}

std::vector<Vertex> neighbourhood_in(const Graph& g, Vertex v, const std::vector<Vertex>& x) {
  std::vector<Vertex> out;
  for (Vertex w : x)
    if (g.adjacent(v, w)) out.push_back(w);
  return out;
}

}  // namespace

InducedSubgraph apply_twin_rule(const Graph& g, int k) {
  InducedSubgraph current = identity(g);
  while (auto v = twin_rule_candidate(current.graph, k)) {
    auto keep = all_but(current.graph.order(), *v);
    current = compose(current, induced_subgraph(current.graph, keep));
  }
  return current;
}

ModulatorResult build_modulator(const Graph& g, int k, Family family) {
  ModulatorResult result;
  result.modulator.family = family;
  std::vector<char> in_x(g.order(), 0);
  int x_size = 0;
  const int limit = modulator_limit(family, k);
  for_each_obstruction(g, family, [&](const Obstruction& w) {
    if (destroyable(g, w.vertices, in_x, family)) return false;
    for (Vertex v : w.vertices)
      if (!in_x[v]) {
        in_x[v] = 1;
        ++x_size;
      }
    result.modulator.packing.push_back(w);
    if (x_size > limit) {
      result.no_instance = true;
      result.witness = w;
      return true;
    }
    return false;
  });
  for (Vertex v = 0; v < g.order(); ++v)
    if (in_x[v]) result.modulator.vertices.push_back(v);
  return result;
}

LevelClassification classify_decomposition(const Graph& g, const Modulator& x,
                                           const ThresholdPartition& part, int k) {
  const auto& levels = part.levels;
  const int t = static_cast<int>(levels.size());
  const long long need = 2LL * k + 2;
  {
    std::vector<char> seen(g.order(), 0);
    for (Vertex v : x.vertices) seen[v] = 1;
    for (const auto& level : levels)
      for (const auto* side : {&level.clique, &level.independent})
        for (Vertex v : *side) {
          if (v < 0 || v >= g.order() || seen[v]) throw ContractError("partition does not partition V - X");
          seen[v] = 1;
        }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw ContractError("partition does not cover V - X");
  }

  LevelClassification out;
  std::vector<char> important(t, 0);
  // For each realized set Y and side, the lowest and highest level realizing it.
  std::map<std::vector<Vertex>, std::pair<int, int>> extremes[2];
  for (int i = 0; i < t; ++i)
    for (int side = 0; side < 2; ++side)
      for (Vertex v : side == 0 ? levels[i].clique : levels[i].independent) {
        auto key = neighbourhood_in(g, v, x.vertices);
        auto [it, fresh] = extremes[side].try_emplace(key, i, i);
        if (!fresh) {
          it->second.first = std::min(it->second.first, i);
          it->second.second = std::max(it->second.second, i);
        }
      }
  for (const auto& side : extremes)
    for (const auto& [key, range] : side) {
      important[range.first] = 1;
      important[range.second] = 1;
    }

  out.f = t - 1;
  long long acc = 0;
  for (int i = 0; i < t; ++i) {
    acc += static_cast<long long>(levels[i].clique.size());
    if (acc >= need) {
      out.f = i;
      break;
    }
  }
  out.r = 0;
  acc = 0;
  for (int i = t - 1; i >= 0; --i) {
    acc += static_cast<long long>(levels[i].independent.size());
    if (acc >= need) {
      out.r = i;
      break;
    }
  }

  out.labels.resize(t);
  for (int i = 0; i < t; ++i) {
    if (important[i]) out.labels[i] = LevelLabel::Important;
    else if (i <= out.f || i >= out.r) out.labels[i] = LevelLabel::Outlying;
    else out.labels[i] = LevelLabel::Regular;
  }

  for (int i = 0; i < t;) {
    if (out.labels[i] != LevelLabel::Regular) {
      ++i;
      continue;
    }
    Strip strip;
    strip.first = i;
    while (i < t && out.labels[i] == LevelLabel::Regular) ++i;
    strip.last = i - 1;
    for (int j = strip.first; j <= strip.last; ++j)
      strip.size += static_cast<int>(levels[j].clique.size() + levels[j].independent.size());
    strip.large = strip.size >= 16LL * k + 13;
    for (int side = 0; side < 2; ++side) {
      auto fragment = [&](int j) -> const std::vector<Vertex>& {
        return side == 0 ? levels[j].clique : levels[j].independent;
      };
      long long before = 0, total = 0;
      for (int j = strip.first; j <= strip.last; ++j) total += static_cast<long long>(fragment(j).size());
      for (int j = strip.first; j <= strip.last; ++j) {
        long long after = total - before - static_cast<long long>(fragment(j).size());
        if (before >= need && after >= need)
          strip.central.insert(strip.central.end(), fragment(j).begin(), fragment(j).end());
        before += static_cast<long long>(fragment(j).size());
      }
    }
    std::sort(strip.central.begin(), strip.central.end());
    out.strips.push_back(std::move(strip));
  }
  return out;
}

IrrelevantVertexOutcome apply_irrelevant_vertex_rule(const Graph& g, int k, Family family) {
  IrrelevantVertexOutcome out;
  auto mod = build_modulator(g, k, family);
  if (mod.no_instance) {
    out.no_instance = true;
    out.witness = mod.witness;
    return out;
  }
  const auto& x = mod.modulator.vertices;
  std::vector<char> in_x(g.order(), 0);
  for (Vertex v : x) in_x[v] = 1;

  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!in_x[v]) rest.push_back(v);
  if (family == Family::Chain) {
    // Vertices isolated in G - X are set aside.
    std::vector<Vertex> kept;
    for (Vertex v : rest) {
      bool isolated = true;
      for (Vertex w : g.neighbors(v))
        if (!in_x[w]) {
          isolated = false;
          break;
        }
      if (!isolated) kept.push_back(v);
    }
    rest = std::move(kept);
  }
  auto sub = induced_subgraph(g, rest);

  ThresholdPartition part;
  if (family == Family::Threshold) {
    auto rec = is_threshold(sub.graph);
    if (!rec.yes) throw ContractError("internal: G - X is not threshold");
    part = rec.partition;
  } else {
    auto rec = is_chain(sub.graph);
    if (!rec.yes) throw ContractError("internal: G - X is not a chain graph");
    part = rec.partition;
  }
  for (auto& level : part.levels) {
    for (Vertex& v : level.clique) v = sub.original[v];
    for (Vertex& v : level.independent) v = sub.original[v];
  }

  // classify_decomposition checks that part covers V - X; the chain case
  // covers only the non-isolated part, so classify on that subgraph's view.
  Graph view = g;
  Modulator xm = mod.modulator;
  if (family == Family::Chain) {
    std::vector<Vertex> keep = rest;
    keep.insert(keep.end(), x.begin(), x.end());
    auto reduced = induced_subgraph(g, keep);
    std::vector<Vertex> to_local(g.order(), -1);
    for (std::size_t i = 0; i < reduced.original.size(); ++i) to_local[reduced.original[i]] = static_cast<Vertex>(i);
    for (auto& level : part.levels) {
      for (Vertex& v : level.clique) v = to_local[v];
      for (Vertex& v : level.independent) v = to_local[v];
    }
    for (Vertex& v : xm.vertices) v = to_local[v];
    std::sort(xm.vertices.begin(), xm.vertices.end());
    auto cls = classify_decomposition(reduced.graph, xm, part, k);
    for (const auto& strip : cls.strips)
      if (strip.large && !strip.central.empty()) {
        Vertex best = reduced.original[strip.central.front()];
        for (Vertex v : strip.central) best = std::min(best, reduced.original[v]);
        if (!out.removed || best < *out.removed) out.removed = best;
      }
    return out;
  }
  auto cls = classify_decomposition(view, xm, part, k);
  for (const auto& strip : cls.strips)
    if (strip.large && !strip.central.empty())
      if (!out.removed || strip.central.front() < *out.removed) out.removed = strip.central.front();
  return out;
}

Kernel kernelize(const Instance& inst) {
  if (inst.target == Target::Chordal) throw ContractError("kernelize supports threshold and chain targets");
  if (inst.k < 0) throw ContractError("negative budget");
  const Family family = inst.target == Target::Threshold ? Family::Threshold : Family::Chain;
  InducedSubgraph current = identity(inst.graph);
  for (;;) {
    if (family == Family::Chain) {
      // 2k+3 true twins keep three untouched members, which form a triangle.
      const TwinClasses tc = twin_classes(current.graph);
      for (std::size_t c = 0; c < tc.members.size(); ++c)
        if (tc.kind[c] == TwinKind::True && static_cast<long long>(tc.members[c].size()) >= 2LL * inst.k + 3) {
          std::vector<Vertex> tri(tc.members[c].begin(), tc.members[c].begin() + 3);
          auto h = compose(current, induced_subgraph(current.graph, tri));
          return {Instance{h.graph, 0, inst.target, inst.variant}, h.original, true};
        }
    }
    current = compose(current, apply_twin_rule(current.graph, inst.k));
    auto outcome = apply_irrelevant_vertex_rule(current.graph, inst.k, family);
    if (outcome.no_instance) {
      auto h = compose(current, induced_subgraph(current.graph, outcome.witness.vertices));
      return {Instance{h.graph, 0, inst.target, inst.variant}, h.original, true};
    }
    if (!outcome.removed) break;
    current = compose(current, induced_subgraph(current.graph, all_but(current.graph.order(), *outcome.removed)));
  }
  return {Instance{current.graph, inst.k, inst.target, inst.variant}, current.original, false};
}

}  // namespace tcedit

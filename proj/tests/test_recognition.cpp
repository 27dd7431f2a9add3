#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tcedit/recognition.hpp"
#include "test_support.hpp"

using namespace tcedit;
using namespace tcedit::testing;

namespace {

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete(int n) { return Graph(n, all_pairs(n)); }

// The obstruction's vertices induce exactly its tagged kind.
bool certified(const Graph& g, const Obstruction& o, Family family) {
  return classify_obstruction(g, o.vertices, family) == o.kind;
}

bool is_bipartite_2k2_free(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  for (const Edge& e : g.edges())
    for (const Edge& f : g.edges()) {
      if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
      if (!g.adjacent(e.u, f.u) && !g.adjacent(e.u, f.v) && !g.adjacent(e.v, f.u) && !g.adjacent(e.v, f.v))
        return false;
    }
  return true;
}

}  // namespace

TEST_CASE("threshold recognition examples") {
  const auto k5 = is_threshold(complete(5));
  REQUIRE(k5.yes);
  REQUIRE(k5.partition.levels.size() == 1);
  CHECK(k5.partition.levels[0].clique.size() == 5);
  CHECK(k5.partition.levels[0].independent.empty());

  const Graph p4(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  const auto r = is_threshold(p4);
  REQUIRE_FALSE(r.yes);
  CHECK(r.obstruction.kind == ObstructionKind::P4);
  CHECK(std::set<int>(r.obstruction.vertices.begin(), r.obstruction.vertices.end()) == std::set<int>{0, 1, 2, 3});

  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) CHECK(is_threshold(gen_instance(rng(), 12, 0, Target::Threshold).graph).yes);

  CHECK(is_threshold(Graph(0)).yes);
  CHECK(is_threshold(Graph(0)).partition.levels.empty());
  CHECK(is_threshold(Graph(1)).yes);
}

TEST_CASE("chain recognition examples") {
  const Graph two_k2(4, std::vector<Edge>{{0, 1}, {2, 3}});
  auto r = is_chain(two_k2);
  REQUIRE_FALSE(r.yes);
  CHECK(r.obstruction.kind == ObstructionKind::TwoK2);

  std::vector<Edge> k23;
  for (Vertex a : {0, 1})
    for (Vertex b : {2, 3, 4}) k23.emplace_back(a, b);
  r = is_chain(Graph(5, k23));
  REQUIRE(r.yes);
  CHECK(r.side_a.size() + r.side_b.size() == 5);

  r = is_chain(cycle(5));
  REQUIRE_FALSE(r.yes);
  CHECK(r.obstruction.kind == ObstructionKind::C5);
  r = is_chain(cycle(3));
  REQUIRE_FALSE(r.yes);
  CHECK(r.obstruction.kind == ObstructionKind::C3);
  CHECK(is_chain(Graph(0)).yes);
  CHECK(is_chain(Graph(1)).yes);
}

TEST_CASE("find_obstruction examples") {
  std::mt19937_64 rng(22);
  CHECK_FALSE(find_obstruction(gen_instance(rng(), 10, 0, Target::Threshold).graph, Family::Threshold));
  const auto c5 = find_obstruction(cycle(5), Family::Threshold);
  REQUIRE(c5);
  CHECK(c5->kind == ObstructionKind::P4);
  const auto c7 = find_obstruction(cycle(7), Family::Chain);
  REQUIRE(c7);
  CHECK(c7->kind == ObstructionKind::TwoK2);
  CHECK(certified(cycle(7), *c7, Family::Chain));
  const auto naive = find_obstruction_naive(cycle(7), Family::Chain);
  REQUIRE(naive);
  CHECK(naive->kind == ObstructionKind::TwoK2);
}

TEST_CASE("recognition agrees with the exhaustive scan") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 500; ++t) {
    const int n = uniform(rng, 0, 8);
    const Graph g = mixed_graph(rng, n, t % 2 ? Target::Chain : Target::Threshold, 2);
    const auto thr = is_threshold(g);
    const auto chn = is_chain(g);
    CHECK(thr.yes == !find_obstruction_naive(g, Family::Threshold));
    CHECK(chn.yes == !find_obstruction_naive(g, Family::Chain));
    CHECK(chn.yes == is_bipartite_2k2_free(g));
    CHECK(find_obstruction(g, Family::Threshold).has_value() == !thr.yes);
    CHECK(find_obstruction(g, Family::Chain).has_value() == !chn.yes);
    if (thr.yes) {
      CHECK(validate_partition(g, thr.partition).empty());
      CHECK(realize(thr.partition, n) == g);
    } else {
      CHECK(certified(g, thr.obstruction, Family::Threshold));
    }
    if (chn.yes) {
      CHECK(validate_partition(complete_side(g, chn.side_a), chn.partition).empty());
      CHECK(realize(chn.partition, n) == complete_side(g, chn.side_a));
    } else {
      CHECK(certified(g, chn.obstruction, Family::Chain));
    }
  }
}

TEST_CASE("all_obstructions follows the naive order") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_graph(rng, uniform(rng, 4, 7), 0.5);
    for (Family family : {Family::Threshold, Family::Chain}) {
      const auto all = all_obstructions(g, family);
      const auto first = find_obstruction_naive(g, family);
      CHECK(all.empty() == !first.has_value());
      if (first) CHECK(all.front().vertices == first->vertices);
      for (const auto& o : all) CHECK(certified(g, o, family));
    }
  }
}

TEST_CASE("partition validator") {
  // Level 0: C={0}, I={1}; level 1: C={2}, I={3}. Adjacency law gives
  // 0-2, 0-1, 0-3, 2-3.
  ThresholdPartition part;
  part.levels = {{{0}, {1}}, {{2}, {3}}};
  const Graph g = realize(part, 4);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {2, 3}});
  CHECK(validate_partition(g, part).empty());
  CHECK_FALSE(validate_partition(Graph(4), part).empty());

  ThresholdPartition empty_inner;
  empty_inner.levels = {{{0}, {}}, {{2}, {3}}};
  CHECK_FALSE(validate_partition(realize(empty_inner, 4), empty_inner).empty());

  ThresholdPartition empty_ends;
  empty_ends.levels = {{{}, {1}}, {{2}, {}}};
  CHECK(validate_partition(realize(empty_ends, 3), empty_ends).empty() == false);  // vertex 0 not covered
  ThresholdPartition extremal;
  extremal.levels = {{{}, {0}}, {{1}, {}}};
  CHECK(validate_partition(realize(extremal, 2), extremal).empty());
}

TEST_CASE("split partition examples") {
  CHECK_FALSE(compute_split_partition(cycle(4)));
  const Graph p4(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  const auto p = compute_split_partition(p4);
  REQUIRE(p);
  CHECK(std::set<int>(p->clique.begin(), p->clique.end()) == std::set<int>{1, 2});
  const auto k4 = compute_split_partition(complete(4));
  REQUIRE(k4);
  CHECK(k4->clique.size() == 4);
  CHECK(k4->independent.empty());

  std::mt19937_64 rng(25);
  for (int t = 0; t < 300; ++t) {
    const int n = uniform(rng, 0, 8);
    const Graph g = mixed_graph(rng, n, Target::Threshold, 2);
    bool exists = false;
    for (std::uint32_t mask = 0; mask < (1u << n) && !exists; ++mask) {
      bool ok = true;
      for (Vertex u = 0; u < n && ok; ++u)
        for (Vertex v = u + 1; v < n && ok; ++v) {
          const bool cu = mask >> u & 1, cv = mask >> v & 1;
          if (cu && cv) ok = g.adjacent(u, v);
          if (!cu && !cv) ok = !g.adjacent(u, v);
        }
      exists = ok;
    }
    const auto sp = compute_split_partition(g);
    CHECK(sp.has_value() == exists);
    if (sp) {
      for (std::size_t i = 0; i < sp->clique.size(); ++i)
        for (std::size_t j = i + 1; j < sp->clique.size(); ++j) CHECK(g.adjacent(sp->clique[i], sp->clique[j]));
      for (std::size_t i = 0; i < sp->independent.size(); ++i)
        for (std::size_t j = i + 1; j < sp->independent.size(); ++j)
          CHECK_FALSE(g.adjacent(sp->independent[i], sp->independent[j]));
    }
  }
}

TEST_CASE("chordality examples") {
  CHECK(is_chordal(Graph(5, std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {3, 4}})).yes);
  const auto c4 = is_chordal(cycle(4));
  REQUIRE_FALSE(c4.yes);
  CHECK(c4.cycle.size() == 4);
  // C5 plus the chord 0-2 leaves the chordless cycle 0-2-3-4.
  const Graph chorded(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}});
  const auto r = is_chordal(chorded);
  REQUIRE_FALSE(r.yes);
  CHECK(std::set<int>(r.cycle.begin(), r.cycle.end()) == std::set<int>{0, 2, 3, 4});
}

TEST_CASE("chordless cycle witnesses are induced cycles") {
  std::mt19937_64 rng(26);
  for (int t = 0; t < 300; ++t) {
    const int n = uniform(rng, 3, 9);
    const Graph g = random_graph(rng, n, 0.35);
    const auto r = is_chordal(g);
    if (r.yes) continue;
    const auto& c = r.cycle;
    REQUIRE(c.size() >= 4);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        const bool consecutive = j == i + 1 || (i == 0 && j == c.size() - 1);
        CHECK(g.adjacent(c[i], c[j]) == consecutive);
      }
  }
}

TEST_CASE("pruned obstruction scan matches the exhaustive scan") {
  std::mt19937_64 rng(27);
  for (int t = 0; t < 200; ++t) {
    const Graph g = t % 2 ? random_graph(rng, uniform(rng, 0, 9), 0.5)
                          : mixed_graph(rng, uniform(rng, 0, 9), t % 4 ? Target::Chain : Target::Threshold, 3);
    for (Family family : {Family::Threshold, Family::Chain}) {
      std::vector<Obstruction> fast;
      for_each_obstruction(g, family, [&](const Obstruction& o) {
        fast.push_back(o);
        return false;
      });
      const auto naive = all_obstructions(g, family);
      REQUIRE(fast.size() == naive.size());
      for (std::size_t i = 0; i < fast.size(); ++i) {
        CHECK(fast[i].vertices == naive[i].vertices);
        CHECK(fast[i].kind == naive[i].kind);
      }
    }
  }
  // Stopping early returns the first obstruction only.
  const Graph p4(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  int seen = 0;
  for_each_obstruction(p4, Family::Threshold, [&](const Obstruction&) { return ++seen > 0; });
  CHECK(seen == 1);
}

TEST_CASE("pattern classification") {
  // Bits: (0,1)=0, (0,2)=1, (1,2)=2, (0,3)=3, (1,3)=4, (2,3)=5.
  CHECK(classify_pattern(4, 0b100101, Family::Threshold) == ObstructionKind::P4);  // 0-1-2-3
  CHECK(classify_pattern(4, 0b100001, Family::Threshold) == ObstructionKind::TwoK2);
  CHECK(classify_pattern(4, 0b011110, Family::Threshold) == ObstructionKind::C4);  // 0-2-1-3-0
  CHECK_FALSE(classify_pattern(4, 0b111111, Family::Threshold));
  CHECK(classify_pattern(3, 0b111, Family::Chain) == ObstructionKind::C3);
  CHECK_FALSE(classify_pattern(3, 0b111, Family::Threshold));
  CHECK_THROWS_AS(classify_pattern(6, 0, Family::Chain), ContractError);
}

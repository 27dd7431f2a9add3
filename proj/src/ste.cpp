#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_map>

#include "tcedit/solver.hpp"

namespace tcedit {

namespace {

constexpr int kInf = 1 << 28;

template <int W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1ULL; }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    for (int q = 0; q < W; ++q) r.w[q] = w[q] & o.w[q];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r;
    for (int q = 0; q < W; ++q) r.w[q] = w[q] | o.w[q];
    return r;
  }
  Bits minus(const Bits& o) const {
    Bits r;
    for (int q = 0; q < W; ++q) r.w[q] = w[q] & ~o.w[q];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (int q = 0; q < W; ++q)
      if (w[q] & ~o.w[q]) return false;
    return true;
  }
  bool operator==(const Bits&) const = default;
  template <class F>
  void each(F f) const {
    for (int q = 0; q < W; ++q)
      for (std::uint64_t x = w[q]; x; x &= x - 1) f(q * 64 + std::countr_zero(x));
  }
  std::vector<int> list() const {
    std::vector<int> out;
    each([&](int v) { out.push_back(v); });
    return out;
  }
};

template <int W>
struct BitsHash {
  std::size_t operator()(const Bits<W>& b) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : b.w) h = (h ^ x) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

void check_split(const Graph& g, const SplitPartition& part) {
  std::vector<char> seen(g.order(), 0);
  for (const auto* side : {&part.clique, &part.independent})
    for (Vertex v : *side) {
      if (v < 0 || v >= g.order() || seen[v]) throw ContractError("split partition does not partition V");
      seen[v] = 1;
    }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw ContractError("split partition misses vertices");
  const auto& c = part.clique;
  const auto& i = part.independent;
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = x + 1; y < c.size(); ++y)
      if (!g.adjacent(c[x], c[y])) throw ContractError("clique side is not a clique");
  for (std::size_t x = 0; x < i.size(); ++x)
    for (std::size_t y = x + 1; y < i.size(); ++y)
      if (g.adjacent(i[x], i[y])) throw ContractError("independent side has an edge");
}

template <int W>
class Engine {
 public:
  using B = Bits<W>;

  Engine(const Graph& g, const SplitPartition& part, int k, const CostLabels& labels, Variant variant,
         bool memoize, SolveAlgStats* stats, Deadline deadline)
      : n_(g.order()), adj_(g.order()), variant_(variant), radius_(cheap_radius(k)), memoize_(memoize),
        stats_(stats), deadline_(deadline) {
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(v)) adj_[v].set(w);
    for (Vertex v : part.clique) c_.set(v);
    for (Vertex v : part.independent) i_.set(v);
    if (!labels.expensive.empty() && static_cast<int>(labels.expensive.size()) != n_)
      throw ContractError("labels do not match the vertex count");
    for (Vertex v = 0; v < n_ && !labels.expensive.empty(); ++v)
      if (labels.expensive[v]) exp_.set(v);
    all_ = c_ | i_;
  }

  const B& all() const { return all_; }

  B make(const std::vector<Vertex>& vs) const {
    B b;
    for (Vertex v : vs) {
      if (v < 0 || v >= n_) throw ContractError("vertex out of range");
      b.set(v);
    }
    return b;
  }

  std::optional<std::vector<Edge>> unbreak(const B& s, int limit) {
    tick();
    if (limit < 0) return std::nullopt;
    const B cs = s & c_, is = s & i_;
    const B cheap_c = cs.minus(exp_), cheap_i = is.minus(exp_);
    const int base = need_edges(cheap_c, cheap_i);
    if (base > limit) return std::nullopt;
    const std::vector<int> ex_c = (cs & exp_).list(), ex_i = (is & exp_).list();
    const int pc = static_cast<int>(ex_c.size()), pi = static_cast<int>(ex_i.size());
    const int e = pc + pi;
    const int levels = e + 1;

    // Cheap vertices only matter through their adjacency to the expensive
    // vertices on the other side.
    std::unordered_map<unsigned, int> hist_c, hist_i;
    cheap_c.each([&](int c) { ++hist_c[mask_to(c, ex_i)]; });
    cheap_i.each([&](int x) { ++hist_i[mask_to(x, ex_c)]; });
    std::vector<unsigned> ex_adj(pc);
    for (int p = 0; p < pc; ++p) ex_adj[p] = mask_to(ex_c[p], ex_i);

    int best = kInf;
    std::vector<int> best_lev;
    int best_t = 0;
    std::vector<int> lev(e, 0);
    std::vector<unsigned> want_c(levels), want_i(levels);
    for (int t = 0; t < levels; ++t) {
      std::fill(lev.begin(), lev.end(), 0);
      for (;;) {
        int cost = base;
        for (int p = 0; p < pc && cost < kInf; ++p)
          for (int q = 0; q < pi; ++q) {
            const bool want = lev[pc + q] >= lev[p];
            const bool has = (ex_adj[p] >> q) & 1U;
            if (want != has) cost = add(cost, pair_cost(want));
          }
        if (cost <= limit && cost < best) {
          // want_c[l]: expensive I vertices a C vertex at level l must see.
          for (int l = 0; l < levels; ++l) {
            unsigned m = 0;
            for (int q = 0; q < pi; ++q)
              if (lev[pc + q] >= l) m |= 1U << q;
            want_c[l] = m;
            m = 0;
            for (int p = 0; p < pc; ++p)
              if (lev[p] <= l) m |= 1U << p;
            want_i[l] = m;
          }
          for (const auto& [mask, cnt] : hist_c) {
            int b = kInf;
            for (int l = 0; l <= t; ++l) b = std::min(b, place_cost(want_c[l], mask));
            cost = b >= kInf ? kInf : add(cost, b * cnt);
            if (cost >= best || cost > limit) break;
          }
          if (cost < best && cost <= limit)
            for (const auto& [mask, cnt] : hist_i) {
              int b = kInf;
              for (int l = t; l < levels; ++l) b = std::min(b, place_cost(want_i[l], mask));
              cost = b >= kInf ? kInf : add(cost, b * cnt);
              if (cost >= best || cost > limit) break;
            }
          if (cost < best && cost <= limit) {
            best = cost;
            best_lev = lev;
            best_t = t;
          }
        }
        int d = 0;
        while (d < e && ++lev[d] == levels) lev[d++] = 0;
        if (d == e) break;
      }
    }
    if (best > limit) return std::nullopt;

    // Rebuild the edit set from the winning configuration.
    std::vector<Edge> out;
    emit_edges(cheap_c, cheap_i, out);
    lev = best_lev;
    std::vector<int> level_of(n_, -1);
    for (int p = 0; p < pc; ++p) level_of[ex_c[p]] = lev[p];
    for (int q = 0; q < pi; ++q) level_of[ex_i[q]] = lev[pc + q];
    cheap_c.each([&](int c) {
      int bl = 0, bc = kInf;
      for (int l = 0; l <= best_t; ++l) {
        unsigned m = 0;
        for (int q = 0; q < pi; ++q)
          if (level_of[ex_i[q]] >= l) m |= 1U << q;
        const int pcst = place_cost(m, mask_to(c, ex_i));
        if (pcst < bc) bc = pcst, bl = l;
      }
      level_of[c] = bl;
    });
    cheap_i.each([&](int x) {
      int bl = best_t, bc = kInf;
      for (int l = best_t; l < levels; ++l) {
        unsigned m = 0;
        for (int p = 0; p < pc; ++p)
          if (level_of[ex_c[p]] <= l) m |= 1U << p;
        const int pcst = place_cost(m, mask_to(x, ex_c));
        if (pcst < bc) bc = pcst, bl = l;
      }
      level_of[x] = bl;
    });
    (cs & exp_).each([&](int c) {
      is.each([&](int x) {
        if (!exp_.test(c) && !exp_.test(x)) return;
        const bool want = level_of[x] >= level_of[c];
        if (want != adj_[c].test(x)) out.emplace_back(c, x);
      });
    });
    cheap_c.each([&](int c) {
      (is & exp_).each([&](int x) {
        const bool want = level_of[x] >= level_of[c];
        if (want != adj_[c].test(x)) out.emplace_back(c, x);
      });
    });
    std::sort(out.begin(), out.end());
    if (static_cast<int>(out.size()) != best) throw ContractError("internal: unbreakable segment cost mismatch");
    return out;
  }

  std::optional<std::vector<Edge>> solve(const B& s, int limit) {
    tick();
    if (stats_) ++stats_->calls;
    if (limit < 0) return std::nullopt;
    if (nested(s)) return std::vector<Edge>{};
    if (memoize_) {
      auto it = memo_.find(s);
      if (it != memo_.end()) {
        const Entry& en = it->second;
        if (en.found) {
          if (stats_) ++stats_->memo_hits;
          if (static_cast<int>(en.solution.size()) <= limit) return en.solution;
          return std::nullopt;
        }
        if (en.limit >= limit) {
          if (stats_) ++stats_->memo_hits;
          return std::nullopt;
        }
      }
    }
    auto result = solve_fresh(s, limit);
    if (memoize_) {
      Entry& en = memo_[s];
      en.limit = limit;
      en.found = result.has_value();
      if (result) en.solution = *result;
    }
    return result;
  }

 private:
  struct Entry {
    int limit = -1;
    bool found = false;
    std::vector<Edge> solution;
  };

  struct Candidate {
    B set;
    B generators;
    int lower_bound;
  };

  int n_;
  std::vector<B> adj_;
  B c_, i_, exp_, all_;
  Variant variant_;
  int radius_;
  bool memoize_;
  SolveAlgStats* stats_;
  Deadline deadline_;
  std::uint64_t ticks_ = 0;
  std::unordered_map<B, Entry, BitsHash<W>> memo_;
  std::unordered_map<B, std::optional<std::vector<Edge>>, BitsHash<W>> x_memo_;

  void tick() {
    if (deadline_ && (++ticks_ & 255U) == 0 && std::chrono::steady_clock::now() > *deadline_)
      throw TimeLimitExceeded("time limit exceeded");
  }

  static int add(int a, int b) { return a >= kInf || b >= kInf ? kInf : std::min(kInf, a + b); }

  // Cost of one C x I pair whose desired state differs from the current one.
  int pair_cost(bool want) const {
    if (want && variant_ == Variant::Delete) return kInf;
    if (!want && variant_ == Variant::Complete) return kInf;
    return 1;
  }

  int place_cost(unsigned want, unsigned has) const {
    if (variant_ == Variant::Delete && (want & ~has)) return kInf;
    if (variant_ == Variant::Complete && (has & ~want)) return kInf;
    return std::popcount(want ^ has);
  }

  unsigned mask_to(int v, const std::vector<int>& others) const {
    unsigned m = 0;
    for (std::size_t q = 0; q < others.size(); ++q)
      if (adj_[v].test(others[q])) m |= 1U << q;
    return m;
  }

  // Every c in p adjacent to every x in q.
  int need_edges(const B& p, const B& q) const {
    int cost = 0;
    p.each([&](int c) { cost += q.minus(adj_[c]).count(); });
    if (cost && variant_ == Variant::Delete) return kInf;
    return cost;
  }

  int need_non_edges(const B& p, const B& q) const {
    int cost = 0;
    p.each([&](int c) { cost += (q & adj_[c]).count(); });
    if (cost && variant_ == Variant::Complete) return kInf;
    return cost;
  }

  void emit_edges(const B& p, const B& q, std::vector<Edge>& out) const {
    p.each([&](int c) { q.minus(adj_[c]).each([&](int x) { out.emplace_back(c, x); }); });
  }

  void emit_non_edges(const B& p, const B& q, std::vector<Edge>& out) const {
    p.each([&](int c) { (q & adj_[c]).each([&](int x) { out.emplace_back(c, x); }); });
  }

  // Neighbourhoods of I inside C are a chain.
  bool nested(const B& s) const {
    const B cs = s & c_;
    std::vector<B> rows;
    (s & i_).each([&](int x) { rows.push_back(adj_[x] & cs); });
    std::sort(rows.begin(), rows.end(), [](const B& a, const B& b) { return a.count() < b.count(); });
    for (std::size_t j = 1; j < rows.size(); ++j)
      if (!rows[j - 1].subset_of(rows[j])) return false;
    return true;
  }

  // Exact optimum on the C_X x I_X pairs of the middle block.
  std::optional<std::vector<Edge>> solve_middle(const B& x) {
    auto it = x_memo_.find(x);
    if (it != x_memo_.end()) return it->second;
    const std::vector<int> cx = (x & c_).list(), ix = (x & i_).list();
    std::vector<Edge> pairs;
    for (int c : cx)
      for (int v : ix) {
        const bool has = adj_[c].test(v);
        if ((has && variant_ == Variant::Complete) || (!has && variant_ == Variant::Delete)) continue;
        pairs.emplace_back(c, v);
      }
    std::optional<std::vector<Edge>> best;
    const std::uint64_t total = 1ULL << pairs.size();
    for (int size = 0; size <= static_cast<int>(pairs.size()) && !best; ++size)
      for (std::uint64_t m = 0; m < total; ++m) {
        if (std::popcount(m) != size) continue;
        std::vector<B> rows;
        for (int v : ix) {
          B row = adj_[v] & (x & c_);
          for (std::size_t p = 0; p < pairs.size(); ++p)
            if ((m >> p) & 1ULL) {
              const Edge& e = pairs[p];
              const int c = e.u == v ? e.v : e.u;
              if (e.u != v && e.v != v) continue;
              if (row.test(c)) row.reset(c);
              else row.set(c);
            }
          rows.push_back(row);
        }
        std::sort(rows.begin(), rows.end(), [](const B& a, const B& b) { return a.count() < b.count(); });
        bool ok = true;
        for (std::size_t j = 1; j < rows.size() && ok; ++j) ok = rows[j - 1].subset_of(rows[j]);
        if (!ok) continue;
        std::vector<Edge> sol;
        for (std::size_t p = 0; p < pairs.size(); ++p)
          if ((m >> p) & 1ULL) sol.push_back(pairs[p]);
        best = sol;
        break;
      }
    x_memo_.emplace(x, best);
    return best;
  }

  // Sets T of `side` whose every opposite vertex y has neighbourhood within
  // `side` nested with T at total cost <= cur, and some cheap opposite vertex
  // has neighbourhood within the cheapness radius of T.
  std::vector<Candidate> cut_candidates(const B& side, const B& opposite, int cur) {
    std::vector<int> order = side.list();
    std::vector<int> others = opposite.list();
    std::vector<int> deg(n_, 0);
    for (int v : order) deg[v] = (adj_[v] & opposite).count();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    const int rad = std::min(radius_, cur);
    std::vector<int> a(n_, 0), b(n_, 0);
    int lb = 0;
    std::vector<int> cheap;
    for (int y : others)
      if (!exp_.test(y)) cheap.push_back(y);
    int alive = static_cast<int>(cheap.size());
    std::vector<Candidate> out;
    B current;
    std::function<void(std::size_t)> dfs = [&](std::size_t pos) {
      tick();
      if (lb > cur || alive == 0) return;
      if (pos == order.size()) {
        Candidate cand{current, B{}, lb};
        for (int y : cheap)
          if (a[y] + b[y] <= rad) cand.generators.set(y);
        out.push_back(cand);
        return;
      }
      const int v = order[pos];
      for (int in = 1; in >= 0; --in) {
        // Joining T charges b to each non-neighbour y; staying out charges a
        // to each neighbour.
        std::vector<std::pair<int, int>> undo;
        for (int y : others) {
          if ((in != 0) == adj_[v].test(y)) continue;
          const int before = std::min(a[y], b[y]);
          const bool was_alive = !exp_.test(y) && a[y] + b[y] <= rad;
          ++(in ? b[y] : a[y]);
          const int delta = std::min(a[y], b[y]) - before;
          const int died = was_alive && a[y] + b[y] > rad ? 1 : 0;
          lb += delta;
          alive -= died;
          undo.emplace_back(y, delta * 2 + died);
        }
        if (in) current.set(v);
        dfs(pos + 1);
        if (in) current.reset(v);
        for (const auto& [y, code] : undo) {
          --(in ? b[y] : a[y]);
          lb -= code / 2;
          alive += code % 2;
        }
      }
    };
    dfs(0);
    if (stats_) stats_->candidates += out.size();
    return out;
  }

  std::optional<std::vector<Edge>> solve_fresh(const B& s, int limit) {
    auto best = unbreak(s, limit);
    int cur = best ? static_cast<int>(best->size()) - 1 : limit;
    if (cur < 0) return best;
    const B cs = s & c_, is = s & i_;
    // R_C: the clique part below and including the lower pair vertex.
    auto lower = cut_candidates(cs, is, cur);
    if (lower.empty()) return best;
    // U_I: the independent part above and including the upper pair vertex.
    auto upper = cut_candidates(is, cs, cur);
    for (const auto& rc : lower) {
      if (rc.lower_bound > cur) continue;
      for (const auto& ui : upper) {
        if (ui.lower_bound > cur) continue;
        if (!rc.generators.minus(ui.set).any()) continue;
        if (!ui.generators.minus(rc.set).any()) continue;
        const std::vector<int> ex_c = (cs & exp_).minus(rc.set).list();
        const std::vector<int> ex_i = (is & exp_).minus(ui.set).list();
        const int e = static_cast<int>(ex_c.size() + ex_i.size());
        for (std::uint32_t mask = 0; mask < (1U << e); ++mask) {
          if (cur < 0) break;
          B cx, ix;
          for (int j = 0; j < e; ++j)
            if ((mask >> j) & 1U) {
              if (j < static_cast<int>(ex_c.size())) cx.set(ex_c[j]);
              else ix.set(ex_i[j - ex_c.size()]);
            }
          const B uc = cs.minus(rc.set | cx);
          const B ri = is.minus(ui.set | ix);
          int cost = need_edges(rc.set, ix | ui.set);
          cost = add(cost, need_edges(cx, ui.set));
          cost = add(cost, need_non_edges(uc, ix | ri));
          cost = add(cost, need_non_edges(cx, ri));
          if (cost > cur) continue;
          auto fx = solve_middle(cx | ix);
          if (!fx) continue;
          cost += static_cast<int>(fx->size());
          if (cost > cur) continue;
          auto fu = unbreak(uc | ui.set, cur - cost);
          if (!fu) continue;
          cost += static_cast<int>(fu->size());
          auto fr = solve(rc.set | ri, cur - cost);
          if (!fr) continue;
          cost += static_cast<int>(fr->size());
          std::vector<Edge> merged;
          emit_edges(rc.set, ix | ui.set, merged);
          emit_edges(cx, ui.set, merged);
          emit_non_edges(uc, ix | ri, merged);
          emit_non_edges(cx, ri, merged);
          merged.insert(merged.end(), fx->begin(), fx->end());
          merged.insert(merged.end(), fu->begin(), fu->end());
          merged.insert(merged.end(), fr->begin(), fr->end());
          std::sort(merged.begin(), merged.end());
          if (static_cast<int>(merged.size()) != cost) throw ContractError("internal: merged cost mismatch");
          best = std::move(merged);
          cur = cost - 1;
        }
        if (cur < 0) return best;
      }
    }
    return best;
  }
};

template <class Fn>
auto with_engine(int n, Fn&& fn) {
  if (n <= 64) return fn(std::integral_constant<int, 1>{});
  if (n <= 128) return fn(std::integral_constant<int, 2>{});
  if (n <= 256) return fn(std::integral_constant<int, 4>{});
  if (n <= 1024) return fn(std::integral_constant<int, 16>{});
  throw ContractError("split threshold engine supports at most 1024 vertices");
}

}  // namespace

std::optional<EditSet> unbreak_alg(const Graph& g, const SplitPartition& part, int k, const CostLabels& labels,
                                   Variant variant) {
  check_split(g, part);
  return with_engine(g.order(), [&](auto w) -> std::optional<EditSet> {
    Engine<decltype(w)::value> eng(g, part, k, labels, variant, true, nullptr, std::nullopt);
    auto sol = eng.unbreak(eng.all(), k);
    if (!sol) return std::nullopt;
    EditSet f(*sol, variant);
    Instance inst{g, k, Target::Threshold, variant};
    if (!verify_solution(inst, f).accepted) throw ContractError("internal: unbreakable solution rejected");
    return f;
  });
}

std::optional<EditSet> solve_alg(const Graph& g, const SplitPartition& part, int k, const std::vector<Vertex>& s,
                                 const CostLabels& labels, Variant variant, bool memoize, SolveAlgStats* stats,
                                 Deadline deadline) {
  check_split(g, part);
  return with_engine(g.order(), [&](auto w) -> std::optional<EditSet> {
    Engine<decltype(w)::value> eng(g, part, k, labels, variant, memoize, stats, deadline);
    auto sol = eng.solve(eng.make(s), k);
    if (!sol) return std::nullopt;
    return EditSet(*sol, variant);
  });
}

int split_threshold_packing_bound(const Graph& g, const SplitPartition& part) {
  const int n = g.order();
  std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
  auto free_pair = [&](Vertex c, Vertex x) { return !used[static_cast<std::size_t>(c) * n + x]; };
  auto take = [&](Vertex c, Vertex x) { used[static_cast<std::size_t>(c) * n + x] = 1; };
  int count = 0;
  const auto& cs = part.clique;
  for (std::size_t a = 0; a < cs.size(); ++a)
    for (std::size_t b = a + 1; b < cs.size(); ++b) {
      const Vertex c1 = cs[a], c2 = cs[b];
      for (Vertex x : part.independent) {
        if (!g.adjacent(c1, x) || g.adjacent(c2, x) || !free_pair(c1, x) || !free_pair(c2, x)) continue;
        for (Vertex y : part.independent) {
          if (!g.adjacent(c2, y) || g.adjacent(c1, y) || !free_pair(c1, y) || !free_pair(c2, y)) continue;
          take(c1, x), take(c2, x), take(c1, y), take(c2, y);
          ++count;
          break;
        }
      }
    }
  return count;
}

std::vector<Edge> split_threshold_upper_bound(const Graph& g, const SplitPartition& part, Variant variant) {
  std::vector<Vertex> order = part.clique;
  const auto& is = part.independent;
  auto cross_degree = [&](Vertex c) {
    int d = 0;
    for (Vertex x : is) d += g.adjacent(c, x);
    return d;
  };
  std::vector<int> deg(g.order(), 0);
  for (Vertex c : order) deg[c] = cross_degree(c);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
  const int m = static_cast<int>(order.size());

  // Best prefix length for x under the order.
  auto best_prefix = [&](const std::vector<Vertex>& ord, Vertex x, int& cost) {
    int d = 0, last_nbr = -1, first_non = m;
    for (int j = 0; j < m; ++j) {
      if (g.adjacent(ord[j], x)) {
        ++d;
        last_nbr = j;
      } else if (first_non == m) {
        first_non = j;
      }
    }
    int lo = 0, hi = m;
    if (variant == Variant::Complete) lo = last_nbr + 1;
    if (variant == Variant::Delete) hi = first_non;
    int cur = d, bt = 0;
    cost = kInf;
    for (int t = 0; t <= m; ++t) {
      if (t >= lo && t <= hi && cur < cost) cost = cur, bt = t;
      if (t < m) cur += g.adjacent(ord[t], x) ? -1 : 1;
    }
    return bt;
  };
  auto total = [&](const std::vector<Vertex>& ord) {
    int sum = 0, c = 0;
    for (Vertex x : is) {
      best_prefix(ord, x, c);
      sum += c;
    }
    return sum;
  };

  int cost = total(order);
  for (bool improved = true; improved && cost > 0;) {
    improved = false;
    for (int i = 0; i < m && !improved; ++i)
      for (int j = 0; j < m && !improved; ++j) {
        if (i == j) continue;
        std::vector<Vertex> next = order;
        const Vertex v = next[i];
        next.erase(next.begin() + i);
        next.insert(next.begin() + j, v);
        const int c = total(next);
        if (c < cost) {
          cost = c;
          order = std::move(next);
          improved = true;
        }
      }
  }
  std::vector<Edge> out;
  for (Vertex x : is) {
    int c = 0;
    const int t = best_prefix(order, x, c);
    for (int j = 0; j < m; ++j)
      if (g.adjacent(order[j], x) != (j < t)) out.emplace_back(order[j], x);
  }
  std::sort(out.begin(), out.end());
  return out;
}


namespace {

struct NodeLimitReached {};

// Branching on cross 2K2s of the current graph. Pairs on the current path are
// fixed once toggled, and pairs rejected by earlier sibling branches stay
// fixed as unedited, so no edit set is visited twice.
class CrossBrancher {
 public:
  CrossBrancher(const Graph& g, const SplitPartition& part, Variant variant, std::uint64_t node_limit,
                Deadline deadline)
      : cs_(part.clique), is_(part.independent), nc_(static_cast<int>(cs_.size())), ni_(static_cast<int>(is_.size())),
        adj_(static_cast<std::size_t>(nc_) * ni_), fixed_(adj_.size(), 0), stamp_(adj_.size(), 0),
        node_limit_(node_limit), deadline_(deadline) {
    for (int c = 0; c < nc_; ++c)
      for (int x = 0; x < ni_; ++x) {
        const bool has = g.adjacent(cs_[c], is_[x]);
        adj_[id(c, x)] = has;
        if ((has && variant == Variant::Complete) || (!has && variant == Variant::Delete)) fixed_[id(c, x)] = 1;
      }
  }

  std::uint64_t nodes() const { return nodes_; }

  // Some edit set of at most budget pairs; throws NodeLimitReached.
  std::optional<std::vector<Edge>> search(int budget) {
    path_.clear();
    if (!dfs(budget)) return std::nullopt;
    std::vector<Edge> out;
    for (int p : path_) out.emplace_back(cs_[p / ni_], is_[p % ni_]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<Vertex> cs_, is_;
  int nc_, ni_;
  std::vector<char> adj_, fixed_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t round_ = 0;
  std::vector<int> path_;
  std::uint64_t nodes_ = 0;
  std::uint64_t node_limit_;
  Deadline deadline_;

  int id(int c, int x) const { return c * ni_ + x; }

  // Packing over free pairs, or -1 when some 2K2 has none left. branch gets
  // a 2K2 with the fewest free pairs, or stays empty when there is no 2K2.
  int bound(std::vector<int>& branch) {
    ++round_;
    branch.clear();
    std::size_t fewest = 5;
    int count = 0;
    for (int c1 = 0; c1 < nc_; ++c1)
      for (int c2 = c1 + 1; c2 < nc_; ++c2)
        for (int x1 = 0; x1 < ni_; ++x1) {
          if (!adj_[id(c1, x1)] || adj_[id(c2, x1)]) continue;
          for (int x2 = 0; x2 < ni_; ++x2) {
            if (!adj_[id(c2, x2)] || adj_[id(c1, x2)]) continue;
            const int quad[4] = {id(c1, x1), id(c2, x2), id(c1, x2), id(c2, x1)};
            std::vector<int> free;
            bool packable = true;
            for (int p : quad)
              if (!fixed_[p]) {
                free.push_back(p);
                packable = packable && stamp_[p] != round_;
              }
            if (free.empty()) return -1;
            if (free.size() < fewest) {
              fewest = free.size();
              branch = free;
            }
            if (packable) {
              for (int p : free) stamp_[p] = round_;
              ++count;
            }
          }
        }
    return count;
  }

  bool dfs(int budget) {
    if (++nodes_ > node_limit_) throw NodeLimitReached{};
    if (deadline_ && (nodes_ & 63U) == 0 && std::chrono::steady_clock::now() > *deadline_)
      throw TimeLimitExceeded("time limit exceeded");
    std::vector<int> branch;
    const int lb = bound(branch);
    if (lb < 0 || lb > budget) return false;
    if (branch.empty()) return true;
    std::vector<int> rejected;
    bool found = false;
    for (int p : branch) {
      adj_[p] ^= 1;
      fixed_[p] = 1;
      path_.push_back(p);
      if (dfs(budget - 1)) {
        found = true;
        break;
      }
      path_.pop_back();
      adj_[p] ^= 1;
      rejected.push_back(p);
    }
    for (int p : rejected) fixed_[p] = 0;
    return found;
  }
};

// The label-set search of the unbreakable engine below `limit`, improving
// on best; stops once the size reaches lb.
std::optional<std::vector<Edge>> engine_search(const Graph& g, const SplitPartition& part, int lb, int limit,
                                               std::optional<std::vector<Edge>> best, Variant variant,
                                               Deadline deadline) {
  if (limit < lb) return best;
  return with_engine(g.order(), [&](auto w) -> std::optional<std::vector<Edge>> {
    constexpr int WW = decltype(w)::value;
    const int n = g.order();
    {
      // The empty label set first; it usually settles the bound.
      Engine<WW> eng(g, part, limit, CostLabels{std::vector<char>(n, 0)}, variant, true, nullptr, deadline);
      if (auto sol = eng.solve(eng.all(), limit)) {
        best = std::move(sol);
        limit = static_cast<int>(best->size()) - 1;
      }
    }
    for (int size = 1; limit >= lb && size <= max_expensive(limit); ++size) {
      const int r = cheap_radius(limit);
      // An expensive vertex needs more than r edits, so its other side must
      // hold more than r vertices.
      std::vector<Vertex> pool;
      for (Vertex v : part.clique)
        if (static_cast<int>(part.independent.size()) > r) pool.push_back(v);
      for (Vertex v : part.independent)
        if (static_cast<int>(part.clique.size()) > r) pool.push_back(v);
      std::sort(pool.begin(), pool.end());
      if (static_cast<int>(pool.size()) < size) break;
      std::vector<int> pick(size);
      for (int j = 0; j < size; ++j) pick[j] = j;
      for (;;) {
        if (size > max_expensive(limit)) break;
        CostLabels labels{std::vector<char>(n, 0)};
        for (int j : pick) labels.expensive[pool[j]] = 1;
        Engine<WW> eng(g, part, limit, labels, variant, true, nullptr, deadline);
        if (auto sol = eng.solve(eng.all(), limit)) {
          best = sol;
          limit = static_cast<int>(sol->size()) - 1;
          if (limit < lb) break;
        }
        int j = size - 1;
        while (j >= 0 && pick[j] == static_cast<int>(pool.size()) - size + j) --j;
        if (j < 0) break;
        ++pick[j];
        for (int q = j + 1; q < size; ++q) pick[q] = pick[q - 1] + 1;
      }
    }
    return best;
  });
}

}  // namespace

BranchResult split_threshold_branching(const Graph& g, const SplitPartition& part, int k, Variant variant,
                                       std::uint64_t node_limit, Deadline deadline) {
  check_split(g, part);
  BranchResult out;
  CrossBrancher brancher(g, part, variant, node_limit, deadline);
  try {
    for (int budget = split_threshold_packing_bound(g, part); budget <= k; ++budget)
      if (auto sol = brancher.search(budget)) {
        out.solution = EditSet(*sol, variant);
        break;
      }
    out.complete = true;
  } catch (const NodeLimitReached&) {
    out.complete = false;
  }
  out.nodes = brancher.nodes();
  return out;
}

std::optional<EditSet> split_threshold_engine(const Graph& g, const SplitPartition& part, int k, Variant variant,
                                              Deadline deadline) {
  check_split(g, part);
  if (k < 0) return std::nullopt;
  auto best = engine_search(g, part, 0, k, std::nullopt, variant, deadline);
  if (!best) return std::nullopt;
  return EditSet(*best, variant);
}

std::optional<EditSet> solve_split_threshold(const Graph& g, const SplitPartition& part, int k, Variant variant,
                                             Deadline deadline) {
  check_split(g, part);
  const int lb = split_threshold_packing_bound(g, part);
  if (k < 0 || lb > k) return std::nullopt;
  std::optional<std::vector<Edge>> best;
  int limit = k;
  auto guess = split_threshold_upper_bound(g, part, variant);
  if (static_cast<int>(guess.size()) <= k) {
    if (static_cast<int>(guess.size()) == lb) return EditSet(guess, variant);
    limit = static_cast<int>(guess.size()) - 1;
    best = std::move(guess);
  }
  const BranchResult br = split_threshold_branching(g, part, limit, variant, kBranchNodeLimit, deadline);
  if (br.complete) {
    if (br.solution) return br.solution;
  } else {
    best = engine_search(g, part, lb, limit, best, variant, deadline);
  }
  if (!best) return std::nullopt;
  return EditSet(*best, variant);
}

}  // namespace tcedit

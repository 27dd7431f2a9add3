#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tcedit/graph.hpp"
#include "tcedit/recognition.hpp"

namespace tcedit {

class TimeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RejectReason { None, Range, Budget, Purity, Membership };
std::string to_string(RejectReason r);

struct VerifyResult {
  bool accepted = false;
  RejectReason reason = RejectReason::None;
  std::string message;
  std::optional<Obstruction> witness;
};

Family family_of(Target t);

VerifyResult verify_solution(const Instance& inst, const EditSet& f);

// Exact optimum by iterative deepening over obstruction branching.
std::optional<EditSet> brute_force_oracle(const Instance& inst);

// Greedy packing of obstructions pairwise sharing no vertex pair; every
// solution needs at least this many edits.
int obstruction_packing_bound(const Graph& g, Family family);

// Cost of committing (C, I): missing edges inside C plus edges inside I.
int forced_cost(const Graph& g, const SplitPartition& part);

std::vector<SplitPartition> enumerate_split_partitions(const Graph& g, int k);

struct Bipartition {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  auto operator<=>(const Bipartition&) const = default;
};

// Edges inside A plus edges inside B.
int intra_edges(const Graph& g, const Bipartition& bp);

std::vector<Bipartition> enumerate_bipartitions(const Graph& g, int k);

// ceil(2 * sqrt(k)).
int cheap_radius(int k);
// Largest possible number of expensive vertices of a solution of size k.
int max_expensive(int k);

struct CostLabels {
  std::vector<char> expensive;  // per vertex
};

struct SolveAlgStats {
  std::uint64_t calls = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t candidates = 0;
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

// Split threshold editing restricted to C x I pairs, assuming some optimal
// solution has no splitting pair. g must be split with the given realized
// partition.
std::optional<EditSet> unbreak_alg(const Graph& g, const SplitPartition& part, int k, const CostLabels& labels,
                                   Variant variant);

// Optimal split threshold editing on G[s] (C x I pairs only) under the given
// labels; memoization can be turned off for auditing.
std::optional<EditSet> solve_alg(const Graph& g, const SplitPartition& part, int k, const std::vector<Vertex>& s,
                                 const CostLabels& labels, Variant variant, bool memoize = true,
                                 SolveAlgStats* stats = nullptr, Deadline deadline = std::nullopt);

// Greedy packing of cross 2K2s (c1-x1, c2-x2 with c1-x2 and c2-x1 absent)
// pairwise sharing no C x I pair. Every split threshold solution on (g, part)
// needs at least this many edits.
int split_threshold_packing_bound(const Graph& g, const SplitPartition& part);

// A split threshold solution on (g, part): each I vertex sees a prefix of
// one order of C, improved by insertion moves. Not necessarily optimal.
std::vector<Edge> split_threshold_upper_bound(const Graph& g, const SplitPartition& part, Variant variant);

struct BranchResult {
  bool complete = false;  // false when the node limit stopped the search
  std::optional<EditSet> solution;
  std::uint64_t nodes = 0;
};

// Exact split threshold editing by branching on cross 2K2s, each of which
// needs an edit on one of its four C x I pairs, with the packing bound for
// pruning. Budgets are tried upwards from the bound, so a solution is optimal.
BranchResult split_threshold_branching(const Graph& g, const SplitPartition& part, int k, Variant variant,
                                       std::uint64_t node_limit, Deadline deadline = std::nullopt);

// Optimal split threshold editing through solve_alg over all label sets.
std::optional<EditSet> split_threshold_engine(const Graph& g, const SplitPartition& part, int k, Variant variant,
                                              Deadline deadline = std::nullopt);

inline constexpr std::uint64_t kBranchNodeLimit = 200000;

// Optimal split threshold editing: bounds first, then branching, and the
// label-set engine when branching hits kBranchNodeLimit.
std::optional<EditSet> solve_split_threshold(const Graph& g, const SplitPartition& part, int k, Variant variant,
                                             Deadline deadline = std::nullopt);

struct SolveOptions {
  bool use_kernel = true;
  Deadline deadline;
};

struct SolveReport {
  int kernel_vertices = 0;
  int lower_bound = 0;
  int last_budget_tried = -1;
  std::uint64_t partitions_tried = 0;
};

std::optional<EditSet> solve(const Instance& inst, const SolveOptions& options = {},
                             SolveReport* report = nullptr);

}  // namespace tcedit

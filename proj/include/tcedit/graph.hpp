#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcedit {

using Vertex = int;

// Malformed input supplied by a caller (bad ids, malformed files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Variant { Edit, Complete, Delete };
enum class Target { Threshold, Chain, Chordal };

std::string to_string(Variant v);
std::string to_string(Target t);
std::optional<Variant> parse_variant(const std::string& s);
std::optional<Target> parse_target(const std::string& s);

// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws InputError on out-of-range ids, self-loops or repeated edges.
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  // Adjacency row of v as a bitset over 0..n-1.
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::size_t words() const { return words_; }

  std::vector<Edge> edges() const;
  void check_vertex(Vertex v) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

 private:
  void link(Vertex u, Vertex v);
  void finish();

  int n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> bits_;
};

// A set of vertex pairs applied by symmetric difference.
class EditSet {
 public:
  EditSet() = default;
  // Throws InputError on a repeated pair or a self-pair.
  explicit EditSet(std::vector<Edge> pairs, std::optional<Variant> tag = std::nullopt);

  void insert(Edge e);
  bool contains(Edge e) const;
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::vector<Edge>& pairs() const { return pairs_; }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  std::optional<Variant> tag;

  bool operator==(const EditSet& other) const { return pairs_ == other.pairs_; }

 private:
  std::vector<Edge> pairs_;  // sorted
};

// Throws InputError for out-of-range endpoints and ContractError when the
// tagged variant is violated against g.
Graph apply_edits(const Graph& g, const EditSet& f);

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new id -> old id
};

// Vertices keep their relative order. Throws InputError on bad ids.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

enum class TwinKind { True, False };

struct TwinClasses {
  std::vector<int> class_of;
  std::vector<TwinKind> kind;
  std::vector<std::vector<Vertex>> members;
};

TwinClasses twin_classes(const Graph& g);

enum class Nesting { UUnderV, VUnderU, Both, Incomparable };

struct NestingResult {
  Nesting relation = Nesting::Both;
  Vertex u_witness = -1;  // in N(u) \ N[v]
  Vertex v_witness = -1;  // in N(v) \ N[u]
};

struct Instance {
  Graph graph;
  int k = 0;
  Target target = Target::Threshold;
  Variant variant = Variant::Edit;
};

// u_under_v means N(u) is contained in N[v].
NestingResult nesting_compare(const Graph& g, Vertex u, Vertex v);

}  // namespace tcedit

#include "tcedit/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tcedit {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Edit: return "edit";
    case Variant::Complete: return "complete";
    case Variant::Delete: return "delete";
  }
  return "?";
}

std::string to_string(Target t) {
  switch (t) {
    case Target::Threshold: return "threshold";
    case Target::Chain: return "chain";
    case Target::Chordal: return "chordal";
  }
  return "?";
}

std::optional<Variant> parse_variant(const std::string& s) {
  if (s == "edit") return Variant::Edit;
  if (s == "complete") return Variant::Complete;
  if (s == "delete") return Variant::Delete;
  return std::nullopt;
}

std::optional<Target> parse_target(const std::string& s) {
  if (s == "threshold") return Target::Threshold;
  if (s == "chain") return Target::Chain;
  if (s == "chordal") return Target::Chordal;
  return std::nullopt;
}

Graph::Graph(int n) {
  if (n < 0) throw InputError("negative vertex count");
  n_ = n;
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  adj_.assign(n, {});
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      std::ostringstream msg;
      msg << "edge {" << e.u << "," << e.v << "} out of range for n=" << n;
      throw InputError(msg.str());
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (adjacent(e.u, e.v)) {
      std::ostringstream msg;
      msg << "repeated edge {" << e.u << "," << e.v << "}";
      throw InputError(msg.str());
    }
    link(e.u, e.v);
  }
  finish();
}

void Graph::link(Vertex u, Vertex v) {
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++m_;
}

void Graph::finish() {
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

EditSet::EditSet(std::vector<Edge> pairs, std::optional<Variant> t) : tag(t), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].u == pairs_[i].v) throw InputError("self-pair in edit set");
    if (i > 0 && pairs_[i] == pairs_[i - 1]) throw InputError("repeated pair in edit set");
  }
}

void EditSet::insert(Edge e) {
  if (e.u == e.v) throw InputError("self-pair in edit set");
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), e);
  if (it != pairs_.end() && *it == e) throw InputError("repeated pair in edit set");
  pairs_.insert(it, e);
}

bool EditSet::contains(Edge e) const { return std::binary_search(pairs_.begin(), pairs_.end(), e); }

Graph apply_edits(const Graph& g, const EditSet& f) {
  const int n = g.order();
  std::vector<Edge> out;
  for (const Edge& e : f) {
    g.check_vertex(e.u);
    g.check_vertex(e.v);
    bool present = g.adjacent(e.u, e.v);
    if (f.tag == Variant::Complete && present)
      throw ContractError("completion edit {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          "} is already an edge");
    if (f.tag == Variant::Delete && !present)
      throw ContractError("deletion edit {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          "} is not an edge");
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v && !f.contains({u, v})) out.emplace_back(u, v);
  for (const Edge& e : f)
    if (!g.adjacent(e.u, e.v)) out.push_back(e);
  return Graph(n, out);
}

Graph complement(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.emplace_back(u, v);
  return Graph(g.order(), out);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> original(s.begin(), s.end());
  for (Vertex v : original) g.check_vertex(v);
  std::sort(original.begin(), original.end());
  if (std::adjacent_find(original.begin(), original.end()) != original.end())
    throw InputError("repeated vertex in induced subgraph request");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < original.size(); ++i)
    for (std::size_t j = i + 1; j < original.size(); ++j)
      if (g.adjacent(original[i], original[j]))
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return {Graph(static_cast<int>(original.size()), edges), std::move(original)};
}

TwinClasses twin_classes(const Graph& g) {
  const int n = g.order();
  std::map<std::vector<Vertex>, std::vector<Vertex>> closed, open;
  std::vector<std::vector<Vertex>> closed_key(n);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    std::vector<Vertex> key(nb.begin(), nb.end());
    open[key].push_back(v);
    key.insert(std::lower_bound(key.begin(), key.end(), v), v);
    closed[key].push_back(v);
    closed_key[v] = std::move(key);
  }

  TwinClasses out;
  out.class_of.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (out.class_of[v] >= 0) continue;
    auto nb = g.neighbors(v);
    const auto& ttc = closed[closed_key[v]];
    const auto& ftc = open[std::vector<Vertex>(nb.begin(), nb.end())];
    const bool use_true = ttc.size() > ftc.size();
    const auto& members = use_true ? ttc : ftc;
    const int id = static_cast<int>(out.members.size());
    for (Vertex u : members) out.class_of[u] = id;
    out.members.push_back(members);
    out.kind.push_back(use_true ? TwinKind::True : TwinKind::False);
  }
  return out;
}

NestingResult nesting_compare(const Graph& g, Vertex u, Vertex v) {
  NestingResult r;
  for (Vertex w : g.neighbors(u))
    if (w != v && !g.adjacent(v, w)) {
      r.u_witness = w;
      break;
    }
  for (Vertex w : g.neighbors(v))
    if (w != u && !g.adjacent(u, w)) {
      r.v_witness = w;
      break;
    }
  const bool u_under = r.u_witness < 0;
  const bool v_under = r.v_witness < 0;
  if (u_under && v_under) {
    r.relation = Nesting::Both;
  } else if (u_under) {
    r.relation = Nesting::UUnderV;
    r.v_witness = -1;
  } else if (v_under) {
    r.relation = Nesting::VUnderU;
    r.u_witness = -1;
  } else {
    r.relation = Nesting::Incomparable;
  }
  return r;
}

}  // namespace tcedit

#include "tcedit/io.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace tcedit {

ParseError::ParseError(int line, const std::string& what)
    : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Non-blank lines with '#' comments removed.
std::vector<Line> tokenize(const std::string& text, char comment = '#') {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto pos = raw.find(comment); pos != std::string::npos) raw.erase(pos);
    std::istringstream ls(raw);
    Line line{number, {}};
    for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

long long to_int(const std::string& tok, int line) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return value;
}

int to_vertex(const std::string& tok, int line, long long n) {
  const long long v = to_int(tok, line);
  if (v < 0 || v >= n) throw ParseError(line, "vertex id " + tok + " out of range");
  return static_cast<int>(v);
}

void expect_tokens(const Line& line, std::size_t count) {
  if (line.tokens.size() != count)
    throw ParseError(line.number, "expected " + std::to_string(count) + " fields, got " +
                                      std::to_string(line.tokens.size()));
}

}  // namespace

Graph parse_graph(const std::string& text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing header 'n m'");
  const Line& head = lines.front();
  if (head.tokens.size() != 2) throw ParseError(head.number, "malformed header, expected 'n m'");
  const long long n = to_int(head.tokens[0], head.number);
  const long long m = to_int(head.tokens[1], head.number);
  if (n < 0 || m < 0) throw ParseError(head.number, "negative count in header");
  if (n > 1'000'000) throw ParseError(head.number, "vertex count too large");
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError(head.number, "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string(lines.size() - 1));
  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (std::size_t j = 1; j < lines.size(); ++j) {
    const Line& line = lines[j];
    expect_tokens(line, 2);
    const int u = to_vertex(line.tokens[0], line.number, n);
    const int v = to_vertex(line.tokens[1], line.number, n);
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    if (!seen.insert(Edge(u, v)).second) throw ParseError(line.number, "duplicate edge");
    edges.emplace_back(u, v);
  }
  return Graph(static_cast<int>(n), edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << kGraphHeader << '\n' << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << kGraphHeader << '\n'
      << "# k " << inst.k << '\n'
      << "# target " << to_string(inst.target) << '\n'
      << inst.graph.order() << ' ' << inst.graph.size() << '\n';
  for (const Edge& e : inst.graph.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::optional<int> parse_budget_comment(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string hash, key;
    long long value = 0;
    if (words >> hash >> key >> value && hash == "#" && key == "k" && value >= 0 &&
        value <= std::numeric_limits<int>::max())
      return static_cast<int>(value);
  }
  return std::nullopt;
}

SolutionFile parse_solution(const std::string& text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing header 'k_used variant target status'");
  const Line& head = lines.front();
  if (head.tokens.size() != 4) throw ParseError(head.number, "malformed header, expected 'k_used variant target status'");
  SolutionFile s;
  const long long k = to_int(head.tokens[0], head.number);
  if (k < 0) throw ParseError(head.number, "negative k_used");
  s.k_used = static_cast<int>(k);
  auto variant = parse_variant(head.tokens[1]);
  if (!variant) throw ParseError(head.number, "unknown variant '" + head.tokens[1] + "'");
  auto target = parse_target(head.tokens[2]);
  if (!target) throw ParseError(head.number, "unknown target '" + head.tokens[2] + "'");
  s.variant = *variant;
  s.target = *target;
  s.status = head.tokens[3];
  std::set<Edge> seen;
  for (std::size_t j = 1; j < lines.size(); ++j) {
    const Line& line = lines[j];
    expect_tokens(line, 3);
    if (line.tokens[0] != "+" && line.tokens[0] != "-") throw ParseError(line.number, "edit sign must be + or -");
    const long long u = to_int(line.tokens[1], line.number);
    const long long v = to_int(line.tokens[2], line.number);
    if (u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000) throw ParseError(line.number, "vertex id out of range");
    if (u == v) throw ParseError(line.number, "self-pair");
    const Edge e(static_cast<int>(u), static_cast<int>(v));
    if (!seen.insert(e).second) throw ParseError(line.number, "repeated pair");
    s.edits.emplace_back(line.tokens[0][0], e);
  }
  if (static_cast<int>(s.edits.size()) != s.k_used)
    throw ParseError(head.number, "k_used " + std::to_string(s.k_used) + " does not match " +
                                      std::to_string(s.edits.size()) + " edit lines");
  return s;
}

std::string serialize_solution(const SolutionFile& s) {
  std::ostringstream out;
  out << kSolutionHeader << '\n'
      << s.k_used << ' ' << to_string(s.variant) << ' ' << to_string(s.target) << ' ' << s.status << '\n';
  for (const auto& [sign, e] : s.edits) out << sign << ' ' << e.u << ' ' << e.v << '\n';
  return out.str();
}

SolutionFile make_solution_file(const Graph& g, const EditSet& f, Target target, Variant variant,
                                const std::string& status) {
  SolutionFile s;
  s.k_used = static_cast<int>(f.size());
  s.variant = variant;
  s.target = target;
  s.status = status;
  for (const Edge& e : f) {
    g.check_vertex(e.u);
    g.check_vertex(e.v);
    s.edits.emplace_back(g.adjacent(e.u, e.v) ? '-' : '+', e);
  }
  return s;
}

EditSet solution_edits(const Graph& g, const SolutionFile& s) {
  std::vector<Edge> pairs;
  for (const auto& [sign, e] : s.edits) {
    if (e.u < 0 || e.v >= g.order())
      throw InputError("pair {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} out of range");
    const bool present = g.adjacent(e.u, e.v);
    if (present != (sign == '-'))
      throw InputError(std::string("sign ") + sign + " disagrees with the graph on {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "}");
    pairs.push_back(e);
  }
  return EditSet(pairs);
}

CnfFormula parse_cnf(const std::string& text) {
  const auto lines = tokenize(text, '\0');
  CnfFormula phi;
  bool header = false;
  long long announced = 0;
  std::vector<int> current;
  int current_line = 0;
  for (const Line& line : lines) {
    if (line.tokens[0][0] == '%') break;
    if (line.tokens[0] == "c") continue;
    if (line.tokens[0] == "p") {
      if (header) throw ParseError(line.number, "second header");
      if (line.tokens.size() != 4 || line.tokens[1] != "cnf") throw ParseError(line.number, "malformed header, expected 'p cnf V C'");
      const long long v = to_int(line.tokens[2], line.number);
      announced = to_int(line.tokens[3], line.number);
      if (v < 0 || announced < 0 || v > 1'000'000) throw ParseError(line.number, "bad counts in header");
      phi.variables = static_cast<int>(v);
      header = true;
      continue;
    }
    if (!header) throw ParseError(line.number, "missing 'p cnf' header");
    for (const auto& tok : line.tokens) {
      const long long lit = to_int(tok, line.number);
      if (lit == 0) {
        if (current.empty()) throw ParseError(line.number, "empty clause");
        if (current.size() > 3) throw ParseError(current_line, "clause with more than three literals");
        phi.clauses.push_back(current);
        current.clear();
        continue;
      }
      if (std::llabs(lit) > phi.variables) throw ParseError(line.number, "literal " + tok + " out of range");
      if (current.empty()) current_line = line.number;
      current.push_back(static_cast<int>(lit));
    }
  }
  if (!header) throw ParseError(1, "missing 'p cnf' header");
  if (!current.empty()) throw ParseError(current_line, "clause not terminated by 0");
  if (static_cast<long long>(phi.clauses.size()) != announced)
    throw ParseError(lines.empty() ? 1 : lines.back().number,
                     "header announces " + std::to_string(announced) + " clauses, found " +
                         std::to_string(phi.clauses.size()));
  return phi;
}

std::string serialize_cnf(const CnfFormula& phi) {
  std::ostringstream out;
  out << "p cnf " << phi.variables << ' ' << phi.clauses.size() << '\n';
  for (const auto& clause : phi.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

GadgetLayout parse_layout(const std::string& text) {
  GadgetLayout layout;
  const auto lines = tokenize(text);
  bool have_formula = false;
  std::vector<std::pair<int, Vertex>> clause_vertices;
  for (const Line& line : lines) {
    const auto& t = line.tokens;
    const std::string& key = t[0];
    auto num = [&](std::size_t j) { return static_cast<int>(to_int(t[j], line.number)); };
    if (key == "formula") {
      expect_tokens(line, 3);
      layout.formula.variables = num(1);
      layout.formula.clauses.assign(num(2), {});
      layout.variables.assign(layout.formula.variables, VariableGadget{});
      clause_vertices.clear();
      have_formula = true;
    } else if (!have_formula) {
      throw ParseError(line.number, "'formula' must come first");
    } else if (key == "k") {
      expect_tokens(line, 2);
      layout.k = num(1);
    } else if (key == "clause") {
      if (t.size() < 4) throw ParseError(line.number, "clause line needs an index, a vertex and literals");
      const int j = num(1);
      if (j < 0 || j >= static_cast<int>(layout.formula.clauses.size())) throw ParseError(line.number, "clause index out of range");
      clause_vertices.emplace_back(j, num(2));
      std::vector<int> lits;
      for (std::size_t q = 3; q < t.size(); ++q) lits.push_back(num(q));
      layout.formula.clauses[j] = lits;
    } else if (key == "var") {
      expect_tokens(line, 8);
      const int x = num(1);
      if (x < 0 || x >= layout.formula.variables) throw ParseError(line.number, "variable index out of range");
      layout.variables[x] = VariableGadget{num(2), num(3), num(4), num(5), num(6), num(7)};
    } else if (key == "enforce") {
      expect_tokens(line, 5);
      layout.enforcement.push_back(Enforcement{num(1), num(2), num(3), num(4)});
    } else if (key == "isolated") {
      expect_tokens(line, 3);
      layout.isolated_first = num(1);
      layout.isolated_count = num(2);
    } else {
      throw ParseError(line.number, "unknown key '" + key + "'");
    }
  }
  if (!have_formula) throw ParseError(1, "missing 'formula' line");
  std::sort(clause_vertices.begin(), clause_vertices.end());
  if (clause_vertices.size() != layout.formula.clauses.size())
    throw ParseError(lines.back().number, "clause lines do not match the formula");
  for (const auto& [j, v] : clause_vertices) layout.clauses.push_back(v);
  if (layout.formula.clauses.empty()) layout.variables.clear();
  return layout;
}

std::string serialize_layout(const GadgetLayout& layout) {
  std::ostringstream out;
  out << kLayoutHeader << '\n';
  out << "formula " << layout.formula.variables << ' ' << layout.formula.clauses.size() << '\n';
  out << "k " << layout.k << '\n';
  for (std::size_t j = 0; j < layout.formula.clauses.size(); ++j) {
    out << "clause " << j << ' ' << layout.clauses.at(j);
    for (int lit : layout.formula.clauses[j]) out << ' ' << lit;
    out << '\n';
  }
  for (std::size_t x = 0; x < layout.variables.size(); ++x) {
    const auto& v = layout.variables[x];
    out << "var " << x << ' ' << v.a << ' ' << v.b << ' ' << v.bottom << ' ' << v.top << ' ' << v.c << ' ' << v.d
        << '\n';
  }
  for (const auto& e : layout.enforcement)
    out << "enforce " << e.variable << ' ' << e.boundary << ' ' << e.first << ' ' << e.count << '\n';
  out << "isolated " << layout.isolated_first << ' ' << layout.isolated_count << '\n';
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("failed writing " + path);
}

}  // namespace tcedit

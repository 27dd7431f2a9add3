#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcedit/graph.hpp"
#include "tcedit/reductions.hpp"

namespace tcedit {

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

inline constexpr const char* kGraphHeader = "# tcedit graph v1";
inline constexpr const char* kSolutionHeader = "# tcedit solution v1";
inline constexpr const char* kLayoutHeader = "# tcedit layout v1";

Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);
// Graph file carrying "# k K" and "# target T" comment lines after the header.
std::string serialize_instance(const Instance& inst);
// Value of a "# k K" comment line, if present.
std::optional<int> parse_budget_comment(const std::string& text);

struct SolutionFile {
  int k_used = 0;
  Variant variant = Variant::Edit;
  Target target = Target::Threshold;
  std::string status = "optimal";
  // '+' adds a pair, '-' removes one.
  std::vector<std::pair<char, Edge>> edits;

  bool operator==(const SolutionFile&) const = default;
};

SolutionFile parse_solution(const std::string& text);
std::string serialize_solution(const SolutionFile& s);

// Signs are taken from g.
SolutionFile make_solution_file(const Graph& g, const EditSet& f, Target target, Variant variant,
                                const std::string& status);
// Throws InputError when a sign disagrees with g or an id is out of range.
EditSet solution_edits(const Graph& g, const SolutionFile& s);

CnfFormula parse_cnf(const std::string& text);
std::string serialize_cnf(const CnfFormula& phi);

GadgetLayout parse_layout(const std::string& text);
std::string serialize_layout(const GadgetLayout& layout);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace tcedit

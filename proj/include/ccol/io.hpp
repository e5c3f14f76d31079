#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ccol/instance.hpp"

namespace ccol {

// A parsed 3CC file: the complete edge-coloured graph plus the per-vertex
// colour lists (full set where the file gave none).
struct Instance3cc {
  EdgeColouring graph;
  ColourLists lists;

  bool restricted() const {
    for (const auto& s : lists)
      if (s != ColourSet::full()) return true;
    return false;
  }

  bool operator==(const Instance3cc&) const = default;
};

// Text format, LF line endings, comment lines start with 'c':
//   p 3cc <n>
//   e <u> <v> <c>     exactly n(n-1)/2 lines, u < v, c in {R,G,B}
//   l <v> <subset>    optional, subset a string over "RGB"; `l <v>` alone
//                     denotes the empty list
Instance3cc parse_3cc(std::string_view text);
std::string serialize_3cc(const EdgeColouring& graph, const ColourLists& lists = {});
inline std::string serialize_3cc(const Instance3cc& inst) {
  return serialize_3cc(inst.graph, inst.lists);
}

//   p stubborn <n> <m>
//   e <u> <v>         exactly m lines, u < v
//   l <v> <subset>    optional, subset a string over "1234"; omitted lists
//                     default to the full set {1,2,3,4}
StubbornInstance parse_stubborn(std::string_view text);
std::string serialize_stubborn(const StubbornInstance& inst);

// Solution files: `s SAT` followed by n lines `v <idx> <value>`, or `s UNSAT`.
// Values are colour letters for 3CC, digits 1..4 for Stubborn.
std::optional<VertexColouring> parse_3cc_solution(std::string_view text);
std::string serialize_3cc_solution(const std::optional<VertexColouring>& phi);
std::optional<StubbornColouring> parse_stubborn_solution(std::string_view text);
std::string serialize_stubborn_solution(const std::optional<StubbornColouring>& phi);

}  // namespace ccol

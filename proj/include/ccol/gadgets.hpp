#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ccol/instance.hpp"
#include "ccol/solver.hpp"

namespace ccol {

enum class GadgetKind : std::uint8_t { type_one, type_two };

// One attached gadget: the fresh vertex indices plus its colour roles.
// A type-one X-gadget (4 vertices) forces "no vertex of its S takes X";
// a type-two X-gadget (2 vertices on an edge uw) forces "not both u and w
// take X". For both, Y = successor(X) and Z is the remaining colour.
struct GadgetRecord {
  GadgetKind kind;
  Colour colour;  // the X role
  Colour role_y;
  Colour role_z;
  std::vector<int> vertices;
  std::optional<std::pair<int, int>> anchor_edge;  // type_two: the guarded edge

  bool operator==(const GadgetRecord&) const = default;
};

// Bookkeeping of a reduction: original vertices occupy the index prefix of
// the reduced instance; gadget vertex blocks follow in attachment order.
struct ReductionMap {
  int original_n = 0;
  std::vector<GadgetRecord> gadgets;

  bool operator==(const ReductionMap&) const = default;
};

// JSON object with fields original_n, gadgets (kind, colour, vertices,
// anchor_edge when present) and the fixed colour_value_map R->2, G->{1,3},
// B->4.
std::string reduction_map_json(const ReductionMap& map);

// Grows a complete edge-coloured graph by gadget attachment, assigning every
// new vertex pair exactly once. Unspecified edges follow the default-colour
// rule, which always avoids the forced colour of every incident gadget:
//   type-one X-gadget to original vertex outside S  -> successor(X)
//   type-one X-gadget to type-one X'-gadget, X'!=X  -> the colour off {X,X'}
//   type-one X-gadget to type-one X-gadget          -> successor(X)
//   anything touching a type-two gadget vertex      -> that gadget's Y
class ReductionBuilder {
 public:
  explicit ReductionBuilder(const EdgeColouring& original);

  // Four fresh vertices wired so every internally feasible colouring uses X
  // at least once; X-edges to every vertex of S (original vertices only).
  const GadgetRecord& add_type_one(Colour x, std::span<const int> s);

  // Two fresh vertices guarding the pair (u, w); requires the type-one
  // gadget of colour successor(x) as anchor.
  const GadgetRecord& add_type_two(int u, int w, Colour x, const GadgetRecord& anchor);

  const EdgeColouring& graph() const noexcept { return graph_; }
  ReductionMap map() const { return ReductionMap{original_n_, gadgets_}; }

 private:
  Colour default_colour_to(Colour x, int existing) const;
  void assign(int u, int v, Colour c);
  void verify_complete() const;

  EdgeColouring graph_;
  int original_n_;
  std::vector<GadgetRecord> gadgets_;
  std::vector<int> owner_;          // -1 for original vertices, else gadget index
  std::vector<char> assigned_;      // per pair, grown with the graph
};

// List-variant reduction: one type-one gadget per colour c with
// S = { v : c not in lists[v] }. Added unconditionally in colour order.
std::pair<EdgeColouring, ReductionMap> reduce_list_3cc(const EdgeColouring& inst,
                                                       const ColourLists& lists);

// Appendix reduction of a Stubborn instance: original pairs R on edges and B
// on non-edges, type-one gadgets for the list constraints (values 2, {1,3},
// 4 to colours R, G, B) and a type-two G-gadget on every edge whose endpoints
// cannot both take value 3.
std::pair<EdgeColouring, ReductionMap> reduce_stubborn(const StubbornInstance& inst);

// Original-prefix back-mapping R->2, B->4, G->3 when allowed else 1.
StubbornColouring map_back_stubborn(const ReductionMap& map, const StubbornInstance& inst,
                                    const VertexColouring& phi);

struct StubbornVerdict {
  std::optional<StubbornColouring> colouring;
  StatsCounter stats;
  int reduced_n = 0;

  bool sat() const noexcept { return colouring.has_value(); }
};

// reduce_stubborn, solve, map back.
StubbornVerdict solve_stubborn(const StubbornInstance& inst, const SolveOptions& opts = {});

}  // namespace ccol

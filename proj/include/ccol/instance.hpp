#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ccol/colour.hpp"
#include "ccol/error.hpp"

namespace ccol {

// Total map vertex -> colour.
using VertexColouring = std::vector<Colour>;

// Per-vertex admissible colour sets for the list variant; the full set means
// unconstrained, the empty set means trivially infeasible.
using ColourLists = std::vector<ColourSet>;

// Complete undirected graph on vertices 0..n-1 with a colour on every pair.
class EdgeColouring {
 public:
  EdgeColouring() = default;
  explicit EdgeColouring(int n, Colour fill = Colour::R);

  int vertex_count() const noexcept { return n_; }

  Colour colour(int u, int v) const;
  void set_colour(int u, int v, Colour c);

  bool operator==(const EdgeColouring&) const = default;

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  std::vector<Colour> cells_;  // n*n, kept symmetric, diagonal unused
};

// True iff no edge uv has phi(u) = phi(v) = colour(u,v).
bool feasible_3cc(const EdgeColouring& inst, const VertexColouring& phi);

// As above but also requiring phi(v) in lists[v] for every vertex.
bool feasible_3cc(const EdgeColouring& inst, const ColourLists& lists,
                  const VertexColouring& phi);

// ---------------------------------------------------------------------------
// Stubborn problem instances

// Total map vertex -> value in {1,2,3,4}.
using StubbornColouring = std::vector<std::uint8_t>;

// Subset of {1,2,3,4} as a four-bit mask; bit k corresponds to value k+1.
inline constexpr std::uint8_t kFullStubbornList = 0xF;

// Simple undirected graph with per-vertex constraint lists over {1,2,3,4}.
class StubbornInstance {
 public:
  StubbornInstance() = default;
  explicit StubbornInstance(int n);

  int vertex_count() const noexcept { return n_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  // Normalized u < v, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

  void set_list(int v, std::uint8_t mask);
  std::uint8_t list(int v) const;
  bool list_allows(int v, int value) const;

  bool operator==(const StubbornInstance&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint8_t> lists_;
  std::vector<char> adj_;  // n*n incidence
};

// True iff phi respects the lists, phi^-1(4) is a clique, and no edge carries
// the value set {1}, {2} or {1,3}.
bool feasible_stubborn(const StubbornInstance& inst, const StubbornColouring& phi);

}  // namespace ccol

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "ccol/instance.hpp"

namespace ccol {

// Every vertex of W admits both palette colours across feasible colourings.
// `monochrome` is the single colour carried by all internal edges, or empty
// when W has no internal edge (|W| <= 1).
struct AllInteresting {
  std::optional<Colour> monochrome;
  bool operator==(const AllInteresting&) const = default;
};

// `vertex` cannot take `forbidden` in any feasible palette colouring of W.
// The witness is the multicoloured triangle (u, v, w) with the boring vertex
// in the middle: colour(u,v) = colour(v,w) = forbidden != colour(u,w).
struct Boring {
  int vertex;
  Colour forbidden;
  std::array<int, 3> witness;
  bool operator==(const Boring&) const = default;
};

using TwoColourVerdict = std::variant<AllInteresting, Boring>;

// Classifies a vertex set whose internal edges use only the two palette
// colours: either all internal edges share one colour (everyone interesting)
// or a multicoloured triangle pins down a boring vertex. O(|W|^2) edge
// inspections; `inspections`, when given, receives the exact count.
TwoColourVerdict classify(const EdgeColouring& inst, std::span<const int> w_set,
                          ColourSet palette, std::size_t* inspections = nullptr);

// Ground truth by enumeration of all 2^|W| palette colourings, |W| <= 20.
struct OracleClassification {
  std::vector<int> vertices;              // sorted ascending
  std::vector<std::uint8_t> interesting;  // aligned with `vertices`
  std::vector<std::uint32_t> feasible;    // bit i set = vertices[i] gets `hi`
  Colour lo, hi;                          // palette in increasing order
};

OracleClassification oracle_classify(const EdgeColouring& inst, std::span<const int> w_set,
                                     ColourSet palette);

}  // namespace ccol

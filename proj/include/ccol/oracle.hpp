#pragma once

#include <optional>

#include "ccol/instance.hpp"

namespace ccol {

// Plain enumeration in lexicographic order (vertex 0 most significant,
// R < G < B), returning the first feasible colouring. Refuses n > 14.
std::optional<VertexColouring> brute_force_3cc(const EdgeColouring& inst);
std::optional<VertexColouring> brute_force_3cc(const EdgeColouring& inst,
                                               const ColourLists& lists);

// Same over values 1 < 2 < 3 < 4. Refuses n > 10.
std::optional<StubbornColouring> brute_force_stubborn(const StubbornInstance& inst);

}  // namespace ccol

#pragma once

#include <random>

#include "ccol/instance.hpp"

namespace ccol::test {

inline EdgeColouring random_instance(int n, std::mt19937_64& rng) {
  EdgeColouring g(n);
  std::uniform_int_distribution<int> dist(0, 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_colour(u, v, static_cast<Colour>(dist(rng)));
  return g;
}

// Complete graph whose edges use only the two palette colours.
inline EdgeColouring random_two_coloured(int n, Colour a, Colour b, std::mt19937_64& rng) {
  EdgeColouring g(n);
  std::uniform_int_distribution<int> dist(0, 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_colour(u, v, dist(rng) ? a : b);
  return g;
}

inline StubbornInstance random_stubborn(int n, double p, std::mt19937_64& rng) {
  StubbornInstance inst(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> mask(1, 15);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) inst.add_edge(u, v);
  for (int v = 0; v < n; ++v) inst.set_list(v, static_cast<std::uint8_t>(mask(rng)));
  return inst;
}

}  // namespace ccol::test

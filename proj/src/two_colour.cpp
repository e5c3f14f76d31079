#include "ccol/two_colour.hpp"

#include <algorithm>
#include <string>

namespace ccol {

namespace {

std::vector<int> checked_sorted(const EdgeColouring& inst, std::span<const int> w_set) {
  std::vector<int> w(w_set.begin(), w_set.end());
  std::sort(w.begin(), w.end());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0 || w[i] >= inst.vertex_count())
      throw contract_error("vertex index out of range: " + std::to_string(w[i]));
    if (i > 0 && w[i] == w[i - 1])
      throw contract_error("duplicate vertex in W: " + std::to_string(w[i]));
  }
  return w;
}

Colour palette_colour(const EdgeColouring& inst, ColourSet palette, int u, int v) {
  const Colour c = inst.colour(u, v);
  if (!palette.contains(c))
    throw contract_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") coloured outside the palette");
  return c;
}

// Boring verdict from a multicoloured triangle over two palette colours: the
// two same-coloured edges share the middle vertex, which cannot take their
// colour.
Boring from_triangle(const EdgeColouring& inst, int a, int b, int c) {
  const Colour ab = inst.colour(a, b);
  const Colour ac = inst.colour(a, c);
  const Colour bc = inst.colour(b, c);
  int middle, left, right;
  Colour repeated;
  if (ab == ac) {
    middle = a, left = b, right = c, repeated = ab;
  } else if (ab == bc) {
    middle = b, left = a, right = c, repeated = ab;
  } else {
    middle = c, left = a, right = b, repeated = ac;
  }
  if (left > right) std::swap(left, right);
  return Boring{middle, repeated, {left, middle, right}};
}

}  // namespace

TwoColourVerdict classify(const EdgeColouring& inst, std::span<const int> w_set,
                          ColourSet palette, std::size_t* inspections) {
  if (palette.size() != 2) throw contract_error("palette must contain exactly two colours");
  const std::vector<int> w = checked_sorted(inst, w_set);
  std::size_t looked = 0;
  if (w.size() <= 1) {
    if (inspections) *inspections = 0;
    return AllInteresting{std::nullopt};
  }

  // Row-major scan for the first edge whose colour differs from the first
  // edge's colour.
  bool have_first = false;
  Colour first_colour = Colour::R;
  int u1 = -1, v1 = -1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      ++looked;
      const Colour c = palette_colour(inst, palette, w[i], w[j]);
      if (!have_first) {
        have_first = true;
        first_colour = c;
        u1 = w[i], v1 = w[j];
        continue;
      }
      if (c == first_colour) continue;
      const int u2 = w[i], v2 = w[j];
      // Shared endpoint: the two differing edges already form a triangle.
      if (u2 == u1 || u2 == v1 || v2 == u1 || v2 == v1) {
        if (inspections) *inspections = looked;
        const int shared = (u2 == u1 || u2 == v1) ? u2 : v2;
        const int other1 = (shared == u1) ? v1 : u1;
        const int other2 = (shared == u2) ? v2 : u2;
        return from_triangle(inst, other1, other2, shared);
      }
      // Disjoint endpoints: the edge u1u2 disagrees with one of the two found
      // edges, giving the triangle (u1,u2,v1) or (u1,u2,v2).
      ++looked;
      if (inspections) *inspections = looked;
      if (palette_colour(inst, palette, u1, u2) != first_colour)
        return from_triangle(inst, u1, u2, v1);
      return from_triangle(inst, u1, u2, v2);
    }
  }
  if (inspections) *inspections = looked;
  return AllInteresting{first_colour};
}

OracleClassification oracle_classify(const EdgeColouring& inst, std::span<const int> w_set,
                                     ColourSet palette) {
  if (palette.size() != 2) throw contract_error("palette must contain exactly two colours");
  const std::vector<int> w = checked_sorted(inst, w_set);
  if (w.size() > 20)
    throw contract_error("oracle_classify refuses |W| > 20, got " + std::to_string(w.size()));

  OracleClassification out;
  out.vertices = w;
  out.lo = palette.lowest();
  out.hi = palette.without(out.lo).lowest();

  const std::size_t k = w.size();
  std::vector<char> got_lo(k, 0), got_hi(k, 0);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      const Colour ci = ((mask >> i) & 1u) ? out.hi : out.lo;
      for (std::size_t j = i + 1; j < k && ok; ++j) {
        const Colour cj = ((mask >> j) & 1u) ? out.hi : out.lo;
        if (ci == cj && palette_colour(inst, palette, w[i], w[j]) == ci) ok = false;
      }
    }
    if (!ok) continue;
    out.feasible.push_back(mask);
    for (std::size_t i = 0; i < k; ++i)
      (((mask >> i) & 1u) ? got_hi : got_lo)[i] = 1;
  }
  out.interesting.resize(k);
  for (std::size_t i = 0; i < k; ++i) out.interesting[i] = got_lo[i] && got_hi[i];
  return out;
}

}  // namespace ccol

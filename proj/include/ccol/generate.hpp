#pragma once

#include <cstdint>
#include <string>

#include "ccol/instance.hpp"

namespace ccol {

// The (index+1)-th output of the splitmix64 sequence seeded with `seed`.
// Splittable random access: every drawn value is addressed by an index, so a
// re-implementation in any language reproduces instances byte for byte.
constexpr std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Rank of the pair (u,v), u < v, in row-major order over n vertices.
constexpr std::uint64_t pair_rank(int u, int v, int n) noexcept {
  return static_cast<std::uint64_t>(u) * n - static_cast<std::uint64_t>(u) * (u + 1) / 2 +
         (v - u - 1);
}

enum class GenFamily : std::uint8_t { uniform3cc, planted3cc, stubborn };

struct GenSpec {
  GenFamily family = GenFamily::uniform3cc;
  int n = 0;
  double p = 0.5;  // edge probability, stubborn only
  std::uint64_t seed = 0;
};

// Each edge colour i.i.d. uniform: colour(u,v) = out(seed, rank(u,v)) mod 3.
EdgeColouring gen_uniform3cc(int n, std::uint64_t seed);

// Hidden colouring psi(v) = out(seed, v) mod 3; each edge drawn uniformly
// from the colours that keep psi feasible (indices n + rank(u,v)).
struct Planted {
  EdgeColouring graph;
  VertexColouring hidden;
};
Planted gen_planted3cc(int n, std::uint64_t seed);

// Edge (u,v) present iff out(seed, rank(u,v)) >> 11 < round(p * 2^53); the
// list of vertex v is the (out(seed, C(n,2) + v) mod 15 + 1)-th nonempty
// subset mask of {1,2,3,4}.
StubbornInstance gen_stubborn(int n, double p, std::uint64_t seed);

// Canonical instance file text for the spec.
std::string gen_file(const GenSpec& spec);

}  // namespace ccol

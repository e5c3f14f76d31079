#include "ccol/generate.hpp"

#include <cmath>

#include "ccol/io.hpp"

namespace ccol {

EdgeColouring gen_uniform3cc(int n, std::uint64_t seed) {
  EdgeColouring g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      g.set_colour(u, v, static_cast<Colour>(splitmix64_at(seed, pair_rank(u, v, n)) % 3));
  return g;
}

Planted gen_planted3cc(int n, std::uint64_t seed) {
  Planted out{EdgeColouring(n), VertexColouring(n)};
  for (int v = 0; v < n; ++v)
    out.hidden[v] = static_cast<Colour>(splitmix64_at(seed, v) % 3);
  const std::uint64_t base = static_cast<std::uint64_t>(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const std::uint64_t r = splitmix64_at(seed, base + pair_rank(u, v, n));
      Colour c;
      if (out.hidden[u] != out.hidden[v]) {
        c = static_cast<Colour>(r % 3);
      } else {
        // Two allowed colours, ascending.
        const ColourSet allowed = ColourSet::full().without(out.hidden[u]);
        const Colour lo = allowed.lowest();
        const Colour hi = allowed.without(lo).lowest();
        c = (r % 2) ? hi : lo;
      }
      out.graph.set_colour(u, v, c);
    }
  return out;
}

StubbornInstance gen_stubborn(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw contract_error("edge probability must lie in [0,1]");
  StubbornInstance inst(n);
  const std::uint64_t threshold =
      static_cast<std::uint64_t>(std::llround(p * 9007199254740992.0));  // p * 2^53
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((splitmix64_at(seed, pair_rank(u, v, n)) >> 11) < threshold) inst.add_edge(u, v);
  const std::uint64_t base = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  for (int v = 0; v < n; ++v)
    inst.set_list(v, static_cast<std::uint8_t>(splitmix64_at(seed, base + v) % 15 + 1));
  return inst;
}

std::string gen_file(const GenSpec& spec) {
  if (spec.n < 0) throw contract_error("vertex count must be non-negative");
  switch (spec.family) {
    case GenFamily::uniform3cc:
      return serialize_3cc(gen_uniform3cc(spec.n, spec.seed));
    case GenFamily::planted3cc:
      return serialize_3cc(gen_planted3cc(spec.n, spec.seed).graph);
    case GenFamily::stubborn:
      return serialize_stubborn(gen_stubborn(spec.n, spec.p, spec.seed));
  }
  throw contract_error("unknown generator family");
}

}  // namespace ccol

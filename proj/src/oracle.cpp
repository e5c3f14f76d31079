#include "ccol/oracle.hpp"

#include <string>

namespace ccol {

namespace {

// Advances a little-endian-in-significance odometer: the LAST digit is the
// least significant, so successive states enumerate lexicographically.
bool next_odometer(std::vector<std::uint8_t>& digits, std::uint8_t base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

std::optional<VertexColouring> brute_force_3cc(const EdgeColouring& inst) {
  return brute_force_3cc(inst, ColourLists(inst.vertex_count(), ColourSet::full()));
}

std::optional<VertexColouring> brute_force_3cc(const EdgeColouring& inst,
                                               const ColourLists& lists) {
  const int n = inst.vertex_count();
  if (n > 14)
    throw contract_error("brute_force_3cc refuses n > 14, got " + std::to_string(n));
  if (static_cast<int>(lists.size()) != n)
    throw contract_error("list table size does not match vertex count");

  std::vector<std::uint8_t> digits(n, 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (!lists[v].contains(static_cast<Colour>(digits[v]))) ok = false;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (digits[u] == digits[v] &&
            inst.colour(u, v) == static_cast<Colour>(digits[u]))
          ok = false;
    if (ok) {
      VertexColouring phi(n);
      for (int v = 0; v < n; ++v) phi[v] = static_cast<Colour>(digits[v]);
      return phi;
    }
  } while (next_odometer(digits, 3));
  return std::nullopt;
}

std::optional<StubbornColouring> brute_force_stubborn(const StubbornInstance& inst) {
  const int n = inst.vertex_count();
  if (n > 10)
    throw contract_error("brute_force_stubborn refuses n > 10, got " + std::to_string(n));

  std::vector<std::uint8_t> digits(n, 0);
  do {
    StubbornColouring phi(n);
    for (int v = 0; v < n; ++v) phi[v] = static_cast<std::uint8_t>(digits[v] + 1);
    if (feasible_stubborn(inst, phi)) return phi;
  } while (next_odometer(digits, 4));
  return std::nullopt;
}

}  // namespace ccol

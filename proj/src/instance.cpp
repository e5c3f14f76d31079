#include "ccol/instance.hpp"

#include <algorithm>
#include <string>

namespace ccol {

EdgeColouring::EdgeColouring(int n, Colour fill) : n_(n) {
  if (n < 0) throw contract_error("vertex count must be non-negative");
  cells_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill);
}

void EdgeColouring::check_pair(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw contract_error("vertex index out of range: (" + std::to_string(u) + "," +
                         std::to_string(v) + ") with n=" + std::to_string(n_));
  if (u == v) throw contract_error("self-loop: vertex " + std::to_string(u));
}

Colour EdgeColouring::colour(int u, int v) const {
  check_pair(u, v);
  return cells_[static_cast<std::size_t>(u) * n_ + v];
}

void EdgeColouring::set_colour(int u, int v, Colour c) {
  check_pair(u, v);
  cells_[static_cast<std::size_t>(u) * n_ + v] = c;
  cells_[static_cast<std::size_t>(v) * n_ + u] = c;
}

bool feasible_3cc(const EdgeColouring& inst, const VertexColouring& phi) {
  const int n = inst.vertex_count();
  if (static_cast<int>(phi.size()) != n)
    throw contract_error("colouring size " + std::to_string(phi.size()) +
                         " does not match vertex count " + std::to_string(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (phi[u] == phi[v] && inst.colour(u, v) == phi[u]) return false;
  return true;
}

bool feasible_3cc(const EdgeColouring& inst, const ColourLists& lists,
                  const VertexColouring& phi) {
  const int n = inst.vertex_count();
  if (static_cast<int>(lists.size()) != n)
    throw contract_error("list table size does not match vertex count");
  if (static_cast<int>(phi.size()) != n)
    throw contract_error("colouring size does not match vertex count");
  for (int v = 0; v < n; ++v)
    if (!lists[v].contains(phi[v])) return false;
  return feasible_3cc(inst, phi);
}

StubbornInstance::StubbornInstance(int n) : n_(n) {
  if (n < 0) throw contract_error("vertex count must be non-negative");
  lists_.assign(static_cast<std::size_t>(n), kFullStubbornList);
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

void StubbornInstance::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw contract_error("vertex index out of range: " + std::to_string(v));
}

void StubbornInstance::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw contract_error("self-loop: vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  if (adj_[static_cast<std::size_t>(u) * n_ + v])
    throw contract_error("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
  adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
  auto e = std::make_pair(u, v);
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
}

bool StubbornInstance::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

void StubbornInstance::set_list(int v, std::uint8_t mask) {
  check_vertex(v);
  if (mask & ~kFullStubbornList)
    throw contract_error("list mask outside {1,2,3,4}");
  lists_[v] = mask;
}

std::uint8_t StubbornInstance::list(int v) const {
  check_vertex(v);
  return lists_[v];
}

bool StubbornInstance::list_allows(int v, int value) const {
  check_vertex(v);
  if (value < 1 || value > 4) throw contract_error("value outside 1..4");
  return (lists_[v] >> (value - 1)) & 1u;
}

bool feasible_stubborn(const StubbornInstance& inst, const StubbornColouring& phi) {
  const int n = inst.vertex_count();
  if (static_cast<int>(phi.size()) != n)
    throw contract_error("colouring size does not match vertex count");
  for (int v = 0; v < n; ++v) {
    if (phi[v] < 1 || phi[v] > 4) throw contract_error("value outside 1..4");
    if (!inst.list_allows(v, phi[v])) return false;
  }
  // phi^-1(4) must be a clique.
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (phi[u] == 4 && phi[v] == 4 && !inst.has_edge(u, v)) return false;
  // No edge may carry the value set {1}, {2} or {1,3}.
  for (const auto& [u, v] : inst.edges()) {
    const int a = phi[u], b = phi[v];
    if (a == 1 && b == 1) return false;
    if (a == 2 && b == 2) return false;
    if ((a == 1 && b == 3) || (a == 3 && b == 1)) return false;
  }
  return true;
}

}  // namespace ccol

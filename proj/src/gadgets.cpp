#include "ccol/gadgets.hpp"

#include <algorithm>
#include <sstream>

namespace ccol {

std::string reduction_map_json(const ReductionMap& map) {
  std::ostringstream o;
  o << "{\"original_n\":" << map.original_n << ",\"gadgets\":[";
  for (std::size_t i = 0; i < map.gadgets.size(); ++i) {
    const GadgetRecord& g = map.gadgets[i];
    if (i) o << ",";
    o << "{\"kind\":\"" << (g.kind == GadgetKind::type_one ? "type_one" : "type_two")
      << "\",\"colour\":\"" << colour_char(g.colour) << "\",\"vertices\":[";
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
      if (k) o << ",";
      o << g.vertices[k];
    }
    o << "]";
    if (g.anchor_edge)
      o << ",\"anchor_edge\":[" << g.anchor_edge->first << "," << g.anchor_edge->second << "]";
    o << "}";
  }
  o << "],\"colour_value_map\":{\"R\":[2],\"G\":[1,3],\"B\":[4]}}";
  return o.str();
}

ReductionBuilder::ReductionBuilder(const EdgeColouring& original)
    : graph_(original), original_n_(original.vertex_count()) {
  owner_.assign(original_n_, -1);
  assigned_.assign(static_cast<std::size_t>(original_n_) * original_n_, 1);
}

void ReductionBuilder::assign(int u, int v, Colour c) {
  const int n = graph_.vertex_count();
  if (assigned_[static_cast<std::size_t>(u) * n + v])
    throw contract_error("pair (" + std::to_string(u) + "," + std::to_string(v) +
                         ") assigned twice");
  assigned_[static_cast<std::size_t>(u) * n + v] = 1;
  assigned_[static_cast<std::size_t>(v) * n + u] = 1;
  graph_.set_colour(u, v, c);
}

Colour ReductionBuilder::default_colour_to(Colour x, int existing) const {
  const int owner = owner_[existing];
  if (owner < 0) return successor(x);  // original vertex outside S
  const GadgetRecord& g = gadgets_[owner];
  if (g.kind == GadgetKind::type_two) return g.role_y;
  return g.colour == x ? successor(x) : third_colour(x, g.colour);
}

const GadgetRecord& ReductionBuilder::add_type_one(Colour x, std::span<const int> s) {
  std::vector<char> in_s(original_n_, 0);
  for (int v : s) {
    if (v < 0 || v >= original_n_)
      throw contract_error("type-one gadget S must contain original vertices only");
    in_s[v] = 1;
  }
  const Colour y = successor(x);
  const Colour z = third_colour(x, y);
  const int m = graph_.vertex_count();

  EdgeColouring grown(m + 4);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) grown.set_colour(u, v, graph_.colour(u, v));
  graph_ = std::move(grown);
  assigned_.assign(static_cast<std::size_t>(m + 4) * (m + 4), 0);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v)
      assigned_[static_cast<std::size_t>(u) * (m + 4) + v] = 1;

  assign(m + 0, m + 1, y);
  assign(m + 2, m + 3, y);
  assign(m + 0, m + 2, z);
  assign(m + 0, m + 3, z);
  assign(m + 1, m + 2, z);
  assign(m + 1, m + 3, z);
  for (int e = 0; e < m; ++e) {
    const Colour c = (owner_[e] < 0 && in_s[e]) ? x : default_colour_to(x, e);
    for (int f = m; f < m + 4; ++f) assign(e, f, c);
  }

  verify_complete();
  GadgetRecord rec{GadgetKind::type_one, x, y, z, {m, m + 1, m + 2, m + 3}, std::nullopt};
  gadgets_.push_back(std::move(rec));
  owner_.insert(owner_.end(), 4, static_cast<int>(gadgets_.size()) - 1);
  return gadgets_.back();
}

void ReductionBuilder::verify_complete() const {
  const int n = graph_.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!assigned_[static_cast<std::size_t>(u) * n + v])
        throw contract_error("pair (" + std::to_string(u) + "," + std::to_string(v) +
                             ") left unassigned");
}

const GadgetRecord& ReductionBuilder::add_type_two(int u, int w, Colour x,
                                                   const GadgetRecord& anchor) {
  if (u < 0 || u >= original_n_ || w < 0 || w >= original_n_ || u == w)
    throw contract_error("type-two gadget guards a pair of distinct original vertices");
  const Colour y = successor(x);
  if (anchor.kind != GadgetKind::type_one || anchor.colour != y)
    throw contract_error("type-two gadget requires the type-one gadget of the successor colour");
  bool anchored = false;
  for (const GadgetRecord& g : gadgets_) anchored = anchored || g == anchor;
  if (!anchored) throw contract_error("anchor gadget does not belong to this reduction");

  const Colour z = third_colour(x, y);
  const int m = graph_.vertex_count();
  const int v0 = m, v1 = m + 1;

  EdgeColouring grown(m + 2);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) grown.set_colour(a, b, graph_.colour(a, b));
  graph_ = std::move(grown);
  assigned_.assign(static_cast<std::size_t>(m + 2) * (m + 2), 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      assigned_[static_cast<std::size_t>(a) * (m + 2) + b] = 1;

  assign(v0, v1, z);
  assign(u, v0, x);
  assign(w, v1, x);
  assign(u, v1, y);
  assign(w, v0, y);
  // Everything else, the anchor gadget included, connects by Y-edges.
  for (int e = 0; e < m; ++e) {
    if (e == u || e == w) continue;
    assign(e, v0, y);
    assign(e, v1, y);
  }

  verify_complete();
  GadgetRecord rec{GadgetKind::type_two, x, y, z, {v0, v1}, std::make_pair(u, w)};
  gadgets_.push_back(std::move(rec));
  owner_.insert(owner_.end(), 2, static_cast<int>(gadgets_.size()) - 1);
  return gadgets_.back();
}

std::pair<EdgeColouring, ReductionMap> reduce_list_3cc(const EdgeColouring& inst,
                                                       const ColourLists& lists) {
  const int n = inst.vertex_count();
  if (static_cast<int>(lists.size()) != n)
    throw contract_error("list table size does not match vertex count");
  ReductionBuilder builder(inst);
  for (Colour c : kColours) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (!lists[v].contains(c)) s.push_back(v);
    builder.add_type_one(c, s);
  }
  return {builder.graph(), builder.map()};
}

std::pair<EdgeColouring, ReductionMap> reduce_stubborn(const StubbornInstance& inst) {
  const int n = inst.vertex_count();
  EdgeColouring base(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      base.set_colour(u, v, inst.has_edge(u, v) ? Colour::R : Colour::B);

  std::vector<int> s_r, s_g, s_b;
  for (int v = 0; v < n; ++v) {
    if (!inst.list_allows(v, 2)) s_r.push_back(v);
    if (!inst.list_allows(v, 1) && !inst.list_allows(v, 3)) s_g.push_back(v);
    if (!inst.list_allows(v, 4)) s_b.push_back(v);
  }

  ReductionBuilder builder(base);
  builder.add_type_one(Colour::R, s_r);
  builder.add_type_one(Colour::G, s_g);
  const GadgetRecord anchor = builder.add_type_one(Colour::B, s_b);
  for (const auto& [u, w] : inst.edges())
    if (!(inst.list_allows(u, 3) && inst.list_allows(w, 3)))
      builder.add_type_two(u, w, Colour::G, anchor);
  return {builder.graph(), builder.map()};
}

StubbornColouring map_back_stubborn(const ReductionMap& map, const StubbornInstance& inst,
                                    const VertexColouring& phi) {
  if (map.original_n != inst.vertex_count())
    throw contract_error("reduction map does not match the instance");
  if (static_cast<int>(phi.size()) < map.original_n)
    throw contract_error("reduced colouring smaller than the original vertex set");
  StubbornColouring out(map.original_n);
  for (int v = 0; v < map.original_n; ++v) {
    switch (phi[v]) {
      case Colour::R: out[v] = 2; break;
      case Colour::B: out[v] = 4; break;
      case Colour::G: out[v] = inst.list_allows(v, 3) ? 3 : 1; break;
    }
  }
  // A feasible reduced colouring always maps to a feasible one, so a failure
  // here means the input colouring violated the precondition.
  if (!feasible_stubborn(inst, out))
    throw contract_error("input colouring is not feasible for the reduced instance");
  return out;
}

StubbornVerdict solve_stubborn(const StubbornInstance& inst, const SolveOptions& opts) {
  auto [reduced, map] = reduce_stubborn(inst);
  StubbornVerdict out;
  out.reduced_n = reduced.vertex_count();
  Verdict verdict = solve(reduced, opts);
  out.stats = verdict.stats;
  if (verdict.sat()) out.colouring = map_back_stubborn(map, inst, *verdict.colouring);
  return out;
}

}  // namespace ccol

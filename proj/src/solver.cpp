#include "ccol/solver.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "ccol/two_colour.hpp"

namespace ccol {

SolverState::SolverState(const VertexColouring& phi0) {
  recs_.resize(phi0.size());
  for (std::size_t v = 0; v < phi0.size(); ++v) recs_[v].phi0 = phi0[v];
}

void SolverState::enqueue_pending(int v, Colour decided) {
  VertexRecord& r = recs_.at(v);
  if (r.status != VertexStatus::open)
    throw contract_error("vertex " + std::to_string(v) + " is not open");
  if (!r.admissible.contains(decided))
    throw contract_error("decided colour not admissible for vertex " + std::to_string(v));
  r.status = VertexStatus::pending;
  r.decided = decided;
  r.admissible = ColourSet::of(decided);
  queue_.push_back(v);
}

int SolverState::dequeue_pending() {
  if (queue_empty()) throw contract_error("pending queue is empty");
  return queue_[qhead_++];
}

namespace {

bool in_free(const VertexRecord& r, Colour x) {
  return r.status == VertexStatus::open && r.phi0 == x && r.admissible == ColourSet::full();
}

bool in_todo(const VertexRecord& r, Colour x) {
  return r.status == VertexStatus::open && r.phi0 == x &&
         r.admissible == ColourSet::full().without(x);
}

bool in_u(const VertexRecord& r, Colour x) { return in_free(r, x) || in_todo(r, x); }

std::string set_name(const VertexRecord& r) {
  const std::string x(1, colour_char(r.phi0));
  switch (r.status) {
    case VertexStatus::settled:
      return std::string("Set[") + colour_char(r.decided) + "]";
    case VertexStatus::pending:
      return std::string("ToSet[") + colour_char(r.decided) + "]";
    case VertexStatus::open:
      if (r.admissible == ColourSet::full()) return "Free[" + x + "]";
      if (r.admissible == ColourSet::full().without(r.phi0)) return "ToDo[" + x + "]";
      for (Colour m : kColours)
        if (!r.admissible.contains(m)) return "Forbid[" + x + "][" + colour_char(m) + "]";
      return "Open[" + x + "]";
  }
  return "?";
}

}  // namespace

std::vector<int> SolverState::free_set(Colour x) const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (in_free(recs_[v], x)) out.push_back(v);
  return out;
}

std::vector<int> SolverState::todo_set(Colour x) const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (in_todo(recs_[v], x)) out.push_back(v);
  return out;
}

std::vector<int> SolverState::forbid_set(Colour x, Colour missing) const {
  if (missing == x) throw contract_error("Forbid[X][X] is not one of the eighteen sets");
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    const VertexRecord& r = recs_[v];
    if (r.status == VertexStatus::open && r.phi0 == x &&
        r.admissible == ColourSet::full().without(missing))
      out.push_back(v);
  }
  return out;
}

std::vector<int> SolverState::toset_set(Colour x) const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (recs_[v].status == VertexStatus::pending && recs_[v].decided == x) out.push_back(v);
  return out;
}

std::vector<int> SolverState::settled_set(Colour x) const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (recs_[v].status == VertexStatus::settled && recs_[v].decided == x) out.push_back(v);
  return out;
}

long long potential(const SolverState& state) {
  long long total = 0;
  for (int v = 0; v < state.size(); ++v) {
    const VertexRecord& r = state.record(v);
    switch (r.status) {
      case VertexStatus::open:
        total += r.admissible.size() == 3 ? 3 : 2;
        break;
      case VertexStatus::pending:
        total += 1;
        break;
      case VertexStatus::settled:
        break;
    }
  }
  return total;
}

unsigned long long mass(const SolverState& state) {
  std::array<unsigned long long, 3> count{0, 0, 0};
  for (int v = 0; v < state.size(); ++v) {
    const VertexRecord& r = state.record(v);
    if (in_u(r, r.phi0)) ++count[static_cast<unsigned>(r.phi0)];
  }
  return (count[0] + 1) * (count[1] + 1) * (count[2] + 1);
}

std::optional<InvariantViolation> check_proper_invariants(const EdgeColouring& inst,
                                                          const SolverState& state) {
  const int n = state.size();
  if (inst.vertex_count() < n)
    throw contract_error("instance smaller than solver state");
  for (Colour x : kColours) {
    std::vector<char> fam1(n, 0), fam2(n, 0);
    for (int v = 0; v < n; ++v) {
      const VertexRecord& r = state.record(v);
      if (r.status == VertexStatus::settled && r.decided == x) fam1[v] = 1;
      if (r.status == VertexStatus::open && r.phi0 == x) {
        fam2[v] = 1;
        if (r.admissible.contains(x)) fam1[v] = 1;
      }
    }
    for (int u = 0; u < n; ++u) {
      if (!fam1[u] && !fam2[u]) continue;
      for (int v = u + 1; v < n; ++v) {
        if (inst.colour(u, v) != x) continue;
        const bool viol1 = fam1[u] && fam1[v];
        const bool viol2 = fam2[u] && fam2[v];
        if (viol1 || viol2) {
          std::ostringstream msg;
          msg << "invariant " << (viol1 && viol2 ? "1 and 2" : viol1 ? "1" : "2")
              << " violated: edge (" << u << "," << v << ") of colour " << colour_char(x)
              << " joins " << set_name(state.record(u)) << " and "
              << set_name(state.record(v));
          return InvariantViolation{viol1, viol2, x, u, v, msg.str()};
        }
      }
    }
  }
  return std::nullopt;
}

ShiftOutcome shift(const EdgeColouring& inst, SolverState& state) {
  const int v = state.dequeue_pending();
  const int n = state.size();
  {
    VertexRecord rv = state.record(v);
    rv.status = VertexStatus::settled;
    state.set_record(v, rv);
  }
  const Colour x = state.record(v).decided;

  bool conflict = false;
  for (int w = 0; w < n; ++w) {
    if (w == v || inst.colour(v, w) != x) continue;
    const VertexRecord& rw = state.record(w);
    if (rw.status == VertexStatus::settled) {
      if (rw.decided == x) conflict = true;
      continue;
    }
    if (rw.status == VertexStatus::pending) continue;
    if (!rw.admissible.contains(x)) continue;
    VertexRecord nw = rw;
    nw.admissible = nw.admissible.without(x);
    state.set_record(w, nw);
    if (nw.admissible.size() == 1) state.enqueue_pending(w, nw.admissible.lowest());
  }
  return conflict ? ShiftOutcome::ConflictNo : ShiftOutcome::Continue;
}

ResolveResult resolve(const EdgeColouring& inst, SolverState& state, Colour x) {
  if (!state.queue_empty())
    throw contract_error("resolve requires an empty pending queue");
  const std::vector<int> todo = state.todo_set(x);
  if (todo.empty())
    throw contract_error(std::string("resolve requires nonempty ToDo[") + colour_char(x) + "]");

  const ColourSet palette = ColourSet::full().without(x);
  const TwoColourVerdict verdict = classify(inst, todo, palette);

  if (const Boring* b = std::get_if<Boring>(&verdict)) {
    const Colour take = palette.without(b->forbidden).lowest();
    state.enqueue_pending(b->vertex, take);
    return ForcedMove{b->vertex, take};
  }

  const AllInteresting& all = std::get<AllInteresting>(verdict);
  const Colour y = all.monochrome ? *all.monochrome : palette.lowest();
  const Colour z = palette.without(y).lowest();

  std::vector<SolverState> branches;
  branches.reserve(todo.size() + 1);
  branches.push_back(state);
  for (int v : todo) branches.back().enqueue_pending(v, z);
  for (int chosen : todo) {
    branches.push_back(state);
    for (int v : todo) branches.back().enqueue_pending(v, v == chosen ? y : z);
  }
  return branches;
}

InvariantChecker::InvariantChecker(const EdgeColouring& inst, int prefix_n)
    : n_(prefix_n), words_((prefix_n + 63) / 64) {
  if (inst.vertex_count() < prefix_n) throw contract_error("instance smaller than the prefix");
  for (auto& rows : rows_) rows.assign(static_cast<std::size_t>(n_) * words_, 0);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) {
      auto& rows = rows_[static_cast<unsigned>(inst.colour(u, v))];
      rows[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ull << (v % 64);
      rows[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ull << (u % 64);
    }
}

bool InvariantChecker::holds(const SolverState& state) const {
  if (state.size() != n_) throw contract_error("state size does not match the checker");
  std::vector<std::uint64_t> fam1(words_), fam2(words_);
  for (Colour x : kColours) {
    std::fill(fam1.begin(), fam1.end(), 0);
    std::fill(fam2.begin(), fam2.end(), 0);
    for (int v = 0; v < n_; ++v) {
      const VertexRecord& r = state.record(v);
      if (r.status == VertexStatus::settled && r.decided == x)
        fam1[v / 64] |= 1ull << (v % 64);
      else if (r.status == VertexStatus::open && r.phi0 == x) {
        fam2[v / 64] |= 1ull << (v % 64);
        if (r.admissible.contains(x)) fam1[v / 64] |= 1ull << (v % 64);
      }
    }
    const std::uint64_t* rows = rows_[static_cast<unsigned>(x)].data();
    for (int v = 0; v < n_; ++v) {
      const bool f1 = (fam1[v / 64] >> (v % 64)) & 1u;
      const bool f2 = (fam2[v / 64] >> (v % 64)) & 1u;
      if (!f1 && !f2) continue;
      const std::uint64_t* row = rows + static_cast<std::size_t>(v) * words_;
      for (int k = 0; k < words_; ++k) {
        if (f1 && (row[k] & fam1[k])) return false;
        if (f2 && (row[k] & fam2[k])) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Search driver

namespace {

struct Search {
  const EdgeColouring& inst;
  int n;
  StatsCounter& st;
  SolveOptions opts;
  long long root_pot = 0;
  unsigned long long root_mass = 1;
  std::uint64_t branch_leaves = 0;
  std::optional<InvariantChecker> checker;
  int words = 0;

  struct Out {
    bool sat = false;
    VertexColouring colouring;
    unsigned long long drained_mass = 1;
    std::vector<std::uint64_t> ux;  // after-drain Free u ToDo of the captured colour
  };

  void check_state_invariants(const SolverState& s) {
    if (!checker->holds(s)) ++st.invariant_violations;
  }

  bool drain(SolverState& s, std::uint64_t& ops) {
    bool alive = true;
    while (!s.queue_empty()) {
      const long long before = potential(s);
      const ShiftOutcome outcome = shift(inst, s);
      ++st.shifts;
      ++ops;
      if (potential(s) >= before) ++st.potential_violations;
      if (outcome == ShiftOutcome::ConflictNo) alive = false;
      if (opts.check_invariants && alive) check_state_invariants(s);
    }
    return alive;
  }

  void leaf(std::uint64_t ops) {
    ++st.leaves;
    ++branch_leaves;
    st.max_ops_per_path = std::max(st.max_ops_per_path, ops);
    if (ops > static_cast<std::uint64_t>(root_pot)) ++st.path_bound_violations;
  }

  std::vector<std::uint64_t> u_bits(const SolverState& s, Colour x) const {
    std::vector<std::uint64_t> out(words, 0);
    for (int v = 0; v < n; ++v)
      if (in_u(s.record(v), x)) out[v / 64] |= 1ull << (v % 64);
    return out;
  }

  std::vector<std::uint64_t> free_bits(const SolverState& s, Colour x) const {
    std::vector<std::uint64_t> out(words, 0);
    for (int v = 0; v < n; ++v)
      if (in_free(s.record(v), x)) out[v / 64] |= 1ull << (v % 64);
    return out;
  }

  std::optional<Colour> smallest_todo(const SolverState& s) const {
    std::array<bool, 3> has{false, false, false};
    for (int v = 0; v < n; ++v) {
      const VertexRecord& r = s.record(v);
      if (in_todo(r, r.phi0)) has[static_cast<unsigned>(r.phi0)] = true;
    }
    for (Colour c : kColours)
      if (has[static_cast<unsigned>(c)]) return c;
    return std::nullopt;
  }

  Out explore(SolverState s, std::uint64_t ops, std::optional<Colour> capture) {
    Out out;
    bool alive = drain(s, ops);
    out.drained_mass = mass(s);
    if (capture) out.ux = u_bits(s, *capture);
    if (!alive) {
      leaf(ops);
      return out;
    }

    for (;;) {
      const std::optional<Colour> x = smallest_todo(s);
      if (!x) {
        out.sat = true;
        out.colouring.resize(n);
        for (int v = 0; v < n; ++v) {
          const VertexRecord& r = s.record(v);
          out.colouring[v] = r.status == VertexStatus::settled ? r.decided : r.phi0;
        }
        leaf(ops);
        return out;
      }

      const long long before = potential(s);
      ResolveResult rr = resolve(inst, s, *x);

      if (std::holds_alternative<ForcedMove>(rr)) {
        ++st.boring_resolves;
        ++ops;
        if (potential(s) >= before) ++st.potential_violations;
        if (opts.check_invariants) check_state_invariants(s);
        alive = drain(s, ops);
        if (!alive) {
          leaf(ops);
          return out;
        }
        continue;
      }

      auto& branches = std::get<std::vector<SolverState>>(rr);
      ++st.branch_nodes;
      ++ops;  // the branch event itself counts on every path through it
      const unsigned long long parent_mass = mass(s);
      std::vector<std::uint64_t> parent_free, seen;
      if (opts.check_invariants) {
        parent_free = free_bits(s, *x);
        seen.assign(words, 0);
      }

      unsigned long long child_mass_sum = 0;
      for (auto& child : branches) {
        if (potential(child) >= before) ++st.potential_violations;
        Out res = explore(std::move(child), ops,
                          opts.check_invariants ? std::optional<Colour>(*x) : std::nullopt);
        child_mass_sum += res.drained_mass;
        if (child_mass_sum > parent_mass) ++st.mass_violations;
        if (opts.check_invariants) {
          for (int k = 0; k < words; ++k) {
            if ((res.ux[k] & ~parent_free[k]) || (res.ux[k] & seen[k])) {
              ++st.disjointness_violations;
              break;
            }
          }
          for (int k = 0; k < words; ++k) seen[k] |= res.ux[k];
        }
        if (res.sat) {
          out.sat = true;
          out.colouring = std::move(res.colouring);
          return out;
        }
      }
      return out;
    }
  }
};

// One compression step over the first `n` vertices of `inst`; phi0[v0] is a
// placeholder (v0 starts pending in each root branch).
std::optional<VertexColouring> witness_search(const EdgeColouring& inst, int n,
                                              const VertexColouring& phi0, int v0,
                                              const SolveOptions& opts, StatsCounter& st) {
  Search ctx{inst, n, st, opts};
  ctx.words = (n + 63) / 64;
  if (opts.check_invariants) ctx.checker.emplace(inst, n);

  const SolverState base(phi0);
  bool measured = false;
  for (Colour x : kColours) {
    SolverState s = base;
    s.enqueue_pending(v0, x);
    if (!measured) {
      measured = true;
      ctx.root_pot = potential(s);
      ctx.root_mass = mass(s);
      st.root_potential = std::max(st.root_potential, ctx.root_pot);
      st.root_mass = std::max(st.root_mass, ctx.root_mass);
    }
    if (opts.check_invariants && check_proper_invariants(inst, s)) ++st.invariant_violations;
    ctx.branch_leaves = 0;
    Search::Out out = ctx.explore(std::move(s), 0, std::nullopt);
    st.max_leaves_per_branch = std::max(st.max_leaves_per_branch, ctx.branch_leaves);
    if (ctx.branch_leaves > ctx.root_mass) ++st.leaf_bound_violations;
    if (out.sat) return std::move(out.colouring);
  }
  return std::nullopt;
}

}  // namespace

Verdict solve_with_witness(const EdgeColouring& inst, const VertexColouring& phi0, int v0,
                           const SolveOptions& opts) {
  const int n = inst.vertex_count();
  if (static_cast<int>(phi0.size()) != n)
    throw contract_error("phi0 size does not match vertex count");
  if (v0 < 0 || v0 >= n) throw contract_error("v0 out of range");
  for (int u = 0; u < n; ++u) {
    if (u == v0) continue;
    for (int v = u + 1; v < n; ++v) {
      if (v == v0) continue;
      if (phi0[u] == phi0[v] && inst.colour(u, v) == phi0[u])
        throw contract_error("phi0 is not feasible on V minus v0: edge (" + std::to_string(u) +
                             "," + std::to_string(v) + ")");
    }
  }
  Verdict verdict;
  verdict.colouring = witness_search(inst, n, phi0, v0, opts, verdict.stats);
  return verdict;
}

Verdict solve(const EdgeColouring& inst, const SolveOptions& opts) {
  Verdict out;
  const int n = inst.vertex_count();
  if (n == 0) {
    out.colouring = VertexColouring{};
    return out;
  }
  VertexColouring phi{Colour::R};
  for (int i = 2; i <= n; ++i) {
    phi.push_back(Colour::R);  // placeholder for the new vertex
    auto extended = witness_search(inst, i, phi, i - 1, opts, out.stats);
    if (!extended) return out;
    phi = std::move(*extended);
  }
  out.colouring = std::move(phi);
  return out;
}

std::string stats_json(const StatsCounter& stats, bool sat, double wall_time_ms) {
  std::ostringstream o;
  o << "{\"shifts\":" << stats.shifts << ",\"boring_resolves\":" << stats.boring_resolves
    << ",\"branch_nodes\":" << stats.branch_nodes << ",\"leaves\":" << stats.leaves
    << ",\"max_ops_per_path\":" << stats.max_ops_per_path
    << ",\"root_potential\":" << stats.root_potential << ",\"root_mass\":" << stats.root_mass
    << ",\"verdict\":\"" << (sat ? "SAT" : "UNSAT") << "\",\"wall_time_ms\":" << wall_time_ms
    << "}";
  return o.str();
}

}  // namespace ccol

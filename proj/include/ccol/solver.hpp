#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ccol/instance.hpp"

namespace ccol {

enum class VertexStatus : std::uint8_t { open, pending, settled };

// Per-vertex solver record. The classic eighteen-set view is derived:
// for an open vertex with previous colour X,
//   admissible = {R,G,B}       -> Free[X]
//   admissible = {R,G,B}\{X}   -> ToDo[X]
//   admissible = {X,Z}         -> Forbid[X][Y]  (Y the missing colour)
// a pending vertex with decided X is ToSet[X], a settled one is Set[X].
struct VertexRecord {
  Colour phi0 = Colour::R;
  ColourSet admissible = ColourSet::full();
  VertexStatus status = VertexStatus::open;
  Colour decided = Colour::R;  // meaningful for pending/settled

  bool operator==(const VertexRecord&) const = default;
};

// Solver state over vertices 0..n-1 plus the FIFO queue of pending vertices.
class SolverState {
 public:
  SolverState() = default;
  // Everything open with full admissible sets and the given previous colours.
  explicit SolverState(const VertexColouring& phi0);

  int size() const noexcept { return static_cast<int>(recs_.size()); }
  const VertexRecord& record(int v) const { return recs_.at(v); }
  void set_record(int v, VertexRecord r) { recs_.at(v) = r; }

  // Open -> pending with the given decision, enqueued FIFO.
  void enqueue_pending(int v, Colour decided);
  bool queue_empty() const noexcept { return qhead_ == queue_.size(); }
  int dequeue_pending();

  // Derived-set views, each sorted ascending.
  std::vector<int> free_set(Colour x) const;
  std::vector<int> todo_set(Colour x) const;
  std::vector<int> forbid_set(Colour x, Colour missing) const;
  std::vector<int> toset_set(Colour x) const;
  std::vector<int> settled_set(Colour x) const;

  bool operator==(const SolverState&) const = default;

 private:
  std::vector<VertexRecord> recs_;
  std::vector<int> queue_;
  std::size_t qhead_ = 0;
};

// Weighted state size: 3 per fully-free vertex, 2 per open vertex with two
// admissible colours, 1 per pending vertex. Strictly decreases with every
// shift and forced resolve.
long long potential(const SolverState& state);

// Product over colours X of |Free[X] u ToDo[X]| + 1; bounds the leaves of
// each recursion tree.
unsigned long long mass(const SolverState& state);

struct InvariantViolation {
  bool invariant1;
  bool invariant2;
  Colour colour;
  int u, v;
  std::string message;
};

// Checks both invariant families for all three colours:
//  1. no X-edge inside Set[X] u Free[X] u Forbid[X][.].
//  2. no X-edge inside ToDo[X] u Free[X] u Forbid[X][.].
std::optional<InvariantViolation> check_proper_invariants(const EdgeColouring& inst,
                                                          const SolverState& state);

// Bitset-accelerated equivalent of check_proper_invariants over a fixed
// instance prefix; the solver's per-shift verification mode uses this.
class InvariantChecker {
 public:
  InvariantChecker(const EdgeColouring& inst, int prefix_n);
  bool holds(const SolverState& state) const;

 private:
  int n_ = 0, words_ = 0;
  std::array<std::vector<std::uint64_t>, 3> rows_;
};

enum class ShiftOutcome { Continue, ConflictNo };

// Settles the front pending vertex v (decided colour X) and propagates along
// its X-edges: every open neighbour loses X from its admissible set, becoming
// pending when a single colour remains. A settled X-neighbour means the
// branch is infeasible; the scan still completes so the state stays usable
// for accounting.
ShiftOutcome shift(const EdgeColouring& inst, SolverState& state);

struct ForcedMove {
  int vertex;
  Colour decided;
};

// ForcedMove: the state was mutated, one boring vertex became pending.
// Branch list: the state is untouched and each successor enqueued its moves.
using ResolveResult = std::variant<ForcedMove, std::vector<SolverState>>;

// Recolours ToDo[X] inside the two remaining colours: a boring vertex forces
// one move, otherwise one successor per feasible colouring of the set
// (|ToDo[X]| + 1 branches).
ResolveResult resolve(const EdgeColouring& inst, SolverState& state, Colour x);

struct StatsCounter {
  std::uint64_t shifts = 0;
  std::uint64_t boring_resolves = 0;
  std::uint64_t branch_nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t max_ops_per_path = 0;
  long long root_potential = 0;      // max over compression steps
  unsigned long long root_mass = 1;  // max over compression steps

  // Instrumented bound checks; all zero on every valid run.
  std::uint64_t potential_violations = 0;
  std::uint64_t mass_violations = 0;
  std::uint64_t disjointness_violations = 0;
  std::uint64_t path_bound_violations = 0;
  std::uint64_t leaf_bound_violations = 0;
  std::uint64_t invariant_violations = 0;

  std::uint64_t max_leaves_per_branch = 0;
};

struct Verdict {
  std::optional<VertexColouring> colouring;
  StatsCounter stats;

  bool sat() const noexcept { return colouring.has_value(); }
};

struct SolveOptions {
  // Run the O(n^2) proper-invariant checks after initialization and after
  // every shift and forced resolve, plus the branch-disjointness checks.
  bool check_invariants = false;
};

// One compression step: phi0 restricted to V \ {v0} must be feasible; the
// three root branches decide v0's colour.
Verdict solve_with_witness(const EdgeColouring& inst, const VertexColouring& phi0, int v0,
                           const SolveOptions& opts = {});

// Full solve by iterative compression over the input vertex order.
Verdict solve(const EdgeColouring& inst, const SolveOptions& opts = {});

// Fixed-key JSON form of the counters:
// {shifts, boring_resolves, branch_nodes, leaves, max_ops_per_path,
//  root_potential, root_mass, verdict, wall_time_ms}
std::string stats_json(const StatsCounter& stats, bool sat, double wall_time_ms);

}  // namespace ccol

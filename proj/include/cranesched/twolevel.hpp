#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "cranesched/core.hpp"
#include "cranesched/eulerian.hpp"

namespace cranesched {

/// Two-level slot graph. For the p-th occupied slot, the upper vertex a has id p and the
/// lower vertex b has id slots.size() + p, so every upper id is smaller than every lower id.
/// Each job contributes an original arc a_{origin} -> b_{dest}.
struct TwoLevelGraph {
  std::vector<Slot> slots;
  std::vector<Job> jobs;
  std::vector<Arc> original;
  int eta = 1;
  int buffer = 0;

  int slot_count() const noexcept { return static_cast<int>(slots.size()); }
  int vertex_count() const noexcept { return 2 * slot_count(); }
  int position_of(Slot slot) const;  // index into slots; throws if unoccupied
  bool occupied(Slot slot) const;
  int upper(Slot slot) const { return position_of(slot); }
  int lower(Slot slot) const { return slot_count() + position_of(slot); }
  bool is_upper(int vertex) const noexcept { return vertex < slot_count(); }
  Slot slot_of(int vertex) const;
};

/// Job id -> upper endpoint slot y of its auxiliary edge b_{dest} -> a_y. May be partial.
using AuxAssignment = std::map<JobId, Slot>;

enum class FeasibilityIssue {
  none,
  wrong_count,
  unknown_job,
  endpoint_unoccupied,
  outside_window,
  lower_unbalanced,
};

struct Feasibility {
  FeasibilityIssue issue = FeasibilityIssue::none;
  JobId job = -1;

  explicit operator bool() const noexcept { return issue == FeasibilityIssue::none; }
};

std::string to_string(FeasibilityIssue issue);

TwoLevelGraph build_two_level(const Instance& instance);

Feasibility check_feasible(const TwoLevelGraph& graph, const AuxAssignment& assignment, int buffer);
inline bool is_feasible(const TwoLevelGraph& graph, const AuxAssignment& assignment, int buffer) {
  return static_cast<bool>(check_feasible(graph, assignment, buffer));
}

/// Original plus auxiliary arcs of G(A), on TwoLevelGraph vertex ids.
std::vector<Arc> augmented_arcs(const TwoLevelGraph& graph, const AuxAssignment& assignment);

/// f(G(A)) by the closed formula. Throws ValidationError if A is infeasible.
int evaluate_fGA(const TwoLevelGraph& graph, const AuxAssignment& assignment);

/// 1/2 * sum over upper vertices of |in - out| in G(A). Helper for the greedy's objective.
int imbalance_term(const TwoLevelGraph& graph, const AuxAssignment& assignment);

/// Completes `partial` by giving each pending job, in increasing (dest, id) order, the
/// leftmost occupied slot in [dest - e, dest + e] whose upper vertex currently has
/// fewer incoming than outgoing arcs, else dest itself.
AuxAssignment greedy_assign(const TwoLevelGraph& graph, int buffer,
                            std::span<const JobId> pending, const AuxAssignment& partial);

/// Penalty edges, Euler path, and the job order read off the pieces between penalties.
struct Reconstruction {
  Schedule schedule;
  std::vector<euler::AddedArc> penalties;  // upper-level vertex ids
};

Reconstruction reconstruct_from_assignment(const TwoLevelGraph& graph,
                                           const AuxAssignment& assignment);
Schedule schedule_from_assignment(const TwoLevelGraph& graph, const AuxAssignment& assignment);

struct ApproxOptions {
  /// Enumerate k-subsets of jobs instead of ordered k-tuples. Same minimum, far fewer leaves.
  bool canonical_order = true;
};

struct ApproxResult {
  Schedule schedule;
  AuxAssignment assignment;
  int f_value = 0;
  long long leaves = 0;  // greedy completions evaluated
};

/// DFS over endpoints for k auxiliary edges, greedy for the rest. Energy <= opt + (n - k).
ApproxResult approx_solve_detailed(const Instance& instance, int k, ApproxOptions options = {});
Schedule approx_solve(const Instance& instance, int k, ApproxOptions options = {});

}  // namespace cranesched

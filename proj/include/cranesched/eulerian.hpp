#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cranesched/core.hpp"

namespace cranesched {

/// Directed arc between dense vertex ids. `job` is negative for arcs that carry no job.
struct Arc {
  int from = 0;
  int to = 0;
  JobId job = -1;

  friend bool operator==(const Arc&, const Arc&) = default;
};

enum class AddedRole { connector, balancer };

namespace euler {

// Multigraph machinery on vertex ids [0, num_vertices). Vertices without arcs are
// treated as absent. "Smallest vertex" below means smallest id, so callers choose the
// id order to steer the deterministic picks.

/// 1/2 * sum |in - out| + (# Eulerian weakly connected components) - 1.
/// Throws ValidationError when there are no arcs.
int semi_eulerization_count(int num_vertices, std::span<const Arc> arcs);

struct AddedArc {
  int from = 0;
  int to = 0;
  AddedRole role = AddedRole::connector;

  friend bool operator==(const AddedArc&, const AddedArc&) = default;
};

/// Constructive semi-Eulerization: chain the components with connectors, then add
/// balancers from an in-surplus vertex to an out-surplus vertex until at most one
/// of each remains. Output size equals semi_eulerization_count.
std::vector<AddedArc> semi_eulerize(int num_vertices, std::span<const Arc> arcs);

/// Weakly connected over non-isolated vertices, and either balanced or exactly one
/// +1/-1 pair.
bool is_semi_eulerian(int num_vertices, std::span<const Arc> arcs);

/// Hierholzer traversal. Returns indices into `arcs` in path order. Starts at the
/// out-surplus vertex, else at `preferred_start` if it has arcs, else at the smallest
/// vertex with arcs. Throws ValidationError if the graph is not semi-Eulerian.
std::vector<int> euler_path(int num_vertices, std::span<const Arc> arcs,
                            std::optional<int> preferred_start = std::nullopt);

/// Cuts the path at arcs flagged in `is_cut` and returns the job ids of each piece.
/// Pieces without jobs are dropped.
std::vector<std::vector<JobId>> split_path(std::span<const Arc> arcs, std::span<const int> path,
                                           const std::vector<bool>& is_cut);

}  // namespace euler

/// Zero-buffer job graph: one vertex per occupied slot, one arc per job.
struct SlotMultiDigraph {
  std::vector<Slot> slots;  // vertex v stands for slots[v]; ascending
  std::vector<Arc> edges;   // endpoints are vertex indices

  int vertex_of(Slot slot) const;
  int vertex_count() const noexcept { return static_cast<int>(slots.size()); }
  int in_degree(int vertex) const;
  int out_degree(int vertex) const;
};

struct AddedEdge {
  Slot from = 0;
  Slot to = 0;
  AddedRole role = AddedRole::connector;

  friend bool operator==(const AddedEdge&, const AddedEdge&) = default;
};

struct AddedEdgeSet {
  std::vector<AddedEdge> edges;
};

/// One traversed edge of an Euler path, in slot coordinates. `job` is empty for added edges.
struct PathStep {
  Slot from = 0;
  Slot to = 0;
  std::optional<JobId> job;

  friend bool operator==(const PathStep&, const PathStep&) = default;
};

SlotMultiDigraph build_job_graph(const Instance& instance);
int f_of_G(const SlotMultiDigraph& graph);
AddedEdgeSet semi_eulerize(const SlotMultiDigraph& graph);
bool is_semi_eulerian(const SlotMultiDigraph& graph, const AddedEdgeSet& added);
std::vector<PathStep> euler_path(const SlotMultiDigraph& graph, const AddedEdgeSet& added);

/// Exact solver for buffer 0: energy = f_of_G + 1.
Schedule solve_zero_buffer(const Instance& instance);

}  // namespace cranesched

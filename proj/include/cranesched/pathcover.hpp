#pragma once

#include <vector>

#include "cranesched/core.hpp"

namespace cranesched {

/// Job-vertex digraph: u -> v iff origin(v) lies in [dest(u) - e, dest(u) + e].
/// Loops are allowed; successor lists are ascending and free of duplicates.
struct IntervalDigraph {
  std::vector<Job> jobs;
  int buffer = 0;
  std::vector<std::vector<JobId>> successors;

  int vertex_count() const noexcept { return static_cast<int>(successors.size()); }
  bool has_edge(JobId u, JobId v) const;
  std::size_t edge_count() const;
  bool has_loop(JobId v) const { return has_edge(v, v); }
};

/// Vertex-disjoint simple paths covering every vertex.
struct PathCover {
  std::vector<std::vector<JobId>> paths;

  std::size_t size() const noexcept { return paths.size(); }
};

/// Left copies x_v, right copies y_v; x_u -- y_v for every non-loop edge u -> v.
struct BipartiteSplit {
  int vertex_count = 0;
  std::vector<std::vector<JobId>> adjacency;  // left u -> right neighbours
  std::vector<JobId> match_left;              // right partner of x_u, or -1
  std::vector<JobId> match_right;             // left partner of y_v, or -1

  int matching_size() const;
};

IntervalDigraph build_interval_digraph(const Instance& instance);

/// Same digraph without loops.
IntervalDigraph strip_loops(const IntervalDigraph& digraph);

/// Loops count as cycles.
bool is_acyclic(const IntervalDigraph& digraph);

/// Throws ValidationError unless `cover` partitions the vertices into simple paths
/// whose consecutive pairs are edges.
void validate_cover(const IntervalDigraph& digraph, const PathCover& cover);

inline constexpr int kDefaultSubsetCap = 20;

/// Minimum cover by the O(2^n n^2) subset recursion.
PathCover exact_subset_dp(const IntervalDigraph& digraph, int cap = kDefaultSubsetCap);

BipartiteSplit build_bipartite_split(const IntervalDigraph& digraph);

/// Hopcroft-Karp. Fills the match arrays of `split` and returns the matching size.
int maximum_matching(BipartiteSplit& split);

struct AcyclicOptions {
  bool strip_loops = true;
};

struct AcyclicCover {
  PathCover cover;
  BipartiteSplit split;
  int matching_size = 0;
};

/// rho = |V| - mu on an acyclic digraph. Throws PreconditionError if cyclic.
AcyclicCover solve_acyclic_detailed(const IntervalDigraph& digraph, AcyclicOptions options = {});
PathCover solve_acyclic(const IntervalDigraph& digraph, AcyclicOptions options = {});

/// Concatenates the paths ordered by their smallest job id. The energy is the evaluated
/// energy, which never exceeds the number of paths.
Schedule schedule_from_cover(const Instance& instance, const PathCover& cover);

}  // namespace cranesched

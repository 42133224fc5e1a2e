#include "cranesched/pathcover.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <queue>
#include <string>

namespace cranesched {

bool IntervalDigraph::has_edge(JobId u, JobId v) const {
  const auto& list = successors.at(static_cast<std::size_t>(u));
  return std::binary_search(list.begin(), list.end(), v);
}

std::size_t IntervalDigraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& list : successors) total += list.size();
  return total;
}

int BipartiteSplit::matching_size() const {
  return static_cast<int>(std::count_if(match_left.begin(), match_left.end(),
                                        [](JobId v) { return v >= 0; }));
}

IntervalDigraph build_interval_digraph(const Instance& instance) {
  IntervalDigraph digraph;
  digraph.jobs = instance.jobs();
  digraph.buffer = instance.buffer();
  digraph.successors.resize(digraph.jobs.size());
  for (const Job& u : digraph.jobs)
    for (const Job& v : digraph.jobs)
      if (std::abs(v.origin - u.dest) <= instance.buffer())
        digraph.successors[static_cast<std::size_t>(u.id)].push_back(v.id);
  return digraph;
}

IntervalDigraph strip_loops(const IntervalDigraph& digraph) {
  IntervalDigraph stripped = digraph;
  for (std::size_t u = 0; u < stripped.successors.size(); ++u)
    std::erase(stripped.successors[u], static_cast<JobId>(u));
  return stripped;
}

bool is_acyclic(const IntervalDigraph& digraph) {
  const auto n = static_cast<std::size_t>(digraph.vertex_count());
  std::vector<int> indegree(n, 0);
  for (const auto& list : digraph.successors)
    for (JobId v : list) ++indegree[static_cast<std::size_t>(v)];
  std::queue<JobId> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(static_cast<JobId>(v));
  std::size_t removed = 0;
  while (!ready.empty()) {
    const JobId u = ready.front();
    ready.pop();
    ++removed;
    for (JobId v : digraph.successors[static_cast<std::size_t>(u)])
      if (--indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  return removed == n;
}

void validate_cover(const IntervalDigraph& digraph, const PathCover& cover) {
  const auto n = static_cast<std::size_t>(digraph.vertex_count());
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  for (std::size_t p = 0; p < cover.paths.size(); ++p) {
    const auto& path = cover.paths[p];
    const std::string where = "paths[" + std::to_string(p) + "]";
    if (path.empty()) throw ValidationError("empty path", where);
    for (std::size_t i = 0; i < path.size(); ++i) {
      const JobId v = path[i];
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw ValidationError("unknown vertex " + std::to_string(v), where);
      if (seen[static_cast<std::size_t>(v)])
        throw ValidationError("vertex " + std::to_string(v) + " covered twice", where);
      seen[static_cast<std::size_t>(v)] = true;
      ++covered;
      if (i > 0 && !digraph.has_edge(path[i - 1], v))
        throw ValidationError("no edge " + std::to_string(path[i - 1]) + " -> " +
                                  std::to_string(v),
                              where);
    }
  }
  if (covered != n) throw ValidationError("cover misses some vertices", "paths");
}

PathCover exact_subset_dp(const IntervalDigraph& digraph, int cap) {
  const int n = digraph.vertex_count();
  if (n > cap)
    throw PreconditionError("subset DP refuses n = " + std::to_string(n) + " (cap " +
                            std::to_string(cap) + ")");
  if (n > 30) throw PreconditionError("subset DP is limited to 30 vertices");
  if (n == 0) return {};

  // predecessors[i] has bit j set iff j -> i (loops excluded; they never extend a path).
  std::vector<std::uint32_t> predecessors(static_cast<std::size_t>(n), 0);
  for (JobId u = 0; u < n; ++u)
    for (JobId v : digraph.successors[static_cast<std::size_t>(u)])
      if (u != v) predecessors[static_cast<std::size_t>(v)] |= 1u << u;

  const std::size_t subsets = std::size_t{1} << n;
  constexpr std::uint8_t kInf = std::numeric_limits<std::uint8_t>::max();
  std::vector<std::uint8_t> value(subsets * static_cast<std::size_t>(n), kInf);
  std::vector<std::int8_t> parent(value.size(), -1);
  auto at = [n](std::size_t mask, int i) { return mask * static_cast<std::size_t>(n) + static_cast<std::size_t>(i); };

  for (std::size_t mask = 1; mask < subsets; ++mask) {
    for (int i = 0; i < n; ++i) {
      if (!(mask >> i & 1u)) continue;
      const std::size_t rest = mask & ~(std::size_t{1} << i);
      if (rest == 0) {
        value[at(mask, i)] = 1;
        continue;
      }
      // Ties prefer extending a path over opening one, then the smaller predecessor.
      int best = kInf;
      bool best_extends = false;
      int best_j = -1;
      for (int j = 0; j < n; ++j) {
        if (!(rest >> j & 1u)) continue;
        const bool extends = (predecessors[static_cast<std::size_t>(i)] >> j) & 1u;
        const int candidate = value[at(rest, j)] + (extends ? 0 : 1);
        if (candidate < best || (candidate == best && extends && !best_extends)) {
          best = candidate;
          best_extends = extends;
          best_j = j;
        }
      }
      value[at(mask, i)] = static_cast<std::uint8_t>(best);
      parent[at(mask, i)] = static_cast<std::int8_t>(best_j);
    }
  }

  const std::size_t full = subsets - 1;
  int last = 0;
  for (int i = 1; i < n; ++i)
    if (value[at(full, i)] < value[at(full, last)]) last = i;

  std::vector<JobId> sequence;
  std::size_t mask = full;
  for (int cur = last; cur >= 0;) {
    sequence.push_back(cur);
    const int prev = parent[at(mask, cur)];
    mask &= ~(std::size_t{1} << cur);
    cur = prev;
  }
  std::reverse(sequence.begin(), sequence.end());

  PathCover cover;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (i == 0 || !(predecessors[static_cast<std::size_t>(sequence[i])] >> sequence[i - 1] & 1u))
      cover.paths.emplace_back();
    cover.paths.back().push_back(sequence[i]);
  }
  return cover;
}

BipartiteSplit build_bipartite_split(const IntervalDigraph& digraph) {
  BipartiteSplit split;
  split.vertex_count = digraph.vertex_count();
  split.adjacency.resize(static_cast<std::size_t>(split.vertex_count));
  for (JobId u = 0; u < split.vertex_count; ++u)
    for (JobId v : digraph.successors[static_cast<std::size_t>(u)])
      if (u != v) split.adjacency[static_cast<std::size_t>(u)].push_back(v);
  split.match_left.assign(static_cast<std::size_t>(split.vertex_count), -1);
  split.match_right.assign(static_cast<std::size_t>(split.vertex_count), -1);
  return split;
}

int maximum_matching(BipartiteSplit& split) {
  const auto n = static_cast<std::size_t>(split.vertex_count);
  auto& left = split.match_left;
  auto& right = split.match_right;
  left.assign(n, -1);
  right.assign(n, -1);
  constexpr int kUnreached = std::numeric_limits<int>::max();
  std::vector<int> layer(n);

  auto bfs = [&] {
    std::queue<JobId> frontier;
    bool reachable_free = false;
    for (std::size_t u = 0; u < n; ++u) {
      layer[u] = left[u] < 0 ? 0 : kUnreached;
      if (left[u] < 0) frontier.push(static_cast<JobId>(u));
    }
    while (!frontier.empty()) {
      const JobId u = frontier.front();
      frontier.pop();
      for (JobId v : split.adjacency[static_cast<std::size_t>(u)]) {
        const JobId w = right[static_cast<std::size_t>(v)];
        if (w < 0) {
          reachable_free = true;
        } else if (layer[static_cast<std::size_t>(w)] == kUnreached) {
          layer[static_cast<std::size_t>(w)] = layer[static_cast<std::size_t>(u)] + 1;
          frontier.push(w);
        }
      }
    }
    return reachable_free;
  };

  std::vector<std::size_t> cursor(n);
  auto dfs = [&](auto&& self, JobId u) -> bool {
    auto& next = cursor[static_cast<std::size_t>(u)];
    const auto& adjacent = split.adjacency[static_cast<std::size_t>(u)];
    for (; next < adjacent.size(); ++next) {
      const JobId v = adjacent[next];
      const JobId w = right[static_cast<std::size_t>(v)];
      if (w < 0 || (layer[static_cast<std::size_t>(w)] == layer[static_cast<std::size_t>(u)] + 1 &&
                    self(self, w))) {
        left[static_cast<std::size_t>(u)] = v;
        right[static_cast<std::size_t>(v)] = u;
        ++next;
        return true;
      }
    }
    layer[static_cast<std::size_t>(u)] = kUnreached;
    return false;
  };

  int matched = 0;
  while (bfs()) {
    std::fill(cursor.begin(), cursor.end(), 0);
    for (std::size_t u = 0; u < n; ++u)
      if (left[u] < 0 && dfs(dfs, static_cast<JobId>(u))) ++matched;
  }
  return matched;
}

AcyclicCover solve_acyclic_detailed(const IntervalDigraph& digraph, AcyclicOptions options) {
  const IntervalDigraph working = options.strip_loops ? strip_loops(digraph) : digraph;
  if (!is_acyclic(working))
    throw PreconditionError(options.strip_loops ? "interval digraph has a cycle"
                                                : "interval digraph has a cycle or loop");
  AcyclicCover result;
  result.split = build_bipartite_split(working);
  result.matching_size = maximum_matching(result.split);

  // Matched pairs x_u -- y_v become cover edges u -> v; unmatched y_v start paths.
  const auto n = static_cast<std::size_t>(working.vertex_count());
  for (std::size_t v = 0; v < n; ++v) {
    if (result.split.match_right[v] >= 0) continue;
    std::vector<JobId> path;
    for (JobId cur = static_cast<JobId>(v); cur >= 0; cur = result.split.match_left[static_cast<std::size_t>(cur)])
      path.push_back(cur);
    result.cover.paths.push_back(std::move(path));
  }
  if (result.cover.size() + static_cast<std::size_t>(result.matching_size) != n)
    throw Error("matching did not decompose into simple paths");
  return result;
}

PathCover solve_acyclic(const IntervalDigraph& digraph, AcyclicOptions options) {
  return solve_acyclic_detailed(digraph, options).cover;
}

Schedule schedule_from_cover(const Instance& instance, const PathCover& cover) {
  validate_cover(build_interval_digraph(instance), cover);
  std::vector<std::vector<JobId>> paths = cover.paths;
  std::sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  std::vector<JobId> order;
  for (const auto& path : paths) order.insert(order.end(), path.begin(), path.end());
  return make_schedule(instance, std::move(order));
}

}  // namespace cranesched

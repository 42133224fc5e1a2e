#include "cranesched/solve.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "cranesched/dot.hpp"
#include "cranesched/eulerian.hpp"
#include "cranesched/twolevel.hpp"

namespace cranesched {
namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 7> kAlgorithmNames{{
    {Algorithm::oracle, "oracle"},
    {Algorithm::euler0, "euler0"},
    {Algorithm::approx, "approx"},
    {Algorithm::dp_bounded, "dp-bounded"},
    {Algorithm::dp_exact_subset, "dp-exact-subset"},
    {Algorithm::matching, "matching"},
    {Algorithm::automatic, "auto"},
}};

std::string two_level_view(const Instance& instance, const AuxAssignment& assignment) {
  const TwoLevelGraph graph = build_two_level(instance);
  const auto rebuilt = reconstruct_from_assignment(graph, assignment);
  return two_level_dot(graph, assignment, rebuilt.penalties);
}

}  // namespace

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [algorithm, text] : kAlgorithmNames)
    if (text == name) return algorithm;
  return std::nullopt;
}

std::string_view algorithm_name(Algorithm algorithm) {
  for (const auto& [candidate, text] : kAlgorithmNames)
    if (candidate == algorithm) return text;
  return "unknown";
}

Algorithm choose_automatic(const Instance& instance, const SolveOptions& options) {
  if (instance.buffer() == 0) return Algorithm::euler0;
  const IntervalDigraph digraph = build_interval_digraph(instance);
  if (is_acyclic(options.strip_loops ? strip_loops(digraph) : digraph)) return Algorithm::matching;
  if (instance.locality() <= options.k_limit) return Algorithm::dp_bounded;
  if (instance.size() <= options.subset_cap) return Algorithm::dp_exact_subset;
  if (instance.size() <= options.oracle_cap) return Algorithm::oracle;
  return Algorithm::approx;
}

SolveOutcome solve(const Instance& instance, Algorithm algorithm, const SolveOptions& options) {
  SolveOutcome outcome;
  outcome.used = algorithm == Algorithm::automatic ? choose_automatic(instance, options) : algorithm;

  switch (outcome.used) {
    case Algorithm::oracle: {
      outcome.schedule = brute_force_opt(instance, options.oracle_cap);
      if (options.want_dot) outcome.dot = interval_dot(build_interval_digraph(instance));
      break;
    }
    case Algorithm::euler0: {
      outcome.schedule = solve_zero_buffer(instance);
      if (options.want_dot && !instance.empty()) {
        const auto graph = build_job_graph(instance);
        outcome.dot = job_graph_dot(graph, semi_eulerize(graph));
      }
      break;
    }
    case Algorithm::approx: {
      const int k = options.k.value_or(std::min(instance.size(), 3));
      auto result = approx_solve_detailed(instance, k);
      outcome.schedule = std::move(result.schedule);
      if (options.want_dot && !instance.empty())
        outcome.dot = two_level_view(instance, result.assignment);
      break;
    }
    case Algorithm::dp_bounded: {
      auto result = solve_bounded_detailed(instance, BoundedOptions{options.k_limit});
      outcome.schedule = std::move(result.schedule);
      outcome.trace = std::move(result.trace);
      if (options.want_dot && !instance.empty())
        outcome.dot = two_level_view(instance, result.assignment);
      break;
    }
    case Algorithm::dp_exact_subset: {
      const auto digraph = build_interval_digraph(instance);
      outcome.schedule = schedule_from_cover(instance, exact_subset_dp(digraph, options.subset_cap));
      if (options.want_dot) outcome.dot = interval_dot(digraph);
      break;
    }
    case Algorithm::matching: {
      const auto digraph = build_interval_digraph(instance);
      auto result = solve_acyclic_detailed(digraph, AcyclicOptions{options.strip_loops});
      outcome.schedule = schedule_from_cover(instance, result.cover);
      if (options.want_dot) outcome.dot = bipartite_dot(result.split);
      break;
    }
    case Algorithm::automatic:
      throw Error("automatic selection did not resolve");
  }
  return outcome;
}

std::optional<DotModel> parse_dot_model(std::string_view name) {
  if (name == "job-graph") return DotModel::job_graph;
  if (name == "two-level") return DotModel::two_level;
  if (name == "interval") return DotModel::interval;
  if (name == "bipartite") return DotModel::bipartite;
  return std::nullopt;
}

std::string export_dot(const Instance& instance, DotModel model) {
  switch (model) {
    case DotModel::job_graph: {
      const auto graph = build_job_graph(instance);
      return job_graph_dot(graph, instance.empty() ? AddedEdgeSet{} : semi_eulerize(graph));
    }
    case DotModel::two_level: {
      if (instance.empty()) return two_level_dot(build_two_level(instance), {}, {});
      const auto result = approx_solve_detailed(instance, std::min(instance.size(), 3));
      return two_level_view(instance, result.assignment);
    }
    case DotModel::interval:
      return interval_dot(build_interval_digraph(instance));
    case DotModel::bipartite: {
      auto split = build_bipartite_split(build_interval_digraph(instance));
      maximum_matching(split);
      return bipartite_dot(split);
    }
  }
  return {};
}

}  // namespace cranesched

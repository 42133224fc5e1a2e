#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cranesched/bounded_dp.hpp"
#include "cranesched/core.hpp"
#include "cranesched/pathcover.hpp"

namespace cranesched {

enum class Algorithm { oracle, euler0, approx, dp_bounded, dp_exact_subset, matching, automatic };

std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm algorithm);

struct SolveOptions {
  std::optional<int> k;  // approx only; defaults to min(n, 3)
  int oracle_cap = kDefaultOracleCap;
  int subset_cap = kDefaultSubsetCap;
  int k_limit = 3;
  bool strip_loops = true;
  bool want_dot = false;
};

struct SolveOutcome {
  Schedule schedule;
  Algorithm used = Algorithm::oracle;  // the concrete method auto resolved to
  std::vector<DpTraceRecord> trace;    // dp-bounded only
  std::string dot;                     // filled when want_dot
};

/// Runs one algorithm. Throws PreconditionError when it does not apply.
SolveOutcome solve(const Instance& instance, Algorithm algorithm, const SolveOptions& options = {});

/// Cheapest applicable exact method: euler0, matching, dp-bounded, dp-exact-subset,
/// oracle; approx with k = min(n, 3) when none applies.
Algorithm choose_automatic(const Instance& instance, const SolveOptions& options = {});

enum class DotModel { job_graph, two_level, interval, bipartite };

std::optional<DotModel> parse_dot_model(std::string_view name);

/// job-graph: buffer-0 semi-Eulerization; two-level: approx(min(n, 3)) assignment and
/// its penalties; interval: the digraph; bipartite: split with a maximum matching.
std::string export_dot(const Instance& instance, DotModel model);

}  // namespace cranesched

#include "cranesched/twolevel.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <tuple>

#include "cranesched/disjoint_set.hpp"

namespace cranesched {

int TwoLevelGraph::position_of(Slot slot) const {
  const auto it = std::lower_bound(slots.begin(), slots.end(), slot);
  if (it == slots.end() || *it != slot)
    throw ValidationError("slot " + std::to_string(slot) + " is not occupied", "slot");
  return static_cast<int>(it - slots.begin());
}

bool TwoLevelGraph::occupied(Slot slot) const {
  return std::binary_search(slots.begin(), slots.end(), slot);
}

Slot TwoLevelGraph::slot_of(int vertex) const {
  const int p = is_upper(vertex) ? vertex : vertex - slot_count();
  return slots.at(static_cast<std::size_t>(p));
}

std::string to_string(FeasibilityIssue issue) {
  switch (issue) {
    case FeasibilityIssue::none: return "feasible";
    case FeasibilityIssue::wrong_count: return "assignment does not cover every job exactly once";
    case FeasibilityIssue::unknown_job: return "assignment names an unknown job";
    case FeasibilityIssue::endpoint_unoccupied: return "endpoint slot is not occupied";
    case FeasibilityIssue::outside_window: return "endpoint lies outside the buffer window";
    case FeasibilityIssue::lower_unbalanced: return "a lower vertex is unbalanced";
  }
  return "unknown";
}

TwoLevelGraph build_two_level(const Instance& instance) {
  TwoLevelGraph graph;
  graph.slots = occupied_slots(instance);
  graph.jobs = instance.jobs();
  graph.eta = instance.eta();
  graph.buffer = instance.buffer();
  graph.original.reserve(graph.jobs.size());
  for (const Job& job : graph.jobs)
    graph.original.push_back(Arc{graph.upper(job.origin), graph.lower(job.dest), job.id});
  return graph;
}

Feasibility check_feasible(const TwoLevelGraph& graph, const AuxAssignment& assignment,
                           int buffer) {
  const auto n = static_cast<JobId>(graph.jobs.size());
  for (const auto& [job, endpoint] : assignment) {
    if (job < 0 || job >= n) return {FeasibilityIssue::unknown_job, job};
    if (!graph.occupied(endpoint)) return {FeasibilityIssue::endpoint_unoccupied, job};
    if (std::abs(graph.jobs[static_cast<std::size_t>(job)].dest - endpoint) > buffer)
      return {FeasibilityIssue::outside_window, job};
  }
  if (assignment.size() != graph.jobs.size()) return {FeasibilityIssue::wrong_count, -1};

  std::vector<int> balance(graph.slots.size(), 0);
  for (const Job& job : graph.jobs) ++balance[static_cast<std::size_t>(graph.position_of(job.dest))];
  for (const auto& [job, endpoint] : assignment)
    --balance[static_cast<std::size_t>(
        graph.position_of(graph.jobs[static_cast<std::size_t>(job)].dest))];
  for (std::size_t p = 0; p < balance.size(); ++p)
    if (balance[p] != 0) return {FeasibilityIssue::lower_unbalanced, -1};
  return {};
}

std::vector<Arc> augmented_arcs(const TwoLevelGraph& graph, const AuxAssignment& assignment) {
  std::vector<Arc> arcs = graph.original;
  for (const auto& [job, endpoint] : assignment)
    arcs.push_back(
        Arc{graph.lower(graph.jobs[static_cast<std::size_t>(job)].dest), graph.upper(endpoint), -1});
  return arcs;
}

namespace {

void require_feasible(const TwoLevelGraph& graph, const AuxAssignment& assignment) {
  const Feasibility verdict = check_feasible(graph, assignment, graph.buffer);
  if (!verdict) {
    std::string where = "assignment";
    if (verdict.job >= 0) where += "[" + std::to_string(verdict.job) + "]";
    throw ValidationError(to_string(verdict.issue), where);
  }
}

}  // namespace

int evaluate_fGA(const TwoLevelGraph& graph, const AuxAssignment& assignment) {
  require_feasible(graph, assignment);
  return euler::semi_eulerization_count(graph.vertex_count(), augmented_arcs(graph, assignment));
}

int imbalance_term(const TwoLevelGraph& graph, const AuxAssignment& assignment) {
  std::vector<int> surplus(graph.slots.size(), 0);
  for (const Job& job : graph.jobs) ++surplus[static_cast<std::size_t>(graph.position_of(job.origin))];
  for (const auto& [job, endpoint] : assignment) --surplus[static_cast<std::size_t>(graph.position_of(endpoint))];
  int total = 0;
  for (int s : surplus) total += std::abs(s);
  return total / 2;
}

AuxAssignment greedy_assign(const TwoLevelGraph& graph, int buffer,
                            std::span<const JobId> pending, const AuxAssignment& partial) {
  std::vector<int> in(graph.slots.size(), 0);
  std::vector<int> out(graph.slots.size(), 0);
  for (const Job& job : graph.jobs) ++out[static_cast<std::size_t>(graph.position_of(job.origin))];
  for (const auto& [job, endpoint] : partial) ++in[static_cast<std::size_t>(graph.position_of(endpoint))];

  std::vector<JobId> queue(pending.begin(), pending.end());
  std::sort(queue.begin(), queue.end(), [&](JobId a, JobId b) {
    return std::tuple(graph.jobs[static_cast<std::size_t>(a)].dest, a) <
           std::tuple(graph.jobs[static_cast<std::size_t>(b)].dest, b);
  });

  AuxAssignment result = partial;
  for (JobId id : queue) {
    if (partial.contains(id))
      throw ValidationError("job " + std::to_string(id) + " is both pending and assigned",
                            "pending");
    const Slot dest = graph.jobs.at(static_cast<std::size_t>(id)).dest;
    Slot chosen = dest;
    auto it = std::lower_bound(graph.slots.begin(), graph.slots.end(), dest - buffer);
    for (; it != graph.slots.end() && *it <= dest + buffer; ++it) {
      const auto p = static_cast<std::size_t>(it - graph.slots.begin());
      if (in[p] < out[p]) {
        chosen = *it;
        break;
      }
    }
    ++in[static_cast<std::size_t>(graph.position_of(chosen))];
    result[id] = chosen;
  }
  return result;
}

Reconstruction reconstruct_from_assignment(const TwoLevelGraph& graph,
                                           const AuxAssignment& assignment) {
  require_feasible(graph, assignment);
  Reconstruction result;
  if (graph.jobs.empty()) return result;

  std::vector<Arc> arcs = augmented_arcs(graph, assignment);
  result.penalties = euler::semi_eulerize(graph.vertex_count(), arcs);
  const std::size_t first_penalty = arcs.size();
  for (const auto& penalty : result.penalties) {
    if (!graph.is_upper(penalty.from) || !graph.is_upper(penalty.to))
      throw Error("penalty edge left the upper level");
    arcs.push_back(Arc{penalty.from, penalty.to, -1});
  }

  const auto path = euler::euler_path(graph.vertex_count(), arcs);
  std::vector<bool> is_cut(arcs.size(), false);
  std::fill(is_cut.begin() + static_cast<std::ptrdiff_t>(first_penalty), is_cut.end(), true);

  std::vector<JobId> order;
  for (const auto& piece : euler::split_path(arcs, path, is_cut))
    order.insert(order.end(), piece.begin(), piece.end());

  const Instance instance(graph.eta, graph.buffer, graph.jobs);
  result.schedule = make_schedule(instance, std::move(order));
  return result;
}

Schedule schedule_from_assignment(const TwoLevelGraph& graph, const AuxAssignment& assignment) {
  return reconstruct_from_assignment(graph, assignment).schedule;
}

namespace {

/// Allocation-free f(G(A)) and greedy completion for the DFS leaves. Endpoints are
/// slot positions, -1 for unassigned.
class LeafEvaluator {
 public:
  explicit LeafEvaluator(const TwoLevelGraph& graph)
      : m_(graph.slot_count()),
        out_(static_cast<std::size_t>(m_), 0),
        in_(out_),
        dest_pos_(graph.jobs.size()),
        origin_pos_(graph.jobs.size()),
        sets_(2 * m_) {
    for (const Job& job : graph.jobs) {
      const auto id = static_cast<std::size_t>(job.id);
      origin_pos_[id] = graph.position_of(job.origin);
      dest_pos_[id] = graph.position_of(job.dest);
      ++out_[static_cast<std::size_t>(origin_pos_[id])];
    }
    by_dest_.resize(graph.jobs.size());
    for (std::size_t i = 0; i < by_dest_.size(); ++i) by_dest_[i] = static_cast<JobId>(i);
    std::stable_sort(by_dest_.begin(), by_dest_.end(),
                     [&](JobId a, JobId b) { return dest_pos_[static_cast<std::size_t>(a)] <
                                                    dest_pos_[static_cast<std::size_t>(b)]; });
    windows_.resize(graph.jobs.size());
    for (const Job& job : graph.jobs) {
      auto& window = windows_[static_cast<std::size_t>(job.id)];
      for (int p = 0; p < m_; ++p)
        if (std::abs(graph.slots[static_cast<std::size_t>(p)] - job.dest) <= graph.buffer)
          window.push_back(p);
    }
  }

  const std::vector<int>& window(JobId job) const { return windows_[static_cast<std::size_t>(job)]; }

  /// Fills unassigned entries of `endpoints` greedily.
  void complete(std::vector<int>& endpoints) {
    std::fill(in_.begin(), in_.end(), 0);
    for (int p : endpoints)
      if (p >= 0) ++in_[static_cast<std::size_t>(p)];
    for (JobId id : by_dest_) {
      int& endpoint = endpoints[static_cast<std::size_t>(id)];
      if (endpoint >= 0) continue;
      endpoint = dest_pos_[static_cast<std::size_t>(id)];
      for (int p : windows_[static_cast<std::size_t>(id)]) {
        if (in_[static_cast<std::size_t>(p)] < out_[static_cast<std::size_t>(p)]) {
          endpoint = p;
          break;
        }
      }
      ++in_[static_cast<std::size_t>(endpoint)];
    }
  }

  int f_value(const std::vector<int>& endpoints) {
    sets_ = DisjointSet(2 * m_);
    std::fill(in_.begin(), in_.end(), 0);
    for (std::size_t j = 0; j < endpoints.size(); ++j) {
      sets_.unite(origin_pos_[j], m_ + dest_pos_[j]);
      sets_.unite(m_ + dest_pos_[j], endpoints[j]);
      ++in_[static_cast<std::size_t>(endpoints[j])];
    }
    int imbalance = 0;
    unbalanced_root_.assign(static_cast<std::size_t>(2 * m_), 0);
    present_root_.assign(static_cast<std::size_t>(2 * m_), 0);
    for (int p = 0; p < m_; ++p) {
      const auto up = static_cast<std::size_t>(p);
      if (in_[up] + out_[up] == 0) continue;
      const auto root = static_cast<std::size_t>(sets_.find(p));
      present_root_[root] = 1;
      const int diff = std::abs(in_[up] - out_[up]);
      imbalance += diff;
      if (diff != 0) unbalanced_root_[root] = 1;
    }
    int eulerian = 0;
    for (std::size_t r = 0; r < present_root_.size(); ++r)
      if (present_root_[r] && !unbalanced_root_[r]) ++eulerian;
    return imbalance / 2 + eulerian - 1;
  }

 private:
  int m_;
  std::vector<int> out_;
  std::vector<int> in_;
  std::vector<int> dest_pos_;
  std::vector<int> origin_pos_;
  std::vector<JobId> by_dest_;
  std::vector<std::vector<int>> windows_;
  DisjointSet sets_;
  std::vector<char> unbalanced_root_;
  std::vector<char> present_root_;
};

struct Search {
  LeafEvaluator& evaluator;
  int k;
  bool canonical;
  std::vector<int> chosen;  // endpoint positions, -1 = pending
  std::vector<int> scratch;
  int best_f = std::numeric_limits<int>::max();
  std::vector<int> best;
  long long leaves = 0;

  void dfs(int depth, JobId last) {
    if (depth == k) {
      scratch = chosen;
      evaluator.complete(scratch);
      const int f = evaluator.f_value(scratch);
      ++leaves;
      if (f < best_f || (f == best_f && scratch < best)) {
        best_f = f;
        best = scratch;
      }
      return;
    }
    const auto n = static_cast<JobId>(chosen.size());
    for (JobId i = canonical ? last + 1 : 0; i < n; ++i) {
      if (chosen[static_cast<std::size_t>(i)] >= 0) continue;
      for (int p : evaluator.window(i)) {
        chosen[static_cast<std::size_t>(i)] = p;
        dfs(depth + 1, i);
      }
      chosen[static_cast<std::size_t>(i)] = -1;
    }
  }
};

}  // namespace

ApproxResult approx_solve_detailed(const Instance& instance, int k, ApproxOptions options) {
  if (k < 0 || k > instance.size())
    throw ValidationError("must lie in [0, n] with n = " + std::to_string(instance.size()), "k");
  ApproxResult result;
  if (instance.empty()) return result;

  const TwoLevelGraph graph = build_two_level(instance);
  LeafEvaluator evaluator(graph);
  Search search{evaluator, k, options.canonical_order,
                std::vector<int>(static_cast<std::size_t>(instance.size()), -1), {},
                std::numeric_limits<int>::max(), {}, 0};
  search.dfs(0, -1);

  for (std::size_t j = 0; j < search.best.size(); ++j)
    result.assignment[static_cast<JobId>(j)] = graph.slots[static_cast<std::size_t>(search.best[j])];
  result.f_value = search.best_f;
  result.leaves = search.leaves;
  result.schedule = schedule_from_assignment(graph, result.assignment);
  return result;
}

Schedule approx_solve(const Instance& instance, int k, ApproxOptions options) {
  return approx_solve_detailed(instance, k, options).schedule;
}

}  // namespace cranesched

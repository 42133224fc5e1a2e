#include <doctest.h>

#include <functional>
#include <limits>

#include "cranesched/twolevel.hpp"
#include "support.hpp"

using namespace cranesched;
using testing::make_instance;

namespace {

// Calls visit(A) for every feasible complete assignment, extending `fixed`.
void for_each_feasible(const TwoLevelGraph& graph, int e, const AuxAssignment& fixed,
                       const std::function<void(const AuxAssignment&)>& visit) {
  AuxAssignment current = fixed;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == graph.jobs.size()) {
      if (is_feasible(graph, current, e)) visit(current);
      return;
    }
    const Job& job = graph.jobs[j];
    if (fixed.count(job.id)) {
      rec(j + 1);
      return;
    }
    for (Slot y : graph.slots) {
      if (std::abs(y - job.dest) > e) continue;
      current[job.id] = y;
      rec(j + 1);
    }
    current.erase(job.id);
  };
  rec(0);
}

int min_fGA(const Instance& instance) {
  const TwoLevelGraph graph = build_two_level(instance);
  int best = std::numeric_limits<int>::max();
  for_each_feasible(graph, instance.buffer(), {},
                    [&](const AuxAssignment& a) { best = std::min(best, evaluate_fGA(graph, a)); });
  return best;
}

}  // namespace

TEST_CASE("build_two_level") {
  const auto golden = build_two_level(testing::golden_instance());
  CHECK(golden.slots == std::vector<Slot>{2, 7, 8, 9, 11, 13});
  CHECK(golden.original.size() == 4);
  CHECK(golden.original[0] == Arc{golden.upper(7), golden.lower(2), 0});

  const auto loop = build_two_level(make_instance(5, 0, {{3, 3}}));
  CHECK(loop.slots == std::vector<Slot>{3});
  CHECK(loop.original == std::vector<Arc>{{loop.upper(3), loop.lower(3), 0}});

  const auto pair = build_two_level(make_instance(5, 1, {{1, 2}, {3, 4}}));
  CHECK(pair.slots == std::vector<Slot>{1, 2, 3, 4});
  CHECK(pair.original.size() == 2);
  CHECK(pair.is_upper(pair.upper(4)));
  CHECK_FALSE(pair.is_upper(pair.lower(1)));
  CHECK(pair.slot_of(pair.lower(3)) == 3);
}

TEST_CASE("feasibility") {
  const auto graph = build_two_level(make_instance(5, 1, {{1, 2}, {3, 4}}));
  CHECK(is_feasible(graph, {{0, 3}, {1, 4}}, 1));
  CHECK(check_feasible(graph, {{0, 4}, {1, 4}}, 1).issue == FeasibilityIssue::outside_window);
  CHECK(check_feasible(graph, {{0, 4}, {1, 4}}, 1).job == 0);
  CHECK(check_feasible(graph, {{0, 3}}, 1).issue == FeasibilityIssue::wrong_count);
  CHECK(check_feasible(graph, {{0, 3}, {5, 4}}, 1).issue == FeasibilityIssue::unknown_job);

  const auto gap = build_two_level(make_instance(9, 2, {{1, 2}, {8, 9}}));
  CHECK(check_feasible(gap, {{0, 3}, {1, 9}}, 2).issue == FeasibilityIssue::endpoint_unoccupied);
}

TEST_CASE("evaluate_fGA examples") {
  const auto graph = build_two_level(make_instance(5, 1, {{1, 2}, {3, 4}}));
  CHECK(evaluate_fGA(graph, {{0, 3}, {1, 4}}) == 0);
  CHECK(evaluate_fGA(graph, {{0, 1}, {1, 3}}) == 1);
  CHECK_THROWS_AS(evaluate_fGA(graph, {{0, 3}}), ValidationError);

  const auto loop = build_two_level(make_instance(5, 0, {{3, 3}}));
  CHECK(evaluate_fGA(loop, {{0, 3}}) == 0);
}

TEST_CASE("greedy_assign examples") {
  const auto pair = build_two_level(make_instance(5, 1, {{1, 2}, {3, 4}}));
  const std::vector<JobId> both{0, 1};
  const AuxAssignment greedy = greedy_assign(pair, 1, both, {});
  CHECK(greedy == AuxAssignment{{0, 1}, {1, 3}});
  // Both components end up balanced, so all of f comes from the Eulerian count.
  CHECK(imbalance_term(pair, greedy) == 0);
  CHECK(evaluate_fGA(pair, greedy) == 1);

  const auto cycle = build_two_level(make_instance(5, 0, {{1, 2}, {2, 1}}));
  const AuxAssignment forced = greedy_assign(cycle, 0, both, {});
  CHECK(forced == AuxAssignment{{0, 2}, {1, 1}});
  CHECK(evaluate_fGA(cycle, forced) == 0);

  const auto loop = build_two_level(make_instance(5, 0, {{3, 3}}));
  const std::vector<JobId> one{0};
  CHECK(greedy_assign(loop, 0, one, {}) == AuxAssignment{{0, 3}});

  // A fixed partial assignment is kept.
  const std::vector<JobId> rest{1};
  CHECK(greedy_assign(pair, 1, rest, {{0, 3}}) == AuxAssignment{{0, 3}, {1, 4}});
}

TEST_CASE("greedy completion minimizes the imbalance term") {
  std::mt19937_64 rng(5);
  for (const Instance& instance : testing::random_corpus(150, 1, 5, 9, 2, std::nullopt, 31)) {
    const TwoLevelGraph graph = build_two_level(instance);
    const int e = instance.buffer();
    // Fix a random feasible endpoint for a random prefix of the jobs.
    AuxAssignment partial;
    std::vector<JobId> pending;
    const int fixed = std::uniform_int_distribution<int>(0, instance.size())(rng);
    for (const Job& job : instance.jobs()) {
      if (job.id < fixed) {
        std::vector<Slot> window;
        for (Slot y : graph.slots)
          if (std::abs(y - job.dest) <= e) window.push_back(y);
        partial[job.id] = window[std::uniform_int_distribution<std::size_t>(0, window.size() - 1)(rng)];
      } else {
        pending.push_back(job.id);
      }
    }
    const AuxAssignment greedy = greedy_assign(graph, e, pending, partial);
    REQUIRE(is_feasible(graph, greedy, e));
    int best = std::numeric_limits<int>::max();
    for_each_feasible(graph, e, partial,
                      [&](const AuxAssignment& a) { best = std::min(best, imbalance_term(graph, a)); });
    CHECK(imbalance_term(graph, greedy) == best);
  }
}

TEST_CASE("schedule_from_assignment examples") {
  const auto pair = build_two_level(make_instance(5, 1, {{1, 2}, {3, 4}}));
  CHECK(schedule_from_assignment(pair, {{0, 3}, {1, 4}}) == Schedule{{0, 1}, 1});

  const auto single = build_two_level(make_instance(5, 1, {{4, 2}}));
  CHECK(schedule_from_assignment(single, {{0, 2}}) == Schedule{{0}, 1});

  const auto cycle = build_two_level(make_instance(5, 0, {{1, 2}, {2, 1}}));
  const Schedule circuit = schedule_from_assignment(cycle, {{0, 2}, {1, 1}});
  CHECK(circuit.energy == 1);
  CHECK(circuit.order.size() == 2);

  CHECK_THROWS_AS(schedule_from_assignment(pair, {{0, 4}, {1, 4}}), ValidationError);
}

TEST_CASE("schedule_from_assignment respects f(G(A)) + 1") {
  for (const Instance& instance : testing::random_corpus(60, 1, 5, 9, 2, std::nullopt, 9)) {
    const TwoLevelGraph graph = build_two_level(instance);
    for_each_feasible(graph, instance.buffer(), {}, [&](const AuxAssignment& a) {
      const auto rebuilt = reconstruct_from_assignment(graph, a);
      const int f = evaluate_fGA(graph, a);
      CHECK(static_cast<int>(rebuilt.penalties.size()) == f);
      CHECK(testing::is_permutation_of_ids(instance, rebuilt.schedule.order));
      CHECK(evaluate_energy(instance, rebuilt.schedule.order) == rebuilt.schedule.energy);
      CHECK(rebuilt.schedule.energy <= f + 1);
    });
  }
}

TEST_CASE("minimum over assignments equals the optimum") {
  for (const Instance& instance : testing::random_corpus(120, 1, 6, 10, 2, std::nullopt, 4))
    CHECK(min_fGA(instance) + 1 == brute_force_opt(instance).energy);
}

TEST_CASE("approx_solve examples") {
  const Instance pair = make_instance(5, 1, {{1, 2}, {3, 4}});
  CHECK(approx_solve(pair, 1).energy == 1);
  // Pure greedy reaches f = 1, but the reconstructed order happens to evaluate to 1.
  const ApproxResult greedy_only = approx_solve_detailed(pair, 0);
  CHECK(greedy_only.f_value == 1);
  CHECK(greedy_only.schedule.energy == 1);
  CHECK(approx_solve(testing::golden_instance(), 4).energy == 2);
  CHECK_THROWS_AS(approx_solve(pair, 3), ValidationError);
  CHECK_THROWS_AS(approx_solve(pair, -1), ValidationError);
  CHECK(approx_solve(make_instance(5, 1, {}), 0).order.empty());
}

TEST_CASE("approx bound and ordered enumeration") {
  for (const Instance& instance : testing::random_corpus(60, 1, 5, 10, 2, std::nullopt, 71)) {
    const int opt = brute_force_opt(instance).energy;
    const int n = instance.size();
    for (int k = 0; k <= n; ++k) {
      const ApproxResult subsets = approx_solve_detailed(instance, k);
      const ApproxResult tuples = approx_solve_detailed(instance, k, ApproxOptions{false});
      CHECK(subsets.f_value == tuples.f_value);
      CHECK(subsets.leaves <= tuples.leaves);
      CHECK(subsets.schedule.energy <= subsets.f_value + 1);
      CHECK(opt <= subsets.schedule.energy);
      CHECK(subsets.schedule.energy <= opt + n - k);
      CHECK(evaluate_energy(instance, subsets.schedule.order) == subsets.schedule.energy);
    }
    CHECK(approx_solve(instance, n).energy == opt);
  }
}

#include <doctest.h>

#include <map>
#include <set>

#include "cranesched/disjoint_set.hpp"
#include "cranesched/eulerian.hpp"
#include "support.hpp"

using namespace cranesched;
using testing::make_instance;

namespace {

// Independent semi-Eulerian check in slot coordinates.
bool slot_graph_semi_eulerian(const std::vector<std::pair<Slot, Slot>>& edges) {
  std::map<Slot, int> balance;  // out - in
  std::map<Slot, int> index;
  for (const auto& [a, b] : edges) {
    ++balance[a];
    --balance[b];
    index.try_emplace(a, static_cast<int>(index.size()));
    index.try_emplace(b, static_cast<int>(index.size()));
  }
  DisjointSet sets(static_cast<int>(index.size()));
  for (const auto& [a, b] : edges) sets.unite(index[a], index[b]);
  for (const auto& [slot, i] : index)
    if (!sets.same(i, 0)) return false;
  int plus = 0;
  int minus = 0;
  for (const auto& [slot, b] : balance) {
    if (b == 1) ++plus;
    else if (b == -1) ++minus;
    else if (b != 0) return false;
  }
  return (plus == 0 && minus == 0) || (plus == 1 && minus == 1);
}

std::vector<std::pair<Slot, Slot>> all_edges(const SlotMultiDigraph& graph, const AddedEdgeSet& added) {
  std::vector<std::pair<Slot, Slot>> edges;
  for (const Arc& arc : graph.edges)
    edges.emplace_back(graph.slots[static_cast<std::size_t>(arc.from)],
                       graph.slots[static_cast<std::size_t>(arc.to)]);
  for (const AddedEdge& edge : added.edges) edges.emplace_back(edge.from, edge.to);
  return edges;
}

}  // namespace

TEST_CASE("build_job_graph") {
  const auto loop = build_job_graph(make_instance(5, 0, {{3, 3}}));
  CHECK(loop.slots == std::vector<Slot>{3});
  CHECK(loop.in_degree(0) == 1);
  CHECK(loop.out_degree(0) == 1);

  const auto twins = build_job_graph(make_instance(5, 0, {{1, 2}, {1, 2}}));
  CHECK(twins.vertex_count() == 2);
  CHECK(twins.out_degree(twins.vertex_of(1)) == 2);
  CHECK(twins.in_degree(twins.vertex_of(1)) == 0);
  CHECK(twins.in_degree(twins.vertex_of(2)) == 2);

  const auto cycle = build_job_graph(make_instance(5, 0, {{1, 2}, {2, 1}}));
  CHECK(cycle.edges.size() == 2);
  for (int v = 0; v < cycle.vertex_count(); ++v) CHECK(cycle.in_degree(v) == cycle.out_degree(v));
}

TEST_CASE("f_of_G examples") {
  CHECK(f_of_G(build_job_graph(make_instance(6, 0, {{1, 2}, {2, 1}}))) == 0);
  CHECK(f_of_G(build_job_graph(make_instance(6, 0, {{1, 2}, {2, 1}, {5, 6}, {6, 5}}))) == 1);
  CHECK(f_of_G(build_job_graph(make_instance(6, 0, {{1, 2}, {1, 2}}))) == 1);
  CHECK(f_of_G(build_job_graph(make_instance(6, 0, {{3, 3}}))) == 0);
  CHECK_THROWS_AS(f_of_G(build_job_graph(make_instance(6, 0, {}))), ValidationError);
}

TEST_CASE("semi_eulerize examples") {
  const auto cycle = build_job_graph(make_instance(6, 0, {{1, 2}, {2, 1}}));
  CHECK(semi_eulerize(cycle).edges.empty());

  const auto two = build_job_graph(make_instance(6, 0, {{1, 2}, {2, 1}, {5, 6}, {6, 5}}));
  const auto joined = semi_eulerize(two);
  REQUIRE(joined.edges.size() == 1);
  CHECK(joined.edges[0] == AddedEdge{1, 5, AddedRole::connector});
  CHECK(is_semi_eulerian(two, joined));

  const auto twins = build_job_graph(make_instance(6, 0, {{1, 2}, {1, 2}}));
  const auto balanced = semi_eulerize(twins);
  REQUIRE(balanced.edges.size() == 1);
  CHECK(balanced.edges[0] == AddedEdge{2, 1, AddedRole::balancer});
  CHECK_FALSE(is_semi_eulerian(twins, AddedEdgeSet{}));
}

TEST_CASE("euler_path examples") {
  const auto chain = build_job_graph(make_instance(6, 0, {{1, 2}, {2, 3}}));
  CHECK(euler_path(chain, {}) ==
        std::vector<PathStep>{{1, 2, JobId{0}}, {2, 3, JobId{1}}});

  const auto cycle = build_job_graph(make_instance(6, 0, {{1, 2}, {2, 1}}));
  const auto circuit = euler_path(cycle, {});
  REQUIRE(circuit.size() == 2);
  CHECK(circuit.front().from == circuit.back().to);

  const auto twins = build_job_graph(make_instance(6, 0, {{1, 2}, {1, 2}}));
  const auto path = euler_path(twins, semi_eulerize(twins));
  REQUIRE(path.size() == 3);
  CHECK(path[0].job.has_value());
  CHECK(path[1] == PathStep{2, 1, std::nullopt});
  CHECK(path[2].job.has_value());

  CHECK_THROWS_AS(euler_path(twins, {}), ValidationError);
}

TEST_CASE("solve_zero_buffer examples") {
  CHECK(solve_zero_buffer(make_instance(6, 0, {{1, 2}, {2, 3}})).energy == 1);
  CHECK(solve_zero_buffer(make_instance(6, 0, {{1, 2}, {2, 1}, {5, 6}, {6, 5}})).energy == 2);
  CHECK(solve_zero_buffer(make_instance(6, 0, {{1, 2}, {1, 2}})).energy == 2);
  CHECK_THROWS_AS(solve_zero_buffer(make_instance(6, 1, {{1, 2}})), PreconditionError);
}

TEST_CASE("semi-Eulerization properties on random zero-buffer instances") {
  for (const Instance& base : testing::random_corpus(300, 1, 8, 12, 0, std::nullopt, 2024)) {
    const auto graph = build_job_graph(base);
    const auto added = semi_eulerize(graph);
    const int f = f_of_G(graph);
    CHECK(static_cast<int>(added.edges.size()) == f);
    CHECK(is_semi_eulerian(graph, added));
    CHECK(slot_graph_semi_eulerian(all_edges(graph, added)));

    const auto path = euler_path(graph, added);
    CHECK(path.size() == graph.edges.size() + added.edges.size());
    for (std::size_t i = 1; i < path.size(); ++i) CHECK(path[i - 1].to == path[i].from);

    const Schedule schedule = solve_zero_buffer(base);
    CHECK(testing::is_permutation_of_ids(base, schedule.order));
    CHECK(schedule.energy == f + 1);
    CHECK(evaluate_energy(base, schedule.order) == schedule.energy);
    CHECK(schedule.energy == brute_force_opt(base).energy);
  }
}

TEST_CASE("generic multigraph helpers") {
  // Two disjoint loops on vertices 0 and 3; vertices 1 and 2 are absent.
  const std::vector<Arc> arcs{{0, 0, 0}, {3, 3, 1}};
  CHECK(euler::semi_eulerization_count(4, arcs) == 1);
  const auto added = euler::semi_eulerize(4, arcs);
  REQUIRE(added.size() == 1);
  CHECK(added[0] == euler::AddedArc{0, 3, AddedRole::connector});

  std::vector<Arc> joined = arcs;
  joined.push_back(Arc{0, 3, -1});
  CHECK(euler::is_semi_eulerian(4, joined));
  const auto path = euler::euler_path(4, joined);
  std::vector<bool> cut{false, false, true};
  const auto pieces = euler::split_path(joined, path, cut);
  CHECK(pieces == std::vector<std::vector<JobId>>{{0}, {1}});
}

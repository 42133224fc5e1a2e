#include "cranesched/eulerian.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "cranesched/disjoint_set.hpp"

namespace cranesched {
namespace euler {
namespace {

struct DegreeTally {
  std::vector<int> in;
  std::vector<int> out;

  DegreeTally(int num_vertices, std::span<const Arc> arcs)
      : in(static_cast<std::size_t>(num_vertices), 0), out(in) {
    for (const Arc& arc : arcs) {
      if (arc.from < 0 || arc.from >= num_vertices || arc.to < 0 || arc.to >= num_vertices)
        throw ValidationError("arc endpoint outside the vertex range", "arcs");
      ++out[static_cast<std::size_t>(arc.from)];
      ++in[static_cast<std::size_t>(arc.to)];
    }
  }

  bool present(std::size_t v) const { return in[v] + out[v] > 0; }
  int surplus(std::size_t v) const { return out[v] - in[v]; }
};

/// Components over vertices with arcs, each listed in ascending vertex order, and the
/// components themselves ordered by smallest member.
std::vector<std::vector<int>> weak_components(int num_vertices, std::span<const Arc> arcs,
                                              const DegreeTally& tally) {
  DisjointSet sets(num_vertices);
  for (const Arc& arc : arcs) sets.unite(arc.from, arc.to);
  std::vector<int> slot_of_root(static_cast<std::size_t>(num_vertices), -1);
  std::vector<std::vector<int>> components;
  for (int v = 0; v < num_vertices; ++v) {
    if (!tally.present(static_cast<std::size_t>(v))) continue;
    int& slot = slot_of_root[static_cast<std::size_t>(sets.find(v))];
    if (slot < 0) {
      slot = static_cast<int>(components.size());
      components.emplace_back();
    }
    components[static_cast<std::size_t>(slot)].push_back(v);
  }
  return components;
}

}  // namespace

int semi_eulerization_count(int num_vertices, std::span<const Arc> arcs) {
  if (arcs.empty()) throw ValidationError("graph has no edges", "graph");
  const DegreeTally tally(num_vertices, arcs);
  int imbalance = 0;
  for (std::size_t v = 0; v < tally.in.size(); ++v) imbalance += std::abs(tally.surplus(v));

  int eulerian = 0;
  for (const auto& component : weak_components(num_vertices, arcs, tally)) {
    const bool balanced = std::all_of(component.begin(), component.end(), [&](int v) {
      return tally.surplus(static_cast<std::size_t>(v)) == 0;
    });
    if (balanced) ++eulerian;
  }
  return imbalance / 2 + eulerian - 1;
}

std::vector<AddedArc> semi_eulerize(int num_vertices, std::span<const Arc> arcs) {
  if (arcs.empty()) throw ValidationError("graph has no edges", "graph");
  DegreeTally tally(num_vertices, arcs);
  const auto components = weak_components(num_vertices, arcs, tally);

  // alpha: out-surplus (in < out), beta: in-surplus (in > out). Eulerian components
  // use their smallest vertex for both.
  std::vector<std::pair<int, int>> anchors;
  anchors.reserve(components.size());
  for (const auto& component : components) {
    int alpha = -1;
    int beta = -1;
    for (int v : component) {
      const int s = tally.surplus(static_cast<std::size_t>(v));
      if (alpha < 0 && s > 0) alpha = v;
      if (beta < 0 && s < 0) beta = v;
    }
    if (alpha < 0) alpha = component.front();
    if (beta < 0) beta = component.front();
    anchors.emplace_back(alpha, beta);
  }

  std::vector<AddedArc> added;
  auto add = [&](int from, int to, AddedRole role) {
    added.push_back(AddedArc{from, to, role});
    ++tally.out[static_cast<std::size_t>(from)];
    ++tally.in[static_cast<std::size_t>(to)];
  };
  for (std::size_t i = 0; i + 1 < anchors.size(); ++i)
    add(anchors[i].second, anchors[i + 1].first, AddedRole::connector);

  int excess = 0;
  for (std::size_t v = 0; v < tally.in.size(); ++v) excess += std::max(0, tally.surplus(v));

  // Surpluses only shrink from here on, so both cursors move forward monotonically.
  std::size_t alpha = 0;
  std::size_t beta = 0;
  for (; excess > 1; --excess) {
    while (tally.surplus(alpha) <= 0) ++alpha;
    while (tally.surplus(beta) >= 0) ++beta;
    add(static_cast<int>(beta), static_cast<int>(alpha), AddedRole::balancer);
  }
  return added;
}

bool is_semi_eulerian(int num_vertices, std::span<const Arc> arcs) {
  const DegreeTally tally(num_vertices, arcs);
  if (weak_components(num_vertices, arcs, tally).size() > 1) return false;
  int plus = 0;
  int minus = 0;
  for (std::size_t v = 0; v < tally.in.size(); ++v) {
    const int s = tally.surplus(v);
    if (s == 1) {
      ++plus;
    } else if (s == -1) {
      ++minus;
    } else if (s != 0) {
      return false;
    }
  }
  return plus <= 1 && minus <= 1;
}

std::vector<int> euler_path(int num_vertices, std::span<const Arc> arcs,
                            std::optional<int> preferred_start) {
  if (arcs.empty()) return {};
  if (!is_semi_eulerian(num_vertices, arcs))
    throw ValidationError("graph is not semi-Eulerian", "graph");
  const DegreeTally tally(num_vertices, arcs);

  std::vector<std::vector<int>> outgoing(static_cast<std::size_t>(num_vertices));
  for (std::size_t a = 0; a < arcs.size(); ++a)
    outgoing[static_cast<std::size_t>(arcs[a].from)].push_back(static_cast<int>(a));

  int start = -1;
  for (int v = 0; v < num_vertices && start < 0; ++v)
    if (tally.surplus(static_cast<std::size_t>(v)) == 1) start = v;
  if (start < 0 && preferred_start && *preferred_start >= 0 && *preferred_start < num_vertices &&
      tally.present(static_cast<std::size_t>(*preferred_start)))
    start = *preferred_start;
  for (int v = 0; v < num_vertices && start < 0; ++v)
    if (tally.present(static_cast<std::size_t>(v))) start = v;

  std::vector<std::size_t> cursor(static_cast<std::size_t>(num_vertices), 0);
  std::vector<std::pair<int, int>> stack{{start, -1}};  // (vertex, arc used to enter)
  std::vector<int> path;
  path.reserve(arcs.size());
  while (!stack.empty()) {
    const auto [v, via] = stack.back();
    auto& next = cursor[static_cast<std::size_t>(v)];
    const auto& out = outgoing[static_cast<std::size_t>(v)];
    if (next < out.size()) {
      const int arc = out[next++];
      stack.emplace_back(arcs[static_cast<std::size_t>(arc)].to, arc);
    } else {
      if (via >= 0) path.push_back(via);
      stack.pop_back();
    }
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::vector<JobId>> split_path(std::span<const Arc> arcs, std::span<const int> path,
                                           const std::vector<bool>& is_cut) {
  std::vector<std::vector<JobId>> pieces(1);
  for (int index : path) {
    const auto a = static_cast<std::size_t>(index);
    if (is_cut[a]) {
      if (!pieces.back().empty()) pieces.emplace_back();
    } else if (arcs[a].job >= 0) {
      pieces.back().push_back(arcs[a].job);
    }
  }
  if (pieces.back().empty()) pieces.pop_back();
  return pieces;
}

}  // namespace euler

int SlotMultiDigraph::vertex_of(Slot slot) const {
  const auto it = std::lower_bound(slots.begin(), slots.end(), slot);
  if (it == slots.end() || *it != slot)
    throw ValidationError("slot " + std::to_string(slot) + " is not a vertex", "slot");
  return static_cast<int>(it - slots.begin());
}

int SlotMultiDigraph::in_degree(int vertex) const {
  return static_cast<int>(
      std::count_if(edges.begin(), edges.end(), [&](const Arc& a) { return a.to == vertex; }));
}

int SlotMultiDigraph::out_degree(int vertex) const {
  return static_cast<int>(
      std::count_if(edges.begin(), edges.end(), [&](const Arc& a) { return a.from == vertex; }));
}

SlotMultiDigraph build_job_graph(const Instance& instance) {
  SlotMultiDigraph graph;
  graph.slots = occupied_slots(instance);
  graph.edges.reserve(instance.jobs().size());
  for (const Job& job : instance.jobs())
    graph.edges.push_back(Arc{graph.vertex_of(job.origin), graph.vertex_of(job.dest), job.id});
  return graph;
}

int f_of_G(const SlotMultiDigraph& graph) {
  return euler::semi_eulerization_count(graph.vertex_count(), graph.edges);
}

AddedEdgeSet semi_eulerize(const SlotMultiDigraph& graph) {
  AddedEdgeSet result;
  for (const auto& arc : euler::semi_eulerize(graph.vertex_count(), graph.edges))
    result.edges.push_back(AddedEdge{graph.slots[static_cast<std::size_t>(arc.from)],
                                     graph.slots[static_cast<std::size_t>(arc.to)], arc.role});
  return result;
}

namespace {

std::vector<Arc> combined_arcs(const SlotMultiDigraph& graph, const AddedEdgeSet& added) {
  std::vector<Arc> arcs = graph.edges;
  for (const AddedEdge& edge : added.edges)
    arcs.push_back(Arc{graph.vertex_of(edge.from), graph.vertex_of(edge.to), -1});
  return arcs;
}

}  // namespace

bool is_semi_eulerian(const SlotMultiDigraph& graph, const AddedEdgeSet& added) {
  const auto arcs = combined_arcs(graph, added);
  return euler::is_semi_eulerian(graph.vertex_count(), arcs);
}

std::vector<PathStep> euler_path(const SlotMultiDigraph& graph, const AddedEdgeSet& added) {
  const auto arcs = combined_arcs(graph, added);
  std::vector<PathStep> steps;
  for (int index : euler::euler_path(graph.vertex_count(), arcs)) {
    const Arc& arc = arcs[static_cast<std::size_t>(index)];
    PathStep step{graph.slots[static_cast<std::size_t>(arc.from)],
                  graph.slots[static_cast<std::size_t>(arc.to)], std::nullopt};
    if (static_cast<std::size_t>(index) < graph.edges.size()) step.job = arc.job;
    steps.push_back(step);
  }
  return steps;
}

Schedule solve_zero_buffer(const Instance& instance) {
  if (instance.buffer() != 0)
    throw PreconditionError("zero-buffer solver requires buffer 0, got " +
                            std::to_string(instance.buffer()));
  if (instance.empty()) return Schedule{};

  const SlotMultiDigraph graph = build_job_graph(instance);
  const AddedEdgeSet added = semi_eulerize(graph);
  const auto arcs = combined_arcs(graph, added);
  const auto path = euler::euler_path(graph.vertex_count(), arcs);

  std::vector<bool> is_cut(arcs.size(), false);
  std::fill(is_cut.begin() + static_cast<std::ptrdiff_t>(graph.edges.size()), is_cut.end(), true);
  std::vector<JobId> order;
  for (const auto& piece : euler::split_path(arcs, path, is_cut))
    order.insert(order.end(), piece.begin(), piece.end());
  return make_schedule(instance, std::move(order));
}

}  // namespace cranesched

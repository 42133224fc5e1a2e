#include "cranesched/dot.hpp"

#include <sstream>

namespace cranesched {

std::string job_graph_dot(const SlotMultiDigraph& graph, const AddedEdgeSet& added) {
  std::ostringstream dot;
  dot << "digraph job_graph {\n  rankdir=LR;\n";
  for (Slot slot : graph.slots) dot << "  s" << slot << " [label=\"" << slot << "\"];\n";
  for (const Arc& arc : graph.edges)
    dot << "  s" << graph.slots[static_cast<std::size_t>(arc.from)] << " -> s"
        << graph.slots[static_cast<std::size_t>(arc.to)] << " [label=\"j" << arc.job << "\"];\n";
  for (const AddedEdge& edge : added.edges)
    dot << "  s" << edge.from << " -> s" << edge.to << " [style=dashed, label=\""
        << (edge.role == AddedRole::connector ? "connector" : "balancer") << "\"];\n";
  dot << "}\n";
  return dot.str();
}

std::string two_level_dot(const TwoLevelGraph& graph, const AuxAssignment& assignment,
                          const std::vector<euler::AddedArc>& penalties) {
  auto name = [&](int vertex) {
    return std::string(graph.is_upper(vertex) ? "a" : "b") + std::to_string(graph.slot_of(vertex));
  };
  std::ostringstream dot;
  dot << "digraph two_level {\n";
  dot << "  subgraph upper { rank=same;";
  for (Slot slot : graph.slots) dot << " a" << slot << ";";
  dot << " }\n  subgraph lower { rank=same;";
  for (Slot slot : graph.slots) dot << " b" << slot << ";";
  dot << " }\n";
  for (const Arc& arc : graph.original)
    dot << "  " << name(arc.from) << " -> " << name(arc.to) << " [label=\"j" << arc.job << "\"];\n";
  for (const auto& [job, endpoint] : assignment)
    dot << "  b" << graph.jobs[static_cast<std::size_t>(job)].dest << " -> a" << endpoint
        << " [style=dashed, color=red];\n";
  for (const auto& penalty : penalties)
    dot << "  " << name(penalty.from) << " -> " << name(penalty.to)
        << " [style=\"dotted,bold\", color=blue];\n";
  dot << "}\n";
  return dot.str();
}

std::string interval_dot(const IntervalDigraph& digraph) {
  std::ostringstream dot;
  dot << "digraph interval {\n";
  for (const Job& job : digraph.jobs)
    dot << "  j" << job.id << " [label=\"j" << job.id << "\\nS={" << job.origin << "} T=["
        << job.dest - digraph.buffer << "," << job.dest + digraph.buffer << "]\"];\n";
  for (std::size_t u = 0; u < digraph.successors.size(); ++u)
    for (JobId v : digraph.successors[u]) dot << "  j" << u << " -> j" << v << ";\n";
  dot << "}\n";
  return dot.str();
}

std::string bipartite_dot(const BipartiteSplit& split) {
  std::ostringstream dot;
  dot << "digraph bipartite {\n  rankdir=LR;\n";
  dot << "  subgraph left { rank=same;";
  for (int v = 0; v < split.vertex_count; ++v) dot << " x" << v << ";";
  dot << " }\n  subgraph right { rank=same;";
  for (int v = 0; v < split.vertex_count; ++v) dot << " y" << v << ";";
  dot << " }\n";
  for (std::size_t u = 0; u < split.adjacency.size(); ++u) {
    for (JobId v : split.adjacency[u]) {
      const bool matched = u < split.match_left.size() && split.match_left[u] == v;
      dot << "  x" << u << " -> y" << v << " [dir=none" << (matched ? ", penwidth=3" : "")
          << "];\n";
    }
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace cranesched

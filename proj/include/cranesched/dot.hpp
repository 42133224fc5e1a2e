#pragma once

#include <string>
#include <vector>

#include "cranesched/eulerian.hpp"
#include "cranesched/pathcover.hpp"
#include "cranesched/twolevel.hpp"

namespace cranesched {

// Graphviz renderings. Arrows ("->") appear only on edge lines, so counting them counts edges.

/// Job edges solid, added edges dashed.
std::string job_graph_dot(const SlotMultiDigraph& graph, const AddedEdgeSet& added);

/// Original edges solid, auxiliary edges dashed, penalty edges dotted and bold.
std::string two_level_dot(const TwoLevelGraph& graph, const AuxAssignment& assignment,
                          const std::vector<euler::AddedArc>& penalties);

std::string interval_dot(const IntervalDigraph& digraph);

/// Matching edges bold.
std::string bipartite_dot(const BipartiteSplit& split);

}  // namespace cranesched

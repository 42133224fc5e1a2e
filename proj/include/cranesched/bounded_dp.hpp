#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cranesched/core.hpp"
#include "cranesched/twolevel.hpp"

namespace cranesched {

// Left-to-right DPs over the two-level graph that pick the auxiliary edge endpoints of
// every lower vertex b_p in turn. Slots are relabelled to positions 1..m in ascending
// order. Once b_p is processed, the upper vertex r positions to its left has all of its
// edges, so it "retires": its |in - out| and, when its weakly connected component can no
// longer grow, that component's Eulerian indicator are charged.
//
// Costs are kept doubled (sum |in - out| + 2 * Eulerian closures), starting from 0, so
// that every value is an integer. Energy = cost / 2.

/// Window of 2r upper vertices at positions base() .. base() + 2r - 1.
class Configuration {
 public:
  /// All-singleton window before any lower vertex is processed (base = 1 - r + 0).
  static Configuration initial(int radius);

  /// Builds and canonicalizes. `classes` may use any labels; vertices sharing a label are
  /// connected. Throws ValidationError if a class has mixed gamma values.
  static Configuration from_parts(int radius, int base, const std::vector<int>& classes,
                                  const std::vector<bool>& gammas, const std::vector<int>& deltas);

  int radius() const noexcept { return radius_; }
  int base() const noexcept { return base_; }
  int width() const noexcept { return 2 * radius_; }

  /// Offsets are window-relative (0 = leftmost).
  int label(int offset) const { return labels_.at(static_cast<std::size_t>(offset)); }
  bool connected(int a, int b) const { return label(a) == label(b); }
  bool gamma(int offset) const { return gammas_.at(static_cast<std::size_t>(offset)) != 0; }
  int delta(int offset) const { return deltas_.at(static_cast<std::size_t>(offset)); }

  friend auto operator<=>(const Configuration&, const Configuration&) = default;
  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  int radius_ = 1;
  int base_ = 0;
  std::vector<int> labels_;   // first-occurrence labels: canonical partition encoding
  std::vector<char> gammas_;  // retired members of my class are all balanced
  std::vector<int> deltas_;   // indegree so far
};

/// Edges incident to the lower vertex being processed, addressed by absolute upper
/// position. Must lie in [base, base + 2r].
struct EdgeBatch {
  std::vector<std::pair<int, int>> aux;       // (endpoint position, multiplicity)
  std::vector<std::pair<int, int>> original;  // (origin position, multiplicity)
  int retiring_out_degree = 0;                // out-degree of the upper vertex at base
};

struct Retirement {
  int indegree = 0;
  int outdegree = 0;
  bool closed = false;    // not connected to any surviving window vertex
  bool eulerian = false;  // closed, has edges, and every member balanced
  int cost2() const noexcept { return std::abs(outdegree - indegree) + (eulerian ? 2 : 0); }
};

struct TransitionResult {
  Configuration next;
  Retirement retired;
};

TransitionResult transition_config(const Configuration& config, const EdgeBatch& batch);

/// Unit-length state on the window (a_i, a_{i+1}).
struct UnitState {
  bool connected = false;
  bool gamma0 = false;
  bool gamma1 = false;
  int delta0 = 0;
  int delta1 = 0;

  friend auto operator<=>(const UnitState&, const UnitState&) = default;
};

struct DpTraceRecord {
  int position = 0;  // 1-based index of the processed lower vertex
  Slot slot = 0;
  std::size_t states = 0;
  int best_energy_so_far = 0;  // ceil(best doubled cost / 2)
};

struct DpResult {
  Schedule schedule;
  int optimum = 0;
  AuxAssignment assignment;
  std::vector<DpTraceRecord> trace;
  std::size_t max_states = 0;
};

struct BoundedOptions {
  int k_limit = 3;
};

/// Requires buffer 1 and every job of length 1. Non-contiguous slots go to solve_bounded.
DpResult solve_unit_detailed(const Instance& instance);
Schedule solve_unit(const Instance& instance);

/// Requires max(buffer, longest job) <= k_limit.
DpResult solve_bounded_detailed(const Instance& instance, BoundedOptions options = {});
Schedule solve_bounded(const Instance& instance, BoundedOptions options = {});

/// (2k)^{2k} * 2^{2k} * (n + 1)^{2k}, saturating at the double range.
double configuration_bound(int k, int n);

std::string format_trace_line(const DpTraceRecord& record);

}  // namespace cranesched

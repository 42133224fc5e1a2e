#include "cranesched/bounded_dp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "cranesched/disjoint_set.hpp"

namespace cranesched {

Configuration Configuration::initial(int radius) {
  const int width = 2 * radius;
  std::vector<int> classes(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) classes[static_cast<std::size_t>(i)] = i;
  return from_parts(radius, 1 - radius, classes, std::vector<bool>(classes.size(), true),
                    std::vector<int>(classes.size(), 0));
}

Configuration Configuration::from_parts(int radius, int base, const std::vector<int>& classes,
                                        const std::vector<bool>& gammas,
                                        const std::vector<int>& deltas) {
  if (radius < 1) throw ValidationError("must be at least 1", "radius");
  const auto width = static_cast<std::size_t>(2 * radius);
  if (classes.size() != width || gammas.size() != width || deltas.size() != width)
    throw ValidationError("window vectors must have 2 * radius entries", "configuration");

  Configuration config;
  config.radius_ = radius;
  config.base_ = base;
  config.labels_.resize(width);
  config.gammas_.resize(width);
  config.deltas_ = deltas;
  std::map<int, std::pair<int, bool>> seen;  // raw label -> (canonical label, gamma)
  for (std::size_t i = 0; i < width; ++i) {
    auto [it, fresh] =
        seen.try_emplace(classes[i], static_cast<int>(seen.size()), gammas[i]);
    if (!fresh && it->second.second != gammas[i])
      throw ValidationError("connected window vertices disagree on gamma", "gammas");
    config.labels_[i] = it->second.first;
    config.gammas_[i] = gammas[i] ? 1 : 0;
  }
  return config;
}

TransitionResult transition_config(const Configuration& config, const EdgeBatch& batch) {
  const int width = config.width();
  const int lower = width + 1;  // extended window offsets 0..width, then the lower vertex
  DisjointSet sets(width + 2);
  std::vector<char> gamma(static_cast<std::size_t>(width + 2), 1);
  std::vector<int> delta(static_cast<std::size_t>(width + 1), 0);

  std::vector<int> first_with_label(static_cast<std::size_t>(width), -1);
  for (int off = 0; off < width; ++off) {
    gamma[static_cast<std::size_t>(off)] = config.gamma(off) ? 1 : 0;
    delta[static_cast<std::size_t>(off)] = config.delta(off);
    int& first = first_with_label[static_cast<std::size_t>(config.label(off))];
    if (first < 0) {
      first = off;
    } else {
      sets.unite(first, off);
    }
  }

  auto link = [&](int off) {
    const int a = sets.find(off);
    const int b = sets.find(lower);
    const char merged = gamma[static_cast<std::size_t>(a)] && gamma[static_cast<std::size_t>(b)];
    gamma[static_cast<std::size_t>(sets.unite(a, b))] = merged;
  };
  auto offset_of = [&](int position) {
    const int off = position - config.base();
    if (off < 0 || off > width)
      throw ValidationError("edge endpoint " + std::to_string(position) + " outside window [" +
                                std::to_string(config.base()) + ", " +
                                std::to_string(config.base() + width) + "]",
                            "batch");
    return off;
  };

  for (const auto& [position, count] : batch.original) {
    const int off = offset_of(position);
    if (count > 0) link(off);
  }
  for (const auto& [position, count] : batch.aux) {
    const int off = offset_of(position);
    if (count < 0) throw ValidationError("negative multiplicity", "batch");
    if (count > 0) {
      link(off);
      delta[static_cast<std::size_t>(off)] += count;
    }
  }

  Retirement retired;
  retired.indegree = delta[0];
  retired.outdegree = batch.retiring_out_degree;
  const bool balanced = retired.indegree == retired.outdegree;
  const int root = sets.find(0);
  retired.closed = true;
  for (int off = 1; off <= width; ++off)
    if (sets.find(off) == root) retired.closed = false;
  if (!retired.closed) {
    gamma[static_cast<std::size_t>(root)] = gamma[static_cast<std::size_t>(root)] && balanced;
  } else {
    const bool has_edges = retired.indegree + retired.outdegree > 0;
    retired.eulerian = has_edges && gamma[static_cast<std::size_t>(root)] && balanced;
  }

  std::vector<int> classes;
  std::vector<bool> gammas;
  std::vector<int> deltas;
  for (int off = 1; off <= width; ++off) {
    const int r = sets.find(off);
    classes.push_back(r);
    gammas.push_back(gamma[static_cast<std::size_t>(r)] != 0);
    deltas.push_back(delta[static_cast<std::size_t>(off)]);
  }
  return {Configuration::from_parts(config.radius(), config.base() + 1, classes, gammas, deltas),
          retired};
}

double configuration_bound(int k, int n) {
  const double w = 2.0 * std::max(1, k);
  return std::pow(w, w) * std::pow(2.0, w) * std::pow(static_cast<double>(n + 1), w);
}

std::string format_trace_line(const DpTraceRecord& record) {
  std::ostringstream line;
  line << R"({"position":)" << record.position << R"(,"slot":)" << record.slot
       << R"(,"states":)" << record.states << R"(,"best":)" << record.best_energy_so_far << '}';
  return line.str();
}

namespace {

/// Per-position view of the instance after relabelling slots to 1..m.
struct PositionData {
  std::vector<Slot> slots;                              // slots[p - 1]
  std::vector<int> out;                                 // out[p], p in [0, m + 1]
  std::vector<std::vector<std::pair<int, int>>> into;   // original (origin, count) into b_p
  std::vector<std::vector<JobId>> ending;               // jobs with dest at p, ascending id

  explicit PositionData(const Instance& instance) : slots(occupied_slots(instance)) {
    const auto m = slots.size();
    out.assign(m + 2, 0);
    into.resize(m + 2);
    ending.resize(m + 2);
    for (const Job& job : instance.jobs()) {
      const int s = position(job.origin);
      const int t = position(job.dest);
      ++out[static_cast<std::size_t>(s)];
      auto& list = into[static_cast<std::size_t>(t)];
      auto it = std::find_if(list.begin(), list.end(), [&](auto& e) { return e.first == s; });
      if (it == list.end()) {
        list.emplace_back(s, 1);
      } else {
        ++it->second;
      }
      ending[static_cast<std::size_t>(t)].push_back(job.id);
    }
  }

  int m() const noexcept { return static_cast<int>(slots.size()); }
  int position(Slot slot) const {
    return static_cast<int>(std::lower_bound(slots.begin(), slots.end(), slot) - slots.begin()) + 1;
  }
  Slot slot(int p) const { return slots[static_cast<std::size_t>(p - 1)]; }
  int in_lower(int p) const {
    return static_cast<int>(ending[static_cast<std::size_t>(p)].size());
  }
};

/// Calls visit(parts) for every split of `total` into parts.size() non-negative entries.
void for_each_split(int total, std::size_t parts, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> split(parts, 0);
  if (parts == 0) {
    if (total == 0) visit(split);
    return;
  }
  std::function<void(std::size_t, int)> rec = [&](std::size_t index, int left) {
    if (index + 1 == parts) {
      split[index] = left;
      visit(split);
      return;
    }
    for (int take = left; take >= 0; --take) {
      split[index] = take;
      rec(index + 1, left - take);
    }
  };
  rec(0, total);
}

/// Hands the endpoint positions chosen for b_p to the jobs ending there (ascending ids
/// get ascending endpoints).
void assign_endpoints(const PositionData& data, int p, const std::vector<int>& endpoints,
                      AuxAssignment& assignment) {
  const auto& jobs = data.ending[static_cast<std::size_t>(p)];
  if (endpoints.size() != jobs.size()) throw Error("split does not match lower indegree");
  std::vector<int> sorted = endpoints;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < jobs.size(); ++i) assignment[jobs[i]] = data.slot(sorted[i]);
}

template <class State>
struct Layer {
  struct Entry {
    State state;
    int cost2 = 0;
    int parent = -1;
    std::vector<int> endpoints;  // positions chosen for this step's lower vertex
  };
  std::vector<Entry> entries;
  std::map<State, int> index;

  void relax(const State& state, int cost2, int parent, const std::vector<int>& endpoints) {
    auto [it, fresh] = index.try_emplace(state, static_cast<int>(entries.size()));
    if (fresh) {
      entries.push_back(Entry{state, cost2, parent, endpoints});
    } else if (cost2 < entries[static_cast<std::size_t>(it->second)].cost2) {
      auto& entry = entries[static_cast<std::size_t>(it->second)];
      entry.cost2 = cost2;
      entry.parent = parent;
      entry.endpoints = endpoints;
    }
  }

  int best_cost2() const {
    int best = std::numeric_limits<int>::max();
    for (const auto& entry : entries) best = std::min(best, entry.cost2);
    return best;
  }
};

template <class State>
DpResult finish(const Instance& instance, const PositionData& data,
                const std::vector<Layer<State>>& layers, int best_entry, int best_cost2,
                int first_step) {
  DpResult result;
  result.optimum = best_cost2 / 2;
  // Layer s was produced by processing lower vertex first_step + s - 1 (layer 0 is initial).
  int entry = best_entry;
  for (std::size_t s = layers.size() - 1; s > 0; --s) {
    const auto& e = layers[s].entries[static_cast<std::size_t>(entry)];
    const int p = first_step + static_cast<int>(s) - 1;
    if (p >= 1 && p <= data.m()) assign_endpoints(data, p, e.endpoints, result.assignment);
    entry = e.parent;
  }
  const TwoLevelGraph graph = build_two_level(instance);
  result.schedule = schedule_from_assignment(graph, result.assignment);
  return result;
}

}  // namespace

DpResult solve_bounded_detailed(const Instance& instance, BoundedOptions options) {
  const int k = instance.locality();
  if (k > options.k_limit)
    throw PreconditionError("bounded DP needs max(buffer, job length) <= " +
                            std::to_string(options.k_limit) + ", got " + std::to_string(k) +
                            "; use dp-exact-subset or matching instead");
  if (instance.empty()) return {};

  const PositionData data(instance);
  const int m = data.m();
  const int r = std::max(1, k);
  const double bound = configuration_bound(k, instance.size());

  std::vector<Layer<Configuration>> layers(1);
  layers[0].relax(Configuration::initial(r), 0, -1, {});
  DpResult result;

  // Lower vertices 1..m, then r empty steps that retire the rest of the window.
  for (int p = 1; p <= m + r; ++p) {
    const auto& current = layers.back();
    Layer<Configuration> next;
    const bool real = p <= m;
    std::vector<int> targets;
    if (real)
      for (int x = std::max(1, p - r); x <= std::min(m, p + r); ++x)
        if (std::abs(data.slot(x) - data.slot(p)) <= instance.buffer()) targets.push_back(x);

    const int retiring = p - r;
    EdgeBatch batch;
    batch.retiring_out_degree =
        retiring >= 1 && retiring <= m ? data.out[static_cast<std::size_t>(retiring)] : 0;
    if (real) batch.original = data.into[static_cast<std::size_t>(p)];

    for (std::size_t e = 0; e < current.entries.size(); ++e) {
      const auto& entry = current.entries[e];
      for_each_split(real ? data.in_lower(p) : 0, targets.size(), [&](const std::vector<int>& split) {
        batch.aux.clear();
        std::vector<int> endpoints;
        for (std::size_t t = 0; t < targets.size(); ++t) {
          if (split[t] == 0) continue;
          batch.aux.emplace_back(targets[t], split[t]);
          endpoints.insert(endpoints.end(), static_cast<std::size_t>(split[t]), targets[t]);
        }
        const auto [config, retired] = transition_config(entry.state, batch);
        next.relax(config, entry.cost2 + retired.cost2(), static_cast<int>(e), endpoints);
      });
    }
    if (static_cast<double>(next.entries.size()) > bound)
      throw Error("configuration count exceeded its analytic bound");
    result.max_states = std::max(result.max_states, next.entries.size());
    if (real)
      result.trace.push_back(DpTraceRecord{p, data.slot(p), next.entries.size(),
                                           (next.best_cost2() + 1) / 2});
    layers.push_back(std::move(next));
  }

  const auto& last = layers.back();
  int best_entry = 0;
  for (std::size_t e = 1; e < last.entries.size(); ++e)
    if (last.entries[e].cost2 < last.entries[static_cast<std::size_t>(best_entry)].cost2)
      best_entry = static_cast<int>(e);
  DpResult finished =
      finish(instance, data, layers, best_entry,
             last.entries[static_cast<std::size_t>(best_entry)].cost2, 1);
  finished.trace = std::move(result.trace);
  finished.max_states = result.max_states;
  return finished;
}

Schedule solve_bounded(const Instance& instance, BoundedOptions options) {
  return solve_bounded_detailed(instance, options).schedule;
}

DpResult solve_unit_detailed(const Instance& instance) {
  if (instance.buffer() != 1) throw PreconditionError("unit DP requires buffer 1");
  for (const Job& job : instance.jobs())
    if (job.length() != 1)
      throw PreconditionError("unit DP requires every job to have length 1 (job " +
                              std::to_string(job.id) + ")");
  if (instance.empty()) return {};

  const PositionData data(instance);
  const int m = data.m();
  if (data.slot(m) - data.slot(1) != m - 1) return solve_bounded_detailed(instance);

  auto out = [&](int x) { return x >= 1 && x <= m ? data.out[static_cast<std::size_t>(x)] : 0; };
  // Original arcs into b_{i+1} come from a_i or a_{i+2}.
  auto originals_from = [&](int p, int origin) {
    for (const auto& [x, count] : data.into[static_cast<std::size_t>(p)])
      if (x == origin) return count;
    return 0;
  };

  std::vector<Layer<UnitState>> layers(1);
  layers[0].relax(UnitState{false, true, true, 0, 0}, 0, -1, {});
  DpResult result;

  for (int i = 0; i < m; ++i) {
    const auto& current = layers.back();
    Layer<UnitState> next;
    const int p = i + 1;
    const int demand = data.in_lower(p);
    const bool has_left = i >= 1;
    const bool has_right = i + 2 <= m;
    const bool orig_left = originals_from(p, i) > 0;
    const bool orig_right = originals_from(p, i + 2) > 0;

    for (std::size_t e = 0; e < current.entries.size(); ++e) {
      const UnitState& s = current.entries[e].state;
      for (int to_left = 0; to_left <= (has_left ? demand : 0); ++to_left) {
        for (int to_right = 0; to_left + to_right <= demand && (has_right || to_right == 0);
             ++to_right) {
          const int to_mid = demand - to_left - to_right;

          // Which of a_i, a_{i+1}, a_{i+2} the lower vertex b_{i+1} touches.
          const bool touches_i = orig_left || to_left > 0;
          const bool touches_mid = to_mid > 0;
          const bool touches_right = orig_right || to_right > 0;
          const bool link_i_mid = touches_i && touches_mid;
          const bool link_i_right = touches_i && touches_right;
          const bool link_mid_right = touches_mid && touches_right;

          const int in_i = s.delta0 + to_left;
          const bool balanced_i = in_i == out(i);
          const bool i_joins_mid = s.connected || link_i_mid;
          const bool i_joins_right = link_i_right || (s.connected && link_mid_right);

          UnitState t;
          t.connected = link_mid_right || (link_i_right && s.connected);
          t.gamma0 = s.gamma1 && (!i_joins_mid || (s.gamma0 && balanced_i));
          t.gamma1 = t.connected ? t.gamma0 : (!i_joins_right || (s.gamma0 && balanced_i));
          t.delta0 = s.delta1 + to_mid;
          t.delta1 = to_right;

          const bool closes = !i_joins_mid && !i_joins_right;
          const bool eulerian = closes && in_i + out(i) > 0 && s.gamma0 && balanced_i;
          const int cost2 = std::abs(out(i) - in_i) + (eulerian ? 2 : 0);

          std::vector<int> endpoints;
          endpoints.insert(endpoints.end(), static_cast<std::size_t>(to_left), i);
          endpoints.insert(endpoints.end(), static_cast<std::size_t>(to_mid), i + 1);
          endpoints.insert(endpoints.end(), static_cast<std::size_t>(to_right), i + 2);
          next.relax(t, current.entries[e].cost2 + cost2, static_cast<int>(e), endpoints);
        }
      }
    }
    result.max_states = std::max(result.max_states, next.entries.size());
    result.trace.push_back(
        DpTraceRecord{p, data.slot(p), next.entries.size(), (next.best_cost2() + 1) / 2});
    layers.push_back(std::move(next));
  }

  // Retire a_m; a_{m+1} does not exist, so its component closes.
  const auto& last = layers.back();
  int best_entry = -1;
  int best_cost2 = std::numeric_limits<int>::max();
  for (std::size_t e = 0; e < last.entries.size(); ++e) {
    const UnitState& s = last.entries[e].state;
    const bool balanced = s.delta0 == out(m);
    const bool eulerian = s.delta0 + out(m) > 0 && s.gamma0 && balanced;
    const int total = last.entries[e].cost2 + std::abs(out(m) - s.delta0) + (eulerian ? 2 : 0);
    if (total < best_cost2) {
      best_cost2 = total;
      best_entry = static_cast<int>(e);
    }
  }
  DpResult finished = finish(instance, data, layers, best_entry, best_cost2, 1);
  finished.trace = std::move(result.trace);
  finished.max_states = result.max_states;
  return finished;
}

Schedule solve_unit(const Instance& instance) { return solve_unit_detailed(instance).schedule; }

}  // namespace cranesched

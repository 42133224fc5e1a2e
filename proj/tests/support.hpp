#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "cranesched/core.hpp"

namespace cranesched::testing {

/// Jobs given as (origin, dest) pairs; ids follow the listing order.
inline Instance make_instance(int eta, int buffer, std::initializer_list<std::pair<Slot, Slot>> jobs) {
  std::vector<Job> list;
  for (const auto& [origin, dest] : jobs) list.push_back(Job{static_cast<JobId>(list.size()), origin, dest});
  return Instance(eta, buffer, std::move(list));
}

/// Four-job golden instance with buffer 1: j1 7->2, j2 2->9, j3 11->9, j4 8->13.
inline Instance golden_instance() {
  return make_instance(14, 1, {{7, 2}, {2, 9}, {11, 9}, {8, 13}});
}

/// Instances with n in [n_lo, n_hi], eta in [2, eta_hi], buffer in [0, e_hi], and job
/// lengths <= max_length when set.
inline std::vector<Instance> random_corpus(std::size_t count, int n_lo, int n_hi, int eta_hi, int e_hi,
                                           std::optional<int> max_length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> corpus;
  while (corpus.size() < count) {
    const int n = std::uniform_int_distribution<int>(n_lo, n_hi)(rng);
    int eta = std::uniform_int_distribution<int>(2, eta_hi)(rng);
    if (max_length) eta = std::max(eta, *max_length + 1);
    const int e = std::uniform_int_distribution<int>(0, e_hi)(rng);
    corpus.push_back(generate_instance(n, eta, e, max_length, rng()));
  }
  return corpus;
}

/// Buffer-1 instances whose jobs all have length 1, with n in [1, n_hi].
inline std::vector<Instance> unit_corpus(std::size_t count, int n_hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> corpus;
  while (corpus.size() < count) {
    const int n = std::uniform_int_distribution<int>(1, n_hi)(rng);
    const int eta = std::uniform_int_distribution<int>(2, 10)(rng);
    std::vector<Job> jobs;
    for (int j = 0; j < n; ++j) {
      const Slot origin = std::uniform_int_distribution<int>(1, eta)(rng);
      const Slot dest = origin == 1 ? 2 : origin == eta ? eta - 1 : origin + (rng() % 2 ? 1 : -1);
      jobs.push_back(Job{j, origin, dest});
    }
    corpus.emplace_back(eta, 1, std::move(jobs));
  }
  return corpus;
}

inline bool is_permutation_of_ids(const Instance& instance, const std::vector<JobId>& order) {
  std::vector<JobId> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<JobId>(i)) return false;
  return sorted.size() == static_cast<std::size_t>(instance.size());
}

}  // namespace cranesched::testing

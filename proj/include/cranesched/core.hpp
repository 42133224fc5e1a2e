#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cranesched {

using JobId = int;
using Slot = int;

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent data. `field()` names the offending field when known.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message, std::string field = {})
      : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// The instance is valid but the requested algorithm does not apply to it.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

struct Job {
  JobId id = 0;
  Slot origin = 1;
  Slot dest = 1;

  int length() const noexcept { return std::abs(origin - dest); }
  friend bool operator==(const Job&, const Job&) = default;
};

/// A batch of jobs on the slot line [1, eta] together with the energy buffer.
/// Jobs are stored by id, so `jobs()[j].id == j`.
class Instance {
 public:
  Instance() = default;
  Instance(int eta, int buffer, std::vector<Job> jobs);

  int eta() const noexcept { return eta_; }
  int buffer() const noexcept { return buffer_; }
  const std::vector<Job>& jobs() const noexcept { return jobs_; }
  const Job& job(JobId id) const { return jobs_.at(static_cast<std::size_t>(id)); }
  int size() const noexcept { return static_cast<int>(jobs_.size()); }
  bool empty() const noexcept { return jobs_.empty(); }

  /// max(buffer, longest job length).
  int locality() const noexcept;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int eta_ = 1;
  int buffer_ = 0;
  std::vector<Job> jobs_;
};

struct Schedule {
  std::vector<JobId> order;
  int energy = 0;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Sorted, de-duplicated set of slots touched by any job (origins and destinations).
std::vector<Slot> occupied_slots(const Instance& instance);

/// Throws ValidationError unless `order` is a permutation of the instance's job ids.
void check_permutation(const Instance& instance, std::span<const JobId> order);

/// Lifts that cannot draw on the buffer. The first lift always costs one unit.
int evaluate_energy(const Instance& instance, std::span<const JobId> order);

/// Wraps an order with its evaluated energy.
Schedule make_schedule(const Instance& instance, std::vector<JobId> order);

/// Throws ValidationError if the order is not a permutation or the energy is stale.
void validate_schedule(const Instance& instance, const Schedule& schedule);

inline constexpr int kDefaultOracleCap = 9;

/// Exhaustive search over all n! orders. Ties go to the lexicographically smallest order.
Schedule brute_force_opt(const Instance& instance, int cap = kDefaultOracleCap);

/// Uniform random instance. `max_length`, when set, bounds |origin - dest| and must be < eta.
Instance generate_instance(int n, int eta, int buffer, std::optional<int> max_length,
                           std::uint64_t seed);

}  // namespace cranesched

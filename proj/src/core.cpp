#include "cranesched/core.hpp"

#include <algorithm>
#include <random>

namespace cranesched {

Instance::Instance(int eta, int buffer, std::vector<Job> jobs)
    : eta_(eta), buffer_(buffer), jobs_(std::move(jobs)) {
  if (eta_ < 1) throw ValidationError("must be at least 1", "eta");
  if (buffer_ < 0) throw ValidationError("must be non-negative", "buffer");
  std::sort(jobs_.begin(), jobs_.end(),
            [](const Job& a, const Job& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < jobs_.size(); ++i) {
    const Job& job = jobs_[i];
    const std::string where = "jobs[" + std::to_string(i) + "]";
    if (job.id != static_cast<JobId>(i))
      throw ValidationError("job ids must be exactly 0..n-1", where + ".id");
    if (job.origin < 1 || job.origin > eta_)
      throw ValidationError("slot outside [1, eta]", where + ".origin");
    if (job.dest < 1 || job.dest > eta_)
      throw ValidationError("slot outside [1, eta]", where + ".dest");
  }
}

int Instance::locality() const noexcept {
  int k = buffer_;
  for (const Job& job : jobs_) k = std::max(k, job.length());
  return k;
}

std::vector<Slot> occupied_slots(const Instance& instance) {
  std::vector<Slot> slots;
  slots.reserve(2 * instance.jobs().size());
  for (const Job& job : instance.jobs()) {
    slots.push_back(job.origin);
    slots.push_back(job.dest);
  }
  std::sort(slots.begin(), slots.end());
  slots.erase(std::unique(slots.begin(), slots.end()), slots.end());
  return slots;
}

void check_permutation(const Instance& instance, std::span<const JobId> order) {
  const auto n = static_cast<std::size_t>(instance.size());
  if (order.size() != n)
    throw ValidationError("expected " + std::to_string(n) + " job ids, got " +
                              std::to_string(order.size()),
                          "order");
  std::vector<bool> seen(n, false);
  for (JobId id : order) {
    if (id < 0 || static_cast<std::size_t>(id) >= n)
      throw ValidationError("unknown job id " + std::to_string(id), "order");
    if (seen[static_cast<std::size_t>(id)])
      throw ValidationError("duplicate job id " + std::to_string(id), "order");
    seen[static_cast<std::size_t>(id)] = true;
  }
}

int evaluate_energy(const Instance& instance, std::span<const JobId> order) {
  check_permutation(instance, order);
  if (order.empty()) return 0;
  int energy = 1;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Job& prev = instance.job(order[i - 1]);
    const Job& next = instance.job(order[i]);
    if (std::abs(next.origin - prev.dest) > instance.buffer()) ++energy;
  }
  return energy;
}

Schedule make_schedule(const Instance& instance, std::vector<JobId> order) {
  const int energy = evaluate_energy(instance, order);
  return Schedule{std::move(order), energy};
}

void validate_schedule(const Instance& instance, const Schedule& schedule) {
  const int energy = evaluate_energy(instance, schedule.order);
  if (energy != schedule.energy)
    throw ValidationError("stated " + std::to_string(schedule.energy) +
                              " but the order costs " + std::to_string(energy),
                          "energy");
}

Schedule brute_force_opt(const Instance& instance, int cap) {
  if (instance.size() > cap)
    throw PreconditionError("oracle refuses n = " + std::to_string(instance.size()) +
                            " (cap " + std::to_string(cap) + ")");
  std::vector<JobId> order(static_cast<std::size_t>(instance.size()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<JobId>(i);

  Schedule best{order, evaluate_energy(instance, order)};
  // next_permutation walks orders lexicographically, so strict improvement keeps the
  // smallest order among ties.
  while (std::next_permutation(order.begin(), order.end())) {
    if (best.energy == 1) break;
    const int energy = evaluate_energy(instance, order);
    if (energy < best.energy) best = Schedule{order, energy};
  }
  return best;
}

Instance generate_instance(int n, int eta, int buffer, std::optional<int> max_length,
                           std::uint64_t seed) {
  if (n < 0) throw ValidationError("must be non-negative", "n");
  if (eta < 1) throw ValidationError("must be at least 1", "eta");
  if (buffer < 0) throw ValidationError("must be non-negative", "buffer");
  if (max_length && (*max_length < 0 || *max_length >= eta))
    throw ValidationError("must lie in [0, eta - 1]; omit it for no bound", "max_length");

  std::mt19937_64 rng(seed);
  std::vector<Job> jobs;
  jobs.reserve(static_cast<std::size_t>(n));
  for (int id = 0; id < n; ++id) {
    const Slot origin = std::uniform_int_distribution<Slot>(1, eta)(rng);
    Slot lo = 1;
    Slot hi = eta;
    if (max_length) {
      lo = std::max(1, origin - *max_length);
      hi = std::min(eta, origin + *max_length);
    }
    const Slot dest = std::uniform_int_distribution<Slot>(lo, hi)(rng);
    jobs.push_back(Job{id, origin, dest});
  }
  return Instance(eta, buffer, std::move(jobs));
}

}  // namespace cranesched

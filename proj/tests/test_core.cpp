#include <doctest.h>

#include <random>

#include "cranesched/core.hpp"
#include "cranesched/json_io.hpp"
#include "support.hpp"

using namespace cranesched;
using testing::make_instance;

TEST_CASE("evaluate_energy examples") {
  const Instance golden = testing::golden_instance();
  CHECK(evaluate_energy(golden, std::vector<JobId>{0, 1, 3, 2}) == 2);
  CHECK(evaluate_energy(make_instance(5, 0, {{2, 4}}), std::vector<JobId>{0}) == 1);
  CHECK(evaluate_energy(make_instance(6, 0, {{1, 2}, {5, 6}}), std::vector<JobId>{0, 1}) == 2);
  CHECK(evaluate_energy(make_instance(3, 0, {}), std::vector<JobId>{}) == 0);
}

TEST_CASE("evaluate_energy rejects non-permutations") {
  const Instance instance = make_instance(6, 0, {{1, 2}, {5, 6}});
  CHECK_THROWS_AS(evaluate_energy(instance, std::vector<JobId>{0, 0}), ValidationError);
  CHECK_THROWS_AS(evaluate_energy(instance, std::vector<JobId>{0}), ValidationError);
  CHECK_THROWS_AS(evaluate_energy(instance, std::vector<JobId>{0, 2}), ValidationError);
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(Instance(0, 0, {}), ValidationError);
  CHECK_THROWS_AS(Instance(5, -1, {}), ValidationError);
  CHECK_THROWS_AS(Instance(5, 0, {Job{0, 6, 1}}), ValidationError);
  CHECK_THROWS_AS(Instance(5, 0, {Job{1, 2, 1}}), ValidationError);
  // Ids may arrive out of order; they are stored by id.
  const Instance shuffled(5, 0, {Job{1, 3, 4}, Job{0, 1, 2}});
  CHECK(shuffled.job(0).origin == 1);
  // Duplicate (origin, dest) pairs and zero-length jobs are legal.
  CHECK_NOTHROW(make_instance(5, 0, {{1, 2}, {1, 2}, {3, 3}}));
}

TEST_CASE("brute_force_opt examples") {
  CHECK(brute_force_opt(testing::golden_instance()).energy == 2);
  CHECK(brute_force_opt(make_instance(3, 0, {{1, 2}, {2, 3}})).energy == 1);
  // Both orders of two 1->2 jobs leave a gap of 1 > 0.
  const Schedule twins = brute_force_opt(make_instance(3, 0, {{1, 2}, {1, 2}}));
  CHECK(twins.energy == 2);
  CHECK(twins.order == std::vector<JobId>{0, 1});
}

TEST_CASE("brute_force_opt cap and tie-break") {
  const Instance big = generate_instance(10, 20, 1, std::nullopt, 3);
  CHECK_THROWS_AS(brute_force_opt(big), PreconditionError);
  CHECK_NOTHROW(brute_force_opt(generate_instance(4, 20, 1, std::nullopt, 3), 4));
  // 2->1 then 1->2 costs 1, and so does 1->2 then 2->1; the smaller order wins.
  CHECK(brute_force_opt(make_instance(3, 0, {{1, 2}, {2, 1}})).order == std::vector<JobId>{0, 1});
}

TEST_CASE("energy bounds hold for random permutations") {
  std::mt19937_64 rng(11);
  for (const Instance& instance : testing::random_corpus(100, 1, 8, 12, 3, std::nullopt, 5)) {
    std::vector<JobId> order(static_cast<std::size_t>(instance.size()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<JobId>(i);
    const int opt = brute_force_opt(instance).energy;
    for (int trial = 0; trial < 10; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      const int energy = evaluate_energy(instance, order);
      CHECK(energy >= 1);
      CHECK(energy <= instance.size());
      CHECK(opt <= energy);
      if (instance.buffer() >= instance.eta() - 1) CHECK(energy == 1);
    }
  }
}

TEST_CASE("generate_instance") {
  CHECK(generate_instance(0, 5, 1, std::nullopt, 1).empty());
  CHECK(generate_instance(12, 9, 2, 3, 42) == generate_instance(12, 9, 2, 3, 42));
  const Instance bounded = generate_instance(50, 20, 2, 2, 7);
  CHECK(bounded.size() == 50);
  for (const Job& job : bounded.jobs()) CHECK(job.length() <= 2);
  CHECK_THROWS_AS(generate_instance(5, 4, 0, 4, 1), ValidationError);
  CHECK_THROWS_AS(generate_instance(-1, 4, 0, std::nullopt, 1), ValidationError);
}

TEST_CASE("instance JSON round-trips") {
  const Instance golden = testing::golden_instance();
  const std::string text = serialize_instance(golden);
  CHECK(text ==
        R"({"eta":14,"buffer":1,"jobs":[{"id":0,"origin":7,"dest":2},{"id":1,"origin":2,"dest":9},)"
        R"({"id":2,"origin":11,"dest":9},{"id":3,"origin":8,"dest":13}]})");
  CHECK(parse_instance(text) == golden);
  for (const Instance& instance : testing::random_corpus(50, 0, 9, 15, 3, std::nullopt, 77))
    CHECK(parse_instance(serialize_instance(instance)) == instance);
}

TEST_CASE("instance JSON errors name the field") {
  auto field_of = [](const std::string& text) {
    try {
      parse_instance(text);
    } catch (const ValidationError& e) {
      return e.field();
    }
    return std::string("<no error>");
  };
  CHECK(field_of(R"({"eta":5,"jobs":[]})") == "buffer");
  CHECK(field_of(R"({"eta":5,"buffer":0,"jobs":[],"extra":1})") == "extra");
  CHECK(field_of(R"({"eta":5,"buffer":"1","jobs":[]})") == "buffer");
  CHECK(field_of(R"({"eta":5,"buffer":0,"jobs":[{"id":0,"origin":1}]})") == "jobs[0].dest");
  CHECK(field_of(R"({"eta":5,"buffer":0,"jobs":[{"id":0,"origin":9,"dest":1}]})") == "jobs[0].origin");
  CHECK(field_of(R"({"buffer":0,"jobs":[], "eta":5})") == "<no error>");
  CHECK(field_of("[1,2]") == "instance");
}

TEST_CASE("schedule JSON") {
  const Schedule schedule{{0, 1, 3, 2}, 2};
  CHECK(serialize_schedule(schedule) == R"({"order":[0,1,3,2],"energy":2})");
  CHECK(parse_schedule(serialize_schedule(schedule)) == schedule);
  CHECK(parse_schedule(R"({"energy":1,"order":[0]})") == Schedule{{0}, 1});
  CHECK_THROWS_AS(parse_schedule(R"({"order":[0,0],"energy":1})"), ValidationError);
  CHECK_THROWS_AS(parse_schedule(R"({"order":[0],"energy":1,"x":2})"), ValidationError);
  CHECK_THROWS_AS(parse_schedule(R"({"order":[0]})"), ValidationError);

  const Instance golden = testing::golden_instance();
  CHECK_NOTHROW(validate_schedule(golden, schedule));
  CHECK_THROWS_AS(validate_schedule(golden, Schedule{{0, 1, 3, 2}, 3}), ValidationError);
  CHECK_THROWS_AS(validate_schedule(golden, Schedule{{0, 1, 3}, 2}), ValidationError);
}

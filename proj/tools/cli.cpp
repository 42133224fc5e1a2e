#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cranesched/core.hpp"
#include "cranesched/json_io.hpp"
#include "cranesched/solve.hpp"

namespace cranesched::cli {
namespace {

struct Failure {
  int code;
  std::string message;
};

int oracle_cap_from_env() {
  const char* raw = std::getenv("CRANESCHED_ORACLE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultOracleCap;
  try {
    std::size_t used = 0;
    const int cap = std::stoi(raw, &used);
    if (used != std::string(raw).size() || cap < 0) throw std::invalid_argument(raw);
    return cap;
  } catch (const std::exception&) {
    throw Failure{kExitFailure, std::string("CRANESCHED_ORACLE_CAP is not a non-negative integer: ") + raw};
  }
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

/// "approx:3" selects approx with k = 3.
struct AlgorithmSpec {
  std::string label;
  Algorithm algorithm;
  std::optional<int> k;
};

AlgorithmSpec parse_spec(const std::string& text, std::optional<int> default_k) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const auto algorithm = parse_algorithm(head);
  if (!algorithm) throw Failure{kExitFailure, "unknown algorithm '" + head + "'"};
  AlgorithmSpec spec{text, *algorithm, default_k};
  if (colon != std::string::npos) {
    if (*algorithm != Algorithm::approx)
      throw Failure{kExitFailure, "only approx takes a ':k' suffix"};
    try {
      spec.k = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
      throw Failure{kExitFailure, "bad k in '" + text + "'"};
    }
  }
  return spec;
}

struct TimedRun {
  std::optional<int> energy;
  long long milliseconds = 0;
  std::string status;
};

TimedRun timed_solve(const Instance& instance, const AlgorithmSpec& spec, SolveOptions options) {
  options.k = spec.k;
  TimedRun run;
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto outcome = solve(instance, spec.algorithm, options);
    validate_schedule(instance, outcome.schedule);
    run.energy = outcome.schedule.energy;
    run.status = "ok";
  } catch (const PreconditionError&) {
    run.status = "skipped";
  } catch (const std::exception&) {
    run.status = "error";
  }
  run.milliseconds = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return run;
}

std::string csv_cell(const std::optional<int>& value) {
  return value ? std::to_string(*value) : std::string();
}

int cmd_solve(const std::string& input, const std::string& algorithm_text, std::optional<int> k,
              const std::string& out_path, bool trace, const std::string& dot_path,
              std::ostream& out, std::ostream& err) {
  const Instance instance = parse_instance(read_file(input));
  const auto algorithm = parse_algorithm(algorithm_text);
  if (!algorithm) throw Failure{kExitFailure, "unknown algorithm '" + algorithm_text + "'"};
  SolveOptions options;
  options.k = k;
  options.oracle_cap = oracle_cap_from_env();
  options.want_dot = !dot_path.empty();
  const SolveOutcome outcome = solve(instance, *algorithm, options);
  if (trace) {
    err << R"({"algorithm":")" << algorithm_name(outcome.used) << "\"}\n";
    for (const auto& record : outcome.trace) err << format_trace_line(record) << '\n';
  }
  if (!dot_path.empty()) write_file(dot_path, outcome.dot);
  emit(out_path, serialize_schedule(outcome.schedule) + "\n", out);
  return kExitOk;
}

int cmd_compare(const std::string& input, const std::vector<std::string>& algorithms,
                std::optional<int> k, const std::string& out_path, std::ostream& out) {
  const Instance instance = parse_instance(read_file(input));
  SolveOptions options;
  options.oracle_cap = oracle_cap_from_env();
  std::ostringstream csv;
  csv << "algorithm,energy,milliseconds,status\n";
  for (const auto& text : algorithms) {
    const AlgorithmSpec spec = parse_spec(text, k);
    const TimedRun run = timed_solve(instance, spec, options);
    csv << spec.label << ',' << csv_cell(run.energy) << ',' << run.milliseconds << ','
        << run.status << '\n';
  }
  emit(out_path, csv.str(), out);
  return kExitOk;
}

int cmd_gen(int n, int eta, int buffer, std::optional<int> max_length, std::uint64_t seed,
            const std::string& out_path, std::ostream& out) {
  const Instance instance = generate_instance(n, eta, buffer, max_length, seed);
  emit(out_path, serialize_instance(instance) + "\n", out);
  return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& schedule_path, std::ostream& out) {
  const Instance instance = parse_instance(read_file(input));
  const Schedule schedule = parse_schedule(read_file(schedule_path));
  validate_schedule(instance, schedule);
  out << "ok: energy " << schedule.energy << '\n';
  return kExitOk;
}

int cmd_export_dot(const std::string& input, const std::string& model_name,
                   const std::string& out_path, std::ostream& out) {
  const Instance instance = parse_instance(read_file(input));
  const auto model = parse_dot_model(model_name);
  if (!model) throw Failure{kExitFailure, "unknown model '" + model_name + "'"};
  emit(out_path, export_dot(instance, *model), out);
  return kExitOk;
}

int cmd_bench(const std::string& manifest_path, unsigned workers, const std::string& out_path,
              std::ostream& out) {
  using nlohmann::json;
  json manifest;
  try {
    manifest = json::parse(read_file(manifest_path));
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what(), "manifest");
  }
  if (!manifest.is_object() || !manifest.contains("entries") || !manifest["entries"].is_array())
    throw ValidationError("expected {\"entries\": [...]}", "entries");
  const auto base = std::filesystem::path(manifest_path).parent_path();

  struct Entry {
    std::string instance_path;
    AlgorithmSpec spec;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < manifest["entries"].size(); ++i) {
    const json& item = manifest["entries"][i];
    const std::string where = "entries[" + std::to_string(i) + "]";
    if (!item.is_object() || !item.contains("instance") || !item["instance"].is_string())
      throw ValidationError("needs a string \"instance\"", where);
    for (const auto& [key, value] : item.items())
      if (key != "instance" && key != "algorithm" && key != "k")
        throw ValidationError("unknown field", where + "." + key);
    std::optional<int> k;
    if (item.contains("k")) {
      if (!item["k"].is_number_integer()) throw ValidationError("expected an integer", where + ".k");
      k = item["k"].get<int>();
    }
    const std::string algorithm = item.value("algorithm", std::string("auto"));
    std::filesystem::path path = item["instance"].get<std::string>();
    if (path.is_relative()) path = base / path;
    entries.push_back(Entry{path.string(), parse_spec(algorithm, k)});
  }

  SolveOptions options;
  options.oracle_cap = oracle_cap_from_env();
  std::vector<TimedRun> runs(entries.size());
  std::size_t next = 0;
  std::mutex lock;
  auto worker = [&] {
    for (;;) {
      std::size_t index = 0;
      {
        std::lock_guard guard(lock);
        if (next == entries.size()) return;
        index = next++;
      }
      try {
        const Instance instance = parse_instance(read_file(entries[index].instance_path));
        runs[index] = timed_solve(instance, entries[index].spec, options);
      } catch (const std::exception&) {
        runs[index].status = "error";
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::max(1u, workers); ++w) pool.emplace_back(worker);
  for (auto& thread : pool) thread.join();

  std::ostringstream csv;
  csv << "instance,algorithm,energy,milliseconds,status\n";
  for (std::size_t i = 0; i < entries.size(); ++i)
    csv << entries[i].instance_path << ',' << entries[i].spec.label << ','
        << csv_cell(runs[i].energy) << ',' << runs[i].milliseconds << ',' << runs[i].status << '\n';
  emit(out_path, csv.str(), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-crane energy-saving scheduler", "cranesched"};
  app.require_subcommand(1);

  std::string input;
  std::string algorithm = "auto";
  std::optional<int> k;
  std::string out_path;
  bool trace = false;
  std::string dot_path;

  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance and print the schedule JSON");
  solve_cmd->add_option("-i,--input", input, "Instance JSON")->required();
  solve_cmd->add_option("-a,--algorithm", algorithm,
                        "oracle | euler0 | approx | dp-bounded | dp-exact-subset | matching | auto");
  solve_cmd->add_option("--k", k, "Enumerated auxiliary edges for approx");
  solve_cmd->add_option("-o,--out", out_path, "Write the schedule here instead of stdout");
  solve_cmd->add_flag("--trace", trace, "Per-slot DP records on stderr");
  solve_cmd->add_option("--dot", dot_path, "Write the solver's graph model as DOT");

  std::vector<std::string> algorithms{"oracle", "euler0", "approx", "dp-bounded",
                                      "dp-exact-subset", "matching"};
  auto* compare_cmd = app.add_subcommand("compare", "CSV of energy and runtime per algorithm");
  compare_cmd->add_option("-i,--input", input, "Instance JSON")->required();
  compare_cmd->add_option("-a,--algorithm", algorithms, "Algorithms; approx:K pins k")
      ->delimiter(',');
  compare_cmd->add_option("--k", k, "Default k for approx");
  compare_cmd->add_option("-o,--out", out_path, "CSV destination");

  int n = 0;
  int eta = 1;
  int buffer = 0;
  std::optional<int> max_length;
  std::uint64_t seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--n", n, "Number of jobs")->required();
  gen_cmd->add_option("--eta", eta, "Number of slots")->required();
  gen_cmd->add_option("--buffer", buffer, "Energy buffer")->required();
  gen_cmd->add_option("--max-length", max_length, "Upper bound on |origin - dest|");
  gen_cmd->add_option("--seed", seed, "RNG seed");
  gen_cmd->add_option("-o,--out", out_path, "Instance destination");

  std::string schedule_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a schedule against an instance");
  verify_cmd->add_option("-i,--input", input, "Instance JSON")->required();
  verify_cmd->add_option("-s,--schedule", schedule_path, "Schedule JSON")->required();

  std::string model = "interval";
  auto* dot_cmd = app.add_subcommand("export-dot", "Write a graph model as DOT");
  dot_cmd->add_option("-i,--input", input, "Instance JSON")->required();
  dot_cmd->add_option("-m,--model", model, "job-graph | two-level | interval | bipartite");
  dot_cmd->add_option("-o,--out", out_path, "DOT destination");

  std::string manifest;
  unsigned workers = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Run a manifest of (instance, algorithm) pairs");
  bench_cmd->add_option("manifest", manifest, "Manifest JSON")->required();
  bench_cmd->add_option("-j,--jobs", workers, "Parallel workers");
  bench_cmd->add_option("-o,--out", out_path, "CSV destination");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (solve_cmd->parsed())
      return cmd_solve(input, algorithm, k, out_path, trace, dot_path, out, err);
    if (compare_cmd->parsed()) return cmd_compare(input, algorithms, k, out_path, out);
    if (gen_cmd->parsed()) return cmd_gen(n, eta, buffer, max_length, seed, out_path, out);
    if (verify_cmd->parsed()) return cmd_verify(input, schedule_path, out);
    if (dot_cmd->parsed()) return cmd_export_dot(input, model, out_path, out);
    if (bench_cmd->parsed()) return cmd_bench(manifest, workers, out_path, out);
  } catch (const Failure& failure) {
    err << "error: " << failure.message << '\n';
    return failure.code;
  } catch (const PreconditionError& e) {
    err << "not applicable: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace cranesched::cli

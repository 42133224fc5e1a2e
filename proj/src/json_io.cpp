#include "cranesched/json_io.hpp"

#include <fstream>
#include <initializer_list>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

namespace cranesched {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_object(std::string_view text, const char* what) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what(), what);
  }
  if (!doc.is_object()) throw ValidationError("expected a JSON object", what);
  return doc;
}

void reject_unknown(const json& object, std::initializer_list<const char*> allowed,
                    const std::string& prefix) {
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (const char* name : allowed) known = known || key == name;
    if (!known) throw ValidationError("unknown field", prefix + key);
  }
}

int require_int(const json& object, const char* name, const std::string& prefix) {
  const auto it = object.find(name);
  if (it == object.end()) throw ValidationError("missing field", prefix + name);
  if (!it->is_number_integer()) throw ValidationError("expected an integer", prefix + name);
  const auto value = it->get<long long>();
  if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max())
    throw ValidationError("integer out of range", prefix + name);
  return static_cast<int>(value);
}

const json& require_array(const json& object, const char* name) {
  const auto it = object.find(name);
  if (it == object.end()) throw ValidationError("missing field", name);
  if (!it->is_array()) throw ValidationError("expected an array", name);
  return *it;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const json doc = parse_object(text, "instance");
  reject_unknown(doc, {"eta", "buffer", "jobs"}, "");
  const int eta = require_int(doc, "eta", "");
  const int buffer = require_int(doc, "buffer", "");
  const json& array = require_array(doc, "jobs");

  std::vector<Job> jobs;
  jobs.reserve(array.size());
  for (std::size_t i = 0; i < array.size(); ++i) {
    const std::string prefix = "jobs[" + std::to_string(i) + "].";
    const json& item = array[i];
    if (!item.is_object())
      throw ValidationError("expected an object", "jobs[" + std::to_string(i) + "]");
    reject_unknown(item, {"id", "origin", "dest"}, prefix);
    jobs.push_back(Job{require_int(item, "id", prefix), require_int(item, "origin", prefix),
                       require_int(item, "dest", prefix)});
  }
  return Instance(eta, buffer, std::move(jobs));
}

std::string serialize_instance(const Instance& instance) {
  ordered_json doc;
  doc["eta"] = instance.eta();
  doc["buffer"] = instance.buffer();
  doc["jobs"] = ordered_json::array();
  for (const Job& job : instance.jobs())
    doc["jobs"].push_back({{"id", job.id}, {"origin", job.origin}, {"dest", job.dest}});
  return doc.dump();
}

Schedule parse_schedule(std::string_view text) {
  const json doc = parse_object(text, "schedule");
  reject_unknown(doc, {"order", "energy"}, "");
  const json& array = require_array(doc, "order");
  Schedule schedule;
  schedule.energy = require_int(doc, "energy", "");
  if (schedule.energy < 0) throw ValidationError("must be non-negative", "energy");

  std::set<JobId> seen;
  for (std::size_t i = 0; i < array.size(); ++i) {
    const std::string field = "order[" + std::to_string(i) + "]";
    if (!array[i].is_number_integer()) throw ValidationError("expected an integer", field);
    const auto id = array[i].get<long long>();
    if (id < 0 || id > std::numeric_limits<int>::max())
      throw ValidationError("job ids are non-negative", field);
    if (!seen.insert(static_cast<JobId>(id)).second)
      throw ValidationError("duplicate job id " + std::to_string(id), field);
    schedule.order.push_back(static_cast<JobId>(id));
  }
  return schedule;
}

std::string serialize_schedule(const Schedule& schedule) {
  ordered_json doc;
  doc["order"] = schedule.order;
  doc["energy"] = schedule.energy;
  return doc.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
  if (!out) throw Error("failed writing " + path);
}

}  // namespace cranesched

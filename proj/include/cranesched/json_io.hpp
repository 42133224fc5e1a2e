#pragma once

#include <string>
#include <string_view>

#include "cranesched/core.hpp"

namespace cranesched {

// Instance: {"eta": int, "buffer": int, "jobs": [{"id": int, "origin": int, "dest": int}, ...]}
// Schedule: {"order": [int, ...], "energy": int}
// Fields may come in any order; unknown fields are rejected with a ValidationError
// naming the field.

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

/// Checks shape and that ids are distinct and non-negative. Use validate_schedule to
/// check it against an instance.
Schedule parse_schedule(std::string_view text);
std::string serialize_schedule(const Schedule& schedule);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace cranesched

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fishfinder/types.hpp"

namespace fishfinder {

// One broken invariant. Violations are data, not failures: callers decide
// whether to abort.
struct Violation {
  std::string invariant;
  std::string detail;
  std::optional<std::size_t> index;  // offending trial/sample/session position
};

std::vector<Violation> validate_schedule(const StimulusSchedule& schedule);
std::vector<Violation> validate_session(const Session& s);
std::vector<Violation> validate_dataset(const Dataset& d);

std::string format_violations(const std::vector<Violation>& v);

}  // namespace fishfinder

#pragma once

#include <cstdint>

#include "gundam/gen_config.hpp"
#include "gundam/instance.hpp"

namespace gundam {

// Deterministically samples a task instance. The same (task, difficulty,
// seed, config) always yields a bit-identical instance. Throws InvalidCell
// when the difficulty is not defined for the task.
TaskInstance sample_instance(Task task, Difficulty difficulty, std::uint64_t seed,
                             const GenConfig& config);

}  // namespace gundam

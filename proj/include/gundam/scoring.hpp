#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gundam/gen_config.hpp"
#include "gundam/verify.hpp"

namespace gundam {

// Accuracy and mean partial credit per (task, difficulty), with per-task
// sample-count-weighted averages and an overall mean of the task averages.
struct ScoreTable {
  struct Cell {
    std::size_t count = 0;
    std::size_t exact = 0;
    double partial_credit_sum = 0.0;
    double relative_error_sum = 0.0;
    std::size_t relative_error_count = 0;

    double accuracy() const {
      return count ? static_cast<double>(exact) / static_cast<double>(count) : 0.0;
    }
    double mean_partial_credit() const {
      return count ? partial_credit_sum / static_cast<double>(count) : 0.0;
    }
  };

  std::map<Task, std::map<Difficulty, Cell>> cells;

  void add(const Verdict& verdict);

  const Cell* cell(Task task, Difficulty difficulty) const;
  std::size_t task_count(Task task) const;

  // Sample-count-weighted mean accuracy over the task's difficulties.
  double task_average(Task task) const;
  // Unweighted mean of the per-task averages, over tasks present.
  double overall_average() const;

  std::string to_markdown() const;
  std::string to_csv() const;
  std::string to_json_text() const;
};

// Deterministic aggregation of verdicts into a table.
ScoreTable score_run(const std::vector<Verdict>& verdicts);

// Random baselines: uniform yes/no for Connectivity and Cycle; for
// ShortestPath a uniformly chosen simple path between the endpoints answered
// with its weight sum. Scored through verify. Throws UnsupportedTask-style
// InvalidCell for other tasks.
ScoreTable random_baseline(Task task, const std::vector<TaskInstance>& instances,
                           std::uint64_t seed, std::vector<Verdict>* verdicts_out = nullptr);

}  // namespace gundam

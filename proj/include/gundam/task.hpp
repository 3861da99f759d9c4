#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace gundam {

enum class Task {
  Connectivity,
  Cycle,
  TopoSort,
  ShortestPath,
  MaxFlow,
  Matching,
  Hamilton,
  Gnn,
};

enum class Difficulty { Easy, Medium, Hard };

inline constexpr std::array<Task, 8> kAllTasks = {
    Task::Connectivity, Task::Cycle,    Task::TopoSort, Task::ShortestPath,
    Task::MaxFlow,      Task::Matching, Task::Hamilton, Task::Gnn,
};

// One populated cell of the benchmark statistics table: node-count range and
// train/test sample counts.
struct CellSpec {
  int min_nodes = 0;
  int max_nodes = 0;
  int train_count = 0;
  int test_count = 0;
};

// nullptr when the (task, difficulty) cell is not defined (Medium exists only
// for Connectivity, Cycle and TopoSort).
const CellSpec* cell_spec(Task task, Difficulty difficulty);

std::vector<Difficulty> difficulties_for(Task task);

bool task_uses_directed_graph(Task task);   // MaxFlow and TopoSort
bool task_uses_weighted_graph(Task task);   // ShortestPath and MaxFlow

std::string to_string(Task task);
std::string to_string(Difficulty difficulty);
std::string display_name(Task task);        // "Shortest Path" etc.
std::optional<Task> task_from_string(const std::string& name);
std::optional<Difficulty> difficulty_from_string(const std::string& name);

}  // namespace gundam

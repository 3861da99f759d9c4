#include "gundam/task.hpp"

#include <algorithm>
#include <map>

namespace gundam {
namespace {

struct TaskCells {
  std::optional<CellSpec> easy, medium, hard;
};

const TaskCells& cells_for(Task task) {
  // Node ranges and train/test counts per task and difficulty.
  static const std::map<Task, TaskCells> table = {
      {Task::Connectivity, {CellSpec{5, 10, 296, 56}, CellSpec{11, 25, 1004, 196}, CellSpec{26, 35, 561, 119}}},
      {Task::Cycle, {CellSpec{5, 10, 125, 25}, CellSpec{11, 25, 493, 107}, CellSpec{26, 35, 341, 59}}},
      {Task::TopoSort, {CellSpec{5, 10, 151, 29}, CellSpec{11, 25, 372, 78}, CellSpec{26, 35, 152, 28}}},
      {Task::ShortestPath, {CellSpec{5, 10, 151, 29}, std::nullopt, CellSpec{11, 20, 165, 35}}},
      {Task::MaxFlow, {CellSpec{5, 10, 124, 26}, std::nullopt, CellSpec{11, 20, 168, 32}}},
      {Task::Matching, {CellSpec{6, 20, 249, 51}, std::nullopt, CellSpec{17, 33, 177, 33}}},
      {Task::Hamilton, {CellSpec{5, 10, 125, 25}, std::nullopt, CellSpec{11, 20, 167, 33}}},
      {Task::Gnn, {CellSpec{5, 8, 77, 23}, std::nullopt, CellSpec{9, 15, 124, 16}}},
  };
  return table.at(task);
}

}  // namespace

const CellSpec* cell_spec(Task task, Difficulty difficulty) {
  const TaskCells& cells = cells_for(task);
  const std::optional<CellSpec>* slot = nullptr;
  switch (difficulty) {
    case Difficulty::Easy: slot = &cells.easy; break;
    case Difficulty::Medium: slot = &cells.medium; break;
    case Difficulty::Hard: slot = &cells.hard; break;
  }
  return slot->has_value() ? &**slot : nullptr;
}

std::vector<Difficulty> difficulties_for(Task task) {
  std::vector<Difficulty> out;
  for (Difficulty d : {Difficulty::Easy, Difficulty::Medium, Difficulty::Hard}) {
    if (cell_spec(task, d) != nullptr) out.push_back(d);
  }
  return out;
}

bool task_uses_directed_graph(Task task) {
  return task == Task::TopoSort || task == Task::MaxFlow;
}

bool task_uses_weighted_graph(Task task) {
  return task == Task::ShortestPath || task == Task::MaxFlow;
}

std::string to_string(Task task) {
  switch (task) {
    case Task::Connectivity: return "connectivity";
    case Task::Cycle: return "cycle";
    case Task::TopoSort: return "topo_sort";
    case Task::ShortestPath: return "shortest_path";
    case Task::MaxFlow: return "max_flow";
    case Task::Matching: return "matching";
    case Task::Hamilton: return "hamilton";
    case Task::Gnn: return "gnn";
  }
  return "unknown";
}

std::string to_string(Difficulty difficulty) {
  switch (difficulty) {
    case Difficulty::Easy: return "easy";
    case Difficulty::Medium: return "medium";
    case Difficulty::Hard: return "hard";
  }
  return "unknown";
}

std::string display_name(Task task) {
  switch (task) {
    case Task::Connectivity: return "Connectivity";
    case Task::Cycle: return "Cycle";
    case Task::TopoSort: return "Topo. Sort";
    case Task::ShortestPath: return "Shortest Path";
    case Task::MaxFlow: return "Max. Flow";
    case Task::Matching: return "Matching";
    case Task::Hamilton: return "Hamilton";
    case Task::Gnn: return "GNN";
  }
  return "unknown";
}

std::optional<Task> task_from_string(const std::string& name) {
  for (Task t : kAllTasks) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

std::optional<Difficulty> difficulty_from_string(const std::string& name) {
  for (Difficulty d : {Difficulty::Easy, Difficulty::Medium, Difficulty::Hard}) {
    if (to_string(d) == name) return d;
  }
  return std::nullopt;
}

}  // namespace gundam

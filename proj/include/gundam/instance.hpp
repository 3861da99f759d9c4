#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "gundam/graph.hpp"
#include "gundam/task.hpp"

namespace gundam {

using EmbeddingVec = std::array<std::int64_t, 2>;

struct PairQuery {
  int u = 0;
  int v = 0;
  bool operator==(const PairQuery&) const = default;
};

struct FlowQuery {
  int source = 0;
  int sink = 0;
  bool operator==(const FlowQuery&) const = default;
};

// Partitions are prefix splits: nodes [0, left_size) on one side,
// [left_size, n) on the other.
struct MatchingQuery {
  int left_size = 0;
  bool operator==(const MatchingQuery&) const = default;
};

struct GnnQuery {
  std::vector<EmbeddingVec> initial;  // one 2-vector per node
  int layers = 0;
  bool operator==(const GnnQuery&) const = default;
};

using Query = std::variant<std::monostate, PairQuery, FlowQuery, MatchingQuery, GnnQuery>;

struct TaskInstance {
  Task task = Task::Connectivity;
  Difficulty difficulty = Difficulty::Easy;
  Graph graph;
  Query query;
  std::uint64_t seed = 0;

  bool operator==(const TaskInstance&) const = default;
};

}  // namespace gundam

#pragma once

#include <optional>
#include <vector>

#include "gundam/instance.hpp"

namespace gundam {

// Ground truth from exhaustive search, independent of the traced solvers:
// simple-path enumeration for connectivity/shortest path, an edge-count vs
// component-count check for cycles, permutation scans for topo sort and
// Hamilton, min-cut enumeration for max flow, an edge-subset scan for
// matching, and L-fold adjacency-matrix application for GNN.
struct OracleAnswer {
  std::optional<bool> truth;        // connectivity / cycle / topo order exists / hamilton exists
  std::optional<Weight> weight;     // shortest-path optimum or max-flow value
  std::optional<int> size;          // maximum matching size
  std::optional<std::vector<EmbeddingVec>> embeddings;
};

// Throws TooLarge beyond the per-task node bound (8 for the factorial and
// subset scans, 10 for the cheaper enumerations).
OracleAnswer brute_force_oracle(const TaskInstance& instance);

int brute_force_node_bound(Task task);

}  // namespace gundam

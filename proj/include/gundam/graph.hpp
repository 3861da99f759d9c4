#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gundam/weight.hpp"

namespace gundam {

struct Edge {
  int u = 0;
  int v = 0;
  Weight w{};  // meaningful only when the owning graph is weighted

  auto operator<=>(const Edge&) const = default;
};

// Node-count plus edge-list graph; nodes are 0..n-1. Edges are kept in
// canonical order: each undirected edge stored with u < v, the list sorted
// by (u, v). Canonical order makes serialization deterministic.
struct Graph {
  bool directed = false;
  bool weighted = false;
  int n = 0;
  std::vector<Edge> edges;

  // Normalizes endpoint order and sorts the edge list.
  static Graph make(bool directed, bool weighted, int n, std::vector<Edge> edges);

  bool has_edge(int u, int v) const;
  std::optional<Weight> edge_weight(int u, int v) const;

  // Neighbor lists in ascending id order. For directed graphs these are
  // out-neighbors; in_adjacency gives the reverse direction.
  std::vector<std::vector<int>> adjacency() const;
  std::vector<std::vector<int>> in_adjacency() const;
  std::vector<int> degrees() const;

  // Connected-component label per node, ignoring edge direction.
  std::vector<int> component_labels() const;

  bool operator==(const Graph&) const = default;
};

struct Violation {
  enum class Kind { NodeIdOutOfRange, SelfLoop, DuplicateEdge, NonPositiveWeight };
  Kind kind;
  std::string detail;
};

// Every invariant violation in the graph; empty means ok.
std::vector<Violation> validate(const Graph& g);

}  // namespace gundam

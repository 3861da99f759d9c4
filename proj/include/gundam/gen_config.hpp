#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "gundam/task.hpp"

namespace gundam {

// Instance-generation knobs. Everything that shapes a sampled instance lives
// here so that (task, difficulty, seed, config) fully determines the result.
struct GenConfig {
  // Edge probability per (task, difficulty); filled with calibrated defaults.
  std::map<Task, std::map<Difficulty, double>> edge_probability;

  int weight_min = 1;   // shortest-path edge weights, inclusive
  int weight_max = 10;
  bool decimal_weights = false;  // one-decimal weights in [0.1, 0.9] instead

  int capacity_min = 1;  // max-flow capacities, inclusive
  int capacity_max = 10;

  int embedding_min = 0;  // initial GNN embedding entries, inclusive
  int embedding_max = 5;

  int gnn_layers = 2;

  double edge_prob(Task task, Difficulty difficulty) const;

  static GenConfig defaults();
  static GenConfig from_json_text(const std::string& text);
  static GenConfig load(const std::string& path);

  std::string to_json_text() const;
  void save(const std::string& path) const;

  // FNV-1a over the canonical JSON text; recorded in manifests.
  std::uint64_t hash() const;

  bool operator==(const GenConfig&) const = default;
};

}  // namespace gundam

#include "gundam/gen_config.hpp"

#include <fstream>

#include "gundam/errors.hpp"
#include "json.hpp"

namespace gundam {
namespace {

using ordered_json = nlohmann::ordered_json;

// Densities calibrated around the midpoint of each node range so that the
// sampled graphs have an average degree of roughly 2.5-3.5, similar to small
// benchmark graphs. All overridable through the config file.
std::map<Task, std::map<Difficulty, double>> default_edge_probabilities() {
  return {
      {Task::Connectivity, {{Difficulty::Easy, 0.35}, {Difficulty::Medium, 0.15}, {Difficulty::Hard, 0.09}}},
      {Task::Cycle, {{Difficulty::Easy, 0.25}, {Difficulty::Medium, 0.08}, {Difficulty::Hard, 0.045}}},
      {Task::TopoSort, {{Difficulty::Easy, 0.35}, {Difficulty::Medium, 0.14}, {Difficulty::Hard, 0.09}}},
      {Task::ShortestPath, {{Difficulty::Easy, 0.4}, {Difficulty::Hard, 0.25}}},
      {Task::MaxFlow, {{Difficulty::Easy, 0.3}, {Difficulty::Hard, 0.18}}},
      {Task::Matching, {{Difficulty::Easy, 0.3}, {Difficulty::Hard, 0.16}}},
      {Task::Hamilton, {{Difficulty::Easy, 0.2}, {Difficulty::Hard, 0.1}}},
      {Task::Gnn, {{Difficulty::Easy, 0.4}, {Difficulty::Hard, 0.25}}},
  };
}

}  // namespace

double GenConfig::edge_prob(Task task, Difficulty difficulty) const {
  auto t = edge_probability.find(task);
  if (t != edge_probability.end()) {
    auto d = t->second.find(difficulty);
    if (d != t->second.end()) return d->second;
  }
  return default_edge_probabilities().at(task).at(difficulty);
}

GenConfig GenConfig::defaults() {
  GenConfig cfg;
  cfg.edge_probability = default_edge_probabilities();
  return cfg;
}

std::string GenConfig::to_json_text() const {
  ordered_json probs = ordered_json::object();
  for (Task task : kAllTasks) {
    ordered_json per_difficulty = ordered_json::object();
    for (Difficulty d : difficulties_for(task)) {
      per_difficulty[to_string(d)] = edge_prob(task, d);
    }
    probs[to_string(task)] = per_difficulty;
  }
  ordered_json j = {
      {"edge_probability", probs},
      {"weight_range", {weight_min, weight_max}},
      {"decimal_weights", decimal_weights},
      {"capacity_range", {capacity_min, capacity_max}},
      {"embedding_range", {embedding_min, embedding_max}},
      {"gnn_layers", gnn_layers},
  };
  return j.dump(2) + "\n";
}

GenConfig GenConfig::from_json_text(const std::string& text) {
  GenConfig cfg = defaults();
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(std::string("gen_config: ") + e.what());
  }
  if (j.contains("edge_probability")) {
    for (auto& [task_name, per_difficulty] : j["edge_probability"].items()) {
      auto task = task_from_string(task_name);
      if (!task) throw IoError("gen_config: unknown task \"" + task_name + "\"");
      for (auto& [diff_name, p] : per_difficulty.items()) {
        auto diff = difficulty_from_string(diff_name);
        if (!diff) throw IoError("gen_config: unknown difficulty \"" + diff_name + "\"");
        cfg.edge_probability[*task][*diff] = p.get<double>();
      }
    }
  }
  if (j.contains("weight_range")) {
    cfg.weight_min = j["weight_range"][0].get<int>();
    cfg.weight_max = j["weight_range"][1].get<int>();
  }
  if (j.contains("decimal_weights")) cfg.decimal_weights = j["decimal_weights"].get<bool>();
  if (j.contains("capacity_range")) {
    cfg.capacity_min = j["capacity_range"][0].get<int>();
    cfg.capacity_max = j["capacity_range"][1].get<int>();
  }
  if (j.contains("embedding_range")) {
    cfg.embedding_min = j["embedding_range"][0].get<int>();
    cfg.embedding_max = j["embedding_range"][1].get<int>();
  }
  if (j.contains("gnn_layers")) cfg.gnn_layers = j["gnn_layers"].get<int>();
  return cfg;
}

GenConfig GenConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open gen_config file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_json_text(text);
}

void GenConfig::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write gen_config file: " + path);
  out << to_json_text();
}

std::uint64_t GenConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_json_text()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace gundam

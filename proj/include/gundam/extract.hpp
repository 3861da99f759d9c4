#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gundam/instance.hpp"

namespace gundam {

struct PolarityAnswer {
  bool yes = false;
  bool operator==(const PolarityAnswer&) const = default;
};

// Node path (ShortestPath, Hamilton) or node ordering (TopoSort).
struct NodeSequenceAnswer {
  std::vector<int> nodes;
  bool operator==(const NodeSequenceAnswer&) const = default;
};

struct EdgeSetAnswer {
  std::vector<std::pair<int, int>> edges;
  bool operator==(const EdgeSetAnswer&) const = default;
};

struct NumericAnswer {
  double value = 0.0;
  bool operator==(const NumericAnswer&) const = default;
};

struct EmbeddingAnswer {
  std::map<int, EmbeddingVec> by_node;
  bool operator==(const EmbeddingAnswer&) const = default;
};

using ExtractedAnswer = std::variant<PolarityAnswer, NodeSequenceAnswer, EdgeSetAnswer,
                                     NumericAnswer, EmbeddingAnswer>;

// Parse outcome; a ParseFailure is data (reason set, answer empty),
// never an exception.
struct Extraction {
  std::optional<ExtractedAnswer> answer;
  std::string failure;

  bool ok() const { return answer.has_value(); }
};

// Pulls a structured answer out of free-form response text with per-task
// grammars; wherever several candidates appear, the last one wins (models
// often self-correct). Grammar details in docs/formats.md.
Extraction extract_answer(Task task, const std::string& response);

// Stable text key of an extracted answer, used for self-consistency voting.
std::string canonical_key(const ExtractedAnswer& answer);

}  // namespace gundam

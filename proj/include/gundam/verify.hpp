#pragma once

#include <optional>
#include <string>

#include "gundam/extract.hpp"
#include "gundam/instance.hpp"

namespace gundam {

// Outcome of checking one parsed answer against an instance.
//   exact implies valid; exact implies partial_credit == 1;
//   partial_credit is always within [0, 1].
struct Verdict {
  Task task = Task::Connectivity;
  Difficulty difficulty = Difficulty::Easy;
  std::uint64_t seed = 0;
  Extraction parsed;
  bool valid = false;
  bool exact = false;
  double partial_credit = 0.0;
  std::optional<double> relative_error;  // GNN only
  std::string reason;
};

// Scores a parsed answer. Connectivity/Cycle compare polarity to ground
// truth; ShortestPath accepts any valid path of optimal weight; TopoSort
// accepts any full-node ordering respecting every edge; MaxFlow gives
// partial credit t/s for claimed t <= optimum s (0 beyond); Matching
// accepts any valid matching of maximum size; Hamilton accepts any path
// visiting all nodes with consecutive adjacency; GNN partial credit is the
// fraction of nodes with correct embeddings plus a mean relative error.
// Never throws on answer content; bad answers score invalid with credit 0.
Verdict verify(const TaskInstance& instance, const Extraction& parsed);

// extract_answer followed by verify.
Verdict verify_response(const TaskInstance& instance, const std::string& response);

// Mean relative error between claimed and true embeddings: per entry
// |x - y| / max(x, y), 0 when x == y, magnitudes used for negative inputs.
double relative_error(const EmbeddingVec& claimed, const EmbeddingVec& truth);

}  // namespace gundam

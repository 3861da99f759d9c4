#pragma once

#include <string>

#include "gundam/graph.hpp"
#include "gundam/instance.hpp"

namespace gundam {

// Textual graph encoding: a one-line preamble naming the edge convention,
// then one line of "(u, v, w)" / "(u, v)" tokens in canonical edge order.
// The exact preamble strings are part of the public contract (docs/formats.md).
struct ProjectedGraph {
  std::string preamble;
  std::string body;

  std::string text() const { return preamble + "\n" + body; }
};

// Serializes a valid graph. The preamble variant follows directedness,
// weightedness, and whether the task reads the third component as a
// capacity (MaxFlow). Throws InvalidGraph when validate(g) is non-empty.
ProjectedGraph project(const Graph& g, Task task);

// Inverse of project. n is max node id + 1 unless the preamble carries the
// node-count sentence. Throws ParseError with a byte offset on bad input.
Graph parse_projection(const std::string& text);

// Deterministic per-task question naming the query parameters.
std::string render_question(const TaskInstance& instance);

// Recovers the query parameters from a question produced by render_question.
// Used to rebuild instances from exported files. Throws ParseError.
Query parse_question(Task task, const std::string& question);

// Fixed one-paragraph task description (the T component of an example).
std::string task_description(Task task);

}  // namespace gundam

#pragma once

#include <cstdint>
#include <string>

#include "gundam/instance.hpp"
#include "gundam/solvers.hpp"

namespace gundam {

enum class Style { PA, AHP, ASP };

std::string to_string(Style style);
std::optional<Style> style_from_string(const std::string& name);

// The training record: projected graph, task description, question,
// reasoning path (empty for PA), answer, style tag, and the instance
// coordinates it was generated from.
struct AnnotatedExample {
  Task task = Task::Connectivity;
  Difficulty difficulty = Difficulty::Easy;
  std::uint64_t seed = 0;
  std::string graph_text;
  std::string task_desc;
  std::string question;
  std::string reasoning_path;
  std::string answer;
  Style style = Style::PA;
  std::string provenance;  // ASP only: template id and rewrite model

  // reasoning_path and answer joined the way a model would emit them.
  std::string full_text() const {
    return reasoning_path.empty() ? answer : reasoning_path + " " + answer;
  }

  bool operator==(const AnnotatedExample&) const = default;
};

// Final answer only, per fixed per-task templates.
AnnotatedExample render_pa(const TaskInstance& instance, const SolverResult& result);

// Step-by-step narration of the solver trace, then the answer.
AnnotatedExample render_ahp(const TaskInstance& instance, const SolverResult& result);

// The answer sentence shared by both renderers.
std::string answer_sentence(const TaskInstance& instance, const SolverResult& result,
                            Style style);

}  // namespace gundam

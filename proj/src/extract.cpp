#include "gundam/extract.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

namespace gundam {
namespace {

std::string lowercase(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// True when the sentence holding [pos, ...) ends with '?' — a restated
// question, not a statement.
bool interrogative_at(const std::string& text, std::size_t pos) {
  for (std::size_t i = pos; i < text.size(); ++i) {
    char c = text[i];
    if (c == '?') return true;
    if (c == '.' || c == '!' || c == '\n') return false;
  }
  return false;
}

// Last unambiguous polarity statement wins; sentences ending in '?' are
// ignored so an echoed question cannot decide the answer.
Extraction extract_polarity(const std::string& response) {
  static const std::regex yes_re(
      R"(\b(yes|there (is|exists) a (path|cycle)|there a path)\b)");
  static const std::regex no_re(
      R"(\b(no|there (is|exists) no (path|cycle)|no (path|cycle) exists)\b)");
  std::string text = lowercase(response);

  std::optional<bool> polarity;
  std::size_t best_pos = 0;
  auto scan = [&](const std::regex& re, bool value) {
    for (auto it = std::sregex_iterator(text.begin(), text.end(), re);
         it != std::sregex_iterator(); ++it) {
      std::size_t pos = static_cast<std::size_t>(it->position());
      if (interrogative_at(text, pos)) continue;
      if (!polarity || pos > best_pos) {
        polarity = value;
        best_pos = pos;
      }
    }
  };
  scan(yes_re, true);
  scan(no_re, false);
  if (!polarity) return {std::nullopt, "no yes/no statement found"};
  return {PolarityAnswer{*polarity}, ""};
}

// Node sequences in "a->b->c" or "a-b-c" form; for orderings, comma
// separation is accepted too. The last sequence of length >= 2 wins.
Extraction extract_sequence(const std::string& response, bool allow_commas) {
  std::string sep = allow_commas ? R"((?:->|-|,))" : R"((?:->|-))";
  std::regex seq_re(R"((\d+)(?:\s*)" + sep + R"(\s*\d+)+)");
  std::optional<std::string> last;
  for (auto it = std::sregex_iterator(response.begin(), response.end(), seq_re);
       it != std::sregex_iterator(); ++it) {
    last = it->str();
  }
  if (!last) return {std::nullopt, "no node sequence found"};
  NodeSequenceAnswer answer;
  static const std::regex num_re(R"(\d+)");
  for (auto it = std::sregex_iterator(last->begin(), last->end(), num_re);
       it != std::sregex_iterator(); ++it) {
    answer.nodes.push_back(std::stoi(it->str()));
  }
  return {answer, ""};
}

// Trailing group of "(a, b)" pairs; pairs separated only by whitespace,
// commas, or "and" belong to the same group, and the last group wins.
Extraction extract_edge_set(const std::string& response) {
  static const std::regex pair_re(R"(\((\d+)\s*,\s*(\d+)\))");
  struct Hit {
    std::size_t begin, end;
    std::pair<int, int> edge;
  };
  std::vector<Hit> hits;
  for (auto it = std::sregex_iterator(response.begin(), response.end(), pair_re);
       it != std::sregex_iterator(); ++it) {
    hits.push_back({static_cast<std::size_t>(it->position()),
                    static_cast<std::size_t>(it->position() + it->length()),
                    {std::stoi((*it)[1]), std::stoi((*it)[2])}});
  }
  if (hits.empty()) return {std::nullopt, "no edge pairs found"};

  auto is_group_glue = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      char c = response[i];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',') continue;
      if (c == 'a' && response.compare(i, 3, "and") == 0) {
        i += 2;
        continue;
      }
      return false;
    }
    return true;
  };

  EdgeSetAnswer answer;
  answer.edges.push_back(hits.back().edge);
  for (std::size_t i = hits.size() - 1; i > 0; --i) {
    if (!is_group_glue(hits[i - 1].end, hits[i].begin)) break;
    answer.edges.insert(answer.edges.begin(), hits[i - 1].edge);
  }
  return {answer, ""};
}

// Final numeric value: the last number of the last sentence that mentions
// flow, else the last number anywhere.
Extraction extract_numeric(const std::string& response) {
  static const std::regex num_re(R"(-?\d+(?:\.\d+)?)");
  std::string text = lowercase(response);

  std::optional<double> value;
  std::size_t sentence_start = 0;
  auto flush_sentence = [&](std::size_t end) {
    std::string sentence = text.substr(sentence_start, end - sentence_start);
    if (sentence.find("flow") != std::string::npos && sentence.find('?') == std::string::npos) {
      std::optional<double> last_num;
      for (auto it = std::sregex_iterator(sentence.begin(), sentence.end(), num_re);
           it != std::sregex_iterator(); ++it) {
        last_num = std::stod(it->str());
      }
      if (last_num) value = last_num;
    }
    sentence_start = end;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '.' || text[i] == '\n' || text[i] == '!' || text[i] == '?') {
      // A '.' inside a decimal number does not end the sentence.
      if (text[i] == '.' && i + 1 < text.size() &&
          std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
        continue;
      }
      flush_sentence(i + 1);
    }
  }
  flush_sentence(text.size());

  if (!value) {
    std::optional<double> last_num;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), num_re);
         it != std::sregex_iterator(); ++it) {
      last_num = std::stod(it->str());
    }
    value = last_num;
  }
  if (!value) return {std::nullopt, "no numeric value found"};
  return {NumericAnswer{*value}, ""};
}

// "node i ... [x, y]" with the nearest following vector; the last mention of
// each node wins, so a final answer section overrides worked steps.
Extraction extract_embeddings(const std::string& response) {
  static const std::regex ref_re(
      R"([Nn]ode\s+(\d+)[^][()]{0,60}?[\[(]\s*(-?\d+)\s*,\s*(-?\d+)\s*[\])])");
  EmbeddingAnswer answer;
  for (auto it = std::sregex_iterator(response.begin(), response.end(), ref_re);
       it != std::sregex_iterator(); ++it) {
    int node = std::stoi((*it)[1]);
    answer.by_node[node] = {std::stoll((*it)[2]), std::stoll((*it)[3])};
  }
  if (answer.by_node.empty()) return {std::nullopt, "no node embeddings found"};
  return {answer, ""};
}

}  // namespace

Extraction extract_answer(Task task, const std::string& response) {
  if (response.empty()) return {std::nullopt, "empty response"};
  switch (task) {
    case Task::Connectivity:
    case Task::Cycle:
      return extract_polarity(response);
    case Task::ShortestPath:
    case Task::Hamilton:
      return extract_sequence(response, /*allow_commas=*/false);
    case Task::TopoSort:
      return extract_sequence(response, /*allow_commas=*/true);
    case Task::Matching:
      return extract_edge_set(response);
    case Task::MaxFlow:
      return extract_numeric(response);
    case Task::Gnn:
      return extract_embeddings(response);
  }
  return {std::nullopt, "unknown task"};
}

std::string canonical_key(const ExtractedAnswer& answer) {
  std::ostringstream out;
  if (const auto* p = std::get_if<PolarityAnswer>(&answer)) {
    out << (p->yes ? "yes" : "no");
  } else if (const auto* s = std::get_if<NodeSequenceAnswer>(&answer)) {
    for (int x : s->nodes) out << x << ">";
  } else if (const auto* e = std::get_if<EdgeSetAnswer>(&answer)) {
    auto edges = e->edges;
    for (auto& [a, b] : edges) {
      if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) out << "(" << a << "," << b << ")";
  } else if (const auto* v = std::get_if<NumericAnswer>(&answer)) {
    out << v->value;
  } else if (const auto* m = std::get_if<EmbeddingAnswer>(&answer)) {
    for (const auto& [node, vec] : m->by_node) {
      out << node << ":[" << vec[0] << "," << vec[1] << "]";
    }
  }
  return out.str();
}

}  // namespace gundam

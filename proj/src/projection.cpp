#include "gundam/projection.hpp"

#include <cctype>
#include <regex>
#include <sstream>

#include "gundam/errors.hpp"

namespace gundam {
namespace {

// Frozen preamble sentences. The weighted-undirected one reproduces the
// reference wording verbatim (including its article slip); the other
// variants follow the same sentence skeleton.
constexpr const char* kUndirectedWeighted =
    "This is a undirected graph, where (u, v, w) denotes that node u and node v are "
    "connected by an undirected edge with the weight w.";
constexpr const char* kUndirectedUnweighted =
    "This is a undirected graph, where (u, v) denotes that node u and node v are "
    "connected by an undirected edge.";
constexpr const char* kDirectedWeighted =
    "This is a directed graph, where (u, v, w) denotes that node u and node v are "
    "connected by a directed edge from node u to node v with the weight w.";
constexpr const char* kDirectedCapacity =
    "This is a directed graph, where (u, v, w) denotes that node u and node v are "
    "connected by a directed edge from node u to node v with the capacity w.";
constexpr const char* kDirectedUnweighted =
    "This is a directed graph, where (u, v) denotes that node u and node v are "
    "connected by a directed edge from node u to node v.";

std::string count_sentence(int n) {
  return "There are " + std::to_string(n) + " nodes, numbered from 0 to " +
         std::to_string(n - 1) + ".";
}

const char* preamble_for(const Graph& g, Task task) {
  if (g.directed) {
    if (!g.weighted) return kDirectedUnweighted;
    return task == Task::MaxFlow ? kDirectedCapacity : kDirectedWeighted;
  }
  return g.weighted ? kUndirectedWeighted : kUndirectedUnweighted;
}

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }

  bool consume(const std::string& literal) {
    if (text.compare(pos, literal.size(), literal) == 0) {
      pos += literal.size();
      return true;
    }
    return false;
  }

  void expect(const std::string& literal, const std::string& what) {
    if (!consume(literal)) throw ParseError(pos, what);
  }

  void skip_spaces() {
    while (!eof() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  long long integer(const std::string& what) {
    std::size_t start = pos;
    while (!eof() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError(pos, what);
    return std::stoll(text.substr(start, pos - start));
  }

  // Integer or one-decimal weight token, in tenths.
  Weight weight() {
    long long whole = integer("a weight");
    if (!consume(".")) return Weight::from_int(whole);
    std::size_t start = pos;
    long long frac = integer("a decimal digit");
    if (pos - start != 1) throw ParseError(start, "a single decimal digit");
    return Weight::from_tenths(whole * 10 + frac);
  }
};

}  // namespace

ProjectedGraph project(const Graph& g, Task task) {
  auto violations = validate(g);
  if (!violations.empty()) {
    throw InvalidGraph("cannot project invalid graph: " + violations.front().detail);
  }
  ProjectedGraph out;
  out.preamble = preamble_for(g, task);
  int max_id = -1;
  for (const auto& e : g.edges) max_id = std::max({max_id, e.u, e.v});
  if (g.n != max_id + 1) out.preamble += " " + count_sentence(g.n);

  std::ostringstream body;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (i) body << " ";
    body << "(" << e.u << ", " << e.v;
    if (g.weighted) body << ", " << e.w.str();
    body << ")";
  }
  out.body = body.str();
  return out;
}

Graph parse_projection(const std::string& text) {
  Cursor c{text};
  bool directed, weighted;
  if (c.consume(kUndirectedWeighted)) {
    directed = false;
    weighted = true;
  } else if (c.consume(kUndirectedUnweighted)) {
    directed = false;
    weighted = false;
  } else if (c.consume(kDirectedCapacity) || c.consume(kDirectedWeighted)) {
    directed = true;
    weighted = true;
  } else if (c.consume(kDirectedUnweighted)) {
    directed = true;
    weighted = false;
  } else {
    throw ParseError(0, "a known graph preamble sentence");
  }

  std::optional<int> declared_n;
  c.skip_spaces();
  if (c.consume("There are ")) {
    declared_n = static_cast<int>(c.integer("a node count"));
    c.expect(" nodes, numbered from 0 to ", "the node-count sentence");
    c.integer("the last node id");
    c.expect(".", "'.' ending the node-count sentence");
    c.skip_spaces();
  }
  if (!c.eof()) c.expect("\n", "a newline before the edge list");

  std::vector<Edge> edges;
  int max_id = -1;
  while (true) {
    c.skip_spaces();
    if (c.eof() || c.peek() == '\n') break;
    c.expect("(", "'(' starting an edge");
    int u = static_cast<int>(c.integer("a node id"));
    c.expect(",", "',' between node ids");
    c.skip_spaces();
    int v = static_cast<int>(c.integer("a node id"));
    Edge e{u, v};
    if (weighted) {
      c.expect(",", "',' before the weight");
      c.skip_spaces();
      e.w = c.weight();
    }
    c.expect(")", "')' closing the edge");
    max_id = std::max({max_id, u, v});
    edges.push_back(e);
  }
  int n = declared_n.value_or(max_id + 1);
  return Graph::make(directed, weighted, n, std::move(edges));
}

std::string render_question(const TaskInstance& instance) {
  switch (instance.task) {
    case Task::Connectivity: {
      const auto& q = std::get<PairQuery>(instance.query);
      return "Is there a path between node " + std::to_string(q.u) + " and node " +
             std::to_string(q.v) + "?";
    }
    case Task::Cycle:
      return "Is there a cycle in this graph?";
    case Task::TopoSort:
      return "Give a valid topological sorting of this graph.";
    case Task::ShortestPath: {
      const auto& q = std::get<PairQuery>(instance.query);
      return "Give the shortest path from node " + std::to_string(q.u) + " to node " +
             std::to_string(q.v) + " and its total weight.";
    }
    case Task::MaxFlow: {
      const auto& q = std::get<FlowQuery>(instance.query);
      return "What is the maximum flow from node " + std::to_string(q.source) +
             " to node " + std::to_string(q.sink) + "?";
    }
    case Task::Matching: {
      const auto& q = std::get<MatchingQuery>(instance.query);
      int n = instance.graph.n;
      return "This graph is bipartite: nodes 0 to " + std::to_string(q.left_size - 1) +
             " form one part and nodes " + std::to_string(q.left_size) + " to " +
             std::to_string(n - 1) + " form the other. Find a maximum matching of this graph.";
    }
    case Task::Hamilton:
      return "Find a Hamilton path of this graph, a path that visits every node exactly once.";
    case Task::Gnn: {
      const auto& q = std::get<GnnQuery>(instance.query);
      std::ostringstream out;
      out << "Each node has a two-dimensional initial embedding:";
      for (std::size_t i = 0; i < q.initial.size(); ++i) {
        out << (i ? ", " : " ") << "node " << i << ": [" << q.initial[i][0] << ", "
            << q.initial[i][1] << "]";
      }
      out << ". In each layer of message passing, every node's embedding is updated to "
             "the sum of the embeddings of its neighbors. What are the embeddings of all "
             "nodes after "
          << q.layers << (q.layers == 1 ? " layer" : " layers") << " of message passing?";
      return out.str();
    }
  }
  return "";
}

Query parse_question(Task task, const std::string& question) {
  static const std::regex pair_re(
      R"(between node (\d+) and node (\d+)\?)");
  static const std::regex sp_re(
      R"(from node (\d+) to node (\d+) and its total weight\.)");
  static const std::regex flow_re(
      R"(maximum flow from node (\d+) to node (\d+)\?)");
  static const std::regex matching_re(
      R"(nodes 0 to (\d+) form one part and nodes (\d+) to (\d+) form the other)");
  static const std::regex gnn_node_re(
      R"(node (\d+): \[(-?\d+), (-?\d+)\])");
  static const std::regex gnn_layers_re(
      R"(after (\d+) layers? of message passing\?)");

  std::smatch m;
  switch (task) {
    case Task::Connectivity:
      if (!std::regex_search(question, m, pair_re)) {
        throw ParseError(0, "a connectivity question naming two nodes");
      }
      return PairQuery{std::stoi(m[1]), std::stoi(m[2])};
    case Task::ShortestPath:
      if (!std::regex_search(question, m, sp_re)) {
        throw ParseError(0, "a shortest-path question naming two nodes");
      }
      return PairQuery{std::stoi(m[1]), std::stoi(m[2])};
    case Task::MaxFlow:
      if (!std::regex_search(question, m, flow_re)) {
        throw ParseError(0, "a max-flow question naming source and sink");
      }
      return FlowQuery{std::stoi(m[1]), std::stoi(m[2])};
    case Task::Matching:
      if (!std::regex_search(question, m, matching_re)) {
        throw ParseError(0, "a matching question naming the bipartition");
      }
      return MatchingQuery{std::stoi(m[1]) + 1};
    case Task::Gnn: {
      GnnQuery q;
      auto begin = std::sregex_iterator(question.begin(), question.end(), gnn_node_re);
      for (auto it = begin; it != std::sregex_iterator(); ++it) {
        std::size_t id = static_cast<std::size_t>(std::stoul((*it)[1]));
        if (q.initial.size() <= id) q.initial.resize(id + 1, EmbeddingVec{0, 0});
        q.initial[id] = {std::stoll((*it)[2]), std::stoll((*it)[3])};
      }
      if (q.initial.empty()) throw ParseError(0, "a GNN question listing embeddings");
      if (!std::regex_search(question, m, gnn_layers_re)) {
        throw ParseError(0, "a GNN question naming the layer count");
      }
      q.layers = std::stoi(m[1]);
      return q;
    }
    case Task::Cycle:
    case Task::TopoSort:
    case Task::Hamilton:
      return std::monostate{};
  }
  return std::monostate{};
}

std::string task_description(Task task) {
  switch (task) {
    case Task::Connectivity:
      return "You are given an undirected graph described by a list of edges. Your task is "
             "to decide whether two given nodes are connected, that is, whether the graph "
             "contains a path between them.";
    case Task::Cycle:
      return "You are given an undirected graph described by a list of edges. Your task is "
             "to decide whether the graph contains a cycle, a closed path that returns to "
             "its starting node without repeating an edge.";
    case Task::TopoSort:
      return "You are given a directed acyclic graph described by a list of directed edges. "
             "Your task is to produce a topological sorting: an ordering of all nodes in "
             "which every edge goes from an earlier node to a later node.";
    case Task::ShortestPath:
      return "You are given a weighted undirected graph described by a list of weighted "
             "edges. Your task is to find a path between two given nodes that minimizes the "
             "sum of the edge weights along the path.";
    case Task::MaxFlow:
      return "You are given a directed flow network in which every edge has a capacity. "
             "Your task is to determine the maximum amount of flow that can be routed from "
             "the source node to the sink node.";
    case Task::Matching:
      return "You are given an undirected bipartite graph whose nodes split into two parts "
             "with edges only between the parts. Your task is to find a maximum matching: a "
             "largest possible set of edges no two of which share a node.";
    case Task::Hamilton:
      return "You are given an undirected graph described by a list of edges. Your task is "
             "to find a Hamilton path: a path that visits every node of the graph exactly "
             "once.";
    case Task::Gnn:
      return "You are given an undirected graph in which every node carries a "
             "two-dimensional integer embedding. Your task is to simulate layers of "
             "message passing in which every node's embedding is replaced by the sum of "
             "its neighbors' embeddings.";
  }
  return "";
}

}  // namespace gundam

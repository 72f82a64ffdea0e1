#include "topoidx/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace topoidx {

Graph::Graph(int order, std::vector<Edge> edges)
    : order_(order), edges_(std::move(edges)) {
  if (order_ < 0) {
    throw std::invalid_argument("graph order must be nonnegative");
  }
  for (Edge& e : edges_) {
    if (e.first == e.second) {
      throw std::invalid_argument("self-loop at vertex " +
                                  std::to_string(e.first));
    }
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || e.second >= order_) {
      throw std::invalid_argument("edge endpoint out of range: {" +
                                  std::to_string(e.first) + ", " +
                                  std::to_string(e.second) + "}");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  degrees_.assign(static_cast<std::size_t>(order_), 0);
  for (const Edge& e : edges_) {
    ++degrees_[static_cast<std::size_t>(e.first)];
    ++degrees_[static_cast<std::size_t>(e.second)];
  }
}

int Graph::degree(Vertex v) const {
  return degrees_.at(static_cast<std::size_t>(v));
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.first)].push_back(e.second);
    adj[static_cast<std::size_t>(e.second)].push_back(e.first);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == n;
}

Graph path_graph(int l) {
  if (l < 1) throw std::invalid_argument("path_graph requires l >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(l - 1));
  for (int i = 0; i + 1 < l; ++i) edges.push_back({i, i + 1});
  return Graph(l, std::move(edges));
}

Graph cycle_graph(int m) {
  if (m < 3) throw std::invalid_argument("cycle_graph requires m >= 3");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) edges.push_back({i, (i + 1) % m});
  return Graph(m, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph requires n >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star_graph requires k >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(leaves));
  for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, std::move(edges));
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_graph requires n >= 0");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("random_graph requires 0 <= p <= 1");
  }
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_unit() < p) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

bool is_blank_or_comment(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

// Parses exactly `count` integers from a line; any leftover token fails.
std::vector<long> parse_ints(const std::string& line, int count, int lineno,
                             const char* what) {
  std::istringstream iss(line);
  std::vector<long> values;
  long value = 0;
  while (iss >> value) values.push_back(value);
  if (!iss.eof()) {
    iss.clear();
    std::string junk;
    iss >> junk;
    throw ParseError(lineno, std::string("malformed ") + what +
                                 ": unexpected token '" + junk + "'");
  }
  if (static_cast<int>(values.size()) != count) {
    throw ParseError(lineno, std::string("malformed ") + what + ": expected " +
                                 std::to_string(count) + " integers");
  }
  return values;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  int order = -1;
  long declared_edges = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  auto next_content_line = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!is_blank_or_comment(line)) {
        out = line;
        return true;
      }
    }
    ++lineno;
    return false;
  };

  std::string content;
  if (!next_content_line(content)) {
    throw ParseError(lineno, "missing header: expected 'n m'");
  }
  {
    const auto header = parse_ints(content, 2, lineno, "header");
    if (header[0] < 0 || header[1] < 0) {
      throw ParseError(lineno, "malformed header: negative count");
    }
    order = static_cast<int>(header[0]);
    declared_edges = header[1];
  }

  edges.reserve(static_cast<std::size_t>(declared_edges));
  for (long i = 0; i < declared_edges; ++i) {
    if (!next_content_line(content)) {
      throw ParseError(lineno, "expected " + std::to_string(declared_edges) +
                                   " edges, found " + std::to_string(i));
    }
    const auto uv = parse_ints(content, 2, lineno, "edge");
    const long u = uv[0], v = uv[1];
    if (u == v) {
      throw ParseError(lineno, "self-loop {" + std::to_string(u) + ", " +
                                   std::to_string(v) + "}");
    }
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw ParseError(lineno, "endpoint out of range: {" + std::to_string(u) +
                                   ", " + std::to_string(v) + "} with n = " +
                                   std::to_string(order));
    }
    Edge e{static_cast<Vertex>(std::min(u, v)),
           static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second) {
      throw ParseError(lineno, "duplicate edge {" + std::to_string(e.first) +
                                   ", " + std::to_string(e.second) + "}");
    }
    edges.push_back(e);
  }
  if (next_content_line(content)) {
    throw ParseError(lineno, "unexpected content after " +
                                 std::to_string(declared_edges) + " edges");
  }
  return Graph(order, std::move(edges));
}

Graph read_edge_list(std::string_view text) {
  std::istringstream iss{std::string(text)};
  return read_edge_list(iss);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream oss;
  write_edge_list(g, oss);
  return oss.str();
}

}  // namespace topoidx

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace topoidx {

using Vertex = int;

// Undirected edge, stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..order-1.
///
/// Edges are kept in canonical form (endpoints ordered, list sorted
/// lexicographically); the degree sequence is computed once at construction.
/// Instances are safe to share across threads.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Endpoints are normalized so the
  /// stored pair has first < second. Throws std::invalid_argument on a
  /// negative order, self-loop, out-of-range endpoint, or duplicate edge.
  Graph(int order, std::vector<Edge> edges);

  int order() const noexcept { return order_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  /// Canonical edge list: first < second, sorted lexicographically.
  /// Edge indices used elsewhere (e.g. subdivision vertices) refer to
  /// positions in this list.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int degree(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const noexcept;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
};

/// True when every vertex is reachable from vertex 0 (vacuously true for
/// order <= 1). A query only; no operation in this library requires it.
bool is_connected(const Graph& g);

// Standard families. Each rejects parameters outside its domain with
// std::invalid_argument.
Graph path_graph(int l);            // P_l, l >= 1
Graph cycle_graph(int m);           // C_m, m >= 3
Graph complete_graph(int n);        // K_n, n >= 1
Graph star_graph(int leaves);       // K_{1,k}, k >= 1; vertex 0 is the center

/// SplitMix64 (Steele, Lea & Flood), fixed bit for bit so seeded graphs
/// reproduce across platforms and implementations:
///
///   state += 0x9e3779b97f4a7c15
///   z = state
///   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
///   output = z ^ (z >> 31)
///
/// next_unit() maps the top 53 bits onto [0, 1): (next() >> 11) * 2^-53.
/// Every step is exact integer or power-of-two arithmetic, so the stream
/// and the derived doubles are identical everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, 1).
  double next_unit() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/// Erdos-Renyi G(n, p), a pure function of (n, p, seed): candidate pairs
/// {u, v}, u < v, are visited in lexicographic order and kept when the
/// next SplitMix64 unit draw is < p. May be disconnected. Throws
/// std::invalid_argument unless n >= 0 and 0 <= p <= 1.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Error raised by edge-list parsing; line() is the 1-based input line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Edge-list text format: first non-comment line is "n m"; the next m
// non-comment lines are "u v" with 0 <= u, v < n and u != v. Lines starting
// with '#' and blank lines are ignored. Trailing newline optional.
Graph read_edge_list(std::istream& in);
Graph read_edge_list(std::string_view text);
void write_edge_list(const Graph& g, std::ostream& out);
std::string write_edge_list(const Graph& g);

}  // namespace topoidx

#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "topoidx/graph.hpp"

namespace topoidx {

enum class ProductKind {
  Join,
  Corona,
  Subdivision,
  CoronaJoin,
  SubdivisionVertexJoin,
};

std::string_view to_string(ProductKind kind);

// Where a product vertex came from.
struct FromFirst {
  Vertex vertex;  // vertex of the first factor
  friend bool operator==(const FromFirst&, const FromFirst&) = default;
};
struct FromSecond {
  int copy;       // which copy of the second factor (0-based)
  Vertex vertex;  // vertex within that copy
  friend bool operator==(const FromSecond&, const FromSecond&) = default;
};
struct FromSubdivision {
  int edge;  // index into the first factor's canonical edge list
  friend bool operator==(const FromSubdivision&, const FromSubdivision&) =
      default;
};
using VertexOrigin = std::variant<FromFirst, FromSecond, FromSubdivision>;

/// A constructed product together with per-vertex provenance:
/// origins[v] records where product vertex v came from.
struct ProductGraph {
  ProductKind kind;
  Graph graph;
  std::vector<VertexOrigin> origins;
};

/// Join G1 + G2: disjoint union plus every edge between the two vertex
/// sets. Layout: G1 occupies ids 0..n1-1, G2 the next n2 ids.
ProductGraph join(const Graph& g1, const Graph& g2);

/// Classical corona G1 o G2: one copy of G1 and n1 copies of G2, with
/// vertex i of G1 adjacent to every vertex of copy i (and only copy i).
/// Layout: G1 first, then copy i occupies ids n1 + i*n2 .. n1 + (i+1)*n2 - 1.
/// Requires a nonempty G1.
ProductGraph corona(const Graph& g1, const Graph& g2);

/// Subdivision S(G): every edge {u, v} is replaced by a path u - s - v
/// through a fresh vertex s. Layout: originals keep their ids; the vertex
/// subdividing edge j of g.edges() gets id n + j. Original degrees are
/// preserved and every new vertex has degree 2.
ProductGraph subdivision(const Graph& g);

/// Corona join G1 (+) G2: one copy of G1 and n1 copies of G2, where every
/// vertex of EVERY copy is adjacent to ALL vertices of G1. This differs
/// from the classical corona, where copy i attaches to vertex i only; here
/// each G1 vertex ends up with degree d(v) + n1*n2 and each copy vertex
/// with degree d(v) + n1. Layout: as in corona. Requires a nonempty G1.
ProductGraph corona_join(const Graph& g1, const Graph& g2);

/// Subdivision-vertex join G1 (.+) G2: S(G1) plus one copy of G2, with
/// every subdivision vertex adjacent to every vertex of G2. Layout: G1
/// originals, then the m1 subdivision vertices in edge order, then G2.
ProductGraph subdivision_vertex_join(const Graph& g1, const Graph& g2);

/// Degree a vertex with this origin must have in corona_join(g1, g2):
/// d(v) + n1*n2 for a G1 vertex, d(v) + n1 for a copy vertex. A
/// subdivision origin is invalid here (std::invalid_argument).
int corona_join_degree(const VertexOrigin& origin, const Graph& g1,
                       const Graph& g2);

/// Degree a vertex with this origin must have in
/// subdivision_vertex_join(g1, g2): d(v) for a G1 original, 2 + n2 for a
/// subdivision vertex, d(v) + m1 for a G2 vertex (the single copy, index
/// 0; any other copy index is invalid).
int subdivision_vertex_join_degree(const VertexOrigin& origin, const Graph& g1,
                                   const Graph& g2);

}  // namespace topoidx

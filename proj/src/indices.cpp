#include "topoidx/indices.hpp"

#include <stdexcept>

namespace topoidx {

std::string_view to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::M1:
      return "M1";
    case IndexKind::M2:
      return "M2";
    case IndexKind::F:
      return "F";
    case IndexKind::HM1:
      return "HM1";
    case IndexKind::RM2:
      return "RM2";
  }
  return "?";
}

std::optional<IndexKind> parse_index_kind(std::string_view name) {
  if (name == "M1") return IndexKind::M1;
  if (name == "M2") return IndexKind::M2;
  if (name == "F") return IndexKind::F;
  if (name == "HM1") return IndexKind::HM1;
  if (name == "RM2") return IndexKind::RM2;
  return std::nullopt;
}

IndexValue first_zagreb_vertex_sum(const Graph& g) {
  IndexValue total = 0;
  for (int d : g.degrees()) total += IndexValue(d) * d;
  return total;
}

IndexValue first_zagreb_edge_sum(const Graph& g) {
  const auto& deg = g.degrees();
  IndexValue total = 0;
  for (const Edge& e : g.edges())
    total += deg[static_cast<std::size_t>(e.first)] +
             deg[static_cast<std::size_t>(e.second)];
  return total;
}

IndexValue first_zagreb(const Graph& g) {
  IndexValue by_vertices = first_zagreb_vertex_sum(g);
  if (by_vertices != first_zagreb_edge_sum(g)) {
    throw std::logic_error("first_zagreb: vertex and edge forms disagree");
  }
  return by_vertices;
}

IndexValue second_zagreb(const Graph& g) {
  const auto& deg = g.degrees();
  IndexValue total = 0;
  for (const Edge& e : g.edges())
    total += IndexValue(deg[static_cast<std::size_t>(e.first)]) *
             deg[static_cast<std::size_t>(e.second)];
  return total;
}

IndexValue forgotten_vertex_sum(const Graph& g) {
  IndexValue total = 0;
  for (int d : g.degrees()) total += IndexValue(d) * d * d;
  return total;
}

IndexValue forgotten_edge_sum(const Graph& g) {
  const auto& deg = g.degrees();
  IndexValue total = 0;
  for (const Edge& e : g.edges()) {
    const IndexValue du = deg[static_cast<std::size_t>(e.first)];
    const IndexValue dv = deg[static_cast<std::size_t>(e.second)];
    total += du * du + dv * dv;
  }
  return total;
}

IndexValue forgotten_index(const Graph& g) {
  IndexValue by_vertices = forgotten_vertex_sum(g);
  if (by_vertices != forgotten_edge_sum(g)) {
    throw std::logic_error("forgotten_index: vertex and edge forms disagree");
  }
  return by_vertices;
}

IndexValue first_hyper_zagreb(const Graph& g) {
  const auto& deg = g.degrees();
  IndexValue total = 0;
  for (const Edge& e : g.edges()) {
    const IndexValue sum = IndexValue(deg[static_cast<std::size_t>(e.first)]) +
                           deg[static_cast<std::size_t>(e.second)];
    total += sum * sum;
  }
  return total;
}

IndexValue reduced_second_zagreb(const Graph& g) {
  const auto& deg = g.degrees();
  IndexValue total = 0;
  for (const Edge& e : g.edges())
    total += IndexValue(deg[static_cast<std::size_t>(e.first)] - 1) *
             (deg[static_cast<std::size_t>(e.second)] - 1);
  return total;
}

IndexValue topological_index(const Graph& g, IndexKind kind) {
  switch (kind) {
    case IndexKind::M1:
      return first_zagreb(g);
    case IndexKind::M2:
      return second_zagreb(g);
    case IndexKind::F:
      return forgotten_index(g);
    case IndexKind::HM1:
      return first_hyper_zagreb(g);
    case IndexKind::RM2:
      return reduced_second_zagreb(g);
  }
  throw std::invalid_argument("unknown index kind");
}

GraphParams graph_params(const Graph& g) {
  return GraphParams{g.order(),
                     g.size(),
                     first_zagreb(g),
                     second_zagreb(g),
                     forgotten_index(g),
                     first_hyper_zagreb(g),
                     reduced_second_zagreb(g)};
}

}  // namespace topoidx

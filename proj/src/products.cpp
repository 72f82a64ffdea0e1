#include "topoidx/products.hpp"

#include <stdexcept>
#include <utility>

namespace topoidx {

std::string_view to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::Join:
      return "join";
    case ProductKind::Corona:
      return "corona";
    case ProductKind::Subdivision:
      return "subdivision";
    case ProductKind::CoronaJoin:
      return "corona-join";
    case ProductKind::SubdivisionVertexJoin:
      return "subdivision-vertex-join";
  }
  return "?";
}

namespace {

void require_nonempty_first(const Graph& g1, const char* op) {
  if (g1.order() < 1) {
    throw std::invalid_argument(std::string(op) +
                                " requires a nonempty first factor");
  }
}

}  // namespace

ProductGraph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order(), n2 = g2.order();
  std::vector<Edge> edges(g1.edges());
  edges.reserve(edges.size() + g2.edges().size() +
                static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2));
  for (const Edge& e : g2.edges()) edges.push_back({e.first + n1, e.second + n1});
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) edges.push_back({u, n1 + v});

  std::vector<VertexOrigin> origins;
  origins.reserve(static_cast<std::size_t>(n1 + n2));
  for (int v = 0; v < n1; ++v) origins.emplace_back(FromFirst{v});
  for (int v = 0; v < n2; ++v) origins.emplace_back(FromSecond{0, v});
  return {ProductKind::Join, Graph(n1 + n2, std::move(edges)),
          std::move(origins)};
}

ProductGraph corona(const Graph& g1, const Graph& g2) {
  require_nonempty_first(g1, "corona");
  const int n1 = g1.order(), n2 = g2.order();
  std::vector<Edge> edges(g1.edges());
  std::vector<VertexOrigin> origins;
  origins.reserve(static_cast<std::size_t>(n1) * (1 + n2));
  for (int v = 0; v < n1; ++v) origins.emplace_back(FromFirst{v});
  for (int i = 0; i < n1; ++i) {
    const int base = n1 + i * n2;
    for (const Edge& e : g2.edges())
      edges.push_back({e.first + base, e.second + base});
    for (int v = 0; v < n2; ++v) {
      edges.push_back({i, base + v});
      origins.emplace_back(FromSecond{i, v});
    }
  }
  return {ProductKind::Corona, Graph(n1 * (1 + n2), std::move(edges)),
          std::move(origins)};
}

ProductGraph subdivision(const Graph& g) {
  const int n = g.order(), m = g.size();
  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(m));
  std::vector<VertexOrigin> origins;
  origins.reserve(static_cast<std::size_t>(n + m));
  for (int v = 0; v < n; ++v) origins.emplace_back(FromFirst{v});
  for (int j = 0; j < m; ++j) {
    const Edge& e = g.edges()[static_cast<std::size_t>(j)];
    edges.push_back({e.first, n + j});
    edges.push_back({e.second, n + j});
    origins.emplace_back(FromSubdivision{j});
  }
  return {ProductKind::Subdivision, Graph(n + m, std::move(edges)),
          std::move(origins)};
}

ProductGraph corona_join(const Graph& g1, const Graph& g2) {
  require_nonempty_first(g1, "corona_join");
  const int n1 = g1.order(), n2 = g2.order();
  std::vector<Edge> edges(g1.edges());
  std::vector<VertexOrigin> origins;
  origins.reserve(static_cast<std::size_t>(n1) * (1 + n2));
  for (int v = 0; v < n1; ++v) origins.emplace_back(FromFirst{v});
  for (int i = 0; i < n1; ++i) {
    const int base = n1 + i * n2;
    for (const Edge& e : g2.edges())
      edges.push_back({e.first + base, e.second + base});
    for (int v = 0; v < n2; ++v) {
      // every copy vertex is joined to all of G1, not just to vertex i
      for (int u = 0; u < n1; ++u) edges.push_back({u, base + v});
      origins.emplace_back(FromSecond{i, v});
    }
  }
  return {ProductKind::CoronaJoin, Graph(n1 + n1 * n2, std::move(edges)),
          std::move(origins)};
}

ProductGraph subdivision_vertex_join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order(), m1 = g1.size(), n2 = g2.order();
  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(m1) + g2.edges().size() +
                static_cast<std::size_t>(m1) * static_cast<std::size_t>(n2));
  std::vector<VertexOrigin> origins;
  origins.reserve(static_cast<std::size_t>(n1 + m1 + n2));
  for (int v = 0; v < n1; ++v) origins.emplace_back(FromFirst{v});
  for (int j = 0; j < m1; ++j) {
    const Edge& e = g1.edges()[static_cast<std::size_t>(j)];
    edges.push_back({e.first, n1 + j});
    edges.push_back({e.second, n1 + j});
    origins.emplace_back(FromSubdivision{j});
  }
  const int base2 = n1 + m1;
  for (const Edge& e : g2.edges())
    edges.push_back({e.first + base2, e.second + base2});
  for (int v = 0; v < n2; ++v) {
    for (int j = 0; j < m1; ++j) edges.push_back({n1 + j, base2 + v});
    origins.emplace_back(FromSecond{0, v});
  }
  return {ProductKind::SubdivisionVertexJoin,
          Graph(n1 + m1 + n2, std::move(edges)), std::move(origins)};
}

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

int corona_join_degree(const VertexOrigin& origin, const Graph& g1,
                       const Graph& g2) {
  const int n1 = g1.order(), n2 = g2.order();
  return std::visit(
      overloaded{
          [&](const FromFirst& o) { return g1.degree(o.vertex) + n1 * n2; },
          [&](const FromSecond& o) {
            if (o.copy < 0 || o.copy >= n1) {
              throw std::invalid_argument("copy index out of range");
            }
            return g2.degree(o.vertex) + n1;
          },
          [&](const FromSubdivision&) -> int {
            throw std::invalid_argument(
                "corona join has no subdivision vertices");
          },
      },
      origin);
}

int subdivision_vertex_join_degree(const VertexOrigin& origin, const Graph& g1,
                                   const Graph& g2) {
  const int m1 = g1.size(), n2 = g2.order();
  return std::visit(
      overloaded{
          [&](const FromFirst& o) { return g1.degree(o.vertex); },
          [&](const FromSecond& o) {
            if (o.copy != 0) {
              throw std::invalid_argument(
                  "subdivision-vertex join uses a single copy of G2");
            }
            return g2.degree(o.vertex) + m1;
          },
          [&](const FromSubdivision& o) {
            if (o.edge < 0 || o.edge >= m1) {
              throw std::invalid_argument("subdivided edge index out of range");
            }
            return 2 + n2;
          },
      },
      origin);
}

}  // namespace topoidx

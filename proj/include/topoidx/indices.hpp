#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string_view>

#include "topoidx/graph.hpp"

namespace topoidx {

/// Exact arbitrary-precision integer. Index values scale like n1^4 * n2^3
/// for the products built here, so 64-bit arithmetic is not part of the
/// contract anywhere: every computation below is exact at any magnitude.
using IndexValue = boost::multiprecision::cpp_int;

enum class IndexKind { M1, M2, F, HM1, RM2 };

std::string_view to_string(IndexKind kind);
std::optional<IndexKind> parse_index_kind(std::string_view name);

// First Zagreb index M1: sum of squared degrees; equally the sum of
// d(u) + d(v) over edges. Both forms are evaluated and must agree
// (std::logic_error otherwise) -- each independently validates the
// degree bookkeeping.
IndexValue first_zagreb(const Graph& g);
IndexValue first_zagreb_vertex_sum(const Graph& g);
IndexValue first_zagreb_edge_sum(const Graph& g);

// Second Zagreb index M2: sum of d(u) * d(v) over edges.
IndexValue second_zagreb(const Graph& g);

// Forgotten index F: sum of cubed degrees; equally the sum of
// d(u)^2 + d(v)^2 over edges. Cross-checked like first_zagreb.
IndexValue forgotten_index(const Graph& g);
IndexValue forgotten_vertex_sum(const Graph& g);
IndexValue forgotten_edge_sum(const Graph& g);

// First hyper Zagreb index HM1: sum of (d(u) + d(v))^2 over edges.
IndexValue first_hyper_zagreb(const Graph& g);

// Reduced second Zagreb index RM2: sum of (d(u) - 1)(d(v) - 1) over edges.
IndexValue reduced_second_zagreb(const Graph& g);

IndexValue topological_index(const Graph& g, IndexKind kind);

/// The summary a factor contributes to every closed form: order, size,
/// and the five indices. Closed-form evaluators are pure polynomial maps
/// on these fields; nothing requires the fields to be realizable by an
/// actual graph unless they came from graph_params().
struct GraphParams {
  int order = 0;
  int size = 0;
  IndexValue m1;
  IndexValue m2;
  IndexValue f;
  IndexValue hm1;
  IndexValue rm2;
  friend bool operator==(const GraphParams&, const GraphParams&) = default;
};

GraphParams graph_params(const Graph& g);

}  // namespace topoidx

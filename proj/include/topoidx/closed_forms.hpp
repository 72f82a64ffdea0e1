#pragma once

#include "topoidx/indices.hpp"
#include "topoidx/products.hpp"

namespace topoidx {

// Closed forms for F, HM1 and RM2 of the two corona-variant products,
// evaluated from the factors' GraphParams alone -- the product graph is
// never touched. Exact at any magnitude.
//
// The two subdivision-vertex-join forms for HM1 and RM2 contain sums over
// the edges of S(G1); those are closed here through two identities that
// follow from each original vertex u lying on exactly d(u) edges of S(G1):
//
//   sum over E(S(G1)) of d_G1(u)   = M1(G1)
//   sum over E(S(G1)) of d_G1(u)^2 = F(G1)
//
// where u denotes the original endpoint of each subdivision edge. The
// derived quantities n1' = n1 + m1 and m1' = 2*m1 of S(G1) are always
// recomputed from (n1, m1), never taken as inputs.

// Corona-join evaluators require p1.order >= 1 (std::invalid_argument).
IndexValue forgotten_corona_join(const GraphParams& p1, const GraphParams& p2);
IndexValue forgotten_subdivision_vertex_join(const GraphParams& p1,
                                             const GraphParams& p2);
IndexValue first_hyper_zagreb_corona_join(const GraphParams& p1,
                                          const GraphParams& p2);
IndexValue first_hyper_zagreb_subdivision_vertex_join(const GraphParams& p1,
                                                      const GraphParams& p2);
IndexValue reduced_second_zagreb_corona_join(const GraphParams& p1,
                                             const GraphParams& p2);
IndexValue reduced_second_zagreb_subdivision_vertex_join(
    const GraphParams& p1, const GraphParams& p2);

/// Dispatch on (kind, product). Only F, HM1 and RM2 of CoronaJoin and
/// SubdivisionVertexJoin have closed forms here; anything else throws
/// std::invalid_argument.
IndexValue closed_form(IndexKind kind, ProductKind product,
                       const GraphParams& p1, const GraphParams& p2);

/// The specialized expressions for P_l (+) C_m and P_l (.+) C_m, evaluated
/// term by term as displayed rather than through the general evaluators.
/// They hard-code path subexpressions (F = 8l-14, HM1 = 16l-30,
/// RM2 = l-3, M1 = 4l-6) whose validity starts at l = 3, so the domain is
/// l >= 3 and m >= 3; outside it throws std::domain_error.
IndexValue path_cycle_closed_form(IndexKind kind, ProductKind product, int l,
                                  int m);

}  // namespace topoidx

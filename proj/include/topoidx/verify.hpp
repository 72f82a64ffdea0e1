#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topoidx/closed_forms.hpp"
#include "topoidx/graph.hpp"
#include "topoidx/indices.hpp"
#include "topoidx/products.hpp"

namespace topoidx {

struct CatalogEntry {
  std::string label;
  Graph graph;
};

/// The fixed factor catalog for differential verification: paths P_1..P_8,
/// cycles C_3..C_8, completes K_1..K_6, stars K_{1,1}..K_{1,6}.
std::vector<CatalogEntry> standard_catalog();

// Generator spec mini-language: "path:5", "cycle:6", "complete:4",
// "star:3", "random:8:0.5:42" (n, p, seed); single-letter aliases p, c, k
// and s for the first four.
bool looks_like_generator_spec(std::string_view spec);
Graph graph_from_spec(std::string_view spec);  // std::invalid_argument on bad spec

/// The six closed-form evaluators the harness compares against direct
/// computation. Tests may swap in corrupted entries to exercise the
/// mismatch path; production code always uses default_closed_forms().
struct ClosedFormTable {
  using Fn = IndexValue (*)(const GraphParams&, const GraphParams&);
  Fn corona_join_f = &forgotten_corona_join;
  Fn corona_join_hm1 = &first_hyper_zagreb_corona_join;
  Fn corona_join_rm2 = &reduced_second_zagreb_corona_join;
  Fn sdvj_f = &forgotten_subdivision_vertex_join;
  Fn sdvj_hm1 = &first_hyper_zagreb_subdivision_vertex_join;
  Fn sdvj_rm2 = &reduced_second_zagreb_subdivision_vertex_join;
};

const ClosedFormTable& default_closed_forms();

struct VerificationRecord {
  std::string product;  // "corona-join" or "subdivision-vertex-join"
  std::string g1;
  std::string g2;
  std::string index;  // "F", "HM1" or "RM2"
  IndexValue direct;
  IndexValue closed_form;
  bool match = false;
};

struct DegreeMismatch {
  std::string product;
  std::string g1;
  std::string g2;
  Vertex vertex = 0;
  int actual = 0;
  int predicted = 0;
};

struct VerificationReport {
  std::vector<VerificationRecord> records;
  std::vector<DegreeMismatch> degree_mismatches;
  std::int64_t degree_checks = 0;

  bool all_match() const;
  const VerificationRecord* first_mismatch() const;

  // Reports carry exact decimal values; serialization is byte-deterministic
  // for a fixed record sequence. CSV columns:
  // product,g1,g2,index,direct,closed_form,match
  std::string to_csv() const;
  std::string to_json() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int fuzz_pairs = 200;
  int max_random_order = 10;
  const ClosedFormTable* closed_forms = nullptr;  // nullptr: built-in table
};

/// Checks one ordered factor pair: builds both products, compares each of
/// F, HM1, RM2 computed directly on the product against the closed form
/// from the factors' params (six records), and checks every product
/// vertex's degree against its predicted value.
void verify_pair(const std::string& label1, const Graph& g1,
                 const std::string& label2, const Graph& g2,
                 const ClosedFormTable& table, VerificationReport& report);

/// Runs the differential suite: all ordered catalog pairs, then
/// options.fuzz_pairs random factor pairs drawn deterministically from
/// options.seed. Record order is fixed (catalog order, then draw order;
/// corona join before subdivision-vertex join; F, HM1, RM2 within each),
/// so equal options produce byte-identical reports.
VerificationReport run_verification(const VerifyOptions& options = {});

struct TableCell {
  int l = 0;
  int m = 0;
  IndexValue expression;  // specialized P_l/C_m expression
  IndexValue direct;      // index of the explicitly built product
  bool match = false;
};

/// Grid of the specialized P_l/C_m expression against direct computation.
/// Requires 3 <= lmin <= lmax and 3 <= mmin <= mmax (std::domain_error).
std::vector<TableCell> path_cycle_table(IndexKind kind, ProductKind product,
                                        int lmin, int lmax, int mmin,
                                        int mmax);

std::string table_to_csv(const std::vector<TableCell>& cells);

}  // namespace topoidx

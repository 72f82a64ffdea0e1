#include "topoidx/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace topoidx {

std::vector<CatalogEntry> standard_catalog() {
  std::vector<CatalogEntry> catalog;
  for (int l = 1; l <= 8; ++l)
    catalog.push_back({"path:" + std::to_string(l), path_graph(l)});
  for (int m = 3; m <= 8; ++m)
    catalog.push_back({"cycle:" + std::to_string(m), cycle_graph(m)});
  for (int n = 1; n <= 6; ++n)
    catalog.push_back({"complete:" + std::to_string(n), complete_graph(n)});
  for (int k = 1; k <= 6; ++k)
    catalog.push_back({"star:" + std::to_string(k), star_graph(k)});
  return catalog;
}

namespace {

std::vector<std::string> split(std::string_view spec, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = spec.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(spec.substr(start));
      return parts;
    }
    parts.emplace_back(spec.substr(start, pos - start));
    start = pos + 1;
  }
}

int parse_count(const std::string& text, const std::string& spec) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad generator spec '" + std::string(spec) +
                                "': '" + text + "' is not an integer");
  }
}

}  // namespace

bool looks_like_generator_spec(std::string_view spec) {
  const auto pos = spec.find(':');
  if (pos == std::string_view::npos) return false;
  const std::string_view name = spec.substr(0, pos);
  return name == "path" || name == "cycle" || name == "complete" ||
         name == "star" || name == "random" || name == "p" || name == "c" ||
         name == "k" || name == "s";
}

Graph graph_from_spec(std::string_view spec) {
  const std::string text(spec);
  const auto parts = split(spec, ':');
  const std::string& name = parts[0];
  auto expect_arity = [&](std::size_t arity) {
    if (parts.size() != arity + 1) {
      throw std::invalid_argument("bad generator spec '" + text +
                                  "': expected " + std::to_string(arity) +
                                  " parameter(s)");
    }
  };
  if (name == "path" || name == "p") {
    expect_arity(1);
    return path_graph(parse_count(parts[1], text));
  }
  if (name == "cycle" || name == "c") {
    expect_arity(1);
    return cycle_graph(parse_count(parts[1], text));
  }
  if (name == "complete" || name == "k") {
    expect_arity(1);
    return complete_graph(parse_count(parts[1], text));
  }
  if (name == "star" || name == "s") {
    expect_arity(1);
    return star_graph(parse_count(parts[1], text));
  }
  if (name == "random") {
    expect_arity(3);
    const int n = parse_count(parts[1], text);
    double p = 0.0;
    try {
      std::size_t used = 0;
      p = std::stod(parts[2], &used);
      if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad generator spec '" + text + "': '" +
                                  parts[2] + "' is not a probability");
    }
    std::uint64_t seed = 0;
    try {
      std::size_t used = 0;
      seed = std::stoull(parts[3], &used);
      if (used != parts[3].size()) throw std::invalid_argument(parts[3]);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad generator spec '" + text + "': '" +
                                  parts[3] + "' is not a seed");
    }
    return random_graph(n, p, seed);
  }
  throw std::invalid_argument("unknown generator '" + name + "' in spec '" +
                              text + "'");
}

const ClosedFormTable& default_closed_forms() {
  static const ClosedFormTable table{};
  return table;
}

bool VerificationReport::all_match() const {
  return degree_mismatches.empty() &&
         std::all_of(records.begin(), records.end(),
                     [](const VerificationRecord& r) { return r.match; });
}

const VerificationRecord* VerificationReport::first_mismatch() const {
  for (const VerificationRecord& r : records)
    if (!r.match) return &r;
  return nullptr;
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "product,g1,g2,index,direct,closed_form,match\n";
  for (const VerificationRecord& r : records) {
    out << r.product << ',' << r.g1 << ',' << r.g2 << ',' << r.index << ','
        << r.direct << ',' << r.closed_form << ','
        << (r.match ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const VerificationRecord& r : records) {
    nlohmann::ordered_json obj;
    obj["product"] = r.product;
    obj["g1"] = r.g1;
    obj["g2"] = r.g2;
    obj["index"] = r.index;
    obj["direct"] = r.direct.str();
    obj["closed_form"] = r.closed_form.str();
    obj["match"] = r.match;
    array.push_back(std::move(obj));
  }
  return array.dump(2) + "\n";
}

namespace {

void record_triple(const std::string& product_name, const std::string& label1,
                   const std::string& label2, const Graph& product,
                   const GraphParams& params1, const GraphParams& params2,
                   ClosedFormTable::Fn f_fn, ClosedFormTable::Fn hm1_fn,
                   ClosedFormTable::Fn rm2_fn, VerificationReport& report) {
  const struct {
    const char* index;
    IndexValue direct;
    IndexValue closed;
  } rows[3] = {
      {"F", forgotten_index(product), f_fn(params1, params2)},
      {"HM1", first_hyper_zagreb(product), hm1_fn(params1, params2)},
      {"RM2", reduced_second_zagreb(product), rm2_fn(params1, params2)},
  };
  for (const auto& row : rows) {
    report.records.push_back({product_name, label1, label2, row.index,
                              row.direct, row.closed,
                              row.direct == row.closed});
  }
}

void check_degrees(const ProductGraph& product, const std::string& label1,
                   const std::string& label2, const Graph& g1, const Graph& g2,
                   VerificationReport& report) {
  const bool is_corona_join = product.kind == ProductKind::CoronaJoin;
  const std::string name(to_string(product.kind));
  for (Vertex v = 0; v < product.graph.order(); ++v) {
    const int actual = product.graph.degree(v);
    const int predicted =
        is_corona_join
            ? corona_join_degree(product.origins[static_cast<std::size_t>(v)],
                                 g1, g2)
            : subdivision_vertex_join_degree(
                  product.origins[static_cast<std::size_t>(v)], g1, g2);
    ++report.degree_checks;
    if (actual != predicted) {
      report.degree_mismatches.push_back(
          {name, label1, label2, v, actual, predicted});
    }
  }
}

}  // namespace

void verify_pair(const std::string& label1, const Graph& g1,
                 const std::string& label2, const Graph& g2,
                 const ClosedFormTable& table, VerificationReport& report) {
  const GraphParams params1 = graph_params(g1);
  const GraphParams params2 = graph_params(g2);

  const ProductGraph cj = corona_join(g1, g2);
  record_triple("corona-join", label1, label2, cj.graph, params1, params2,
                table.corona_join_f, table.corona_join_hm1,
                table.corona_join_rm2, report);
  check_degrees(cj, label1, label2, g1, g2, report);

  const ProductGraph sj = subdivision_vertex_join(g1, g2);
  record_triple("subdivision-vertex-join", label1, label2, sj.graph, params1,
                params2, table.sdvj_f, table.sdvj_hm1, table.sdvj_rm2, report);
  check_degrees(sj, label1, label2, g1, g2, report);
}

VerificationReport run_verification(const VerifyOptions& options) {
  if (options.fuzz_pairs < 0) {
    throw std::invalid_argument("fuzz pair count must be >= 0");
  }
  if (options.max_random_order < 1) {
    throw std::invalid_argument("max random order must be >= 1");
  }
  const ClosedFormTable& table =
      options.closed_forms ? *options.closed_forms : default_closed_forms();

  VerificationReport report;
  const auto catalog = standard_catalog();
  for (const CatalogEntry& first : catalog) {
    for (const CatalogEntry& second : catalog) {
      verify_pair(first.label, first.graph, second.label, second.graph, table,
                  report);
    }
  }

  SplitMix64 rng(options.seed);
  auto draw_factor = [&]() -> CatalogEntry {
    const int n = 1 + static_cast<int>(
                          rng.next() %
                          static_cast<std::uint64_t>(options.max_random_order));
    const int percent = static_cast<int>(rng.next() % 101);
    const std::uint64_t seed = rng.next();
    const double p = percent / 100.0;
    char label[64];
    std::snprintf(label, sizeof label, "random:%d:%.2f:%llu", n, p,
                  static_cast<unsigned long long>(seed));
    return {label, random_graph(n, p, seed)};
  };
  for (int i = 0; i < options.fuzz_pairs; ++i) {
    const CatalogEntry first = draw_factor();
    const CatalogEntry second = draw_factor();
    verify_pair(first.label, first.graph, second.label, second.graph, table,
                report);
  }
  return report;
}

std::vector<TableCell> path_cycle_table(IndexKind kind, ProductKind product,
                                        int lmin, int lmax, int mmin,
                                        int mmax) {
  if (product != ProductKind::CoronaJoin &&
      product != ProductKind::SubdivisionVertexJoin) {
    throw std::invalid_argument(
        "tables exist for the corona join and subdivision-vertex join only");
  }
  if (lmin < 3 || mmin < 3 || lmin > lmax || mmin > mmax) {
    throw std::domain_error(
        "table ranges require 3 <= lmin <= lmax and 3 <= mmin <= mmax");
  }
  std::vector<TableCell> cells;
  cells.reserve(static_cast<std::size_t>(lmax - lmin + 1) *
                static_cast<std::size_t>(mmax - mmin + 1));
  for (int l = lmin; l <= lmax; ++l) {
    const Graph p = path_graph(l);
    for (int m = mmin; m <= mmax; ++m) {
      const Graph c = cycle_graph(m);
      const ProductGraph built = product == ProductKind::CoronaJoin
                                     ? corona_join(p, c)
                                     : subdivision_vertex_join(p, c);
      TableCell cell;
      cell.l = l;
      cell.m = m;
      cell.expression = path_cycle_closed_form(kind, product, l, m);
      cell.direct = topological_index(built.graph, kind);
      cell.match = cell.expression == cell.direct;
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

std::string table_to_csv(const std::vector<TableCell>& cells) {
  std::ostringstream out;
  out << "l,m,expression,direct,match\n";
  for (const TableCell& cell : cells) {
    out << cell.l << ',' << cell.m << ',' << cell.expression << ','
        << cell.direct << ',' << (cell.match ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace topoidx

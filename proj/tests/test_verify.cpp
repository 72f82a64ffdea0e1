#include "topoidx/verify.hpp"

#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>

using namespace topoidx;

TEST_CASE("standard catalog spans the four families") {
  const auto catalog = standard_catalog();
  REQUIRE(catalog.size() == 26);  // P1..P8, C3..C8, K1..K6, stars 1..6
  CHECK(catalog.front().label == "path:1");
  CHECK(catalog.front().graph.order() == 1);
  CHECK(catalog[8].label == "cycle:3");
  CHECK(catalog[14].label == "complete:1");
  CHECK(catalog[20].label == "star:1");
  CHECK(catalog.back().label == "star:6");
  CHECK(catalog.back().graph.order() == 7);
}

TEST_CASE("generator specs") {
  CHECK(looks_like_generator_spec("path:5"));
  CHECK(looks_like_generator_spec("k:1"));
  CHECK(looks_like_generator_spec("random:6:0.5:42"));
  CHECK_FALSE(looks_like_generator_spec("graph.el"));
  CHECK_FALSE(looks_like_generator_spec("path"));

  CHECK(graph_from_spec("path:5") == path_graph(5));
  CHECK(graph_from_spec("p:5") == path_graph(5));
  CHECK(graph_from_spec("cycle:6") == cycle_graph(6));
  CHECK(graph_from_spec("c:6") == cycle_graph(6));
  CHECK(graph_from_spec("complete:4") == complete_graph(4));
  CHECK(graph_from_spec("k:4") == complete_graph(4));
  CHECK(graph_from_spec("star:3") == star_graph(3));
  CHECK(graph_from_spec("s:3") == star_graph(3));
  CHECK(graph_from_spec("random:6:0.5:42") == random_graph(6, 0.5, 42));

  CHECK_THROWS_AS(graph_from_spec("wheel:4"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_spec("path:x"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_spec("path:3:4"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_spec("random:5:0.5"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_spec("random:5:two:1"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_spec("random:5:1.5:1"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_spec("cycle:2"), std::invalid_argument);
}

TEST_CASE("verify_pair emits six records in a fixed order") {
  VerificationReport report;
  verify_pair("path:3", path_graph(3), "cycle:3", cycle_graph(3),
              default_closed_forms(), report);
  REQUIRE(report.records.size() == 6);
  CHECK(report.records[0].product == "corona-join");
  CHECK(report.records[0].index == "F");
  CHECK(report.records[0].direct == 4456);
  CHECK(report.records[1].index == "HM1");
  CHECK(report.records[2].index == "RM2");
  CHECK(report.records[3].product == "subdivision-vertex-join");
  CHECK(report.records[3].index == "F");
  CHECK(report.records[3].direct == 452);
  CHECK(report.all_match());
  CHECK(report.first_mismatch() == nullptr);
  CHECK(report.degree_checks == 12 + 8);  // orders of the two products
  CHECK(report.degree_mismatches.empty());
}

TEST_CASE("full verification run matches everywhere") {
  VerifyOptions options;
  options.fuzz_pairs = 40;
  options.seed = 7;
  const VerificationReport report = run_verification(options);
  CHECK(report.records.size() == (26 * 26 + 40) * 6);
  CHECK(report.all_match());
  CHECK(report.degree_mismatches.empty());
  CHECK(report.degree_checks > 0);
}

TEST_CASE("reports are byte-deterministic for equal options") {
  VerifyOptions options;
  options.fuzz_pairs = 25;
  options.seed = 99;
  const VerificationReport a = run_verification(options);
  const VerificationReport b = run_verification(options);
  CHECK(a.to_csv() == b.to_csv());
  CHECK(a.to_json() == b.to_json());

  VerifyOptions other = options;
  other.seed = 100;
  CHECK(run_verification(other).to_csv() != a.to_csv());
}

TEST_CASE("report serialization formats") {
  VerificationReport report;
  verify_pair("path:2", path_graph(2), "complete:1", complete_graph(1),
              default_closed_forms(), report);

  const std::string csv = report.to_csv();
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "product,g1,g2,index,direct,closed_form,match");
  std::string first;
  std::getline(lines, first);
  CHECK(first == "corona-join,path:2,complete:1,F,70,70,true");

  const auto parsed = nlohmann::json::parse(report.to_json());
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == report.records.size());
  CHECK(parsed[0]["product"] == "corona-join");
  CHECK(parsed[0]["g1"] == "path:2");
  CHECK(parsed[0]["g2"] == "complete:1");
  CHECK(parsed[0]["index"] == "F");
  CHECK(parsed[0]["direct"] == "70");
  CHECK(parsed[0]["closed_form"] == "70");
  CHECK(parsed[0]["match"] == true);

  // CSV and JSON carry identical records modulo serialization
  int row = 0;
  std::istringstream body(csv);
  std::getline(body, header);
  std::string line;
  while (std::getline(body, line)) {
    const auto& obj = parsed[row++];
    std::string expected = std::string(obj["product"]) + "," +
                           std::string(obj["g1"]) + "," +
                           std::string(obj["g2"]) + "," +
                           std::string(obj["index"]) + "," +
                           std::string(obj["direct"]) + "," +
                           std::string(obj["closed_form"]) + "," +
                           (obj["match"].get<bool>() ? "true" : "false");
    CHECK(line == expected);
  }
  CHECK(row == static_cast<int>(report.records.size()));
}

TEST_CASE("a corrupted evaluator is caught and identified") {
  static constexpr auto corrupted =
      [](const GraphParams& a, const GraphParams& b) {
        return forgotten_corona_join(a, b) + 1;
      };
  ClosedFormTable table;  // defaults, then break one entry
  table.corona_join_f = corrupted;

  VerifyOptions options;
  options.fuzz_pairs = 0;
  options.closed_forms = &table;
  const VerificationReport report = run_verification(options);

  CHECK_FALSE(report.all_match());
  const VerificationRecord* bad = report.first_mismatch();
  REQUIRE(bad != nullptr);
  CHECK(bad == &report.records.front());  // earliest record is the culprit
  CHECK(bad->product == "corona-join");
  CHECK(bad->g1 == "path:1");
  CHECK(bad->g2 == "path:1");
  CHECK(bad->index == "F");
  CHECK(bad->closed_form == bad->direct + 1);  // both values are reported

  // only the corrupted evaluator's records mismatch
  for (const VerificationRecord& r : report.records) {
    CHECK(r.match == !(r.product == "corona-join" && r.index == "F"));
  }
}

TEST_CASE("option validation") {
  VerifyOptions options;
  options.fuzz_pairs = -1;
  CHECK_THROWS_AS(run_verification(options), std::invalid_argument);
  options.fuzz_pairs = 0;
  options.max_random_order = 0;
  CHECK_THROWS_AS(run_verification(options), std::invalid_argument);
}

TEST_CASE("path/cycle tables") {
  const auto cells =
      path_cycle_table(IndexKind::F, ProductKind::CoronaJoin, 3, 5, 3, 5);
  REQUIRE(cells.size() == 9);
  for (const TableCell& cell : cells) CHECK(cell.match);
  CHECK(cells.front().l == 3);
  CHECK(cells.front().m == 3);
  CHECK(cells.front().expression == 4456);

  const auto single = path_cycle_table(
      IndexKind::F, ProductKind::SubdivisionVertexJoin, 3, 3, 3, 3);
  REQUIRE(single.size() == 1);
  CHECK(single.front().expression == 452);
  CHECK(single.front().direct == 452);

  const std::string csv = table_to_csv(single);
  CHECK(csv == "l,m,expression,direct,match\n3,3,452,452,true\n");

  CHECK_THROWS_AS(
      path_cycle_table(IndexKind::RM2, ProductKind::CoronaJoin, 2, 5, 3, 5),
      std::domain_error);
  CHECK_THROWS_AS(
      path_cycle_table(IndexKind::F, ProductKind::CoronaJoin, 5, 3, 3, 5),
      std::domain_error);
  CHECK_THROWS_AS(
      path_cycle_table(IndexKind::F, ProductKind::Join, 3, 3, 3, 3),
      std::invalid_argument);
}

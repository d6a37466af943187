#include <doctest.h>

#include "fixtures.hpp"
#include "minfact/io.hpp"
#include "minfact/lamination.hpp"
#include "minfact/ncp.hpp"
#include "minfact/offspring.hpp"
#include "minfact/tree.hpp"

using namespace minfact;

TEST_CASE("JSON round trips") {
  const Factorization f(12, testing::example_factorization());
  const auto jf = io::to_json(f);
  CHECK(jf["schema"] == io::kSchemaVersion);
  CHECK(jf["factors"][0] == io::json::array({1, 3}));
  CHECK(io::factorization_from_json(io::json::parse(jf.dump())) == f);
  const NonCrossingPartition p(12, testing::example_blocks());
  CHECK(io::ncp_from_json(io::json::parse(io::to_json(p).dump())) == p);
  const BiTypeTree t(testing::example_dual_parents());
  const auto jt = io::to_json(t);
  CHECK(jt["order"] == "depth-first");
  CHECK(io::tree_from_json(jt) == t);
  const auto jp = io::to_json(solve_params(1.0));
  CHECK(jp["a"].get<double>() == doctest::Approx(std::exp(-0.5)));
}

TEST_CASE("invalid JSON inputs are rejected") {
  CHECK_THROWS(io::factorization_from_json(io::json::parse(R"({"n": 3, "factors": [[1,3],[1,2]]})")));
  CHECK_THROWS(io::ncp_from_json(io::json::parse(R"({"n": 4, "blocks": [[1,3],[2,4]]})")));
  CHECK_THROWS(io::factorization_from_json(io::json::parse(R"({"n": 3})")));
}

TEST_CASE("CSV quoting") {
  CHECK(io::csv_field("plain") == "plain");
  CHECK(io::csv_field("a,b") == "\"a,b\"");
  CHECK(io::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(io::csv_row({"a", "b,c"}) == "a,\"b,c\"\r\n");
  const auto csv = io::chords_csv(Lamination{4, {{0.25, 0.5}}});
  CHECK(csv == "s,t\r\n0.25,0.5\r\n");
}

TEST_CASE("SVG rendering") {
  const auto empty = io::render_svg(Lamination{});
  CHECK(empty.find("<circle") != std::string::npos);
  CHECK(empty.find("<line") == std::string::npos);
  const auto P = lam_of_partition(NonCrossingPartition(12, testing::example_blocks()));
  const auto svg = io::render_svg(P);
  std::size_t lines = 0;
  for (std::size_t pos = svg.find("<line"); pos != std::string::npos; pos = svg.find("<line", pos + 1)) ++lines;
  CHECK(lines == 8);
  CHECK(svg == io::render_svg(P));
  CHECK(svg.find("viewBox=\"0 0 1000 1000\"") != std::string::npos);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "ustar/config.hpp"
#include "ustar/render.hpp"
#include "ustar/structure.hpp"
#include "ustar/suite.hpp"

using namespace ustar;

TEST_CASE("order list parsing") {
  CHECK(parse_order_list("9") == std::vector<std::int64_t>{9});
  CHECK(parse_order_list("3,3") == std::vector<std::int64_t>{3, 3});
  CHECK(parse_order_list(" 27 , 3 ") == std::vector<std::int64_t>{27, 3});
  CHECK_THROWS_AS(parse_order_list("3,x"), std::invalid_argument);
}

TEST_CASE("involution grammar") {
  const GroupSpec g(3, {3, 3});
  CHECK(parse_involution(g, "canonical") == InvolutionSpec::canonical(g));
  CHECK(parse_involution(g, "identity") == InvolutionSpec::identity(g));
  CHECK(parse_involution(g, "swap(1,2)") == InvolutionSpec::swap_generators(g, 0, 1));
  CHECK(parse_involution(g, "a1->0,1;a2->1,0") == InvolutionSpec::swap_generators(g, 0, 1));
  CHECK(parse_involution(g, "a1->2,0;a2->0,2") == InvolutionSpec::canonical(g));
  CHECK(parse_involution(g, "a2->0,1; a1->1,0") == InvolutionSpec::identity(g));

  CHECK_THROWS_AS(parse_involution(g, "swap(1,1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_involution(g, "swap(0,1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_involution(g, "a1->0,1"), std::invalid_argument);   // a2 missing
  CHECK_THROWS_AS(parse_involution(g, "b1->0,1;a2->1,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_involution(g, "a1->1;a2->0,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_involution(g, "nonsense"), std::invalid_argument);
  // valid grammar, invalid map
  CHECK_THROWS_AS(parse_involution(GroupSpec(3, {9}), "a1->2"), NotInvolutory);
}

TEST_CASE("involution rendering round-trips through the grammar") {
  std::mt19937_64 rng(31);
  for (const GroupSpec& g : {GroupSpec(3, {3, 3}), GroupSpec(3, {9, 3}), GroupSpec(5, {5, 5})}) {
    std::vector<InvolutionSpec> etas{InvolutionSpec::identity(g), InvolutionSpec::canonical(g)};
    if (g.orders()[0] == g.orders()[1]) etas.push_back(InvolutionSpec::swap_generators(g, 0, 1));
    for (int k = 0; k < 5; ++k) etas.push_back(testsupport::random_involution(g, rng));
    for (const InvolutionSpec& eta : etas) {
      const std::string text = render_involution(eta);
      CHECK(parse_involution(g, text) == eta);
    }
  }
  CHECK(render_involution(InvolutionSpec::canonical(GroupSpec(3, {9}))) == "canonical");
  CHECK(render_involution(InvolutionSpec::identity(GroupSpec(3, {9}))) == "identity");
  CHECK(render_involution(InvolutionSpec::swap_generators(GroupSpec(3, {3, 3}), 0, 1)) ==
        "swap(1,2)");
}

TEST_CASE("job config JSON round trip") {
  JobConfig cfg;
  cfg.p = 5;
  cfg.orders = {5, 5};
  cfg.involution = "swap(1,2)";
  cfg.format = JobConfig::Format::Json;
  cfg.enumeration_cap = 1000;
  cfg.combinatorial_cap = 2000;
  cfg.max_i = 3;
  cfg.out_path = "report.json";
  CHECK(config_from_json(config_to_json(cfg)) == cfg);
  CHECK(config_from_json(config_to_json(JobConfig{})) == JobConfig{});
}

TEST_CASE("format names") {
  CHECK(parse_format("text") == JobConfig::Format::Text);
  CHECK(parse_format("json") == JobConfig::Format::Json);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("report JSON carries the documented fields and is deterministic") {
  const GroupSpec g(3, {9});
  const DiagonalForm d = diagonalize(InvolutionSpec::canonical(g));
  const StructureReport r = structure_report(d);
  const nlohmann::ordered_json j = report_to_json(r, true);
  CHECK(j["p"] == 3);
  CHECK(j["orders"] == nlohmann::ordered_json::array({9}));
  CHECK(j["involution"] == "canonical");
  CHECK(j["l"] == 1);
  CHECK(j["order_V"] == "3^8");
  CHECK(j["order_symmetric"] == "3^4");
  CHECK(j["order_unitary"] == "3^4");
  CHECK(j["f_symmetric"] == nlohmann::ordered_json::array({2, 1}));
  CHECK(j["f_unitary"] == nlohmann::ordered_json::array({2, 1}));
  CHECK(j["rank_unitary"] == 3);
  CHECK(j["unitary_basis"].size() == 3);
  CHECK(j["unitary_basis"][0]["alpha"] == nlohmann::ordered_json::array({1}));
  CHECK(j["unitary_basis"][0]["class"] == "L1");
  CHECK(j["unitary_basis"][0]["order"] == "3^2");
  CHECK(j["unitary_basis"][0].contains("element"));
  CHECK(j["unitary_basis"][0].contains("element_original"));
  // byte-stable across repeated rendering
  CHECK(report_to_json(structure_report(d), true).dump() == j.dump());
}

TEST_CASE("invariant vectors pad up to max_i on request") {
  const GroupSpec g(3, {9});
  const StructureReport r = structure_report(diagonalize(InvolutionSpec::canonical(g)));
  const nlohmann::ordered_json j = report_to_json(r, false, 4);
  CHECK(j["f_symmetric"] == nlohmann::ordered_json::array({2, 1, 0, 0}));
}

TEST_CASE("element rendering") {
  const GroupSpec g(3, {3, 3});
  const AlgebraElement one = AlgebraElement::one(g);
  const AlgebraElement x =
      one + AlgebraElement::group_element(g, {1, 0}).scaled(2) +
      AlgebraElement::group_element(g, {1, 2});
  CHECK(element_string(x, "b") == "1 + 2*b1 + b1*b2^2");
  CHECK(element_string(AlgebraElement::zero(g), "b") == "0");
  CHECK(monomial_string(g, {0, 0}, "b") == "1");
}

TEST_CASE("checks JSON summarises statuses") {
  const GroupSpec g(3, {3});
  const DiagonalForm d = diagonalize(InvolutionSpec::canonical(g));
  const auto checks = verification_suite(d);
  const nlohmann::ordered_json j = checks_to_json(d, checks);
  CHECK(j["all_pass"] == true);
  CHECK(j["failed"] == 0);
  CHECK(j["checks"].size() == checks.size());
  CHECK(j["checks"][0].contains("name"));
  CHECK(j["checks"][0].contains("status"));
  CHECK(j["checks"][0].contains("detail"));
}

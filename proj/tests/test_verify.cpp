#include <catch2/catch_amalgamated.hpp>

#include "clq/verify.hpp"

using namespace clq;

TEST_CASE("every suite passes with the default seed", "[verify]") {
  for (const auto& name : suite_names()) {
    const Report r = run_suite(name);
    INFO(name);
    for (const auto& c : r.checks) {
      INFO(c.name << " residual " << c.residual << " " << c.details);
      REQUIRE(c.status != "fail");
    }
    REQUIRE(r.ok());
    REQUIRE_FALSE(r.checks.empty());
  }
}

TEST_CASE("the aggregate suite covers every module", "[verify]") {
  const Report all = run_suite("all");
  REQUIRE(all.ok());
  for (const auto& name : suite_names()) {
    bool found = false;
    for (const auto& c : all.checks) found = found || c.name.starts_with(name + "/");
    INFO(name);
    REQUIRE(found);
  }
}

TEST_CASE("unknown suites are rejected", "[verify]") {
  CHECK_THROWS_AS(run_suite("bogus"), std::invalid_argument);
}

TEST_CASE("reports round trip through JSON", "[verify]") {
  const Report r = run_suite("gates");
  const nlohmann::json j = report_to_json(r);
  const Report back = report_from_json(j);
  CHECK(back == r);
  CHECK(j.at("summary").at("fail").get<int>() == 0);
  CHECK(j.at("summary").at("pass").get<int>() == r.count("pass"));
  // parse(format(r)) = r at the byte level as well
  CHECK(nlohmann::json::parse(j.dump(2)) == j);
}

TEST_CASE("reports are deterministic for a fixed seed", "[verify]") {
  VerifyConfig cfg;
  cfg.seed = 42;
  const std::string a = report_to_json(run_suite("all", cfg)).dump(2);
  const std::string b = report_to_json(run_suite("all", cfg)).dump(2);
  CHECK(a == b);
  cfg.seed = 7;
  const std::string c = report_to_json(run_suite("core", cfg)).dump(2);
  const std::string d = report_to_json(run_suite("core", cfg)).dump(2);
  CHECK(c == d);
}

TEST_CASE("the tolerance override reaches the checks", "[verify]") {
  VerifyConfig strict;
  strict.tol_override = 1e-300;  // residual-based checks must now fail
  const Report r = run_suite("rep", strict);
  CHECK_FALSE(r.ok());
}

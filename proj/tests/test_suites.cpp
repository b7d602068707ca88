#include "wittkit/suites.hpp"

#include <doctest.h>

#include <algorithm>

using namespace wittkit;

TEST_SUITE("suites") {
  TEST_CASE("registry") {
    const auto& names = suite_names();
    for (const char* expected :
         {"sum-prd", "prd-expansion", "stiefel-whitney", "family-decom", "splitting", "pq-m2",
          "group-algebra", "magique", "z-nq", "phi-witt", "pi-phi-products", "t-cocycle",
          "phi-trace-sign", "qnd-quat", "morita", "even-invariance", "beta-hat", "all"}) {
      CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    }
    CHECK(is_suite_name("magique"));
    CHECK_FALSE(is_suite_name("nonsense"));
  }

  TEST_CASE("unknown suite throws") {
    SuiteConfig cfg;
    CHECK_THROWS_AS(run_suite("nonsense", cfg), std::invalid_argument);
  }

  TEST_CASE("magique suite is clean") {
    SuiteConfig cfg;
    cfg.trials = 60;
    cfg.seed = 42;
    SuiteReport r = run_suite("magique", cfg);
    CHECK(r.passed());
    CHECK(r.attempted == 60);
  }

  TEST_CASE("reports are deterministic for a fixed seed") {
    SuiteConfig cfg;
    cfg.trials = 25;
    cfg.seed = 1234;
    std::string a = report_to_json(run_suite("z-nq", cfg));
    std::string b = report_to_json(run_suite("z-nq", cfg));
    CHECK(a == b);
  }

  TEST_CASE("phi-trace-sign determines a single sign") {
    SuiteConfig cfg;
    cfg.trials = 20;
    cfg.seed = 7;
    SuiteReport r = run_suite("phi-trace-sign", cfg);
    CHECK(r.passed());
    REQUIRE(r.notes.count("trace_form_sign") == 1);
    // the engineered decisive pairs pin the global sign
    CHECK(r.notes.at("trace_form_sign") == "+1");
  }

  TEST_CASE("infra checks") {
    SuiteConfig cfg;
    cfg.trials = 40;
    cfg.seed = 5;
    CHECK(run_infra_checks(cfg).passed());
  }

  TEST_CASE("custom coefficient pool") {
    SuiteConfig cfg;
    cfg.trials = 10;
    cfg.seed = 3;
    cfg.coeff_pool = {Int(1), Int(-1), Int(2)};
    CHECK(run_suite("sum-prd", cfg).passed());
  }
}

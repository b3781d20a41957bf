#include <doctest.h>

#include <chrono>

#include "deo/operators.hpp"
#include "deo/suite.hpp"

using namespace deo;

TEST_CASE("built-in corpus") {
  auto c = builtin_corpus();
  REQUIRE(c.size() == 6);
  CHECK(c[5].f.is_zero());
  CHECK(c[3].expr == "cos(t)");
}

TEST_CASE("default suite passes quickly") {
  auto start = std::chrono::steady_clock::now();
  SuiteReport r = run_suite(builtin_corpus());
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(r.passed());
  CHECK(secs < 60.0);
  CHECK(r.groups.size() == suite_group_names().size());
  for (const auto& g : r.groups) CHECK(g.pass > 0);
}

TEST_CASE("membership is reported, not asserted") {
  auto corpus = builtin_corpus();
  corpus.push_back(corpus_entry("exp(t)"));
  SuiteReport r = run_suite(corpus);
  CHECK(r.passed());
  REQUIRE(r.membership.back().report.has_value());
  CHECK_FALSE(r.membership.back().report->verdict);
}

TEST_CASE("serial and parallel corpus loops agree") {
  SuiteConfig cfg;
  cfg.n_max = 3;
  cfg.v_max = 3;
  SuiteReport a = run_suite(builtin_corpus(), cfg, kernels::Execution::Serial);
  SuiteReport b = run_suite(builtin_corpus(), cfg, kernels::Execution::Parallel);
  for (std::size_t i = 0; i < a.groups.size(); ++i) {
    CHECK(a.groups[i].pass == b.groups[i].pass);
    CHECK(a.groups[i].skip == b.groups[i].skip);
  }
}

TEST_CASE("a defective psi minus is caught") {
  testing::ScopedMutation m(testing::Mutation::FlipPsiMinusSelfTerm);
  SuiteReport r = run_suite(builtin_corpus());
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.group("a-minus")->ok());
  CHECK_FALSE(r.group("prop1")->ok());
  CHECK_FALSE(r.group("variant-agreement")->ok());
}

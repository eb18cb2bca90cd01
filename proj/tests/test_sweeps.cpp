#include "fh/sweeps.hpp"

#include <doctest.h>

#include <stdexcept>

using fh::SweepOptions;

TEST_CASE("every suite passes on small ranges") {
  SweepOptions o;
  o.m_max = 10;
  o.random_cases = 200;
  o.q_max = 5;
  for (auto name : fh::sweep_names()) {
    CAPTURE(name);
    auto r = fh::run_sweep(name, o);
    CHECK(r.suite == name);
    CHECK(r.passed);
    CHECK_FALSE(r.counterexample);
    CHECK(r.checks > 0);
    CHECK_FALSE(r.lines.empty());
  }
}

TEST_CASE("counts2q reports one line per q") {
  SweepOptions o;
  o.q_max = 6;
  auto r = fh::run_sweep("counts2q", o);
  REQUIRE(r.lines.size() == 6);
  CHECK(r.lines[4] == "q=5: |V|=5 |E|=3 (expected 5, 3)");
}

TEST_CASE("disjoint for a single m") {
  SweepOptions o;
  o.m = 12;
  o.n_values = {2, 3};
  auto r = fh::run_sweep("disjoint", o);
  CHECK(r.passed);
  CHECK(r.checks == 1);
  CHECK(r.lines == std::vector<std::string>{"m=12 n=2,3: disjoint"});
  o.n_values = {2};
  CHECK_THROWS_AS(fh::run_sweep("disjoint", o), std::invalid_argument);
  o.n_values = {2, 13};
  CHECK_THROWS_AS(fh::run_sweep("disjoint", o), std::invalid_argument);
}

TEST_CASE("reports do not depend on thread count") {
  SweepOptions a, b;
  a.m_max = b.m_max = 14;
  a.threads = 1;
  b.threads = 4;
  for (auto name : {"oracle2", "oracle3", "scaling"}) {
    auto ra = fh::run_sweep(name, a), rb = fh::run_sweep(name, b);
    CHECK(ra.lines == rb.lines);
    CHECK(ra.checks == rb.checks);
  }
}

TEST_CASE("p-adic sweep is reproducible from its seed") {
  SweepOptions o;
  o.m_max = 6;
  o.random_cases = 500;
  o.seed = 99;
  CHECK(fh::run_sweep("compprop", o).lines == fh::run_sweep("compprop", o).lines);
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(fh::run_sweep("nope"), std::invalid_argument); }

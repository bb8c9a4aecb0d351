#include <doctest.h>

#include <stdexcept>

#include "ldlat/verify.hpp"

using namespace ldlat;

TEST_CASE("suite names") {
  CHECK(verify::expand_suite("all") == verify::suite_names());
  CHECK(verify::expand_suite("t1") == std::vector<std::string>{"t1"});
  CHECK_THROWS_AS(verify::expand_suite("nope"), std::invalid_argument);
}

TEST_CASE("small runs pass") {
  verify::Options o;
  o.max_nodes = 6;
  for (const auto& name : verify::suite_names()) {
    CAPTURE(name);
    const auto r = verify::run_suite(name, o);
    CHECK(r.suite == name);
    CHECK(r.instances > 0);
    CHECK(r.passed());
    CHECK_FALSE(r.counterexample.has_value());
  }
}

TEST_CASE("parallel runs match serial runs") {
  verify::Options serial;
  serial.max_nodes = 7;
  auto parallel = serial;
  parallel.jobs = 4;
  for (const auto& name : verify::suite_names()) {
    CAPTURE(name);
    const auto a = verify::run_suite(name, serial);
    const auto b = verify::run_suite(name, parallel);
    CHECK(a.instances == b.instances);
    CHECK(a.violations == b.violations);
  }
}

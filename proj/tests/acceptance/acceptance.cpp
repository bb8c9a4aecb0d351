// One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ldlat/blocks.hpp"
#include "ldlat/dsl.hpp"
#include "ldlat/treeiso.hpp"
#include "ldlat/verify.hpp"
#include "ldlat/zdg.hpp"

using namespace ldlat;

namespace {

using Clock = std::chrono::steady_clock;
using Sets = std::set<std::vector<std::string>>;

struct Outcome {
  bool ok = false;
  std::string detail;
};

Lattice load(const std::string& name) {
  std::ifstream in(std::string(LDLAT_TEST_DATA_DIR) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return dsl::elaborate(dsl::parse(buf.str()));
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ",") + x;
  return out;
}

Outcome from_suite(const std::string& name, std::size_t max_nodes, std::size_t root_min_children = 0) {
  verify::Options o;
  o.max_nodes = max_nodes;
  o.root_min_children = root_min_children;
  const auto r = verify::run_suite(name, o);
  Outcome out{r.passed(), name + ": " + std::to_string(r.instances) + " instances, " +
                              std::to_string(r.violations) + " violations"};
  if (r.counterexample) {
    const auto path = "counterexample-" + name + ".adl";
    std::ofstream(path) << *r.counterexample;
    out.detail += ", counterexample written to " + path;
  }
  return out;
}

Outcome example_ex2() {
  const auto l = load("ex2.adl");
  std::vector<std::string> adjunct;
  for (auto x : classify(l).adjunct_elements) adjunct.push_back(l.label(x));
  std::sort(adjunct.begin(), adjunct.end());
  const auto tree_classes = peel_order(tree_of_lattice(l)).as_sets();
  const Sets expected_classes{{"a1", "a7"}, {"a2"}, {"a3"}, {"a4"}, {"a5"}, {"a6"}, {"a8"}};
  const auto g = zero_divisor_graph(l);
  const std::set<std::string> vertices(g.labels().begin(), g.labels().end());
  const std::set<std::string> expected_vertices{"a1", "a2", "a3", "a4", "a5", "a6", "a7"};
  const bool ok = adjunct == std::vector<std::string>{"a5", "a6", "a8"} && tree_classes == expected_classes &&
                  vertices == expected_vertices;
  return {ok, "adjunct {" + join(adjunct) + "}, " + std::to_string(tree_classes.size()) + " tree classes, " +
                  std::to_string(g.size()) + " zdg vertices"};
}

Outcome example_block18() {
  const auto l = load("block18.adl");
  const auto b = basic_block(l);
  const bool idempotent = same_labeled(basic_block(b), b);
  std::vector<std::string> labels(b.labels().begin(), b.labels().end());
  std::sort(labels.begin(), labels.end());
  const std::vector<std::string> expected{"0", "a", "a1", "a5", "a6", "a9", "x", "x1", "x2"};
  return {labels == expected && idempotent,
          std::to_string(l.size()) + " elements -> block of " + std::to_string(b.size()) + " {" + join(labels) +
              "}, idempotent " + (idempotent ? "yes" : "no")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<Outcome()> run;
    double limit_seconds;
  };
  const std::vector<Criterion> criteria{
      {1, "ex2 golden", example_ex2, 1.0},
      {2, "18-element basic block", example_block18, 0},
      {3, "zdg isomorphism decides lattice isomorphism, |L| <= 9", [] { return from_suite("t1", 8, 2); }, 300.0},
      {4, "non-ancestor graph isomorphism vs canonical codes, trees <= 7",
       [] { return from_suite("corollary", 7); }, 0},
      {5, "connected with diameter <= 3, |L| <= 10", [] { return from_suite("diam", 9); }, 0},
      {6, "meets to 0 iff incomparable, |V| = |L| - 2, |L| <= 10", [] { return from_suite("lemma400", 9); }, 0},
      {7, "complete multipartite round trip", [] { return from_suite("thm704", 0); }, 0},
      {8, "SSC equivalences, |L| <= 10", [] { return from_suite("ssc", 9, 2); }, 0},
      {9, "align and lift on every graph isomorphism, |L| <= 9", [] { return from_suite("lift", 8, 2); }, 0},
      {10, "basic block confluence, |L| <= 9", [] { return from_suite("block-confluence", 8); }, 0},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    bool ok = o.ok;
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      ok = false;
      o.detail += ", over the time limit";
    }
    all = all && ok;
    std::printf("criterion %2d %s  %s (%s; %.3f s)\n", c.id, ok ? "PASS" : "FAIL", c.title.c_str(),
                o.detail.c_str(), seconds);
  }
  return all ? 0 : 1;
}

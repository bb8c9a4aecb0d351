#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ldlat/io.hpp"
#include "ldlat/relabel.hpp"
#include "ldlat/zdg.hpp"

using namespace ldlat;
using nlohmann::json;

namespace {

ErrorCode read_error(const std::string& text) {
  try {
    io::graph_from_json(json::parse(text));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("graph json") {
  const auto g = zero_divisor_graph(testing::load("m2.adl"));
  CHECK(io::graph_to_json(g).dump() == R"({"edges":[["a","b"]],"vertices":["a","b"]})");
  const auto z = zero_divisor_graph(testing::load("ex2.adl"));
  std::mt19937_64 rng(8);
  LabelMap same;
  for (const auto& x : z.labels()) same[x] = x;
  CHECK(io::graph_to_json(relabeled(z, same, rng)) == io::graph_to_json(z));
  CHECK(same_labeled(io::graph_from_json(io::graph_to_json(z)), z));
  CHECK(io::graph_from_json(json::parse(testing::slurp("c4.json"))).edge_count() == 4);
}

TEST_CASE("graph json errors") {
  CHECK(read_error(R"({"vertices":["a"],"edges":[["a","b"]]})") == ErrorCode::InvalidGraph);
  CHECK(read_error(R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]]})") == ErrorCode::InvalidGraph);
  CHECK(read_error(R"({"vertices":["a","b"],"edges":[["a","a"]]})") == ErrorCode::InvalidGraph);
  CHECK(read_error(R"({"vertices":["a","a"],"edges":[]})") == ErrorCode::DuplicateElement);
  CHECK(read_error(R"({"edges":[]})") == ErrorCode::InvalidGraph);
  CHECK(read_error(R"([1,2])") == ErrorCode::InvalidGraph);
}

TEST_CASE("dot output") {
  const auto g = zero_divisor_graph(testing::load("m2.adl"));
  const auto dot = io::graph_to_dot(g, "m2");
  CHECK(dot.rfind("graph \"m2\" {", 0) == 0);
  CHECK(dot.find("\"a\" -- \"b\";") != std::string::npos);
  const auto hasse = io::lattice_to_dot(testing::load("m2.adl"), "m2");
  CHECK(hasse.rfind("digraph \"m2\" {", 0) == 0);
  CHECK(hasse.find("rankdir=BT") != std::string::npos);
  CHECK(hasse.find("\"0\" -> \"a\";") != std::string::npos);
  CHECK(io::lattice_to_dot(testing::load("m2.adl"), "m2") == hasse);
}

TEST_CASE("witness json") {
  const IsoWitness w{IsoWitness::Kind::LatticeIso, {{"0", "0"}, {"a", "b"}}};
  const auto doc = io::witness_to_json(w);
  CHECK(doc["kind"] == "lattice-iso");
  CHECK(io::witness_from_json(doc) == w);
  CHECK_THROWS_AS(io::witness_from_json(json::parse(R"({"kind":"other","map":{}})")), Error);
}

TEST_CASE("relabeling") {
  const auto l = testing::load("ex2.adl");
  std::mt19937_64 rng(9);
  const auto map = random_relabeling(l.labels(), rng, "z");
  std::set<std::string> images;
  for (const auto& [from, to] : map) images.insert(to);
  CHECK(images.size() == l.size());
  CHECK(images.count("z1") == 1);
  const auto r = relabeled(l, map, rng);
  for (const auto& [a, b] : l.cover_label_pairs()) CHECK(r.covers(r.at(map.at(a)), r.at(map.at(b))));
  CHECK_THROWS_AS(relabeled(l, LabelMap{}, rng), Error);
}

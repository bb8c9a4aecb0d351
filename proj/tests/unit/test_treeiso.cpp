#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ldlat/blocks.hpp"
#include "ldlat/io.hpp"
#include "ldlat/oracle.hpp"
#include "ldlat/relabel.hpp"
#include "ldlat/treeiso.hpp"
#include "ldlat/zdg.hpp"

using namespace ldlat;

namespace {

std::map<std::string, std::string> parent_map(const RootedTree& t) {
  std::map<std::string, std::string> out;
  for (Node v = 0; v < t.size(); ++v) out[t.label(v)] = t.label(t.parent(v));
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalInconsistency;
}

LabeledGraph graph_file(const std::string& name) { return io::graph_from_json(nlohmann::json::parse(testing::slurp(name))); }

std::vector<Lattice> class_population(std::size_t max_nodes) {
  oracle::EnumerationFilter f;
  f.max_nodes = max_nodes;
  f.require_root_degree_ge2 = true;
  return oracle::enumerate_lower_dismantlable(f);
}

IsoWitness identity(const LabeledGraph& g) {
  IsoWitness w;
  for (const auto& l : g.labels()) w.map[l] = l;
  return w;
}

}  // namespace

TEST_CASE("tree of a lattice") {
  SUBCASE("ex2") {
    const auto t = tree_of_lattice(testing::load("ex2.adl"));
    CHECK(t.label(t.root()) == "one");
    CHECK(parent_map(t) == std::map<std::string, std::string>{{"one", "one"},
                                                              {"a8", "one"},
                                                              {"a5", "a8"},
                                                              {"a6", "a8"},
                                                              {"a2", "a6"},
                                                              {"a7", "a6"},
                                                              {"a1", "a7"},
                                                              {"a3", "a5"},
                                                              {"a4", "a5"}});
    CHECK_FALSE(t.root_has_two_branches());
  }
  SUBCASE("diamond is a star") {
    const auto t = tree_of_lattice(testing::load("m2.adl"));
    CHECK(parent_map(t) == std::map<std::string, std::string>{{"one", "one"}, {"a", "one"}, {"b", "one"}});
    CHECK(t.root_has_two_branches());
  }
  SUBCASE("three-element chain") {
    const auto t = tree_of_lattice(Lattice::chain({"0", "c", "1"}));
    CHECK(parent_map(t) == std::map<std::string, std::string>{{"1", "1"}, {"c", "1"}});
  }
  SUBCASE("not lower dismantlable") {
    CHECK(code_of([] { tree_of_lattice(testing::load("not_ld.adl")); }) == ErrorCode::NotLowerDismantlable);
  }
}

TEST_CASE("lattice of a tree") {
  SUBCASE("ex2 round trip") {
    const auto ex2 = testing::load("ex2.adl");
    CHECK(same_labeled(lattice_of_tree(tree_of_lattice(ex2)), ex2));
  }
  SUBCASE("single node") {
    const RootedTree t({"r"}, {0});
    const auto l = lattice_of_tree(t);
    CHECK(l.size() == 2);
    CHECK(l.is_chain());
  }
  SUBCASE("star with k leaves") {
    for (Node k = 2; k <= 6; ++k) {
      std::vector<std::string> labels{"r"};
      std::vector<Node> parent{0};
      for (Node i = 1; i <= k; ++i) {
        labels.push_back("s" + std::to_string(i));
        parent.push_back(0);
      }
      const auto l = lattice_of_tree(RootedTree(labels, parent));
      const auto c = classify(l);
      CHECK(c.atoms.size() == k);
      REQUIRE(c.adjunct_elements.size() == 1);
      CHECK(l.lower_covers(c.adjunct_elements[0]).size() - 1 == k - 1);
      const auto e = adjunct_representation(l);
      CHECK(e.adjunctions.size() == k - 1);
    }
  }
  SUBCASE("label clash") {
    CHECK(code_of([] { lattice_of_tree(RootedTree({"r", "0"}, {0, 0})); }) == ErrorCode::LabelClash);
  }
  SUBCASE("round trips on enumerated trees") {
    oracle::EnumerationFilter f;
    f.max_nodes = 8;
    for (const auto& t : oracle::enumerate_rooted_trees(f)) {
      const auto l = lattice_of_tree(t);
      CHECK(is_lower_dismantlable(l));
      CHECK(parent_map(tree_of_lattice(l)) == parent_map(t));
    }
  }
}

TEST_CASE("non-ancestor graph") {
  SUBCASE("ex2 tree") {
    const auto ex2 = testing::load("ex2.adl");
    const auto g = non_ancestor_graph(tree_of_lattice(ex2));
    CHECK(g.size() == 8);
    CHECK(g.degree(g.at("a8")) == 0);
    Bitset keep(g.size());
    keep.set();
    keep.reset(g.at("a8"));
    CHECK(same_labeled(g.induced(keep), zero_divisor_graph(ex2)));
  }
  SUBCASE("path is edgeless") {
    const auto g = non_ancestor_graph(RootedTree({"r", "a", "b", "c"}, {0, 0, 1, 2}));
    CHECK(g.size() == 3);
    CHECK(g.edge_count() == 0);
  }
  SUBCASE("star with two leaves is K2") {
    const auto g = non_ancestor_graph(RootedTree({"r", "a", "b"}, {0, 0, 0}));
    CHECK(g.label_edges() == std::vector<LabelPair>{{"a", "b"}});
  }
  SUBCASE("agrees with the zero-divisor graph") {
    oracle::EnumerationFilter f;
    f.max_nodes = 8;
    for (const auto& l : oracle::enumerate_lower_dismantlable(f)) {
      const auto t = tree_of_lattice(l);
      const auto g = non_ancestor_graph(t);
      const auto z = zero_divisor_graph(l);
      if (t.root_has_two_branches()) {
        CHECK(same_labeled(g, z));
        continue;
      }
      // The extra vertices are exactly the elements comparable with all.
      Bitset keep(g.size());
      for (Vertex v = 0; v < g.size(); ++v) {
        const bool on_spine = g.degree(v) == 0 && l.up_set(l.at(g.label(v))).count() +
                                                          l.down_set(l.at(g.label(v))).count() ==
                                                      l.size() + 1;
        if (!on_spine) keep.set(v);
      }
      CHECK(same_labeled(g.induced(keep), z));
    }
  }
  SUBCASE("ancestors have smaller neighbourhoods") {
    oracle::EnumerationFilter f;
    f.max_nodes = 8;
    for (const auto& t : oracle::enumerate_rooted_trees(f)) {
      const auto g = non_ancestor_graph(t);
      for (Node u = 0; u < t.size(); ++u) {
        for (Node v = 0; v < t.size(); ++v) {
          if (u == t.root() || v == t.root() || !t.is_ancestor(u, v)) continue;
          CHECK(g.neighbors(g.at(t.label(u))).is_subset_of(g.neighbors(g.at(t.label(v)))));
        }
      }
    }
  }
}

TEST_CASE("recognition") {
  SUBCASE("ex2 graph") {
    const auto z = zero_divisor_graph(testing::load("ex2.adl"));
    const auto t = recognize(z);
    REQUIRE(t.has_value());
    CHECK(t->label(t->root()) == std::string(kSyntheticRoot));
    CHECK(same_labeled(non_ancestor_graph(*t), z));
    CHECK(t->size() == 8);
  }
  SUBCASE("4-cycle") {
    const auto t = recognize(graph_file("c4.json"));
    REQUIRE(t.has_value());
    CHECK(t->children(t->root()).size() == 2);
    CHECK(canonical_code(*t).code == "((())(()))");
    const auto l = lattice_of_tree(*t);
    CHECK(complete_multipartite_parts(zero_divisor_graph(l)) == std::vector<std::size_t>{2, 2});
  }
  SUBCASE("5-cycle") {
    const auto c5 = graph_file("c5.json");
    CHECK_FALSE(recognize(c5).has_value());
    // No tree on six nodes has the 5-cycle as its non-ancestor graph.
    oracle::EnumerationFilter f;
    f.max_nodes = 6;
    f.min_nodes = 6;
    for (const auto& t : oracle::enumerate_rooted_trees(f)) {
      CHECK_FALSE(oracle::brute_graph_iso(non_ancestor_graph(t), c5).has_value());
    }
  }
  SUBCASE("empty graph") {
    const auto t = recognize(LabeledGraph{});
    REQUIRE(t.has_value());
    CHECK(t->size() == 1);
  }
  SUBCASE("reserved label") {
    const LabeledGraph g({std::string(kSyntheticRoot), "a"});
    CHECK(code_of([&] { recognize(g); }) == ErrorCode::LabelClash);
  }
  SUBCASE("round trip on enumerated trees, up to isomorphism") {
    oracle::EnumerationFilter f;
    f.max_nodes = 8;
    std::mt19937_64 rng(3);
    for (const auto& t : oracle::enumerate_rooted_trees(f)) {
      const auto g = non_ancestor_graph(t);
      const auto shuffled = relabeled(g, random_relabeling(g.labels(), rng), rng);
      const auto back = recognize(shuffled);
      REQUIRE(back.has_value());
      CHECK(same_labeled(non_ancestor_graph(*back), shuffled));
      CHECK(canonical_code(*back) == canonical_code(t));
    }
  }
  SUBCASE("graphs outside the class") {
    // Two disjoint edges and the path on four vertices.
    CHECK_FALSE(recognize(LabeledGraph::from_edges({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}})).has_value());
    CHECK_FALSE(
        recognize(LabeledGraph::from_edges({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}})).has_value());
  }
}

TEST_CASE("canonical codes") {
  CHECK(canonical_code(RootedTree({"r"}, {0})).code == "()");
  CHECK(canonical_code(RootedTree({"r", "a", "b"}, {0, 0, 0})).code == "(()())");
  const auto t = tree_of_lattice(testing::load("ex2.adl"));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5; ++i) {
    const auto l = relabeled(testing::load("ex2.adl"), random_relabeling(testing::load("ex2.adl").labels(), rng, "q"), rng);
    CHECK(canonical_code(tree_of_lattice(l)) == canonical_code(t));
  }
  SUBCASE("tree isomorphisms map children to children") {
    oracle::EnumerationFilter f;
    f.max_nodes = 7;
    for (const auto& a : oracle::enumerate_rooted_trees(f)) {
      auto map = tree_isomorphism(a, oracle::tree_from_code(canonical_code(a).code));
      REQUIRE(map.has_value());
      const auto b = oracle::tree_from_code(canonical_code(a).code);
      for (Node v = 0; v < a.size(); ++v) CHECK((*map)[a.parent(v)] == b.parent((*map)[v]));
    }
  }
}

TEST_CASE("isomorphism decision") {
  const auto z = zero_divisor_graph(testing::load("ex2.adl"));
  std::mt19937_64 rng(5);
  CHECK(iso_decide(z, relabeled(z, random_relabeling(z.labels(), rng), rng)));
  CHECK_FALSE(iso_decide(zero_divisor_graph(testing::load("p22.adl")), zero_divisor_graph(testing::load("p31.adl"))));

  SUBCASE("equal degree sequences, different trees") {
    // root-a-{b,c}, root-d   vs   root-a-b, root-c-d
    const RootedTree t1({"r", "a", "b", "c", "d"}, {0, 0, 1, 1, 0});
    const RootedTree t2({"r", "a", "b", "c", "d"}, {0, 0, 1, 0, 3});
    const auto g1 = non_ancestor_graph(t1);
    const auto g2 = non_ancestor_graph(t2);
    CHECK_FALSE(iso_decide(g1, g2));
    CHECK_FALSE(oracle::brute_graph_iso(g1, g2).has_value());
  }
  SUBCASE("inputs outside the class") {
    const auto c5 = graph_file("c5.json");
    try {
      iso_decide(z, c5);
      FAIL("expected NotInClass");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotInClass);
      CHECK(std::string(e.what()).find("second") != std::string::npos);
    }
    CHECK(code_of([&] { iso_decide(c5, z); }) == ErrorCode::NotInClass);
  }
  SUBCASE("agrees with brute force on enumerated lattices") {
    const auto lattices = class_population(6);
    for (std::size_t i = 0; i < lattices.size(); ++i) {
      for (std::size_t j = 0; j < lattices.size(); ++j) {
        const auto gi = zero_divisor_graph(lattices[i]);
        const auto gj = zero_divisor_graph(lattices[j]);
        CHECK(iso_decide(gi, gj) == oracle::brute_lattice_iso(lattices[i], lattices[j]).has_value());
        CHECK(iso_decide(gi, gj) == oracle::brute_graph_iso(gi, gj).has_value());
      }
    }
  }
}

TEST_CASE("adjunct realignment") {
  SUBCASE("an aligned map is returned unchanged") {
    const auto l = testing::load("k22.adl");
    const auto g = zero_divisor_graph(l);
    const auto trace = align_adjuncts_traced(l, l, identity(g));
    CHECK(trace.phi == identity(g));
    CHECK(trace.mismatch_counts == std::vector<std::size_t>{0});
  }
  SUBCASE("one swap inside a class") {
    // The class {p, q} has the adjunct p at its bottom; f swaps p and q.
    const auto l = testing::from_source("lattice t { chain 0 c p q one; adjoin (0, one): r; adjoin (0, p): d; }");
    const auto g = zero_divisor_graph(l);
    auto f = identity(g);
    CHECK(neighborhood_classes(g).as_sets().count({"p", "q"}) == 1);
    std::swap(f.map["p"], f.map["q"]);
    const auto trace = align_adjuncts_traced(l, l, f);
    CHECK(trace.phi == identity(g));
    CHECK(trace.mismatch_counts == std::vector<std::size_t>{2, 0});
  }
  SUBCASE("guards") {
    const auto ex2 = testing::load("ex2.adl");
    const auto g = zero_divisor_graph(ex2);
    CHECK(code_of([&] { align_adjuncts(ex2, ex2, identity(g)); }) == ErrorCode::HypothesisViolated);

    // A graph automorphism need not respect the class flags only if it is
    // not one; a non-isomorphism is rejected at entry.
    const auto l = testing::load("k22.adl");
    auto bad = identity(zero_divisor_graph(l));
    bad.map["v"] = "x";
    CHECK(code_of([&] { align_adjuncts(l, l, bad); }) == ErrorCode::HypothesisViolated);
  }
  SUBCASE("postconditions for every graph isomorphism") {
    for (const auto& l : class_population(6)) {
      const auto g = zero_divisor_graph(l);
      const auto classes = neighborhood_classes(g);
      oracle::for_each_graph_isomorphism(g, g, [&](const IsoWitness& f) {
        const auto trace = align_adjuncts_traced(l, l, f);
        for (const auto& [from, to] : trace.phi.map) {
          CHECK(is_adjunct_element(l, l.at(from)) == is_adjunct_element(l, l.at(to)));
        }
        for (const auto& c : classes.classes) {
          std::set<std::string> a, b;
          for (const auto& m : c.members) {
            a.insert(f(m));
            b.insert(trace.phi(m));
          }
          CHECK(a == b);
        }
        for (std::size_t i = 1; i < trace.mismatch_counts.size(); ++i) {
          CHECK(trace.mismatch_counts[i] < trace.mismatch_counts[i - 1]);
        }
        CHECK(trace.mismatch_counts.back() == 0);
        return true;
      });
    }
  }
}

TEST_CASE("lifting to a lattice isomorphism") {
  SUBCASE("atom permutations of M3") {
    const auto m3 = testing::load("m3.adl");
    IsoWitness phi{IsoWitness::Kind::GraphIso, {{"a", "c"}, {"b", "a"}, {"c", "b"}}};
    const auto psi = lift_to_lattice_iso(m3, m3, phi);
    CHECK(psi.kind == IsoWitness::Kind::LatticeIso);
    CHECK(psi.map == std::map<std::string, std::string>{
                         {"0", "0"}, {"a", "c"}, {"b", "a"}, {"c", "b"}, {"one", "one"}});
    CHECK(is_lattice_isomorphism(m3, m3, psi));
  }
  SUBCASE("two labelings of two 2-chains") {
    const auto l1 = testing::load("k22.adl");
    const auto l2 = testing::load("k22_relabeled.adl");
    const auto f = oracle::brute_graph_iso(zero_divisor_graph(l1), zero_divisor_graph(l2));
    REQUIRE(f.has_value());
    const auto psi = lift_to_lattice_iso(l1, l2, align_adjuncts(l1, l2, *f));
    CHECK(is_lattice_isomorphism(l1, l2, psi));
    // psi is one of the isomorphisms the brute-force search enumerates.
    bool listed = false;
    oracle::for_each_lattice_isomorphism(l1, l2, [&](const IsoWitness& w) {
      listed = listed || w.map == psi.map;
      return true;
    });
    CHECK(listed);
  }
  SUBCASE("hypotheses") {
    const auto l = testing::from_source("lattice t { chain 0 c p q one; adjoin (0, one): r; adjoin (0, p): d; }");
    const auto g = zero_divisor_graph(l);
    auto f = identity(g);
    std::swap(f.map["p"], f.map["q"]);
    CHECK(code_of([&] { lift_to_lattice_iso(l, l, f); }) == ErrorCode::HypothesisViolated);
  }
  SUBCASE("every isomorphism of every enumerated lattice lifts") {
    std::mt19937_64 rng(17);
    for (const auto& l1 : class_population(6)) {
      const auto l2 = relabeled(l1, random_relabeling(l1.labels(), rng), rng);
      const auto g1 = zero_divisor_graph(l1);
      oracle::for_each_graph_isomorphism(g1, zero_divisor_graph(l2), [&](const IsoWitness& f) {
        const auto phi = align_adjuncts(l1, l2, f);
        const auto psi = lift_to_lattice_iso(l1, l2, phi);
        CHECK(is_lattice_isomorphism(l1, l2, psi));
        for (const auto& [from, to] : phi.map) {
          if (is_adjunct_element(l1, l1.at(from))) CHECK(psi(from) == to);
        }
        return true;
      });
    }
  }
}

TEST_CASE("witness checks") {
  const auto l = testing::load("m2.adl");
  IsoWitness good{IsoWitness::Kind::LatticeIso, {{"0", "0"}, {"a", "b"}, {"b", "a"}, {"one", "one"}}};
  CHECK(is_lattice_isomorphism(l, l, good));
  IsoWitness bad{IsoWitness::Kind::LatticeIso, {{"0", "a"}, {"a", "0"}, {"b", "b"}, {"one", "one"}}};
  CHECK_FALSE(is_lattice_isomorphism(l, l, bad));
  IsoWitness partial{IsoWitness::Kind::LatticeIso, {{"0", "0"}}};
  CHECK_FALSE(is_lattice_isomorphism(l, l, partial));
  const auto g = zero_divisor_graph(l);
  CHECK(is_graph_isomorphism(g, g, IsoWitness{IsoWitness::Kind::GraphIso, {{"a", "b"}, {"b", "a"}}}));
  CHECK_FALSE(is_graph_isomorphism(g, g, IsoWitness{IsoWitness::Kind::GraphIso, {{"a", "a"}, {"b", "a"}}}));
}

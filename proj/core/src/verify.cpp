#include "ldlat/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "ldlat/blocks.hpp"
#include "ldlat/dsl.hpp"
#include "ldlat/oracle.hpp"
#include "ldlat/relabel.hpp"
#include "ldlat/treeiso.hpp"
#include "ldlat/zdg.hpp"

namespace ldlat::verify {

namespace {

using Check = std::function<std::optional<std::string>(std::size_t)>;

std::string adl(const Lattice& l, const std::string& name = "L") {
  try {
    return dsl::serialize(adjunct_representation(l, name));
  } catch (const Error&) {
    std::string out = "# covers of " + name + "\n";
    for (const auto& [a, b] : l.cover_label_pairs()) out += "#   " + a + " < " + b + "\n";
    return out;
  }
}

std::string comment(const std::string& what) { return "# " + what + "\n"; }

/// Runs check(i) for i < count on `jobs` threads; reports the number of
/// failures and the message of the lowest failing index.
SuiteResult run_parallel(std::string suite, std::size_t count, unsigned jobs, const Check& check) {
  SuiteResult result{std::move(suite), count, 0, std::nullopt};
  std::mutex mu;
  std::optional<std::size_t> first;
  auto worker = [&](unsigned w) {
    for (std::size_t i = w; i < count; i += jobs) {
      std::optional<std::string> failure;
      try {
        failure = check(i);
      } catch (const std::exception& e) {
        failure = comment(std::string("exception: ") + e.what());
      }
      if (!failure) continue;
      std::lock_guard lock(mu);
      ++result.violations;
      if (!first || i < *first) {
        first = i;
        result.counterexample = std::move(failure);
      }
    }
  };
  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker, w);
  worker(0);
  for (auto& t : pool) t.join();
  return result;
}

std::vector<Lattice> population(const Options& options, std::size_t min_root_children) {
  oracle::EnumerationFilter filter;
  filter.max_nodes = options.max_nodes;
  const auto need = std::max(options.root_min_children, min_root_children);
  filter.require_root_degree_ge2 = need >= 2;
  std::vector<Lattice> out;
  for (const auto& t : oracle::enumerate_rooted_trees(filter)) {
    if (t.children(t.root()).size() >= need) out.push_back(lattice_of_tree(t));
  }
  return out;
}

std::mt19937_64 rng_for(const Options& options, std::size_t i, std::size_t j = 0) {
  std::seed_seq seq{options.seed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j)};
  return std::mt19937_64(seq);
}

Lattice shuffled(const Lattice& l, std::mt19937_64& rng) {
  return relabeled(l, random_relabeling(l.labels(), rng), rng);
}

std::set<std::string> image_of(const IsoWitness& f, const std::vector<std::string>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(f(x));
  return out;
}

std::optional<std::string> check_one_lift(const Lattice& l1, const Lattice& l2, const IsoWitness& f) {
  const auto g1 = zero_divisor_graph(l1);
  const auto g2 = zero_divisor_graph(l2);
  const auto classes = neighborhood_classes(g1);
  const auto trace = align_adjuncts_traced(l1, l2, f);
  const auto& phi = trace.phi;

  if (!is_graph_isomorphism(g1, g2, phi)) return "aligned map is not a graph isomorphism";
  for (const auto& [from, to] : phi.map) {
    if (is_adjunct_element(l1, l1.at(from)) != is_adjunct_element(l2, l2.at(to))) {
      return "aligned map is not adjunct-preserving at " + from;
    }
  }
  for (const auto& c : classes.classes) {
    if (image_of(phi, c.members) != image_of(f, c.members)) return "aligned map moves class of " + c.members[0];
  }
  const auto& counts = trace.mismatch_counts;
  if (counts.empty() || counts.back() != 0) return std::string("realignment did not finish");
  for (std::size_t i = 1; i < counts.size(); ++i) {
    if (counts[i] >= counts[i - 1]) return std::string("mismatch count did not decrease");
  }

  const auto psi = lift_to_lattice_iso(l1, l2, phi);
  if (!is_lattice_isomorphism(l1, l2, psi)) return "lift is not an order isomorphism";
  if (psi(l1.label(l1.bottom())) != l2.label(l2.bottom()) || psi(l1.label(l1.top())) != l2.label(l2.top())) {
    return std::string("lift moves a bound");
  }
  for (const auto& [from, to] : phi.map) {
    if (is_adjunct_element(l1, l1.at(from)) && psi(from) != to) return "lift disagrees with phi at " + from;
  }
  for (const auto& c : classes.classes) {
    if (image_of(psi, c.members) != image_of(phi, c.members)) return "lift moves class of " + c.members[0];
  }
  return std::nullopt;
}

std::string describe(const IsoWitness& f) {
  std::string out;
  for (const auto& [a, b] : f.map) out += (out.empty() ? "" : ", ") + a + "->" + b;
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"t1",       "lift",   "corollary", "diam",
                                              "lemma400", "thm704", "ssc",       "block-confluence"};
  return names;
}

std::vector<std::string> expand_suite(const std::string& name) {
  if (name == "all") return suite_names();
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  return {name};
}

SuiteResult run_suite(const std::string& name, const Options& options) {
  static const std::map<std::string, SuiteResult (*)(const Options&)> table{
      {"t1", check_t1},         {"lift", check_lift},     {"corollary", check_corollary},
      {"diam", check_diam},     {"lemma400", check_lemma400}, {"thm704", check_thm704},
      {"ssc", check_ssc},       {"block-confluence", check_block_confluence}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second(options);
}

SuiteResult check_t1(const Options& options) {
  const auto lattices = population(options, 2);
  std::vector<LabeledGraph> graphs;
  for (const auto& l : lattices) graphs.push_back(zero_divisor_graph(l));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    for (std::size_t j = i; j < lattices.size(); ++j) pairs.emplace_back(i, j);
  }
  return run_parallel("t1", pairs.size(), options.jobs, [&](std::size_t k) -> std::optional<std::string> {
    const auto [i, j] = pairs[k];
    auto rng = rng_for(options, i, j);
    const auto other = shuffled(lattices[j], rng);
    const bool decided = iso_decide(graphs[i], zero_divisor_graph(other));
    const bool brute = oracle::brute_lattice_iso(lattices[i], other).has_value();
    if (decided == brute) return std::nullopt;
    return comment(std::string("iso_decide says ") + (decided ? "isomorphic" : "not isomorphic") +
                   ", brute force disagrees") +
           adl(lattices[i], "A") + adl(other, "B");
  });
}

SuiteResult check_lift(const Options& options) {
  const auto lattices = population(options, 2);
  std::vector<std::pair<std::size_t, bool>> jobs;
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    jobs.emplace_back(i, false);
    jobs.emplace_back(i, true);
  }
  std::mutex mu;
  std::size_t maps = 0;
  auto result = run_parallel("lift", jobs.size(), options.jobs, [&](std::size_t k) -> std::optional<std::string> {
    const auto [i, copy] = jobs[k];
    const auto& l1 = lattices[i];
    auto rng = rng_for(options, i);
    const Lattice l2 = copy ? shuffled(l1, rng) : l1;
    std::optional<std::string> failure;
    std::size_t seen = 0;
    oracle::for_each_graph_isomorphism(zero_divisor_graph(l1), zero_divisor_graph(l2), [&](const IsoWitness& f) {
      ++seen;
      std::optional<std::string> why;
      try {
        why = check_one_lift(l1, l2, f);
      } catch (const std::exception& e) {
        why = e.what();
      }
      if (why) failure = comment(*why + " for f = " + describe(f)) + adl(l1, "A") + adl(l2, "B");
      return !failure;
    });
    {
      std::lock_guard lock(mu);
      maps += seen;
    }
    if (seen == 0) return comment("no graph isomorphism found") + adl(l1, "A") + adl(l2, "B");
    return failure;
  });
  result.instances = maps;
  return result;
}

SuiteResult check_corollary(const Options& options) {
  oracle::EnumerationFilter filter;
  filter.max_nodes = options.max_nodes;
  std::vector<RootedTree> trees;
  for (auto& t : oracle::enumerate_rooted_trees(filter)) {
    if (t.children(t.root()).size() >= options.root_min_children) trees.push_back(std::move(t));
  }
  std::vector<std::string> codes;
  std::vector<LabeledGraph> graphs;
  for (const auto& t : trees) {
    codes.push_back(canonical_code(t).code);
    graphs.push_back(non_ancestor_graph(t));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i; j < trees.size(); ++j) pairs.emplace_back(i, j);
  }
  return run_parallel("corollary", pairs.size(), options.jobs, [&](std::size_t k) -> std::optional<std::string> {
    const auto [i, j] = pairs[k];
    auto rng = rng_for(options, i, j);
    const auto other = relabeled(graphs[j], random_relabeling(graphs[j].labels(), rng), rng);
    const bool brute = oracle::brute_graph_iso(graphs[i], other).has_value();
    if (brute == (codes[i] == codes[j])) return std::nullopt;
    return comment("trees " + codes[i] + " and " + codes[j] + ": graph isomorphism " +
                   (brute ? "found" : "not found")) +
           adl(lattice_of_tree(trees[i]), "A") + adl(lattice_of_tree(trees[j]), "B");
  });
}

SuiteResult check_diam(const Options& options) {
  const auto lattices = population(options, 0);
  return run_parallel("diam", lattices.size(), options.jobs, [&](std::size_t i) -> std::optional<std::string> {
    const auto g = zero_divisor_graph(lattices[i]);
    if (g.empty()) return std::nullopt;
    const auto r = connectivity_report(g);
    if (r.connected && r.diameter && *r.diameter <= 3) return std::nullopt;
    return comment(r.connected ? "diameter " + std::to_string(*r.diameter) : "disconnected") + adl(lattices[i]);
  });
}

SuiteResult check_lemma400(const Options& options) {
  const auto lattices = population(options, 0);
  return run_parallel("lemma400", lattices.size(), options.jobs, [&](std::size_t i) -> std::optional<std::string> {
    const auto& l = lattices[i];
    for (Element x = 0; x < l.size(); ++x) {
      for (Element y = x + 1; y < l.size(); ++y) {
        if (x == l.bottom() || y == l.bottom()) continue;
        if ((l.meet(x, y) == l.bottom()) != !l.comparable(x, y)) {
          return comment("meet of " + l.label(x) + " and " + l.label(y)) + adl(l);
        }
      }
    }
    if (is_adjunct_element(l, l.top()) && zero_divisor_graph(l).size() != l.size() - 2) {
      return comment("vertex count differs from |L| - 2") + adl(l);
    }
    return std::nullopt;
  });
}

SuiteResult check_thm704(const Options& options) {
  std::vector<std::vector<std::size_t>> lists;
  std::function<void(std::vector<std::size_t>&)> grow = [&](std::vector<std::size_t>& cur) {
    if (cur.size() >= 2) lists.push_back(cur);
    if (cur.size() == 4) return;
    for (std::size_t s = 1; s <= 4; ++s) {
      cur.push_back(s);
      grow(cur);
      cur.pop_back();
    }
  };
  std::vector<std::size_t> start;
  grow(start);
  return run_parallel("thm704", lists.size(), options.jobs, [&](std::size_t i) -> std::optional<std::string> {
    auto expected = lists[i];
    std::sort(expected.rbegin(), expected.rend());
    const auto l = lattice_from_complete_multipartite(lists[i]);
    const auto parts = complete_multipartite_parts(zero_divisor_graph(l));
    if (parts && *parts == expected) return std::nullopt;
    return comment("part sizes not recovered") + adl(l);
  });
}

SuiteResult check_ssc(const Options& options) {
  const auto lattices = population(options, 2);
  return run_parallel("ssc", lattices.size(), options.jobs, [&](std::size_t i) -> std::optional<std::string> {
    const auto r = ssc_equivalence_report(lattices[i]);
    if (r.basic_block_is_self == r.ssc && r.ssc == r.all_classes_singleton) return std::nullopt;
    return comment("basic_block_is_self=" + std::to_string(r.basic_block_is_self) +
                   " ssc=" + std::to_string(r.ssc) + " singleton_classes=" + std::to_string(r.all_classes_singleton)) +
           adl(lattices[i]);
  });
}

SuiteResult check_block_confluence(const Options& options) {
  const auto lattices = population(options, 0);
  return run_parallel("block-confluence", lattices.size(), options.jobs,
                      [&](std::size_t i) -> std::optional<std::string> {
                        const auto& l = lattices[i];
                        const auto outcomes = basic_block_outcomes(l);
                        const auto block = basic_block(l);
                        std::vector<std::string> labels(block.labels().begin(), block.labels().end());
                        std::sort(labels.begin(), labels.end());
                        if (outcomes.size() == 1 && *outcomes.begin() == labels &&
                            basic_block(block).size() == block.size()) {
                          return std::nullopt;
                        }
                        return comment(std::to_string(outcomes.size()) + " distinct fixed points") + adl(l);
                      });
}

}  // namespace ldlat::verify

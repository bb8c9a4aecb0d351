#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ldlat/graph.hpp"
#include "ldlat/lattice.hpp"
#include "ldlat/rooted_tree.hpp"
#include "ldlat/witness.hpp"

namespace ldlat::oracle {

struct EnumerationFilter {
  std::size_t max_nodes = 1;
  std::size_t min_nodes = 1;
  /// Root has two or more children (join-reducible top).
  bool require_root_degree_ge2 = false;
};

/// Tree with the given canonical code. The root is labeled "one" and the
/// other nodes "n1", "n2", ... in preorder. Throws InvalidTree for a string
/// that is not a balanced parenthesis word.
RootedTree tree_from_code(const std::string& code);

/// One tree per isomorphism class, in canonical-code order, built by
/// composing multisets of smaller trees.
std::vector<RootedTree> enumerate_rooted_trees(const EnumerationFilter& filter);

/// Same classes, found by running over every parent array with
/// parent[i] < i and deduplicating by canonical code. Exponential; used to
/// cross-check the composing generator.
std::vector<RootedTree> enumerate_rooted_trees_by_parent_arrays(const EnumerationFilter& filter);

/// Lower dismantlable lattices (0 added below the leaves) of the trees.
std::vector<Lattice> enumerate_lower_dismantlable(const EnumerationFilter& filter);

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

/// Calls `visit` with every isomorphism g1 -> g2 until it returns false.
/// Candidates are pruned by degree and by the sorted degrees of the
/// neighbours. Throws BudgetExceeded once more than `budget` partial
/// assignments have been tried.
void for_each_graph_isomorphism(const LabeledGraph& g1, const LabeledGraph& g2,
                                const std::function<bool(const IsoWitness&)>& visit,
                                std::uint64_t budget = kDefaultBudget);

/// First isomorphism found, trying targets in label order.
std::optional<IsoWitness> brute_graph_iso(const LabeledGraph& g1, const LabeledGraph& g2,
                                          std::uint64_t budget = kDefaultBudget);

/// Every order isomorphism l1 -> l2, searched over cover-graph maps that
/// send bottom to bottom and top to top.
void for_each_lattice_isomorphism(const Lattice& l1, const Lattice& l2,
                                  const std::function<bool(const IsoWitness&)>& visit,
                                  std::uint64_t budget = kDefaultBudget);

std::optional<IsoWitness> brute_lattice_iso(const Lattice& l1, const Lattice& l2,
                                            std::uint64_t budget = kDefaultBudget);

/// Hasse diagram as an undirected graph on the element labels.
LabeledGraph cover_graph(const Lattice& lattice);

}  // namespace ldlat::oracle

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ldlat/dsl.hpp"
#include "ldlat/graph.hpp"
#include "ldlat/lattice.hpp"
#include "ldlat/rooted_tree.hpp"
#include "ldlat/witness.hpp"

namespace ldlat {

/// Label of the root that recognize() adds above the reconstructed forest.
inline constexpr std::string_view kSyntheticRoot = dsl::kSyntheticTop;

/// L \ {0} as a tree rooted at the top; a node's parent is its unique upper
/// cover. Node order follows element order. Throws NotLowerDismantlable.
RootedTree tree_of_lattice(const Lattice& lattice);

/// Adds a bottom "0" below every leaf. Throws LabelClash when the tree
/// already uses "0".
Lattice lattice_of_tree(const RootedTree& tree);

/// G(T): the non-root nodes, adjacent when neither is an ancestor of the
/// other.
LabeledGraph non_ancestor_graph(const RootedTree& tree);

/// A rooted tree T with non_ancestor_graph(T) label-identical to `graph`,
/// or nullopt when the graph is not a non-ancestor graph. u becomes an
/// ancestor of v when they are non-adjacent and N(u) is a proper subset of
/// N(v), or the neighbourhoods are equal and u has the smaller label. The
/// root is labeled kSyntheticRoot; throws LabelClash if the graph uses it.
std::optional<RootedTree> recognize(const LabeledGraph& graph);

/// Isomorphism of two non-ancestor graphs via canonical codes of their
/// reconstructed trees. Throws NotInClass naming the offending input.
bool iso_decide(const LabeledGraph& g1, const LabeledGraph& g2);

struct AlignTrace {
  IsoWitness phi;
  /// |A| before each swap, ending with the final 0.
  std::vector<std::size_t> mismatch_counts;
};

/// Repairs a zero-divisor-graph isomorphism f : G_0(L1) -> G_0(L2) so that
/// a vertex is an adjunct element of L1 exactly when its image is one of
/// L2, by swapping images inside neighbourhood classes. Requires both
/// lattices lower dismantlable with adjunct tops, f a graph isomorphism and
/// f preserving which classes hold an adjunct element; throws
/// HypothesisViolated otherwise.
AlignTrace align_adjuncts_traced(const Lattice& l1, const Lattice& l2, const IsoWitness& f);
IsoWitness align_adjuncts(const Lattice& l1, const Lattice& l2, const IsoWitness& f);

/// Extends an adjunct-preserving graph isomorphism phi to a lattice
/// isomorphism psi that agrees with phi on the adjunct elements and maps
/// every class onto phi's image of it. Peels a class without an adjunct
/// element below a minimal hinge, recurses, and maps the two peeled chains
/// bottom to bottom. Throws HypothesisViolated when the hypotheses fail and
/// InternalInconsistency when psi does not check out.
IsoWitness lift_to_lattice_iso(const Lattice& l1, const Lattice& l2, const IsoWitness& phi);

/// f is a bijection between the vertex sets preserving adjacency both ways.
bool is_graph_isomorphism(const LabeledGraph& g1, const LabeledGraph& g2, const IsoWitness& f);

/// f is a bijection between the element sets preserving order both ways.
bool is_lattice_isomorphism(const Lattice& l1, const Lattice& l2, const IsoWitness& f);

}  // namespace ldlat

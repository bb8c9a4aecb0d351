#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ldlat/graph.hpp"
#include "ldlat/lattice.hpp"
#include "ldlat/rooted_tree.hpp"

namespace ldlat {

// ---------------------------------------------------------------------------
// Basic blocks

/// An element x is structurally deletable when it is neither the bottom nor
/// an atom, has a unique lower cover u, and
///  - if x is comparable with every element (x lies on the top spine):
///    u is join-irreducible, so the spine keeps its lowest element;
///  - otherwise x has a unique upper cover v and the open interval (u, v)
///    is {x}, i.e. deleting x removes exactly one cover-graph edge.
/// Throws NoSuchElement for an index out of range.
bool is_structurally_deletable(const Lattice& lattice, Element x);

/// Removes a structurally deletable element, patching the covers.
Lattice delete_element(const Lattice& lattice, Element x);

/// Fixed point of deleting structurally deletable elements, smallest label
/// first. Never goes below two elements.
Lattice basic_block(const Lattice& lattice);

/// Label sets of every fixed point reachable by some deletion order.
/// Exhaustive (memoized over the remaining-element sets); meant for small
/// lattices.
std::set<std::vector<std::string>> basic_block_outcomes(const Lattice& lattice);

// ---------------------------------------------------------------------------
// Section semi-complementation

/// For all a not below b there is c with 0 < c <= a and b ^ c = 0.
bool is_ssc(const Lattice& lattice);

struct SscReport {
  bool basic_block_is_self = false;
  bool ssc = false;
  bool all_classes_singleton = false;
};

/// Three independently computed booleans. Requires a lower dismantlable
/// lattice whose top has at least two lower covers; throws
/// HypothesisViolated otherwise.
SscReport ssc_equivalence_report(const Lattice& lattice);

// ---------------------------------------------------------------------------
// Neighbourhood classes

struct NeighborhoodClass {
  /// Sorted labels.
  std::vector<std::string> members;
  bool has_adjunct = false;
  std::optional<std::string> adjunct_member;
  /// Peeling round (0-based); 0 when the partition was not peeled.
  std::size_t round = 0;
};

struct ClassPartition {
  std::vector<NeighborhoodClass> classes;
  /// Class indices in deletion order; empty when not produced by peeling.
  std::vector<std::size_t> peel_order;

  /// Members of every class as a set of sets, for order-free comparison.
  std::set<std::vector<std::string>> as_sets() const;
};

/// Groups vertices with identical open neighbourhoods. Classes are ordered
/// by smallest member; flags are left unset.
ClassPartition neighborhood_classes(const LabeledGraph& graph);

/// Sets has_adjunct / adjunct_member by scanning the lattice for elements
/// with two or more lower covers.
void annotate_adjuncts(ClassPartition& partition, const Lattice& lattice);

/// Some edge {y, z} has x adjacent to neither endpoint.
bool class_has_adjunct(const LabeledGraph& graph, Vertex x);

/// Branch peeling on a rooted tree: repeatedly take the branching nodes
/// with no branching descendant (the root always counts as one), emit each
/// maximal path hanging below them as a class, and delete those paths.
/// Classes come out ordered by round, then smallest member; a class is
/// flagged when it contains a non-root node with two or more children.
ClassPartition peel_order(const RootedTree& tree);

/// L = sublattice ]^hinge_0 chain.
struct PeelStep {
  Lattice sublattice;
  std::string hinge;
  /// Bottom to top.
  std::vector<std::string> chain;
};

/// Peels the neighbourhood class of x in G_0(L). The hinge is the least
/// adjunct element (other than the top) comparable with x, or the top when
/// there is none. Throws NotLowerDismantlable, NoSuchElement (x is not a
/// zero-divisor), ClassHasAdjunct, InternalInconsistency (candidate hinges
/// do not form a chain, or reassembly fails).
PeelStep peel_decomposition(const Lattice& lattice, Element x);

}  // namespace ldlat

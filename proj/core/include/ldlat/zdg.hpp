#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ldlat/graph.hpp"
#include "ldlat/lattice.hpp"

namespace ldlat {

/// G_0(L): vertices are the nonzero x with x ^ y = 0 for some nonzero y,
/// edges join distinct vertices meeting to 0. Computed from meets, so it is
/// valid for any lattice. Vertices appear in increasing element order and
/// carry the element labels.
LabeledGraph zero_divisor_graph(const Lattice& lattice);

struct ConnectivityReport {
  bool connected = false;
  /// nullopt when the graph is disconnected (infinite diameter).
  std::optional<std::size_t> diameter;
};

/// BFS from every vertex. Throws EmptyGraph.
ConnectivityReport connectivity_report(const LabeledGraph& graph);

/// Part sizes, descending, when the complement of `graph` is a disjoint
/// union of cliques; nullopt otherwise.
std::optional<std::vector<std::size_t>> complete_multipartite_parts(const LabeledGraph& graph);

/// Lower dismantlable lattice C1 ]^1_0 C2 ... ]^1_0 Ck with |C1| = |V1| + 2
/// and |Ci| = |Vi| whose zero-divisor graph is complete multipartite with the
/// given part sizes. Labels: "0", "one" and "p<i>_<j>". Throws BadPartition
/// for fewer than two parts or an empty part.
Lattice lattice_from_complete_multipartite(std::vector<std::size_t> sizes);

}  // namespace ldlat

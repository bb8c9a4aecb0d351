#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ldlat/blocks.hpp"
#include "ldlat/graph.hpp"
#include "ldlat/lattice.hpp"
#include "ldlat/witness.hpp"

namespace ldlat::io {

/// {"vertices": [...], "edges": [[u, v], ...]} with sorted vertices, each
/// edge ordered and the edge list sorted, so equal graphs print equally.
nlohmann::json graph_to_json(const LabeledGraph& graph);

/// Reads the same shape. Throws InvalidGraph on a malformed document, an
/// unknown endpoint, a loop or a repeated edge; DuplicateElement on a
/// repeated vertex.
LabeledGraph graph_from_json(const nlohmann::json& doc);

/// Undirected DOT with sorted vertices and edges.
std::string graph_to_dot(const LabeledGraph& graph, const std::string& name = "G");

/// Hasse diagram as DOT, edges pointing from lower to upper cover.
std::string lattice_to_dot(const Lattice& lattice, const std::string& name = "L");

/// {"classes": [{"members", "has_adjunct", "adjunct_member"}], "peel_order"}.
nlohmann::json partition_to_json(const ClassPartition& partition);

/// {"kind": "graph-iso" | "lattice-iso", "map": {from: to}}.
nlohmann::json witness_to_json(const IsoWitness& witness);
IsoWitness witness_from_json(const nlohmann::json& doc);

}  // namespace ldlat::io

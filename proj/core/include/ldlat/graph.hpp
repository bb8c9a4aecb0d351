#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ldlat/lattice.hpp"

namespace ldlat {

using Vertex = std::uint32_t;

/// Simple undirected graph on uniquely labelled vertices. Adjacency is kept
/// as one bitset row per vertex.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  /// Edgeless graph. Throws DuplicateElement.
  explicit LabeledGraph(std::vector<std::string> labels);

  /// Throws InvalidGraph on loops or repeated edges, NoSuchElement on
  /// unknown endpoints.
  static LabeledGraph from_edges(std::vector<std::string> labels,
                                 const std::vector<LabelPair>& edges);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  std::size_t edge_count() const noexcept { return edges_; }

  const std::string& label(Vertex v) const { return labels_.at(v); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;
  Vertex at(std::string_view label) const;

  /// Adds {u,v}; returns false if it was already present. Throws
  /// InvalidGraph for u == v.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return adj_[u].test(v); }
  const Bitset& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].count(); }

  /// Edges (u, v) with u < v, sorted by index.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  /// Edges as label pairs, each pair and the list sorted.
  std::vector<LabelPair> label_edges() const;

  LabeledGraph induced(const Bitset& keep) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Bitset> adj_;
  std::size_t edges_ = 0;
};

/// Identical vertex label sets and identical edge sets on labels.
bool same_labeled(const LabeledGraph& a, const LabeledGraph& b);

}  // namespace ldlat

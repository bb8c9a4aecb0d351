#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ldlat/error.hpp"

namespace ldlat {

using Node = std::uint32_t;

/// Rooted tree stored as a parent array; the root is its own parent.
class RootedTree {
 public:
  /// Throws InvalidTree (no root, several roots, cycle, bad parent index)
  /// or DuplicateElement.
  RootedTree(std::vector<std::string> labels, std::vector<Node> parent);

  std::size_t size() const noexcept { return labels_.size(); }
  Node root() const noexcept { return root_; }
  Node parent(Node v) const { return parent_.at(v); }
  std::span<const Node> parents() const noexcept { return parent_; }
  std::span<const Node> children(Node v) const { return children_.at(v); }
  bool is_leaf(Node v) const { return children_.at(v).empty(); }
  std::size_t depth(Node v) const { return depth_.at(v); }

  const std::string& label(Node v) const { return labels_.at(v); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::optional<Node> find(std::string_view label) const;
  Node at(std::string_view label) const;

  /// u is a proper ancestor of v.
  bool is_ancestor(Node u, Node v) const;

  /// The root has at least two children.
  bool root_has_two_branches() const { return children_[root_].size() >= 2; }

  /// Nodes with every parent before its children.
  std::vector<Node> preorder() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Node> index_;
  std::vector<Node> parent_;
  std::vector<std::vector<Node>> children_;
  std::vector<std::size_t> depth_;
  Node root_ = 0;
};

/// Nested-parenthesis encoding with children codes sorted; equal codes iff
/// isomorphic rooted trees.
struct CanonicalCode {
  std::string code;

  auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const RootedTree& tree);

/// Canonical code of every subtree, indexed by node.
std::vector<std::string> subtree_codes(const RootedTree& tree);

/// A root-preserving isomorphism a -> b as a node map, if one exists.
std::optional<std::vector<Node>> tree_isomorphism(const RootedTree& a, const RootedTree& b);

}  // namespace ldlat

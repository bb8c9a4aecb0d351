#include "ldlat/rooted_tree.hpp"

#include <algorithm>
#include <map>

namespace ldlat {

RootedTree::RootedTree(std::vector<std::string> labels, std::vector<Node> parent)
    : labels_(std::move(labels)), parent_(std::move(parent)) {
  const auto n = static_cast<Node>(labels_.size());
  if (n == 0) throw Error(ErrorCode::InvalidTree, "a tree needs at least one node");
  if (parent_.size() != n) throw Error(ErrorCode::InvalidTree, "parent array and labels differ in length");
  for (Node i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorCode::DuplicateElement, "node label '" + labels_[i] + "' used twice");
    }
  }
  children_.assign(n, {});
  std::optional<Node> root;
  for (Node v = 0; v < n; ++v) {
    if (parent_[v] >= n) throw Error(ErrorCode::InvalidTree, "parent index out of range");
    if (parent_[v] == v) {
      if (root) throw Error(ErrorCode::InvalidTree, "more than one root");
      root = v;
    } else {
      children_[parent_[v]].push_back(v);
    }
  }
  if (!root) throw Error(ErrorCode::InvalidTree, "no root");
  root_ = *root;

  depth_.assign(n, 0);
  std::vector<Node> stack{root_};
  std::size_t seen = 0;
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    ++seen;
    for (Node c : children_[v]) {
      depth_[c] = depth_[v] + 1;
      stack.push_back(c);
    }
  }
  if (seen != n) throw Error(ErrorCode::InvalidTree, "parent links contain a cycle");
}

std::optional<Node> RootedTree::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Node RootedTree::at(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error(ErrorCode::NoSuchElement, "no node labelled '" + std::string(label) + "'");
}

bool RootedTree::is_ancestor(Node u, Node v) const {
  if (depth_.at(u) >= depth_.at(v)) return false;
  while (depth_[v] > depth_[u]) v = parent_[v];
  return u == v;
}

std::vector<Node> RootedTree::preorder() const {
  std::vector<Node> order;
  order.reserve(size());
  std::vector<Node> stack{root_};
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto it = children_[v].rbegin(); it != children_[v].rend(); ++it) stack.push_back(*it);
  }
  return order;
}

std::vector<std::string> subtree_codes(const RootedTree& tree) {
  std::vector<std::string> code(tree.size());
  auto order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::vector<const std::string*> parts;
    for (Node c : tree.children(*it)) parts.push_back(&code[c]);
    std::sort(parts.begin(), parts.end(), [](auto* a, auto* b) { return *a < *b; });
    std::string s = "(";
    for (auto* p : parts) s += *p;
    s += ")";
    code[*it] = std::move(s);
  }
  return code;
}

CanonicalCode canonical_code(const RootedTree& tree) { return {subtree_codes(tree)[tree.root()]}; }

std::optional<std::vector<Node>> tree_isomorphism(const RootedTree& a, const RootedTree& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto ca = subtree_codes(a);
  auto cb = subtree_codes(b);
  if (ca[a.root()] != cb[b.root()]) return std::nullopt;
  std::vector<Node> map(a.size());
  std::vector<std::pair<Node, Node>> work{{a.root(), b.root()}};
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    map[u] = v;
    std::vector<Node> ka(a.children(u).begin(), a.children(u).end());
    std::vector<Node> kb(b.children(v).begin(), b.children(v).end());
    std::sort(ka.begin(), ka.end(), [&](Node x, Node y) { return ca[x] < ca[y]; });
    std::sort(kb.begin(), kb.end(), [&](Node x, Node y) { return cb[x] < cb[y]; });
    for (std::size_t i = 0; i < ka.size(); ++i) work.emplace_back(ka[i], kb[i]);
  }
  return map;
}

}  // namespace ldlat

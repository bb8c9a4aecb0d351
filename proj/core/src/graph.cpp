#include "ldlat/graph.hpp"

#include <algorithm>

namespace ldlat {

LabeledGraph::LabeledGraph(std::vector<std::string> labels) : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (Vertex i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorCode::DuplicateElement, "vertex '" + labels_[i] + "' listed twice");
    }
  }
  adj_.assign(labels_.size(), Bitset(labels_.size()));
}

LabeledGraph LabeledGraph::from_edges(std::vector<std::string> labels, const std::vector<LabelPair>& edges) {
  LabeledGraph g(std::move(labels));
  for (const auto& [a, b] : edges) {
    Vertex u = g.at(a);
    Vertex v = g.at(b);
    if (!g.add_edge(u, v)) throw Error(ErrorCode::InvalidGraph, "edge {" + a + ", " + b + "} listed twice");
  }
  return g;
}

std::optional<Vertex> LabeledGraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex LabeledGraph::at(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error(ErrorCode::NoSuchElement, "no vertex labelled '" + std::string(label) + "'");
}

bool LabeledGraph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw Error(ErrorCode::InvalidGraph, "loop at '" + labels_.at(u) + "'");
  if (adj_.at(u).test(v)) return false;
  adj_[u].set(v);
  adj_.at(v).set(u);
  ++edges_;
  return true;
}

std::vector<std::pair<Vertex, Vertex>> LabeledGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < size(); ++u) {
    for (auto v = adj_[u].find_next(u); v != Bitset::npos; v = adj_[u].find_next(v)) {
      out.emplace_back(u, static_cast<Vertex>(v));
    }
  }
  return out;
}

std::vector<LabelPair> LabeledGraph::label_edges() const {
  std::vector<LabelPair> out;
  out.reserve(edges_);
  for (const auto& [u, v] : edges()) {
    const auto& a = labels_[u];
    const auto& b = labels_[v];
    if (a < b) out.emplace_back(a, b);
    else out.emplace_back(b, a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LabeledGraph LabeledGraph::induced(const Bitset& keep) const {
  std::vector<Vertex> old_of_new;
  for (auto i = keep.find_first(); i != Bitset::npos; i = keep.find_next(i)) old_of_new.push_back(static_cast<Vertex>(i));
  std::vector<std::string> labels;
  for (Vertex v : old_of_new) labels.push_back(labels_[v]);
  LabeledGraph g(std::move(labels));
  for (Vertex i = 0; i < old_of_new.size(); ++i) {
    for (Vertex j = i + 1; j < old_of_new.size(); ++j) {
      if (has_edge(old_of_new[i], old_of_new[j])) g.add_edge(i, j);
    }
  }
  return g;
}

bool same_labeled(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::string> la(a.labels().begin(), a.labels().end());
  std::vector<std::string> lb(b.labels().begin(), b.labels().end());
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  return la == lb && a.label_edges() == b.label_edges();
}

}  // namespace ldlat

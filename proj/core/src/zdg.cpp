#include "ldlat/zdg.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace ldlat {

LabeledGraph zero_divisor_graph(const Lattice& lattice) {
  const auto n = static_cast<Element>(lattice.size());
  const Element zero = lattice.bottom();
  std::vector<Element> vertices;
  for (Element x = 0; x < n; ++x) {
    if (x == zero) continue;
    for (Element y = 0; y < n; ++y) {
      if (y != zero && lattice.meet(x, y) == zero) {
        vertices.push_back(x);
        break;
      }
    }
  }
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (Element x : vertices) labels.push_back(lattice.label(x));
  LabeledGraph g(std::move(labels));
  for (Vertex i = 0; i < vertices.size(); ++i) {
    for (Vertex j = i + 1; j < vertices.size(); ++j) {
      if (lattice.meet(vertices[i], vertices[j]) == zero) g.add_edge(i, j);
    }
  }
  return g;
}

ConnectivityReport connectivity_report(const LabeledGraph& graph) {
  if (graph.empty()) throw Error(ErrorCode::EmptyGraph, "connectivity of the empty graph is undefined");
  const auto n = static_cast<Vertex>(graph.size());
  std::size_t diameter = 0;
  std::vector<std::size_t> dist(n);
  constexpr auto kUnseen = static_cast<std::size_t>(-1);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    std::deque<Vertex> queue{s};
    std::size_t reached = 1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      const auto& nb = graph.neighbors(u);
      for (auto v = nb.find_first(); v != Bitset::npos; v = nb.find_next(v)) {
        if (dist[v] != kUnseen) continue;
        dist[v] = dist[u] + 1;
        diameter = std::max(diameter, dist[v]);
        ++reached;
        queue.push_back(static_cast<Vertex>(v));
      }
    }
    if (reached != n) return {false, std::nullopt};
  }
  return {true, diameter};
}

std::optional<std::vector<std::size_t>> complete_multipartite_parts(const LabeledGraph& graph) {
  const auto n = static_cast<Vertex>(graph.size());
  Bitset assigned(n);
  std::vector<std::size_t> sizes;
  for (Vertex v = 0; v < n; ++v) {
    if (assigned.test(v)) continue;
    // The part of v: v together with all its non-neighbours.
    Bitset part = ~graph.neighbors(v);
    for (auto u = part.find_first(); u != Bitset::npos; u = part.find_next(u)) {
      // Non-adjacency must be an equivalence relation: each member's
      // closed non-neighbourhood is exactly the part.
      Bitset closed = ~graph.neighbors(static_cast<Vertex>(u));
      if (closed != part) return std::nullopt;
    }
    assigned |= part;
    sizes.push_back(part.count());
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

Lattice lattice_from_complete_multipartite(std::vector<std::size_t> sizes) {
  if (sizes.size() < 2) throw Error(ErrorCode::BadPartition, "need at least two parts");
  if (std::find(sizes.begin(), sizes.end(), std::size_t{0}) != sizes.end()) {
    throw Error(ErrorCode::BadPartition, "parts must be nonempty");
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  std::vector<std::string> labels{"0", "one"};
  std::vector<CoverPair> covers;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    Element prev = 0;
    for (std::size_t j = 0; j < sizes[i]; ++j) {
      auto id = static_cast<Element>(labels.size());
      labels.push_back("p" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      covers.emplace_back(prev, id);
      prev = id;
    }
    covers.emplace_back(prev, 1);
  }
  return Lattice(std::move(labels), std::move(covers));
}

}  // namespace ldlat

#include "ldlat/relabel.hpp"

#include <algorithm>
#include <numeric>

namespace ldlat {

namespace {

std::vector<std::uint32_t> permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

const std::string& lookup(const LabelMap& map, const std::string& label) {
  auto it = map.find(label);
  if (it == map.end()) throw Error(ErrorCode::NoSuchElement, "no new label for '" + label + "'");
  return it->second;
}

}  // namespace

LabelMap random_relabeling(std::span<const std::string> labels, std::mt19937_64& rng, std::string_view prefix) {
  const auto p = permutation(labels.size(), rng);
  LabelMap map;
  for (std::size_t i = 0; i < labels.size(); ++i) map[labels[i]] = std::string(prefix) + std::to_string(p[i] + 1);
  return map;
}

Lattice relabeled(const Lattice& lattice, const LabelMap& map, std::mt19937_64& rng) {
  const auto p = permutation(lattice.size(), rng);
  std::vector<std::string> labels(lattice.size());
  for (Element x = 0; x < lattice.size(); ++x) labels[p[x]] = lookup(map, lattice.label(x));
  std::vector<CoverPair> covers;
  for (auto [a, b] : lattice.cover_pairs()) covers.emplace_back(p[a], p[b]);
  return Lattice(std::move(labels), std::move(covers));
}

LabeledGraph relabeled(const LabeledGraph& graph, const LabelMap& map, std::mt19937_64& rng) {
  const auto p = permutation(graph.size(), rng);
  std::vector<std::string> labels(graph.size());
  for (Vertex v = 0; v < graph.size(); ++v) labels[p[v]] = lookup(map, graph.label(v));
  LabeledGraph out(std::move(labels));
  for (auto [a, b] : graph.edges()) out.add_edge(p[a], p[b]);
  return out;
}

}  // namespace ldlat

#pragma once

#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>

#include "ldlat/graph.hpp"
#include "ldlat/lattice.hpp"

namespace ldlat {

using LabelMap = std::map<std::string, std::string>;

/// Bijection from `labels` onto prefix + "1".."n", assigned in random order.
LabelMap random_relabeling(std::span<const std::string> labels, std::mt19937_64& rng,
                           std::string_view prefix = "r");

/// Copy with every label renamed through `map` and the internal element
/// order shuffled. Throws NoSuchElement when the map misses a label.
Lattice relabeled(const Lattice& lattice, const LabelMap& map, std::mt19937_64& rng);
LabeledGraph relabeled(const LabeledGraph& graph, const LabelMap& map, std::mt19937_64& rng);

}  // namespace ldlat

#pragma once

#include <map>
#include <string>
#include <string_view>

namespace ldlat {

/// A label bijection certifying an isomorphism.
struct IsoWitness {
  enum class Kind { GraphIso, LatticeIso };

  Kind kind = Kind::GraphIso;
  std::map<std::string, std::string> map;

  const std::string& operator()(const std::string& from) const { return map.at(from); }
  friend bool operator==(const IsoWitness&, const IsoWitness&) = default;
};

inline std::string_view to_string(IsoWitness::Kind kind) {
  return kind == IsoWitness::Kind::GraphIso ? "graph-iso" : "lattice-iso";
}

}  // namespace ldlat

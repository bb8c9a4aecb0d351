#pragma once

#include <string>
#include <vector>

#include "ldlat/error.hpp"

namespace ldlat {

/// One step `adjoin (lower, upper): chain...` of an adjunct representation.
/// The chain is listed bottom to top.
struct Adjunction {
  std::string lower;
  std::string upper;
  std::vector<std::string> chain;
  SourcePos pos{};

  friend bool operator==(const Adjunction& a, const Adjunction& b) {
    return a.lower == b.lower && a.upper == b.upper && a.chain == b.chain;
  }
};

/// Adjunct representation C0 ]^{b1}_{a1} C1 ... ]^{br}_{ar} Cr: a base chain
/// followed by chains glued into intervals of what was built so far.
/// Equality ignores source positions.
struct AdjunctExpr {
  std::string name = "L";
  std::vector<std::string> base;
  std::vector<Adjunction> adjunctions;

  std::size_t element_count() const {
    std::size_t n = base.size();
    for (const auto& adj : adjunctions) n += adj.chain.size();
    return n;
  }

  friend bool operator==(const AdjunctExpr& a, const AdjunctExpr& b) {
    return a.name == b.name && a.base == b.base &&
           a.adjunctions == b.adjunctions;
  }
};

}  // namespace ldlat

#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ldlat/dsl.hpp"
#include "ldlat/graph.hpp"
#include "ldlat/lattice.hpp"

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(LDLAT_TEST_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& name) {
  std::ifstream in(data_path(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline ldlat::Lattice load(const std::string& name) { return ldlat::dsl::elaborate(ldlat::dsl::parse(slurp(name))); }

inline ldlat::Lattice from_source(const std::string& text) { return ldlat::dsl::elaborate(ldlat::dsl::parse(text)); }

inline std::set<std::string> label_set(const ldlat::Lattice& l, const std::vector<ldlat::Element>& xs) {
  std::set<std::string> out;
  for (auto x : xs) out.insert(l.label(x));
  return out;
}

inline std::set<std::string> all_labels(const ldlat::Lattice& l) {
  return {l.labels().begin(), l.labels().end()};
}

/// Reflexive-transitive closure of the cover relation by depth-first search,
/// kept independent of the library's bitsets.
class NaiveOrder {
 public:
  explicit NaiveOrder(const ldlat::Lattice& l) : labels_(l.labels().begin(), l.labels().end()) {
    for (const auto& [a, b] : l.cover_label_pairs()) up_[a].insert(b);
    for (const auto& x : labels_) {
      std::vector<std::string> stack{x};
      auto& seen = reach_[x];
      while (!stack.empty()) {
        auto y = stack.back();
        stack.pop_back();
        if (!seen.insert(y).second) continue;
        for (const auto& z : up_[y]) stack.push_back(z);
      }
    }
  }

  bool leq(const std::string& x, const std::string& y) const { return reach_.at(x).count(y) > 0; }

  std::string meet(const std::string& x, const std::string& y) const {
    std::vector<std::string> lower;
    for (const auto& z : labels_) {
      if (leq(z, x) && leq(z, y)) lower.push_back(z);
    }
    for (const auto& z : lower) {
      if (std::all_of(lower.begin(), lower.end(), [&](const auto& w) { return leq(w, z); })) return z;
    }
    return {};
  }

  std::string join(const std::string& x, const std::string& y) const {
    std::vector<std::string> upper;
    for (const auto& z : labels_) {
      if (leq(x, z) && leq(y, z)) upper.push_back(z);
    }
    for (const auto& z : upper) {
      if (std::all_of(upper.begin(), upper.end(), [&](const auto& w) { return leq(z, w); })) return z;
    }
    return {};
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::set<std::string>> up_;
  std::map<std::string, std::set<std::string>> reach_;
};

}  // namespace testing

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ldlat/adjunct_expr.hpp"
#include "ldlat/error.hpp"

namespace ldlat {

using Element = std::uint32_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;
using LabelPair = std::pair<std::string, std::string>;
using CoverPair = std::pair<Element, Element>;

/// Finite bounded lattice given by its cover relation.
///
/// Elements are dense indices 0..n-1 with a parallel label array. The order
/// is materialized as up/down bitsets and meets/joins as n*n tables, so every
/// query after construction is O(1). Construction validates that the covers
/// are acyclic and transitively reduced and that all meets and joins exist.
/// Instances are immutable.
class Lattice {
 public:
  /// Throws Error with NotALattice, NotReduced, CycleDetected,
  /// DuplicateElement or NoSuchElement.
  Lattice(std::vector<std::string> labels, std::vector<CoverPair> covers);

  static Lattice from_covers(std::vector<std::string> labels,
                             const std::vector<LabelPair>& covers);

  /// Chain labels[0] < labels[1] < ...
  static Lattice chain(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }
  bool is_trivial() const noexcept { return size() == 1; }

  const std::string& label(Element x) const { return labels_.at(x); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::optional<Element> find(std::string_view label) const;
  /// Throws NoSuchElement.
  Element at(std::string_view label) const;

  bool leq(Element x, Element y) const { return up_[x].test(y); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const {
    return leq(x, y) || leq(y, x);
  }
  bool covers(Element lower, Element upper) const;

  std::span<const Element> lower_covers(Element x) const {
    return lower_[x];
  }
  std::span<const Element> upper_covers(Element x) const {
    return upper_[x];
  }
  /// Elements y with y <= x.
  const Bitset& down_set(Element x) const { return down_[x]; }
  /// Elements y with x <= y.
  const Bitset& up_set(Element x) const { return up_[x]; }

  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
  Element join(Element x, Element y) const { return join_[x * size() + y]; }

  /// All cover pairs (lower, upper), sorted.
  std::vector<CoverPair> cover_pairs() const;
  std::vector<LabelPair> cover_label_pairs() const;

  bool is_chain() const;
  bool is_atom(Element x) const;

  /// Restriction of the order to `keep` (re-indexed in increasing original
  /// index order). Throws NotALattice when the induced order is not a
  /// lattice.
  Lattice restrict(const Bitset& keep) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Element> index_;
  std::vector<std::vector<Element>> lower_;
  std::vector<std::vector<Element>> upper_;
  std::vector<Bitset> down_;
  std::vector<Bitset> up_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Same label set and same cover relation on labels.
bool same_labeled(const Lattice& a, const Lattice& b);

struct ElementClassification {
  std::vector<Element> join_irreducible;
  std::vector<Element> meet_irreducible;
  /// Exactly one lower and one upper cover (bounds excluded).
  std::vector<Element> doubly_irreducible;
  std::vector<Element> atoms;
  /// Elements with at least two lower covers. In a lower dismantlable
  /// lattice these are exactly the b of the adjunct pairs (0,b).
  std::vector<Element> adjunct_elements;
  std::vector<std::size_t> lower_cover_count;
  std::vector<std::size_t> upper_cover_count;
};

ElementClassification classify(const Lattice& lattice);

inline bool is_adjunct_element(const Lattice& lattice, Element x) {
  return lattice.lower_covers(x).size() >= 2;
}

/// host ]^b_a inserted. Indices of `host` are kept; `inserted` follows.
/// Throws PairNotAdjunctable unless a < b and a is not covered by b, and
/// LabelClash when the label sets intersect.
Lattice adjunct(const Lattice& host, const Lattice& inserted, Element a,
                Element b);

/// L \ {0} is a tree under the cover relation (rooted at the top).
/// Throws TrivialLattice for |L| = 1.
bool is_lower_dismantlable(const Lattice& lattice);

/// Deterministic adjunct representation of a lower dismantlable lattice:
/// repeatedly strip the longest leaf chain hanging at the deepest branching
/// element. Throws NotLowerDismantlable.
AdjunctExpr adjunct_representation(const Lattice& lattice,
                                   std::string name = "L");

}  // namespace ldlat

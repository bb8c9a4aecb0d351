#include "ldlat/blocks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

#include "ldlat/zdg.hpp"

namespace ldlat {

namespace {

// Covers of x inside the sub-order on `alive`.
std::vector<Element> covers_below(const Lattice& l, const Bitset& alive, Element x) {
  std::vector<Element> out;
  Bitset below = l.down_set(x) & alive;
  below.reset(x);
  for (auto y = below.find_first(); y != Bitset::npos; y = below.find_next(y)) {
    if ((l.up_set(static_cast<Element>(y)) & below).count() == 1) out.push_back(static_cast<Element>(y));
  }
  return out;
}

std::vector<Element> covers_above(const Lattice& l, const Bitset& alive, Element x) {
  std::vector<Element> out;
  Bitset above = l.up_set(x) & alive;
  above.reset(x);
  for (auto y = above.find_first(); y != Bitset::npos; y = above.find_next(y)) {
    if ((l.down_set(static_cast<Element>(y)) & above).count() == 1) out.push_back(static_cast<Element>(y));
  }
  return out;
}

// Deletability of x in the restriction of `l` to `alive`. Deleting doubly
// irreducible elements preserves the order among the rest, so the original
// order restricted to `alive` is the order of the reduced lattice.
bool deletable_in(const Lattice& l, const Bitset& alive, Element x) {
  const auto remaining = alive.count();
  if (remaining <= 2 || x == l.bottom() || !alive.test(x)) return false;
  auto lower = covers_below(l, alive, x);
  if (lower.size() != 1 || lower.front() == l.bottom()) return false;
  const Element u = lower.front();
  if (((l.up_set(x) | l.down_set(x)) & alive).count() == remaining) {
    return covers_below(l, alive, u).size() == 1;
  }
  auto upper = covers_above(l, alive, x);
  if (upper.size() != 1) return false;
  return (l.up_set(u) & l.down_set(upper.front()) & alive).count() == 3;
}

std::vector<Element> by_label(const Lattice& l) {
  std::vector<Element> order(l.size());
  for (Element i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](Element a, Element b) { return l.label(a) < l.label(b); });
  return order;
}

Bitset all_of(std::size_t n) {
  Bitset b(n);
  b.set();
  return b;
}

}  // namespace

bool is_structurally_deletable(const Lattice& lattice, Element x) {
  if (x >= lattice.size()) throw Error(ErrorCode::NoSuchElement, "element index out of range");
  return deletable_in(lattice, all_of(lattice.size()), x);
}

Lattice delete_element(const Lattice& lattice, Element x) {
  if (!is_structurally_deletable(lattice, x)) {
    throw Error(ErrorCode::HypothesisViolated, "'" + lattice.label(x) + "' is not structurally deletable");
  }
  Bitset keep = all_of(lattice.size());
  keep.reset(x);
  return lattice.restrict(keep);
}

Lattice basic_block(const Lattice& lattice) {
  Bitset alive = all_of(lattice.size());
  const auto order = by_label(lattice);
  for (bool changed = true; changed;) {
    changed = false;
    for (Element x : order) {
      if (deletable_in(lattice, alive, x)) {
        alive.reset(x);
        changed = true;
        break;
      }
    }
  }
  return lattice.restrict(alive);
}

std::set<std::vector<std::string>> basic_block_outcomes(const Lattice& lattice) {
  std::set<std::vector<std::string>> outcomes;
  std::set<Bitset> visited;
  std::function<void(const Bitset&)> explore = [&](const Bitset& alive) {
    if (!visited.insert(alive).second) return;
    bool terminal = true;
    for (Element x = 0; x < lattice.size(); ++x) {
      if (!deletable_in(lattice, alive, x)) continue;
      terminal = false;
      Bitset next = alive;
      next.reset(x);
      explore(next);
    }
    if (terminal) {
      std::vector<std::string> labels;
      for (auto i = alive.find_first(); i != Bitset::npos; i = alive.find_next(i)) {
        labels.push_back(lattice.label(static_cast<Element>(i)));
      }
      std::sort(labels.begin(), labels.end());
      outcomes.insert(std::move(labels));
    }
  };
  explore(all_of(lattice.size()));
  return outcomes;
}

bool is_ssc(const Lattice& lattice) {
  const auto n = static_cast<Element>(lattice.size());
  const Element zero = lattice.bottom();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (lattice.leq(a, b)) continue;
      bool witness = false;
      const auto& below = lattice.down_set(a);
      for (auto c = below.find_first(); c != Bitset::npos && !witness; c = below.find_next(c)) {
        witness = c != zero && lattice.meet(b, static_cast<Element>(c)) == zero;
      }
      if (!witness) return false;
    }
  }
  return true;
}

SscReport ssc_equivalence_report(const Lattice& lattice) {
  if (lattice.is_trivial() || !is_lower_dismantlable(lattice)) {
    throw Error(ErrorCode::HypothesisViolated, "lattice is not lower dismantlable");
  }
  if (lattice.lower_covers(lattice.top()).size() < 2) {
    throw Error(ErrorCode::HypothesisViolated, "the top element is join-irreducible");
  }
  SscReport report;
  report.basic_block_is_self = basic_block(lattice).size() == lattice.size();
  report.ssc = is_ssc(lattice);
  const auto classes = neighborhood_classes(zero_divisor_graph(lattice));
  report.all_classes_singleton = std::all_of(classes.classes.begin(), classes.classes.end(),
                                             [](const auto& c) { return c.members.size() == 1; });
  return report;
}

std::set<std::vector<std::string>> ClassPartition::as_sets() const {
  std::set<std::vector<std::string>> out;
  for (const auto& c : classes) out.insert(c.members);
  return out;
}

ClassPartition neighborhood_classes(const LabeledGraph& graph) {
  std::map<Bitset, std::vector<std::string>> groups;
  for (Vertex v = 0; v < graph.size(); ++v) groups[graph.neighbors(v)].push_back(graph.label(v));
  ClassPartition out;
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end());
    out.classes.push_back({std::move(members), false, std::nullopt, 0});
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const auto& a, const auto& b) { return a.members.front() < b.members.front(); });
  return out;
}

void annotate_adjuncts(ClassPartition& partition, const Lattice& lattice) {
  for (auto& c : partition.classes) {
    c.has_adjunct = false;
    c.adjunct_member.reset();
    for (const auto& m : c.members) {
      if (is_adjunct_element(lattice, lattice.at(m))) {
        c.has_adjunct = true;
        c.adjunct_member = m;
        break;
      }
    }
  }
}

bool class_has_adjunct(const LabeledGraph& graph, Vertex x) {
  Bitset far = ~graph.neighbors(x);
  far.reset(x);
  for (auto y = far.find_first(); y != Bitset::npos; y = far.find_next(y)) {
    if (graph.neighbors(static_cast<Vertex>(y)).intersects(far)) return true;
  }
  return false;
}

ClassPartition peel_order(const RootedTree& tree) {
  const auto n = static_cast<Node>(tree.size());
  std::vector<char> alive(n, 1);
  auto live_children = [&](Node v) {
    std::vector<Node> out;
    for (Node c : tree.children(v)) {
      if (alive[c]) out.push_back(c);
    }
    return out;
  };
  auto is_node = [&](Node v) { return v == tree.root() || live_children(v).size() >= 2; };
  const auto order = tree.preorder();

  ClassPartition out;
  std::size_t remaining = n - 1;
  for (std::size_t round = 0; remaining > 0; ++round) {
    // node_below[v]: some live proper descendant of v is a node.
    std::vector<char> node_below(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Node v = *it;
      if (!alive[v] || v == tree.root()) continue;
      if (node_below[v] || is_node(v)) node_below[tree.parent(v)] = 1;
    }
    std::vector<NeighborhoodClass> found;
    for (Node v : order) {
      if (!alive[v] || !is_node(v) || node_below[v]) continue;
      for (Node c : live_children(v)) {
        NeighborhoodClass cls;
        cls.round = round;
        for (Node w = c;;) {
          cls.members.push_back(tree.label(w));
          if (tree.children(w).size() >= 2 && !cls.has_adjunct) {
            cls.has_adjunct = true;
            cls.adjunct_member = tree.label(w);
          }
          auto next = live_children(w);
          if (next.empty()) break;
          w = next.front();
        }
        std::sort(cls.members.begin(), cls.members.end());
        found.push_back(std::move(cls));
      }
    }
    for (const auto& cls : found) {
      for (const auto& m : cls.members) alive[tree.at(m)] = 0;
      remaining -= cls.members.size();
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.members.front() < b.members.front(); });
    for (auto& cls : found) {
      out.peel_order.push_back(out.classes.size());
      out.classes.push_back(std::move(cls));
    }
  }
  return out;
}

PeelStep peel_decomposition(const Lattice& lattice, Element x) {
  if (x >= lattice.size()) throw Error(ErrorCode::NoSuchElement, "element index out of range");
  if (lattice.is_trivial() || !is_lower_dismantlable(lattice)) {
    throw Error(ErrorCode::NotLowerDismantlable, "peeling needs a lower dismantlable lattice");
  }
  const auto graph = zero_divisor_graph(lattice);
  const auto gx = graph.find(lattice.label(x));
  if (!gx) throw Error(ErrorCode::NoSuchElement, "'" + lattice.label(x) + "' is not a zero-divisor");
  if (class_has_adjunct(graph, *gx)) {
    throw Error(ErrorCode::ClassHasAdjunct, "the class of '" + lattice.label(x) + "' contains an adjunct element");
  }

  std::vector<Element> chain;
  for (Vertex v = 0; v < graph.size(); ++v) {
    if (graph.neighbors(v) == graph.neighbors(*gx)) chain.push_back(lattice.at(graph.label(v)));
  }
  std::sort(chain.begin(), chain.end(),
            [&](Element a, Element b) { return lattice.down_set(a).count() < lattice.down_set(b).count(); });
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!lattice.less(chain[i - 1], chain[i])) {
      throw Error(ErrorCode::InternalInconsistency, "neighbourhood class is not a chain");
    }
  }

  std::vector<Element> hinges;
  for (Element b = 0; b < lattice.size(); ++b) {
    if (b == lattice.top() || !is_adjunct_element(lattice, b) || !lattice.comparable(b, x)) continue;
    if (!lattice.less(x, b)) throw Error(ErrorCode::InternalInconsistency, "adjunct element below a peelable class");
    hinges.push_back(b);
  }
  std::sort(hinges.begin(), hinges.end(),
            [&](Element a, Element b) { return lattice.down_set(a).count() < lattice.down_set(b).count(); });
  for (std::size_t i = 1; i < hinges.size(); ++i) {
    if (!lattice.less(hinges[i - 1], hinges[i])) {
      throw Error(ErrorCode::InternalInconsistency, "candidate hinges do not form a chain");
    }
  }
  const Element hinge = hinges.empty() ? lattice.top() : hinges.front();

  Bitset keep(lattice.size());
  keep.set();
  for (Element c : chain) keep.reset(c);
  PeelStep step{lattice.restrict(keep), lattice.label(hinge), {}};
  for (Element c : chain) step.chain.push_back(lattice.label(c));

  try {
    const auto& sub = step.sublattice;
    Lattice rebuilt = adjunct(sub, Lattice::chain(step.chain), sub.at(lattice.label(lattice.bottom())), sub.at(step.hinge));
    if (!same_labeled(rebuilt, lattice)) throw Error(ErrorCode::InternalInconsistency, "reassembly differs");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InternalInconsistency) throw;
    throw Error(ErrorCode::InternalInconsistency, std::string("reassembly failed: ") + e.what());
  }
  return step;
}

}  // namespace ldlat

#include "ldlat/treeiso.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ldlat/blocks.hpp"
#include "ldlat/zdg.hpp"

namespace ldlat {

namespace {

std::vector<Element> sorted_bottom_up(const Lattice& l, std::vector<Element> xs) {
  std::sort(xs.begin(), xs.end(),
            [&](Element a, Element b) { return l.down_set(a).count() < l.down_set(b).count(); });
  return xs;
}

bool has_adjunct_top(const Lattice& l) {
  return !l.is_trivial() && is_lower_dismantlable(l) && is_adjunct_element(l, l.top());
}

// Elements of the class of vertex v, bottom to top.
std::vector<Element> class_chain(const Lattice& l, const LabeledGraph& g, Vertex v) {
  std::vector<Element> out;
  for (Vertex w = 0; w < g.size(); ++w) {
    if (g.neighbors(w) == g.neighbors(v)) out.push_back(l.at(g.label(w)));
  }
  return sorted_bottom_up(l, std::move(out));
}

void check_phi(const Lattice& l1, const Lattice& l2, const LabeledGraph& g1, const LabeledGraph& g2,
               const IsoWitness& f) {
  if (!has_adjunct_top(l1) || !has_adjunct_top(l2)) {
    throw Error(ErrorCode::HypothesisViolated, "both lattices must be lower dismantlable with an adjunct top");
  }
  if (!is_graph_isomorphism(g1, g2, f)) {
    throw Error(ErrorCode::HypothesisViolated, "the map is not an isomorphism of the zero-divisor graphs");
  }
}

std::map<std::string, std::string> lift(const Lattice& l1, const Lattice& l2, const IsoWitness& phi) {
  const auto g1 = zero_divisor_graph(l1);
  const auto g2 = zero_divisor_graph(l2);
  std::map<std::string, std::string> psi{{l1.label(l1.bottom()), l2.label(l2.bottom())},
                                         {l1.label(l1.top()), l2.label(l2.top())}};

  bool only_top = true;
  for (Element b = 0; b < l1.size(); ++b) {
    if (b != l1.top() && is_adjunct_element(l1, b)) only_top = false;
  }
  if (only_top) {
    // Chains between 0 and 1; phi carries each part onto a part.
    std::set<std::string> done;
    for (Vertex v = 0; v < g1.size(); ++v) {
      if (done.count(g1.label(v))) continue;
      const auto c1 = class_chain(l1, g1, v);
      const auto c2 = class_chain(l2, g2, g2.at(phi(g1.label(v))));
      if (c1.size() != c2.size()) throw Error(ErrorCode::InternalInconsistency, "matched parts differ in size");
      for (std::size_t i = 0; i < c1.size(); ++i) {
        psi[l1.label(c1[i])] = l2.label(c2[i]);
        done.insert(l1.label(c1[i]));
      }
    }
    return psi;
  }

  // Candidate classes: no adjunct element; hinge = least adjunct above.
  struct Candidate {
    Element x;
    Element hinge;
    std::string first;
  };
  std::vector<Candidate> candidates;
  std::set<Bitset> seen;
  for (Vertex v = 0; v < g1.size(); ++v) {
    if (!seen.insert(g1.neighbors(v)).second || class_has_adjunct(g1, v)) continue;
    const Element x = l1.at(g1.label(v));
    std::optional<Element> hinge;
    for (Element b = 0; b < l1.size(); ++b) {
      if (b == l1.top() || !is_adjunct_element(l1, b) || !l1.less(x, b)) continue;
      if (!hinge || l1.less(b, *hinge)) hinge = b;
    }
    std::string first = g1.label(v);
    for (Vertex w = 0; w < g1.size(); ++w) {
      if (g1.neighbors(w) == g1.neighbors(v)) first = std::min(first, g1.label(w));
    }
    candidates.push_back({x, hinge.value_or(l1.top()), first});
  }
  const Candidate* pick = nullptr;
  for (const auto& c : candidates) {
    bool minimal = std::none_of(candidates.begin(), candidates.end(),
                                [&](const Candidate& o) { return l1.less(o.hinge, c.hinge); });
    if (minimal && (!pick || c.first < pick->first)) pick = &c;
  }
  if (!pick) throw Error(ErrorCode::InternalInconsistency, "no peelable class");

  const auto step1 = peel_decomposition(l1, pick->x);
  const auto step2 = peel_decomposition(l2, l2.at(phi(l1.label(pick->x))));
  if (step1.chain.size() != step2.chain.size()) {
    throw Error(ErrorCode::InternalInconsistency, "peeled chains differ in length");
  }
  if (step1.hinge != l1.label(l1.top()) && phi.map.count(step1.hinge) && phi(step1.hinge) != step2.hinge) {
    throw Error(ErrorCode::InternalInconsistency, "phi does not carry the hinge to the hinge");
  }

  IsoWitness sub{IsoWitness::Kind::GraphIso, {}};
  const auto h1 = zero_divisor_graph(step1.sublattice);
  for (const auto& label : h1.labels()) sub.map[label] = phi(label);
  const auto h2 = zero_divisor_graph(step2.sublattice);
  check_phi(step1.sublattice, step2.sublattice, h1, h2, sub);
  for (const auto& label : h1.labels()) {
    if (is_adjunct_element(step1.sublattice, step1.sublattice.at(label)) !=
        is_adjunct_element(step2.sublattice, step2.sublattice.at(sub(label)))) {
      sub = align_adjuncts(step1.sublattice, step2.sublattice, sub);
      break;
    }
  }

  psi = lift(step1.sublattice, step2.sublattice, sub);
  for (std::size_t i = 0; i < step1.chain.size(); ++i) psi[step1.chain[i]] = step2.chain[i];
  return psi;
}

}  // namespace

RootedTree tree_of_lattice(const Lattice& lattice) {
  if (lattice.is_trivial() || !is_lower_dismantlable(lattice)) {
    throw Error(ErrorCode::NotLowerDismantlable, "the lattice is not lower dismantlable");
  }
  std::vector<Node> node_of(lattice.size(), 0);
  std::vector<std::string> labels;
  for (Element x = 0; x < lattice.size(); ++x) {
    if (x == lattice.bottom()) continue;
    node_of[x] = static_cast<Node>(labels.size());
    labels.push_back(lattice.label(x));
  }
  std::vector<Node> parent(labels.size());
  for (Element x = 0; x < lattice.size(); ++x) {
    if (x == lattice.bottom()) continue;
    parent[node_of[x]] = x == lattice.top() ? node_of[x] : node_of[lattice.upper_covers(x).front()];
  }
  return RootedTree(std::move(labels), std::move(parent));
}

Lattice lattice_of_tree(const RootedTree& tree) {
  if (tree.find("0")) throw Error(ErrorCode::LabelClash, "the tree already has a node labeled '0'");
  std::vector<std::string> labels{"0"};
  for (const auto& l : tree.labels()) labels.push_back(l);
  std::vector<CoverPair> covers;
  for (Node v = 0; v < tree.size(); ++v) {
    if (v != tree.root()) covers.emplace_back(v + 1, tree.parent(v) + 1);
    if (tree.is_leaf(v)) covers.emplace_back(0, v + 1);
  }
  return Lattice(std::move(labels), std::move(covers));
}

LabeledGraph non_ancestor_graph(const RootedTree& tree) {
  std::vector<Node> nodes;
  std::vector<std::string> labels;
  for (Node v = 0; v < tree.size(); ++v) {
    if (v == tree.root()) continue;
    nodes.push_back(v);
    labels.push_back(tree.label(v));
  }
  LabeledGraph g(std::move(labels));
  for (Vertex i = 0; i < nodes.size(); ++i) {
    for (Vertex j = i + 1; j < nodes.size(); ++j) {
      if (!tree.is_ancestor(nodes[i], nodes[j]) && !tree.is_ancestor(nodes[j], nodes[i])) g.add_edge(i, j);
    }
  }
  return g;
}

std::optional<RootedTree> recognize(const LabeledGraph& graph) {
  if (graph.find(kSyntheticRoot)) {
    throw Error(ErrorCode::LabelClash, "the graph uses the reserved root label");
  }
  const auto n = static_cast<Vertex>(graph.size());
  // Ancestors strictly precede descendants in (|N|, label) order, so taking
  // the largest ancestor as parent cannot create a cycle.
  auto key_less = [&](Vertex u, Vertex v) {
    const auto du = graph.degree(u), dv = graph.degree(v);
    return du != dv ? du < dv : graph.label(u) < graph.label(v);
  };
  auto ancestor = [&](Vertex u, Vertex v) {
    if (u == v || graph.has_edge(u, v)) return false;
    const auto& nu = graph.neighbors(u);
    const auto& nv = graph.neighbors(v);
    if (nu == nv) return graph.label(u) < graph.label(v);
    return nu.is_proper_subset_of(nv);
  };

  std::vector<std::string> labels(graph.labels().begin(), graph.labels().end());
  labels.emplace_back(kSyntheticRoot);
  std::vector<Node> parent(n + 1, n);
  for (Vertex v = 0; v < n; ++v) {
    std::optional<Vertex> best;
    for (Vertex u = 0; u < n; ++u) {
      if (ancestor(u, v) && (!best || key_less(*best, u))) best = u;
    }
    if (best) parent[v] = *best;
  }
  RootedTree tree(std::move(labels), std::move(parent));
  if (!same_labeled(non_ancestor_graph(tree), graph)) return std::nullopt;
  return tree;
}

bool iso_decide(const LabeledGraph& g1, const LabeledGraph& g2) {
  const auto t1 = recognize(g1);
  if (!t1) throw Error(ErrorCode::NotInClass, "first graph is not a non-ancestor graph");
  const auto t2 = recognize(g2);
  if (!t2) throw Error(ErrorCode::NotInClass, "second graph is not a non-ancestor graph");
  return canonical_code(*t1) == canonical_code(*t2);
}

bool is_graph_isomorphism(const LabeledGraph& g1, const LabeledGraph& g2, const IsoWitness& f) {
  if (g1.size() != g2.size() || f.map.size() != g1.size()) return false;
  std::vector<Vertex> image(g1.size());
  Bitset hit(g2.size());
  for (Vertex v = 0; v < g1.size(); ++v) {
    auto it = f.map.find(g1.label(v));
    if (it == f.map.end()) return false;
    auto w = g2.find(it->second);
    if (!w || hit.test(*w)) return false;
    hit.set(*w);
    image[v] = *w;
  }
  for (Vertex u = 0; u < g1.size(); ++u) {
    for (Vertex v = u + 1; v < g1.size(); ++v) {
      if (g1.has_edge(u, v) != g2.has_edge(image[u], image[v])) return false;
    }
  }
  return true;
}

bool is_lattice_isomorphism(const Lattice& l1, const Lattice& l2, const IsoWitness& f) {
  if (l1.size() != l2.size() || f.map.size() != l1.size()) return false;
  std::vector<Element> image(l1.size());
  Bitset hit(l2.size());
  for (Element x = 0; x < l1.size(); ++x) {
    auto it = f.map.find(l1.label(x));
    if (it == f.map.end()) return false;
    auto y = l2.find(it->second);
    if (!y || hit.test(*y)) return false;
    hit.set(*y);
    image[x] = *y;
  }
  for (Element x = 0; x < l1.size(); ++x) {
    for (Element y = 0; y < l1.size(); ++y) {
      if (l1.leq(x, y) != l2.leq(image[x], image[y])) return false;
    }
  }
  return true;
}

AlignTrace align_adjuncts_traced(const Lattice& l1, const Lattice& l2, const IsoWitness& f) {
  const auto g1 = zero_divisor_graph(l1);
  const auto g2 = zero_divisor_graph(l2);
  check_phi(l1, l2, g1, g2, f);
  for (Vertex v = 0; v < g1.size(); ++v) {
    if (class_has_adjunct(g1, v) != class_has_adjunct(g2, g2.at(f(g1.label(v))))) {
      throw Error(ErrorCode::HypothesisViolated, "the map does not preserve classes holding an adjunct element");
    }
  }

  AlignTrace trace{f, {}};
  auto& phi = trace.phi.map;
  auto adj1 = [&](const std::string& s) { return is_adjunct_element(l1, l1.at(s)); };
  auto adj2 = [&](const std::string& s) { return is_adjunct_element(l2, l2.at(s)); };
  for (;;) {
    std::vector<std::string> mismatched;
    for (const auto& [from, to] : phi) {
      if (adj1(from) != adj2(to)) mismatched.push_back(from);
    }
    trace.mismatch_counts.push_back(mismatched.size());
    if (mismatched.empty()) break;

    // Labels iterate in order, so the smallest mismatched vertex that is
    // adjunct in L1 comes first among such vertices.
    auto x = std::find_if(mismatched.begin(), mismatched.end(), adj1);
    if (x == mismatched.end()) {
      throw Error(ErrorCode::HypothesisViolated, "an image is adjunct while no preimage is");
    }
    const Vertex vx = g1.at(*x);
    std::optional<std::string> partner;
    for (Vertex w = 0; w < g1.size() && !partner; ++w) {
      if (g1.neighbors(w) == g1.neighbors(vx) && adj2(phi.at(g1.label(w)))) partner = g1.label(w);
    }
    if (!partner) throw Error(ErrorCode::HypothesisViolated, "the image class holds no adjunct element");
    std::swap(phi.at(*x), phi.at(*partner));
    if (trace.mismatch_counts.size() > g1.size() + 1) {
      throw Error(ErrorCode::InternalInconsistency, "realignment does not terminate");
    }
  }
  return trace;
}

IsoWitness align_adjuncts(const Lattice& l1, const Lattice& l2, const IsoWitness& f) {
  return align_adjuncts_traced(l1, l2, f).phi;
}

IsoWitness lift_to_lattice_iso(const Lattice& l1, const Lattice& l2, const IsoWitness& phi) {
  const auto g1 = zero_divisor_graph(l1);
  const auto g2 = zero_divisor_graph(l2);
  check_phi(l1, l2, g1, g2, phi);
  for (const auto& [from, to] : phi.map) {
    if (is_adjunct_element(l1, l1.at(from)) != is_adjunct_element(l2, l2.at(to))) {
      throw Error(ErrorCode::HypothesisViolated, "phi does not preserve adjunct elements");
    }
  }

  IsoWitness psi{IsoWitness::Kind::LatticeIso, lift(l1, l2, phi)};
  if (!is_lattice_isomorphism(l1, l2, psi)) {
    throw Error(ErrorCode::InternalInconsistency, "the lifted map is not an order isomorphism");
  }
  for (const auto& [from, to] : phi.map) {
    if (is_adjunct_element(l1, l1.at(from)) && psi(from) != to) {
      throw Error(ErrorCode::InternalInconsistency, "the lifted map moves an adjunct element");
    }
  }
  return psi;
}

}  // namespace ldlat

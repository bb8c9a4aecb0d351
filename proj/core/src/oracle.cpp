#include "ldlat/oracle.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "ldlat/treeiso.hpp"

namespace ldlat::oracle {

namespace {

bool passes(const RootedTree& t, const EnumerationFilter& f) {
  return !f.require_root_degree_ge2 || t.root_has_two_branches();
}

std::vector<RootedTree> trees_of_codes(const std::set<std::string>& codes, const EnumerationFilter& filter) {
  std::vector<RootedTree> out;
  for (const auto& code : codes) {
    auto t = tree_from_code(code);
    if (passes(t, filter)) out.push_back(std::move(t));
  }
  return out;
}

struct PoolEntry {
  std::size_t size;
  const std::string* code;
};

void compose(const std::vector<PoolEntry>& pool, std::size_t start, std::size_t remaining,
             std::vector<const std::string*>& chosen, std::set<std::string>& out) {
  if (remaining == 0) {
    auto parts = chosen;
    std::sort(parts.begin(), parts.end(), [](auto* a, auto* b) { return *a < *b; });
    std::string code = "(";
    for (auto* p : parts) code += *p;
    out.insert(code + ")");
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    if (pool[i].size > remaining) continue;
    chosen.push_back(pool[i].code);
    compose(pool, i, remaining - pool[i].size, chosen, out);
    chosen.pop_back();
  }
}

std::vector<Vertex> by_label(const LabeledGraph& g) {
  std::vector<Vertex> order(g.size());
  for (Vertex i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.label(a) < g.label(b); });
  return order;
}

std::vector<std::size_t> neighbor_degrees(const LabeledGraph& g, Vertex v) {
  std::vector<std::size_t> out;
  const auto& nb = g.neighbors(v);
  for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) out.push_back(g.degree(static_cast<Vertex>(w)));
  std::sort(out.begin(), out.end());
  return out;
}

void charge(std::uint64_t& steps, std::uint64_t budget) {
  if (++steps > budget) throw Error(ErrorCode::BudgetExceeded, "isomorphism search exceeded its budget");
}

}  // namespace

RootedTree tree_from_code(const std::string& code) {
  std::vector<std::string> labels;
  std::vector<Node> parent;
  std::vector<Node> open;
  for (char ch : code) {
    if (ch == '(') {
      if (!labels.empty() && open.empty()) throw Error(ErrorCode::InvalidTree, "code has several roots");
      const auto id = static_cast<Node>(labels.size());
      labels.push_back(id == 0 ? "one" : "n" + std::to_string(id));
      parent.push_back(open.empty() ? id : open.back());
      open.push_back(id);
    } else if (ch == ')') {
      if (open.empty()) throw Error(ErrorCode::InvalidTree, "unbalanced code");
      open.pop_back();
    } else {
      throw Error(ErrorCode::InvalidTree, "code may only contain parentheses");
    }
  }
  if (!open.empty() || labels.empty()) throw Error(ErrorCode::InvalidTree, "unbalanced code");
  return RootedTree(std::move(labels), std::move(parent));
}

std::vector<RootedTree> enumerate_rooted_trees(const EnumerationFilter& filter) {
  std::vector<std::set<std::string>> by_size(filter.max_nodes + 1);
  if (filter.max_nodes >= 1) by_size[1] = {"()"};
  for (std::size_t n = 2; n <= filter.max_nodes; ++n) {
    std::vector<PoolEntry> pool;
    for (std::size_t k = 1; k < n; ++k) {
      for (const auto& c : by_size[k]) pool.push_back({k, &c});
    }
    std::vector<const std::string*> chosen;
    compose(pool, 0, n - 1, chosen, by_size[n]);
  }
  std::set<std::string> all;
  for (std::size_t n = std::max<std::size_t>(filter.min_nodes, 1); n <= filter.max_nodes; ++n) {
    all.insert(by_size[n].begin(), by_size[n].end());
  }
  return trees_of_codes(all, filter);
}

std::vector<RootedTree> enumerate_rooted_trees_by_parent_arrays(const EnumerationFilter& filter) {
  std::set<std::string> codes;
  for (std::size_t n = std::max<std::size_t>(filter.min_nodes, 1); n <= filter.max_nodes; ++n) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    std::vector<Node> parent(n, 0);
    for (;;) {
      codes.insert(canonical_code(RootedTree(labels, parent)).code);
      // Odometer over parent[i] in [0, i).
      std::size_t i = n;
      while (i > 1) {
        --i;
        if (++parent[i] < i) break;
        parent[i] = 0;
        if (i == 1) i = 0;
      }
      if (i <= 1) break;
    }
  }
  return trees_of_codes(codes, filter);
}

std::vector<Lattice> enumerate_lower_dismantlable(const EnumerationFilter& filter) {
  std::vector<Lattice> out;
  for (const auto& t : enumerate_rooted_trees(filter)) out.push_back(lattice_of_tree(t));
  return out;
}

void for_each_graph_isomorphism(const LabeledGraph& g1, const LabeledGraph& g2,
                                const std::function<bool(const IsoWitness&)>& visit, std::uint64_t budget) {
  const auto n = static_cast<Vertex>(g1.size());
  if (n != g2.size() || g1.edge_count() != g2.edge_count()) return;
  std::vector<std::vector<std::size_t>> sig1(n), sig2(n);
  for (Vertex v = 0; v < n; ++v) {
    sig1[v] = neighbor_degrees(g1, v);
    sig2[v] = neighbor_degrees(g2, v);
  }
  const auto targets = by_label(g2);
  std::vector<Vertex> image(n);
  std::vector<char> used(n, 0);
  std::uint64_t steps = 0;
  bool stop = false;

  std::function<void(Vertex)> extend = [&](Vertex v) {
    if (stop) return;
    if (v == n) {
      IsoWitness w{IsoWitness::Kind::GraphIso, {}};
      for (Vertex u = 0; u < n; ++u) w.map[g1.label(u)] = g2.label(image[u]);
      stop = !visit(w);
      return;
    }
    for (Vertex t : targets) {
      if (used[t] || sig1[v] != sig2[t]) continue;
      charge(steps, budget);
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = g1.has_edge(u, v) == g2.has_edge(image[u], t);
      if (!ok) continue;
      image[v] = t;
      used[t] = 1;
      extend(v + 1);
      used[t] = 0;
      if (stop) return;
    }
  };
  extend(0);
}

std::optional<IsoWitness> brute_graph_iso(const LabeledGraph& g1, const LabeledGraph& g2, std::uint64_t budget) {
  std::optional<IsoWitness> found;
  for_each_graph_isomorphism(
      g1, g2,
      [&](const IsoWitness& w) {
        found = w;
        return false;
      },
      budget);
  return found;
}

void for_each_lattice_isomorphism(const Lattice& l1, const Lattice& l2,
                                  const std::function<bool(const IsoWitness&)>& visit, std::uint64_t budget) {
  const auto n = static_cast<Element>(l1.size());
  if (n != l2.size()) return;
  auto rank_order = [](const Lattice& l) {
    std::vector<Element> order(l.size());
    for (Element i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](Element a, Element b) { return l.down_set(a).count() < l.down_set(b).count(); });
    return order;
  };
  const auto sources = rank_order(l1);
  auto targets = rank_order(l2);
  std::sort(targets.begin(), targets.end(), [&](Element a, Element b) { return l2.label(a) < l2.label(b); });

  auto signature = [](const Lattice& l, Element x) {
    return std::tuple(l.lower_covers(x).size(), l.upper_covers(x).size(), l.down_set(x).count(),
                      l.up_set(x).count());
  };
  std::vector<Element> image(n);
  std::vector<char> used(n, 0);
  std::uint64_t steps = 0;
  bool stop = false;

  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (stop) return;
    if (i == n) {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          if (l1.leq(x, y) != l2.leq(image[x], image[y])) return;
        }
      }
      IsoWitness w{IsoWitness::Kind::LatticeIso, {}};
      for (Element x = 0; x < n; ++x) w.map[l1.label(x)] = l2.label(image[x]);
      stop = !visit(w);
      return;
    }
    const Element x = sources[i];
    for (Element t : targets) {
      if (used[t] || signature(l1, x) != signature(l2, t)) continue;
      if ((x == l1.bottom()) != (t == l2.bottom()) || (x == l1.top()) != (t == l2.top())) continue;
      charge(steps, budget);
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const Element u = sources[j];
        ok = l1.covers(u, x) == l2.covers(image[u], t) && l1.covers(x, u) == l2.covers(t, image[u]);
      }
      if (!ok) continue;
      image[x] = t;
      used[t] = 1;
      extend(i + 1);
      used[t] = 0;
      if (stop) return;
    }
  };
  extend(0);
}

std::optional<IsoWitness> brute_lattice_iso(const Lattice& l1, const Lattice& l2, std::uint64_t budget) {
  std::optional<IsoWitness> found;
  for_each_lattice_isomorphism(
      l1, l2,
      [&](const IsoWitness& w) {
        found = w;
        return false;
      },
      budget);
  return found;
}

LabeledGraph cover_graph(const Lattice& lattice) {
  std::vector<std::string> labels(lattice.labels().begin(), lattice.labels().end());
  LabeledGraph g(std::move(labels));
  for (auto [a, b] : lattice.cover_pairs()) g.add_edge(a, b);
  return g;
}

}  // namespace ldlat::oracle

#include "ldlat/lattice.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace ldlat {

namespace {

// Among the set bits of `candidates`, the one of highest topological rank.
Element highest_ranked(const Bitset& candidates,
                       const std::vector<std::size_t>& rank) {
  Element best = 0;
  std::size_t best_rank = 0;
  bool found = false;
  for (auto i = candidates.find_first(); i != Bitset::npos;
       i = candidates.find_next(i)) {
    if (!found || rank[i] > best_rank) {
      best = static_cast<Element>(i);
      best_rank = rank[i];
      found = true;
    }
  }
  return best;
}

}  // namespace

Lattice::Lattice(std::vector<std::string> labels, std::vector<CoverPair> covers)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(ErrorCode::NotALattice, "a lattice needs at least one element");

  index_.reserve(n);
  for (Element i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorCode::DuplicateElement, "label '" + labels_[i] + "' used twice");
    }
  }

  lower_.assign(n, {});
  upper_.assign(n, {});
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  for (const auto& [u, v] : covers) {
    if (u >= n || v >= n) throw Error(ErrorCode::NoSuchElement, "cover references an element out of range");
    if (u == v) throw Error(ErrorCode::CycleDetected, "'" + labels_[u] + "' covers itself");
    upper_[u].push_back(v);
    lower_[v].push_back(u);
  }

  // Kahn's algorithm, smallest index first for determinism.
  std::vector<std::size_t> indeg(n);
  for (Element v = 0; v < n; ++v) indeg[v] = lower_[v].size();
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<Element> topo;
  topo.reserve(n);
  while (!ready.empty()) {
    Element u = ready.top();
    ready.pop();
    topo.push_back(u);
    for (Element v : upper_[u]) {
      if (--indeg[v] == 0) ready.push(v);
    }
  }
  if (topo.size() != n) throw Error(ErrorCode::CycleDetected, "the cover relation contains a cycle");

  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[topo[i]] = i;

  down_.assign(n, Bitset(n));
  for (Element v : topo) {
    down_[v].set(v);
    for (Element u : lower_[v]) down_[v] |= down_[u];
  }
  up_.assign(n, Bitset(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Element v = *it;
    up_[v].set(v);
    for (Element w : upper_[v]) up_[v] |= up_[w];
  }

  for (Element v = 0; v < n; ++v) {
    for (Element u : lower_[v]) {
      for (Element w : lower_[v]) {
        if (w != u && down_[w].test(u)) {
          throw Error(ErrorCode::NotReduced, "cover '" + labels_[u] + "' < '" + labels_[v] +
                                                 "' is implied by '" + labels_[w] + "'");
        }
      }
    }
  }

  std::vector<Element> minimal, maximal;
  for (Element v = 0; v < n; ++v) {
    if (lower_[v].empty()) minimal.push_back(v);
    if (upper_[v].empty()) maximal.push_back(v);
  }
  if (minimal.size() != 1) throw Error(ErrorCode::NotALattice, std::to_string(minimal.size()) + " minimal elements");
  if (maximal.size() != 1) throw Error(ErrorCode::NotALattice, std::to_string(maximal.size()) + " maximal elements");
  bottom_ = minimal.front();
  top_ = maximal.front();

  meet_.assign(n * n, 0);
  join_.assign(n * n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      Bitset common = down_[x] & down_[y];
      Element m = highest_ranked(common, rank);
      if (down_[m] != common) {
        throw Error(ErrorCode::NotALattice,
                    "'" + labels_[x] + "' and '" + labels_[y] + "' have no greatest lower bound");
      }
      meet_[x * n + y] = meet_[y * n + x] = m;

      Bitset upper_common = up_[x] & up_[y];
      // Least upper bound: lowest-ranked common upper bound.
      Element j = 0;
      bool found = false;
      for (auto i = upper_common.find_first(); i != Bitset::npos; i = upper_common.find_next(i)) {
        if (!found || rank[i] < rank[j]) {
          j = static_cast<Element>(i);
          found = true;
        }
      }
      if (up_[j] != upper_common) {
        throw Error(ErrorCode::NotALattice,
                    "'" + labels_[x] + "' and '" + labels_[y] + "' have no least upper bound");
      }
      join_[x * n + y] = join_[y * n + x] = j;
    }
  }
}

Lattice Lattice::from_covers(std::vector<std::string> labels, const std::vector<LabelPair>& covers) {
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) {
      throw Error(ErrorCode::DuplicateElement, "label '" + labels[i] + "' used twice");
    }
  }
  auto lookup = [&](const std::string& s) {
    auto it = index.find(s);
    if (it == index.end()) throw Error(ErrorCode::NoSuchElement, "unknown label '" + s + "'");
    return it->second;
  };
  std::vector<CoverPair> pairs;
  pairs.reserve(covers.size());
  for (const auto& [u, v] : covers) pairs.emplace_back(lookup(u), lookup(v));
  return Lattice(std::move(labels), std::move(pairs));
}

Lattice Lattice::chain(std::vector<std::string> labels) {
  std::vector<CoverPair> covers;
  for (Element i = 1; i < labels.size(); ++i) covers.emplace_back(i - 1, i);
  return Lattice(std::move(labels), std::move(covers));
}

std::optional<Element> Lattice::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element Lattice::at(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw Error(ErrorCode::NoSuchElement, "no element labelled '" + std::string(label) + "'");
}

bool Lattice::covers(Element lower, Element upper) const {
  const auto& lc = lower_[upper];
  return std::find(lc.begin(), lc.end(), lower) != lc.end();
}

std::vector<CoverPair> Lattice::cover_pairs() const {
  std::vector<CoverPair> out;
  for (Element v = 0; v < size(); ++v) {
    for (Element u : lower_[v]) out.emplace_back(u, v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LabelPair> Lattice::cover_label_pairs() const {
  std::vector<LabelPair> out;
  for (const auto& [u, v] : cover_pairs()) out.emplace_back(labels_[u], labels_[v]);
  std::sort(out.begin(), out.end());
  return out;
}

bool Lattice::is_chain() const {
  for (Element v = 0; v < size(); ++v) {
    if (lower_[v].size() > 1 || upper_[v].size() > 1) return false;
  }
  return true;
}

bool Lattice::is_atom(Element x) const { return x != bottom_ && covers(bottom_, x); }

Lattice Lattice::restrict(const Bitset& keep) const {
  const std::size_t n = size();
  std::vector<Element> old_of_new;
  std::vector<Element> new_of_old(n, 0);
  for (auto i = keep.find_first(); i != Bitset::npos; i = keep.find_next(i)) {
    new_of_old[i] = static_cast<Element>(old_of_new.size());
    old_of_new.push_back(static_cast<Element>(i));
  }
  std::vector<std::string> labels;
  labels.reserve(old_of_new.size());
  for (Element x : old_of_new) labels.push_back(labels_[x]);

  // x < y is a cover in the restriction iff nothing kept lies strictly between.
  std::vector<CoverPair> covers;
  for (Element x : old_of_new) {
    for (Element y : old_of_new) {
      if (!less(x, y)) continue;
      Bitset between = up_[x] & down_[y] & keep;
      if (between.count() == 2) covers.emplace_back(new_of_old[x], new_of_old[y]);
    }
  }
  return Lattice(std::move(labels), std::move(covers));
}

bool same_labeled(const Lattice& a, const Lattice& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::string> la(a.labels().begin(), a.labels().end());
  std::vector<std::string> lb(b.labels().begin(), b.labels().end());
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  return la == lb && a.cover_label_pairs() == b.cover_label_pairs();
}

ElementClassification classify(const Lattice& lattice) {
  ElementClassification out;
  const auto n = static_cast<Element>(lattice.size());
  out.lower_cover_count.resize(n);
  out.upper_cover_count.resize(n);
  for (Element x = 0; x < n; ++x) {
    const auto lc = lattice.lower_covers(x).size();
    const auto uc = lattice.upper_covers(x).size();
    out.lower_cover_count[x] = lc;
    out.upper_cover_count[x] = uc;
    if (lc <= 1) out.join_irreducible.push_back(x);
    if (uc <= 1) out.meet_irreducible.push_back(x);
    if (lc == 1 && uc == 1) out.doubly_irreducible.push_back(x);
    if (lattice.is_atom(x)) out.atoms.push_back(x);
    if (lc >= 2) out.adjunct_elements.push_back(x);
  }
  return out;
}

Lattice adjunct(const Lattice& host, const Lattice& inserted, Element a, Element b) {
  if (a >= host.size() || b >= host.size()) throw Error(ErrorCode::NoSuchElement, "adjunct pair out of range");
  if (!host.less(a, b)) {
    throw Error(ErrorCode::PairNotAdjunctable, "'" + host.label(a) + "' is not below '" + host.label(b) + "'");
  }
  if (host.covers(a, b)) {
    throw Error(ErrorCode::PairNotAdjunctable, "'" + host.label(a) + "' is covered by '" + host.label(b) + "'");
  }
  std::vector<std::string> labels(host.labels().begin(), host.labels().end());
  for (const auto& l : inserted.labels()) {
    if (host.find(l)) throw Error(ErrorCode::LabelClash, "label '" + l + "' occurs in both lattices");
    labels.push_back(l);
  }
  const auto offset = static_cast<Element>(host.size());
  std::vector<CoverPair> covers = host.cover_pairs();
  for (const auto& [u, v] : inserted.cover_pairs()) covers.emplace_back(u + offset, v + offset);
  covers.emplace_back(a, inserted.bottom() + offset);
  covers.emplace_back(inserted.top() + offset, b);
  return Lattice(std::move(labels), std::move(covers));
}

bool is_lower_dismantlable(const Lattice& lattice) {
  if (lattice.is_trivial()) throw Error(ErrorCode::TrivialLattice, "lower dismantlability needs 0 != 1");
  for (Element x = 0; x < lattice.size(); ++x) {
    if (x == lattice.bottom() || x == lattice.top()) continue;
    if (lattice.upper_covers(x).size() != 1) return false;
  }
  return true;
}

AdjunctExpr adjunct_representation(const Lattice& lattice, std::string name) {
  if (!is_lower_dismantlable(lattice)) {
    throw Error(ErrorCode::NotLowerDismantlable, "lattice has a nonzero meet-reducible element");
  }
  const auto n = static_cast<Element>(lattice.size());
  const Element bottom = lattice.bottom();
  const Element top = lattice.top();

  // Tree on L \ {0}: children are the nonzero lower covers.
  std::vector<std::vector<Element>> children(n);
  std::vector<std::size_t> depth(n, 0);
  for (Element x = 0; x < n; ++x) {
    if (x == bottom) continue;
    for (Element c : lattice.lower_covers(x)) {
      if (c != bottom) children[x].push_back(c);
    }
  }
  {
    std::vector<Element> stack{top};
    while (!stack.empty()) {
      Element v = stack.back();
      stack.pop_back();
      for (Element c : children[v]) {
        depth[c] = depth[v] + 1;
        stack.push_back(c);
      }
    }
  }
  auto label_less = [&](Element x, Element y) { return lattice.label(x) < lattice.label(y); };

  // Path hanging below c (c itself, then its single descendants), top-down.
  auto hanging_path = [&](Element c) -> std::optional<std::vector<Element>> {
    std::vector<Element> path{c};
    while (!children[path.back()].empty()) {
      if (children[path.back()].size() != 1) return std::nullopt;
      path.push_back(children[path.back()].front());
    }
    return path;
  };

  std::vector<Adjunction> stripped;
  for (;;) {
    std::optional<Element> node;
    for (Element v = 0; v < n; ++v) {
      if (v == bottom || children[v].size() < 2) continue;
      if (!node || depth[v] > depth[*node] || (depth[v] == depth[*node] && label_less(v, *node))) node = v;
    }
    if (!node) break;

    // The deepest branching element has only paths below it. Strip the
    // longest; among equal lengths strip the largest label so the smallest
    // stays on the remaining chain.
    std::optional<Element> pick;
    std::size_t pick_len = 0;
    for (Element c : children[*node]) {
      auto path = hanging_path(c);
      if (!path) continue;
      if (!pick || path->size() > pick_len || (path->size() == pick_len && label_less(*pick, c))) {
        pick = c;
        pick_len = path->size();
      }
    }
    auto path = *hanging_path(*pick);
    Adjunction adj;
    adj.lower = lattice.label(bottom);
    adj.upper = lattice.label(*node);
    for (auto it = path.rbegin(); it != path.rend(); ++it) adj.chain.push_back(lattice.label(*it));
    stripped.push_back(std::move(adj));
    auto& ch = children[*node];
    ch.erase(std::find(ch.begin(), ch.end(), *pick));
  }

  AdjunctExpr expr;
  expr.name = std::move(name);
  std::vector<Element> spine{top};
  while (!children[spine.back()].empty()) spine.push_back(children[spine.back()].front());
  expr.base.push_back(lattice.label(bottom));
  for (auto it = spine.rbegin(); it != spine.rend(); ++it) expr.base.push_back(lattice.label(*it));
  expr.adjunctions.assign(stripped.rbegin(), stripped.rend());
  return expr;
}

}  // namespace ldlat

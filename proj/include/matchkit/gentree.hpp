#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matchkit/containment.hpp"
#include "matchkit/enumeration.hpp"
#include "matchkit/limits.hpp"
#include "matchkit/prefix_graph.hpp"

namespace matchkit {

/// TM: tree of prefixes of M_132-avoiders. TC: tree of prefixes of
/// avoiders of the chain family.
enum class TreeKind { TM, TC };

inline std::string to_string(TreeKind k) { return k == TreeKind::TM ? "TM" : "TC"; }

inline TreeKind parse_tree_kind(std::string_view s) {
  if (s == "TM" || s == "tm" || s == "M") return TreeKind::TM;
  if (s == "TC" || s == "tc" || s == "C") return TreeKind::TC;
  throw ParseError("tree kind must be TM or TC, got '" + std::string(s) + "'");
}

/// Which stub relation produced a StubBlocks value.
enum class BlockRelation {
  SharedCover,   // ~ : both stubs lie under one edge (closed transitively)
  CrossingChain  // ≈ : every vertical cut between them meets an edge
};

/// Ordered partition of the stubs into contiguous runs.
struct StubBlocks {
  BlockRelation relation = BlockRelation::SharedCover;
  std::vector<std::vector<int>> blocks;

  std::size_t count() const noexcept { return blocks.size(); }

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> out;
    for (const auto& b : blocks) out.push_back(b.size());
    return out;
  }

  /// Index of the block holding stub x, or count() if x is not a stub.
  std::size_t block_of(int x) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (std::find(blocks[i].begin(), blocks[i].end(), x) != blocks[i].end())
        return i;
    return blocks.size();
  }

  friend bool operator==(const StubBlocks&, const StubBlocks&) = default;
};

namespace detail {

inline StubBlocks runs_from_links(BlockRelation rel, const std::vector<int>& stubs,
                                  const std::vector<bool>& linked_to_next) {
  StubBlocks out;
  out.relation = rel;
  for (std::size_t i = 0; i < stubs.size(); ++i) {
    if (i == 0 || !linked_to_next[i - 1]) out.blocks.emplace_back();
    out.blocks.back().push_back(stubs[i]);
  }
  return out;
}

}  // namespace detail

/// Blocks of the transitive closure of u ~ v :<=> some closed edge {x,y}
/// has x < u < y and x < v < y.
inline StubBlocks sim_blocks(const PrefixGraph& g) {
  const auto stubs = g.stubs();
  const std::size_t t = stubs.size();
  std::vector<std::size_t> parent(t);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const auto& e : g.closed_edges()) {
    std::size_t first = t;
    for (std::size_t i = 0; i < t; ++i) {
      if (stubs[i] <= e.left || stubs[i] >= e.right) continue;
      if (first == t)
        first = i;
      else
        parent[find(i)] = find(first);
    }
  }
  std::vector<bool> link(t > 0 ? t - 1 : 0, false);
  for (std::size_t i = 0; i + 1 < t; ++i) link[i] = find(i) == find(i + 1);
  auto blocks = detail::runs_from_links(BlockRelation::SharedCover, stubs, link);
  // Runs of equal roots must account for every class.
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < t; ++i) roots.push_back(find(i));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  if (roots.size() != blocks.count())
    throw std::logic_error("~ blocks are not contiguous");
  return blocks;
}

/// Blocks of ≈: consecutive stubs u < v share a block iff every gap g with
/// u <= g < v is spanned by a closed edge {a,b} with a <= g < b.
inline StubBlocks approx_blocks(const PrefixGraph& g) {
  const int k = g.k();
  std::vector<int> delta(k + 2, 0);
  for (const auto& e : g.closed_edges()) {
    ++delta[e.left];
    --delta[e.right];
  }
  std::vector<int> cover(k + 1, 0);  // cover[g] for gap between g and g+1
  int running = 0;
  for (int gap = 1; gap <= k; ++gap) {
    running += delta[gap];
    cover[gap] = running;
  }
  const auto stubs = g.stubs();
  std::vector<bool> link(stubs.empty() ? 0 : stubs.size() - 1, false);
  for (std::size_t i = 0; i + 1 < stubs.size(); ++i) {
    bool spanned = true;
    for (int gap = stubs[i]; gap < stubs[i + 1] && spanned; ++gap)
      spanned = cover[gap] > 0;
    link[i] = spanned;
  }
  return detail::runs_from_links(BlockRelation::CrossingChain, stubs, link);
}

inline StubBlocks blocks_for(const PrefixGraph& g, TreeKind kind) {
  return kind == TreeKind::TM ? sim_blocks(g) : approx_blocks(g);
}

namespace detail {

// Five vertices x1<..<x5: x2 a stub, {x1,x4} and {x3,x5} edges.
inline const PrefixGraph& tm_forbidden_prefix() {
  static const PrefixGraph p = prefix(permutational("132"), 5);
  return p;
}

inline const PatternSet& m132_set() {
  static const PatternSet s = PatternSet::single(permutational("132"), "132");
  return s;
}

inline const PatternSet& chain_set() {
  static const PatternSet s = PatternSet::chain_family();
  return s;
}

inline std::vector<PrefixGraph> children_unchecked(const PrefixGraph& g,
                                                   TreeKind kind,
                                                   const StubBlocks& blocks) {
  if (g.complete()) return {};
  const int next = g.k() + 1;
  if (g.base().is_up(next)) return {g.with_stub()};
  std::vector<PrefixGraph> out;
  out.reserve(blocks.count());
  for (const auto& b : blocks.blocks)
    out.push_back(g.with_edge_to(kind == TreeKind::TM ? b.front() : b.back()));
  return out;
}

}  // namespace detail

/// Node test for the generating trees. For TM: consistent with the base,
/// avoids M_132, and has no x1<..<x5 with x2 a stub and {x1,x4}, {x3,x5}
/// edges. For TC: consistent, avoids every C_p, and contains no copy of
/// C_p[2p-1] whose vertex 2p-3 is a stub.
inline bool is_node(const PrefixGraph& g, TreeKind kind) {
  if (!g.is_consistent()) return false;
  if (kind == TreeKind::TM) {
    return avoids(g, detail::m132_set()) &&
           !contains(g, detail::tm_forbidden_prefix());
  }
  if (!avoids(g, detail::chain_set())) return false;
  for (int p = 3; 2 * p - 1 <= g.k(); ++p)
    if (contains(g, prefix(chain(p), 2 * p - 1))) return false;
  return true;
}

/// One child when k+1 is an l-vertex; otherwise one child per block, joining
/// k+1 to the block minimum (TM) or maximum (TC), in block order.
inline std::vector<PrefixGraph> children(const PrefixGraph& g, TreeKind kind) {
  if (!is_node(g, kind))
    throw PreconditionError("not a node of " + to_string(kind) + ": " + g.str());
  return detail::children_unchecked(g, kind, blocks_for(g, kind));
}

/// Extends a node to a full matching: each new r-vertex takes the smallest
/// open stub (TM) or the biggest (TC).
inline Matching greedy_completion(const PrefixGraph& g, TreeKind kind) {
  if (!is_node(g, kind))
    throw PreconditionError("not a node of " + to_string(kind) + ": " + g.str());
  PrefixGraph cur = g;
  while (!cur.complete()) {
    const int next = cur.k() + 1;
    if (cur.base().is_up(next)) {
      cur = cur.with_stub();
    } else {
      auto stubs = cur.stubs();
      cur = cur.with_edge_to(kind == TreeKind::TM ? stubs.front() : stubs.back());
    }
  }
  return cur.to_matching();
}

struct TreeNode {
  PrefixGraph graph;
  StubBlocks blocks;
  std::size_t parent = 0;              // index in the previous level
  std::vector<std::size_t> children;   // indices in the next level
};

/// A generating tree stored level by level. Level k holds the nodes with k
/// vertices; the root is G[1] (or the empty graph when m = 0).
class GeneratingTree {
 public:
  GeneratingTree(DyckWord w, TreeKind kind) : w_(std::move(w)), kind_(kind) {}

  const DyckWord& base() const noexcept { return w_; }
  TreeKind kind() const noexcept { return kind_; }

  int root_level() const noexcept { return w_.empty() ? 0 : 1; }
  int leaf_level() const noexcept { return w_.length(); }

  const std::vector<TreeNode>& level(int k) const { return levels_.at(k); }
  const TreeNode& root() const { return levels_.at(root_level()).front(); }
  const std::vector<TreeNode>& leaves() const { return levels_.at(leaf_level()); }

  Count leaf_count() const { return leaves().size(); }
  std::size_t node_count() const {
    std::size_t c = 0;
    for (const auto& l : levels_) c += l.size();
    return c;
  }

  std::vector<Matching> leaf_matchings() const {
    std::vector<Matching> out;
    for (const auto& n : leaves()) out.push_back(n.graph.to_matching());
    return out;
  }

 private:
  friend GeneratingTree build_tree(const DyckWord&, TreeKind, const Limits&);

  DyckWord w_;
  TreeKind kind_;
  std::vector<std::vector<TreeNode>> levels_;
};

inline GeneratingTree build_tree(const DyckWord& w, TreeKind kind,
                                 const Limits& limits = {}) {
  limits.check_tree(w.semilength());
  GeneratingTree tree(w, kind);
  const int n = w.length();
  tree.levels_.resize(n + 1);
  PrefixGraph root(std::make_shared<const DyckWord>(w), {});
  if (n > 0) root = root.with_stub();
  auto root_blocks = blocks_for(root, kind);
  tree.levels_[tree.root_level()].push_back({std::move(root), std::move(root_blocks), 0, {}});
  for (int k = tree.root_level(); k < n; ++k) {
    auto& cur = tree.levels_[k];
    auto& next = tree.levels_[k + 1];
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (auto& child : detail::children_unchecked(cur[i].graph, kind, cur[i].blocks)) {
        auto b = blocks_for(child, kind);
        cur[i].children.push_back(next.size());
        next.push_back({std::move(child), std::move(b), i, {}});
      }
    }
  }
  return tree;
}

inline Count leaf_count(const DyckWord& w, TreeKind kind, const Limits& limits = {}) {
  return build_tree(w, kind, limits).leaf_count();
}

/// One mapped pair (G, phi(G)) and the block-size sequences of ~ on G and
/// ≈ on phi(G).
struct PhiPair {
  int level = 0;
  std::size_t tm_index = 0;
  std::size_t tc_index = 0;
  std::vector<std::size_t> tm_sizes;
  std::vector<std::size_t> tc_sizes;
};

struct PhiWitness {
  DyckWord base;
  std::vector<PhiPair> pairs;
  std::vector<std::pair<Matching, Matching>> leaf_map;  // M_132-avoider -> image
  bool node_bijection = false;  // every level mapped one-to-one and onto

  bool sizes_agree() const {
    return std::all_of(pairs.begin(), pairs.end(),
                       [](const PhiPair& p) { return p.tm_sizes == p.tc_sizes; });
  }
};

/// Level-by-level pairing of TM and TC: roots to roots, the i-th child to
/// the i-th child. Throws std::logic_error if paired nodes disagree on
/// their child count.
inline PhiWitness phi(const DyckWord& w, const Limits& limits = {}) {
  const auto tm = build_tree(w, TreeKind::TM, limits);
  const auto tc = build_tree(w, TreeKind::TC, limits);
  PhiWitness out;
  out.base = w;
  out.node_bijection = true;
  const int n = w.length();
  std::vector<std::size_t> image{0};  // image[i]: TC index of TM node i
  for (int k = tm.root_level(); k <= n; ++k) {
    const auto& gl = tm.level(k);
    const auto& hl = tc.level(k);
    if (gl.size() != hl.size()) out.node_bijection = false;
    std::vector<bool> hit(hl.size(), false);
    std::vector<std::size_t> next_image(k < n ? tm.level(k + 1).size() : 0);
    for (std::size_t i = 0; i < gl.size(); ++i) {
      const auto& g = gl[i];
      const auto& h = hl.at(image[i]);
      if (hit[image[i]]) out.node_bijection = false;
      hit[image[i]] = true;
      out.pairs.push_back({k, i, image[i], g.blocks.sizes(), h.blocks.sizes()});
      if (g.children.size() != h.children.size())
        throw std::logic_error("phi: child count mismatch at level " +
                               std::to_string(k) + " for " + g.graph.str() +
                               " vs " + h.graph.str());
      for (std::size_t c = 0; c < g.children.size(); ++c)
        next_image[g.children[c]] = h.children[c];
      if (k == n)
        out.leaf_map.emplace_back(g.graph.to_matching(), h.graph.to_matching());
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
      out.node_bijection = false;
    image = std::move(next_image);
  }
  return out;
}

}  // namespace matchkit

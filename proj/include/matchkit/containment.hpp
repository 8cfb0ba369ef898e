#pragma once

#include <string>
#include <utility>
#include <vector>

#include "matchkit/matching.hpp"
#include "matchkit/prefix_graph.hpp"

namespace matchkit {

namespace detail {

// An edge {left, right}, or a stub when right == 0.
struct Item {
  int left = 0;
  int right = 0;
  bool stub() const { return right == 0; }
};

inline std::vector<Item> items_of(const Matching& m) {
  std::vector<Item> out;
  for (const auto& e : m.edges()) out.push_back({e.left, e.right});
  return out;
}

inline std::vector<Item> items_of(const PrefixGraph& g) {
  std::vector<Item> out;
  for (int v = 1; v <= g.k(); ++v) {
    int p = g.partner(v);
    if (p == 0)
      out.push_back({v, 0});
    else if (p > v)
      out.push_back({v, p});
  }
  return out;
}

inline int sign(int x) { return (x > 0) - (x < 0); }

// Order-pattern embedding of `pattern` items into `host` items. Both lists
// are sorted by left endpoint. A monotone injection sends the i-th pattern
// item to a host item with increasing left endpoints, so it suffices to
// choose an increasing index sequence and compare the relative order of
// every pair of endpoints.
class Embedder {
 public:
  Embedder(const std::vector<Item>& host, const std::vector<Item>& pattern)
      : host_(host), pattern_(pattern), chosen_(pattern.size()) {}

  bool run() {
    if (pattern_.size() > host_.size()) return false;
    return extend(0, 0);
  }

 private:
  bool fits(std::size_t t, const Item& h) const {
    const Item& p = pattern_[t];
    if (h.stub() != p.stub()) return false;
    for (std::size_t s = 0; s < t; ++s) {
      const Item& hs = host_[chosen_[s]];
      const Item& ps = pattern_[s];
      if (hs.stub()) continue;  // later items sit right of a stub already
      if (sign(h.left - hs.right) != sign(p.left - ps.right)) return false;
      if (!h.stub() && sign(h.right - hs.right) != sign(p.right - ps.right))
        return false;
    }
    return true;
  }

  bool extend(std::size_t t, std::size_t start) {
    if (t == pattern_.size()) return true;
    const std::size_t remaining = pattern_.size() - t;
    for (std::size_t i = start; i + remaining <= host_.size(); ++i) {
      if (!fits(t, host_[i])) continue;
      chosen_[t] = i;
      if (extend(t + 1, i + 1)) return true;
    }
    return false;
  }

  const std::vector<Item>& host_;
  const std::vector<Item>& pattern_;
  std::vector<std::size_t> chosen_;
};

}  // namespace detail

/// True iff some |E(pattern)| edges of `host` have, on their endpoints in
/// increasing order, the same order pattern as `pattern`.
inline bool contains(const Matching& host, const Matching& pattern) {
  if (pattern.size() > host.size()) return false;
  auto h = detail::items_of(host);
  auto p = detail::items_of(pattern);
  return detail::Embedder(h, p).run();
}

/// Embedding of one prefix graph in another: edges go to closed edges,
/// stubs to stubs, all vertex order preserved. A pattern without stubs
/// makes this ordinary matching containment restricted to closed edges.
inline bool contains(const PrefixGraph& host, const PrefixGraph& pattern) {
  auto h = detail::items_of(host);
  auto p = detail::items_of(pattern);
  return detail::Embedder(h, p).run();
}

inline bool contains(const PrefixGraph& host, const Matching& pattern) {
  auto h = detail::items_of(host);
  auto p = detail::items_of(pattern);
  return detail::Embedder(h, p).run();
}

/// A finite list of patterns, optionally together with the infinite chain
/// family {C_3, C_4, ...}. The family is expanded lazily up to the size of
/// whatever it is tested against.
class PatternSet {
 public:
  PatternSet() = default;

  static PatternSet single(Matching p, std::string label = {}) {
    PatternSet s;
    s.add(std::move(p), std::move(label));
    return s;
  }

  static PatternSet chain_family() {
    PatternSet s;
    s.add_chain_family();
    return s;
  }

  PatternSet& add(Matching p, std::string label = {}) {
    if (label.empty()) label = "[" + p.str() + "]";
    labels_.push_back(std::move(label));
    patterns_.push_back(std::move(p));
    return *this;
  }

  PatternSet& add_chain_family() {
    if (!chain_family_) {
      chain_family_ = true;
      labels_.push_back("Cfam");
    }
    return *this;
  }

  bool has_chain_family() const noexcept { return chain_family_; }
  bool empty() const noexcept { return patterns_.empty() && !chain_family_; }
  const std::vector<Matching>& explicit_patterns() const noexcept {
    return patterns_;
  }

  /// Concrete patterns that can embed into a matching with `max_edges` edges.
  std::vector<Matching> expand(int max_edges) const {
    std::vector<Matching> out;
    for (const auto& p : patterns_)
      if (p.size() <= max_edges) out.push_back(p);
    if (chain_family_)
      for (int k = 3; k <= max_edges; ++k) out.push_back(chain(k));
    return out;
  }

  /// Labels joined with '+', in insertion order.
  std::string label() const {
    if (labels_.empty()) return "none";
    std::string s;
    for (const auto& l : labels_) {
      if (!s.empty()) s += '+';
      s += l;
    }
    return s;
  }

 private:
  std::vector<Matching> patterns_;
  std::vector<std::string> labels_;
  bool chain_family_ = false;
};

inline bool avoids(const Matching& m, const PatternSet& patterns) {
  for (const auto& p : patterns.expand(m.size()))
    if (contains(m, p)) return false;
  return true;
}

inline bool avoids(const PrefixGraph& g, const PatternSet& patterns) {
  const int closed = static_cast<int>(g.closed_edges().size());
  for (const auto& p : patterns.expand(closed))
    if (contains(g, p)) return false;
  return true;
}

}  // namespace matchkit

#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchkit/containment.hpp"
#include "matchkit/dyck_word.hpp"
#include "matchkit/enumeration.hpp"
#include "matchkit/limits.hpp"
#include "matchkit/matching.hpp"

namespace matchkit {

/// Partner pairing of a Dyck path: the i-th up-step and the j-th down-step
/// are partners when a tunnel joins them. Indices are 1-based and count up-
/// and down-steps separately, left to right.
struct TunnelTable {
  std::vector<int> down_of_up;   // [i-1] -> j
  std::vector<int> up_of_down;   // [j-1] -> i
  std::vector<int> up_steps;     // [i-1] -> step position of u_i
  std::vector<int> down_steps;   // [j-1] -> step position of d_j
  std::vector<int> heights;      // path heights, size 2m+1

  int size() const noexcept { return static_cast<int>(down_of_up.size()); }

  /// Height of the tunnel starting at u_i (midpoint height of the step).
  double tunnel_height(int i) const {
    return heights[up_steps[i - 1] - 1] + 0.5;
  }
};

/// Stack sweep: push up-steps, each down-step pops its partner.
inline TunnelTable tunnels(const DyckWord& p) {
  TunnelTable t;
  const int m = p.semilength();
  t.down_of_up.assign(m, 0);
  t.up_of_down.assign(m, 0);
  t.heights = p.heights();
  std::vector<int> stack;
  int ups = 0;
  int downs = 0;
  for (int pos = 1; pos <= p.length(); ++pos) {
    if (p.is_up(pos)) {
      stack.push_back(++ups);
      t.up_steps.push_back(pos);
    } else {
      int i = stack.back();
      stack.pop_back();
      ++downs;
      t.down_of_up[i - 1] = downs;
      t.up_of_down[downs - 1] = i;
      t.down_steps.push_back(pos);
    }
  }
  return t;
}

/// True iff P never rises above W.
inline bool dominates(const DyckWord& upper, const DyckWord& lower) {
  if (upper.length() != lower.length())
    throw PreconditionError("paths of different lengths");
  auto hu = upper.heights();
  auto hl = lower.heights();
  for (std::size_t i = 0; i < hu.size(); ++i)
    if (hl[i] > hu[i]) return false;
  return true;
}

/// M(W,P): the matching with base W joining the i-th l-vertex to the j-th
/// r-vertex whenever u_i(P) and d_j(P) are partners.
inline Matching matching_from_pair(const DyckWord& upper, const DyckWord& lower) {
  if (!dominates(upper, lower))
    throw PreconditionError("lower path " + lower.str() + " rises above " +
                            upper.str());
  const auto x = upper.up_positions();
  const auto y = upper.down_positions();
  const auto t = tunnels(lower);
  std::vector<Edge> edges;
  for (int i = 1; i <= t.size(); ++i) {
    Edge e{x[i - 1], y[t.down_of_up[i - 1] - 1]};
    if (e.left >= e.right)
      throw std::logic_error("tunnel pairing produced a backwards edge " +
                             e.str());
    edges.push_back(e);
  }
  return Matching::from_edges(edges);
}

/// Decomposition around the edge {1, y_k} at vertex 1.
struct ShortLongSplit {
  Edge pivot;
  int k = 0;  // y_k is the k-th r-vertex
  std::vector<Edge> short_edges;  // r-endpoint < y_k
  std::vector<Edge> long_edges;   // r-endpoint > y_k
  bool short_precede_long = true; // every short l-vertex < every long one
};

inline ShortLongSplit split_short_long(const Matching& m) {
  if (m.empty()) throw PreconditionError("split needs a nonempty matching");
  ShortLongSplit s;
  const int yk = m.partner(1);
  s.pivot = {1, yk};
  for (int v = 1; v <= yk; ++v) s.k += m.is_left(v) ? 0 : 1;
  int max_short_left = 0;
  int min_long_left = m.vertex_count() + 1;
  for (const auto& e : m.edges()) {
    if (e.left == 1) continue;
    if (e.right < yk) {
      s.short_edges.push_back(e);
      max_short_left = std::max(max_short_left, e.left);
    } else {
      s.long_edges.push_back(e);
      min_long_left = std::min(min_long_left, e.left);
    }
  }
  s.short_precede_long = max_short_left < min_long_left;
  return s;
}

/// M_231-avoidance through the recursive short/long characterization.
/// Independent of contains(); exists to cross-check it.
inline bool avoids231_by_split(const Matching& m) {
  if (m.size() <= 1) return true;
  auto s = split_short_long(m);
  return s.short_precede_long && avoids231_by_split(induced(s.short_edges)) &&
         avoids231_by_split(induced(s.long_edges));
}

namespace detail {

inline DyckWord path_from_avoider(const Matching& m) {
  if (m.empty()) return DyckWord{};
  auto s = split_short_long(m);
  const auto ms = induced(s.short_edges);
  const auto ml = induced(s.long_edges);
  const auto ps = path_from_avoider(ms);
  const auto pl = path_from_avoider(ml);

  auto glue = [](const DyckWord& a, const DyckWord& b) {
    std::vector<std::uint8_t> bits{0};
    bits.insert(bits.end(), a.bits().begin(), a.bits().end());
    bits.push_back(1);
    bits.insert(bits.end(), b.bits().begin(), b.bits().end());
    return DyckWord::from_bits(std::move(bits));
  };
  // 0 w_S 1 w_L must stay under W for an avoider.
  if (!dominates(base(m), glue(base(ms), base(ml))))
    throw std::logic_error("W_X rises above W for " + m.str());
  return glue(ps, pl);
}

}  // namespace detail

/// The unique P under W = base(M) with M(W,P) = M. Requires M to avoid
/// M_231.
inline DyckWord path_from_matching(const Matching& m) {
  if (contains(m, permutational("231")))
    throw PreconditionError(m.str() + " contains M_231");
  auto p = detail::path_from_avoider(m);
  const auto w = base(m);
  if (!dominates(w, p) || matching_from_pair(w, p) != m)
    throw std::logic_error("path_from_matching round trip failed for " + m.str());
  return p;
}

/// Calls `f(const DyckWord&)` for every Dyck path P under W, lexicographic.
template <class F>
void for_each_noncrossing(const DyckWord& upper, F&& f, const Limits& limits = {}) {
  limits.check_paths(upper.semilength());
  const auto hw = upper.heights();
  const int n = upper.length();
  std::vector<std::uint8_t> bits(n);
  std::function<void(int, int)> rec = [&](int pos, int h) {
    if (pos == n) {
      f(DyckWord::from_bits(bits));
      return;
    }
    if (h + 1 <= hw[pos + 1]) {
      bits[pos] = 0;
      rec(pos + 1, h + 1);
    }
    if (h > 0) {
      bits[pos] = 1;
      rec(pos + 1, h - 1);
    }
  };
  rec(0, 0);
}

inline std::vector<DyckWord> enumerate_noncrossing(const DyckWord& upper,
                                                   const Limits& limits = {}) {
  std::vector<DyckWord> out;
  for_each_noncrossing(upper, [&](const DyckWord& p) { out.push_back(p); }, limits);
  return out;
}

/// |D^2_m(w)| by a height-profile recurrence under W.
inline Count count_noncrossing(const DyckWord& upper, const Limits& limits = {}) {
  limits.check_paths(upper.semilength());
  const auto hw = upper.heights();
  std::vector<Count> ways(hw.empty() ? 1 : *std::max_element(hw.begin(), hw.end()) + 2, 0);
  ways[0] = 1;
  for (int pos = 0; pos < upper.length(); ++pos) {
    std::vector<Count> next(ways.size(), 0);
    for (int h = 0; h < static_cast<int>(ways.size()); ++h) {
      if (ways[h] == 0) continue;
      if (h + 1 <= hw[pos + 1]) next[h + 1] += ways[h];
      if (h > 0) next[h - 1] += ways[h];
    }
    ways = std::move(next);
  }
  return ways[0];
}

}  // namespace matchkit

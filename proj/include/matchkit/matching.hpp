#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matchkit/dyck_word.hpp"
#include "matchkit/error.hpp"

namespace matchkit {

/// An edge {left, right} with left < right. Vertices are 1-based.
struct Edge {
  int left = 0;
  int right = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;

  std::string str() const {
    return std::to_string(left) + "-" + std::to_string(right);
  }
};

/// A perfect matching on [2m], held as a partner array.
class Matching {
 public:
  /// The size-0 matching.
  Matching() = default;

  /// Endpoints may be given in either order; the edges must cover [2m]
  /// exactly once, m being the number of edges.
  static Matching from_edges(std::span<const Edge> edges) {
    const int n = 2 * static_cast<int>(edges.size());
    std::vector<int> partner(n, 0);
    for (const auto& e : edges) {
      for (int v : {e.left, e.right}) {
        if (v < 1 || v > n)
          throw InvalidValue("vertex " + std::to_string(v) +
                             " out of range [1," + std::to_string(n) + "]");
      }
      if (e.left == e.right || partner[e.left - 1] != 0 ||
          partner[e.right - 1] != 0) {
        int dup = partner[e.left - 1] != 0 || e.left == e.right ? e.left
                                                                  : e.right;
        throw InvalidValue("duplicate vertex " + std::to_string(dup));
      }
      partner[e.left - 1] = e.right;
      partner[e.right - 1] = e.left;
    }
    Matching m;
    m.partner_ = std::move(partner);
    return m;
  }

  static Matching from_edges(std::initializer_list<Edge> edges) {
    return from_edges(std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// partner[v-1] is the vertex matched to v.
  static Matching from_partners(std::vector<int> partner) {
    const int n = static_cast<int>(partner.size());
    if (n % 2 != 0) throw InvalidValue("odd vertex count");
    for (int v = 1; v <= n; ++v) {
      int p = partner[v - 1];
      if (p < 1 || p > n || p == v || partner[p - 1] != v)
        throw InvalidValue("partner array is not a perfect matching at vertex " +
                           std::to_string(v));
    }
    Matching m;
    m.partner_ = std::move(partner);
    return m;
  }

  int size() const noexcept { return static_cast<int>(partner_.size()) / 2; }
  int vertex_count() const noexcept {
    return static_cast<int>(partner_.size());
  }
  bool empty() const noexcept { return partner_.empty(); }

  int partner(int v) const { return partner_.at(v - 1); }
  bool is_left(int v) const { return partner(v) > v; }
  const std::vector<int>& partners() const noexcept { return partner_; }

  /// Edges by ascending left endpoint.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(partner_.size() / 2);
    for (int v = 1; v <= vertex_count(); ++v)
      if (partner_[v - 1] > v) out.push_back({v, partner_[v - 1]});
    return out;
  }

  /// Canonical text: "i-j" pairs, ascending left endpoints, comma-separated.
  std::string str() const {
    std::string s;
    for (const auto& e : edges()) {
      if (!s.empty()) s += ',';
      s += e.str();
    }
    return s;
  }

  friend auto operator<=>(const Matching&, const Matching&) = default;
  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<int> partner_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\n' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ParseError("bad integer '" + std::string(s) + "' in " +
                     std::string(context));
  return value;
}

}  // namespace detail

/// Parses "i-j,k-l,..." into a Matching. The empty string is the size-0
/// matching.
inline Matching parse_matching(std::string_view text) {
  text = detail::trim(text);
  std::vector<Edge> edges;
  if (text.empty()) return Matching{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto item = text.substr(pos, comma == std::string_view::npos
                                     ? std::string_view::npos
                                     : comma - pos);
    auto dash = item.find('-');
    if (dash == std::string_view::npos)
      throw ParseError("edge '" + std::string(detail::trim(item)) +
                       "' is not of the form i-j");
    int a = detail::parse_int(item.substr(0, dash), "edge list");
    int b = detail::parse_int(item.substr(dash + 1), "edge list");
    edges.push_back({std::min(a, b), std::max(a, b)});
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  try {
    return Matching::from_edges(edges);
  } catch (const InvalidValue& e) {
    throw ParseError(e.what());
  }
}

/// The base word: entry i is 0 iff i is an l-vertex.
inline DyckWord base(const Matching& m) {
  std::vector<std::uint8_t> bits(m.vertex_count());
  for (int v = 1; v <= m.vertex_count(); ++v)
    bits[v - 1] = m.is_left(v) ? 0 : 1;
  return DyckWord::from_bits(std::move(bits));
}

/// M_pi: edges {i, m + pi(i)}. `pi` lists pi(1)..pi(m).
inline Matching permutational(std::span<const int> pi) {
  const int m = static_cast<int>(pi.size());
  std::vector<bool> seen(m + 1, false);
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i) {
    int v = pi[i - 1];
    if (v < 1 || v > m || seen[v])
      throw InvalidValue("not a permutation of [" + std::to_string(m) + "]");
    seen[v] = true;
    edges.push_back({i, m + v});
  }
  return Matching::from_edges(edges);
}

/// Digit-string form, e.g. "132". Only permutations of order <= 9.
inline Matching permutational(std::string_view digits) {
  std::vector<int> pi;
  for (char c : digits) {
    if (c < '1' || c > '9')
      throw ParseError("bad permutation digit '" + std::string(1, c) + "'");
    pi.push_back(c - '0');
  }
  return permutational(std::span<const int>(pi));
}

/// C_k: edges {2i-1, 2i+2} for 1 <= i < k, plus {2, 2k-1}.
inline Matching chain(int k) {
  if (k < 3) throw PreconditionError("chain C_k needs k >= 3");
  std::vector<Edge> edges;
  for (int i = 1; i < k; ++i) edges.push_back({2 * i - 1, 2 * i + 2});
  edges.push_back({2, 2 * k - 1});
  return Matching::from_edges(edges);
}

/// Vertex i goes to 2m - i + 1.
inline Matching mirror(const Matching& m) {
  const int n = m.vertex_count();
  std::vector<int> partner(n);
  for (int v = 1; v <= n; ++v) partner[n - v] = n + 1 - m.partner(v);
  return Matching::from_partners(std::move(partner));
}

/// The submatching formed by `chosen` edges, relabelled order-preservingly
/// onto [2|chosen|].
inline Matching induced(std::span<const Edge> chosen) {
  std::vector<int> verts;
  for (const auto& e : chosen) {
    verts.push_back(e.left);
    verts.push_back(e.right);
  }
  std::sort(verts.begin(), verts.end());
  auto rank = [&](int v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                            verts.begin()) +
           1;
  };
  std::vector<Edge> relabelled;
  for (const auto& e : chosen) relabelled.push_back({rank(e.left), rank(e.right)});
  return Matching::from_edges(relabelled);
}

enum class EdgeRelationKind { Crossing, Nested, Disjoint };

struct EdgeRelation {
  EdgeRelationKind kind = EdgeRelationKind::Disjoint;
  std::optional<Edge> outer;  // set for Nested

  friend bool operator==(const EdgeRelation&, const EdgeRelation&) = default;
};

inline EdgeRelation edge_relation(Edge a, Edge b) {
  if (a.left > a.right) std::swap(a.left, a.right);
  if (b.left > b.right) std::swap(b.left, b.right);
  if (a.left == b.left || a.left == b.right || a.right == b.left ||
      a.right == b.right)
    throw PreconditionError("edges " + a.str() + " and " + b.str() +
                            " share a vertex");
  if (b.left < a.left) std::swap(a, b);
  if (b.left > a.right) return {EdgeRelationKind::Disjoint, std::nullopt};
  if (b.right < a.right) return {EdgeRelationKind::Nested, a};
  return {EdgeRelationKind::Crossing, std::nullopt};
}

}  // namespace matchkit

#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "matchkit/dyck_word.hpp"
#include "matchkit/error.hpp"
#include "matchkit/matching.hpp"

namespace matchkit {

/// The subgraph G[k] induced on [k] by some matching: closed edges plus
/// isolated l-vertices (stubs). Carries the base word it is meant to be
/// consistent with. Role agreement with that word is not enforced at
/// construction; see is_consistent().
class PrefixGraph {
 public:
  /// `partner[v-1]` is v's neighbour inside [k], or 0 for a stub.
  PrefixGraph(std::shared_ptr<const DyckWord> base, std::vector<int> partner)
      : base_(std::move(base)), partner_(std::move(partner)) {
    if (!base_) throw InvalidValue("prefix graph needs a base word");
    const int k = this->k();
    if (k > base_->length())
      throw InvalidValue("prefix graph has more vertices than its base word");
    for (int v = 1; v <= k; ++v) {
      int p = partner_[v - 1];
      if (p == 0) continue;
      if (p < 1 || p > k || p == v || partner_[p - 1] != v)
        throw InvalidValue("prefix graph partner table broken at vertex " +
                           std::to_string(v));
    }
  }

  /// Vertices of [k] not covered by `edges` become stubs.
  static PrefixGraph from_edges(const DyckWord& w, int k,
                                std::span<const Edge> edges) {
    if (k < 0 || k > w.length())
      throw PreconditionError("prefix length out of range");
    std::vector<int> partner(k, 0);
    for (const auto& e : edges) {
      if (e.left < 1 || e.right > k || e.left >= e.right)
        throw InvalidValue("edge " + e.str() + " does not fit in [" +
                           std::to_string(k) + "]");
      if (partner[e.left - 1] != 0 || partner[e.right - 1] != 0)
        throw InvalidValue("edge " + e.str() + " reuses a vertex");
      partner[e.left - 1] = e.right;
      partner[e.right - 1] = e.left;
    }
    return PrefixGraph(std::make_shared<const DyckWord>(w), std::move(partner));
  }

  static PrefixGraph from_edges(const DyckWord& w, int k,
                                std::initializer_list<Edge> edges) {
    return from_edges(w, k, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int k() const noexcept { return static_cast<int>(partner_.size()); }
  const DyckWord& base() const noexcept { return *base_; }
  const std::shared_ptr<const DyckWord>& base_ptr() const noexcept {
    return base_;
  }
  bool complete() const noexcept { return k() == base_->length(); }

  /// 0 for a stub.
  int partner(int v) const { return partner_.at(v - 1); }
  bool is_stub(int v) const { return partner(v) == 0; }
  const std::vector<int>& partners() const noexcept { return partner_; }

  std::vector<Edge> closed_edges() const {
    std::vector<Edge> out;
    for (int v = 1; v <= k(); ++v)
      if (partner_[v - 1] > v) out.push_back({v, partner_[v - 1]});
    return out;
  }

  std::vector<int> stubs() const {
    std::vector<int> out;
    for (int v = 1; v <= k(); ++v)
      if (partner_[v - 1] == 0) out.push_back(v);
    return out;
  }

  int stub_count() const {
    int c = 0;
    for (int p : partner_) c += p == 0;
    return c;
  }

  /// Equals G[k] for some matching with the stored base: stubs and left
  /// endpoints are l-vertices of w, right endpoints are r-vertices, and the
  /// open-stub count never drops below zero. The last condition is what makes
  /// a completion of the remaining positions always possible.
  bool is_consistent() const {
    const auto& w = *base_;
    int open = 0;
    for (int v = 1; v <= k(); ++v) {
      int p = partner_[v - 1];
      bool r_role = p != 0 && p < v;
      if (r_role != w.is_down(v)) return false;
      open += r_role ? -1 : 1;
      if (open < 0) return false;
    }
    return true;
  }

  /// G[k+1] when k+1 is an l-vertex: appends a stub.
  PrefixGraph with_stub() const {
    auto p = partner_;
    p.push_back(0);
    return PrefixGraph(base_, std::move(p));
  }

  /// G[k+1] when k+1 is an r-vertex joined to `stub`.
  PrefixGraph with_edge_to(int stub) const {
    if (stub < 1 || stub > k() || partner_[stub - 1] != 0)
      throw PreconditionError(std::to_string(stub) + " is not a stub");
    auto p = partner_;
    p.push_back(stub);
    p[stub - 1] = k() + 1;
    return PrefixGraph(base_, std::move(p));
  }

  /// Only valid once every vertex is matched.
  Matching to_matching() const {
    if (!complete() || stub_count() != 0)
      throw PreconditionError("prefix graph is not a full matching");
    return Matching::from_partners(partner_);
  }

  std::string str() const {
    std::string s = "k=" + std::to_string(k()) + " edges={";
    bool first = true;
    for (const auto& e : closed_edges()) {
      if (!first) s += ',';
      first = false;
      s += e.str();
    }
    s += "} stubs={";
    first = true;
    for (int v : stubs()) {
      if (!first) s += ',';
      first = false;
      s += std::to_string(v);
    }
    return s + "}";
  }

  friend bool operator==(const PrefixGraph& a, const PrefixGraph& b) {
    return a.partner_ == b.partner_ && *a.base_ == *b.base_;
  }

 private:
  std::shared_ptr<const DyckWord> base_;
  std::vector<int> partner_;
};

/// G[k]: edges with both ends <= k; l-vertices <= k whose partner exceeds k
/// are stubs.
inline PrefixGraph prefix(const Matching& m, int k) {
  if (k < 0 || k > m.vertex_count())
    throw PreconditionError("prefix length " + std::to_string(k) +
                            " out of range [0," +
                            std::to_string(m.vertex_count()) + "]");
  std::vector<int> partner(k, 0);
  for (int v = 1; v <= k; ++v) {
    int p = m.partner(v);
    partner[v - 1] = p <= k ? p : 0;
  }
  return PrefixGraph(std::make_shared<const DyckWord>(base(m)),
                     std::move(partner));
}

}  // namespace matchkit

#pragma once

#include <algorithm>
#include <sstream>
#include <string>

#include "matchkit/dyckbij.hpp"
#include "matchkit/gentree.hpp"
#include "matchkit/matching.hpp"

namespace matchkit {

namespace detail {

constexpr int kStep = 40;    // horizontal distance between vertices
constexpr int kMargin = 30;

inline std::string svg_open(int width, int height) {
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
    << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
    << "\">\n";
  return s.str();
}

// Half-circle arcs above a baseline at y, vertex v at x = x0 + kStep*(v-1).
inline void draw_arcs(std::ostringstream& s, const Matching& m, int x0, int y) {
  for (const auto& e : m.edges()) {
    int xa = x0 + kStep * (e.left - 1);
    int xb = x0 + kStep * (e.right - 1);
    int r = (xb - xa) / 2;
    s << "  <path class=\"arc\" d=\"M " << xa << ' ' << y << " A " << r << ' ' << r
      << " 0 0 1 " << xb << ' ' << y << "\" fill=\"none\" stroke=\"black\"/>\n";
  }
  for (int v = 1; v <= m.vertex_count(); ++v) {
    int x = x0 + kStep * (v - 1);
    s << "  <circle class=\"vertex\" cx=\"" << x << "\" cy=\"" << y
      << "\" r=\"4\" fill=\"" << (m.is_left(v) ? "black" : "white")
      << "\" stroke=\"black\"/>\n";
  }
}

}  // namespace detail

/// Arc diagram: vertices on a horizontal line, each edge a half circle above
/// it. l-vertices are filled, r-vertices hollow.
inline std::string matching_svg(const Matching& m) {
  using namespace detail;
  const int n = std::max(m.vertex_count(), 1);
  const int width = 2 * kMargin + kStep * (n - 1);
  const int baseline = kMargin + kStep * n / 2;
  const int height = baseline + kMargin;
  std::ostringstream s;
  s << svg_open(width, height);
  s << "  <line class=\"baseline\" x1=\"" << kMargin << "\" y1=\"" << baseline
    << "\" x2=\"" << width - kMargin << "\" y2=\"" << baseline
    << "\" stroke=\"gray\"/>\n";
  draw_arcs(s, m, kMargin, baseline);
  s << "</svg>\n";
  return s.str();
}

/// The pair (W,P) as two lattice paths, the tunnels of P dotted, and the
/// matching M(W,P) drawn as arcs over a row of dots above the paths.
inline std::string pair_svg(const DyckWord& upper, const DyckWord& lower) {
  using namespace detail;
  const auto m = matching_from_pair(upper, lower);
  const auto t = tunnels(lower);
  const int n = std::max(upper.length(), 1);
  const int half = kStep / 2;
  const auto hw = upper.heights();
  const int peak = *std::max_element(hw.begin(), hw.end());
  const int dots_y = kMargin + kStep * n / 2;
  const int ground = dots_y + kStep + kStep * peak;
  const int width = 2 * kMargin + kStep * n;
  const int height = ground + kMargin;
  auto px = [&](int x) { return kMargin + kStep * x; };
  auto py = [&](int h) { return ground - kStep * h; };
  auto polyline = [&](const DyckWord& w, const char* cls, const char* colour) {
    std::ostringstream p;
    const auto h = w.heights();
    p << "  <polyline class=\"" << cls << "\" points=\"";
    for (std::size_t i = 0; i < h.size(); ++i)
      p << (i ? " " : "") << px(static_cast<int>(i)) << ',' << py(h[i]);
    p << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    return p.str();
  };
  std::ostringstream s;
  s << svg_open(width, height);
  s << polyline(upper, "upper", "black");
  s << polyline(lower, "lower", "steelblue");
  for (int i = 1; i <= t.size(); ++i) {
    int su = t.up_steps[i - 1];
    int sd = t.down_steps[t.down_of_up[i - 1] - 1];
    int y = py(t.heights[su - 1]) - half;
    s << "  <line class=\"tunnel\" x1=\"" << px(su - 1) + half << "\" y1=\"" << y
      << "\" x2=\"" << px(sd - 1) + half << "\" y2=\"" << y
      << "\" stroke=\"steelblue\" stroke-dasharray=\"2,4\"/>\n";
  }
  draw_arcs(s, m, kMargin + half, dots_y);
  s << "</svg>\n";
  return s.str();
}

/// DOT graph of a generating tree. Node labels list the stub block sizes;
/// leaves also carry their matching.
inline std::string tree_dot(const GeneratingTree& tree) {
  std::ostringstream s;
  s << "digraph " << to_string(tree.kind()) << "_" << (tree.base().empty() ? "e" : tree.base().str())
    << " {\n  node [shape=box, fontname=\"monospace\"];\n";
  auto id = [](int level, std::size_t i) {
    return "n" + std::to_string(level) + "_" + std::to_string(i);
  };
  for (int k = tree.root_level(); k <= tree.leaf_level(); ++k) {
    const auto& level = tree.level(k);
    for (std::size_t i = 0; i < level.size(); ++i) {
      const auto& node = level[i];
      s << "  " << id(k, i) << " [label=\"[";
      auto sizes = node.blocks.sizes();
      for (std::size_t b = 0; b < sizes.size(); ++b) s << (b ? "," : "") << sizes[b];
      s << "]";
      if (k == tree.leaf_level()) s << "\\n" << node.graph.to_matching().str();
      s << "\"];\n";
    }
  }
  for (int k = tree.root_level(); k < tree.leaf_level(); ++k) {
    const auto& level = tree.level(k);
    for (std::size_t i = 0; i < level.size(); ++i)
      for (auto c : level[i].children) s << "  " << id(k, i) << " -> " << id(k + 1, c) << ";\n";
  }
  s << "}\n";
  return s.str();
}

}  // namespace matchkit

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchkit/containment.hpp"
#include "matchkit/dyckbij.hpp"
#include "matchkit/enumeration.hpp"
#include "matchkit/ferrers.hpp"
#include "matchkit/gentree.hpp"
#include "matchkit/limits.hpp"

namespace matchkit {

/// Outcome of one checked cell. `w` is "*" for per-size aggregates.
struct CheckCell {
  int m = 0;
  std::string w;
  bool ok = true;
  std::string detail;
};

struct CheckReport {
  std::string name;
  int max_m = 0;
  std::vector<CheckCell> cells;
  std::vector<std::string> notes;

  bool passed() const {
    return std::all_of(cells.begin(), cells.end(), [](const CheckCell& c) { return c.ok; });
  }

  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [](const CheckCell& c) { return !c.ok; }));
  }
};

/// The seven pattern sets the suites compare.
inline const std::vector<std::pair<std::string, PatternSet>>& standard_patterns() {
  static const std::vector<std::pair<std::string, PatternSet>> sets = [] {
    std::vector<std::pair<std::string, PatternSet>> out;
    for (const char* pi : {"123", "132", "213", "231", "312", "321"})
      out.emplace_back(pi, PatternSet::single(permutational(pi), pi));
    out.emplace_back("Cfam", PatternSet::chain_family());
    return out;
  }();
  return sets;
}

/// g(m,w,P) for every standard pattern set, in one pass over G(m,w).
struct Census {
  Count all = 0;
  std::map<std::string, Count> avoiders;

  Count operator[](const std::string& label) const { return avoiders.at(label); }
};

inline Census census(const DyckWord& w, const Limits& limits = {}) {
  limits.check_enumeration(w.semilength());
  Census c;
  for (const auto& [label, set] : standard_patterns()) c.avoiders[label] = 0;
  for_each_matching(w, [&](const Matching& m) {
    ++c.all;
    for (const auto& [label, set] : standard_patterns())
      if (avoids(m, set)) ++c.avoiders[label];
  });
  return c;
}

namespace detail {

class CellBuilder {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok_ = false;
      if (!detail_.empty()) detail_ += "; ";
      detail_ += what;
    }
  }
  CheckCell finish(int m, std::string w, std::string summary = {}) const {
    return {m, std::move(w), ok_, ok_ ? std::move(summary) : detail_};
  }

 private:
  bool ok_ = true;
  std::string detail_;
};

inline std::string eq_text(const char* a, Count x, const char* b, Count y) {
  return std::string(a) + "=" + std::to_string(x) + " vs " + b + "=" + std::to_string(y);
}

}  // namespace detail

/// Generating trees against brute force, and the phi pairing.
inline CheckReport verify_tree_iso(int max_m, const Limits& limits = {}) {
  limits.check_tree(max_m);
  CheckReport r{"tree-iso", max_m, {}, {}};
  const auto& m132 = standard_patterns()[1].second;
  const auto& cfam = standard_patterns()[6].second;
  for (int m = 1; m <= max_m; ++m) {
    for (const auto& w : enumerate_bases(m)) {
      detail::CellBuilder cell;
      const auto c = census(w, limits);
      const auto tm = build_tree(w, TreeKind::TM, limits);
      const auto tc = build_tree(w, TreeKind::TC, limits);
      cell.expect(tm.leaf_count() == c["132"], detail::eq_text("TM leaves", tm.leaf_count(), "g(132)", c["132"]));
      cell.expect(tc.leaf_count() == c["Cfam"], detail::eq_text("TC leaves", tc.leaf_count(), "g(C)", c["Cfam"]));
      cell.expect(c["132"] == c["Cfam"], detail::eq_text("g(132)", c["132"], "g(C)", c["Cfam"]));
      try {
        const auto p = phi(w, limits);
        cell.expect(p.sizes_agree(), "block-size sequences differ at a paired node");
        cell.expect(p.node_bijection, "phi is not a bijection on some level");
        std::set<Matching> sources;
        std::set<Matching> images;
        for (const auto& [g, h] : p.leaf_map) {
          sources.insert(g);
          images.insert(h);
          cell.expect(base(g) == w && base(h) == w, "leaf with wrong base");
          cell.expect(avoids(g, m132), g.str() + " contains M_132");
          cell.expect(avoids(h, cfam), h.str() + " contains a chain");
        }
        cell.expect(sources.size() == c["132"] && images.size() == c["Cfam"],
                    "leaf map is not total and injective");
      } catch (const std::logic_error& e) {
        cell.expect(false, e.what());
      }
      r.cells.push_back(cell.finish(m, w.str(), "leaves=" + std::to_string(tm.leaf_count())));
    }
  }
  return r;
}

/// Non-crossing pairs against M_231-avoiders, both directions of the map.
inline CheckReport verify_bijection231(int max_m, const Limits& limits = {}) {
  limits.check_enumeration(max_m);
  CheckReport r{"bijection231", max_m, {}, {}};
  const auto m231 = permutational("231");
  for (int m = 1; m <= max_m; ++m) {
    Count pairs_total = 0;
    for (const auto& w : enumerate_bases(m)) {
      detail::CellBuilder cell;
      std::set<Matching> images;
      Count pairs = 0;
      for_each_noncrossing(w, [&](const DyckWord& p) {
        ++pairs;
        const auto mt = matching_from_pair(w, p);
        images.insert(mt);
        cell.expect(base(mt) == w, "base of M(W,P) differs from W");
        cell.expect(!contains(mt, m231), mt.str() + " contains M_231");
        try {
          cell.expect(path_from_matching(mt) == p, "round trip failed for P=" + p.str());
        } catch (const std::exception& e) {
          cell.expect(false, e.what());
        }
      }, limits);
      Count avoiders = 0;
      for_each_matching(w, [&](const Matching& mt) {
        bool direct = !contains(mt, m231);
        avoiders += direct;
        cell.expect(direct == avoids231_by_split(mt), "split test disagrees on " + mt.str());
      });
      const Count dp = count_noncrossing(w, limits);
      cell.expect(images.size() == pairs, "M(W,.) not injective");
      cell.expect(pairs == dp, detail::eq_text("enumerated pairs", pairs, "counted pairs", dp));
      cell.expect(pairs == avoiders, detail::eq_text("|D2(w)|", pairs, "g(231)", avoiders));
      pairs_total += pairs;
      r.cells.push_back(cell.finish(m, w.str(), "pairs=" + std::to_string(pairs)));
    }
    const Count expect = static_cast<Count>(a005700(m));
    r.cells.push_back({m, "*", pairs_total == expect,
                       detail::eq_text("sum |D2(w)|", pairs_total, "A005700", expect)});
  }
  return r;
}

/// The chain 213 = 132 <= 123 = 321 = 231 <= 312 cell by cell, C <= 123,
/// and the enumeration totals.
inline CheckReport verify_counts_chain(int max_m, const Limits& limits = {}) {
  limits.check_enumeration(max_m);
  CheckReport r{"counts-chain", max_m, {}, {}};
  for (int m = 1; m <= max_m; ++m) {
    std::map<std::string, Count> agg;
    Count all = 0;
    for (const auto& w : enumerate_bases(m)) {
      detail::CellBuilder cell;
      const auto c = census(w, limits);
      const Count d2 = count_noncrossing(w, limits);
      all += c.all;
      for (const auto& [label, n] : c.avoiders) agg[label] += n;
      cell.expect(c.all == matchings_with_base(w), detail::eq_text("|G(m,w)|", c.all, "product rule", matchings_with_base(w)));
      cell.expect(c["132"] == c["213"], detail::eq_text("g(132)", c["132"], "g(213)", c["213"]));
      cell.expect(c["132"] <= c["123"], detail::eq_text("g(132)", c["132"], "g(123)", c["123"]));
      cell.expect(c["123"] == c["321"], detail::eq_text("g(123)", c["123"], "g(321)", c["321"]));
      cell.expect(c["321"] == c["231"], detail::eq_text("g(321)", c["321"], "g(231)", c["231"]));
      cell.expect(c["231"] == d2, detail::eq_text("g(231)", c["231"], "|D2(w)|", d2));
      cell.expect(c["231"] <= c["312"], detail::eq_text("g(231)", c["231"], "g(312)", c["312"]));
      cell.expect(c["Cfam"] <= c["123"], detail::eq_text("g(C)", c["Cfam"], "g(123)", c["123"]));
      r.cells.push_back(cell.finish(m, w.str()));
    }
    const Count df = static_cast<Count>(double_factorial_odd(m));
    r.cells.push_back({m, "*", all == df, detail::eq_text("sum |G(m,w)|", all, "(2m-1)!!", df)});
    if (m >= 4)
      r.cells.push_back({m, "*", agg["132"] < agg["123"],
                         detail::eq_text("g(132)", agg["132"], "g(123)", agg["123"]) + " (strict)"});
    auto rel = [](Count a, Count b) { return a < b ? " < " : a == b ? " = " : " > "; };
    r.notes.push_back("m=" + std::to_string(m) + ": g(213)=" + std::to_string(agg["213"]) +
                      " g(132)=" + std::to_string(agg["132"]) + rel(agg["132"], agg["123"]) +
                      "g(123)=" + std::to_string(agg["123"]) + " g(321)=" + std::to_string(agg["321"]) +
                      " g(231)=" + std::to_string(agg["231"]) + rel(agg["231"], agg["312"]) +
                      "g(312)=" + std::to_string(agg["312"]) + " g(C)=" + std::to_string(agg["Cfam"]));
  }
  return r;
}

/// Reflection symmetries.
inline CheckReport verify_mirror(int max_m, const Limits& limits = {}) {
  limits.check_enumeration(max_m);
  CheckReport r{"mirror", max_m, {}, {}};
  {
    detail::CellBuilder cell;
    cell.expect(mirror(permutational("213")) == permutational("132"), "mirror(M_213) != M_132");
    for (int k = 3; k <= std::max(3, max_m); ++k)
      cell.expect(mirror(chain(k)) == chain(k), "C_" + std::to_string(k) + " not symmetric");
    r.cells.push_back(cell.finish(0, "*", "fixed patterns"));
  }
  const auto& m132 = standard_patterns()[1].second;
  const auto& m213 = standard_patterns()[2].second;
  const auto& cfam = standard_patterns()[6].second;
  for (int m = 1; m <= max_m; ++m) {
    for (const auto& w : enumerate_bases(m)) {
      detail::CellBuilder cell;
      const auto wbar = mirror_word(w);
      cell.expect(mirror_word(wbar) == w, "mirror_word is not an involution");
      for_each_matching(w, [&](const Matching& mt) {
        const auto mm = mirror(mt);
        cell.expect(mirror(mm) == mt, "mirror is not an involution on " + mt.str());
        cell.expect(base(mm) == wbar, "base(mirror(M)) != mirror_word(base(M))");
      });
      const Count g213 = count_avoiders(w, m213, limits);
      const Count g132bar = count_avoiders(wbar, m132, limits);
      const Count gc = count_avoiders(w, cfam, limits);
      const Count gcbar = count_avoiders(wbar, cfam, limits);
      cell.expect(g213 == g132bar, detail::eq_text("g(w,213)", g213, "g(wbar,132)", g132bar));
      cell.expect(gc == gcbar, detail::eq_text("g(w,C)", gc, "g(wbar,C)", gcbar));
      r.cells.push_back(cell.finish(m, w.str()));
    }
  }
  return r;
}

/// Matching <-> transversal round trips; shapes determined by the base.
inline CheckReport verify_ferrers_roundtrip(int max_m, const Limits& limits = {}) {
  limits.check_enumeration(max_m);
  CheckReport r{"ferrers-roundtrip", max_m, {}, {}};
  for (int m = 1; m <= max_m; ++m) {
    std::set<std::vector<int>> shapes_seen;
    for (const auto& w : enumerate_bases(m)) {
      detail::CellBuilder cell;
      std::set<std::vector<int>> shapes;
      std::set<std::vector<int>> cells;
      Count n = 0;
      for_each_matching(w, [&](const Matching& mt) {
        ++n;
        const auto t = matching_to_transversal(mt);
        shapes.insert(t.shape().rows());
        cells.insert(t.columns());
        cell.expect(t.shape().realizable(), "unrealizable shape from " + mt.str());
        cell.expect(transversal_to_matching(t) == mt, "round trip failed for " + mt.str());
        cell.expect(matching_to_transversal(transversal_to_matching(t)) == t,
                    "transversal round trip failed for " + mt.str());
      });
      cell.expect(shapes.size() == 1, "matchings of one base give different shapes");
      cell.expect(cells.size() == n, "distinct matchings share a transversal");
      if (!shapes.empty()) {
        cell.expect(shapes_seen.insert(*shapes.begin()).second, "two bases share a shape");
      }
      r.cells.push_back(cell.finish(m, w.str(), "matchings=" + std::to_string(n)));
    }
  }
  return r;
}

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"tree-iso", "bijection231", "counts-chain",
                                              "mirror", "ferrers-roundtrip"};
  return names;
}

/// Runs one named suite, or all of them for "all".
inline std::vector<CheckReport> run_checks(std::string_view name, int max_m,
                                           const Limits& limits = {}) {
  std::vector<CheckReport> out;
  auto run = [&](std::string_view n) {
    if (n == "tree-iso") out.push_back(verify_tree_iso(max_m, limits));
    else if (n == "bijection231") out.push_back(verify_bijection231(max_m, limits));
    else if (n == "counts-chain") out.push_back(verify_counts_chain(max_m, limits));
    else if (n == "mirror") out.push_back(verify_mirror(max_m, limits));
    else if (n == "ferrers-roundtrip") out.push_back(verify_ferrers_roundtrip(max_m, limits));
    else throw ParseError("unknown check '" + std::string(n) + "'");
  };
  if (name == "all")
    for (const auto& n : check_names()) run(n);
  else
    run(name);
  return out;
}

}  // namespace matchkit

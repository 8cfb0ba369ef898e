#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matchkit/containment.hpp"
#include "matchkit/dyck_word.hpp"
#include "matchkit/limits.hpp"
#include "matchkit/matching.hpp"

namespace matchkit {

using Count = std::uint64_t;
using WideCount = unsigned __int128;

inline std::string to_string(WideCount v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

namespace detail {

inline WideCount checked_mul(WideCount a, WideCount b) {
  WideCount r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("128-bit overflow in exact count");
  return r;
}

}  // namespace detail

inline WideCount catalan(int m) {
  if (m < 0) throw PreconditionError("catalan(m) needs m >= 0");
  WideCount c = 1;
  for (int i = 0; i < m; ++i)
    c = detail::checked_mul(c, 2 * (2 * static_cast<WideCount>(i) + 1)) /
        static_cast<WideCount>(i + 2);
  return c;
}

/// c_{m+2} c_m - c_{m+1}^2, the number of non-crossing pairs of Dyck paths
/// of semilength m.
inline WideCount a005700(int m) {
  if (m < 0) throw PreconditionError("a005700(m) needs m >= 0");
  WideCount lhs = detail::checked_mul(catalan(m + 2), catalan(m));
  WideCount c1 = catalan(m + 1);
  return lhs - detail::checked_mul(c1, c1);
}

/// (2m-1)!!, the number of matchings of size m.
inline WideCount double_factorial_odd(int m) {
  if (m < 0) throw PreconditionError("double factorial needs m >= 0");
  WideCount r = 1;
  for (int i = 1; i <= m; ++i) r = detail::checked_mul(r, 2 * i - 1);
  return r;
}

/// Calls `f(const DyckWord&)` for every Dyck word of semilength m, in
/// lexicographic order.
template <class F>
void for_each_base(int m, F&& f) {
  if (m < 0) throw PreconditionError("semilength must be >= 0");
  std::vector<std::uint8_t> bits(2 * static_cast<std::size_t>(m));
  std::function<void(int, int, int)> rec = [&](int pos, int ups, int downs) {
    if (pos == 2 * m) {
      f(DyckWord::from_bits(bits));
      return;
    }
    if (ups < m) {
      bits[pos] = 0;
      rec(pos + 1, ups + 1, downs);
    }
    if (downs < ups) {
      bits[pos] = 1;
      rec(pos + 1, ups, downs + 1);
    }
  };
  rec(0, 0, 0);
}

inline std::vector<DyckWord> enumerate_bases(int m) {
  std::vector<DyckWord> out;
  for_each_base(m, [&](const DyckWord& w) { out.push_back(w); });
  return out;
}

/// Calls `f(const Matching&)` once for every matching with base `w`. Positions
/// are scanned left to right; each r-vertex branches over the open stubs in
/// ascending order.
template <class F>
void for_each_matching(const DyckWord& w, F&& f) {
  const int n = w.length();
  std::vector<int> partner(n, 0);
  std::vector<int> open;
  open.reserve(n);
  std::function<void(int)> rec = [&](int pos) {
    if (pos > n) {
      f(Matching::from_partners(partner));
      return;
    }
    if (w.is_up(pos)) {
      open.push_back(pos);
      rec(pos + 1);
      open.pop_back();
      return;
    }
    for (std::size_t i = 0; i < open.size(); ++i) {
      int stub = open[i];
      partner[stub - 1] = pos;
      partner[pos - 1] = stub;
      open.erase(open.begin() + static_cast<std::ptrdiff_t>(i));
      rec(pos + 1);
      open.insert(open.begin() + static_cast<std::ptrdiff_t>(i), stub);
      partner[stub - 1] = 0;
      partner[pos - 1] = 0;
    }
  };
  rec(1);
}

inline std::vector<Matching> enumerate_matchings(const DyckWord& w) {
  std::vector<Matching> out;
  for_each_matching(w, [&](const Matching& m) { out.push_back(m); });
  return out;
}

/// |G(m,w)| by the product rule: the r-vertex at height h (before stepping
/// down) has h choices.
inline Count matchings_with_base(const DyckWord& w) {
  Count c = 1;
  int h = 0;
  for (auto b : w.bits()) {
    if (b == 0) {
      ++h;
    } else {
      c *= static_cast<Count>(h);
      --h;
    }
  }
  return c;
}

/// g(m, w, patterns) by exhaustive enumeration.
inline Count count_avoiders(const DyckWord& w, const PatternSet& patterns,
                            const Limits& limits = {}) {
  limits.check_enumeration(w.semilength());
  Count c = 0;
  for_each_matching(w, [&](const Matching& m) {
    if (avoids(m, patterns)) ++c;
  });
  return c;
}

struct CountRow {
  DyckWord w;
  Count count = 0;
};

/// g(m, w, patterns) for every base w of semilength m, lexicographic in w.
struct CountTable {
  int m = 0;
  std::string pattern_set;
  std::vector<CountRow> rows;

  Count total() const {
    Count t = 0;
    for (const auto& r : rows) t += r.count;
    return t;
  }

  std::optional<Count> at(const DyckWord& w) const {
    for (const auto& r : rows)
      if (r.w == w) return r.count;
    return std::nullopt;
  }
};

inline CountTable count_table(int m, const PatternSet& patterns,
                              const Limits& limits = {}) {
  limits.check_enumeration(m);
  CountTable t;
  t.m = m;
  t.pattern_set = patterns.label();
  for_each_base(m, [&](const DyckWord& w) {
    t.rows.push_back({w, count_avoiders(w, patterns, limits)});
  });
  return t;
}

/// g(m, patterns).
inline Count count_avoiders(int m, const PatternSet& patterns,
                            const Limits& limits = {}) {
  return count_table(m, patterns, limits).total();
}

enum class Verdict { EqualEverywhere, AStrictlyBelow, BStrictlyBelow, Incomparable };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::EqualEverywhere:
      return "equal-everywhere";
    case Verdict::AStrictlyBelow:
      return "A-strictly-below";
    case Verdict::BStrictlyBelow:
      return "B-strictly-below";
    case Verdict::Incomparable:
      return "incomparable";
  }
  return "?";
}

struct RelationCell {
  int m = 0;
  DyckWord w;
  Count a = 0;
  Count b = 0;
};

/// Cell-by-cell comparison of g(m,w,A) and g(m,w,B) for 1 <= m <= max_m.
/// Only ever a statement about the sizes checked.
struct RelationVerdict {
  std::string a_label;
  std::string b_label;
  int max_m = 0;
  std::vector<RelationCell> cells;
  Verdict tag = Verdict::EqualEverywhere;
  std::optional<RelationCell> a_below_witness;  // first cell with a < b
  std::optional<RelationCell> b_below_witness;  // first cell with b < a

  bool consistent() const {
    bool any_lt = false;
    bool any_gt = false;
    for (const auto& c : cells) {
      any_lt |= c.a < c.b;
      any_gt |= c.a > c.b;
    }
    Verdict expect = any_lt && any_gt ? Verdict::Incomparable
                     : any_lt        ? Verdict::AStrictlyBelow
                     : any_gt        ? Verdict::BStrictlyBelow
                                     : Verdict::EqualEverywhere;
    auto witness_ok = [](const std::optional<RelationCell>& w, bool present,
                         bool lt) {
      if (w.has_value() != present) return false;
      return !present || (lt ? w->a < w->b : w->a > w->b);
    };
    return expect == tag && witness_ok(a_below_witness, any_lt, true) &&
           witness_ok(b_below_witness, any_gt, false);
  }
};

inline RelationVerdict classify_relation(const PatternSet& a,
                                         const PatternSet& b, int max_m,
                                         const Limits& limits = {}) {
  limits.check_enumeration(max_m);
  RelationVerdict v;
  v.a_label = a.label();
  v.b_label = b.label();
  v.max_m = max_m;
  for (int m = 1; m <= max_m; ++m) {
    for_each_base(m, [&](const DyckWord& w) {
      RelationCell cell{m, w, count_avoiders(w, a, limits),
                        count_avoiders(w, b, limits)};
      if (cell.a < cell.b && !v.a_below_witness) v.a_below_witness = cell;
      if (cell.a > cell.b && !v.b_below_witness) v.b_below_witness = cell;
      v.cells.push_back(std::move(cell));
    });
  }
  if (v.a_below_witness && v.b_below_witness)
    v.tag = Verdict::Incomparable;
  else if (v.a_below_witness)
    v.tag = Verdict::AStrictlyBelow;
  else if (v.b_below_witness)
    v.tag = Verdict::BStrictlyBelow;
  return v;
}

}  // namespace matchkit

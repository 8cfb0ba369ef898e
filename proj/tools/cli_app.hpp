#pragma once

// Command-line front end. Kept in a header so the tests can drive it
// in-process; tools/matchkit.cpp is only a main() around run_cli.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "matchkit/matchkit.hpp"

namespace matchkit::cli {

enum ExitCode : int { kOk = 0, kPropertyFailure = 1, kUsage = 2, kBound = 3 };

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void write_file(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw OutputError("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw OutputError("failed writing '" + path + "'");
}

inline bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(detail::parse_int(item, "integer list"));
  return out;
}

inline void check_size(const DyckWord& w, int m) {
  if (w.semilength() != m)
    throw PreconditionError("base " + w.str() + " has semilength " + std::to_string(w.semilength()) +
                            ", expected " + std::to_string(m));
}

struct CountArgs {
  int size = 0;
  std::string pattern;
  std::string base;
  std::string format = "plain";
};

inline int cmd_count(const CountArgs& a, const Limits& limits, std::ostream& out) {
  const auto set = parse_pattern_spec(a.pattern);
  if (!a.base.empty()) {
    const auto w = DyckWord::parse(a.base);
    check_size(w, a.size);
    const Count c = count_avoiders(w, set, limits);
    if (a.format == "json") {
      nlohmann::json j{{"schema_version", kSchemaVersion}, {"m", a.size}, {"w", w.str()},
                       {"pattern_set", set.label()}, {"count", c}};
      out << j.dump(2) << '\n';
    } else if (a.format == "csv") {
      CountTable t{a.size, set.label(), {{w, c}}};
      write_csv(out, t);
    } else {
      out << c << '\n';
    }
    return kOk;
  }
  const auto t = count_table(a.size, set, limits);
  if (a.format == "json")
    out << to_json(t).dump(2) << '\n';
  else if (a.format == "csv")
    write_csv(out, t);
  else
    out << t.total() << '\n';
  return kOk;
}

struct EnumerateArgs {
  std::string what = "matchings";
  int size = -1;
  std::string base;
  std::string pattern;
};

inline int cmd_enumerate(const EnumerateArgs& a, const Limits& limits, std::ostream& out) {
  std::optional<DyckWord> w;
  if (!a.base.empty()) w = DyckWord::parse(a.base);
  if (w && a.size >= 0) check_size(*w, a.size);
  if (a.what == "bases") {
    if (a.size < 0) throw PreconditionError("enumerate bases needs --size");
    limits.check_paths(a.size);
    for_each_base(a.size, [&](const DyckWord& b) { out << b.str() << '\n'; });
    return kOk;
  }
  if (a.what == "noncrossing") {
    if (!w) throw PreconditionError("enumerate noncrossing needs --base");
    for_each_noncrossing(*w, [&](const DyckWord& p) { out << p.str() << '\n'; }, limits);
    return kOk;
  }
  // matchings
  std::optional<PatternSet> set;
  if (!a.pattern.empty()) set = parse_pattern_spec(a.pattern);
  auto emit = [&](const DyckWord& b) {
    limits.check_enumeration(b.semilength());
    for_each_matching(b, [&](const Matching& m) {
      if (!set || avoids(m, *set)) out << m.str() << '\n';
    });
  };
  if (w) {
    emit(*w);
  } else {
    if (a.size < 0) throw PreconditionError("enumerate matchings needs --size or --base");
    limits.check_enumeration(a.size);
    for_each_base(a.size, emit);
  }
  return kOk;
}

struct ClassifyArgs {
  std::string a;
  std::string b;
  int max_size = 4;
  std::string format = "plain";
};

inline int cmd_classify(const ClassifyArgs& args, const Limits& limits, std::ostream& out) {
  const auto v = classify_relation(parse_pattern_spec(args.a), parse_pattern_spec(args.b),
                                   args.max_size, limits);
  if (args.format == "json") {
    out << to_json(v).dump(2) << '\n';
    return kOk;
  }
  out << "A=" << v.a_label << " B=" << v.b_label << '\n';
  out << "verdict: " << to_string(v.tag) << " (checked for m <= " << v.max_m << ")\n";
  auto witness = [&](const char* name, const std::optional<RelationCell>& c) {
    if (c)
      out << name << ": m=" << c->m << " w=" << c->w.str() << " g_A=" << c->a << " g_B=" << c->b << '\n';
  };
  witness("A<B witness", v.a_below_witness);
  witness("B<A witness", v.b_below_witness);
  return kOk;
}

struct TreeArgs {
  std::string base;
  std::string kind = "both";
  std::string dot;
  std::string bijection;
};

inline int cmd_tree(const TreeArgs& a, const Limits& limits, std::ostream& out) {
  const auto w = DyckWord::parse(a.base);
  std::vector<TreeKind> kinds;
  if (a.kind == "both")
    kinds = {TreeKind::TM, TreeKind::TC};
  else
    kinds = {parse_tree_kind(a.kind)};
  if (!a.dot.empty() && kinds.size() != 1)
    throw PreconditionError("--dot needs --kind TM or --kind TC");
  bool summary = a.dot != "-" && a.bijection != "-";
  for (auto k : kinds) {
    const auto tree = build_tree(w, k, limits);
    if (!a.dot.empty()) write_file(a.dot, tree_dot(tree), out);
    if (summary)
      out << to_string(k) << " w=" << w.str() << " nodes=" << tree.node_count()
          << " leaves=" << tree.leaf_count() << '\n';
  }
  if (!a.bijection.empty()) {
    const auto p = phi(w, limits);
    write_file(a.bijection, to_json(p).dump(2) + "\n", out);
    if (!p.sizes_agree() || !p.node_bijection) return kPropertyFailure;
  }
  return kOk;
}

struct BijectionArgs {
  std::string matching;
  std::vector<std::string> pair;
  std::string svg;
  std::string format = "plain";
};

inline int cmd_bijection(const BijectionArgs& a, std::ostream& out) {
  if (a.matching.empty() == a.pair.empty())
    throw PreconditionError("give exactly one of --matching or --pair");
  DyckWord upper;
  DyckWord lower;
  Matching m;
  if (!a.matching.empty()) {
    m = parse_matching(a.matching);
    upper = base(m);
    lower = path_from_matching(m);
  } else {
    upper = DyckWord::parse(a.pair.at(0));
    lower = DyckWord::parse(a.pair.at(1));
    m = matching_from_pair(upper, lower);
  }
  if (a.format == "json") {
    nlohmann::json j{{"schema_version", kSchemaVersion}, {"W", upper.str()}, {"P", lower.str()},
                     {"matching", m.str()}};
    out << j.dump(2) << '\n';
  } else if (!a.matching.empty()) {
    out << "W=" << upper.str() << "\nP=" << lower.str() << '\n';
  } else {
    out << m.str() << '\n';
  }
  if (!a.svg.empty()) write_file(a.svg, pair_svg(upper, lower), out);
  return kOk;
}

struct FerrersArgs {
  std::string matching;
  std::string rows;
  std::string cols;
  std::string format = "ascii";
};

inline int cmd_ferrers(const FerrersArgs& a, std::ostream& out) {
  if (!a.matching.empty()) {
    const auto t = matching_to_transversal(parse_matching(a.matching));
    if (a.format == "json")
      out << to_json(t).dump(2) << '\n';
    else
      out << ascii_art(t);
    return kOk;
  }
  if (a.rows.empty() || a.cols.empty())
    throw PreconditionError("give --matching, or both --rows and --cols");
  auto rows = parse_int_list(a.rows);
  const int m = static_cast<int>(rows.size());
  FerrersShape shape(m, std::move(rows));
  out << transversal_to_matching(shape, parse_int_list(a.cols)).str() << '\n';
  return kOk;
}

struct RenderArgs {
  std::string matching;
  std::vector<std::string> pair;
  std::vector<std::string> tree;
  std::string out_path;
};

inline int cmd_render(const RenderArgs& a, const Limits& limits, std::ostream& out) {
  const int given = !a.matching.empty() + !a.pair.empty() + !a.tree.empty();
  if (given != 1) throw PreconditionError("give exactly one of --matching, --pair, --tree");
  if (!a.tree.empty()) {
    if (!ends_with(a.out_path, ".dot") && a.out_path != "-")
      throw PreconditionError("tree output must be a .dot file");
    const auto tree = build_tree(DyckWord::parse(a.tree.at(0)), parse_tree_kind(a.tree.at(1)), limits);
    write_file(a.out_path, tree_dot(tree), out);
    return kOk;
  }
  if (!ends_with(a.out_path, ".svg") && a.out_path != "-")
    throw PreconditionError("matching and pair output must be a .svg file");
  if (!a.matching.empty())
    write_file(a.out_path, matching_svg(parse_matching(a.matching)), out);
  else
    write_file(a.out_path, pair_svg(DyckWord::parse(a.pair.at(0)), DyckWord::parse(a.pair.at(1))), out);
  return kOk;
}

struct VerifyArgs {
  std::string check = "all";
  int max_size = 5;
  bool summary_only = false;
};

inline int cmd_verify(const VerifyArgs& a, const Limits& limits, std::ostream& out) {
  const auto reports = run_checks(a.check, a.max_size, limits);
  bool all_ok = true;
  for (const auto& r : reports) {
    if (!a.summary_only) {
      for (const auto& c : r.cells) {
        out << (c.ok ? "[ok]   " : "[FAIL] ") << r.name << " m=" << c.m << " w=" << c.w;
        if (!c.detail.empty()) out << "  " << c.detail;
        out << '\n';
      }
      for (const auto& n : r.notes) out << "note: " << r.name << ' ' << n << '\n';
    }
    out << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.cells.size()
        << " cells, " << r.failures() << " failed, max-size " << r.max_m << ")\n";
    all_ok &= r.passed();
  }
  return all_ok ? kOk : kPropertyFailure;
}

/// Parses and dispatches; returns the process exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"matchkit: pattern-avoiding matchings, generating trees and Dyck-path bijections"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count matchings of a size (and base) avoiding a pattern set");
  count->add_option("--size,-m", count_args.size, "Matching size m")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--pattern,-p", count_args.pattern, "Pattern spec: 132, C4, Cfam, file:<path>, joined by +")->required();
  count->add_option("--base,-w", count_args.base, "Restrict to one base word");
  count->add_option("--format", count_args.format, "plain, json or csv")->check(CLI::IsMember({"plain", "json", "csv"}));

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "List bases, matchings or non-crossing lower paths");
  enumerate->add_option("--what", enum_args.what, "bases, matchings or noncrossing")
      ->check(CLI::IsMember({"bases", "matchings", "noncrossing"}));
  enumerate->add_option("--size,-m", enum_args.size, "Matching size m")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--base,-w", enum_args.base, "Base word");
  enumerate->add_option("--pattern,-p", enum_args.pattern, "Only list avoiders of this pattern spec");

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "Compare g(m,w,A) and g(m,w,B) cell by cell");
  classify->add_option("--a,-a", classify_args.a, "Pattern spec A")->required();
  classify->add_option("--b,-b", classify_args.b, "Pattern spec B")->required();
  classify->add_option("--max-size", classify_args.max_size, "Largest m compared")->check(CLI::NonNegativeNumber);
  classify->add_option("--format", classify_args.format, "plain or json")->check(CLI::IsMember({"plain", "json"}));

  TreeArgs tree_args;
  auto* tree = app.add_subcommand("tree", "Build the generating trees of a base word");
  tree->add_option("--base,-w", tree_args.base, "Base word")->required();
  tree->add_option("--kind", tree_args.kind, "TM, TC or both")->check(CLI::IsMember({"TM", "TC", "both"}));
  tree->add_option("--dot", tree_args.dot, "Write the tree as DOT ('-' for stdout)");
  tree->add_option("--bijection", tree_args.bijection, "Write the leaf bijection as JSON ('-' for stdout)");

  BijectionArgs bij_args;
  auto* bijection = app.add_subcommand("bijection", "Map an M_231-avoider to its Dyck-path pair, or back");
  bijection->add_option("--matching", bij_args.matching, "Edge list i-j,...");
  bijection->add_option("--pair", bij_args.pair, "Upper and lower path words")->expected(2);
  bijection->add_option("--svg", bij_args.svg, "Also draw the pair as SVG");
  bijection->add_option("--format", bij_args.format, "plain or json")->check(CLI::IsMember({"plain", "json"}));

  FerrersArgs ferrers_args;
  auto* ferrers = app.add_subcommand("ferrers", "Matching <-> Ferrers-shape transversal");
  ferrers->add_option("--matching", ferrers_args.matching, "Edge list i-j,...");
  ferrers->add_option("--rows", ferrers_args.rows, "Row lengths, bottom-up, comma-separated");
  ferrers->add_option("--cols", ferrers_args.cols, "Column of the cell in each row, bottom-up");
  ferrers->add_option("--format", ferrers_args.format, "ascii or json")->check(CLI::IsMember({"ascii", "json"}));

  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "Draw a matching or pair (SVG) or a tree (DOT)");
  render->add_option("--matching", render_args.matching, "Edge list i-j,...");
  render->add_option("--pair", render_args.pair, "Upper and lower path words")->expected(2);
  render->add_option("--tree", render_args.tree, "Base word and kind (TM|TC)")->expected(2);
  render->add_option("--out,-o", render_args.out_path, "Output path (.svg or .dot, '-' for stdout)")->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--check", verify_args.check, "tree-iso, bijection231, counts-chain, mirror, ferrers-roundtrip or all")
      ->check(CLI::IsMember({"tree-iso", "bijection231", "counts-chain", "mirror", "ferrers-roundtrip", "all"}));
  verify->add_option("--max-size", verify_args.max_size, "Largest m checked")->check(CLI::NonNegativeNumber);
  verify->add_flag("--summary-only", verify_args.summary_only, "Print only one line per suite");

  std::vector<std::string> storage{"matchkit"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    const auto limits = Limits::from_env();
    if (count->parsed()) return cmd_count(count_args, limits, out);
    if (enumerate->parsed()) return cmd_enumerate(enum_args, limits, out);
    if (classify->parsed()) return cmd_classify(classify_args, limits, out);
    if (tree->parsed()) return cmd_tree(tree_args, limits, out);
    if (bijection->parsed()) return cmd_bijection(bij_args, out);
    if (ferrers->parsed()) return cmd_ferrers(ferrers_args, out);
    if (render->parsed()) return cmd_render(render_args, limits, out);
    if (verify->parsed()) return cmd_verify(verify_args, limits, out);
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBound;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kBound;
  } catch (const std::logic_error& e) {
    // Internal consistency checks (phi pairing, round trips) end up here.
    err << "property failure: " << e.what() << '\n';
    return kPropertyFailure;
  }
  return kUsage;
}

}  // namespace matchkit::cli

#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treeirr/claims.hpp"
#include "treeirr/degree_sequence.hpp"
#include "treeirr/edge_list.hpp"
#include "treeirr/enumeration.hpp"
#include "treeirr/extremal.hpp"
#include "treeirr/formulas.hpp"
#include "treeirr/indices.hpp"
#include "treeirr/report_io.hpp"

namespace treeirr {

namespace cli {

using json = nlohmann::ordered_json;

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kClaimFailed = 1;
inline constexpr int kUsage = 2;

inline std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string join(std::span<const Integer> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
  return out;
}

inline json tree_json(const Tree& t) {
  json edges = json::array();
  for (const auto& [u, v] : t.edges()) edges.push_back({u, v});
  return {{"order", t.order()}, {"edges", edges}};
}

inline std::optional<IndexKind> parse_index(const std::string& s) {
  if (s == "irr") return IndexKind::irr;
  if (s == "sigma") return IndexKind::sigma;
  if (s == "irr_T" || s == "irrT") return IndexKind::irr_total;
  return std::nullopt;
}

struct Options {
  std::string tree_path;
  std::size_t n = 0;
  std::string method = "rooted";
  bool count_only = false;
  std::string seq;
  std::string seq_file;
  std::string index = "irr";
  std::string objective = "max";
  Integer max_degree = 0;
  bool caterpillars = false;
  std::string formula_id;
  bool allow_unordered = false;
  std::string claim;
  std::vector<std::string> claims;
  std::size_t n_max = 0;
  unsigned jobs = 1;
  bool deterministic = false;
  bool all_witnesses = false;
  bool timing = false;
  std::string out_path;
  std::string interp = "both";
  bool list_all = false;
  std::string kind;
  bool json = false;
  bool csv = false;
};

inline std::vector<Integer> sequence_arg(const Options& o) {
  if (!o.seq_file.empty()) return parse_degree_list(read_source(o.seq_file));
  return parse_degree_list(o.seq);
}

inline ClaimParams claim_params(const Options& o) {
  ClaimParams p;
  if (o.n_max > 0) p.n_max = o.n_max;
  if (o.all_witnesses) p.witness_cap = std::numeric_limits<std::size_t>::max();
  return p;
}

inline int run_compute(const Options& o, std::ostream& out) {
  const auto doc = parse_edge_list(read_source(o.tree_path));
  const Tree& t = doc.tree;
  const auto b = compute_indices(t);
  const auto seq = DegreeSequence::from_values(degree_multiset(t));
  std::vector<Integer> support;
  for (Vertex v : strong_support_vertices(t)) support.push_back(doc.labels[v]);
  if (o.json) {
    out << json{{"order", t.order()},        {"size", t.size()},
                {"irr", b.irr},              {"sigma", b.sigma},
                {"irr_T", b.irr_total},      {"m1", b.m1},
                {"m2", b.m2},                {"degree_sequence", seq.values()},
                {"strong_support", support}, {"caterpillar", is_caterpillar(t)}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "n=" << t.order() << " irr=" << b.irr << " sigma=" << b.sigma << " irr_T=" << b.irr_total
      << " m1=" << b.m1 << " m2=" << b.m2 << '\n';
  out << "degree_sequence=" << to_multiset_string(seq) << '\n';
  out << "strong_support=" << join(support) << '\n';
  out << "caterpillar=" << (is_caterpillar(t) ? "yes" : "no") << '\n';
  return kOk;
}

inline void write_stream(std::ostream& out, const TreeStream& trees, const std::string& heading, bool as_json,
                         bool count_only) {
  if (as_json) {
    json j{{"description", heading}, {"count", trees.size()}};
    if (!count_only) {
      j["trees"] = json::array();
      for (const auto& t : trees) j["trees"].push_back(tree_json(t));
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << "# " << heading << ": " << trees.size() << (trees.size() == 1 ? " tree" : " trees") << '\n';
  if (count_only) return;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    out << "tree " << i << ": " << detail::edges_string(trees[i]) << '\n';
  }
}

inline int run_enumerate(const Options& o, std::ostream& out) {
  TreeStream trees;
  if (o.method == "rooted") {
    trees = all_trees(o.n);
  } else if (o.method == "prufer") {
    trees = all_trees_by_prufer(o.n);
  } else {
    throw std::invalid_argument("unknown method '" + o.method + "' (rooted|prufer)");
  }
  write_stream(out, trees, "order " + std::to_string(o.n), o.json, o.count_only);
  return kOk;
}

inline int run_realize(const Options& o, std::ostream& out) {
  const auto values = sequence_arg(o);
  const auto check = validate_tree_sequence(values);
  if (!check) throw std::invalid_argument("not tree-graphical: " + check.reason);
  write_stream(out, trees_with_degree_sequence(*check.sequence), "sequence " + to_multiset_string(*check.sequence),
               o.json, o.count_only);
  return kOk;
}

inline int run_extremal(const Options& o, std::ostream& out) {
  const auto index = parse_index(o.index);
  if (!index) throw std::invalid_argument("unknown index '" + o.index + "' (irr|sigma|irr_T)");
  if (o.objective != "min" && o.objective != "max") throw std::invalid_argument("objective must be min or max");
  TreeClass cls;
  if (!o.seq.empty() || !o.seq_file.empty()) {
    const auto check = validate_tree_sequence(sequence_arg(o));
    if (!check) throw std::invalid_argument("not tree-graphical: " + check.reason);
    cls = TreeClass::of_sequence(*check.sequence);
  } else if (o.n > 0) {
    cls = TreeClass::of_order(o.n);
  } else {
    throw std::invalid_argument("extremal needs --n or --seq");
  }
  if (o.max_degree > 0) cls.max_degree = o.max_degree;
  cls.caterpillars_only = o.caterpillars;
  const auto r = extremal_over_class(cls, *index, o.objective == "min" ? Objective::min : Objective::max);
  if (o.json) {
    json w = json::array();
    for (const auto& t : r.witnesses) w.push_back(tree_json(t));
    out << json{{"class", cls.describe()},     {"index", index_name(r.index)},
                {"objective", o.objective},    {"optimum", r.optimum},
                {"class_size", r.class_size},  {"witnesses", w}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "class: " << cls.describe() << '\n';
  out << "index: " << index_name(r.index) << '\n';
  out << "objective: " << o.objective << '\n';
  out << "optimum: " << r.optimum << '\n';
  out << "class size: " << r.class_size << '\n';
  for (const auto& t : r.witnesses) out << "witness: " << detail::edges_string(t) << '\n';
  return kOk;
}

inline int run_formula(const Options& o, std::ostream& out) {
  const auto id = parse_formula_id(o.formula_id);
  if (!id) {
    std::string known;
    for (FormulaId f : kAllFormulas) known += std::string(known.empty() ? "" : "|") + std::string(formula_name(f));
    throw std::invalid_argument("unknown formula '" + o.formula_id + "' (" + known + ")");
  }
  const auto values = parse_degree_list(o.seq);
  const auto r = evaluate_formula(*id, values, o.allow_unordered ? OrderingPolicy::flag : OrderingPolicy::enforce);
  if (o.json) {
    json j{{"formula", formula_name(r.id)}, {"input", r.input}, {"value", r.value}};
    if (r.secondary) j["secondary"] = *r.secondary;
    j["notes"] = r.notes;
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << formula_name(r.id) << detail::tuple_string(r.input) << " = " << r.value << '\n';
  if (r.secondary) out << "secondary = " << *r.secondary << '\n';
  for (const auto& n : r.notes) out << "note: " << n << '\n';
  return kOk;
}

inline int status_of(const ClaimReport& report) {
  if (report.any_error()) return kUsage;
  return report.any_failed() ? kClaimFailed : kOk;
}

inline int emit_report(const Options& o, const ClaimReport& report, std::ostream& out) {
  const ReportOptions ropt{o.all_witnesses, o.timing};
  std::ostringstream buf;
  if (o.json) {
    buf << report_json(report, ropt).dump(2) << '\n';
  } else {
    write_report_text(buf, report, ropt);
  }
  if (o.out_path.empty()) {
    out << buf.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + o.out_path);
    file << buf.str();
  }
  return status_of(report);
}

inline int run_verify(const Options& o, std::ostream& out) {
  ReportConfig cfg{{o.claim}, claim_params(o), 1};
  const auto report = run_report(cfg);
  if (o.json) {
    out << claim_json(report.results.front(), {o.all_witnesses, o.timing}).dump(2) << '\n';
  } else {
    write_claim_text(out, report.results.front(), {o.all_witnesses, o.timing});
  }
  return status_of(report);
}

inline int run_report_cmd(const Options& o, std::ostream& out) {
  ReportConfig cfg{o.claims, claim_params(o), o.deterministic ? 1u : std::max(1u, o.jobs)};
  return emit_report(o, run_report(cfg), out);
}

inline int run_permsearch(const Options& o, std::ostream& out) {
  const auto values = parse_degree_list(o.seq);
  std::vector<PermInterpretation> interps;
  if (o.interp == "formula" || o.interp == "both") interps.push_back(PermInterpretation::formula);
  if (o.interp == "caterpillar" || o.interp == "both") interps.push_back(PermInterpretation::caterpillar);
  if (interps.empty()) throw std::invalid_argument("unknown interpretation '" + o.interp + "'");
  json all = json::array();
  for (auto interp : interps) {
    const auto r = perm_search(values, interp);
    if (o.json) {
      json j{{"interpretation", interpretation_name(interp)},
             {"base", r.base},
             {"orderings", r.evaluations.size()},
             {"skipped", r.skipped},
             {"max", r.max_value},
             {"min", r.min_value},
             {"argmax", r.argmax},
             {"argmin", r.argmin},
             {"reported_max", r.reported.max},
             {"reported_min", r.reported.min},
             {"max_matches", r.max_matches},
             {"min_matches", r.min_matches}};
      if (o.list_all) {
        json ev = json::array();
        for (const auto& [ord, v] : r.evaluations) ev.push_back({{"ordering", ord}, {"value", v}});
        j["evaluations"] = ev;
      }
      all.push_back(j);
      continue;
    }
    out << "interpretation: " << interpretation_name(interp) << '\n';
    out << "orderings: " << r.evaluations.size() << '\n';
    out << "skipped: " << r.skipped << '\n';
    out << "max: " << r.max_value << '\n';
    for (const auto& a : r.argmax) out << "argmax: " << detail::tuple_string(a) << '\n';
    out << "min: " << r.min_value << '\n';
    for (const auto& a : r.argmin) out << "argmin: " << detail::tuple_string(a) << '\n';
    out << "matches reported max " << r.reported.max << ": " << (r.max_matches ? "yes" : "no") << '\n';
    out << "matches reported min " << r.reported.min << ": " << (r.min_matches ? "yes" : "no") << '\n';
    if (o.list_all) {
      for (const auto& [ord, v] : r.evaluations) out << "eval: " << detail::tuple_string(ord) << ' ' << v << '\n';
    }
    out << '\n';
  }
  if (o.json) out << all.dump(2) << '\n';
  return kOk;
}

inline int run_table1(const Options& o, std::ostream& out) {
  const auto rows = table1_comparison();
  if (o.csv) {
    write_table1_csv(out, rows);
    return kOk;
  }
  if (o.json) {
    json j = json::array();
    for (const auto& c : rows) {
      j.push_back({{"degrees", c.row.degrees},
                   {"irr_max", c.row.irr_max},
                   {"irr_min", c.row.irr_min},
                   {"diff", c.row.diff},
                   {"formula_max", c.formula_max},
                   {"formula_min", c.formula_min},
                   {"floor_bound", c.floor_bound}});
    }
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << std::left << std::setw(16) << "degrees" << std::right << std::setw(8) << "max" << std::setw(8) << "min"
      << std::setw(6) << "diff" << std::setw(10) << "f_max" << std::setw(8) << "f_min" << std::setw(8) << "floor"
      << '\n';
  for (const auto& c : rows) {
    out << std::left << std::setw(16) << detail::tuple_string(c.row.degrees) << std::right << std::setw(8)
        << c.row.irr_max << std::setw(8) << c.row.irr_min << std::setw(6) << c.row.diff << std::setw(10)
        << c.formula_max << std::setw(8) << c.formula_min << std::setw(8) << c.floor_bound << '\n';
  }
  return kOk;
}

inline int run_build(const Options& o, std::ostream& out) {
  SpecialKind kind{};
  if (o.kind == "star") {
    kind = SpecialKind::star;
  } else if (o.kind == "path") {
    kind = SpecialKind::path;
  } else if (o.kind == "caterpillar") {
    kind = SpecialKind::caterpillar;
  } else {
    throw std::invalid_argument("unknown kind '" + o.kind + "' (star|path|caterpillar)");
  }
  out << emit_edge_list(build_special(kind, parse_degree_list(o.seq)));
  return kOk;
}

}  // namespace cli

inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  using namespace cli;
  Options o;
  CLI::App app{"Irregularity indices of trees: computation, enumeration and claim checks", "treeirr"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  app.failure_message(CLI::FailureMessage::help);

  auto* compute = app.add_subcommand("compute", "Indices of a tree read from an edge list");
  compute->add_option("--tree", o.tree_path, "Edge-list file ('-' for stdin)")->required();
  compute->add_flag("--json", o.json);

  auto* enumerate = app.add_subcommand("enumerate", "All unlabeled trees of order n");
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--method", o.method, "rooted | prufer")->capture_default_str();
  enumerate->add_flag("--count", o.count_only, "Print the count only");
  enumerate->add_flag("--json", o.json);

  auto* realize = app.add_subcommand("realize", "Unlabeled trees with a given degree sequence");
  auto* seq_opt = realize->add_option("--seq", o.seq, "Degrees, e.g. \"3 2 2 1 1 1\"");
  realize->add_option("--seq-file", o.seq_file)->excludes(seq_opt);
  realize->add_flag("--count", o.count_only);
  realize->add_flag("--json", o.json);

  auto* extremal = app.add_subcommand("extremal", "Extremal trees of a class for one index");
  extremal->add_option("--n", o.n, "Order of the class");
  extremal->add_option("--seq", o.seq, "Degree sequence of the class");
  extremal->add_option("--seq-file", o.seq_file);
  extremal->add_option("--index", o.index, "irr | sigma | irr_T")->capture_default_str();
  extremal->add_option("--objective", o.objective, "min | max")->capture_default_str();
  extremal->add_option("--max-degree", o.max_degree, "Restrict to this maximum degree");
  extremal->add_flag("--caterpillars", o.caterpillars, "Restrict to caterpillars");
  extremal->add_flag("--json", o.json);

  auto* formula = app.add_subcommand("formula", "Evaluate a closed-form degree formula");
  formula->add_option("--id", o.formula_id)->required();
  formula->add_option("--values", o.seq, "Degree tuple")->required();
  formula->add_flag("--allow-unordered", o.allow_unordered, "Evaluate out-of-order input and note it");
  formula->add_flag("--json", o.json);

  auto* verify_cmd = app.add_subcommand("verify", "Check one catalogued claim");
  verify_cmd->add_option("--claim", o.claim)->required();
  verify_cmd->add_option("--n-max", o.n_max, "Override the claim's size parameter");
  verify_cmd->add_flag("--all-witnesses", o.all_witnesses);
  verify_cmd->add_flag("--timing", o.timing);
  verify_cmd->add_flag("--json", o.json);

  auto* report = app.add_subcommand("report", "Check every catalogued claim (or a subset)");
  report->add_option("--claims", o.claims, "Comma-separated claim ids")->delimiter(',');
  report->add_option("--n-max", o.n_max);
  report->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  report->add_flag("--deterministic", o.deterministic, "Single worker");
  report->add_flag("--all-witnesses", o.all_witnesses);
  report->add_flag("--timing", o.timing);
  report->add_option("--out", o.out_path, "Write the report to a file");
  report->add_flag("--json", o.json);

  auto* perm = app.add_subcommand("permsearch", "Ordered-sigma extremes over every ordering of a tuple");
  perm->add_option("--seq", o.seq)->required();
  perm->add_option("--interp", o.interp, "formula | caterpillar | both")->capture_default_str();
  perm->add_flag("--all", o.list_all, "List every evaluation");
  perm->add_flag("--json", o.json);

  auto* table1 = app.add_subcommand("table1", "Printed extremal table next to the closed-form bounds");
  auto* csv = table1->add_flag("--csv", o.csv);
  table1->add_flag("--json", o.json)->excludes(csv);

  auto* build = app.add_subcommand("build", "Emit a star, path or caterpillar as an edge list");
  build->add_option("--kind", o.kind)->required();
  build->add_option("--params", o.seq, "star: leaves; path: n; caterpillar: spine degrees")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*compute) return run_compute(o, out);
    if (*enumerate) return run_enumerate(o, out);
    if (*realize) return run_realize(o, out);
    if (*extremal) return run_extremal(o, out);
    if (*formula) return run_formula(o, out);
    if (*verify_cmd) return run_verify(o, out);
    if (*report) return run_report_cmd(o, out);
    if (*perm) return run_permsearch(o, out);
    if (*table1) return run_table1(o, out);
    if (*build) return run_build(o, out);
  } catch (const std::exception& e) {
    err << "treeirr: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace treeirr

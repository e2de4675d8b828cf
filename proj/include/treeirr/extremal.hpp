#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "treeirr/degree_sequence.hpp"
#include "treeirr/enumeration.hpp"
#include "treeirr/errors.hpp"
#include "treeirr/formulas.hpp"
#include "treeirr/indices.hpp"

namespace treeirr {

// A family of trees to optimize over: all trees of one order, or all
// realizations of one degree sequence, optionally narrowed by maximum degree
// and to caterpillars.
struct TreeClass {
  std::size_t order = 1;
  std::optional<DegreeSequence> sequence;
  std::optional<Integer> max_degree;
  bool caterpillars_only = false;

  static TreeClass of_order(std::size_t n) { return TreeClass{n, std::nullopt, std::nullopt, false}; }
  static TreeClass of_sequence(DegreeSequence seq) {
    const std::size_t n = seq.length();
    return TreeClass{n, std::move(seq), std::nullopt, false};
  }

  std::string describe() const {
    std::string out = sequence ? "degree sequence " + to_string(*sequence) : "order " + std::to_string(order);
    if (max_degree) out += ", max degree " + std::to_string(*max_degree);
    if (caterpillars_only) out += ", caterpillars only";
    return out;
  }
};

inline std::vector<Tree> class_members(const TreeClass& cls, const EnumerationLimits& limits) {
  const TreeStream base = cls.sequence ? trees_with_degree_sequence(*cls.sequence, limits)
                                       : all_trees(cls.order, limits);
  std::vector<Tree> out;
  for (const auto& t : base) {
    if (cls.max_degree && max_degree(t) != *cls.max_degree) continue;
    if (cls.caterpillars_only && !is_caterpillar(t)) continue;
    out.push_back(t);
  }
  return out;
}

enum class Objective { min, max };

inline std::string_view objective_name(Objective o) { return o == Objective::min ? "min" : "max"; }

struct ExtremalResult {
  TreeClass tree_class;
  IndexKind index{};
  Objective objective{};
  Integer optimum = 0;
  std::size_t class_size = 0;
  std::vector<Tree> witnesses;  // every member attaining the optimum, ascending canonical code
  std::vector<CanonicalCode> witness_codes;
};

inline constexpr EnumerationLimits kExtremalLimits{14, 10'000'000};

inline ExtremalResult extremal_over_class(const TreeClass& cls, IndexKind index, Objective objective,
                                          const EnumerationLimits& limits = kExtremalLimits) {
  const auto members = class_members(cls, limits);
  if (members.empty()) throw std::invalid_argument("tree class is empty: " + cls.describe());
  ExtremalResult r{cls, index, objective, 0, members.size(), {}, {}};
  bool first = true;
  for (const auto& t : members) {
    const Integer v = index_value(compute_indices(t), index);
    const bool better = objective == Objective::max ? v > r.optimum : v < r.optimum;
    if (first || better) {
      r.optimum = v;
      r.witnesses.clear();
      first = false;
    }
    if (v == r.optimum) r.witnesses.push_back(t);
  }
  for (const auto& t : r.witnesses) r.witness_codes.push_back(canonical_code(t));
  return r;
}

// Extreme values reported for the ordered-degree permutation example.
struct ReportedExtremes {
  Integer max = 14802;
  Integer min = 14196;
};

// formula: sigma_ordered evaluated on each ordering as given.
// caterpillar: true sigma of the caterpillar whose spine follows the ordering.
enum class PermInterpretation { formula, caterpillar };

inline std::string_view interpretation_name(PermInterpretation p) {
  return p == PermInterpretation::formula ? "formula" : "caterpillar";
}

struct PermSearchResult {
  std::vector<Integer> base;
  PermInterpretation interpretation{};
  std::vector<std::pair<std::vector<Integer>, Integer>> evaluations;  // lexicographic ordering order
  std::size_t skipped = 0;
  Integer max_value = 0;
  Integer min_value = 0;
  std::vector<std::vector<Integer>> argmax;
  std::vector<std::vector<Integer>> argmin;
  ReportedExtremes reported;
  bool max_matches = false;
  bool min_matches = false;
};

inline constexpr std::size_t kPermSearchMaxLength = 8;

inline PermSearchResult perm_search(std::span<const Integer> degrees, PermInterpretation interpretation,
                                    ReportedExtremes reported = {}) {
  if (degrees.empty()) throw std::invalid_argument("perm_search needs a non-empty tuple");
  if (degrees.size() > kPermSearchMaxLength) {
    throw GuardError("perm_search tuple length " + std::to_string(degrees.size()) + " exceeds " +
                     std::to_string(kPermSearchMaxLength));
  }
  if (interpretation == PermInterpretation::caterpillar &&
      std::any_of(degrees.begin(), degrees.end(), [](Integer x) { return x < 2; })) {
    throw std::invalid_argument("caterpillar interpretation needs every spine degree >= 2");
  }

  PermSearchResult r;
  r.base.assign(degrees.begin(), degrees.end());
  r.interpretation = interpretation;
  r.reported = reported;

  std::vector<Integer> order = r.base;
  std::sort(order.begin(), order.end());
  do {
    Integer value = 0;
    if (interpretation == PermInterpretation::formula) {
      value = evaluate_formula(FormulaId::sigma_ordered, order, OrderingPolicy::flag).value;
    } else {
      try {
        value = sigma_index(build_caterpillar(order));
      } catch (const std::invalid_argument&) {
        ++r.skipped;
        continue;
      }
    }
    r.evaluations.emplace_back(order, value);
  } while (std::next_permutation(order.begin(), order.end()));

  if (r.evaluations.empty()) throw std::invalid_argument("no feasible ordering");
  r.max_value = r.evaluations.front().second;
  r.min_value = r.max_value;
  for (const auto& [o, v] : r.evaluations) {
    r.max_value = std::max(r.max_value, v);
    r.min_value = std::min(r.min_value, v);
  }
  for (const auto& [o, v] : r.evaluations) {
    if (v == r.max_value) r.argmax.push_back(o);
    if (v == r.min_value) r.argmin.push_back(o);
  }
  r.max_matches = r.max_value == reported.max;
  r.min_matches = r.min_value == reported.min;
  return r;
}

}  // namespace treeirr

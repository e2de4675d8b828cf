#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "treeirr/errors.hpp"
#include "treeirr/tree.hpp"

namespace treeirr {

// Closed-form expressions over degree tuples, evaluated literally as stated,
// including the anomalous ones. Claim checks compare them against exhaustive
// oracles; nothing here consults a tree.
enum class FormulaId {
  three_c_max,      // (d1,d2,d3), d1>=d2>=d3
  three_c_min,      // (d1,d2,d3), d1>=d2>=d3
  hyp_four,         // (d1..d4), descending
  hyp_four_bounds,  // (d1..d4), descending; value=max, secondary=min
  cor_diff_bound,   // (d1..d4), descending; value=[max-min < 2 d1], secondary=max-min
  cor_floor_bound,  // (d1..d4), descending; floor((d1^2 + d4^2) / 2)
  sigma_five,       // (d1..d5), ascending
  sigma_ordered,    // (d1..dn), ascending
  cor3_part1,       // (d3, d4); value=[log_{d4-2}((2 d4 - 4)/(d3 - 1)) < k], secondary=k
};

inline constexpr std::array<FormulaId, 9> kAllFormulas = {
    FormulaId::three_c_max,     FormulaId::three_c_min, FormulaId::hyp_four,
    FormulaId::hyp_four_bounds, FormulaId::cor_diff_bound, FormulaId::cor_floor_bound,
    FormulaId::sigma_five,      FormulaId::sigma_ordered, FormulaId::cor3_part1,
};

inline std::string_view formula_name(FormulaId id) {
  switch (id) {
    case FormulaId::three_c_max: return "three_c_max";
    case FormulaId::three_c_min: return "three_c_min";
    case FormulaId::hyp_four: return "hyp_four";
    case FormulaId::hyp_four_bounds: return "hyp_four_bounds";
    case FormulaId::cor_diff_bound: return "cor_diff_bound";
    case FormulaId::cor_floor_bound: return "cor_floor_bound";
    case FormulaId::sigma_five: return "sigma_five";
    case FormulaId::sigma_ordered: return "sigma_ordered";
    case FormulaId::cor3_part1: return "cor3_part1";
  }
  return "?";
}

inline std::optional<FormulaId> parse_formula_id(std::string_view name) {
  for (FormulaId id : kAllFormulas) {
    if (formula_name(id) == name) return id;
  }
  return std::nullopt;
}

struct FormulaResult {
  FormulaId id{};
  std::vector<Integer> input;
  Integer value = 0;
  std::optional<Integer> secondary;
  std::vector<std::string> notes;
};

// enforce: an ordering violation throws DomainError.
// flag: the value is computed anyway and the violation is noted.
enum class OrderingPolicy { enforce, flag };

namespace detail {

inline Integer sq(Integer x) { return x * x; }
inline Integer cube(Integer x) { return x * x * x; }

inline Integer hyp_four_square_sum(std::span<const Integer> d) {
  Integer s = 0;
  for (Integer x : d) s += sq(x - 1);
  return s;
}

inline std::pair<Integer, Integer> hyp_four_pair(std::span<const Integer> d) {
  const Integer base = hyp_four_square_sum(d);
  return {base + d[0] + d[1] - d[2] - 3 * d[3] + 2, base + d[0] - d[1] - d[2] - d[3] + 2};
}

// Decides log_base(num/den) < k exactly as num < den * base^k, for base >= 2, k >= 0.
inline bool log_ratio_below(Integer num, Integer den, Integer base, Integer k) {
  Integer rhs = den;
  for (Integer i = 0; i < k; ++i) {
    rhs *= base;
    if (rhs > num) return true;
  }
  return num < rhs;
}

}  // namespace detail

inline std::size_t formula_arity(FormulaId id) {
  switch (id) {
    case FormulaId::three_c_max:
    case FormulaId::three_c_min: return 3;
    case FormulaId::hyp_four:
    case FormulaId::hyp_four_bounds:
    case FormulaId::cor_diff_bound:
    case FormulaId::cor_floor_bound: return 4;
    case FormulaId::sigma_five: return 5;
    case FormulaId::sigma_ordered: return 0;  // any length >= 1
    case FormulaId::cor3_part1: return 2;
  }
  return 0;
}

inline FormulaResult evaluate_formula(FormulaId id, std::span<const Integer> d,
                                      OrderingPolicy policy = OrderingPolicy::enforce) {
  const std::string name(formula_name(id));
  const std::size_t arity = formula_arity(id);
  if (arity == 0 ? d.empty() : d.size() != arity) {
    throw std::invalid_argument(name + ": expected " +
                                (arity == 0 ? std::string("at least 1") : std::to_string(arity)) +
                                " values, got " + std::to_string(d.size()));
  }
  if (std::any_of(d.begin(), d.end(), [](Integer x) { return x < 1; })) {
    throw DomainError(name + ": degrees must be positive");
  }

  FormulaResult r;
  r.id = id;
  r.input.assign(d.begin(), d.end());

  const bool descending = std::is_sorted(d.begin(), d.end(), std::greater<>());
  const bool ascending = std::is_sorted(d.begin(), d.end());
  auto require = [&](bool ok, const char* order) {
    if (ok) return;
    const std::string msg = name + ": input is not " + order;
    if (policy == OrderingPolicy::enforce) throw DomainError(msg);
    r.notes.push_back(msg);
  };

  using detail::cube;
  using detail::sq;
  switch (id) {
    case FormulaId::three_c_max:
      require(descending, "non-increasing");
      r.value = sq(d[0] - 1) + sq(d[1] - 1) + (d[2] - 1) * (d[2] - 2) * (d[0] - d[2]) * (d[1] - d[2]);
      break;
    case FormulaId::three_c_min:
      require(descending, "non-increasing");
      r.value = sq(d[0] - 1) + sq(d[2] - 1) + (d[1] - 1) * (d[1] - 2) + (d[0] - d[2]);
      break;
    case FormulaId::hyp_four:
      require(descending, "non-increasing");
      r.value = sq(d[0] - 1) + sq(d[1] - 1) + sq(d[2] - 1) + (3 * d[3] - d[0] - d[1] - d[2]) +
                (d[3] - 1) * (d[3] - 3);
      break;
    case FormulaId::hyp_four_bounds: {
      require(descending, "non-increasing");
      const auto [hi, lo] = detail::hyp_four_pair(d);
      r.value = hi;
      r.secondary = lo;
      break;
    }
    case FormulaId::cor_diff_bound: {
      require(descending, "non-increasing");
      const auto [hi, lo] = detail::hyp_four_pair(d);
      r.value = (hi - lo) < 2 * d[0] ? 1 : 0;
      r.secondary = hi - lo;
      break;
    }
    case FormulaId::cor_floor_bound:
      require(descending, "non-increasing");
      r.value = (sq(d[0]) + sq(d[3])) / 2;
      break;
    case FormulaId::sigma_five: {
      require(ascending, "non-decreasing");
      Integer s = 0;
      for (std::size_t i = 0; i < 3; ++i) s += d[i] * sq(d[i + 1]);
      s += cube(d[0] - 1) + cube(d[3]);
      for (std::size_t i = 0; i < 4; ++i) s += sq(d[i] - d[i + 1]);
      r.value = s;
      break;
    }
    case FormulaId::sigma_ordered: {
      require(ascending, "non-decreasing");
      const std::size_t n = d.size();
      Integer s = (d[0] + 1) * sq(d[0] - 1);
      if (n > 1) s += (d[n - 1] + 1) * sq(d[n - 1] - 1);
      for (std::size_t i = 1; i + 1 < n; ++i) s += (d[i] + 2) * sq(d[i] - 1) + sq(d[i] - d[i + 1]);
      r.value = s + 2 * static_cast<Integer>(n) - 2;
      break;
    }
    case FormulaId::cor3_part1: {
      const Integer d3 = d[0];
      const Integer d4 = d[1];
      if (d3 <= 3) throw DomainError(name + ": requires d3 > 3");
      if (d4 <= 3) throw DomainError(name + ": requires d4 > 3 so the log base d4-2 exceeds 1");
      const Integer k = 2 + (d4 - 2) / (d3 - 1);
      r.value = detail::log_ratio_below(2 * d4 - 4, d3 - 1, d4 - 2, k) ? 1 : 0;
      r.secondary = k;
      break;
    }
  }
  return r;
}

// Displayed irr of the worked-example tree in terms of the root degree and
// the degrees of its four children; the third child carries two pendant
// leaves and the fourth carries three.
inline Integer worked_example_irr(Integer root_degree, const std::array<Integer, 4>& child_degrees) {
  Integer s = 0;
  for (Integer d : child_degrees) s += std::abs(root_degree - d);
  return s + 2 * std::abs(child_degrees[2] - 1) + 3 * std::abs(child_degrees[3] - 1);
}

inline FormulaResult evaluate_formula(FormulaId id, std::initializer_list<Integer> d,
                                      OrderingPolicy policy = OrderingPolicy::enforce) {
  return evaluate_formula(id, std::span<const Integer>(d.begin(), d.size()), policy);
}

}  // namespace treeirr

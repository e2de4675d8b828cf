#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "treeirr/degree_sequence.hpp"
#include "treeirr/errors.hpp"
#include "treeirr/tree.hpp"

namespace treeirr {

struct EnumerationLimits {
  std::size_t max_order = 16;
  std::uint64_t max_codes = 10'000'000;  // Prufer codes visited per realization stream
};

// Deduplicated, deterministic collection of trees: one canonical_form
// representative per isomorphism class, in ascending canonical-code order.
class TreeStream {
 public:
  using const_iterator = std::vector<Tree>::const_iterator;

  const_iterator begin() const noexcept { return trees_.begin(); }
  const_iterator end() const noexcept { return trees_.end(); }
  std::size_t size() const noexcept { return trees_.size(); }
  bool empty() const noexcept { return trees_.empty(); }
  const Tree& operator[](std::size_t i) const { return trees_.at(i); }
  const std::vector<CanonicalCode>& codes() const noexcept { return codes_; }

  friend bool operator==(const TreeStream&, const TreeStream&) = default;

 private:
  friend class TreeCollector;
  std::vector<Tree> trees_;
  std::vector<CanonicalCode> codes_;
};

// Accumulates trees, keeping the first tree seen per canonical code.
class TreeCollector {
 public:
  bool insert(const Tree& t) {
    auto code = canonical_code(t);
    if (seen_.count(code)) return false;
    seen_.emplace(std::move(code), canonical_form(t));
    return true;
  }

  void merge(TreeCollector&& other) {
    for (auto& entry : other.seen_) seen_.insert(std::move(entry));
  }

  std::size_t size() const noexcept { return seen_.size(); }

  TreeStream finish() && {
    TreeStream s;
    s.trees_.reserve(seen_.size());
    s.codes_.reserve(seen_.size());
    for (auto& [code, tree] : seen_) {
      s.codes_.push_back(code);
      s.trees_.push_back(std::move(tree));
    }
    seen_.clear();
    return s;
  }

 private:
  std::map<CanonicalCode, Tree> seen_;
};

namespace detail {

inline void check_order(std::size_t n, const EnumerationLimits& limits) {
  if (n < 1 || n > limits.max_order) {
    throw GuardError("order " + std::to_string(n) + " outside enumeration guard 1.." +
                     std::to_string(limits.max_order));
  }
}

// parent[i] = most recent earlier vertex one level up.
inline Tree tree_from_levels(const std::vector<std::size_t>& levels) {
  const std::size_t n = levels.size();
  std::vector<Vertex> last_at_level(n + 1, 0);
  std::vector<Edge> edges;
  edges.reserve(n ? n - 1 : 0);
  for (Vertex i = 0; i < n; ++i) {
    if (i > 0) edges.emplace_back(last_at_level[levels[i] - 1], i);
    last_at_level[levels[i]] = i;
  }
  return Tree(n, std::move(edges));
}

}  // namespace detail

// Visits every rooted unlabeled tree on n vertices exactly once as a canonical
// level sequence (root at level 0), in reverse lexicographic order, starting
// from the path and ending at the star.
template <typename Visitor>
void for_each_rooted_level_sequence(std::size_t n, Visitor&& visit) {
  if (n == 0) return;
  std::vector<std::size_t> levels(n);
  for (std::size_t i = 0; i < n; ++i) levels[i] = i;
  while (true) {
    visit(static_cast<const std::vector<std::size_t>&>(levels));
    std::size_t p = n;
    for (std::size_t i = n; i-- > 1;) {
      if (levels[i] > 1) {
        p = i;
        break;
      }
    }
    if (p == n) return;
    std::size_t q = p;
    while (levels[--q] != levels[p] - 1) {
    }
    const std::size_t shift = p - q;
    for (std::size_t i = p; i < n; ++i) levels[i] = levels[i - shift];
  }
}

// All unlabeled trees of order n, via rooted level-sequence generation.
inline TreeStream all_trees(std::size_t n, const EnumerationLimits& limits = {}) {
  detail::check_order(n, limits);
  TreeCollector collector;
  for_each_rooted_level_sequence(n, [&](const std::vector<std::size_t>& levels) {
    collector.insert(detail::tree_from_levels(levels));
  });
  return std::move(collector).finish();
}

// Every tree-graphical degree sequence of length n, in descending lexicographic order.
inline std::vector<DegreeSequence> tree_degree_sequences(std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {DegreeSequence::from_values({0})};
  std::vector<DegreeSequence> out;
  std::vector<Integer> current;
  const Integer total = 2 * static_cast<Integer>(n - 1);
  std::function<void(Integer, Integer, std::size_t)> extend = [&](Integer remaining, Integer cap,
                                                                   std::size_t slots) {
    if (slots == 0) {
      if (remaining == 0) out.push_back(DegreeSequence::from_values(current));
      return;
    }
    const Integer hi = std::min(cap, remaining - static_cast<Integer>(slots - 1));
    for (Integer x = hi; x >= 1; --x) {
      if (x * static_cast<Integer>(slots) < remaining) break;
      current.push_back(x);
      extend(remaining - x, x, slots - 1);
      current.pop_back();
    }
  };
  extend(total, total, n);
  return out;
}

// Number of distinct Prufer codes whose vertex multiplicities match seq,
// saturated at UINT64_MAX.
inline std::uint64_t realization_code_count(const DegreeSequence& seq) {
  if (seq.length() <= 2) return 1;
  __extension__ typedef unsigned __int128 Wide;
  const Wide cap = std::numeric_limits<std::uint64_t>::max();
  Wide count = 1;
  std::uint64_t remaining = seq.length() - 2;
  for (Integer d : seq.values()) {
    const auto k = static_cast<std::uint64_t>(d - 1);
    Wide binom = 1;
    for (std::uint64_t j = 0; j < k; ++j) binom = binom * (remaining - j) / (j + 1);
    remaining -= k;
    count *= binom;
    if (count > cap) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(count);
}

// Isomorphism classes of trees realizing seq. Vertex v of the working labeled
// tree gets degree seq[v]; every distinct Prufer code that lists v exactly
// seq[v]-1 times is decoded and deduplicated.
inline TreeStream trees_with_degree_sequence(const DegreeSequence& seq,
                                             const EnumerationLimits& limits = {}) {
  if (!seq.tree_graphical()) {
    throw std::invalid_argument("degree sequence " + to_string(seq) + " is not tree-graphical");
  }
  const std::size_t n = seq.length();
  detail::check_order(n, limits);
  TreeCollector collector;
  if (n == 1) {
    collector.insert(Tree(1, {}));
    return std::move(collector).finish();
  }
  const auto expected = realization_code_count(seq);
  if (expected > limits.max_codes) {
    throw GuardError("degree sequence " + to_string(seq) + " needs " + std::to_string(expected) +
                     " Prufer codes, above the cap of " + std::to_string(limits.max_codes));
  }
  PruferCode code;
  code.reserve(n - 2);
  for (Vertex v = 0; v < n; ++v) {
    for (Integer j = 1; j < seq[v]; ++j) code.push_back(v);
  }
  do {
    collector.insert(prufer_decode(code, n));
  } while (std::next_permutation(code.begin(), code.end()));
  return std::move(collector).finish();
}

// All unlabeled trees of order n, as the union of Prufer realizations over
// every tree-graphical degree sequence. Independent of all_trees.
inline TreeStream all_trees_by_prufer(std::size_t n, const EnumerationLimits& limits = {}) {
  detail::check_order(n, limits);
  TreeCollector collector;
  for (const auto& seq : tree_degree_sequences(n)) {
    for (const auto& t : trees_with_degree_sequence(seq, limits)) collector.insert(t);
  }
  return std::move(collector).finish();
}

// Moving the pendant edge {support, donor} to {recipient, donor}, where
// recipient is another neighbor of the support vertex.
struct RelocationStep {
  Vertex support = 0;
  Vertex donor = 0;
  Vertex recipient = 0;
  Integer lambda = 0;  // degree of the support vertex before the move
  std::array<Integer, 3> before{};  // degrees of (support, donor, recipient)
  std::array<Integer, 3> after{};
};

struct Relocation {
  Tree tree;
  RelocationStep step;
};

inline Relocation relocate_leaf(const Tree& t, Vertex support, Vertex donor, Vertex recipient) {
  const std::size_t n = t.order();
  if (support >= n || donor >= n || recipient >= n) throw std::out_of_range("vertex id out of range");
  const auto nbrs = t.neighbors(support);
  auto adjacent = [&](Vertex w) { return std::binary_search(nbrs.begin(), nbrs.end(), w); };
  if (!adjacent(donor) || !t.is_leaf(donor)) {
    throw std::invalid_argument("donor " + std::to_string(donor) + " is not a leaf of vertex " +
                                std::to_string(support));
  }
  if (recipient == donor || !adjacent(recipient)) {
    throw std::invalid_argument("recipient " + std::to_string(recipient) +
                                " is not another neighbor of vertex " + std::to_string(support));
  }
  const auto lambda = static_cast<Integer>(t.degree(support));
  if (lambda < 3) throw std::invalid_argument("lambda below 3");

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  const Edge removed{std::min(support, donor), std::max(support, donor)};
  for (const auto& e : t.edges()) {
    if (e != removed) edges.push_back(e);
  }
  edges.emplace_back(recipient, donor);
  Tree moved(n, std::move(edges));

  RelocationStep step;
  step.support = support;
  step.donor = donor;
  step.recipient = recipient;
  step.lambda = lambda;
  step.before = {lambda, 1, static_cast<Integer>(t.degree(recipient))};
  step.after = {static_cast<Integer>(moved.degree(support)), static_cast<Integer>(moved.degree(donor)),
                static_cast<Integer>(moved.degree(recipient))};
  return {std::move(moved), step};
}

struct RelocationMove {
  Vertex support;
  Vertex donor;
  Vertex recipient;
};

// Every (support, donor, recipient) triple accepted by relocate_leaf.
inline std::vector<RelocationMove> relocation_moves(const Tree& t) {
  std::vector<RelocationMove> moves;
  for (Vertex y = 0; y < t.order(); ++y) {
    if (t.degree(y) < 3) continue;
    for (Vertex donor : t.neighbors(y)) {
      if (!t.is_leaf(donor)) continue;
      for (Vertex recipient : t.neighbors(y)) {
        if (recipient != donor) moves.push_back({y, donor, recipient});
      }
    }
  }
  return moves;
}

}  // namespace treeirr

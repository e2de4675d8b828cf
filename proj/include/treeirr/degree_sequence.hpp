#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "treeirr/tree.hpp"

namespace treeirr {

// Non-increasing sequence of vertex degrees.
//
// Entries are positive, except for the one-vertex sequence (0). The sequence
// is tree-graphical when it is (0), or when n >= 2 and the entries sum to
// 2(n - 1); positivity plus that sum is sufficient for trees.
class DegreeSequence {
 public:
  static DegreeSequence from_values(std::vector<Integer> values) {
    if (values.empty()) throw std::invalid_argument("degree sequence is empty");
    const bool single_zero = values.size() == 1 && values.front() == 0;
    if (!single_zero && std::any_of(values.begin(), values.end(), [](Integer x) { return x < 1; })) {
      throw std::invalid_argument("degree sequence entries must be positive");
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return DegreeSequence(std::move(values));
  }

  const std::vector<Integer>& values() const noexcept { return values_; }
  std::size_t length() const noexcept { return values_.size(); }
  Integer sum() const { return std::accumulate(values_.begin(), values_.end(), Integer{0}); }
  Integer operator[](std::size_t i) const { return values_.at(i); }

  bool tree_graphical() const {
    const auto n = static_cast<Integer>(values_.size());
    if (n == 1) return values_.front() == 0;
    return sum() == 2 * (n - 1);
  }

  // (value, multiplicity) pairs, largest value first.
  std::vector<std::pair<Integer, std::size_t>> multiplicities() const {
    std::vector<std::pair<Integer, std::size_t>> out;
    for (Integer x : values_) {
      if (!out.empty() && out.back().first == x) {
        ++out.back().second;
      } else {
        out.emplace_back(x, 1);
      }
    }
    return out;
  }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence& a, const DegreeSequence& b) {
    return a.values_ <=> b.values_;
  }

 private:
  explicit DegreeSequence(std::vector<Integer> values) : values_(std::move(values)) {}
  std::vector<Integer> values_;
};

inline std::string to_string(const DegreeSequence& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + ")";
}

// Compact x^k form, e.g. (3,1^3).
inline std::string to_multiset_string(const DegreeSequence& s) {
  std::string out = "(";
  bool first = true;
  for (const auto& [value, count] : s.multiplicities()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(value);
    if (count > 1) out += "^" + std::to_string(count);
  }
  return out + ")";
}

struct SequenceValidation {
  std::optional<DegreeSequence> sequence;
  std::string reason;

  explicit operator bool() const noexcept { return sequence.has_value(); }
};

inline SequenceValidation validate_tree_sequence(std::span<const Integer> values) {
  if (values.empty()) return {std::nullopt, "empty sequence"};
  if (values.size() == 1) {
    if (values.front() == 0) return {DegreeSequence::from_values({0}), ""};
    return {std::nullopt, "a single vertex must have degree 0"};
  }
  for (Integer x : values) {
    if (x < 1) return {std::nullopt, "entry " + std::to_string(x) + " is not positive"};
  }
  auto seq = DegreeSequence::from_values({values.begin(), values.end()});
  const auto n = static_cast<Integer>(values.size());
  if (seq.sum() != 2 * (n - 1)) {
    return {std::nullopt, "sum " + std::to_string(seq.sum()) + " != 2(n-1) = " + std::to_string(2 * (n - 1))};
  }
  return {std::move(seq), ""};
}

using PruferCode = std::vector<Vertex>;

// Repeatedly removes the smallest-id leaf and records its neighbor.
inline PruferCode prufer_encode(const Tree& t) {
  const std::size_t n = t.order();
  if (n < 2) throw std::invalid_argument("Prufer encoding needs at least two vertices");
  std::vector<std::size_t> deg(n);
  std::vector<bool> removed(n, false);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaf_heap;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) leaf_heap.push(v);
  }
  PruferCode code;
  code.reserve(n - 2);
  while (code.size() < n - 2) {
    const Vertex leaf = leaf_heap.top();
    leaf_heap.pop();
    removed[leaf] = true;
    for (Vertex w : t.neighbors(leaf)) {
      if (removed[w]) continue;
      code.push_back(w);
      if (--deg[w] == 1) leaf_heap.push(w);
    }
  }
  return code;
}

inline Tree prufer_decode(std::span<const Vertex> code, std::size_t n) {
  if (n < 2) throw std::invalid_argument("Prufer decoding needs n >= 2");
  if (code.size() != n - 2) throw std::invalid_argument("Prufer code must have length n - 2");
  std::vector<std::size_t> deg(n, 1);
  for (Vertex x : code) {
    if (x >= n) throw std::out_of_range("Prufer code entry " + std::to_string(x) + " out of range");
    ++deg[x];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaf_heap;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 1) leaf_heap.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex x : code) {
    const Vertex leaf = leaf_heap.top();
    leaf_heap.pop();
    edges.emplace_back(leaf, x);
    if (--deg[x] == 1) leaf_heap.push(x);
  }
  const Vertex a = leaf_heap.top();
  leaf_heap.pop();
  edges.emplace_back(a, leaf_heap.top());
  return Tree(n, std::move(edges));
}

inline Tree build_path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Tree(n, std::move(edges));
}

// Center 0 joined to leaves 1..leaf_count.
inline Tree build_star(std::size_t leaf_count) {
  if (leaf_count < 1) throw std::invalid_argument("star needs at least one leaf");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaf_count; ++v) edges.emplace_back(0, v);
  return Tree(leaf_count + 1, std::move(edges));
}

// Spine vertices 0..k-1 in the given order, each padded with pendant leaves
// until its degree equals the requested spine degree.
inline Tree build_caterpillar(std::span<const Integer> spine) {
  const std::size_t k = spine.size();
  if (k == 0) throw std::invalid_argument("caterpillar spine is empty");
  for (std::size_t i = 0; i < k; ++i) {
    const Integer spine_nbrs = (i > 0 ? 1 : 0) + (i + 1 < k ? 1 : 0);
    const Integer need = std::max<Integer>(spine_nbrs, 1);
    if (spine[i] < need) {
      throw std::invalid_argument("spine slot " + std::to_string(i) + " needs degree >= " +
                                  std::to_string(need) + ", got " + std::to_string(spine[i]));
    }
  }
  std::vector<Edge> edges;
  for (Vertex i = 1; i < k; ++i) edges.emplace_back(i - 1, i);
  Vertex next = k;
  for (std::size_t i = 0; i < k; ++i) {
    const Integer spine_nbrs = (i > 0 ? 1 : 0) + (i + 1 < k ? 1 : 0);
    for (Integer j = 0; j < spine[i] - spine_nbrs; ++j) edges.emplace_back(i, next++);
  }
  return Tree(next, std::move(edges));
}

// Spine degrees 3, 5, ..., 2m+1.
inline std::vector<Integer> odd_spine(std::size_t m) {
  std::vector<Integer> spine(m);
  for (std::size_t k = 1; k <= m; ++k) spine[k - 1] = static_cast<Integer>(2 * k + 1);
  return spine;
}

enum class SpecialKind { star, path, caterpillar };

// star: {leaf_count}; path: {n}; caterpillar: spine degrees.
inline Tree build_special(SpecialKind kind, std::span<const Integer> params) {
  auto single = [&](const char* what) {
    if (params.size() != 1 || params.front() < 1) {
      throw std::invalid_argument(std::string(what) + " takes one positive parameter");
    }
    return static_cast<std::size_t>(params.front());
  };
  switch (kind) {
    case SpecialKind::star: return build_star(single("star"));
    case SpecialKind::path: return build_path(single("path"));
    case SpecialKind::caterpillar: return build_caterpillar(params);
  }
  throw std::invalid_argument("unknown special kind");
}

}  // namespace treeirr

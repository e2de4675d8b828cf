#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace treeirr {

using Vertex = std::size_t;
using Integer = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;

// Immutable tree on vertex ids 0..n-1.
//
// Construction validates everything: exactly n-1 edges, ids in range, no
// self-loops or duplicate edges, and connectivity (which, with n-1 edges,
// implies acyclicity). Edges are stored normalized (u < v) and sorted, so two
// trees compare equal exactly when they are the same labeled tree.
class Tree {
 public:
  Tree(std::size_t order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
    if (order_ == 0) throw std::invalid_argument("tree must have at least one vertex");
    if (edges_.size() != order_ - 1) {
      throw std::invalid_argument("tree on " + std::to_string(order_) + " vertices needs " +
                                  std::to_string(order_ - 1) + " edges, got " +
                                  std::to_string(edges_.size()));
    }
    for (auto& [u, v] : edges_) {
      if (u >= order_ || v >= order_) throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw std::invalid_argument("duplicate edge");
    }

    adjacency_.resize(order_);
    for (const auto& [u, v] : edges_) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

    std::vector<bool> seen(order_, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adjacency_[x]) {
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    if (reached != order_) throw std::invalid_argument("edges do not form a connected tree");
  }

  // Infers the order as 1 + the largest endpoint.
  static Tree from_edges(std::vector<Edge> edges) {
    std::size_t order = 1;
    for (const auto& [u, v] : edges) order = std::max({order, u + 1, v + 1});
    return Tree(order, std::move(edges));
  }

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool is_leaf(Vertex v) const { return degree(v) == 1; }

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t order_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

inline std::vector<Integer> degrees(const Tree& t) {
  std::vector<Integer> d(t.order());
  for (Vertex v = 0; v < t.order(); ++v) d[v] = static_cast<Integer>(t.degree(v));
  return d;
}

// Degrees sorted non-increasing.
inline std::vector<Integer> degree_multiset(const Tree& t) {
  auto d = degrees(t);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

inline Integer max_degree(const Tree& t) {
  Integer best = 0;
  for (Vertex v = 0; v < t.order(); ++v) best = std::max(best, static_cast<Integer>(t.degree(v)));
  return best;
}

inline std::vector<Vertex> leaves(const Tree& t) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.is_leaf(v)) out.push_back(v);
  }
  return out;
}

inline std::size_t leaf_neighbor_count(const Tree& t, Vertex v) {
  const auto nbrs = t.neighbors(v);
  return static_cast<std::size_t>(
      std::count_if(nbrs.begin(), nbrs.end(), [&](Vertex w) { return t.is_leaf(w); }));
}

// Which definition of "strong support vertex" to apply. two_leaves is the
// operative one; one_leaf is the weaker "adjacent to some leaf" reading.
enum class SupportReading { two_leaves, one_leaf };

inline std::vector<Vertex> strong_support_vertices(const Tree& t,
                                                   SupportReading reading = SupportReading::two_leaves) {
  const std::size_t needed = reading == SupportReading::two_leaves ? 2 : 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (leaf_neighbor_count(t, v) >= needed) out.push_back(v);
  }
  return out;
}

// A caterpillar is a tree whose non-leaf vertices induce a path.
inline bool is_caterpillar(const Tree& t) {
  if (t.order() <= 2) return true;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.is_leaf(v)) continue;
    if (t.degree(v) - leaf_neighbor_count(t, v) > 2) return false;
  }
  return true;
}

// One or two central vertices, found by peeling leaves layer by layer.
inline std::vector<Vertex> centers(const Tree& t) {
  const std::size_t n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      deg[leaf] = 0;
      for (Vertex w : t.neighbors(leaf)) {
        if (deg[w] > 1 && --deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

// Relabeling-invariant encoding of a tree. Equal codes <=> isomorphic trees.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    return a.bytes_.compare(b.bytes_) <=> 0;
  }

 private:
  std::string bytes_;
};

namespace detail {

struct RootedCodes {
  std::vector<Vertex> parent;
  std::vector<Vertex> bfs_order;
  std::vector<std::string> code;  // AHU code of the subtree below each vertex
};

inline RootedCodes rooted_codes(const Tree& t, Vertex root) {
  const std::size_t n = t.order();
  RootedCodes rc{std::vector<Vertex>(n, n), {}, std::vector<std::string>(n)};
  rc.bfs_order.reserve(n);
  rc.bfs_order.push_back(root);
  rc.parent[root] = root;
  for (std::size_t i = 0; i < rc.bfs_order.size(); ++i) {
    for (Vertex w : t.neighbors(rc.bfs_order[i])) {
      if (rc.parent[w] == n) {
        rc.parent[w] = rc.bfs_order[i];
        rc.bfs_order.push_back(w);
      }
    }
  }
  std::vector<std::string_view> kids;
  for (auto it = rc.bfs_order.rbegin(); it != rc.bfs_order.rend(); ++it) {
    const Vertex v = *it;
    kids.clear();
    for (Vertex w : t.neighbors(v)) {
      if (w != rc.parent[v]) kids.push_back(rc.code[w]);
    }
    std::sort(kids.begin(), kids.end());
    std::string& code = rc.code[v];
    code = "(";
    for (auto k : kids) code += k;
    code += ')';
  }
  return rc;
}

}  // namespace detail

// AHU parenthesis string of t rooted at `root`; children sorted lexicographically.
inline std::string rooted_code(const Tree& t, Vertex root) {
  return std::move(detail::rooted_codes(t, root).code[root]);
}

inline CanonicalCode canonical_code(const Tree& t) {
  const auto c = centers(t);
  std::string best = rooted_code(t, c.front());
  if (c.size() == 2) best = std::min(best, rooted_code(t, c.back()));
  return CanonicalCode(std::move(best));
}

// Relabels t so that isomorphic inputs produce the identical labeled tree:
// root at the center with the smaller rooted code, then number vertices in
// preorder visiting children in ascending code order.
inline Tree canonical_form(const Tree& t) {
  const auto c = centers(t);
  auto rc = detail::rooted_codes(t, c.front());
  if (c.size() == 2) {
    auto other = detail::rooted_codes(t, c.back());
    if (other.code[c.back()] < rc.code[c.front()]) rc = std::move(other);
  }
  const Vertex root = rc.bfs_order.front();
  const std::size_t n = t.order();
  std::vector<Vertex> new_id(n, n);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::vector<Vertex> stack{root};
  Vertex next = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    new_id[v] = next++;
    if (v != root) edges.emplace_back(new_id[rc.parent[v]], new_id[v]);
    std::vector<Vertex> kids;
    for (Vertex w : t.neighbors(v)) {
      if (w != rc.parent[v]) kids.push_back(w);
    }
    // Pushed in descending order so the smallest code is visited first.
    std::sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) { return rc.code[a] > rc.code[b]; });
    for (Vertex w : kids) stack.push_back(w);
  }
  return Tree(n, std::move(edges));
}

inline bool is_isomorphic(const Tree& a, const Tree& b) {
  if (a.order() != b.order()) return false;
  if (degree_multiset(a) != degree_multiset(b)) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace treeirr

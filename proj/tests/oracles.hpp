#pragma once

// Brute-force references used only by the tests. None of these reuse the
// library's canonical codes or enumerators.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "treeirr/tree.hpp"

namespace oracle {

using treeirr::Edge;
using treeirr::Integer;
using treeirr::Tree;
using treeirr::Vertex;

// Tries every bijection. Fine up to ~8 vertices.
inline bool isomorphic_by_permutation(const Tree& a, const Tree& b) {
  if (a.order() != b.order()) return false;
  const std::size_t n = a.order();
  std::set<Edge> target(b.edges().begin(), b.edges().end());
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& [u, v] : a.edges()) {
      const Vertex x = std::min(perm[u], perm[v]);
      const Vertex y = std::max(perm[u], perm[v]);
      if (!target.count({x, y})) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Every labeled tree on n >= 2 vertices, decoded from all n^(n-2) Prufer
// codes with a plain O(n^2) decoder written independently of the library's.
inline std::vector<Tree> all_labeled_trees(std::size_t n) {
  std::vector<Tree> out;
  if (n == 2) {
    out.emplace_back(2, std::vector<Edge>{{0, 1}});
    return out;
  }
  std::vector<Vertex> code(n - 2, 0);
  while (true) {
    std::vector<std::size_t> deg(n, 1);
    for (Vertex x : code) ++deg[x];
    std::vector<Edge> edges;
    for (Vertex x : code) {
      Vertex leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, x);
      --deg[leaf];
      --deg[x];
    }
    std::vector<Vertex> last;
    for (Vertex v = 0; v < n; ++v) {
      if (deg[v] == 1) last.push_back(v);
    }
    edges.emplace_back(last[0], last[1]);
    out.emplace_back(n, std::move(edges));

    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) break;
  }
  return out;
}

// Rooted unlabeled trees, A000081: r(1)=1,
// r(n+1) = (1/n) sum_{k=1..n} (sum_{d|k} d r(d)) r(n-k+1).
inline std::vector<std::uint64_t> rooted_tree_counts(std::size_t max_n) {
  std::vector<std::uint64_t> r(max_n + 1, 0);
  r[1] = 1;
  for (std::size_t n = 1; n < max_n; ++n) {
    std::uint64_t total = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      std::uint64_t s = 0;
      for (std::size_t d = 1; d <= k; ++d) {
        if (k % d == 0) s += d * r[d];
      }
      total += s * r[n - k + 1];
    }
    r[n + 1] = total / n;
  }
  return r;
}

// Free trees from rooted ones (Otter):
// t(n) = r(n) - sum_{i < n/2} r(i) r(n-i) - [n even] C(r(n/2), 2).
inline std::vector<std::uint64_t> free_tree_counts(std::size_t max_n) {
  const auto r = rooted_tree_counts(max_n);
  std::vector<std::uint64_t> t(max_n + 1, 0);
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::uint64_t pairs = 0;
    for (std::size_t i = 1; 2 * i < n; ++i) pairs += r[i] * r[n - i];
    if (n % 2 == 0) pairs += r[n / 2] * (r[n / 2] - 1) / 2;
    t[n] = r[n] - pairs;
  }
  return t;
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::vector<Integer> degree_vector(const Tree& t) {
  std::vector<Integer> d(t.order(), 0);
  for (const auto& [u, v] : t.edges()) {
    ++d[u];
    ++d[v];
  }
  return d;
}

// Straight from the definitions, pair by pair and edge by edge.
inline Integer irr(const Tree& t) {
  const auto d = degree_vector(t);
  Integer s = 0;
  for (const auto& [u, v] : t.edges()) s += d[u] > d[v] ? d[u] - d[v] : d[v] - d[u];
  return s;
}

inline Integer sigma(const Tree& t) {
  const auto d = degree_vector(t);
  Integer s = 0;
  for (const auto& [u, v] : t.edges()) s += (d[u] - d[v]) * (d[u] - d[v]);
  return s;
}

inline Integer irr_total(const Tree& t) {
  const auto d = degree_vector(t);
  Integer s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) s += d[i] > d[j] ? d[i] - d[j] : d[j] - d[i];
  }
  return s;
}

}  // namespace oracle

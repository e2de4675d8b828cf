#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "treeirr/tree.hpp"

namespace treeirr {

// Integer invariants of one tree. All sums are exact in 64-bit arithmetic for
// n <= 1e4 and max degree <= 1e4 (the largest term, sigma, is at most m * D^2).
struct IndexBundle {
  Integer irr = 0;        // Albertson: sum over edges of |d(u) - d(v)|
  Integer irr_total = 0;  // sum over unordered vertex pairs of |d(u) - d(v)|
  Integer sigma = 0;      // sum over edges of (d(u) - d(v))^2
  Integer m1 = 0;         // sum over vertices of d(v)^2
  Integer m2 = 0;         // sum over edges of d(u) * d(v)

  friend bool operator==(const IndexBundle&, const IndexBundle&) = default;
};

enum class IndexKind { irr, sigma, irr_total };

inline std::string_view index_name(IndexKind k) {
  switch (k) {
    case IndexKind::irr: return "irr";
    case IndexKind::sigma: return "sigma";
    case IndexKind::irr_total: return "irr_T";
  }
  return "?";
}

inline Integer index_value(const IndexBundle& b, IndexKind k) {
  switch (k) {
    case IndexKind::irr: return b.irr;
    case IndexKind::sigma: return b.sigma;
    case IndexKind::irr_total: return b.irr_total;
  }
  return 0;
}

inline IndexBundle compute_indices(const Tree& t) {
  const auto d = degrees(t);
  IndexBundle b;
  for (const auto& [u, v] : t.edges()) {
    const Integer diff = d[u] - d[v];
    b.irr += std::abs(diff);
    b.sigma += diff * diff;
    b.m2 += d[u] * d[v];
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    b.m1 += d[i] * d[i];
    for (std::size_t j = i + 1; j < d.size(); ++j) b.irr_total += std::abs(d[i] - d[j]);
  }
  return b;
}

inline Integer albertson_index(const Tree& t) { return compute_indices(t).irr; }
inline Integer sigma_index(const Tree& t) { return compute_indices(t).sigma; }

// Total irregularity from the sorted degree sequence alone:
// 2(n+1)m - 2 * sum_i i * d_i with d_1 >= ... >= d_n (1-based i).
inline Integer total_irregularity_by_sequence(const Tree& t) {
  const auto d = degree_multiset(t);
  const auto n = static_cast<Integer>(t.order());
  const auto m = static_cast<Integer>(t.size());
  Integer weighted = 0;
  for (std::size_t i = 0; i < d.size(); ++i) weighted += static_cast<Integer>(i + 1) * d[i];
  return 2 * (n + 1) * m - 2 * weighted;
}

// Sum of |d(x_i) - d(x_{i+1})| along the unique u-v path.
inline Integer path_imbalance(const Tree& t, Vertex u, Vertex v) {
  if (u >= t.order() || v >= t.order()) throw std::out_of_range("vertex id out of range");
  const std::size_t n = t.order();
  std::vector<Vertex> parent(n, n);
  std::vector<Vertex> queue{u};
  parent[u] = u;
  for (std::size_t i = 0; i < queue.size() && parent[v] == n; ++i) {
    for (Vertex w : t.neighbors(queue[i])) {
      if (parent[w] == n) {
        parent[w] = queue[i];
        queue.push_back(w);
      }
    }
  }
  Integer total = 0;
  for (Vertex x = v; x != u; x = parent[x]) {
    total += std::abs(static_cast<Integer>(t.degree(x)) - static_cast<Integer>(t.degree(parent[x])));
  }
  return total;
}

}  // namespace treeirr

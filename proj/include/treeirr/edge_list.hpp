#pragma once

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treeirr/errors.hpp"
#include "treeirr/tree.hpp"

namespace treeirr {

// A parsed edge list. Vertex ids are dense (0..n-1, in ascending order of the
// original labels); labels[v] is the label vertex v had in the input.
struct EdgeListDocument {
  Tree tree;
  std::vector<Integer> labels;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::optional<Integer> parse_integer(std::string_view tok) {
  Integer value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

class UnionFind {
 public:
  std::size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

// One "u v" pair per line; '#' starts a comment, blank lines are ignored.
// A lone integer on a line declares an isolated vertex, which is only valid
// for the one-vertex tree.
inline EdgeListDocument parse_edge_list(std::string_view text) {
  std::map<Integer, std::size_t> slot;  // label -> union-find slot
  detail::UnionFind uf;
  std::set<std::pair<Integer, Integer>> seen;
  std::vector<std::pair<Integer, Integer>> edges;
  auto slot_of = [&](Integer label) {
    auto [it, fresh] = slot.try_emplace(label, 0);
    if (fresh) it->second = uf.add();
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() > 2) throw ParseError(line_no, "malformed line: expected 'u v'");
    std::vector<Integer> ids;
    for (auto tok : tokens) {
      const auto v = detail::parse_integer(tok);
      if (!v) throw ParseError(line_no, "malformed line: '" + std::string(tok) + "' is not an integer");
      if (*v < 0) throw ParseError(line_no, "negative vertex label " + std::string(tok));
      ids.push_back(*v);
    }
    if (ids.size() == 1) {
      slot_of(ids[0]);
      continue;
    }
    const Integer u = std::min(ids[0], ids[1]);
    const Integer v = std::max(ids[0], ids[1]);
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (!seen.emplace(u, v).second) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    if (!uf.unite(slot_of(u), slot_of(v))) {
      throw ParseError(line_no, "cycle closed by edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges.emplace_back(u, v);
  }

  if (slot.empty()) throw ParseError(0, "empty document: no vertices");
  if (edges.size() + 1 != slot.size()) {
    throw ParseError(0, "disconnected input: " + std::to_string(slot.size()) + " vertices but " +
                            std::to_string(edges.size()) + " edges");
  }

  EdgeListDocument doc{Tree(1, {}), {}};
  std::map<Integer, Vertex> dense;
  for (const auto& [label, unused] : slot) {
    dense.emplace(label, doc.labels.size());
    doc.labels.push_back(label);
  }
  std::vector<Edge> tree_edges;
  tree_edges.reserve(edges.size());
  for (const auto& [u, v] : edges) tree_edges.emplace_back(dense.at(u), dense.at(v));
  doc.tree = Tree(doc.labels.size(), std::move(tree_edges));
  return doc;
}

inline Tree parse_tree(std::string_view text) { return parse_edge_list(text).tree; }

// Writes "u v" lines. With labels, vertex v is written as labels[v].
inline std::string emit_edge_list(const Tree& t, std::span<const Integer> labels = {}) {
  auto name = [&](Vertex v) { return labels.empty() ? std::to_string(v) : std::to_string(labels[v]); };
  std::string out;
  if (t.order() == 1) return name(0) + "\n";
  for (const auto& [u, v] : t.edges()) out += name(u) + " " + name(v) + "\n";
  return out;
}

// One whitespace-separated line of degrees; '#' comments allowed.
inline std::vector<Integer> parse_degree_list(std::string_view text) {
  std::vector<Integer> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    for (auto tok : detail::split_ws(line)) {
      // commas are accepted as separators too: "3,1,1,1"
      std::string piece(tok);
      std::replace(piece.begin(), piece.end(), ',', ' ');
      std::istringstream in(piece);
      std::string part;
      while (in >> part) {
        const auto v = detail::parse_integer(part);
        if (!v) throw ParseError(line_no, "'" + part + "' is not an integer");
        out.push_back(*v);
      }
    }
  }
  if (out.empty()) throw ParseError(0, "no degrees given");
  return out;
}

}  // namespace treeirr

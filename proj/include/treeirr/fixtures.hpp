#pragma once

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "treeirr/tree.hpp"

namespace treeirr::fixtures {

// Table body rows exactly as printed: two records per line, each
// "(d1,d2,d3,d4) & irr_max & irr_min & Diff".
inline constexpr std::string_view kTable1Text =
    R"((18,12,6,4) & 454 & 438 & 16 & (18,12,6,3) & 452 & 434 & 18 \\
(18,12,5,4) & 446 & 430 & 16 & (18,12,5,3) & 444 & 426 & 18 \\
(18,9,6,4) & 394 & 384 & 10 & (18,9,6,3) & 392 & 380 & 12 \\
(18,9,5,4) & 386 & 376 & 10 & (18,9,5,3) & 384 & 372 & 12 \\
(16,12,6,4) & 388 & 372 & 16 & (16,12,6,3) & 386 & 368 & 18 \\
(16,12,5,4) & 380 & 364 & 16 & (16,12,5,3) & 378 & 360 & 18 \\
(16,9,6,4) & 328 & 318 & 10 & (16,9,6,3) & 326 & 314 & 12 \\
(16,9,5,4) & 320 & 310 & 10 & (16,9,5,3) & 318 & 306 & 12 \\
(14,12,6,4) & 330 & 314 & 16 & (14,12,6,3) & 328 & 310 & 18 \\
(14,12,5,4) & 322 & 306 & 16 & (14,12,5,3) & 320 & 302 & 18 \\
(14,9,6,4) & 270 & 260 & 10 & (14,9,6,3) & 268 & 256 & 12 \\
(14,9,5,4) & 262 & 252 & 10 & (14,9,5,3) & 260 & 248 & 12 \\
)";

// The table's own summary: overall max at (18,12,6,4), overall min at (14,9,5,3).
inline constexpr Integer kTable1StatedMax = 454;
inline constexpr Integer kTable1StatedMin = 248;

struct Table1Row {
  std::array<Integer, 4> degrees{};
  Integer irr_max = 0;
  Integer irr_min = 0;
  Integer diff = 0;

  friend bool operator==(const Table1Row&, const Table1Row&) = default;
};

// Rows in reading order: left record then right record, line by line.
inline std::vector<Table1Row> parse_table1(std::string_view text = kTable1Text) {
  std::vector<Table1Row> rows;
  std::string cleaned;
  for (char c : text) {
    if (c == '(' || c == ')' || c == ',' || c == '&' || c == '\\') {
      cleaned += ' ';
    } else {
      cleaned += c;
    }
  }
  std::istringstream lines(cleaned);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream in(line);
    std::vector<Integer> nums;
    Integer x = 0;
    while (in >> x) nums.push_back(x);
    if (nums.empty()) continue;
    if (nums.size() % 7 != 0) throw std::invalid_argument("malformed table row: " + line);
    for (std::size_t i = 0; i < nums.size(); i += 7) {
      rows.push_back({{nums[i], nums[i + 1], nums[i + 2], nums[i + 3]}, nums[i + 4], nums[i + 5], nums[i + 6]});
    }
  }
  return rows;
}

// The worked-example tree: v0 (id 0) joined to v0,1..v0,4 (ids 1..4), with two
// leaves under v0,3 (ids 5,6) and three under v0,4 (ids 7,8,9), as drawn.
inline Tree figure2_tree() {
  return Tree(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {3, 5}, {3, 6}, {4, 7}, {4, 8}, {4, 9}});
}

inline constexpr Vertex kFig2V0 = 0;
inline constexpr Vertex kFig2V01 = 1;
inline constexpr Vertex kFig2V03 = 3;
inline constexpr Vertex kFig2V04 = 4;
// Degree the accompanying text assigns to v0,4; the drawing gives 4.
inline constexpr Integer kFig2ProseDegreeV04 = 3;

inline constexpr std::array<Integer, 6> kPermBase = {4, 8, 10, 14, 18, 20};

// Orderings listed as attaining the extreme values, duplicates included.
inline const std::vector<std::vector<Integer>>& perm_listed_max_orderings() {
  static const std::vector<std::vector<Integer>> v = {
      {18, 4, 10, 14, 8, 20}, {18, 4, 10, 14, 8, 20}, {18, 4, 14, 8, 10, 20}, {18, 4, 14, 10, 8, 20},
      {18, 8, 10, 14, 4, 20}, {18, 8, 14, 4, 10, 20}, {18, 8, 14, 10, 4, 20}, {18, 10, 4, 14, 8, 20},
      {18, 10, 8, 14, 4, 20}, {20, 4, 10, 14, 8, 18}, {20, 4, 14, 8, 10, 18}, {20, 4, 14, 10, 8, 18},
      {20, 8, 10, 14, 4, 18}, {20, 8, 14, 4, 10, 18}, {20, 8, 14, 10, 4, 18}, {20, 10, 4, 14, 8, 18},
      {20, 10, 8, 14, 4, 18},
  };
  return v;
}

inline const std::vector<std::vector<Integer>>& perm_listed_min_orderings() {
  static const std::vector<std::vector<Integer>> v = {
      {4, 10, 14, 18, 20, 8}, {4, 10, 14, 18, 20, 8}, {4, 10, 14, 20, 18, 8}, {4, 10, 18, 20, 14, 8},
      {4, 10, 20, 18, 14, 8}, {4, 14, 18, 20, 10, 8}, {4, 14, 20, 18, 10, 8}, {4, 18, 20, 14, 10, 8},
      {4, 20, 18, 14, 10, 8}, {8, 10, 14, 18, 20, 4}, {8, 10, 14, 20, 18, 4}, {8, 10, 18, 20, 14, 4},
      {8, 10, 20, 18, 14, 4}, {8, 14, 18, 20, 10, 4}, {8, 14, 20, 18, 10, 4}, {8, 18, 20, 14, 10, 4},
      {8, 20, 18, 14, 10, 4},
  };
  return v;
}

}  // namespace treeirr::fixtures

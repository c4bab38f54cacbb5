#pragma once

#include <compare>
#include <cstddef>
#include <utility>

namespace equifacet {

/// Unordered vertex pair, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Number of unordered pairs on `vertices` points.
constexpr std::size_t pair_count(int vertices) {
  return vertices < 2 ? 0 : static_cast<std::size_t>(vertices) * (vertices - 1) / 2;
}

/// Colex position of the pair {i, j}: (0,1), (0,2), (1,2), (0,3), ...
/// Every pair among the first k vertices precedes any pair touching vertex k.
constexpr std::size_t edge_index(int i, int j) {
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(j) * (j - 1) / 2 + static_cast<std::size_t>(i);
}

constexpr Edge edge_at(std::size_t index) {
  int j = 1;
  while (static_cast<std::size_t>(j + 1) * j / 2 <= index) ++j;
  return Edge(static_cast<int>(index - static_cast<std::size_t>(j) * (j - 1) / 2), j);
}

}  // namespace equifacet

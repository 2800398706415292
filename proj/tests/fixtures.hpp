#pragma once

#include "tourney/tournament.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace fixtures {

using tourney::EdgeList;
using tourney::Tournament;
using tourney::VertexId;

inline Tournament three_cycle() { return tourney::from_edge_list({3, {{0, 1}, {1, 2}, {2, 0}}}); }

inline Tournament transitive_triangle() { return tourney::from_edge_list({3, {{0, 1}, {1, 2}, {0, 2}}}); }

// 0->1, 1->2, 2->0, 3->0, 1->3, 2->3
inline Tournament t4a() { return tourney::from_edge_list({4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {1, 3}, {2, 3}}}); }

// Random nonempty subset of [0, n), sorted.
inline std::vector<VertexId> random_subset(std::size_t n, std::mt19937_64& rng) {
  std::vector<VertexId> s;
  while (s.empty())
    for (VertexId v = 0; v < n; ++v)
      if (rng() & 1)
        s.push_back(v);
  return s;
}

inline bool is_valid_path(const Tournament& t, const std::vector<VertexId>& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!t.beats(p[i], p[i + 1]))
      return false;
  return true;
}

inline bool is_valid_cycle(const Tournament& t, const std::vector<VertexId>& c) {
  if (c.size() < 3)
    return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!t.beats(c[i], c[(i + 1) % c.size()]))
      return false;
  return true;
}

inline std::vector<VertexId> sorted(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace fixtures

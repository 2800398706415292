#include "tourney/hamiltonian.hpp"

#include "tourney/analysis.hpp"
#include "tourney/error.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace tourney {

namespace {

VertexSet normalized(const Tournament& t, std::span<const VertexId> subset) {
  if (subset.empty())
    throw Error(Errc::EmptySubset, "empty vertex set");
  VertexSet s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.back() >= t.order())
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(s.back()) + " not in [0, " +
                                            std::to_string(t.order()) + ")");
  return s;
}

std::optional<std::vector<VertexId>> seed_triangle(const Tournament& t, const VertexSet& s) {
  for (VertexId v : s) {
    const bool has_out = std::any_of(s.begin(), s.end(), [&](VertexId u) { return t.beats(v, u); });
    const bool has_in = std::any_of(s.begin(), s.end(), [&](VertexId u) { return t.beats(u, v); });
    if (!has_out || !has_in)
      continue;
    const VertexId u = *std::find_if(s.begin(), s.end(), [&](VertexId x) { return t.beats(v, x); });
    for (VertexId w : s)
      if (t.beats(u, w) && t.beats(w, v))
        return std::vector<VertexId>{v, u, w};
    break;
  }
  for (VertexId a : s)
    for (VertexId b : s)
      for (VertexId c : s)
        if (t.beats(a, b) && t.beats(b, c) && t.beats(c, a))
          return std::vector<VertexId>{a, b, c};
  return std::nullopt;
}

// Position i such that cycle[i] -> z -> cycle[i+1] (cyclically), if any.
std::optional<std::size_t> switch_position(const Tournament& t, const std::vector<VertexId>& cycle, VertexId z) {
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (t.beats(cycle[i], z) && t.beats(z, cycle[(i + 1) % cycle.size()]))
      return i;
  return std::nullopt;
}

} // namespace

Path hamiltonian_path(const Tournament& t, std::span<const VertexId> subset) {
  const VertexSet s = normalized(t, subset);
  std::vector<VertexId> path;
  path.reserve(s.size());
  for (VertexId v : s) {
    if (path.empty() || t.beats(v, path.front())) {
      path.insert(path.begin(), v);
      continue;
    }
    std::size_t slot = path.size();
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (t.beats(path[i], v) && t.beats(v, path[i + 1])) {
        slot = i + 1;
        break;
      }
    }
    path.insert(path.begin() + static_cast<std::ptrdiff_t>(slot), v);
  }
  return Path{std::move(path)};
}

SpanningCycle hamiltonian_cycle(const Tournament& t, std::span<const VertexId> subset) {
  const VertexSet s = normalized(t, subset);
  if (s.size() == 1)
    return Singleton{s.front()};
  if (s.size() == 2)
    throw Error(Errc::OrderTwoSubset, "a two-vertex subtournament has no cycle");
  if (condensation(t, s).blocks.size() != 1)
    throw Error(Errc::NotStrongSubset, "induced subtournament is not strong");

  auto seeded = seed_triangle(t, s);
  if (!seeded)
    throw Error(Errc::InternalContradiction, "strong subtournament without a 3-cycle");
  std::vector<VertexId> cycle = std::move(*seeded);
  std::vector<char> on_cycle(t.order(), 0);
  for (VertexId v : cycle)
    on_cycle[v] = 1;

  while (cycle.size() < s.size()) {
    bool grew = false;
    VertexSet dominating, dominated;
    for (VertexId z : s) {
      if (on_cycle[z])
        continue;
      if (auto i = switch_position(t, cycle, z)) {
        cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(*i + 1), z);
        on_cycle[z] = 1;
        grew = true;
        break;
      }
      // No switch position means z beats the whole cycle or loses to all of it.
      (t.beats(z, cycle.front()) ? dominating : dominated).push_back(z);
    }
    if (grew)
      continue;
    for (VertexId l : dominated) {
      for (VertexId w : dominating) {
        if (t.beats(l, w)) {
          cycle.push_back(l);
          cycle.push_back(w);
          on_cycle[l] = on_cycle[w] = 1;
          grew = true;
          break;
        }
      }
      if (grew)
        break;
    }
    if (!grew)
      throw Error(Errc::InternalContradiction, "cycle extension stalled in a strong subtournament");
  }
  return Cycle{std::move(cycle)};
}

Path path_ending_at(const Tournament& t, std::span<const VertexId> subset, VertexId target) {
  if (std::find(subset.begin(), subset.end(), target) == subset.end())
    throw Error(Errc::TargetNotInSubset, "vertex " + std::to_string(target) + " is not in the subset");
  const SpanningCycle spanning = hamiltonian_cycle(t, subset);
  if (const auto* single = std::get_if<Singleton>(&spanning))
    return Path{{single->vertex}};
  const auto& cycle = std::get<Cycle>(spanning).vertices;
  const auto at = std::find(cycle.begin(), cycle.end(), target);
  Path path;
  path.vertices.reserve(cycle.size());
  path.vertices.insert(path.vertices.end(), at + 1, cycle.end());
  path.vertices.insert(path.vertices.end(), cycle.begin(), at + 1);
  return path;
}

} // namespace tourney

#pragma once

#include "tourney/certificate.hpp"
#include "tourney/tournament.hpp"

#include <span>
#include <variant>

namespace tourney {

/// Stand-in for the "Hamiltonian cycle" of a one-vertex strong subtournament.
struct Singleton {
  VertexId vertex = 0;
  friend bool operator==(const Singleton&, const Singleton&) = default;
};

using SpanningCycle = std::variant<Singleton, Cycle>;

/// Hamiltonian path of the induced subtournament by insertion: vertices are
/// taken in ascending order and each goes in front if it beats the current
/// head, else into the first gap p_i -> v -> p_{i+1}, else at the end.
/// Throws EmptySubset, VertexOutOfRange.
Path hamiltonian_path(const Tournament& t, std::span<const VertexId> subset);

/// Spanning cycle of a strong induced subtournament. Starts from a 3-cycle
/// and absorbs outside vertices one at a time where a vertex has both an
/// in- and an out-neighbour on the cycle, otherwise two at a time through an
/// arc from the dominated side to the dominating side.
/// Throws EmptySubset, OrderTwoSubset, NotStrongSubset, VertexOutOfRange.
SpanningCycle hamiltonian_cycle(const Tournament& t, std::span<const VertexId> subset);

/// Hamiltonian path of a strong induced subtournament ending at `target`,
/// cut from hamiltonian_cycle. Throws TargetNotInSubset plus the above.
Path path_ending_at(const Tournament& t, std::span<const VertexId> subset, VertexId target);

} // namespace tourney

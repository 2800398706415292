#pragma once

#include "tourney/certificate.hpp"
#include "tourney/tournament.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tourney {

/// Breadth-first search from the lowest vertex a of the last Reid block back
/// to the king, neighbours in ascending order. The last two interior
/// vertices of that shortest path are the exit arc a_star -> b_star.
ExitEdge find_exit_edge(const Tournament& t, const KingContext& ctx, const ReidPartition& reid);

/// Hamiltonian path through A ending at a_star: an insertion path over all
/// blocks but the last, followed by a path through the last block cut from
/// its spanning cycle just after a_star.
Path spine_path(const Tournament& t, const KingContext& ctx, const ReidPartition& reid, const ExitEdge& exit);

struct LadderStep {
  Cycle cycle;
  /// Links this cycle to the next ladder cycle; absent on the last rung.
  std::optional<InsertionRecord> to_next;
};

/// Cycles (k, a_{d-i+1}, ..., a_d, b_star) for i = 1..d, lengths 3..d+2.
/// Each rung is the previous one with the next spine vertex put after k.
std::vector<LadderStep> build_ladder(const KingContext& ctx, const Path& spine, const ExitEdge& exit);

/// Splices the lowest-index vertex z outside `c` into the first arc (x, y)
/// of `c`, scanning from the king, with x -> z -> y. Requires c to start at
/// the king and to contain A. Throws CycleAlreadySpanning, and
/// InternalContradiction if no slot exists.
std::pair<Cycle, InsertionRecord> extend_cycle(const Tournament& t, const KingContext& ctx, const Cycle& c);

/// The full construction: cycles C_3..C_n through king k, each obtained
/// from the previous by one insertion, k a king of every induced
/// subtournament. Throws VertexOutOfRange, OrderTooSmall, NotStrong, NotAKing.
CycleChain build_chain(const Tournament& t, VertexId k);

} // namespace tourney

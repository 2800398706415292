#pragma once

#include "tourney/certificate.hpp"
#include "tourney/tournament.hpp"

#include <span>

namespace tourney {

/// True iff every vertex reaches every other. Order 1 is strong, order 2 never is.
bool is_strong(const Tournament& t);

/// Strong components of the subtournament induced by `subset`, each block
/// sorted ascending, blocks ordered so block i beats block j for i < j.
/// The condensation of a tournament is itself transitive, so this order is
/// unique. Throws EmptySubset, VertexOutOfRange.
ReidPartition condensation(const Tournament& t, std::span<const VertexId> subset);

/// True iff every other vertex is at distance 1 or 2 from v.
bool is_king(const Tournament& t, VertexId v);

/// All kings, ascending. Never empty for n >= 1.
VertexSet kings(const Tournament& t);

/// Out- and in-neighbourhood of king k. Requires n >= 3, t strong and k a
/// king; throws OrderTooSmall, NotStrong, NotAKing, VertexOutOfRange.
KingContext king_context(const Tournament& t, VertexId k);

} // namespace tourney

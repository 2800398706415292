#pragma once

#include "tourney/tournament.hpp"

#include <string>
#include <vector>

#include <json.hpp>

namespace tourney {

/// Distinct vertices, each beating the next.
struct Path {
  std::vector<VertexId> vertices;
  friend bool operator==(const Path&, const Path&) = default;
};

/// Distinct vertices, each beating the next and the last beating the first.
/// Always at least 3 long: tournaments have no 2-cycles.
struct Cycle {
  std::vector<VertexId> vertices;
  std::size_t size() const noexcept { return vertices.size(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// A king k together with its out-set A and in-set B, both sorted.
struct KingContext {
  VertexId king = 0;
  VertexSet out_set; // A
  VertexSet in_set;  // B
  std::size_t out_degree() const noexcept { return out_set.size(); }
  friend bool operator==(const KingContext&, const KingContext&) = default;
};

/// Strong components of an induced subtournament, ordered so that every
/// arc between two blocks goes from the lower-indexed block to the higher.
struct ReidPartition {
  std::vector<VertexSet> blocks;
  friend bool operator==(const ReidPartition&, const ReidPartition&) = default;
};

/// a_star is in the last Reid block of A, b_star in B, with a_star -> b_star -> king.
struct ExitEdge {
  VertexId a_star = 0;
  VertexId b_star = 0;
  friend bool operator==(const ExitEdge&, const ExitEdge&) = default;
};

/// The arc (x, y) of one cycle replaced by x -> z -> y in the next.
struct InsertionRecord {
  VertexId x = 0;
  VertexId y = 0;
  VertexId z = 0;
  friend bool operator==(const InsertionRecord&, const InsertionRecord&) = default;
};

/// Cycles C_3, ..., C_n, each rotated to start at the king, with
/// insertions[i] linking cycles[i] to cycles[i + 1].
struct CycleChain {
  VertexId king = 0;
  KingContext context;
  ReidPartition reid;
  ExitEdge exit;
  Path spine;
  std::vector<Cycle> cycles;
  std::vector<InsertionRecord> insertions;
  friend bool operator==(const CycleChain&, const CycleChain&) = default;
};

/// A chain together with the tournament it was built on; the unit that is
/// written to disk and handed to the verifier.
struct Certificate {
  Tournament tournament;
  CycleChain chain;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

nlohmann::json to_json(const Certificate& cert);

/// Throws MalformedCertificate when a field is missing or has the wrong shape.
/// Only structure is checked here; graph properties are the verifier's job.
Certificate certificate_from_json(const nlohmann::json& j);

/// Pretty-printed JSON, LF-terminated.
std::string certificate_to_string(const Certificate& cert);
Certificate certificate_from_string(const std::string& text);

} // namespace tourney

#pragma once

#include "tourney/certificate.hpp"
#include "tourney/tournament.hpp"

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace tourney::oracle {

/// A (tournament, king) pair on which construction or verification failed.
struct Counterexample {
  std::uint64_t index = 0; // enumeration index, or trial number under stress
  Tournament tournament;
  VertexId king = 0;
  std::string reason;
  std::optional<CycleChain> partial; // present when build_chain returned
};

struct ExhaustiveSummary {
  std::size_t n = 0;
  std::uint64_t tournaments = 0;
  std::uint64_t strong = 0;
  std::uint64_t king_pairs = 0;
  std::uint64_t failures = 0;
  std::optional<Counterexample> counterexample;

  friend bool operator==(const ExhaustiveSummary& a, const ExhaustiveSummary& b) {
    return a.n == b.n && a.tournaments == b.tournaments && a.strong == b.strong && a.king_pairs == b.king_pairs &&
           a.failures == b.failures;
  }
};

/// Runs build_chain and verify_chain for every king of every strong
/// labeled tournament of order n, split over `jobs` threads by disjoint
/// enumeration ranges. Each thread stops at its first failure and the
/// reported counterexample is the one with the lowest enumeration index.
/// Counts are identical for every job count when nothing fails.
/// Throws OrderOutOfRange unless 3 <= n <= 7.
ExhaustiveSummary exhaustive_check(std::size_t n, std::size_t jobs = 1);

struct StressSummary {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t king_pairs = 0;
  std::uint64_t failures = 0;
  std::optional<Counterexample> counterexample;
  // build_chain wall time per (tournament, king), microseconds
  double p50_us = 0, p90_us = 0, p99_us = 0, max_us = 0;
};

/// `trials` random strong tournaments (trial i uses seed + i * 1000003 as
/// its generator seed), every king of each. Throws OrderOutOfRange for n < 3.
StressSummary random_stress(std::size_t n, std::size_t trials, std::uint64_t seed);

/// Line-oriented key=value text, LF-terminated.
std::string to_text(const ExhaustiveSummary& s);
std::string to_text(const StressSummary& s);
nlohmann::json to_json(const ExhaustiveSummary& s);
nlohmann::json to_json(const StressSummary& s);

/// Certificate JSON for a counterexample; carries the partial chain when
/// there is one, otherwise only the tournament, king and reason.
nlohmann::json counterexample_json(const Counterexample& c);

} // namespace tourney::oracle

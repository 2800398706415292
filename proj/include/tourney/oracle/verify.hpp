#pragma once

// Brute-force checks written straight from the definitions. This target
// links against the core types only; nothing here may call the analysis,
// hamiltonian or chain code it is used to check.

#include "tourney/certificate.hpp"
#include "tourney/tournament.hpp"

#include <span>
#include <string>
#include <vector>

namespace tourney::oracle {

/// For every v in subset other than k: k -> v, or k -> w -> v for some w
/// in subset. Throws KingNotInSubset.
bool brute_is_king_of_induced(const Tournament& t, VertexId k, std::span<const VertexId> subset);

/// {v : brute_is_king_of_induced(t, v, V)}.
VertexSet brute_kings(const Tournament& t);

/// Transitive closure by repeated relaxation; true iff it is complete.
bool brute_is_strong(const Tournament& t);

struct CycleCheck {
  std::size_t expected_length = 0;
  bool is_cycle = false;        // (a) every consecutive arc, wrap included, is in t
  bool correct_length = false;  // (b) exactly expected_length distinct vertices
  bool contains_king = false;   // (c)
  bool king_of_induced = false; // (d)
  bool passed() const noexcept { return is_cycle && correct_length && contains_king && king_of_induced; }
};

struct StepCheck {
  bool valid_insertion = false; // (e)
};

struct VerificationReport {
  std::vector<CycleCheck> cycles; // cycles[j] is C_{j+3}
  std::vector<StepCheck> steps;   // steps[j] links C_{j+3} to C_{j+4}
  bool passed = false;
  std::string first_failure;
};

/// Checks every clause of the chain property against t. Throws
/// MalformedCertificate when the chain's shape does not fit t (king or a
/// vertex out of range, wrong number of cycles or insertion records).
VerificationReport verify_chain(const Tournament& t, const CycleChain& chain);

/// Human-readable per-check listing, one line per cycle and per step.
std::string format_report(const VerificationReport& report);

} // namespace tourney::oracle

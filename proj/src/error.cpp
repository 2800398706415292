#include "tourney/error.hpp"

namespace tourney {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
  case Errc::DuplicatePair: return "DuplicatePair";
  case Errc::MissingPair: return "MissingPair";
  case Errc::SelfLoop: return "SelfLoop";
  case Errc::VertexOutOfRange: return "VertexOutOfRange";
  case Errc::OrderTwoImpossible: return "OrderTwoImpossible";
  case Errc::ExhaustedTries: return "ExhaustedTries";
  case Errc::OrderTooLarge: return "OrderTooLarge";
  case Errc::OrderTooSmall: return "OrderTooSmall";
  case Errc::OrderOutOfRange: return "OrderOutOfRange";
  case Errc::EmptySubset: return "EmptySubset";
  case Errc::NotAKing: return "NotAKing";
  case Errc::NotStrong: return "NotStrong";
  case Errc::NotStrongSubset: return "NotStrongSubset";
  case Errc::OrderTwoSubset: return "OrderTwoSubset";
  case Errc::TargetNotInSubset: return "TargetNotInSubset";
  case Errc::CycleAlreadySpanning: return "CycleAlreadySpanning";
  case Errc::InternalContradiction: return "InternalContradiction";
  case Errc::KingNotInSubset: return "KingNotInSubset";
  case Errc::MalformedCertificate: return "MalformedCertificate";
  case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

} // namespace tourney

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tourney {

enum class Errc {
  DuplicatePair,
  MissingPair,
  SelfLoop,
  VertexOutOfRange,
  OrderTwoImpossible,
  ExhaustedTries,
  OrderTooLarge,
  OrderTooSmall,
  OrderOutOfRange,
  EmptySubset,
  NotAKing,
  NotStrong,
  NotStrongSubset,
  OrderTwoSubset,
  TargetNotInSubset,
  CycleAlreadySpanning,
  InternalContradiction,
  KingNotInSubset,
  MalformedCertificate,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so CLI users can grep for it.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace tourney

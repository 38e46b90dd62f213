#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyhedra {

enum class Errc {
  AsymmetricAdjacency,
  DuplicateNeighbor,
  SelfLoop,
  VertexOutOfRange,
  IsolatedVertex,
  NotGenusZero,
  NotTwoConnected,
  NotThreeConnected,
  DegreeTooLow,
  PreconditionNotTwoConnected,
  PreconditionFailed,
  NoObstructionFound,
  ClassificationFailed,
  InfeasibleSequence,
  BoundExceeded,
  BoundTooLarge,
  Undecided,
  BadHeader,
  TruncatedRecord,
};

std::string_view errc_name(Errc code);

/// Library-wide exception; `code()` identifies the failed contract.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace polyhedra

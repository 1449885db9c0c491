#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tilegrow {

enum class ErrorKind {
  DegenerateHull,
  Unbounded,
  Empty,
  LowerDimensional,
  EmptySet,
  OverlappingTiles,
  GuardBandExceeded,
  EmptySeed,
  IndexOutOfRange,
  InvalidSpec,
  NoEquivalentsFound,
  OnGridHyperplane,
  IrregularGrid,
  ParallelGridVectors,
  DegenerateTriple,
  NumericallySingular,
  TooManyGridVectors,
  InvalidRules,
  InsufficientSamples,
  InvalidB,
  MethodMismatch,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries its kind; what() starts with the kind name.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when a BFS would expand a tile whose neighbourhood is not fully present in the patch.
// max_safe_shell is the largest shell index that was still computed correctly.
class GuardBandExceeded : public Error {
 public:
  GuardBandExceeded(int max_safe_shell, const std::string& detail)
      : Error(ErrorKind::GuardBandExceeded, detail), max_safe_shell_(max_safe_shell) {}

  int max_safe_shell() const noexcept { return max_safe_shell_; }

 private:
  int max_safe_shell_;
};

}  // namespace tilegrow

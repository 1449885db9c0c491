#include "tilegrow/error.hpp"

namespace tilegrow {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateHull: return "DegenerateHull";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::LowerDimensional: return "LowerDimensional";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::OverlappingTiles: return "OverlappingTiles";
    case ErrorKind::GuardBandExceeded: return "GuardBandExceeded";
    case ErrorKind::EmptySeed: return "EmptySeed";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NoEquivalentsFound: return "NoEquivalentsFound";
    case ErrorKind::OnGridHyperplane: return "OnGridHyperplane";
    case ErrorKind::IrregularGrid: return "IrregularGrid";
    case ErrorKind::ParallelGridVectors: return "ParallelGridVectors";
    case ErrorKind::DegenerateTriple: return "DegenerateTriple";
    case ErrorKind::NumericallySingular: return "NumericallySingular";
    case ErrorKind::TooManyGridVectors: return "TooManyGridVectors";
    case ErrorKind::InvalidRules: return "InvalidRules";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::InvalidB: return "InvalidB";
    case ErrorKind::MethodMismatch: return "MethodMismatch";
  }
  return "Unknown";
}

}  // namespace tilegrow

#include "quatsamp/errors.hpp"

namespace quatsamp {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::zero_division:
      return "ZeroDivision";
    case errc::dimension_mismatch:
      return "DimensionMismatch";
    case errc::degenerate_input:
      return "DegenerateInput";
    case errc::parse_error:
      return "ParseError";
    case errc::not_normal:
      return "NotNormal";
    case errc::not_symmetric:
      return "NotSymmetric";
    case errc::not_tridiagonal_symmetric:
      return "NotTridiagonalSymmetric";
    case errc::zero_off_diagonal:
      return "ZeroOffDiagonal";
    case errc::dependent_input:
      return "DependentInput";
    case errc::root_solver_failure:
      return "RootSolverFailure";
    case errc::eigen_solver_failure:
      return "EigenSolverFailure";
    case errc::orbit_selection_failure:
      return "OrbitSelectionFailure";
    case errc::not_spherical:
      return "NotSpherical";
    case errc::bad_input:
      return "BadInput";
    case errc::spectrum_mismatch:
      return "SpectrumMismatch";
    case errc::first_entry_zero:
      return "FirstEntryZero";
    case errc::recovery_failure:
      return "RecoveryFailure";
  }
  return "UnknownError";
}

}  // namespace quatsamp

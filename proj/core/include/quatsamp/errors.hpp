#pragma once

#include <stdexcept>
#include <string>

namespace quatsamp {

// Error codes surfaced by the library.  The "internal" ones flag violated
// invariants that theory guarantees cannot happen on valid inputs; the CLI
// maps them to a distinct exit code.
enum class errc {
  zero_division,
  dimension_mismatch,
  degenerate_input,
  parse_error,
  not_normal,
  not_symmetric,
  not_tridiagonal_symmetric,
  zero_off_diagonal,
  dependent_input,
  root_solver_failure,
  eigen_solver_failure,
  orbit_selection_failure,
  not_spherical,
  bad_input,
  // internal assertion failures
  spectrum_mismatch,
  first_entry_zero,
  recovery_failure,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  errc code() const noexcept { return code_; }

  bool internal() const noexcept {
    return code_ == errc::spectrum_mismatch ||
           code_ == errc::first_entry_zero || code_ == errc::recovery_failure;
  }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace quatsamp

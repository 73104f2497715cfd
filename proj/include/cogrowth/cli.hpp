#pragma once

#include <iosfwd>

#include "cogrowth/error.hpp"

namespace cogrowth {

  namespace exit_status {
    inline constexpr int ok        = 0;
    inline constexpr int violation = 1;
    inline constexpr int usage     = 2;
    inline constexpr int data      = 3;
    inline constexpr int budget    = 4;
  }  // namespace exit_status

  int exit_code(ErrorCode code) noexcept;

  //! The cogrowth command line: generate, factors, obstructions, cogrowth,
  //! rauzy, verify. Results go to --out or \p out, diagnostics to \p err.
  //! Returns the process exit status.
  int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cogrowth

#pragma once

#include <cstddef>

namespace cogrowth {

  //! Selects between the OpenMP kernel and its serial reference. Both paths
  //! must produce identical results; the serial one exists for tests and
  //! benchmarks.
  enum class Execution { serial, parallel };

  //! Number of OpenMP threads that a parallel kernel would use.
  std::size_t available_threads() noexcept;

}  // namespace cogrowth
